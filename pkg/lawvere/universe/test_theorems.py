import random

import pytest

from lawvere.core.exceptions import InputError
from lawvere.universe import theorems
from lawvere.universe.codec import decode, encode
from lawvere.universe.interpreter import Diverged, Value, evaluate
from lawvere.universe.specialize import smn_meta
from lawvere.universe.syntax import Const, Fst, IfZero, PairE, Pred, Run, Smn, Snd, Succ, Var, fold
from lawvere.universe.test_specialize import random_body
from lawvere.universe.theorems import IDENTITY, OMEGA, QUINE_TRANSFORMER, Verdict


def succ_chain(n, length):
    body = Const(n)
    for __ in range(length):
        body = Succ(body)
    return body


def random_transformer(rng, depth):
    """Unary bodies that halt on every input: no Run, and Smn only on a constant body"""
    if depth == 0 or rng.random() < 0.25:
        return rng.choice([Var(1), Var(1), Const(rng.randrange(10))])
    kind = rng.choice([Succ, Pred, Fst, Snd, PairE, IfZero, Smn])
    if kind is Smn:
        return Smn(Const(encode(random_body(rng, 3))), random_transformer(rng, depth - 1))
    if kind is PairE:
        return PairE(random_transformer(rng, depth - 1), random_transformer(rng, depth - 1))
    if kind is IfZero:
        return IfZero(*(random_transformer(rng, depth - 1) for __ in range(3)))
    return kind(random_transformer(rng, depth - 1))


def reads_input(body):
    return fold(body, lambda node, kids: node == Var(1) or any(kids))


@pytest.fixture(scope="module")
def q():
    return theorems.quine()


def test_named_indices():
    assert (IDENTITY, OMEGA, QUINE_TRANSFORMER) == (10, 2208, 62269)


class TestRecursionTheorem:

    def test_kleene_parts(self):
        d, t = theorems.kleene_parts(711)
        assert decode(d) == Run(Run(Const(711), Run(Var(1), Var(1))), Var(2))
        assert decode(t) == Smn(Const(d), Var(1))
        assert theorems.recursion_fixed_point(711) == smn_meta(d, t)

    def test_n0_reproduces_itself_through_t(self):
        d, t = theorems.kleene_parts(711)
        assert evaluate(t, [t], 100) == Value(theorems.recursion_fixed_point(711))

    def test_constant_transformer(self):
        n0 = theorems.recursion_fixed_point(711)
        check = theorems.check_fixed_point(711, n0, inputs=range(6), fuel=10**5)
        assert check.h_of_n0 == Value(71)
        assert [s.left for s in check.samples] == [Value(7)] * 6
        assert check.verified

    def test_identity_transformer(self):
        n0 = theorems.recursion_fixed_point(IDENTITY)
        check = theorems.check_fixed_point(IDENTITY, n0, inputs=range(2), fuel=10**4, retry_fuel=2 * 10**4)
        assert check.h_of_n0 == Value(n0)
        assert [s.left for s in check.samples] == [Diverged(2 * 10**4)] * 2
        assert check.verified

    def test_generated_transformers(self):
        rng = random.Random(7)
        transformers = [encode(Succ(Var(1)))]
        while len(transformers) < 25:
            body = random_transformer(rng, 3)
            if not reads_input(body):
                continue
            h = encode(body)
            m = evaluate(h, [theorems.recursion_fixed_point(h)], 1000)
            # keep samples cheap: phi_h(n0) must halt on 0
            if evaluate(m.n, [0], 10**4).is_value:
                transformers.append(h)
        for h in transformers:
            n0 = theorems.recursion_fixed_point(h)
            check = theorems.check_fixed_point(h, n0, inputs=range(6), fuel=10**4, retry_fuel=10**5)
            assert check.verified, decode(h)

    def test_to_dict(self):
        check = theorems.check_fixed_point(711, theorems.recursion_fixed_point(711), inputs=[0], fuel=1000)
        doc = check.to_dict()
        assert list(doc) == ["h", "n0", "h_of_n0", "samples", "verified"]
        assert doc["h"] == "711"

    def test_bad_transformer(self):
        with pytest.raises(InputError):
            theorems.recursion_fixed_point(-3)


class TestCompare:

    def test_both_diverging_agree(self):
        loop = encode(Run(Const(OMEGA), Const(OMEGA)))
        sample, = theorems.compare_programs(loop, OMEGA, [OMEGA], fuel=50, retry_fuel=50)
        assert sample.agreed

    def test_both_diverging_retried(self):
        loop = encode(Run(Const(OMEGA), Const(OMEGA)))
        sample, = theorems.compare_programs(loop, OMEGA, [OMEGA], fuel=50, retry_fuel=500)
        assert sample.fuel == 500
        assert sample.left == Diverged(500)
        assert sample.agreed

    def test_early_divergence_is_not_agreement(self):
        slow_0, slow_1 = encode(succ_chain(0, 100)), encode(succ_chain(1, 100))
        sample, = theorems.compare_programs(slow_0, slow_1, [0], fuel=50, retry_fuel=500)
        assert (sample.left, sample.right, sample.fuel) == (Value(100), Value(101), 500)
        assert not sample.agreed

    def test_retry_when_one_side_halts(self):
        slow = encode(succ_chain(0, 100))
        sample, = theorems.compare_programs(slow, encode(Const(100)), [0], fuel=50, retry_fuel=500)
        assert sample.fuel == 500
        assert sample.agreed

    def test_disagreement(self):
        sample, = theorems.compare_programs(IDENTITY, encode(Const(3)), [4], fuel=10)
        assert not sample.agreed


class TestQuine:

    @pytest.mark.parametrize("i", [0, 1, 2])
    def test_outputs_itself(self, q, i):
        assert evaluate(q, [i], 10**6) == Value(q)

    def test_fuel_needed(self, q):
        assert evaluate(q, [0], 14) == Value(q)
        assert evaluate(q, [0], 13) == Diverged(13)

    def test_check(self, q):
        check = theorems.check_quine(q, [0, 1, 2])
        assert check.verified
        assert check.to_dict()["index"] == str(q)

    def test_non_quine_fails_check(self):
        assert not theorems.check_quine(IDENTITY, [0, 1], fuel=10).verified


class TestHalting:

    @pytest.mark.parametrize("candidate,verdict", [
        (encode(Const(1)), Verdict.SAID_HALT_BUT_DIVERGED),
        (encode(Const(0)), Verdict.SAID_DIVERGE_BUT_HALTED),
        (OMEGA, Verdict.CANDIDATE_NOT_TOTAL),
    ])
    def test_canned_candidates(self, candidate, verdict):
        witness = theorems.refute_halting(candidate, 10_000)
        assert witness.verdict is verdict
        assert witness.verified

    @pytest.mark.parametrize("fuel", [1, 5, 50])
    def test_verdict_consistent_at_small_fuel(self, fuel):
        witness = theorems.refute_halting(encode(Const(0)), fuel)
        assert witness.g_run == Value(1)
        assert witness.fuel == fuel + theorems.HALT_WRAPPER_OVERHEAD

    def test_any_nonzero_answer_means_halts(self):
        witness = theorems.refute_halting(encode(Const(5)), 100)
        assert witness.verdict is Verdict.SAID_HALT_BUT_DIVERGED
        assert isinstance(witness.g_run, Diverged)

    def test_to_dict(self):
        doc = theorems.refute_halting(encode(Const(1)), 100).to_dict()
        assert doc["verdict"] is Verdict.SAID_HALT_BUT_DIVERGED
        assert doc["fuel"] == 107
        assert doc["candidate"] == "11"


class TestRice:

    def test_decider_claiming_membership(self):
        report = theorems.rice_contradiction(encode(Const(1)), IDENTITY, encode(Const(0)))
        assert report.claims_member
        assert report.h_of_n0 == Value(encode(Const(0)))
        assert report.verified

    def test_decider_denying_membership(self):
        report = theorems.rice_contradiction(encode(Const(0)), IDENTITY, encode(Const(0)))
        assert not report.claims_member
        assert report.h_of_n0 == Value(IDENTITY)
        assert report.verified

    def test_partial_decider(self):
        report = theorems.rice_contradiction(OMEGA, IDENTITY, encode(Const(0)), fuel=1000)
        assert not report.decider_total
        assert report.check is None
        assert report.verified
        assert "check" not in report.to_dict()


class TestBoundedHalting:

    def test_first_programs(self):
        m = theorems.bounded_halting_matrix(4, 100)
        assert m.labels == ("0", "1", "2", "3")
        assert m.rel == ((0, 1, 0, 0),) * 4

    def test_explicit_indices(self):
        m = theorems.bounded_halting_matrix(6, 200, [1, 10, 20, 21, 102, 2208])
        assert m.rel[2] == (1, 1, 0, 1, 1, 0)
        assert [m.rel[i][i] for i in range(6)] == [1, 1, 0, 1, 1, 0]

    @pytest.mark.parametrize("n,indices", [(0, None), (3, [1, 2])])
    def test_bad_sizes(self, n, indices):
        with pytest.raises(InputError) as e:
            theorems.bounded_halting_matrix(n, 10, indices)
        assert e.value.field == "n"

    def test_halting_set(self):
        assert theorems.halting_set(IDENTITY, range(5), 10) == frozenset(range(5))
        assert theorems.halting_set(OMEGA, range(5), 100) == frozenset({1})
