import random

import pytest

from lawvere.core.exceptions import InputError
from lawvere.formal import lemma, sentences
from lawvere.formal.numbering import goedel_number
from lawvere.formal.syntax import (
    P,
    PROV,
    R,
    TRUE,
    X,
    Y,
    Z,
    And,
    DiagT,
    Exists,
    ForAll,
    Iff,
    Imp,
    Less,
    NegT,
    Not,
    Num,
    Or,
    PredF,
    UnquoteF,
    VarT,
)
from lawvere.formal.text import formula_text, parse_formula


def random_term(rng, scope, depth):
    if depth > 0 and rng.random() < 0.2:
        return NegT(random_term(rng, scope, depth - 1))
    if rng.random() < 0.3:
        return Num(rng.randrange(20))
    return VarT(rng.choice(scope))


def random_formula(rng, scope, depth):
    """Formulas whose free variables come from scope, without diag terms"""
    if depth == 0 or rng.random() < 0.25:
        kind = rng.randrange(4)
        if kind == 0:
            return PredF(P, (random_term(rng, scope, 2),))
        if kind == 1:
            return PredF(R, (random_term(rng, scope, 2), random_term(rng, scope, 2)))
        if kind == 2:
            return Less(random_term(rng, scope, 2), random_term(rng, scope, 2))
        return UnquoteF(random_term(rng, scope, 2))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_formula(rng, scope, depth - 1))
    if kind == 1:
        cls = rng.choice([And, Or, Imp, Iff])
        return cls(random_formula(rng, scope, depth - 1), random_formula(rng, scope, depth - 1))
    var = rng.choice([Y, Z])
    cls = rng.choice([ForAll, Exists])
    return cls(var, random_formula(rng, scope + [var], depth - 1))


def random_e(rng):
    e = random_formula(rng, [X], 3)
    if X not in lemma.free_variables(e):
        e = And(e, PredF(P, (VarT(X),)))
    return e


class TestSubstitution:

    def test_free_occurrences(self):
        e = PredF(R, (VarT(X), VarT(Y)))
        assert lemma.substitute(e, X, Num(3)) == PredF(R, (Num(3), VarT(Y)))

    def test_bound_occurrences_untouched(self):
        e = And(ForAll(X, PredF(P, (VarT(X),))), PredF(P, (VarT(X),)))
        assert lemma.substitute(e, X, Num(3)) == And(ForAll(X, PredF(P, (VarT(X),))), PredF(P, (Num(3),)))

    def test_inside_function_symbols(self):
        e = PredF(P, (NegT(DiagT(VarT(X))),))
        assert lemma.substitute(e, X, Num(1)) == PredF(P, (NegT(DiagT(Num(1))),))

    def test_open_term_rejected(self):
        with pytest.raises(InputError) as e:
            lemma.substitute(PredF(P, (VarT(X),)), X, VarT(Y))
        assert e.value.field == "term"

    def test_free_variables(self):
        e = Exists(Y, PredF(R, (VarT(Y), VarT(Z))))
        assert lemma.free_variables(e) == {Z}


class TestDiag:

    def test_diag_meta(self):
        cert = sentences.named_sentence("tarski")
        assert cert.goedel_g == 2502
        assert lemma.diag_meta(2502) == cert.goedel_c

    def test_diag_meta_needs_one_free_variable(self):
        with pytest.raises(InputError) as e:
            lemma.diag_meta(goedel_number(PredF(R, (VarT(X), VarT(Y)))))
        assert e.value.field == "diag"

    def test_reduce_leaves_open_terms(self):
        f = PredF(P, (DiagT(VarT(X)),))
        assert lemma.reduce_diag(f) == f

    def test_reduce_neg(self):
        b = PredF(P, (Num(0),))
        f = PredF(P, (NegT(Num(goedel_number(b))),))
        assert lemma.reduce_diag(f) == PredF(P, (Num(goedel_number(Not(b))),))

    def test_reduce_is_idempotent(self):
        for kind in ("goedel", "rosser", "tarski"):
            cert = sentences.named_sentence(kind)
            assert lemma.reduce_diag(cert.reduced) == cert.reduced


class TestDiagonalSentence:

    def test_tarski(self):
        cert = sentences.named_sentence("tarski")
        assert formula_text(cert.g) == "(not (T (diag x)))"
        assert formula_text(cert.c) == "(not (T (diag 2502)))"
        assert formula_text(cert.reduced) == "(not (T 32123378334834788202))"
        assert cert.verified
        assert cert.recheck()

    def test_goedel(self):
        cert = sentences.named_sentence("goedel")
        assert cert.goedel_g == 40684259087
        assert cert.reduced == ForAll(Y, Not(PredF(PROV, (VarT(Y), Num(cert.goedel_c)))))

    def test_rosser_negation_reduces_on_both_sides(self):
        cert = sentences.named_sentence("rosser")
        neg_c = goedel_number(Not(cert.c))
        assert f" {neg_c})" in formula_text(cert.reduced)
        assert cert.verified

    @pytest.mark.parametrize("kind,args", [
        ("goedel", ()),
        ("rosser", ()),
        ("tarski", ()),
        ("parikh", (1,)),
        ("parikh", (100,)),
        ("curry", (PredF(P, (Num(0),)),)),
        ("curry", (Not(Exists(Y, PredF(TRUE, (VarT(Y),)))),)),
    ])
    def test_named(self, kind, args):
        cert = sentences.named_sentence(kind, *args)
        assert cert.verified
        assert cert.recheck()
        assert lemma.free_variables(cert.c) == frozenset()

    def test_random_formulas(self):
        rng = random.Random(10)
        for __ in range(100):
            e = random_e(rng)
            cert = lemma.diagonal_sentence(e, X)
            assert cert.reduced == cert.target, formula_text(e)
            target = lemma.reduce_diag(lemma.substitute(e, X, Num(cert.goedel_c)))
            assert cert.reduced == target

    def test_two_free_variables(self):
        with pytest.raises(InputError) as e:
            lemma.diagonal_sentence(PredF(R, (VarT(X), VarT(Y))), X)
        assert e.value.field == "E"

    def test_wrong_variable(self):
        with pytest.raises(InputError):
            lemma.diagonal_sentence(PredF(P, (VarT(Y),)), X)

    def test_existing_diag_redex(self):
        with pytest.raises(InputError) as e:
            lemma.diagonal_sentence(And(PredF(P, (VarT(X),)), PredF(P, (DiagT(Num(70)),))), X)
        assert e.value.field == "E"

    def test_to_dict(self):
        cert = sentences.named_sentence("tarski")
        assert list(cert.to_dict()) == ["E", "variable", "G", "C", "reduced", "target", "verified"]
        doc = cert.to_dict(numbers=True)
        assert doc["goedel_G"] == "2502"
        assert doc["goedel_C"] == str(cert.goedel_c)


class TestSentences:

    def test_unknown(self):
        with pytest.raises(InputError) as e:
            sentences.named_sentence("loeb")
        assert e.value.field == "kind"

    @pytest.mark.parametrize("n", [0, -2, True, 1.5])
    def test_bad_parikh_bound(self, n):
        with pytest.raises(InputError) as e:
            sentences.parikh_formula(n)
        assert e.value.field == "n"

    def test_open_curry_consequent(self):
        with pytest.raises(InputError) as e:
            sentences.curry_formula(PredF(P, (VarT(Y),)))
        assert e.value.field == "a"

    def test_curry_unfolds_to_implication(self):
        a = parse_formula("(P 0)")
        cert = sentences.named_sentence("curry", a)
        assert sentences.curry_unfolding(cert) == Imp(cert.c, a)

    def test_curry_unfolding_keeps_quoted_consequent(self):
        a = UnquoteF(Num(70))
        cert = sentences.named_sentence("curry", a)
        assert sentences.curry_unfolding(cert) == Imp(cert.c, a)

    def test_unquote_step_is_single(self):
        inner = UnquoteF(Num(goedel_number(UnquoteF(Num(70)))))
        assert lemma.unquote_step(inner) == UnquoteF(Num(70))

    def test_unquote_step_leaves_open_terms(self):
        f = UnquoteF(VarT(X))
        assert lemma.unquote_step(f) == f
