"""Recursion theorem, quines, halting and Rice, built from Run and Smn.

Partial functions are only ever compared by bounded sampling: two programs
agree on an input when both return the same Value, or when neither returns
a Value.  Any sample other than two equal Values is retried with more fuel
before it is recorded, so agreement by divergence holds at the larger budget.
"""
from dataclasses import dataclass
import enum
from typing import Optional, Tuple

from lawvere.core.exceptions import InputError
from lawvere.core.numerals import check_natural
from lawvere.instances.matrices import DescribesMatrix
from lawvere.logs import get_logger
from lawvere.settings import Settings
from lawvere.universe.codec import encode
from lawvere.universe.interpreter import Diverged, Value, evaluate
from lawvere.universe.specialize import smn_meta
from lawvere.universe.syntax import Const, IfZero, Run, Smn, Var

logger = get_logger("lawvere")
settings = Settings()

IDENTITY = encode(Var(1))  # 10; as a binary body, f(y, x) = y
OMEGA = encode(Run(Var(1), Var(1)))  # 2208; diverges on its own index
QUINE_TRANSFORMER = encode(Smn(Const(IDENTITY), Var(1)))  # 62269; y -> index of Const(y)

# nodes of the halting wrapper visited outside the candidate's own run
HALT_WRAPPER_OVERHEAD = 7


@dataclass(frozen=True)
class Sample:
    input: int
    left: object
    right: object
    fuel: int

    @property
    def agreed(self):
        if self.left.is_value or self.right.is_value:
            return self.left == self.right
        return True

    def to_dict(self):
        return {"input": self.input, "fuel": self.fuel, "left": self.left, "right": self.right, "agreed": self.agreed}


def compare_programs(p, q, inputs, fuel, retry_fuel=None):
    """Sample phi_p and phi_q on each input"""
    retry_fuel = settings.RETRY_FUEL if retry_fuel is None else retry_fuel
    samples = []
    for i in inputs:
        left, right, used = evaluate(p, [i], fuel), evaluate(q, [i], fuel), fuel
        settled = left.is_value and left == right
        if not settled and retry_fuel > fuel:
            left, right, used = evaluate(p, [i], retry_fuel), evaluate(q, [i], retry_fuel), retry_fuel
        samples.append(Sample(i, left, right, used))
    return tuple(samples)


@dataclass(frozen=True)
class FixedPointCheck:
    """phi_{n0} against phi_{h(n0)} on a few inputs"""

    h: int
    n0: int
    h_of_n0: object
    samples: Tuple[Sample, ...]

    @property
    def verified(self):
        return self.h_of_n0.is_value and all(s.agreed for s in self.samples)

    def to_dict(self):
        return {
            "h": str(self.h),
            "n0": str(self.n0),
            "h_of_n0": self.h_of_n0,
            "samples": list(self.samples),
            "verified": self.verified,
        }


def kleene_parts(h):
    """The construction's intermediate indices (d, t) for transformer h"""
    d_body = Run(Run(Const(h), Run(Var(1), Var(1))), Var(2))
    d = encode(d_body)
    t = encode(Smn(Const(d), Var(1)))
    return d, t


def recursion_fixed_point(h):
    """n0 with phi_{n0} = phi_{h(n0)} whenever h is total.

    n0 is the value phi_t(t) = smn_meta(d, t), whose body runs t on itself
    to recover n0, feeds it to h and runs the result on the argument.
    """
    check_natural(h, "h")
    d, t = kleene_parts(h)
    n0 = smn_meta(d, t)
    logger.debug(f"recursion fixed point for h={h}: d={d} t={t} ({len(str(n0))} digit index)")
    return n0


def check_fixed_point(h, n0, inputs=None, fuel=None, retry_fuel=None):
    inputs = range(settings.SAMPLE_INPUTS) if inputs is None else inputs
    fuel = settings.SAMPLE_FUEL if fuel is None else fuel
    h_of_n0 = evaluate(h, [n0], fuel)
    samples = ()
    if h_of_n0.is_value:
        samples = compare_programs(n0, h_of_n0.n, inputs, fuel, retry_fuel)
    return FixedPointCheck(h, n0, h_of_n0, samples)


def quine():
    """q with phi_q(x) = q for every x"""
    return recursion_fixed_point(QUINE_TRANSFORMER)


@dataclass(frozen=True)
class QuineCheck:
    q: int
    runs: Tuple[Tuple[int, object], ...]

    @property
    def verified(self):
        return all(outcome == Value(self.q) for __, outcome in self.runs)

    def to_dict(self):
        return {
            "index": str(self.q),
            "runs": [{"input": str(i), "result": outcome} for i, outcome in self.runs],
            "verified": self.verified,
        }


def check_quine(q, inputs, fuel=None):
    fuel = settings.QUINE_FUEL if fuel is None else fuel
    return QuineCheck(q, tuple((i, evaluate(q, [i], fuel)) for i in inputs))


class Verdict(enum.Enum):
    SAID_HALT_BUT_DIVERGED = "said-halt-but-diverged"
    SAID_DIVERGE_BUT_HALTED = "said-diverge-but-halted"
    CANDIDATE_NOT_TOTAL = "candidate-not-total"


@dataclass(frozen=True)
class RefutationWitness:
    """candidate is a binary program claiming (n, m) -> 1 iff phi_n(m) halts"""

    candidate: int
    g_index: int
    fuel: int
    candidate_answer: object
    g_run: object
    verdict: Verdict

    @property
    def verified(self):
        """The recorded outcomes support the verdict"""
        if self.verdict is Verdict.CANDIDATE_NOT_TOTAL:
            return not self.candidate_answer.is_value
        if not self.candidate_answer.is_value:
            return False
        if self.verdict is Verdict.SAID_HALT_BUT_DIVERGED:
            return self.candidate_answer.n != 0 and isinstance(self.g_run, Diverged)
        return self.candidate_answer.n == 0 and self.g_run.is_value

    def to_dict(self):
        return {
            "candidate": str(self.candidate),
            "g_index": str(self.g_index),
            "fuel": self.fuel,
            "candidate_answer": self.candidate_answer,
            "g_run": self.g_run,
            "verdict": self.verdict,
            "verified": self.verified,
        }


def halting_wrapper(candidate):
    """g(x) = 1 if the candidate says phi_x(x) diverges, else loop forever"""
    return IfZero(Run(Smn(Const(candidate), Var(1)), Var(1)), Const(1), Run(Const(OMEGA), Const(OMEGA)))


def refute_halting(candidate, fuel):
    check_natural(candidate, "candidate")
    check_natural(fuel, "fuel")
    c = encode(halting_wrapper(candidate))

    answer = evaluate(candidate, [c, c], fuel)
    # g re-runs the candidate on (c, c) after a fixed number of its own visits
    g_fuel = fuel + HALT_WRAPPER_OVERHEAD
    g_run = evaluate(c, [c], g_fuel)

    if not answer.is_value:
        verdict = Verdict.CANDIDATE_NOT_TOTAL
    elif answer.n != 0:
        verdict = Verdict.SAID_HALT_BUT_DIVERGED
    else:
        verdict = Verdict.SAID_DIVERGE_BUT_HALTED

    logger.debug(f"halting candidate {candidate}: {verdict.value} (answer {answer}, g {g_run})")
    return RefutationWitness(candidate, c, g_fuel, answer, g_run, verdict)


@dataclass(frozen=True)
class RiceReport:
    """decider claims phi_n in A iff decider(n) != 0, with a in A and b not in A"""

    decider: int
    a: int
    b: int
    h: int
    n0: int
    decider_answer: object
    check: Optional[FixedPointCheck]

    @property
    def decider_total(self):
        return self.decider_answer.is_value

    @property
    def claims_member(self):
        return self.decider_total and self.decider_answer.n != 0

    @property
    def h_of_n0(self):
        return self.check.h_of_n0 if self.check else None

    @property
    def verified(self):
        """Either the decider failed to answer, or n0 behaves like the opposite of its verdict"""
        if not self.decider_total:
            return True
        expected = self.b if self.claims_member else self.a
        return self.check.verified and self.check.h_of_n0 == Value(expected)

    def to_dict(self):
        doc = {
            "decider": str(self.decider),
            "a": str(self.a),
            "b": str(self.b),
            "h": str(self.h),
            "n0": str(self.n0),
            "decider_answer": self.decider_answer,
            "decider_total": self.decider_total,
        }
        if self.decider_total:
            doc["claims_n0_in_A"] = self.claims_member
            doc["check"] = self.check
        doc["verified"] = self.verified
        return doc


def rice_body(decider, a, b):
    return IfZero(Run(Const(decider), Var(1)), Const(a), Const(b))


def rice_contradiction(decider, a, b, fuel=None, inputs=None):
    for name, value in (("decider", decider), ("a", a), ("b", b)):
        check_natural(value, name)
    fuel = settings.SAMPLE_FUEL if fuel is None else fuel

    h = encode(rice_body(decider, a, b))
    n0 = recursion_fixed_point(h)
    answer = evaluate(decider, [n0], fuel)
    check = check_fixed_point(h, n0, inputs, fuel) if answer.is_value else None
    return RiceReport(decider, a, b, h, n0, answer, check)


def bounded_halting_matrix(n, fuel, indices=None):
    """rel[i][j] = 1 iff program j halts on input i within `fuel` steps.

    Rows and columns run over `indices` (default 0..n-1); the same list
    labels both so the diagonal pairs each program with its own index.
    """
    indices = tuple(range(n)) if indices is None else tuple(indices)
    if n < 1 or len(indices) != n:
        raise InputError(f"expected {n} >= 1 program indices, got {len(indices)}", field="n")
    check_natural(fuel, "fuel")
    rel = [[int(evaluate(j, [i], fuel).is_value) for j in indices] for i in indices]
    return DescribesMatrix(tuple(str(i) for i in indices), rel)


def halting_set(p, inputs, fuel):
    """Fuel-bounded approximation of W_p restricted to `inputs`"""
    return frozenset(i for i in inputs if evaluate(p, [i], fuel).is_value)
