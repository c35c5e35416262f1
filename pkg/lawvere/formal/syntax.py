"""Terms and formulas over a fixed symbol table.

Variables and predicate symbols are small naturals; names exist only for
printing and parsing.  DiagT and NegT are object-level function symbols:
reduce_diag later evaluates them on numerals.
"""
from dataclasses import dataclass
from typing import Tuple

from lawvere.core.numerals import check_natural

# name -> (code, arity)
SYMBOLS = {
    "Prov": (0, 2),
    "Prflen": (1, 2),
    "T": (2, 1),
    "P": (3, 1),
    "Q": (4, 1),
    "R": (5, 2),
}
SYMBOL_NAMES = {code: name for name, (code, __) in SYMBOLS.items()}
PROV, PRFLEN, TRUE, P, Q, R = range(6)

VARIABLE_NAMES = ("x", "y", "z", "w", "m", "u")
X, Y, Z, W, M, U = range(6)


def symbol_name(code):
    return SYMBOL_NAMES.get(code, f"#{code}")


def variable_name(code):
    return VARIABLE_NAMES[code] if code < len(VARIABLE_NAMES) else f"v{code}"


class Term:

    def variables(self):
        return frozenset()

    def replace(self, v, term):
        return self

    @property
    def is_closed(self):
        return not self.variables()


@dataclass(frozen=True)
class VarT(Term):
    v: int

    def __post_init__(self):
        check_natural(self.v, "variable")

    def variables(self):
        return frozenset((self.v,))

    def replace(self, v, term):
        return term if self.v == v else self


@dataclass(frozen=True)
class Num(Term):
    n: int

    def __post_init__(self):
        check_natural(self.n, "numeral")


@dataclass(frozen=True)
class TermOp(Term):
    t: Term

    def variables(self):
        return self.t.variables()

    def replace(self, v, term):
        return type(self)(self.t.replace(v, term))


class DiagT(TermOp):
    """D(n): the number of formula n with its free variable set to n"""


class NegT(TermOp):
    """Neg(n): the number of the negation of formula n"""


class Formula:

    def free_variables(self):
        raise NotImplementedError

    def replace(self, v, term):
        """Replace free occurrences of VarT(v); callers guarantee no capture"""
        raise NotImplementedError

    def map_terms(self, fn):
        """Apply fn to every maximal term, leaving the formula structure alone"""
        raise NotImplementedError

    def terms(self):
        raise NotImplementedError


@dataclass(frozen=True)
class PredF(Formula):
    symbol: int
    args: Tuple[Term, ...]

    def __post_init__(self):
        check_natural(self.symbol, "symbol")
        object.__setattr__(self, "args", tuple(self.args))

    def free_variables(self):
        return frozenset().union(*(t.variables() for t in self.args))

    def replace(self, v, term):
        return PredF(self.symbol, tuple(t.replace(v, term) for t in self.args))

    def map_terms(self, fn):
        return PredF(self.symbol, tuple(fn(t) for t in self.args))

    def terms(self):
        return self.args


@dataclass(frozen=True)
class Less(Formula):
    t1: Term
    t2: Term

    def free_variables(self):
        return self.t1.variables() | self.t2.variables()

    def replace(self, v, term):
        return Less(self.t1.replace(v, term), self.t2.replace(v, term))

    def map_terms(self, fn):
        return Less(fn(self.t1), fn(self.t2))

    def terms(self):
        return (self.t1, self.t2)


@dataclass(frozen=True)
class Not(Formula):
    f: Formula

    def free_variables(self):
        return self.f.free_variables()

    def replace(self, v, term):
        return Not(self.f.replace(v, term))

    def map_terms(self, fn):
        return Not(self.f.map_terms(fn))

    def terms(self):
        return self.f.terms()


@dataclass(frozen=True)
class Connective(Formula):
    a: Formula
    b: Formula

    def free_variables(self):
        return self.a.free_variables() | self.b.free_variables()

    def replace(self, v, term):
        return type(self)(self.a.replace(v, term), self.b.replace(v, term))

    def map_terms(self, fn):
        return type(self)(self.a.map_terms(fn), self.b.map_terms(fn))

    def terms(self):
        return self.a.terms() + self.b.terms()


class And(Connective):
    pass


class Or(Connective):
    pass


class Imp(Connective):
    pass


class Iff(Connective):
    pass


@dataclass(frozen=True)
class Quantifier(Formula):
    var: int
    body: Formula

    def __post_init__(self):
        check_natural(self.var, "variable")

    def free_variables(self):
        return self.body.free_variables() - {self.var}

    def replace(self, v, term):
        if v == self.var:
            return self
        return type(self)(self.var, self.body.replace(v, term))

    def map_terms(self, fn):
        return type(self)(self.var, self.body.map_terms(fn))

    def terms(self):
        return self.body.terms()


class ForAll(Quantifier):
    pass


class Exists(Quantifier):
    pass


@dataclass(frozen=True)
class UnquoteF(Formula):
    """The formula whose number the term denotes"""

    t: Term

    def free_variables(self):
        return self.t.variables()

    def replace(self, v, term):
        return UnquoteF(self.t.replace(v, term))

    def map_terms(self, fn):
        return UnquoteF(fn(self.t))

    def terms(self):
        return (self.t,)


def subterms(term):
    yield term
    if isinstance(term, TermOp):
        yield from subterms(term.t)
