"""The Diagonalization Lemma as a syntactic construction.

For E with a single free variable v:

    G = E[v := diag(v)]
    C = G[v := #G]

and reducing the one diag redex in C yields E[v := #C].  Certificates record
both sides and check that they are the same tree.
"""
from dataclasses import dataclass

from lawvere.core.exceptions import InputError
from lawvere.formal import text
from lawvere.formal.numbering import formula_of, goedel_number
from lawvere.formal.syntax import (
    Connective,
    DiagT,
    Formula,
    Not,
    Num,
    Quantifier,
    TermOp,
    UnquoteF,
    VarT,
    subterms,
)
from lawvere.logs import get_logger

logger = get_logger("lawvere")


def free_variables(formula):
    return formula.free_variables()


def substitute(formula, v, term):
    """Replace the free occurrences of v by a closed term"""
    if not term.is_closed:
        raise InputError(f"substituted term must be closed, got {text.term_text(term)}", field="term")
    return formula.replace(v, term)


def _only_free_variable(formula, field):
    free = free_variables(formula)
    if len(free) != 1:
        names = ", ".join(text.variable_name(v) for v in sorted(free)) or "none"
        raise InputError(f"expected exactly one free variable, found {names}", field=field)
    return next(iter(free))


def diag_meta(n):
    """#B(#B) for the formula B numbered n"""
    formula = formula_of(n)
    v = _only_free_variable(formula, "diag")
    return goedel_number(substitute(formula, v, Num(n)))


def _reduce_term(term):
    if not isinstance(term, TermOp):
        return term
    inner = _reduce_term(term.t)
    if not isinstance(inner, Num):
        return type(term)(inner)
    if isinstance(term, DiagT):
        try:
            return Num(diag_meta(inner.n))
        except InputError as e:
            raise InputError(f"cannot reduce diag({inner.n}): {e.args[0]}", field="diag") from e
    return Num(goedel_number(Not(formula_of(inner.n))))


def reduce_diag(formula):
    """Normal form under diag(#B) -> #B(#B) and neg(#B) -> #not B, innermost first.

    Unquote is left alone apart from reducing inside its term.
    """
    return formula.map_terms(_reduce_term)


def unquote_step(formula):
    """Replace every unquote(#B) present in the formula by B, once"""
    if isinstance(formula, UnquoteF):
        return formula_of(formula.t.n) if isinstance(formula.t, Num) else formula
    if isinstance(formula, Not):
        return Not(unquote_step(formula.f))
    if isinstance(formula, Connective):
        return type(formula)(unquote_step(formula.a), unquote_step(formula.b))
    if isinstance(formula, Quantifier):
        return type(formula)(formula.var, unquote_step(formula.body))
    return formula


@dataclass(frozen=True)
class LemmaCertificate:
    e: Formula
    v: int
    g: Formula
    c: Formula
    goedel_g: int
    goedel_c: int
    reduced: Formula
    target: Formula

    @property
    def verified(self):
        return self.reduced == self.target

    def recheck(self):
        """Recompute both sides from E and C rather than trusting the stored trees"""
        target = reduce_diag(substitute(self.e, self.v, Num(goedel_number(self.c))))
        return reduce_diag(self.c) == target and goedel_number(self.c) == self.goedel_c

    def to_dict(self, numbers=False):
        doc = {
            "E": text.formula_text(self.e),
            "variable": text.variable_name(self.v),
            "G": text.formula_text(self.g),
            "C": text.formula_text(self.c),
        }
        if numbers:
            doc["goedel_G"] = str(self.goedel_g)
            doc["goedel_C"] = str(self.goedel_c)
        doc["reduced"] = text.formula_text(self.reduced)
        doc["target"] = text.formula_text(self.target)
        doc["verified"] = self.verified
        return doc


def diagonal_sentence(e, v):
    """Fixed point C of E with reduce_diag(C) identical to E[v := #C]"""
    free = free_variables(e)
    if free != {v}:
        names = ", ".join(text.variable_name(u) for u in sorted(free)) or "none"
        raise InputError(
            f"{text.variable_name(v)} must be the only free variable, found {names}", field="E"
        )
    for term in e.terms():
        for sub in subterms(term):
            if isinstance(sub, DiagT) and isinstance(sub.t, Num):
                raise InputError(f"E already contains the diag redex {text.term_text(sub)}", field="E")

    g = e.replace(v, DiagT(VarT(v)))
    goedel_g = goedel_number(g)
    c = substitute(g, v, Num(goedel_g))
    goedel_c = goedel_number(c)

    reduced = reduce_diag(c)
    target = reduce_diag(substitute(e, v, Num(goedel_c)))
    cert = LemmaCertificate(e, v, g, c, goedel_g, goedel_c, reduced, target)
    logger.debug(
        f"diagonal sentence: #G has {len(str(goedel_g))} digits, #C {len(str(goedel_c))}, verified={cert.verified}"
    )
    return cert
