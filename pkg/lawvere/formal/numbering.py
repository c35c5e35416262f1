"""Gödel numbers of terms and formulas.

Terms are tagged mod 4 (VarT, Num, DiagT, NegT) and formulas mod 10
(PredF, Less, Not, And, Or, Imp, Iff, ForAll, Exists, UnquoteF).  Binary
payloads use Cantor pairing, predicate arguments a cons-list of term codes.
Both decoders are total.
"""
from lawvere.core.numerals import check_natural, decode_list, encode_list, pair, unpair
from lawvere.formal.syntax import (
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

TERM_TYPES = (VarT, Num, DiagT, NegT)
TERM_TAGS = {cls: tag for tag, cls in enumerate(TERM_TYPES)}

FORMULA_TYPES = (PredF, Less, Not, And, Or, Imp, Iff, ForAll, Exists, UnquoteF)
FORMULA_TAGS = {cls: tag for tag, cls in enumerate(FORMULA_TYPES)}
CONNECTIVES = (And, Or, Imp, Iff)
QUANTIFIERS = (ForAll, Exists)


def term_number(term):
    kind = type(term)
    if kind is VarT:
        payload = term.v
    elif kind is Num:
        payload = term.n
    else:
        payload = term_number(term.t)
    return 4 * payload + TERM_TAGS[kind]


def term_of(n):
    check_natural(n, "term")
    payload, tag = divmod(n, 4)
    kind = TERM_TYPES[tag]
    if kind in (VarT, Num):
        return kind(payload)
    return kind(term_of(payload))


def goedel_number(formula):
    kind = type(formula)
    if kind is PredF:
        payload = pair(formula.symbol, encode_list([term_number(t) for t in formula.args]))
    elif kind is Less:
        payload = pair(term_number(formula.t1), term_number(formula.t2))
    elif kind is Not:
        payload = goedel_number(formula.f)
    elif kind in CONNECTIVES:
        payload = pair(goedel_number(formula.a), goedel_number(formula.b))
    elif kind in QUANTIFIERS:
        payload = pair(formula.var, goedel_number(formula.body))
    else:
        payload = term_number(formula.t)
    return 10 * payload + FORMULA_TAGS[kind]


def formula_of(n):
    """The formula numbered n; total on the naturals"""
    check_natural(n, "formula")
    payload, tag = divmod(n, 10)
    kind = FORMULA_TYPES[tag]
    if kind is PredF:
        symbol, args = unpair(payload)
        return PredF(symbol, tuple(term_of(c) for c in decode_list(args)))
    if kind is Less:
        return Less(*(term_of(c) for c in unpair(payload)))
    if kind is Not:
        return Not(formula_of(payload))
    if kind in CONNECTIVES:
        return kind(*(formula_of(c) for c in unpair(payload)))
    if kind in QUANTIFIERS:
        var, body = unpair(payload)
        return kind(var, formula_of(body))
    return UnquoteF(term_of(payload))
