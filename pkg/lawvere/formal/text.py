"""Prefix notation for formulas.

    (forall y (not (Prov y x)))      quantifiers bind one variable
    (imp (unq x) (P 0))              unquote
    (diag x) (neg x)                 function symbols on terms
    (< m 100)                        numeric order

Variables are x y z w m u, then v6, v7, ...; predicate symbols come from the
fixed table or are written #k.
"""
from lawvere.core.exceptions import InputError
from lawvere.core.numerals import is_numeral
from lawvere.core.sexpr import Atom, SList, read
from lawvere.formal.syntax import (
    SYMBOLS,
    VARIABLE_NAMES,
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
    symbol_name,
    variable_name,
)

CONNECTIVE_KEYWORDS = {"and": And, "or": Or, "imp": Imp, "iff": Iff}
QUANTIFIER_KEYWORDS = {"forall": ForAll, "exists": Exists}
TERM_KEYWORDS = {"diag": DiagT, "neg": NegT}
KEYWORD_OF = {cls: kw for kw, cls in {**CONNECTIVE_KEYWORDS, **QUANTIFIER_KEYWORDS, **TERM_KEYWORDS}.items()}


def term_text(term):
    if isinstance(term, VarT):
        return variable_name(term.v)
    if isinstance(term, Num):
        return str(term.n)
    return f"({KEYWORD_OF[type(term)]} {term_text(term.t)})"


def formula_text(formula):
    kind = type(formula)
    if kind is PredF:
        return "(" + " ".join([symbol_name(formula.symbol), *(term_text(t) for t in formula.args)]) + ")"
    if kind is Less:
        return f"(< {term_text(formula.t1)} {term_text(formula.t2)})"
    if kind is Not:
        return f"(not {formula_text(formula.f)})"
    if kind is UnquoteF:
        return f"(unq {term_text(formula.t)})"
    if kind in QUANTIFIER_KEYWORDS.values():
        return f"({KEYWORD_OF[kind]} {variable_name(formula.var)} {formula_text(formula.body)})"
    return f"({KEYWORD_OF[kind]} {formula_text(formula.a)} {formula_text(formula.b)})"


def _error(message, node):
    return InputError(message, field="formula", position=node.loc)


def parse_variable(atom):
    if not isinstance(atom, Atom):
        raise _error("expected a variable", atom)
    name = atom.text
    if name in VARIABLE_NAMES:
        return VARIABLE_NAMES.index(name)
    if name.startswith("v") and is_numeral(name[1:]):
        return int(name[1:])
    raise _error(f"unknown variable {name!r}", atom)


def _term(node):
    if isinstance(node, Atom):
        if is_numeral(node.text):
            return Num(int(node.text))
        return VarT(parse_variable(node))
    head, args = _split(node)
    cls = TERM_KEYWORDS.get(head.text)
    if cls is None:
        raise _error(f"unknown term function {head.text!r}", head)
    _expect_args(node, head, args, 1)
    return cls(_term(args[0]))


def _split(node):
    if not node.items or not isinstance(node.items[0], Atom):
        raise _error("expected (keyword args...)", node)
    return node.items[0], node.items[1:]


def _expect_args(node, head, args, n):
    if len(args) != n:
        raise _error(f"{head.text} takes {n} argument(s), got {len(args)}", node)


def _symbol(head):
    name = head.text
    if name in SYMBOLS:
        return SYMBOLS[name]
    if name.startswith("#") and is_numeral(name[1:]):
        return int(name[1:]), None
    raise _error(f"unknown symbol {name!r}", head)


def _formula(node):
    if not isinstance(node, SList):
        raise _error(f"expected a formula, got {node.text!r}", node)
    head, args = _split(node)
    kw = head.text

    if kw == "not":
        _expect_args(node, head, args, 1)
        return Not(_formula(args[0]))
    if kw in CONNECTIVE_KEYWORDS:
        _expect_args(node, head, args, 2)
        return CONNECTIVE_KEYWORDS[kw](_formula(args[0]), _formula(args[1]))
    if kw in QUANTIFIER_KEYWORDS:
        _expect_args(node, head, args, 2)
        return QUANTIFIER_KEYWORDS[kw](parse_variable(args[0]), _formula(args[1]))
    if kw == "unq":
        _expect_args(node, head, args, 1)
        return UnquoteF(_term(args[0]))
    if kw == "<":
        _expect_args(node, head, args, 2)
        return Less(_term(args[0]), _term(args[1]))

    code, arity = _symbol(head)
    if arity is not None:
        _expect_args(node, head, args, arity)
    return PredF(code, tuple(_term(a) for a in args))


def parse_formula(text):
    return _formula(read(text, "formula"))
