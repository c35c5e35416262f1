"""Prefix notation for program bodies.

    %1 %2 ...        arguments
    42               constants
    (succ e) (pred e) (fst e) (snd e)
    (pair a b) (run p x) (smn p y) (ifz c t e)
"""
import dataclasses

from lawvere.core.exceptions import InputError
from lawvere.core.numerals import is_numeral
from lawvere.core.sexpr import Atom, read
from lawvere.universe.codec import decode, encode
from lawvere.universe.syntax import KEYWORDS, Const, Var, fold


def _leaf(atom):
    text = atom.text
    if is_numeral(text):
        return Const(int(text))
    if text.startswith("%") and is_numeral(text[1:]):
        return Var(int(text[1:]))
    raise InputError(f"unknown program symbol {text!r}", field="program", position=atom.loc)


def _node(sexpr):
    if isinstance(sexpr, Atom):
        return _leaf(sexpr)

    if not sexpr.items or not isinstance(sexpr.items[0], Atom):
        raise InputError("expected (keyword args...)", field="program", position=sexpr.loc)

    head, args = sexpr.items[0], sexpr.items[1:]
    cls = KEYWORDS.get(head.text)
    if cls is None:
        raise InputError(f"unknown program keyword {head.text!r}", field="program", position=head.loc)

    expected = len(dataclasses.fields(cls))
    if len(args) != expected:
        raise InputError(
            f"{head.text} takes {expected} argument(s), got {len(args)}", field="program", position=sexpr.loc
        )
    return cls(*(_node(a) for a in args))


def parse_program(text):
    """Parse program text into an Expr"""
    return _node(read(text, "program"))


def program_text(expr):
    def show(node, kids):
        if isinstance(node, Var):
            return f"%{node.i}"
        if isinstance(node, Const):
            return str(node.n)
        return "(" + " ".join([node.KEYWORD, *kids]) + ")"

    return fold(expr, show)


def program_index(text):
    """A decimal index or program text, as an index"""
    text = text.strip()
    if is_numeral(text):
        return int(text)
    return encode(parse_program(text))


def index_text(n):
    return program_text(decode(n))
