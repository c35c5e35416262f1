"""S-expressions for program and formula text.

The reader keeps the source offset of every atom and list so that the
program and formula front ends can report where an unknown symbol sits.
"""
from dataclasses import dataclass
from typing import Tuple

import pyparsing as pp

from lawvere.core.exceptions import InputError


@dataclass(frozen=True)
class Atom:
    text: str
    loc: int


@dataclass(frozen=True)
class SList:
    items: Tuple
    loc: int


class SExpressionParser:

    def __init__(self):
        lpar, rpar = map(pp.Suppress, "()")
        self.atom = pp.Regex(r"[^\s()]+")
        self.atom.set_parse_action(lambda s, loc, toks: Atom(toks[0], loc))

        self.expression = pp.Forward()
        self.slist = pp.Group(lpar + pp.ZeroOrMore(self.expression) + rpar)
        self.slist.set_parse_action(lambda s, loc, toks: SList(tuple(toks[0]), loc))
        self.expression <<= self.atom | self.slist

    def parse(self, instring, field=None):
        try:
            return self.expression.parse_string(instring, parse_all=True)[0]
        except pp.ParseException as e:
            raise InputError(f"malformed s-expression: {e.msg}", field=field, position=e.loc) from e


s_expression_parser = SExpressionParser()


def read(text, field=None):
    """Parse text into nested Atom/SList nodes; errors name `field`"""
    return s_expression_parser.parse(text, field)
