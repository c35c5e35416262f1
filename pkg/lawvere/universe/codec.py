"""Gödel numbering of program bodies: code = 10 * payload + tag.

Var and Const carry their number as payload, unary nodes the code of their
child, binary nodes pair(a, b) and IfZero pair(c, pair(t, e)).  Every
natural decodes, so every natural is a program.
"""
import functools

from lawvere.core.numerals import check_natural, pair, unpair
from lawvere.universe.syntax import CONST, IFZERO, NODE_TYPES, PAIR, RUN, SMN, VAR, Const, Var, fold

BINARY = (PAIR, RUN, SMN)


def _payload(node, kids):
    if isinstance(node, Var):
        return node.i
    if isinstance(node, Const):
        return node.n
    if len(kids) == 1:
        return kids[0]
    if len(kids) == 2:
        return pair(*kids)
    c, t, e = kids
    return pair(c, pair(t, e))


def encode(expr):
    return fold(expr, lambda node, kids: 10 * _payload(node, kids) + node.TAG)


def _child_codes(tag, payload):
    if tag == IFZERO:
        c, rest = unpair(payload)
        return (c, *unpair(rest))
    if tag in BINARY:
        return unpair(payload)
    return (payload,)


@functools.lru_cache(maxsize=4096)
def decode(n):
    """The body with Gödel number n; total on the naturals"""
    check_natural(n, "program")
    stack = [(n, False)]
    results = []
    while stack:
        code, expanded = stack.pop()
        payload, tag = divmod(code, 10)
        if tag == VAR:
            results.append(Var(payload))
        elif tag == CONST:
            results.append(Const(payload))
        elif expanded:
            k = 3 if tag == IFZERO else 2 if tag in BINARY else 1
            kids = results[-k:]
            del results[-k:]
            results.append(NODE_TYPES[tag](*kids))
        else:
            stack.append((code, True))
            stack.extend((child, False) for child in reversed(_child_codes(tag, payload)))
    return results[0]
