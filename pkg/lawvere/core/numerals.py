"""Natural number plumbing shared by the program and formula numberings."""
import math
import sys

from lawvere.core.exceptions import InputError


def allow_long_numerals():
    """Lift CPython's int <-> str digit limit (3.11+); Gödel numbers of
    diagonal sentences run to tens of thousands of digits."""
    setter = getattr(sys, "set_int_max_str_digits", None)
    if setter is not None:
        setter(0)


def check_natural(n, field="value"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"expected a natural number, got {n!r}", field=field)
    return n


def pair(a, b):
    """Cantor pairing (a+b)(a+b+1)/2 + b"""
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(p):
    """Inverse of `pair`"""
    w = (math.isqrt(8 * p + 1) - 1) // 2
    b = p - w * (w + 1) // 2
    return w - b, b


def encode_list(codes):
    """0 is the empty list, 1 + pair(head, tail) a cons cell"""
    code = 0
    for c in reversed(codes):
        code = 1 + pair(c, code)
    return code


def decode_list(code):
    codes = []
    while code:
        head, code = unpair(code - 1)
        codes.append(head)
    return codes


def is_numeral(text):
    """Plain ASCII decimal digits"""
    return text.isascii() and text.isdigit()
