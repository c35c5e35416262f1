from lawvere.core.numerals import check_natural
from lawvere.universe.codec import decode, encode
from lawvere.universe.syntax import Const, Var, map_leaves


def specialize(body, y):
    """Fix the first argument of a binary body at y.

    Var(1) becomes Const(y) and Var(k) for k >= 2 becomes Var(k - 1); Var(0)
    stays ill-formed.  Nested programs reached through Run are separate
    bodies and are not touched.
    """

    def leaf(node):
        if isinstance(node, Var):
            if node.i == 1:
                return Const(y)
            if node.i >= 2:
                return Var(node.i - 1)
        return node

    return map_leaves(body, leaf)


def smn_meta(p, y):
    """Index of the unary program x -> phi_p(y, x)"""
    check_natural(y, "y")
    return encode(specialize(decode(p), y))
