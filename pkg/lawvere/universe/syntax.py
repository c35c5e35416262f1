"""Expression trees of the toy universe.

A program index n names the unary function whose body is decode(n).  Bodies
refer to their arguments with 1-based Var nodes; Run and Smn make
universality and specialization object-level primitives.
"""
from dataclasses import dataclass

from lawvere.core.numerals import check_natural

VAR, CONST, SUCC, PRED, IFZERO, PAIR, FST, SND, RUN, SMN = range(10)


class Expr:
    TAG = None
    KEYWORD = None

    @property
    def children(self):
        return ()

    def rebuild(self, *children):
        """Same node with new children; leaves return themselves"""
        return self


@dataclass(frozen=True)
class Var(Expr):
    i: int

    TAG = VAR

    def __post_init__(self):
        check_natural(self.i, "Var")


@dataclass(frozen=True)
class Const(Expr):
    n: int

    TAG = CONST

    def __post_init__(self):
        check_natural(self.n, "Const")


@dataclass(frozen=True)
class _Unary(Expr):
    e: Expr

    @property
    def children(self):
        return (self.e,)

    def rebuild(self, e):
        return type(self)(e)


@dataclass(frozen=True)
class _Binary(Expr):
    a: Expr
    b: Expr

    @property
    def children(self):
        return (self.a, self.b)

    def rebuild(self, a, b):
        return type(self)(a, b)


class Succ(_Unary):
    TAG, KEYWORD = SUCC, "succ"


class Pred(_Unary):
    TAG, KEYWORD = PRED, "pred"


class Fst(_Unary):
    TAG, KEYWORD = FST, "fst"


class Snd(_Unary):
    TAG, KEYWORD = SND, "snd"


class PairE(_Binary):
    TAG, KEYWORD = PAIR, "pair"


class Run(_Binary):
    """Run(p, x): evaluate p and x, then run program p on the single argument x"""
    TAG, KEYWORD = RUN, "run"


class Smn(_Binary):
    """Smn(p, y): evaluate p and y, then specialize binary body p at y"""
    TAG, KEYWORD = SMN, "smn"


@dataclass(frozen=True)
class IfZero(Expr):
    c: Expr
    t: Expr
    e: Expr

    TAG, KEYWORD = IFZERO, "ifz"

    @property
    def children(self):
        return (self.c, self.t, self.e)

    def rebuild(self, c, t, e):
        return IfZero(c, t, e)


NODE_TYPES = {cls.TAG: cls for cls in (Var, Const, Succ, Pred, IfZero, PairE, Fst, Snd, Run, Smn)}
KEYWORDS = {cls.KEYWORD: cls for cls in NODE_TYPES.values() if cls.KEYWORD}


def fold(expr, fn):
    """Post-order fold: fn(node, child_results) for every node, without recursion.

    Bodies decoded from large numbers can nest far deeper than the
    interpreter's recursion limit (e.g. long Succ chains).
    """
    stack = [(expr, False)]
    results = []
    while stack:
        node, expanded = stack.pop()
        children = node.children
        if expanded or not children:
            k = len(children)
            kids = results[len(results) - k:] if k else []
            if k:
                del results[len(results) - k:]
            results.append(fn(node, kids))
            continue
        stack.append((node, True))
        stack.extend((child, False) for child in reversed(children))
    return results[0]


def map_leaves(expr, fn):
    """Rebuild expr with every Var/Const leaf replaced by fn(leaf)"""
    return fold(expr, lambda node, kids: node.rebuild(*kids) if kids else fn(node))


def size(expr):
    return fold(expr, lambda node, kids: 1 + sum(kids))
