"""Fuel-bounded evaluation of program indices.

Evaluation runs on an explicit stack of layers, each holding the expression
under evaluation, the arguments it sees and a program counter.  Every time
a layer starts, one unit of fuel is spent; the budget is shared with every
program reached through Run.  Run and the chosen IfZero branch replace the
current layer, so self-application loops run in constant stack.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

from lawvere.core.numerals import check_natural, pair, unpair
from lawvere.universe.codec import decode
from lawvere.universe.specialize import smn_meta
from lawvere.universe.syntax import (
    Const,
    Fst,
    IfZero,
    PairE,
    Pred,
    Run,
    Smn,
    Snd,
    Succ,
    Var,
)


class Outcome:

    is_value = False

    def to_dict(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Value(Outcome):
    n: int

    is_value = True

    def to_dict(self):
        return {"outcome": "value", "value": str(self.n)}


@dataclass(frozen=True)
class Diverged(Outcome):
    """Fuel ran out; evidence of divergence only up to `fuel` steps"""

    fuel: int

    def to_dict(self):
        return {"outcome": "diverged", "fuel": self.fuel}


@dataclass(frozen=True)
class Stuck(Outcome):
    reason: str

    def to_dict(self):
        return {"outcome": "stuck", "reason": self.reason}


@dataclass
class Layer:
    expr: object
    args: Tuple[int, ...]
    pc: int = 0
    # values of already evaluated children
    local: List[int] = field(default_factory=list)


UNARY_OPS = {
    Succ: lambda v: v + 1,
    Pred: lambda v: max(v - 1, 0),
    Fst: lambda v: unpair(v)[0],
    Snd: lambda v: unpair(v)[1],
}

BINARY_OPS = {
    PairE: pair,
    Smn: smn_meta,
}


def evaluate(p, args, fuel):
    """Run program p on args with at most `fuel` node visits"""
    check_natural(p, "program")
    check_natural(fuel, "fuel")
    args = tuple(check_natural(a, "argument") for a in args)

    stack = [Layer(decode(p), args)]
    remaining = fuel
    value = None

    while stack:
        layer = stack[-1]
        expr = layer.expr

        if layer.pc == 0:
            if remaining == 0:
                return Diverged(fuel)
            remaining -= 1

        kind = type(expr)

        if kind is Const:
            value = expr.n
            stack.pop()

        elif kind is Var:
            if not 1 <= expr.i <= len(layer.args):
                return Stuck(f"Var({expr.i}) used with {len(layer.args)} argument(s)")
            value = layer.args[expr.i - 1]
            stack.pop()

        elif kind in UNARY_OPS:
            if layer.pc == 0:
                layer.pc = 1
                stack.append(Layer(expr.e, layer.args))
            else:
                value = UNARY_OPS[kind](value)
                stack.pop()

        elif kind is IfZero:
            if layer.pc == 0:
                layer.pc = 1
                stack.append(Layer(expr.c, layer.args))
            else:
                stack[-1] = Layer(expr.t if value == 0 else expr.e, layer.args)

        else:
            # PairE, Smn and Run evaluate both children left to right
            if layer.pc < 2:
                if layer.pc == 1:
                    layer.local.append(value)
                stack.append(Layer(expr.children[layer.pc], layer.args))
                layer.pc += 1
            elif kind is Run:
                stack[-1] = Layer(decode(layer.local[0]), (value,))
            else:
                value = BINARY_OPS[kind](layer.local[0], value)
                stack.pop()

    return Value(value)
