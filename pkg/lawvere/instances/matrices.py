"""Typed tables for the named paradoxes.

Each table knows how to present itself as an EvalMatrix together with the
fixed-point-free map its paradox applies to the diagonal.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from lawvere.core.exceptions import InputError
from lawvere.diagonal.core import Carrier, EndoMap, EvalMatrix

BITS = Carrier.of_labels(("0", "1"))
NOT = EndoMap(BITS, (1, 0))

TRUTH = Carrier.of_labels(("T", "M", "F"))
# T -> F, M -> T, F -> T
STRONG_LIAR_ALPHA = EndoMap(TRUTH, (2, 0, 0))

DIGITS = Carrier.of_labels(tuple(str(d) for d in range(10)))
RICHARD_ALPHA = EndoMap(DIGITS, tuple(9 - d for d in range(10)))


def _square_table(table, allowed, field):
    try:
        table = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError):
        raise InputError("expected a table of integers", field=field)
    n = len(table)
    if n == 0:
        raise InputError("table must not be empty", field=field)
    for i, row in enumerate(table):
        if len(row) != n:
            raise InputError(f"row {i} has {len(row)} entries, expected {n} (table must be square)", field=field)
        for v in row:
            if v not in allowed:
                raise InputError(f"entry {v} in row {i} is not one of {sorted(allowed)}", field=field)
    return table


def _labels(labels, n, default):
    if labels is None:
        return tuple(default(i) for i in range(n))
    return Carrier(n, tuple(labels)).labels


@dataclass(frozen=True)
class SubsetFamily:
    """S_0, ..., S_{n-1}, subsets of {0, ..., n-1} as bit vectors"""

    universe_size: int
    subsets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = self.universe_size
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InputError("universe size must be a positive integer", field="universe_size")
        if len(self.subsets) != n:
            raise InputError(f"expected {n} subsets, got {len(self.subsets)}", field="subsets")
        subsets = []
        for m, bits in enumerate(self.subsets):
            bits = tuple(int(b) for b in bits)
            if len(bits) != n or any(b not in (0, 1) for b in bits):
                raise InputError(f"subset {m} must be a bit vector of length {n}", field="subsets")
            subsets.append(bits)
        object.__setattr__(self, "subsets", tuple(subsets))

    @classmethod
    def from_members(cls, universe_size, members):
        """Build from member lists, e.g. [[], [0], [0, 1]]"""
        bits = []
        for m, subset in enumerate(members):
            if any(not isinstance(i, int) or not 0 <= i < universe_size for i in subset):
                raise InputError(f"subset {m} has members outside 0..{universe_size - 1}", field="subsets")
            bits.append(tuple(int(i in subset) for i in range(universe_size)))
        return cls(universe_size, tuple(bits))

    @classmethod
    def from_dict(cls, doc):
        try:
            return cls.from_members(doc["universe_size"], doc["subsets"])
        except KeyError as e:
            raise InputError("missing required key", field=e.args[0])
        except TypeError:
            raise InputError("expected a list of member lists", field="subsets")

    def members(self, m):
        return [i for i, b in enumerate(self.subsets[m]) if b]

    def membership_matrix(self):
        """rel[i][j] = 1 iff i is a member of S_j"""
        n = self.universe_size
        rel = tuple(tuple(self.subsets[j][i] for j in range(n)) for i in range(n))
        return DescribesMatrix(tuple(str(i) for i in range(n)), rel)

    def as_problem(self):
        return self.membership_matrix().as_problem()


@dataclass(frozen=True)
class DescribesMatrix:
    """rel[i][j] = 1 iff item j describes (or contains) item i"""

    labels: Tuple[str, ...]
    rel: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rel = _square_table(self.rel, {0, 1}, "f")
        object.__setattr__(self, "rel", rel)
        object.__setattr__(self, "labels", _labels(self.labels, len(rel), str))

    @classmethod
    def from_matrix(cls, f):
        if not f.is_square or f.y.size != 2:
            raise InputError("a describes relation is a square 0/1 table", field="f")
        return cls(tuple(f.rows.label(t) for t in f.rows), f.cell.tolist())

    def as_matrix(self):
        items = Carrier.of_labels(self.labels)
        return EvalMatrix(items, items, BITS, self.rel)

    def as_problem(self):
        return self.as_matrix(), NOT


@dataclass(frozen=True)
class TriValuedMatrix:
    """Entries index into (T, M, F)"""

    table: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        table = _square_table(self.table, {0, 1, 2}, "f")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", _labels(self.labels, len(table), str))

    @classmethod
    def from_letters(cls, rows, labels=None):
        """Build from rows of 'T'/'M'/'F' strings"""
        try:
            table = [[TRUTH.labels.index(v) for v in row] for row in rows]
        except ValueError:
            raise InputError("entries must be one of T, M, F", field="f")
        return cls(table, labels)

    @classmethod
    def from_matrix(cls, f):
        if not f.is_square or f.y.size != 3:
            raise InputError("a strong liar table is square over T, M, F", field="f")
        return cls(f.cell.tolist(), tuple(f.rows.label(t) for t in f.rows))

    def as_matrix(self):
        items = Carrier.of_labels(self.labels)
        return EvalMatrix(items, items, TRUTH, self.table)

    def as_problem(self):
        return self.as_matrix(), STRONG_LIAR_ALPHA


@dataclass(frozen=True)
class DigitMatrix:
    """entry[i][j] is the i-th decimal of the j-th real"""

    table: Tuple[Tuple[int, ...], ...]
    row_labels: Optional[Tuple[str, ...]] = None
    col_labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        table = _square_table(self.table, set(range(10)), "f")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "row_labels", _labels(self.row_labels, len(table), lambda i: f"d{i}"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, len(table), lambda j: f"r{j}"))

    @classmethod
    def from_matrix(cls, f):
        if not f.is_square or f.y.size != 10:
            raise InputError("a digit table is square over the digits 0..9", field="f")
        return cls(
            f.cell.tolist(),
            tuple(f.rows.label(t) for t in f.rows),
            tuple(f.cols.label(s) for s in f.cols),
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.table[i][j]

    def as_matrix(self):
        return EvalMatrix(Carrier.of_labels(self.row_labels), Carrier.of_labels(self.col_labels), DIGITS, self.table)

    def as_problem(self):
        return self.as_matrix(), RICHARD_ALPHA
