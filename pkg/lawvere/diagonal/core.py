"""Finite Cantor and Diagonal theorems over index-based carriers.

An evaluation matrix tabulates f: T x S -> Y with rows T and columns S.  A
map g: T -> Y is *representable* when it equals some column f(-, s).
Given a fixed-point-free endomap alpha of Y, the composite
g(t) = alpha(f(t, beta(t))) differs from every column, and the row at which
column s is contradicted is the one the proof names: t = s on the diagonal,
t = beta_bar(s) for a section.  Conversely, whenever the composite happens to
be representable, alpha has a fixed point at the diagonal entry of the
representing column.
"""
from dataclasses import dataclass, field
import itertools
from typing import Optional, Tuple

import numpy as np

from lawvere.core.exceptions import InputError, NotApplicable
from lawvere.logs import get_logger

logger = get_logger("lawvere")


@dataclass(frozen=True)
class Carrier:
    """A finite set {0, ..., size-1} with optional display labels"""

    size: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"carrier size must be a positive integer, got {self.size!r}", field="size")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != self.size:
                raise InputError(f"expected {self.size} labels, got {len(labels)}", field="labels")
            if len(set(labels)) != len(labels):
                raise InputError("labels must be pairwise distinct", field="labels")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def of_labels(cls, labels):
        labels = tuple(labels)
        return cls(len(labels), labels)

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))


def _indices(values, bound, field_name):
    try:
        values = tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise InputError("expected a sequence of indices", field=field_name)
    for v in values:
        if not 0 <= v < bound:
            raise InputError(f"index {v} out of range 0..{bound - 1}", field=field_name)
    return values


@dataclass(frozen=True)
class EndoMap:
    """A total map alpha: Y -> Y given by its table of images"""

    carrier: Carrier
    map: Tuple[int, ...]

    def __post_init__(self):
        values = _indices(self.map, self.carrier.size, "alpha")
        if len(values) != self.carrier.size:
            raise InputError(f"expected {self.carrier.size} images, got {len(values)}", field="alpha")
        object.__setattr__(self, "map", values)

    @classmethod
    def identity(cls, carrier):
        return cls(carrier, tuple(range(carrier.size)))

    def __call__(self, y):
        return self.map[y]

    def as_array(self):
        return np.array(self.map, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class EvalMatrix:
    """f: T x S -> Y, cell[t][s] an index into Y"""

    rows: Carrier
    cols: Carrier
    y: Carrier
    cell: np.ndarray

    def __post_init__(self):
        try:
            cell = np.array(self.cell, dtype=np.int64)
        except (TypeError, ValueError, OverflowError):
            raise InputError("matrix must be a rectangular table of integers", field="f")
        if cell.shape != (self.rows.size, self.cols.size):
            raise InputError(
                f"matrix shape {cell.shape} does not match {self.rows.size} rows x {self.cols.size} columns",
                field="f",
            )
        if cell.size and (cell.min() < 0 or cell.max() >= self.y.size):
            raise InputError(f"matrix entries must lie in 0..{self.y.size - 1}", field="f")
        cell.flags.writeable = False
        object.__setattr__(self, "cell", cell)

    @classmethod
    def from_table(cls, table, y, row_labels=None, col_labels=None):
        """Build a matrix from a list of rows; `y` is a Carrier or its size"""
        table = [list(r) for r in table]
        if not table or not table[0]:
            raise InputError("matrix must have at least one row and one column", field="f")
        if not isinstance(y, Carrier):
            y = Carrier(y)
        rows = Carrier(len(table), row_labels)
        cols = Carrier(len(table[0]), col_labels)
        return cls(rows, cols, y, table)

    @property
    def is_square(self):
        return self.rows.size == self.cols.size

    def column(self, s):
        return self.cell[:, s]

    def diagonal(self):
        return np.diagonal(self.cell)

    def __getitem__(self, ts):
        t, s = ts
        return int(self.cell[t, s])

    def __eq__(self, other):
        if not isinstance(other, EvalMatrix):
            return NotImplemented
        return (
            (self.rows, self.cols, self.y) == (other.rows, other.cols, other.y) and
            np.array_equal(self.cell, other.cell)
        )

    __hash__ = None

    def to_dict(self):
        return {
            "t_labels": [self.rows.label(t) for t in self.rows],
            "s_labels": [self.cols.label(s) for s in self.cols],
            "y_labels": [self.y.label(v) for v in self.y],
            "f": self.cell.tolist(),
        }


@dataclass(frozen=True)
class Section:
    """beta: T -> S together with a chosen right inverse beta_bar: S -> T"""

    beta: Tuple[int, ...]
    beta_bar: Tuple[int, ...]

    def __post_init__(self):
        beta_bar = _indices(self.beta_bar, max(len(self.beta), 1), "beta_bar")
        beta = _indices(self.beta, max(len(beta_bar), 1), "beta")
        if not beta or not beta_bar:
            raise InputError("beta and beta_bar must be non-empty", field="beta")
        for s, t in enumerate(beta_bar):
            if beta[t] != s:
                raise InputError(
                    f"beta_bar is not a right inverse of beta: beta(beta_bar({s})) = {beta[t]} (beta is not onto)",
                    field="beta_bar",
                )
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "beta_bar", beta_bar)

    @classmethod
    def identity(cls, n):
        """The diagonal t -> (t, t)"""
        return cls(tuple(range(n)), tuple(range(n)))

    def changed_cells(self):
        """Cells (t, beta(t)) rewritten by alpha; every column gets at least one"""
        return tuple((t, s) for t, s in enumerate(self.beta))


@dataclass(frozen=True)
class YMap:
    """g: T -> Y"""

    domain: Carrier
    y: Carrier
    values: Tuple[int, ...]

    def __post_init__(self):
        values = _indices(self.values, self.y.size, "g")
        if len(values) != self.domain.size:
            raise InputError(f"expected {self.domain.size} values, got {len(values)}", field="g")
        object.__setattr__(self, "values", values)

    def labels(self):
        return [self.y.label(v) for v in self.values]

    def to_dict(self):
        return {"values": list(self.values), "labels": self.labels()}


@dataclass(frozen=True)
class NonRepresentabilityReport:
    """witness[s] is a row at which g differs from column s"""

    g: YMap
    witness: Tuple[int, ...]
    section: Optional[Section] = field(default=None, compare=False)

    def to_dict(self):
        return {
            "g": self.g.to_dict(),
            "witness": [{"column": s, "row": t} for s, t in enumerate(self.witness)],
        }


@dataclass(frozen=True)
class FixedPointWitness:
    representing_column: int
    value: int

    def to_dict(self):
        return {"representing_column": self.representing_column, "value": self.value}


def _check_alpha(f, alpha):
    if alpha.carrier.size != f.y.size:
        raise InputError(f"alpha acts on {alpha.carrier.size} values but f takes {f.y.size}", field="alpha")


def compose_diagonal(f, alpha):
    """g(t) = alpha(f(t, t))"""
    if not f.is_square:
        raise InputError(f"diagonal needs a square matrix, got {f.rows.size} x {f.cols.size}", field="f")
    _check_alpha(f, alpha)
    values = alpha.as_array()[f.diagonal()]
    return YMap(f.rows, f.y, tuple(int(v) for v in values))


def compose_with_section(f, alpha, sec):
    """g_beta(t) = alpha(f(t, beta(t)))"""
    if len(sec.beta) != f.rows.size:
        raise InputError(f"beta must have {f.rows.size} entries, got {len(sec.beta)}", field="beta")
    if len(sec.beta_bar) != f.cols.size:
        raise InputError(f"beta_bar must have {f.cols.size} entries, got {len(sec.beta_bar)}", field="beta_bar")
    _check_alpha(f, alpha)
    picked = f.cell[np.arange(f.rows.size), np.array(sec.beta)]
    values = alpha.as_array()[picked]
    return YMap(f.rows, f.y, tuple(int(v) for v in values))


def representing_columns(g, f):
    """All columns s with g(-) = f(-, s); empty when g is not representable"""
    if g.domain.size != f.rows.size or g.y.size != f.y.size:
        raise InputError("g and f disagree on T or Y", field="g")
    matches = np.all(f.cell == np.array(g.values, dtype=np.int64)[:, None], axis=0)
    return frozenset(int(s) for s in np.flatnonzero(matches))


def fixed_points(alpha):
    return frozenset(y for y, image in enumerate(alpha.map) if image == y)


def is_fixed_point_free(alpha):
    return not fixed_points(alpha)


def cantor_witness(f, alpha, sec=None):
    """Certificate that alpha composed with the diagonal (or a section) is no column of f.

    Raises NotApplicable when alpha has a fixed point.
    """
    fixed = fixed_points(alpha)
    if fixed:
        raise NotApplicable(f"alpha has fixed points {sorted(fixed)}; Cantor's theorem does not apply")

    if sec is None:
        g = compose_diagonal(f, alpha)
        witness = tuple(range(f.cols.size))
    else:
        g = compose_with_section(f, alpha, sec)
        witness = sec.beta_bar

    report = NonRepresentabilityReport(g, witness, sec)
    if not verify_report(f, report):
        # unreachable for a fixed-point-free alpha and a valid section
        raise NotApplicable("constructed witness failed to verify")

    logger.debug(f"Cantor witness over {f.rows.size}x{f.cols.size} matrix: rows {list(witness)}")
    return report


def verify_report(f, report):
    """Re-check every inequality g(t(s)) != f(t(s), s) recorded in a report"""
    if len(report.witness) != f.cols.size or len(report.g.values) != f.rows.size:
        return False
    return all(
        0 <= t < f.rows.size and report.g.values[t] != f[t, s]
        for s, t in enumerate(report.witness)
    )


def weak_diagonal_fixed_point(f, alpha):
    """If the constructed g is representable, the fixed point it forces on alpha.

    Only the constructed g needs to be representable, not every map T -> Y.
    Ties between representing columns go to the smallest index.
    """
    g = compose_diagonal(f, alpha)
    columns = representing_columns(g, f)
    if not columns:
        return None
    t = min(columns)
    witness = FixedPointWitness(t, f[t, t])
    if not verify_fixed_point(f, alpha, witness):
        # unreachable: alpha(g(t)) = f(t, t) = g(t) for a representing column t
        raise NotApplicable("constructed fixed point failed to verify")
    return witness


def verify_fixed_point(f, alpha, witness):
    t, y0 = witness.representing_column, witness.value
    return alpha(y0) == y0 and f[t, t] == y0 and compose_diagonal(f, alpha).values[t] == y0


def all_ymaps(domain, y):
    """Every map T -> Y, as YMaps, in lexicographic order"""
    for values in itertools.product(range(y.size), repeat=domain.size):
        yield YMap(domain, y, values)


def fixed_point_free_maps(carrier):
    """Every endomap of the carrier without a fixed point"""
    choices = [[v for v in range(carrier.size) if v != y] for y in range(carrier.size)]
    for images in itertools.product(*choices):
        yield EndoMap(carrier, images)


def every_map_representable(f):
    """Brute-force check that every g: T -> Y is a column of f"""
    columns = {tuple(int(v) for v in f.column(s)) for s in f.cols}
    return all(g.values in columns for g in all_ymaps(f.rows, f.y))


def diagonal_theorem(f, alpha):
    """Fixed point of alpha under the full hypothesis that f represents every map T -> Y"""
    if not every_map_representable(f):
        raise NotApplicable("f does not represent every map T -> Y")
    witness = weak_diagonal_fixed_point(f, alpha)
    if witness is None:
        # unreachable: the constructed g is one of the represented maps
        raise NotApplicable("constructed g is not representable")
    return witness
