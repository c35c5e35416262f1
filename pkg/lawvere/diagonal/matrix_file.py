"""JSON matrix problems for the `diagonal` command and the bundled demo tables.

    {"y_labels": [...], "t_labels": [...], "s_labels": [...],
     "alpha": [ints], "f": [[ints]], "beta": [ints], "beta_bar": [ints]}

`s_labels` defaults to `t_labels`; `beta` and `beta_bar` are optional but
must be given together.  Indices are 0-based.
"""
from dataclasses import dataclass
import json
from typing import Optional

from lawvere.core.exceptions import InputError
from lawvere.diagonal.core import (
    Carrier,
    EndoMap,
    EvalMatrix,
    NonRepresentabilityReport,
    Section,
    cantor_witness,
    verify_report,
)

REQUIRED_KEYS = ("y_labels", "t_labels", "alpha", "f")
OPTIONAL_KEYS = ("s_labels", "beta", "beta_bar")


@dataclass(frozen=True)
class MatrixProblem:
    f: EvalMatrix
    alpha: EndoMap
    section: Optional[Section] = None


def _string_list(doc, key):
    value = doc[key]
    if not isinstance(value, list) or not value:
        raise InputError("expected a non-empty list of labels", field=key)
    if not all(isinstance(v, str) for v in value):
        raise InputError("labels must be strings", field=key)
    return value


def _int_list(value, key):
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise InputError("expected a list of integers", field=key)
    return value


def _carrier(doc, key, default=None):
    labels = _string_list(doc, key) if key in doc else default
    try:
        return Carrier.of_labels(labels)
    except InputError as e:
        raise InputError(str(e.args[0]), field=key) from e


def problem_from_dict(doc):
    """Validate a decoded matrix document and build its MatrixProblem"""
    if not isinstance(doc, dict):
        raise InputError("matrix file must hold a JSON object", field="(document)")

    for key in REQUIRED_KEYS:
        if key not in doc:
            raise InputError("missing required key", field=key)

    unknown = sorted(set(doc) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
    if unknown:
        raise InputError(f"unknown key(s) {', '.join(unknown)}", field=unknown[0])

    y = _carrier(doc, "y_labels")
    rows = _carrier(doc, "t_labels")
    cols = _carrier(doc, "s_labels", default=doc["t_labels"])

    table = doc["f"]
    if not isinstance(table, list) or len(table) != rows.size:
        raise InputError(f"expected {rows.size} rows, one per t_label", field="f")
    for t, row in enumerate(table):
        _int_list(row, "f")
        if len(row) != cols.size:
            raise InputError(f"row {t} has {len(row)} entries, expected {cols.size}", field="f")
    f = EvalMatrix(rows, cols, y, table)

    alpha = EndoMap(y, _int_list(doc["alpha"], "alpha"))

    if ("beta" in doc) != ("beta_bar" in doc):
        raise InputError("beta and beta_bar must be given together", field="beta" if "beta" in doc else "beta_bar")

    section = None
    if "beta" in doc:
        beta = _int_list(doc["beta"], "beta")
        beta_bar = _int_list(doc["beta_bar"], "beta_bar")
        if len(beta) != rows.size:
            raise InputError(f"expected {rows.size} entries, one per t_label", field="beta")
        if len(beta_bar) != cols.size:
            raise InputError(f"expected {cols.size} entries, one per s_label", field="beta_bar")
        section = Section(beta, beta_bar)

    return MatrixProblem(f, alpha, section)


def load_matrix_file(path):
    try:
        with open(path, "rt", encoding="utf-8") as fp:
            doc = json.load(fp)
    except OSError as e:
        raise InputError(f"unable to read {path}: {e.strerror}", field="--input") from e
    except ValueError as e:
        raise InputError(f"{path} is not valid JSON: {e}", field="--input") from e
    return problem_from_dict(doc)


@dataclass(frozen=True)
class DiagonalCertificate:
    problem: MatrixProblem
    report: NonRepresentabilityReport

    @property
    def verified(self):
        return verify_report(self.problem.f, self.report)

    def to_dict(self):
        f = self.problem.f
        doc = f.to_dict()
        doc["alpha"] = list(self.problem.alpha.map)
        sec = self.report.section
        if sec is not None:
            doc["section"] = {
                "beta": list(sec.beta),
                "beta_bar": list(sec.beta_bar),
                "changed_cells": [{"row": t, "column": s} for t, s in sec.changed_cells()],
            }
        doc.update(self.report.to_dict())
        if f.y.size == 2:
            # g read as the subset of T it sends to 1
            doc["members"] = [f.rows.label(t) for t, v in zip(f.rows, self.report.g.values) if v == 1]
        return doc


def diagonalize(problem, use_section=False):
    """Cantor witness for a loaded problem, through its section when asked"""
    sec = None
    if use_section:
        if problem.section is None:
            raise InputError("--section needs beta and beta_bar in the matrix file", field="beta")
        sec = problem.section
    return DiagonalCertificate(problem, cantor_witness(problem.f, problem.alpha, sec))
