"""The bundled demo tables and the instance each one feeds."""
from dataclasses import dataclass, field
import json
from typing import Callable, Dict, Optional, Tuple

from lawvere.core.exceptions import InputError
from lawvere.diagonal.core import EvalMatrix, NonRepresentabilityReport, verify_report
from lawvere.diagonal.matrix_file import load_matrix_file
from lawvere.instances import paradoxes
from lawvere.instances.matrices import DescribesMatrix, DigitMatrix, SubsetFamily, TriValuedMatrix
from lawvere.settings import Settings

settings = Settings()


@dataclass(frozen=True)
class DemoResult:
    name: str
    source: Optional[str]
    f: EvalMatrix
    alpha: Tuple[int, ...]
    report: NonRepresentabilityReport
    extra: Dict = field(default_factory=dict)

    @property
    def verified(self):
        return verify_report(self.f, self.report)

    def to_dict(self):
        doc = {"demo": self.name}
        if self.source is not None:
            doc["source"] = self.source
        doc.update(self.f.to_dict())
        doc["alpha"] = list(self.alpha)
        doc.update(self.report.to_dict())
        doc.update(self.extra)
        return doc


def _read_json(path):
    try:
        with open(path, "rt", encoding="utf-8") as fp:
            return json.load(fp)
    except (OSError, ValueError) as e:
        raise InputError(f"unable to load {path}: {e}", field="--input") from e


def _members(m, bits):
    return {"members": paradoxes.members(m.labels, bits)}


def powerset_demo(path):
    fam = SubsetFamily.from_dict(_read_json(path))
    bits, report = paradoxes.powerset_instance(fam)
    extra = {
        "subsets": [fam.members(j) for j in range(fam.universe_size)],
        "G": paradoxes.members(range(len(bits)), bits),
    }
    return fam.membership_matrix(), report, extra


def _describes_demo(instance):

    def run(path):
        m = DescribesMatrix.from_matrix(load_matrix_file(path).f)
        bits, report = instance(m)
        return m, report, _members(m, bits)

    return run


def strong_liar_demo(path):
    m = TriValuedMatrix.from_matrix(load_matrix_file(path).f)
    __, report = paradoxes.strong_liar_instance(m)
    return m, report, {}


def richard_demo(path):
    m = DigitMatrix.from_matrix(load_matrix_file(path).f)
    digits, report = paradoxes.richard_instance(m)
    number = f"{digits[0]}." + "".join(str(d) for d in digits[1:])
    return m, report, {"pi_column_row_4": m[4, 15], "number": number}


def nonre_demo(path):
    doc = _read_json(path)
    try:
        indices, fuel = doc["indices"], doc["fuel"]
    except (KeyError, TypeError) as e:
        raise InputError("expected {\"indices\": [...], \"fuel\": n}", field="nonre") from e
    m, bits, report = paradoxes.nonre_instance(indices, fuel)
    extra = {"fuel": fuel}
    extra.update(_members(m, bits))
    return m, report, extra


DEMOS: Dict[str, Tuple[str, Callable]] = {
    "powerset": ("powerset.json", powerset_demo),
    "russell": ("russell.json", _describes_demo(paradoxes.russell_instance)),
    "grelling": ("grelling.json", _describes_demo(paradoxes.relation_instance)),
    "liar": ("liar.json", _describes_demo(paradoxes.liar_instance)),
    "strong-liar": ("strong_liar.json", strong_liar_demo),
    "richard": ("richard.json", richard_demo),
    "nonre": ("nonre.json", nonre_demo),
}


def demo_path(name):
    return settings.data_path(DEMOS[name][0])


def run_demo(name):
    if name not in DEMOS:
        raise InputError(f"unknown demo {name!r}; choose from {', '.join(DEMOS)}", field="demo")
    source, runner = DEMOS[name]
    table, report, extra = runner(demo_path(name))
    f, alpha = table.as_problem()
    return DemoResult(name, source, f, alpha.map, report, extra)


def halt_matrix_result(n, fuel):
    """Diagonal over the first n programs, each run on each index with bounded fuel"""
    m, bits, report = paradoxes.nonre_instance(range(n), fuel)
    f, alpha = m.as_problem()
    extra = {"fuel": fuel}
    extra.update(_members(m, bits))
    return DemoResult("halt-matrix", None, f, alpha.map, report, extra)
