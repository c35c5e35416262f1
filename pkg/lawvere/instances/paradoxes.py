"""Cantor, Russell, Grelling, the Liar, the Strong Liar, Richard and a
fuel-bounded non-r.e. language, each as a diagonal argument over a finite
table.

Every instance returns the diagonal object together with the
NonRepresentabilityReport certifying that it is no column of the table.
"""
from lawvere.diagonal.core import cantor_witness
from lawvere.instances.matrices import TRUTH
from lawvere.logs import get_logger
from lawvere.universe.theorems import bounded_halting_matrix

logger = get_logger("lawvere")


def _diagonalize(table):
    f, alpha = table.as_problem()
    report = cantor_witness(f, alpha)
    return report.g.values, report


def powerset_instance(fam):
    """G = {i : i not in S_i}, which is none of the S_m"""
    bits, report = _diagonalize(fam.membership_matrix())
    logger.debug(f"powerset: G = {[i for i, b in enumerate(bits) if b]}")
    return bits, report


def relation_instance(m):
    """het[i] = 1 iff item i does not describe itself"""
    return _diagonalize(m)


def russell_instance(m):
    """Sets that are not members of themselves; rel[i][j] = 1 iff set i is in set j"""
    return relation_instance(m)


def liar_instance(m):
    """Sentences that are not true of themselves; rel[i][j] = 1 iff sentence j is true of sentence i"""
    return relation_instance(m)


def strong_liar_instance(m):
    values, report = _diagonalize(m)
    return tuple(TRUTH.label(v) for v in values), report


def richard_instance(m):
    """digits[i] = 9 - m[i][i]: a real differing from the i-th one in its i-th decimal"""
    return _diagonalize(m)


def nonre_instance(indices, fuel):
    """The diagonal language {i : program i does not halt on i within fuel} over the listed programs"""
    m = bounded_halting_matrix(len(indices), fuel, indices)
    het, report = relation_instance(m)
    return m, het, report


def members(labels, bits):
    return [label for label, b in zip(labels, bits) if b]

