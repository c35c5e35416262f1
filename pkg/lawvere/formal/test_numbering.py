import pytest

from lawvere.core.exceptions import InputError
from lawvere.formal.numbering import formula_of, goedel_number, term_number, term_of
from lawvere.formal.sentences import goedel_formula, parikh_formula, rosser_formula, tarski_formula
from lawvere.formal.syntax import (
    TRUE,
    X,
    DiagT,
    NegT,
    Not,
    Num,
    PredF,
    VarT,
)


@pytest.mark.parametrize("term,n", [
    (VarT(0), 0),
    (Num(0), 1),
    (DiagT(VarT(0)), 2),
    (NegT(VarT(0)), 3),
    (Num(5), 21),
    (DiagT(Num(1)), 22),
])
def test_term_numbers(term, n):
    assert term_number(term) == n
    assert term_of(n) == term


@pytest.mark.parametrize("formula,n", [
    (PredF(TRUE, (VarT(X),)), 70),
    (Not(PredF(TRUE, (VarT(X),))), 702),
    (Not(PredF(TRUE, (DiagT(VarT(X)),))), 2502),
    (PredF(0, ()), 0),
])
def test_formula_numbers(formula, n):
    assert goedel_number(formula) == n
    assert formula_of(n) == formula


@pytest.mark.parametrize("formula", [goedel_formula(), rosser_formula(), tarski_formula(), parikh_formula(100)])
def test_named_formulas_round_trip(formula):
    assert formula_of(goedel_number(formula)) == formula


def test_every_number_is_a_formula():
    for n in range(10**5 + 1):
        assert goedel_number(formula_of(n)) == n


def test_every_number_is_a_term():
    for n in range(10**5 + 1):
        assert term_number(term_of(n)) == n


def test_negative():
    with pytest.raises(InputError):
        formula_of(-1)
