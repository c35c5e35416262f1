import pytest

from lawvere.core.exceptions import InputError
from lawvere.instances import demos
from lawvere.instances.certificates import certificate_text


@pytest.mark.parametrize(
    "name,values", [
        ("powerset", (1, 1, 1, 0)),
        ("russell", (1, 1, 1, 1, 0)),
        ("grelling", (0, 1, 1, 0)),
        ("liar", (0, 1, 0)),
        ("strong-liar", (2, 0, 0)),
        ("nonre", (0, 0, 1, 0, 0, 1)),
    ]
)
def test_run_demo(name, values):
    result = demos.run_demo(name)
    assert result.report.g.values == values
    assert result.verified


def test_grelling_members():
    result = demos.run_demo("grelling")
    assert result.extra["members"] == ["french", "short"]


def test_powerset_extra():
    result = demos.run_demo("powerset")
    assert result.extra["G"] == [0, 1, 2]
    assert result.extra["subsets"] == [[], [0], [0, 1], [1, 2, 3]]


def test_richard():
    result = demos.run_demo("richard")
    f = result.f
    assert result.extra["pi_column_row_4"] == 1
    assert result.extra["number"] == "9.469932989326290"
    assert result.report.g.values == tuple(9 - f[i, i] for i in f.rows)


def test_halt_matrix_result():
    result = demos.halt_matrix_result(4, 100)
    assert result.source is None
    assert result.extra == {"fuel": 100, "members": ["0", "2", "3"]}
    doc = result.to_dict()
    assert "source" not in doc
    assert doc["demo"] == "halt-matrix"


def test_unknown_demo():
    with pytest.raises(InputError) as e:
        demos.run_demo("barber")
    assert e.value.field == "demo"


def test_certificate_text():
    text = certificate_text(demos.run_demo("liar"))
    assert text.startswith("The Liar\n========\n")
    assert "is-a-question: f = 0, g = 1" in text
    assert "g = {is-a-question}" in text
    assert text.rstrip().endswith("verified: yes")


def test_certificate_text_richard():
    text = certificate_text(demos.run_demo("richard"))
    assert "g = 9.469932989326290... and f(4, 15) = 1" in text
