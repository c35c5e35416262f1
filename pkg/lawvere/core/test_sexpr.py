import pytest

from lawvere.core.exceptions import InputError
from lawvere.core.sexpr import Atom, SList, read


def test_atom():
    assert read("  abc") == Atom("abc", 2)


def test_nested_positions():
    node = read("(a (b c))")
    assert isinstance(node, SList)
    assert node.loc == 0
    a, inner = node.items
    assert a == Atom("a", 1)
    assert inner.loc == 3
    assert [i.text for i in inner.items] == ["b", "c"]
    assert inner.items[1].loc == 6


def test_empty_list():
    assert read("()").items == ()


@pytest.mark.parametrize("text", ["", "(a", "a)", "(a) b", ")"])
def test_malformed(text):
    with pytest.raises(InputError) as e:
        read(text, "program")
    assert e.value.field == "program"
    assert e.value.position is not None
