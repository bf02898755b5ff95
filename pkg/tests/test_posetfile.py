import pytest
from hypothesis import given

from conftest import posets
from twochains.errors import ParseError
from twochains.poset import chain
from twochains.posetfile import format_poset, parse_poset, read_poset


def test_parse_basic():
    p = parse_poset("# comment\n\nposet 3\n1 2\n  2 3  \n")
    assert p == chain(3)


def test_parse_accepts_non_cover_pairs():
    assert parse_poset("poset 3\n1 2\n2 3\n1 3\n") == chain(3)


@pytest.mark.parametrize(
    "text",
    ["", "# only a comment\n", "poset\n", "poset x\n", "posets 3\n", "poset 2\n1 3\n", "poset 2\n1 1\n",
     "poset 2\n1\n", "poset 2\n1 2 3\n", "poset 2\n1 2\n2 1\n", "poset 2\na b\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poset(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_poset(tmp_path / "absent.poset")


@given(posets(max_n=8))
def test_round_trip(p):
    text = format_poset(p)
    assert parse_poset(text) == p
    assert format_poset(parse_poset(text)) == text


def test_format():
    assert format_poset(chain(3), ["x"]) == "# x\nposet 3\n1 2\n2 3\n"
    assert format_poset(chain(0)) == "poset 0\n"
