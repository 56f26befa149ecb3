import pytest

from distlat.errors import ParseError, UnknownDirective
from distlat.fileformat import InputDocument, lattice_of, parse_input, render_document


def test_parse_diamond():
    doc = parse_input("type lattice\ncover top a\ncover top b\ncover a bot\ncover b bot")
    assert doc.kind == "lattice"
    assert doc.names == ("top", "a", "b", "bot")
    assert len(doc.covers) == 4
    assert lattice_of(doc).size == 4


def test_parse_poset():
    doc = parse_input("type poset\nelement p\nelement q")
    assert doc == InputDocument("poset", ("p", "q"), ())
    assert lattice_of(doc).size == 4


def test_comments_and_blanks():
    doc = parse_input("# header\n\n  type poset   # trailing\nelement p # x\n\n")
    assert doc.names == ("p",)


@pytest.mark.parametrize(
    "text",
    [
        "type lattice\ncover a a",
        "cover a b",
        "type graph",
        "type lattice\ntype lattice",
        "type lattice\ncover a",
        "type lattice\nelement a b",
        "type lattice\nelement a\nelement a",
        "type lattice\nelement x[1]",
        "",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_input(text)


def test_unknown_directive_line_number():
    with pytest.raises(UnknownDirective) as info:
        parse_input("type lattice\n\nedge a b")
    assert info.value.lineno == 3


def test_roundtrip_bytes():
    text = "type lattice\ncover b a # comment\ncover c b\nelement z\n"
    once = render_document(parse_input(text))
    assert render_document(parse_input(once)) == once
    assert parse_input(once) == parse_input(render_document(parse_input(once)))
