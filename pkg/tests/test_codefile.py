import pytest

from codesupport.code import code_from_generator, zero_code
from codesupport.codefile import format_code_file, parse_code_file
from codesupport.errors import ParseError
from codesupport.field import field_new, gf


def test_parse_simple_file():
    cf = parse_code_file("# repetition\nfield 2 1\n1 1 1\n")
    assert cf.field == field_new(2) and cf.n == 3 and cf.rows == ((1, 1, 1),)
    assert cf.code().size == 2


def test_crlf_comments_and_blank_lines():
    text = "# c\r\n\r\nfield 3 1\r\n  # indented comment\r\n1 2 0\r\n0 1 1\r\n"
    cf = parse_code_file(text)
    assert cf.rows == ((1, 2, 0), (0, 1, 1))


def test_trailing_comments():
    cf = parse_code_file("field 3 1   # p m\nlength 2  # n\n1 2 # row\n")
    assert cf.n == 2 and cf.rows == ((1, 2),)
    with pytest.raises(ParseError) as info:
        parse_code_file("field 3 1\n1 x # bad\n")
    assert (info.value.line, info.value.column) == (2, 3)


def test_extension_field_with_and_without_leading_one():
    a = parse_code_file("field 2 3 1 1 0 1\n1 2 7\n")
    b = parse_code_file("field 2 3 1 1 0\n1 2 7\n")
    assert a.field == b.field == gf(8)


def test_length_line_allows_empty_generator():
    cf = parse_code_file("field 5 1\nlength 4\n")
    assert cf.code() == zero_code(gf(5), 4)


@pytest.mark.parametrize("text,line,col,fragment", [
    ("fild 2 1\n1 0\n", 1, 1, "first line"),
    ("field 2\n", 1, 8, "needs p and m"),
    ("field 2 x\n", 1, 9, "integer"),
    ("field 4 1\n1\n", 1, 7, "prime"),
    ("field 2 1\n1 0\n1 0 1\n", 3, 1, "row has 3 entries, expected 2"),
    ("field 3 1\n1 3 0\n", 2, 3, "not an element index"),
    ("field 2 1\n1 -1\n", 2, 3, "not an element index"),
    ("# only a comment\n", 1, 1, "missing 'field'"),
    ("field 2 1\n", 1, 1, "length is unknown"),
    ("field 2 1\n1 1\nlength 2\n", 3, 1, "must appear once"),
    ("field 2 1\nlength 0\n", 2, 8, "positive"),
])
def test_positioned_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_code_file(text)
    err = info.value
    assert (err.line, err.column) == (line, col)
    assert fragment in str(err)
    assert str(err).startswith(f"line {line}, column {col}:")


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9])
def test_format_parse_round_trip(q):
    F = gf(q)
    C = code_from_generator([[1, 2 % q, 0, 1], [0, 1, 1, q - 1]], F)
    text = format_code_file(C, comment="two lines\nof comment")
    assert text.startswith("# two lines\n# of comment\n")
    assert parse_code_file(text).code() == C


def test_format_zero_code_round_trips():
    C = zero_code(gf(3), 2)
    assert parse_code_file(format_code_file(C)).code() == C
