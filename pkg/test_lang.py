import pytest

from fermicat.diagrams import Empty, Kind
from fermicat.errors import BoundaryError, OrientationError, ParseError
from fermicat.lang import parse_diagram, parse_word, pretty_print, render_ascii, render_json, tokenize
from fermicat.matchings import Morphism
from fermicat.normalize import compose_morphisms, normalize, same_morphism
from fermicat.render import render_png
from fermicat.sampling import sample_crossing_diagrams, sample_valid_diagrams
from fermicat.signwords import EMPTY, SignWord


def w(text):
    return SignWord.parse(text)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def test_parse_word():
    assert parse_word("1") == EMPTY
    assert parse_word("") == EMPTY
    assert parse_word("-+") == w("-+")


def test_parse_word_error_has_span():
    with pytest.raises(ParseError) as info:
        parse_word("+*")
    assert (info.value.span.start, info.value.span.end) == (1, 2)


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------

def test_tokenize():
    kinds = [t.kind for t in tokenize("cup(-+) ; id(1)")]
    assert kinds == ["name", "punct", "word", "punct", "punct", "name", "punct", "word", "punct", "end"]


def test_parse_cup():
    d = parse_diagram("cup(-+)")
    assert d.bottom == EMPTY and d.top == w("-+")
    assert d.slice.kind is Kind.CUP


def test_parse_bubble():
    d = parse_diagram("cup(-+) ; cap(-+)")
    assert d.bottom == EMPTY and d.top == EMPTY
    assert normalize(d, 0).scalar() == 1


def test_parse_tensor_binds_tighter_than_compose():
    d = parse_diagram("id(+) * cup(-+) ; cap(+-) * id(+)")
    assert d.bottom == w("+") and d.top == w("+")
    assert normalize(d) == Morphism.identity(w("+"))


def test_parse_parentheses_and_unit():
    d = parse_diagram("(id(+) ; id(+)) * id(-)")
    assert d.top == w("+-")
    assert isinstance(parse_diagram("id(1)"), Empty)
    assert isinstance(parse_diagram("id()"), Empty)


def test_vertical_mismatch_is_a_boundary_error():
    with pytest.raises(BoundaryError) as info:
        parse_diagram("id(+) ; id(-)")
    assert (info.value.first, info.value.second) == ("+", "-")
    assert (info.value.span.start, info.value.span.end) == (6, 7)


def test_equal_signs_on_a_cap_are_an_orientation_error():
    with pytest.raises(OrientationError) as info:
        parse_diagram("cap(++)")
    assert (info.value.span.start, info.value.span.end) == (0, 7)


@pytest.mark.parametrize("text", [
    "cup(-+",
    "foo(+)",
    "cup(-+) ;",
    "cup(+-+)",
    "x(+)",
    "cup(-+) & x",
    "id(+a)",
    "+*",
    "",
    "(id(+)",
    "id(+) id(-)",
])
def test_parse_errors_carry_spans_inside_the_input(text):
    with pytest.raises(ParseError) as info:
        parse_diagram(text)
    span = info.value.span
    assert 0 <= span.start <= span.end <= len(text)


def test_caret_points_at_the_error():
    with pytest.raises(ParseError) as info:
        parse_diagram("foo(+)")
    assert info.value.caret() == "foo(+)\n^^^"


# ---------------------------------------------------------------------------
# Pretty printing
# ---------------------------------------------------------------------------

def test_pretty_print_uses_minimal_parentheses():
    for text in ("id(+) * cup(-+) ; cap(+-) * id(+)", "(id(+) ; id(+)) * id(-)", "x(+-)", "id(1)"):
        assert pretty_print(parse_diagram(text)) == text


def test_pretty_print_round_trip_on_valid_diagrams():
    for source, d in sample_valid_diagrams(seed=1, samples=60, max_len=6):
        again = parse_diagram(pretty_print(d))
        assert (again.bottom, again.top) == (d.bottom, d.top)
        assert normalize(again, source) == normalize(d, source)
        assert same_morphism(normalize(again), normalize(d))


def test_pretty_print_round_trip_on_crossing_diagrams():
    for d in sample_crossing_diagrams(seed=1, samples=30, max_len=6):
        again = parse_diagram(pretty_print(d))
        assert normalize(again).is_zero()


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def test_render_zero():
    assert render_ascii(normalize(parse_diagram("x(++)"))) == "0"


def test_render_identity_on_plus():
    text = render_ascii(Morphism.identity(w("+"), 0))
    lines = text.splitlines()
    assert lines[0] == "term 1: coeff 1"
    assert lines[1].split() == ["top", "+"]
    assert lines[-1].split() == ["bottom", "+"]
    assert [line.strip() for line in lines[2:5]] == ["|", "|", "|"]


def test_render_direct_sum_composite_as_identity():
    iota1 = normalize(parse_diagram("cap(+-)"))
    rho1 = normalize(parse_diagram("cup(+-)"))
    composite = compose_morphisms(iota1, rho1)
    assert render_ascii(composite) == render_ascii(Morphism.identity(w("+-")))
    assert "| |" in render_ascii(composite)


def test_render_cups_as_brackets():
    text = render_ascii(normalize(parse_diagram("cup(+-) * id(+)"), 0))
    assert "( ) |" in text


def test_render_scalars():
    bubble = parse_diagram("cup(-+) ; cap(-+)")
    assert render_ascii(normalize(bubble, 0)) == "1"
    assert render_ascii(normalize(bubble)) == "cw"
    assert render_ascii(normalize(parse_diagram("cup(-+) ; cap(-+) ; cup(-+) ; cap(-+)"))) == "cw^2"


def test_render_json():
    m = Morphism.identity(w("+"), 0)
    assert render_json(m) == m.to_json()


def test_render_png(tmp_path):
    path = tmp_path / "plus.png"
    data = render_png(normalize(parse_diagram("id(+) * cup(-+)"), 0), path)
    assert data.startswith(b"\x89PNG")
    assert path.read_bytes() == data
    assert render_png(Morphism.zero(EMPTY, EMPTY)).startswith(b"\x89PNG")
    assert render_png(normalize(parse_diagram("cup(-+) ; cap(-+)"))).startswith(b"\x89PNG")
