import pytest
import sympy

from fermicat.diagrams import (
    Empty,
    cap,
    compose,
    compose_all,
    crossing,
    cup,
    flatten,
    from_layers,
    identity_diagram,
    padded,
    rows_of,
    tensor,
)
from fermicat.errors import BoundaryError, DomainError
from fermicat.matchings import BOTTOM, TOP, Bubbles, Matching, Morphism, canonical_matching, enumerate_matchings
from fermicat.normalize import (
    compose_morphisms,
    equal_morphisms,
    hom_basis,
    hom_dim,
    matching_to_diagram,
    normalize,
    same_morphism,
    tensor_morphisms,
    trace,
)
from fermicat.reduction import (
    Atom,
    atom_of_matrix,
    curl_check,
    direct_sum_witness,
    grothendieck_check,
    nilpotence_check,
    normal_order_check,
    reduce_word,
    reduction_sweep,
)
from fermicat.sampling import (
    make_rng,
    random_crossing_diagram,
    random_valid_diagram,
    sample_crossing_diagrams,
    sample_valid_diagrams,
)
from fermicat.signwords import EMPTY, SignWord, enumerate_words, inner_product, inner_product_at, target


def w(text):
    return SignWord.parse(text)


CW = compose(cup("-+"), cap("-+"))
CCW = compose(cup("+-"), cap("+-"))


# ---------------------------------------------------------------------------
# Diagram expressions
# ---------------------------------------------------------------------------

def test_boundary_words():
    assert cup("-+").bottom == EMPTY and cup("-+").top == w("-+")
    assert cap("+-").bottom == w("+-") and cap("+-").top == EMPTY
    assert crossing("+-").top == w("-+")
    assert tensor(cup("-+"), identity_diagram("+")).top == w("-++")


def test_compose_checks_interfaces():
    with pytest.raises(BoundaryError):
        compose(identity_diagram("+"), identity_diagram("-"))


def test_cup_with_equal_signs_is_rejected():
    with pytest.raises(DomainError):
        cup("++")


def test_flatten_reads_tensor_as_two_layers():
    d = tensor(cap("+-"), cup("-+"))
    bottom, layers = flatten(d)
    assert bottom == w("+-")
    assert [(l.kind.value, l.position) for l in layers] == [("cap", 0), ("cup", 0)]
    assert [r.text for r in rows_of(bottom, layers)] == ["+-", "", "-+"]


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

def test_canonical_matching_aligns_right():
    m = canonical_matching(w("+-+"), w("+"))
    assert m.arcs == (((BOTTOM, 0), (BOTTOM, 1)), ((BOTTOM, 2), (TOP, 0)))
    assert canonical_matching(w("-+"), w("-+")).is_identity()


def test_canonical_matching_requires_a_common_suffix():
    with pytest.raises(DomainError):
        canonical_matching(w("+"), w("-"))


def test_matching_rejects_crossing_arcs():
    with pytest.raises(DomainError):
        Matching(w("+-+-"), EMPTY, (((BOTTOM, 0), (BOTTOM, 2)), ((BOTTOM, 1), (BOTTOM, 3))))


def test_enumerate_matchings():
    found = list(enumerate_matchings(w("+-"), w("+-")))
    assert len(found) == 2
    assert any(m.is_identity() for m in found)
    assert list(enumerate_matchings(w("+"), w("-"))) == []


def test_matching_tensor():
    m = Matching.identity(w("+")).tensor(Matching.identity(w("-")))
    assert m == Matching.identity(w("+-"))


def test_arcs_json_is_one_indexed():
    assert Matching.identity(w("+")).arcs_json() == [[["bottom", 1], ["top", 1]]]


# ---------------------------------------------------------------------------
# Normalisation
# ---------------------------------------------------------------------------

def test_crossings_normalize_to_zero():
    assert normalize(crossing("++")).is_zero()
    assert normalize(crossing("+-")).is_zero()
    assert normalize(crossing("-+"), 1).is_zero()


@pytest.mark.parametrize("source", [None, 0, 1])
def test_identity_on_squares_is_zero(source):
    for word in ("++", "--", "+--+", "-++"):
        assert normalize(identity_diagram(word), source).is_zero()


def test_identity_normal_form():
    m = normalize(identity_diagram("-+"), 0)
    assert m == Morphism.identity(w("-+"), 0)
    assert m.terms[0][0][0].is_identity()


def test_identity_outside_its_source_is_zero():
    assert normalize(identity_diagram("-+"), 1).is_zero()
    assert Morphism.identity(w("-+"), 1).is_zero()


def test_bubbles_in_the_labeled_category():
    assert normalize(CW, 0).scalar() == 1
    assert normalize(CW, 1).is_zero()
    assert normalize(CCW, 1).scalar() == 1
    assert normalize(CCW, 0).is_zero()


def test_bubbles_stay_formal_when_unlabeled():
    cw = normalize(CW)
    assert cw.terms[0][0][1] == Bubbles(cw=1)
    assert cw.label_values() == (1, 0)
    assert normalize(CCW).label_values() == (0, 1)


def test_bubble_sum_is_identity():
    total = normalize(CW) + normalize(CCW)
    assert same_morphism(total, Morphism.identity(EMPTY))
    assert not same_morphism(normalize(CW), Morphism.identity(EMPTY))


def test_mixed_bubbles_vanish():
    assert normalize(compose(CW, CCW)).is_zero()


def test_stacked_bubbles_count():
    m = normalize(compose(CW, CW))
    assert m.terms[0][0][1] == Bubbles(cw=2)
    assert m.label_values() == (1, 0)


def test_nested_bubble_evaluates():
    # A ccw loop inside a cw loop sits in a region labeled 1, where it is 1.
    inner = compose_all(
        cup("-+"),
        padded(w("-"), cup("+-"), w("+")),
        padded(w("-"), cap("+-"), w("+")),
        cap("-+"),
    )
    assert normalize(inner, 0).scalar() == 1
    assert normalize(inner).label_values() == (1, 0)


def test_trace_finds_loops():
    t = trace(CW)
    assert len(t.loops) == 1
    assert t.loops[0].clockwise and t.loops[0].outermost
    assert t.matching == Matching.empty()


def test_zigzag_straightens():
    d = compose(padded(EMPTY, cup("+-"), w("+")), padded(w("+"), cap("-+"), EMPTY))
    assert equal_morphisms(d, identity_diagram("+"))
    assert equal_morphisms(d, identity_diagram("+"), 0)


def test_equal_morphisms_checks_boundaries():
    with pytest.raises(BoundaryError):
        equal_morphisms(identity_diagram("+"), identity_diagram("-"))


def test_matching_to_diagram_realises_the_matching():
    for bottom, top in (("+-+", "+"), ("", "-+-+"), ("-+", "-+"), ("-+-+", "-+")):
        m = canonical_matching(w(bottom), w(top))
        assert normalize(matching_to_diagram(m), 0) == Morphism.single(m, 0)


def test_matching_to_diagram_with_bubbles():
    d = matching_to_diagram(Matching.empty(), Bubbles(ccw=2))
    assert normalize(d).terms[0][0][1] == Bubbles(ccw=2)
    with pytest.raises(DomainError):
        matching_to_diagram(Matching.identity(w("+")), Bubbles(cw=1))


def test_morphism_json():
    assert Morphism.identity(w("+"), 0).to_json() == {
        "bottom": "+",
        "top": "+",
        "source": 0,
        "terms": [{"coeff": "1", "arcs": [[["bottom", 1], ["top", 1]]], "bubbles": {"cw": 0, "ccw": 0}}],
    }


def test_morphism_linear_structure():
    one = Morphism.identity(w("+"), 0)
    assert (one + one).terms[0][1] == 2
    assert (one - one).is_zero()
    assert one.scale(sympy.Rational(1, 2)).terms[0][1] == sympy.Rational(1, 2)
    with pytest.raises(BoundaryError):
        one + Morphism.identity(w("-+"), 0)


def test_compose_and_tensor_morphisms():
    plus, minus = Morphism.identity(w("+")), Morphism.identity(w("-"))
    assert tensor_morphisms(plus, minus) == Morphism.identity(w("+-"))
    assert compose_morphisms(plus, plus) == plus
    with pytest.raises(BoundaryError):
        compose_morphisms(plus, minus)


def test_random_valid_diagrams_survive():
    for source, d in sample_valid_diagrams(seed=0, samples=50, max_len=6):
        m = normalize(d, source)
        assert not m.is_zero()
        assert m == Morphism.single(canonical_matching(d.bottom, d.top), source)


def test_sampling_is_seeded():
    assert sample_valid_diagrams(3, 10, 6) == sample_valid_diagrams(3, 10, 6)
    assert sample_crossing_diagrams(3, 10, 6) == sample_crossing_diagrams(3, 10, 6)


def test_crossing_diagrams_normalize_to_zero():
    for d in sample_crossing_diagrams(seed=0, samples=200, max_len=6):
        assert d.has_crossing()
        assert normalize(d).is_zero()


def split_diagram(rng, d):
    """Cut `d` between two of its layers into a lower and an upper half."""
    bottom, layers = flatten(d)
    k = int(rng.integers(len(layers) + 1))
    middle = rows_of(bottom, layers)[k]
    return from_layers(bottom, layers[:k]), from_layers(middle, layers[k:])


@pytest.mark.parametrize("source", [None, 0, 1])
def test_interchange_law(source):
    rng = make_rng(11)
    for _ in range(100):
        start = int(rng.integers(2)) if source is None else source
        right = random_valid_diagram(rng, start, 4)
        left = random_valid_diagram(rng, target(right.bottom, start), 4)
        a, b = split_diagram(rng, left)
        c, d = split_diagram(rng, right)
        side_by_side = tensor(compose(a, b), compose(c, d))
        layered = compose(tensor(a, c), tensor(b, d))
        assert same_morphism(normalize(side_by_side, source), normalize(layered, source))


@pytest.mark.parametrize("source", [None, 0, 1])
def test_interchange_law_with_a_crossing_factor(source):
    rng = make_rng(11)
    for _ in range(50):
        start = int(rng.integers(2)) if source is None else source
        a, b = split_diagram(rng, random_crossing_diagram(rng, 4))
        c, d = split_diagram(rng, random_valid_diagram(rng, start, 4))
        side_by_side = normalize(tensor(compose(a, b), compose(c, d)), source)
        layered = normalize(compose(tensor(a, c), tensor(b, d)), source)
        assert side_by_side.is_zero() and layered.is_zero()
        assert same_morphism(side_by_side, layered)


def assert_idempotent(m, source):
    rebuilt = Morphism.zero(m.bottom, m.top, source)
    for (matching, bubbles), coeff in m.terms:
        again = normalize(matching_to_diagram(matching, bubbles), source)
        assert again.terms == (((matching, bubbles), 1),)
        rebuilt = rebuilt + again.scale(coeff)
    assert rebuilt == m


@pytest.mark.parametrize("source", [None, 0, 1])
def test_normalize_is_idempotent(source):
    rng = make_rng(5)
    for _ in range(60):
        start = int(rng.integers(2)) if source is None else source
        assert_idempotent(normalize(random_valid_diagram(rng, start, 6), source), source)
    for d in (CW, CCW, compose(CW, CW), compose_all(CCW, CCW, CCW)):
        assert_idempotent(normalize(d, source), source)


# ---------------------------------------------------------------------------
# Hom spaces
# ---------------------------------------------------------------------------

def test_hom_dim_examples():
    assert hom_dim(w("+"), w("+"), 0) == 1
    assert hom_dim(w("+"), w("-"), 0) == 0
    assert hom_dim(w("-+"), EMPTY, 0) == 1
    assert hom_dim(EMPTY, EMPTY, 1) == 1
    assert hom_dim(w("-+"), EMPTY, 1) == 0


def test_hom_basis_has_at_most_one_matching():
    words = enumerate_words(5)
    for bottom in words:
        for top in words:
            for source in (0, 1):
                assert len(hom_basis(bottom, top, source)) <= 1


@pytest.mark.parametrize("source", [0, 1])
def test_hom_dim_is_0_or_1_to_length_8(source):
    words = enumerate_words(8)
    for bottom in words:
        for top in words:
            assert hom_dim(bottom, top, source) in (0, 1)


def test_hom_dim_from_source_1_matches_the_occupied_state():
    words = enumerate_words(6)
    for bottom in words:
        for top in words:
            assert hom_dim(bottom, top, 1) == inner_product_at(top, bottom, 1), (bottom, top)


def test_hom_dim_matches_fock_inner_product():
    words = enumerate_words(6)
    for bottom in words:
        for top in words:
            assert hom_dim(bottom, top, 0) == inner_product(top, bottom), (bottom, top)


# ---------------------------------------------------------------------------
# Reduction and check suites
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("word, atom", [
    ("", Atom.UNIT),
    ("+", Atom.PLUS),
    ("-", Atom.MINUS),
    ("+-+", Atom.PLUS),
    ("-+-+", Atom.MINUS_PLUS),
    ("+-+-", Atom.PLUS_MINUS),
    ("+-++", Atom.ZERO),
])
def test_reduce_word(word, atom):
    r = reduce_word(w(word))
    assert r.atom is atom
    assert atom_of_matrix(w(word)) is atom
    assert r.witness_holds() == (True, True)


def test_reduction_sweep():
    report = reduction_sweep(8)
    assert report.ok, report.failures()
    assert len(report.checks) == 2 ** 9 - 1


def test_direct_sum_witness():
    report = direct_sum_witness()
    assert report.ok, report.failures()
    assert report.passed_count == 7


def test_curl_check():
    report = curl_check()
    assert report.ok, report.failures()


def test_grothendieck_check():
    assert grothendieck_check(8).ok


def test_normal_order_check():
    assert normal_order_check(10).ok


def test_nilpotence_check():
    report = nilpotence_check(max_len=6, samples=200, seed=0)
    assert report.ok, report.failures()
