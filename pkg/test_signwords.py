import pytest
import sympy

from fermicat.errors import DomainError, ParseError
from fermicat.signwords import (
    EMPTY,
    AlgebraElement,
    FockVector,
    SignWord,
    admissible_sources,
    apply_to_vacuum,
    enumerate_words,
    grothendieck_class,
    hamiltonian_eigenvalue,
    hamiltonian_matrix,
    inner_product,
    inner_product_at,
    is_valid_from,
    matrix_rep,
    normal_order,
    region_labels,
    target,
    word_from_string,
)


def w(text):
    return word_from_string(text)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def test_word_from_string():
    assert w("") == EMPTY
    assert w("+-").signs == (1, -1)
    assert w("−+") == w("-+")


def test_word_from_string_names_the_bad_position():
    with pytest.raises(ParseError) as info:
        w("+a-")
    assert "position 2" in str(info.value)
    assert info.value.span.start == 1 and info.value.span.end == 2


def test_display_shows_unit():
    assert EMPTY.display == "1"
    assert w("+-").display == "+-"


def test_enumerate_words_is_shortlex():
    words = enumerate_words(2)
    assert [x.text for x in words] == ["", "+", "-", "++", "+-", "-+", "--"]
    assert len(enumerate_words(8)) == 2 ** 9 - 1


# ---------------------------------------------------------------------------
# Fock representation
# ---------------------------------------------------------------------------

def test_matrix_rep():
    assert matrix_rep(w("+")) == sympy.Matrix([[0, 0], [1, 0]])
    assert matrix_rep(w("-")) == sympy.Matrix([[0, 1], [0, 0]])
    assert matrix_rep(EMPTY) == sympy.eye(2)
    assert matrix_rep(w("++")) == sympy.zeros(2, 2)
    assert matrix_rep(w("--")) == sympy.zeros(2, 2)


def test_anticommutator():
    total = matrix_rep(w("+-")) + matrix_rep(w("-+"))
    assert total == sympy.eye(2)


def test_apply_to_vacuum():
    assert apply_to_vacuum(EMPTY) == FockVector(1, 0)
    assert apply_to_vacuum(w("+")) == FockVector(0, 1)
    assert apply_to_vacuum(w("-")).is_zero()
    assert apply_to_vacuum(w("-+")) == FockVector(1, 0)


@pytest.mark.parametrize("left, right, expected", [
    ("+", "+", 1),
    ("+", "-", 0),
    ("", "-+", 1),
    ("", "+", 0),
    ("+-+", "+", 1),
])
def test_inner_product(left, right, expected):
    assert inner_product(w(left), w(right)) == expected


def test_inner_product_at_occupied_state():
    assert inner_product_at(EMPTY, EMPTY, 1) == 1
    assert inner_product_at(w("-"), w("-"), 1) == 1
    assert inner_product_at(w("+"), w("+"), 1) == 0
    assert inner_product_at(w("+"), w("+"), 0) == inner_product(w("+"), w("+"))
    with pytest.raises(DomainError):
        inner_product_at(EMPTY, EMPTY, 2)


def test_fock_vectors_are_01_with_one_component():
    for word in enumerate_words(6):
        v = apply_to_vacuum(word)
        assert {v.c0, v.c1} <= {0, 1}
        assert not (v.c0 == 1 and v.c1 == 1)


# ---------------------------------------------------------------------------
# Normal ordering
# ---------------------------------------------------------------------------

def test_normal_order_examples():
    assert normal_order(w("-+")) == AlgebraElement.of(one=1, number=-1)
    assert normal_order(w("+-")) == AlgebraElement.of(number=1)
    assert normal_order(w("++")).is_zero()
    assert normal_order(EMPTY) == AlgebraElement.one()


def test_normal_order_matches_matrices_up_to_length_10():
    for word in enumerate_words(10):
        assert normal_order(word).to_matrix() == matrix_rep(word), word.display


def test_algebra_product_is_word_concatenation():
    a, b = w("-+-"), w("+-+")
    assert normal_order(a) * normal_order(b) == normal_order(a + b)


def test_algebra_element_str():
    assert str(normal_order(w("-+"))) == "1 - f†f"
    assert str(AlgebraElement.zero()) == "0"


def test_grothendieck_relation():
    relation = grothendieck_class(w("+-")) + grothendieck_class(w("-+"))
    assert relation == grothendieck_class(EMPTY)


# ---------------------------------------------------------------------------
# Hamiltonian
# ---------------------------------------------------------------------------

def test_hamiltonian():
    assert hamiltonian_eigenvalue(0) == sympy.Rational(-1, 2)
    assert hamiltonian_eigenvalue(1) == sympy.Rational(1, 2)
    assert hamiltonian_matrix() == sympy.diag(sympy.Rational(-1, 2), sympy.Rational(1, 2))
    with pytest.raises(DomainError):
        hamiltonian_eigenvalue(2)


# ---------------------------------------------------------------------------
# Region labels
# ---------------------------------------------------------------------------

def test_region_labels():
    assert region_labels(w("-+"), 0) == [0, 1, 0]
    assert region_labels(w("+"), 0) == [1, 0]
    assert is_valid_from(w("-+"), 0)
    assert not is_valid_from(w("-+"), 1)
    assert is_valid_from(w("+-"), 1)
    assert target(w("+"), 0) == 1


def test_nonempty_word_has_at_most_one_source():
    for word in enumerate_words(6):
        if word:
            assert len(admissible_sources(word)) <= 1
    assert admissible_sources(EMPTY) == (0, 1)


def test_signword_rejects_other_entries():
    with pytest.raises(ValueError):
        SignWord((1, 0))
