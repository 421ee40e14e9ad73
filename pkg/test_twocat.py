import pytest
import sympy

from fermicat.errors import DomainError
from fermicat.signwords import EMPTY, MINUS, PLUS, SignWord, apply_to_vacuum, enumerate_words
from fermicat.twocat import (
    act,
    categorical_inner,
    oracle_sweep,
    orthonormality_check,
    state,
    state_basis,
    state_matrix,
    validate_1morphism,
)


def test_validate_1morphism():
    q = validate_1morphism(SignWord.parse("-+"), 0)
    assert q.target == 0 and not q.is_zero
    assert validate_1morphism(SignWord.parse("+"), 0).target == 1
    assert validate_1morphism(SignWord.parse("+"), 1).is_zero
    assert validate_1morphism(SignWord.parse("+-"), 1).target == 1


def test_zero_1morphisms_are_the_words_that_kill_the_vacuum():
    for word in enumerate_words(10):
        assert validate_1morphism(word, 0).is_zero == apply_to_vacuum(word).is_zero(), word.display


def test_validate_rejects_other_labels():
    with pytest.raises(DomainError):
        validate_1morphism(EMPTY, 2)


def test_states():
    assert state(0).word == SignWord.parse("-+")
    assert state(1).word == SignWord.parse("+")
    with pytest.raises(DomainError):
        state(2)


def test_state_matrix_is_identity():
    assert state_matrix() == sympy.eye(2)


def test_categorical_inner():
    assert categorical_inner(state(0), state(0)) == 1
    assert categorical_inner(state(0), state(1)) == 0
    assert categorical_inner(state(1), validate_1morphism(SignWord.parse("+-+"), 0)) == 1
    assert categorical_inner(state(1), validate_1morphism(SignWord.parse("-"), 0)) == 0


def test_categorical_inner_needs_a_common_source():
    with pytest.raises(DomainError):
        categorical_inner(state(0), validate_1morphism(EMPTY, 1))


def test_act():
    assert act(PLUS, state(0)).target == 1
    assert act(MINUS, state(1)).word == state(0).word
    assert act(PLUS, state(1)).is_zero
    assert act(MINUS, state(0)).is_zero
    with pytest.raises(DomainError):
        act(0, state(0))


def test_state_basis():
    assert [w.text for w in state_basis(1, 3)] == ["+", "+-+"]
    assert [w.text for w in state_basis(0, 4)] == ["", "-+", "-+-+"]


def test_orthonormality_check():
    report = orthonormality_check(6)
    assert report.ok, report.failures()


def test_oracle_sweep_small():
    report = oracle_sweep(5)
    assert report.ok, report.failures()
    assert report.to_dict()["failed"] == 0


def test_oracle_sweep_at_length_8():
    report = oracle_sweep(8)
    assert report.ok, report.failures()
