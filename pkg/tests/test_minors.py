import pytest

from canonical_bases import weyl
from canonical_bases.algebra.canonical import dual_canonical
from canonical_bases.algebra.elements import equal_in_algebra
from canonical_bases.algebra.minors import (
    d_form,
    flag_minor,
    flag_minors,
    is_multiplicative,
    is_real,
    n_vector,
    order_generator,
    order_generators,
    q_commutation,
)
from canonical_bases.utils.misc_utils import CapacityError, PreconditionError


def test_d_form(a2_word):
    assert d_form(a2_word, (1, 0, 0), (0, 1, 0)) == 0
    assert d_form(a2_word, (0, 1, 0), (1, 0, 0)) == 1
    assert d_form(a2_word, (1, 0, 1), (1, 0, 0)) == 0
    assert d_form(a2_word, (1, 0, 0), (1, 0, 1)) == 1
    assert d_form(a2_word, (2, 0, 0), (1, 0, 0)) == 2
    with pytest.raises(PreconditionError):
        d_form(a2_word, (1, 0), (1, 0, 0))


def test_n_vector(a2_word, a2_other_word):
    assert [n_vector(a2_word, k) for k in (1, 2, 3)] == [(1, 0, 0), (0, 1, 0), (1, 0, 1)]
    assert n_vector(a2_other_word, 3) == (1, 0, 1)
    with pytest.raises(PreconditionError):
        n_vector(a2_word, 4)


def test_q_commutation(dual_e1, dual_e2):
    assert q_commutation(dual_e1, dual_e2) is None
    assert q_commutation(dual_e1, dual_e1) == 0
    x = dual_canonical((1, 2, 1), (0, 1, 0))
    assert q_commutation(x, x.shift(2)) == 0


def test_flag_minors_q_commute(a2_word):
    minors = [flag_minor(a2_word, k) for k in (1, 2, 3)]
    assert equal_in_algebra(minors[0], dual_canonical(a2_word, (1, 0, 0)))
    for k, k2, expected in [(1, 2, -1), (1, 3, 1), (2, 3, 0)]:
        assert q_commutation(minors[k - 1], minors[k2 - 1], a2_word) == expected
        n, n2 = n_vector(a2_word, k), n_vector(a2_word, k2)
        assert expected == d_form(a2_word, n, n2) - d_form(a2_word, n2, n)
        assert is_multiplicative(minors[k - 1], minors[k2 - 1], a2_word) is not None


def test_flag_minor_rejects_non_adapted_word():
    words = [w for w in weyl.sorted_reduced_words(3) if not weyl.is_adapted(w)]
    assert words
    with pytest.raises(PreconditionError):
        flag_minor(words[0], 1)


def test_flag_minors_rank_two():
    minors = flag_minors(2)
    assert {m.parameter for m in minors} == {(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 0, 1)}
    for minor in minors:
        assert minor.to_json()["parameter"] == list(minor.parameter)
        assert equal_in_algebra(minor.element(), dual_canonical(minor.word, n_vector(minor.word, minor.k)))
    with pytest.raises(CapacityError):
        flag_minors(5)


def test_real_and_multiplicative(a2_word, dual_e1, dual_e2):
    assert is_real(dual_e1, a2_word)
    assert is_multiplicative(dual_e1, dual_e1, a2_word) == ((2, 0, 0), -1)
    assert is_multiplicative(dual_e1, dual_e2, a2_word) is None


def test_order_generators(a2_word):
    assert order_generators(a2_word) == [
        ((1, 1, 0), []),
        ((1, 0, 1), [(0, 1, 0)]),
        ((0, 1, 1), []),
    ]
    with pytest.raises(PreconditionError):
        order_generator(a2_word, 2, 2)


def test_order_generators_stay_below(a3_word):
    for top, support in order_generators(a3_word):
        assert all(m < top for m in support)
