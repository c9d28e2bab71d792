import pytest

from canonical_bases import tropical
from canonical_bases.algebra.canonical import (
    TransitionTable,
    canonical_basis,
    canonical_coordinates,
    canonical_element,
    dual_canonical,
    dualclass_factor,
    is_dual_canonical,
    lusztig_parameter,
    table_problems,
)
from canonical_bases.algebra.elements import WordElt, equal_in_algebra
from canonical_bases.algebra.pbw import exponents_of_weight
from canonical_bases.coeff import LaurentPoly, RationalFunction, psi, quantum_factorial
from canonical_bases.utils.misc_utils import CapacityError, PreconditionError


def q(k=1):
    return LaurentPoly.monomial(k)


def a2_weights(max_tr):
    return [(a, b) for a in range(max_tr + 1) for b in range(max_tr + 1 - a) if a + b > 0]


def divided_power(i, k):
    return WordElt.from_word((i,) * k, 2, RationalFunction(1, quantum_factorial(k)))


def a2_closed_form(weight):
    # E_i^(a) E_j^(b) E_i^(c) with b >= a + c, for both orders of i, j
    out = []
    for i, j in [(1, 2), (2, 1)]:
        outer, middle = weight[i - 1], weight[j - 1]
        for a in range(outer + 1):
            c = outer - a
            if middle >= a + c:
                out.append(divided_power(i, a) * divided_power(j, middle) * divided_power(i, c))
    return out


def test_rank_one_table():
    table = canonical_basis((1,), (3,))
    assert table.exponents == [(3,)]
    assert table.canonical == [[1]]
    assert table.dual == [[1]]


def test_a2_two_dimensional_table(a2_word):
    table = canonical_basis(a2_word, (1, 1))
    assert table.exponents == [(0, 1, 0), (1, 0, 1)]
    assert table.bar[0][1] == q() - q(-1)
    assert table.canonical[0][1] == q()
    assert table.canonical[1][0] == 0
    assert table.dual[1][0] == -q()
    assert table.dual[0][1] == 0
    assert table_problems(table) == []


def test_a2_canonical_elements(a2_word):
    assert equal_in_algebra(canonical_element(a2_word, (0, 1, 0)), WordElt.from_word((2, 1), 2))
    assert equal_in_algebra(canonical_element(a2_word, (1, 0, 1)), WordElt.from_word((1, 2), 2))


def test_a2_closed_form(a2_words):
    for word in a2_words:
        for weight in a2_weights(8):
            table = canonical_basis(word, weight)
            basis = [canonical_element(word, m) for m in table.exponents]
            closed = a2_closed_form(weight)
            assert all(any(equal_in_algebra(x, b) for b in basis) for x in closed)
            assert all(any(equal_in_algebra(x, b) for x in closed) for b in basis)


def test_dual_canonical_examples(a2_word, dual_e1):
    assert equal_in_algebra(dual_canonical(a2_word, (1, 0, 0)), dual_e1)
    expected = WordElt.from_coefficients(2, (1, 1), {(2, 1): psi(1), (1, 2): -q() * psi(1)})
    assert equal_in_algebra(dual_canonical(a2_word, (0, 1, 0)), expected)
    expected = WordElt.from_coefficients(2, (1, 1), {(1, 2): psi(1), (2, 1): -q() * psi(1)})
    assert equal_in_algebra(dual_canonical(a2_word, (1, 0, 1)), expected)


def test_dualclass_factor():
    assert dualclass_factor((1, 0)) == RationalFunction(-q(-2))
    assert dualclass_factor((1, 1)) == RationalFunction(q(-3))


def test_canonical_coordinates_are_dual(a2_word):
    for weight in a2_weights(3):
        for m in exponents_of_weight(a2_word, weight):
            assert canonical_coordinates(dual_canonical(a2_word, m), a2_word) == {m: RationalFunction(1)}


def test_is_dual_canonical(a2_words):
    for word in a2_words:
        for weight in a2_weights(4):
            for m in exponents_of_weight(word, weight):
                assert is_dual_canonical(dual_canonical(word, m), word, strict=True) == (m, 0)


def test_is_dual_canonical_up_to_q_power(a2_word):
    x = dual_canonical(a2_word, (1, 1, 1)).shift(3)
    assert is_dual_canonical(x, a2_word) == ((1, 1, 1), 3)
    assert is_dual_canonical(x, a2_word, strict=True) is None


def test_is_dual_canonical_rejects(a2_word, e1):
    y = dual_canonical(a2_word, (0, 1, 0)) + dual_canonical(a2_word, (1, 0, 1))
    assert is_dual_canonical(y, a2_word) is None
    assert is_dual_canonical(e1, a2_word) is None
    assert is_dual_canonical(dual_canonical(a2_word, (1, 0, 0)).scale(2), a2_word) is None


def test_lusztig_parameter_matches_reparametrization(a2_word, a2_other_word):
    assert lusztig_parameter(dual_canonical(a2_word, (0, 1, 0)), a2_other_word) == (1, 0, 1)
    for weight in a2_weights(4):
        for m in exponents_of_weight(a2_word, weight):
            x = dual_canonical(a2_word, m)
            assert lusztig_parameter(x, a2_other_word) == tropical.reparametrize(a2_word, a2_other_word, m)
            assert lusztig_parameter(x.shift(5), a2_word) == m


def test_lusztig_parameter_rejects(a2_word, e1):
    with pytest.raises(PreconditionError):
        lusztig_parameter(e1, a2_word)


def test_weight_cap(a2_word):
    with pytest.raises(CapacityError):
        canonical_basis(a2_word, (5, 4))
    with pytest.raises(PreconditionError):
        canonical_basis(a2_word, (-1, 2))


def test_exponent_of_wrong_weight(a2_word):
    table = canonical_basis(a2_word, (1, 1))
    with pytest.raises(PreconditionError):
        table.index((1, 0, 0))
    with pytest.raises(PreconditionError):
        dual_canonical(a2_word, (1, 0))


def test_rank_three_tables(a3_word):
    for weight in [(1, 1, 1), (1, 2, 1), (2, 1, 1)]:
        table = canonical_basis(a3_word, weight)
        assert table_problems(table) == []
        for m in table.exponents:
            assert is_dual_canonical(dual_canonical(a3_word, m), a3_word, strict=True) == (m, 0)


def test_table_json_round_trip(a2_word):
    table = canonical_basis(a2_word, (2, 2))
    loaded = TransitionTable.from_json(table.to_json())
    assert loaded == table
    assert loaded.dim == 3
