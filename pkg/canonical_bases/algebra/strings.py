from canonical_bases import weyl
from canonical_bases.algebra.canonical import is_dual_canonical
from canonical_bases.algebra.elements import WordElt, delta, is_zero
from canonical_bases.algebra.pbw import dual_pbw_coordinates, pbw_monomial, to_pbw
from canonical_bases.coeff import ONE_POLY, RationalFunction, quantum_factorial
from canonical_bases.utils.misc_utils import InvariantViolation, PreconditionError


def phi(i, x):
    # largest r with delta_i^r(x) != 0
    if is_zero(x):
        raise PreconditionError("phi is undefined on zero")
    r = 0
    y = delta(i, x)
    while not is_zero(y):
        r += 1
        y = delta(i, y)
    return r


def delta_max(i, x):
    # (delta_i^(r) x, r) with r = phi_i(x)
    if is_zero(x):
        raise PreconditionError("delta_max is undefined on zero")
    r = 0
    y = x
    while True:
        z = delta(i, y)
        if is_zero(z):
            break
        y, r = z, r + 1
    return y.scale(RationalFunction(ONE_POLY, quantum_factorial(r))), r


def _check_unit_residue(y, word):
    if any(y.weight):
        raise InvariantViolation("String along {} stops at weight {}".format(word, y.weight))
    if is_zero(y):
        raise InvariantViolation("String along {} ends in zero".format(word))


def string(x, word):
    # String parametrization of a dual canonical element
    # Input: x - WordElt, dual canonical up to a power of q
    #        word - reduced word for w0
    # Output: tuple (phi_{i_1}, phi_{i_2}, ...) peeled with divided deltas
    word = tuple(word)
    if is_dual_canonical(x, word) is None:
        raise PreconditionError("String parametrizations are defined on dual canonical elements")
    a = []
    y = x
    for letter in word:
        y, r = delta_max(letter, y)
        a.append(r)
    _check_unit_residue(y, word)
    return tuple(a)


def saito_rotation(x, i):
    # T_i^-1 on elements killed by delta_i. Over the least reduced word w
    # starting with i, E_w(0, m_2, ..., m_N) goes to E_{w'}(m_2, ..., m_N, 0)
    # with w' = (w_2, ..., w_N, n + 1 - i).
    n = x.rank
    if not 1 <= i <= n:
        raise PreconditionError("Index {} outside 1..{}".format(i, n))
    if not is_zero(delta(i, x)):
        raise PreconditionError("Saito rotation needs delta_{}(x) = 0".format(i))
    word = weyl.first_word_starting_with(i, n)
    rotated = word[1:] + (weyl.chevalley_dual(i, n),)
    weight = weyl.reflect(i, x.weight)
    out = WordElt.zero(n, weight)
    for m, c in sorted(to_pbw(x, word).terms.items()):
        if m[0]:
            raise InvariantViolation("Element killed by delta_{} has PBW term {} over {}".format(i, m, word))
        out = out + pbw_monomial(rotated, m[1:] + (0,)).scale(c)
    return out


def delta_max_coordinates(coords):
    # Dual PBW coordinates a_m = (y, E(m)) over a word starting with i.
    # E_i E(m) = [m_1 + 1] E(m + e_1), so delta_i^(r) with r = max m_1 keeps
    # the terms with m_1 = r and moves them to m_1 = 0 unchanged.
    if not coords:
        raise PreconditionError("delta_max is undefined on zero")
    r = max(m[0] for m in coords)
    return {(0,) + m[1:]: c for m, c in coords.items() if m[0] == r}, r


def rotate_coordinates(coords):
    # T_i^-1 in dual PBW coordinates; the psi norms are permutation invariant
    for m in coords:
        if m[0]:
            raise InvariantViolation("Element killed by delta has dual PBW term {}".format(m))
    return {m[1:] + (0,): c for m, c in coords.items()}


def pbw_string(x, word):
    # Lusztig parameter read off by divided deltas and rotations, carried in
    # dual PBW coordinates over the successively rotated words
    word = tuple(word)
    n = weyl.check_w0_word(word)
    if n != x.rank:
        raise PreconditionError("Word {} does not have rank {}".format(word, x.rank))
    coords = dual_pbw_coordinates(x, word)
    if is_dual_canonical(x, word) is None:
        raise PreconditionError("PBW strings are defined on dual canonical elements")
    out = []
    for step in range(len(word)):
        coords, r = delta_max_coordinates(coords)
        out.append(r)
        if step + 1 < len(word):
            coords = rotate_coordinates(coords)
    if list(coords) != [(0,) * len(word)]:
        raise InvariantViolation("PBW string along {} leaves dual PBW terms {}".format(word, sorted(coords)))
    return tuple(out)
