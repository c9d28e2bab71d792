from canonical_bases import tropical, weyl
from canonical_bases.algebra.canonical import dual_canonical, is_dual_canonical
from canonical_bases.algebra.elements import is_zero
from canonical_bases.algebra.pbw import root_vector, to_pbw, unit_exponent
from canonical_bases.coeff import proportionality
from canonical_bases.utils.misc_utils import DEFAULT_MAX_RANK, PreconditionError, check_rank


def q_commutation(x, y, word=None):
    # n with y x = q^n x y, or None when x and y do not q-commute
    if x.rank != y.rank:
        raise PreconditionError("Rank mismatch: {} vs {}".format(x.rank, y.rank))
    word = weyl.seed_word(x.rank) if word is None else tuple(word)
    xy = to_pbw(x * y, word).terms
    yx = to_pbw(y * x, word).terms
    if not xy and not yx:
        return 0
    if set(xy) != set(yx):
        return None
    ratios = {proportionality(yx[m], xy[m]) for m in xy}
    if len(ratios) != 1:
        return None
    (ratio,) = ratios
    if ratio is None or ratio[0] != 1:
        return None
    return ratio[1]


def d_form(word, m, n):
    # d(m, n) = sum_{j < i} (beta_i, beta_j) m_i n_j + sum_i m_i n_i
    roots = weyl.roots_of_word(tuple(word))
    if len(m) != len(roots) or len(n) != len(roots):
        raise PreconditionError("Exponents must have length {}".format(len(roots)))
    total = sum(a * b for a, b in zip(m, n))
    for i in range(len(roots)):
        if not m[i]:
            continue
        for j in range(i):
            if n[j]:
                total += weyl.cartan_pairing(roots[i], roots[j]) * m[i] * n[j]
    return total


def n_vector(word, k):
    # ones at every position s < k carrying the letter i_k
    word = tuple(word)
    if not 1 <= k <= len(word):
        raise PreconditionError("Position {} outside 1..{}".format(k, len(word)))
    letter = word[k - 1]
    return tuple(1 if s < k and word[s] == letter else 0 for s in range(len(word)))


def flag_minor(word, k):
    word = tuple(word)
    weyl.check_w0_word(word)
    if not weyl.is_adapted(word):
        raise PreconditionError("{} is not adapted to any quiver".format(word))
    return dual_canonical(word, n_vector(word, k))


# class to hold a flag minor together with its parameter over a base word
class FlagMinor():
    def __init__(self, word, k, parameter):
        self.word = tuple(word)
        self.k = k
        self.parameter = tuple(parameter)

    def __eq__(self, other):
        return (isinstance(other, FlagMinor) and self.word == other.word
                and self.k == other.k and self.parameter == other.parameter)

    def __hash__(self):
        return hash((self.word, self.k, self.parameter))

    def __repr__(self):
        return "FlagMinor(word={}, k={}, parameter={})".format(self.word, self.k, self.parameter)

    def element(self):
        return flag_minor(self.word, self.k)

    def to_json(self):
        return {"word": list(self.word), "k": self.k, "parameter": list(self.parameter)}


def flag_minors(rank, base=None, max_rank=DEFAULT_MAX_RANK):
    # Input: rank - n
    #        base - word the parameters are expressed over, seed word when None
    # Output: flag minors of all adapted words, one per distinct parameter over base
    check_rank(rank, max_rank)
    base = weyl.seed_word(rank) if base is None else tuple(base)
    found = {}
    for word in sorted(weyl.adapted_words(rank)):
        for k in range(1, len(word) + 1):
            parameter = tropical.reparametrize(word, base, n_vector(word, k))
            if parameter not in found:
                found[parameter] = FlagMinor(word, k, parameter)
    return [found[p] for p in sorted(found)]


def is_multiplicative(x, y, word):
    # (m, k) with x y = q^k B*(m), or None
    return is_dual_canonical(x * y, word)


def is_real(x, word):
    return is_multiplicative(x, x, word) is not None


def order_generator(word, k, k2):
    # PBW support of E_k E_k2 - q^((beta_k2, beta_k)) E_k2 E_k for k < k2.
    # Output: (e_k + e_k2, support), every support exponent lies below the first
    word = tuple(word)
    if not 1 <= k < k2 <= len(word):
        raise PreconditionError("Need 1 <= k < k2 <= {}, got {}, {}".format(len(word), k, k2))
    roots = weyl.roots_of_word(word)
    e_k, e_k2 = root_vector(word, k), root_vector(word, k2)
    x = e_k * e_k2 - (e_k2 * e_k).shift(weyl.cartan_pairing(roots[k2 - 1], roots[k - 1]))
    top = tuple(a + b for a, b in zip(unit_exponent(len(word), k), unit_exponent(len(word), k2)))
    if is_zero(x):
        return top, []
    return top, to_pbw(x, word).support()


def order_generators(word):
    word = tuple(word)
    return [order_generator(word, k, k2) for k in range(1, len(word) + 1) for k2 in range(k + 1, len(word) + 1)]
