from functools import lru_cache

from canonical_bases import weyl
from canonical_bases.algebra.elements import WordElt, inner
from canonical_bases.coeff import (
    ONE_POLY,
    RationalFunction,
    one_minus_q2_inverse_power,
    proportionality,
    psi_product,
    quantum_factorial,
)
from canonical_bases.utils.misc_utils import InvariantViolation, PreconditionError

# Root vectors come from minimal pairs: for beta_t not simple take r < t < s
# with beta_r + beta_s = beta_t and r maximal, q-commute E_{beta_s} past
# E_{beta_r}, project away from the other PBW monomials of weight beta_t and
# normalize to (E_{beta_t}, E_{beta_t}) = (1 - q^2)^-1.


def _roots(word):
    return weyl.roots_of_word(tuple(word))


@lru_cache(maxsize=None)
def exponents_of_weight(word, weight):
    # all m in N^N with sum m_t beta_t = weight, increasing lex order
    roots = _roots(word)
    weight = tuple(weight)
    if len(weight) != len(roots[0]):
        raise PreconditionError("Weight {} does not match the rank of {}".format(weight, word))
    if any(c < 0 for c in weight):
        return tuple()
    out = []

    def extend(t, remaining, prefix):
        if t == len(roots):
            if not any(remaining):
                out.append(tuple(prefix))
            return
        beta = roots[t]
        top = min(remaining[j] // beta[j] for j in range(len(beta)) if beta[j])
        for c in range(top + 1):
            extend(t + 1, tuple(x - c * b for x, b in zip(remaining, beta)), prefix + [c])

    extend(0, weight, [])
    return tuple(sorted(out))


def unit_exponent(length, t):
    return tuple(1 if s == t else 0 for s in range(1, length + 1))


@lru_cache(maxsize=None)
def root_vector(word, t):
    word = tuple(word)
    roots = _roots(word)
    n = len(roots[0])
    beta = roots[t - 1]
    if sum(beta) == 1:
        return WordElt.generator(beta.index(1) + 1, n)

    r, s = max((r, s) for r in range(1, t) for s in range(t + 1, len(word) + 1)
               if weyl.add_roots(roots[r - 1], roots[s - 1]) == beta)
    e_r, e_s = root_vector(word, r), root_vector(word, s)
    x = e_s * e_r - (e_r * e_s).shift(-weyl.cartan_pairing(roots[r - 1], roots[s - 1]))

    own = unit_exponent(len(word), t)
    for m in exponents_of_weight(word, beta):
        if m == own:
            continue
        other = pbw_monomial(word, m)
        c = inner(x, other)
        if not c.is_zero():
            x = x - other.scale(c / inner(other, other))

    ratio = proportionality(inner(x, x), one_minus_q2_inverse_power(1))
    if ratio is None or ratio[0] != 1 or ratio[1] % 2:
        raise InvariantViolation("Root vector for {} over {} cannot be normalized".format(beta, word))
    return x.shift(-ratio[1] // 2)


@lru_cache(maxsize=None)
def pbw_monomial(word, m):
    # E(m) = E_{beta_1}^(m_1) ... E_{beta_N}^(m_N) in divided powers
    word, m = tuple(word), tuple(m)
    if len(m) != len(word):
        raise PreconditionError("Exponent {} does not match the length of {}".format(m, word))
    n = len(_roots(word)[0])
    out = WordElt.unit(n)
    for t, mt in enumerate(m, start=1):
        if mt:
            power = root_vector(word, t) ** mt
            out = out * power.scale(RationalFunction(ONE_POLY, quantum_factorial(mt)))
    return out


def dual_pbw_monomial(word, m):
    # E(m) / (E(m), E(m)) = psi(m) E(m)
    return pbw_monomial(word, m).scale(psi_product(m))


def weight_of_exponent(word, m):
    roots = _roots(word)
    total = tuple(0 for _ in roots[0])
    for mt, beta in zip(m, roots):
        total = weyl.add_roots(total, weyl.scale_root(mt, beta))
    return total


@lru_cache(maxsize=None)
def pbw_norms(word, weight):
    # Diagonal of the Gram block, after checking the block is diagonal
    # Input: word - reduced word for w0
    #        weight - weight of the block
    # Output: tuple of norms in exponents_of_weight order
    word, weight = tuple(word), tuple(weight)
    exps = exponents_of_weight(word, weight)
    monomials = [pbw_monomial(word, m) for m in exps]
    norms = []
    for a, (m, x) in enumerate(zip(exps, monomials)):
        for b in range(a + 1, len(exps)):
            if not inner(x, monomials[b]).is_zero():
                raise InvariantViolation("PBW monomials {} and {} over {} are not orthogonal".format(m, exps[b], word))
        norm = inner(x, x)
        if norm != RationalFunction(ONE_POLY, psi_product(m)):
            raise InvariantViolation("PBW monomial {} over {} has norm {}".format(m, word, norm))
        norms.append(norm)
    return tuple(norms)


# class to hold an element expanded in the PBW basis over one word
class PBWVector():
    def __init__(self, word, weight, terms=None):
        self.word = tuple(word)
        self.weight = tuple(weight)
        self.terms = dict(terms or {})

    def __eq__(self, other):
        return (isinstance(other, PBWVector) and self.word == other.word
                and self.weight == other.weight and self.terms == other.terms)

    def __repr__(self):
        return "PBWVector({}, {}, {})".format(self.word, self.weight, self.terms)

    def support(self):
        return sorted(self.terms)

    def to_word_elt(self):
        n = len(self.weight)
        out = WordElt.zero(n, self.weight)
        for m, c in sorted(self.terms.items()):
            out = out + pbw_monomial(self.word, m).scale(c)
        return out

    def to_json(self):
        return {
            "word": list(self.word),
            "weight": list(self.weight),
            "terms": [[list(m), c.to_json()] for m, c in sorted(self.terms.items())],
        }


def dual_pbw_coordinates(x, word):
    # a_m = (x, E(m)), so x = sum_m a_m E(m)*
    word = tuple(word)
    if weyl.check_w0_word(word) != x.rank:
        raise PreconditionError("Word {} does not have rank {}".format(word, x.rank))
    coords = {}
    for m in exponents_of_weight(word, x.weight):
        c = inner(x, pbw_monomial(word, m))
        if not c.is_zero():
            coords[m] = c
    return coords


def to_pbw(x, word):
    # coordinates of x in the PBW basis E(m) over word
    word = tuple(word)
    coords = dual_pbw_coordinates(x, word)
    norms = dict(zip(exponents_of_weight(word, x.weight), pbw_norms(word, x.weight)))
    return PBWVector(word, x.weight, {m: c / norms[m] for m, c in coords.items()})
