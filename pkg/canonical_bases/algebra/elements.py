from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations

from canonical_bases import weyl
from canonical_bases.coeff import (
    ONE_POLY,
    ZERO_POLY,
    LaurentPoly,
    RationalFunction,
    clear_denominators,
    psi,
    quantum_factorial,
)
from canonical_bases.utils.misc_utils import PreconditionError

# Elements of U+ live in the free word model. Two elements are equal in U+ iff
# they pair identically with every monomial F_v, since the radical of the
# pairing is the Serre ideal. Pairing, peeling the first F letter:
#
#     (E_u, F_j F_v) = sum over p with u_p = j of
#                      q^(-(wt(u_1 ... u_{p-1}), alpha_j)) (1 - q^2)^(-1) (E_{u minus p}, F_v)
#
# with (1, 1) = 1. delta_j is the adjoint of left multiplication by F_j.

_ONE_MINUS_Q2 = psi(1)


# class to hold a homogeneous element sum_u (nums[u] / den) E_u
class WordElt():
    __slots__ = ("rank", "weight", "nums", "den", "_shuffle")

    def __init__(self, rank, weight, nums=None, den=ONE_POLY, _checked=False):
        weight = tuple(weight)
        assert len(weight) == rank, "Weight {} does not match rank {}".format(weight, rank)
        clean = {}
        for word, num in (nums or {}).items():
            if num:
                word = tuple(word)
                if not _checked:
                    assert weyl.weight_of_word(word, rank) == weight, \
                        "Word {} does not have weight {}".format(word, weight)
                clean[word] = num
        self.rank = rank
        self.weight = weight
        self.nums, self.den = _reduce(clean, den)
        self._shuffle = None

    @classmethod
    def zero(cls, rank, weight):
        return cls(rank, weight)

    @classmethod
    def unit(cls, rank):
        return cls(rank, (0,) * rank, {(): ONE_POLY}, _checked=True)

    @classmethod
    def generator(cls, i, rank):
        assert 1 <= i <= rank, "Generator index {} outside 1..{}".format(i, rank)
        return cls(rank, weyl.simple_root(i, rank), {(i,): ONE_POLY}, _checked=True)

    @classmethod
    def from_word(cls, word, rank, coefficient=1):
        word = tuple(word)
        return cls.from_coefficients(rank, weyl.weight_of_word(word, rank), {word: coefficient})

    @classmethod
    def from_coefficients(cls, rank, weight, coefficients):
        words = list(coefficients)
        den, nums = clear_denominators(coefficients[w] for w in words)
        return cls(rank, weight, dict(zip(words, nums)), den)

    @property
    def trace(self):
        return sum(self.weight)

    def coefficient(self, word):
        num = self.nums.get(tuple(word))
        if num is None:
            return RationalFunction.coerce(0)
        return RationalFunction(num, self.den)

    def coefficients(self):
        return {word: RationalFunction(num, self.den) for word, num in sorted(self.nums.items())}

    def is_structurally_zero(self):
        return not self.nums

    def _check_compatible(self, other):
        if self.rank != other.rank:
            raise PreconditionError("Rank mismatch: {} vs {}".format(self.rank, other.rank))

    def __add__(self, other):
        self._check_compatible(other)
        if not other.nums:
            return self
        if not self.nums:
            return other
        assert self.weight == other.weight, "Cannot add elements of weights {} and {}".format(self.weight, other.weight)
        if self.den == other.den:
            nums = dict(self.nums)
            for word, num in other.nums.items():
                nums[word] = nums.get(word, ZERO_POLY) + num
            return WordElt(self.rank, self.weight, nums, self.den, _checked=True)
        den, (a, b) = _common_denominator(self.den, other.den)
        nums = {word: num * a for word, num in self.nums.items()}
        for word, num in other.nums.items():
            nums[word] = nums.get(word, ZERO_POLY) + num * b
        return WordElt(self.rank, self.weight, nums, den, _checked=True)

    def __neg__(self):
        return WordElt(self.rank, self.weight, {w: -n for w, n in self.nums.items()}, self.den, _checked=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RationalFunction.coerce(c)
        if c.is_zero():
            return WordElt.zero(self.rank, self.weight)
        return WordElt(self.rank, self.weight, {w: n * c.num for w, n in self.nums.items()},
                       self.den * c.den, _checked=True)

    def shift(self, k):
        # times q^k
        return WordElt(self.rank, self.weight, {w: n.shift(k) for w, n in self.nums.items()}, self.den, _checked=True)

    def __mul__(self, other):
        if not isinstance(other, WordElt):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        assert k >= 0, "Negative powers are not defined in U+"
        out = WordElt.unit(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self.nums:
            return "WordElt(0, weight={})".format(self.weight)
        parts = ["({})*E{}".format(c, "".join(str(i) for i in w)) for w, c in self.coefficients().items()]
        return " + ".join(parts)

    def to_json(self):
        return [[list(word), coef.to_json()] for word, coef in self.coefficients().items()]

    @classmethod
    def from_json(cls, data, rank, weight):
        return cls.from_coefficients(rank, weight, {tuple(w): RationalFunction.from_json(c) for w, c in data})


def _common_denominator(d1, d2):
    # (lcm, (lcm / d1, lcm / d2))
    s1, p1 = d1.to_sympy()
    s2, p2 = d2.to_sympy()
    lcm = p1.lcm(p2)
    if lcm.LC < 0:
        lcm = -lcm
    a = LaurentPoly.from_sympy(lcm.exquo(p1), -s1)
    b = LaurentPoly.from_sympy(lcm.exquo(p2), -s2)
    return LaurentPoly.from_sympy(lcm), (a, b)


def _reduce(nums, den):
    if not nums:
        return {}, ONE_POLY
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    low = den.lowest()
    if low:
        den = den.shift(-low)
        nums = {w: n.shift(-low) for w, n in nums.items()}
    if den == ONE_POLY:
        return nums, den
    _, g = den.to_sympy()
    for num in nums.values():
        if g == 1 or g == -1:
            break
        _, p = num.to_sympy()
        g = g.gcd(p)
    if g.LC < 0:
        g = -g
    if g != 1:
        den = LaurentPoly.from_sympy(den.to_sympy()[1].exquo(g))
        reduced = {}
        for w, n in nums.items():
            shift, p = n.to_sympy()
            reduced[w] = LaurentPoly.from_sympy(p.exquo(g), shift)
        nums = reduced
    if den.leading_coefficient() < 0:
        den = -den
        nums = {w: -n for w, n in nums.items()}
    return nums, den


def mul(x, y):
    # concatenation, no Serre relations applied to words
    x._check_compatible(y)
    weight = weyl.add_roots(x.weight, y.weight)
    nums = {}
    for u, a in x.nums.items():
        for v, b in y.nums.items():
            nums[u + v] = a * b
    return WordElt(x.rank, weight, nums, x.den * y.den, _checked=True)


def eta(x):
    # bar involution, words fixed
    return WordElt(x.rank, x.weight, {w: n.bar() for w, n in x.nums.items()}, x.den.bar(), _checked=True)


def sigma(x):
    # anti-automorphism fixing the generators
    return WordElt(x.rank, x.weight, {w[::-1]: n for w, n in x.nums.items()}, x.den, _checked=True)


# pairing

@lru_cache(maxsize=None)
def words_of_weight(weight):
    letters = [i for i, c in enumerate(weight, start=1) for _ in range(c)]
    if not letters:
        return ((),)
    return tuple(sorted(tuple(p) for p in multiset_permutations(letters)))


@lru_cache(maxsize=None)
def word_pairing(u, v):
    # (E_u, F_v) times (1 - q^2)^len(u)
    if len(u) != len(v):
        return ZERO_POLY
    if not u:
        return ONE_POLY
    j, rest = v[0], v[1:]
    total = ZERO_POLY
    exp = 0
    for p, letter in enumerate(u):
        if letter == j:
            sub = word_pairing(u[:p] + u[p + 1:], rest)
            if sub:
                total = total + sub.shift(exp)
        exp -= weyl.cartan_entry(letter, j)
    return total


def _pairing_denominator(length, den):
    return den * (_ONE_MINUS_Q2 ** length)


def pairing(x, fword):
    # Input: x - WordElt
    #        fword - letters of F_{j_1} ... F_{j_k}
    # Output: (x, F_fword), zero when the weights differ
    fword = tuple(fword)
    if weyl.weight_of_word(fword, x.rank) != x.weight:
        return RationalFunction.coerce(0)
    total = ZERO_POLY
    for u, num in x.nums.items():
        total = total + num * word_pairing(u, fword)
    return RationalFunction(total, _pairing_denominator(len(fword), x.den))


def shuffle_coordinates(x):
    # all nonzero (x, F_v) over words v of weight wt(x), memoized on x
    if x._shuffle is None:
        coords = {}
        den = _pairing_denominator(x.trace, x.den)
        for v in words_of_weight(x.weight):
            total = ZERO_POLY
            for u, num in x.nums.items():
                value = word_pairing(u, v)
                if value:
                    total = total + num * value
            if total:
                coords[v] = RationalFunction(total, den)
        x._shuffle = coords
    return x._shuffle


def inner(x, y):
    # (x, image of y under E_j -> F_j)
    if x.rank != y.rank or x.weight != y.weight:
        return RationalFunction.coerce(0)
    coords = shuffle_coordinates(x)
    total = RationalFunction.coerce(0)
    for v, num in y.nums.items():
        if v in coords:
            total = total + coords[v] * num
    return total / y.den


def is_zero(x):
    # vanishing modulo the radical of the pairing
    return not x.nums or not shuffle_coordinates(x)


def equal_in_algebra(x, y):
    if x.rank != y.rank:
        return False
    if x.weight != y.weight:
        return is_zero(x) and is_zero(y)
    return is_zero(x - y)


# q-derivations

def delta(i, x):
    # delta_i(E_u) = sum_{u_p = i} q^(-(wt(u_1..u_{p-1}), alpha_i)) (1 - q^2)^-1 E_{u minus p}
    assert 1 <= i <= x.rank, "Index {} outside 1..{}".format(i, x.rank)
    weight = list(x.weight)
    if weight[i - 1] == 0:
        return WordElt.zero(x.rank, x.weight)
    weight[i - 1] -= 1
    nums = {}
    for u, num in x.nums.items():
        exp = 0
        for p, letter in enumerate(u):
            if letter == i:
                w = u[:p] + u[p + 1:]
                nums[w] = nums.get(w, ZERO_POLY) + num.shift(exp)
            exp -= weyl.cartan_entry(letter, i)
    return WordElt(x.rank, tuple(weight), nums, x.den * _ONE_MINUS_Q2, _checked=True)


def divided_delta(i, x, r):
    # delta_i^r / [r]!
    y = x
    for _ in range(r):
        y = delta(i, y)
    return y.scale(RationalFunction(ONE_POLY, quantum_factorial(r)))
