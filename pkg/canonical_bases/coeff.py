import math
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

# Exact coefficients over Q(q). Laurent polynomials are sparse
# {exponent: coefficient} maps. Rational functions keep a reduced pair whose
# denominator has lowest exponent 0 and positive leading coefficient, so equal
# values share one representation.

_POLY_RING, _ = ring("q", ZZ)


# class to hold an integer Laurent polynomial in q
class LaurentPoly():
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coef in terms.items():
                if coef:
                    clean[int(exp)] = int(coef)
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls({exp: coef})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError("cannot coerce {} to LaurentPoly".format(type(value).__name__))

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def lowest(self):
        assert self.terms, "zero polynomial has no lowest exponent"
        return min(self.terms)

    def highest(self):
        assert self.terms, "zero polynomial has no highest exponent"
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.highest()]

    def coefficient(self, exp):
        return self.terms.get(exp, 0)

    def content(self):
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def is_polynomial(self):
        # element of Z[q]
        return all(e >= 0 for e in self.terms)

    def in_q_zq(self):
        # element of qZ[q]
        return all(e > 0 for e in self.terms)

    def is_bar_invariant(self):
        return self == self.bar()

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0, "negative powers of a LaurentPoly are RationalFunctions"
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        # times q^k
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def scale(self, c):
        return LaurentPoly({e: c * v for e, v in self.terms.items()})

    def exact_div_int(self, c):
        assert all(v % c == 0 for v in self.terms.values()), "inexact integer division"
        return LaurentPoly({e: v // c for e, v in self.terms.items()})

    def bar(self):
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def positive_part(self):
        return LaurentPoly({e: c for e, c in self.terms.items() if e > 0})

    def to_sympy(self):
        # (shift, poly) with self == q^shift * poly and poly in Z[q]
        if not self.terms:
            return 0, _POLY_RING.zero
        low = self.lowest()
        return low, _POLY_RING.from_dict({(e - low,): c for e, c in self.terms.items()})

    @classmethod
    def from_sympy(cls, poly, shift=0):
        return cls({monom[0] + shift: int(c) for monom, c in poly.terms()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, RationalFunction):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append("{}".format(c))
            elif c == 1:
                parts.append("q^{}".format(e))
            elif c == -1:
                parts.append("-q^{}".format(e))
            else:
                parts.append("{}*q^{}".format(c, e))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {str(e): str(c) for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data.items()})


ONE_POLY = LaurentPoly.constant(1)
ZERO_POLY = LaurentPoly()


# class to hold a reduced quotient of Laurent polynomials
class RationalFunction():
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, _normalized=False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value, ONE_POLY, _normalized=True)
        if isinstance(value, int):
            return cls(LaurentPoly.constant(value), ONE_POLY, _normalized=True)
        raise TypeError("cannot coerce {} to RationalFunction".format(type(value).__name__))

    @classmethod
    def q_power(cls, k):
        return cls(LaurentPoly.monomial(k), ONE_POLY, _normalized=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den == ONE_POLY

    def as_laurent(self):
        assert self.is_laurent(), "{} is not a Laurent polynomial".format(self)
        return self.num

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k):
        # the denominator is prime to q so only the numerator moves
        return RationalFunction(self.num.shift(k), self.den, _normalized=True)

    def bar(self):
        return RationalFunction(self.num.bar(), self.den.bar())

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_laurent():
            return repr(self.num)
        return "({}) / ({})".format(self.num, self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    low = den.lowest()
    if low:
        num, den = num.shift(-low), den.shift(-low)
    if den.is_monomial():
        d = den.coefficient(0)
        g = math.gcd(num.content(), d)
        if d < 0:
            g = -g
        return num.exact_div_int(g), LaurentPoly.constant(d // g)
    shift, p = num.to_sympy()
    _, d = den.to_sympy()
    _, p_red, d_red = p.cofactors(d)
    num = LaurentPoly.from_sympy(p_red, shift)
    den = LaurentPoly.from_sympy(d_red)
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


ZERO = RationalFunction(ZERO_POLY, ONE_POLY, _normalized=True)
ONE = RationalFunction(ONE_POLY, ONE_POLY, _normalized=True)
Q = RationalFunction.q_power(1)


def bar(x):
    # q -> q^-1 on ints, Laurent polynomials and rational functions
    if isinstance(x, int):
        return x
    return x.bar()


def quantum_integer(k):
    # [k] = q^(k-1) + q^(k-3) + ... + q^(-k+1)
    assert k >= 0, "quantum integers are indexed by k >= 0"
    return LaurentPoly({k - 1 - 2 * j: 1 for j in range(k)})


@lru_cache(maxsize=None)
def quantum_factorial(m):
    assert m >= 0, "quantum factorial needs m >= 0"
    out = ONE_POLY
    for k in range(1, m + 1):
        out = out * quantum_integer(k)
    return out


@lru_cache(maxsize=None)
def psi(m):
    # prod_{k=1..m} (1 - q^(2k))
    assert m >= 0, "psi needs m >= 0"
    out = ONE_POLY
    for k in range(1, m + 1):
        out = out * LaurentPoly({0: 1, 2 * k: -1})
    return out


def psi_product(exponents):
    out = ONE_POLY
    for m in exponents:
        out = out * psi(m)
    return out


def proportionality(x, y):
    # Input: x, y - scalars
    # Output: (s, n) with x == s * q^n * y and s = +-1, else None
    x = RationalFunction.coerce(x)
    y = RationalFunction.coerce(y)
    if x.is_zero() and y.is_zero():
        return (1, 0)
    if x.is_zero() or y.is_zero():
        return None
    ratio = x / y
    if not ratio.is_laurent() or not ratio.num.is_monomial():
        return None
    (exp, coef), = ratio.num.terms.items()
    if coef not in (1, -1):
        return None
    return (coef, exp)


def clear_denominators(values):
    # Input: values - iterable of scalars
    # Output: (D, [D * v for v in values]) with D the lcm of the denominators,
    #         every D * v a Laurent polynomial
    values = [RationalFunction.coerce(v) for v in values]
    lcm = _POLY_RING.one
    for v in values:
        if not v.is_laurent():
            _, d = v.den.to_sympy()
            lcm = lcm.lcm(d)
    if lcm.LC < 0:
        lcm = -lcm
    D = LaurentPoly.from_sympy(lcm)
    if D == ONE_POLY:
        return D, [v.num for v in values]
    scaled = []
    for v in values:
        _, d = v.den.to_sympy()
        cofactor = LaurentPoly.from_sympy(lcm.exquo(d))
        scaled.append(v.num * cofactor)
    return D, scaled


def one_minus_q2_inverse_power(k):
    return RationalFunction(ONE_POLY, psi(1) ** k)
