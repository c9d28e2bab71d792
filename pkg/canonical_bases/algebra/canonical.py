from canonical_bases import weyl
from canonical_bases.algebra.elements import WordElt, equal_in_algebra, eta, sigma
from canonical_bases.algebra.pbw import (
    dual_pbw_coordinates,
    dual_pbw_monomial,
    exponents_of_weight,
    pbw_monomial,
    pbw_norms,
    to_pbw,
    weight_of_exponent,
)
from canonical_bases.coeff import ONE_POLY, ZERO_POLY, LaurentPoly, RationalFunction, proportionality
from canonical_bases.utils.misc_utils import InvariantViolation, PreconditionError, check_rank, check_weight

# Over a reduced word and a weight the bar involution is upper unitriangular
# in the PBW basis (lex-higher exponents) and the canonical basis is the
# unique bar-invariant basis with
#
#     B(m) = E(m) + sum_{n >lex m} D[m][n] E(n),    D[m][n] in qZ[q].
#
# The dual canonical basis uses C = (D^-1)^T against the dual PBW basis.


# class to hold the PBW transition data of one (word, weight) block
class TransitionTable():
    def __init__(self, word, weight, exponents, gram, bar, canonical, dual):
        self.word = tuple(word)
        self.weight = tuple(weight)
        self.exponents = list(exponents)
        self.gram = gram
        self.bar = bar
        self.canonical = canonical
        self.dual = dual

    def __eq__(self, other):
        if not isinstance(other, TransitionTable):
            return NotImplemented
        return (self.word == other.word and self.weight == other.weight and self.exponents == other.exponents
                and self.gram == other.gram and self.bar == other.bar
                and self.canonical == other.canonical and self.dual == other.dual)

    def __repr__(self):
        return "TransitionTable(word={}, weight={}, dim={})".format(self.word, self.weight, self.dim)

    @property
    def dim(self):
        return len(self.exponents)

    def index(self, m):
        try:
            return self.exponents.index(tuple(m))
        except ValueError:
            raise PreconditionError("Exponent {} does not have weight {} over {}".format(m, self.weight, self.word))

    def to_json(self):
        return {
            "word": list(self.word),
            "weight": list(self.weight),
            "exponents": [list(m) for m in self.exponents],
            "gram": [g.to_json() for g in self.gram],
            "bar": [[c.to_json() for c in row] for row in self.bar],
            "canonical": [[c.to_json() for c in row] for row in self.canonical],
            "dual": [[c.to_json() for c in row] for row in self.dual],
        }

    @classmethod
    def from_json(cls, data):
        def matrix(rows):
            return [[LaurentPoly.from_json(c) for c in row] for row in rows]
        return cls(
            word=tuple(data["word"]),
            weight=tuple(data["weight"]),
            exponents=[tuple(m) for m in data["exponents"]],
            gram=[RationalFunction.from_json(g) for g in data["gram"]],
            bar=matrix(data["bar"]),
            canonical=matrix(data["canonical"]),
            dual=matrix(data["dual"]),
        )


def _bar_matrix(word, exps):
    dim = len(exps)
    rows = []
    for i, m in enumerate(exps):
        coords = to_pbw(eta(pbw_monomial(word, m)), word).terms
        row = []
        for j, n in enumerate(exps):
            c = coords.get(n, RationalFunction.coerce(0))
            if not c.is_laurent():
                raise InvariantViolation("Bar coefficient at {}, {} over {} is not Laurent: {}".format(m, n, word, c))
            c = c.as_laurent()
            if j < i and c:
                raise InvariantViolation("Bar involution is not upper triangular at {}, {} over {}".format(m, n, word))
            if j == i and c != ONE_POLY:
                raise InvariantViolation("Bar involution has diagonal {} at {} over {}".format(c, m, word))
            row.append(c)
        rows.append(row)
    assert len(rows) == dim
    return rows


def _solve_canonical(word, exps, bar):
    dim = len(exps)
    d = [[ZERO_POLY] * dim for _ in range(dim)]
    for i in range(dim):
        d[i][i] = ONE_POLY
        for k in range(i + 1, dim):
            r = ZERO_POLY
            for j in range(i, k):
                if d[i][j] and bar[j][k]:
                    r = r + d[i][j].bar() * bar[j][k]
            # D - bar(D) = r forces r to be anti-invariant
            if r + r.bar():
                raise InvariantViolation("No bar-invariant solution at {}, {} over {}".format(exps[i], exps[k], word))
            d[i][k] = r.positive_part()
    return d


def _inverse_transpose(d):
    dim = len(d)
    inv = [[ZERO_POLY] * dim for _ in range(dim)]
    for i in reversed(range(dim)):
        inv[i][i] = ONE_POLY
        for j in range(i + 1, dim):
            total = ZERO_POLY
            for k in range(i + 1, j + 1):
                if d[i][k] and inv[k][j]:
                    total = total + d[i][k] * inv[k][j]
            inv[i][j] = -total
    return [[inv[j][i] for j in range(dim)] for i in range(dim)]


def compute_table(word, weight):
    # Input: word - reduced word for w0
    #        weight - nonnegative root lattice vector
    # Output: TransitionTable with bar, canonical and dual transition matrices
    word, weight = tuple(word), tuple(weight)
    exps = list(exponents_of_weight(word, weight))
    gram = list(pbw_norms(word, weight))
    bar = _bar_matrix(word, exps)
    canonical = _solve_canonical(word, exps, bar)
    dual = _inverse_transpose(canonical)
    for i, row in enumerate(dual):
        for j, c in enumerate(row):
            if j != i and c and not c.in_q_zq():
                raise InvariantViolation("Dual transition entry {} at {}, {} over {} is not in qZ[q]".format(
                    c, exps[i], exps[j], word))
    return TransitionTable(word, weight, exps, gram, bar, canonical, dual)


def table_problems(table):
    # triangularity and lattice conditions of a possibly cached table, empty when valid
    problems = []
    if table.exponents != sorted(table.exponents):
        problems.append("exponents are not in lex order")
    for i in range(table.dim):
        for j in range(table.dim):
            b, d, c = table.bar[i][j], table.canonical[i][j], table.dual[i][j]
            if i == j:
                if b != ONE_POLY or d != ONE_POLY or c != ONE_POLY:
                    problems.append("diagonal entry at {} is not 1".format(list(table.exponents[i])))
            elif j < i:
                if b or d:
                    problems.append("bar or canonical entry below the diagonal at {}, {}".format(i, j))
                if c and not c.in_q_zq():
                    problems.append("dual entry at {}, {} is not in qZ[q]".format(i, j))
            else:
                if c:
                    problems.append("dual entry above the diagonal at {}, {}".format(i, j))
                if d and not d.in_q_zq():
                    problems.append("canonical entry at {}, {} is not in qZ[q]".format(i, j))
    return problems


_TABLES = {}
_ACTIVE_CACHE = None


def use_table_cache(cache):
    # route table lookups through a persistent cache, None disables
    global _ACTIVE_CACHE
    _ACTIVE_CACHE = cache


def canonical_basis(word, weight, cache=None, weight_caps=None, max_rank=None):
    word, weight = tuple(word), tuple(weight)
    n = weyl.check_w0_word(word)
    if max_rank is not None:
        check_rank(n, max_rank)
    check_weight(n, weight, weight_caps)
    key = (word, weight)
    if key in _TABLES:
        return _TABLES[key]
    cache = cache if cache is not None else _ACTIVE_CACHE
    table = cache.load(word, weight) if cache is not None else None
    if table is None:
        table = compute_table(word, weight)
        if cache is not None:
            cache.store(table)
    _TABLES[key] = table
    return table


def clear_memo():
    _TABLES.clear()


def _table_for(word, m):
    word, m = tuple(word), tuple(m)
    if len(m) != len(word) or any(x < 0 for x in m):
        raise PreconditionError("{} is not an exponent over {}".format(m, word))
    return canonical_basis(word, weight_of_exponent(word, m))


def canonical_element(word, m):
    table = _table_for(word, m)
    row = table.canonical[table.index(m)]
    out = WordElt.zero(len(table.weight), table.weight)
    for n, c in zip(table.exponents, row):
        if c:
            out = out + pbw_monomial(table.word, n).scale(c)
    return out


def dualclass_factor(weight):
    # (-1)^tr q^(-(wt, wt)/2 - tr), the scalar of sigma eta on B*
    tr = sum(weight)
    exp = -weyl.cartan_pairing(weight, weight) // 2 - tr
    return RationalFunction.q_power(exp) * (-1) ** tr


def dual_canonical(word, m, verify=True):
    table = _table_for(word, m)
    i = table.index(m)
    out = WordElt.zero(len(table.weight), table.weight)
    for n, c in zip(table.exponents, table.dual[i]):
        if c:
            out = out + dual_pbw_monomial(table.word, n).scale(c)
    if verify:
        twisted = sigma(eta(out))
        if not equal_in_algebra(twisted, out.scale(dualclass_factor(table.weight))):
            raise InvariantViolation("Dual canonical element {} over {} fails the sigma-eta law".format(m, word))
    return out


def canonical_coordinates(x, word):
    # (x, B(l)) for every l, the coefficients of x in the dual canonical basis
    word = tuple(word)
    table = canonical_basis(word, x.weight)
    a = dual_pbw_coordinates(x, word)
    coords = {}
    for l, row in zip(table.exponents, table.canonical):
        total = RationalFunction.coerce(0)
        for n, c in zip(table.exponents, row):
            if c and n in a:
                total = total + a[n] * c
        if not total.is_zero():
            coords[l] = total
    return coords


def is_dual_canonical(x, word, strict=False):
    # Input: x - WordElt
    #        word - reduced word for w0
    #        strict - require the power of q to be 0
    # Output: (m, k) if x = q^k B*(m), else None
    word = tuple(word)
    coords = dual_pbw_coordinates(x, word)
    if not coords:
        return None
    m = max(coords)
    lead = proportionality(coords[m], 1)
    if lead is None or lead[0] != 1:
        return None
    k = lead[1]
    for n, c in coords.items():
        if n == m:
            continue
        c = c.shift(-k)
        if not c.is_laurent() or not c.as_laurent().in_q_zq():
            return None
    twisted = dual_pbw_coordinates(sigma(eta(x)), word)
    if set(twisted) != set(coords):
        return None
    ratios = {proportionality(twisted[n], coords[n]) for n in coords}
    if len(ratios) != 1 or None in ratios:
        return None
    if strict and k != 0:
        return None
    return (m, k)


def lusztig_parameter(x, word):
    found = is_dual_canonical(x, word)
    if found is None:
        raise PreconditionError("Element is not a dual canonical basis element up to a power of q")
    return found[0]
