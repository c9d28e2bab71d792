import itertools
from collections import deque

import numpy as np

from canonical_bases import weyl
from canonical_bases.utils.misc_utils import (
    DEFAULT_MAX_RANK,
    InvariantViolation,
    PreconditionError,
    check_rank,
)

# Parameter vectors are tuples of integers of length N, indexed like the
# word they belong to. Nothing in this module touches the algebra.


def r_move3(a, b, c):
    mu = min(a, c)
    return (b + c - mu, mu, a + b - mu)


def apply_move(m, position, kind):
    m = tuple(m)
    k = position - 1
    if kind == weyl.TWO_MOVE:
        return m[:k] + (m[k + 1], m[k]) + m[k + 2:]
    if kind == weyl.THREE_MOVE:
        return m[:k] + r_move3(*m[k:k + 3]) + m[k + 3:]
    raise PreconditionError("Unknown braid move kind {}".format(kind))


def reparametrize_along(source, path, m):
    # Follow an explicit move path from source, checking every move on the word
    # Input: source - reduced word for w0
    #        path - iterable of (position, kind)
    #        m - parameter over source
    # Output: parameter over the word at the end of the path
    word = tuple(source)
    m = tuple(m)
    for position, kind in path:
        word = weyl.apply_braid_move(word, position, kind)
        m = apply_move(m, position, kind)
    return m


def _check_vector(word, m):
    if len(m) != len(word):
        raise PreconditionError("Parameter {} does not match the length of {}".format(tuple(m), word))


def reparametrize(source, target, m):
    source, target = tuple(source), tuple(target)
    _check_vector(source, m)
    path = weyl.braid_move_path(source, target)
    return reparametrize_along(source, path, m)


def all_parametrizations(base, m, max_rank=DEFAULT_MAX_RANK):
    # Input: base - reduced word for w0
    #        m - parameter over base
    # Output: dict word -> image of m, for every reduced word of w0
    base = tuple(base)
    n = weyl.check_w0_word(base)
    check_rank(n, max_rank)
    _check_vector(base, m)
    graph = weyl.word_graph(n, max_rank)
    images = {base: tuple(m)}
    queue = deque([base])
    while queue:
        word = queue.popleft()
        for position, kind, other in graph[word]:
            if other not in images:
                images[other] = apply_move(images[word], position, kind)
                queue.append(other)
    return images


def weight_of_parameter(word, m):
    roots = weyl.roots_of_word(tuple(word))
    n = len(roots[0])
    weight = [0] * n
    for mt, beta in zip(m, roots):
        for j in range(n):
            weight[j] += mt * beta[j]
    return tuple(weight)


# walls

def walls(word):
    # 1-based k with i_k = i_{k+2} = i_{k+1} +- 1
    word = tuple(word)
    return [k + 1 for k in range(len(word) - 2)
            if word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1]


def _sign(x):
    return (x > 0) - (x < 0)


def wall_signs(word, image):
    return {k: _sign(image[k - 1] - image[k + 1]) for k in walls(word)}


def is_regular(base, m, max_rank=DEFAULT_MAX_RANK):
    for word, image in all_parametrizations(base, m, max_rank).items():
        if any(s == 0 for s in wall_signs(word, image).values()):
            return False
    return True


def separating_wall(base, m, m2, max_rank=DEFAULT_MAX_RANK):
    # first (word, k) whose wall has m and m2 strictly on opposite sides
    images = all_parametrizations(base, m, max_rank)
    images2 = all_parametrizations(base, m2, max_rank)
    for word in sorted(images):
        signs = wall_signs(word, images[word])
        signs2 = wall_signs(word, images2[word])
        for k in sorted(signs):
            if signs[k] * signs2[k] < 0:
                return (word, k)
    return None


def is_additive_pair(base, m, m2, max_rank=DEFAULT_MAX_RANK):
    total = tuple(a + b for a, b in zip(m, m2))
    images = all_parametrizations(base, m, max_rank)
    images2 = all_parametrizations(base, m2, max_rank)
    images_total = all_parametrizations(base, total, max_rank)
    for word, image in images_total.items():
        if tuple(a + b for a, b in zip(images[word], images2[word])) != image:
            return False
    return True


def same_linearity_domain(base, m, m2, max_rank=DEFAULT_MAX_RANK):
    if any(x < 0 for x in tuple(m) + tuple(m2)):
        raise PreconditionError("Linearity domains live in the nonnegative orthant")
    additive = is_additive_pair(base, m, m2, max_rank)
    weak_side = separating_wall(base, m, m2, max_rank) is None
    if additive != weak_side:
        raise InvariantViolation(
            "Additivity ({}) and wall sides ({}) disagree for {} and {} over {}".format(
                additive, weak_side, tuple(m), tuple(m2), tuple(base)))
    return additive


def samedomain_triple_check(base, parts, q, max_rank=DEFAULT_MAX_RANK):
    # PreconditionError when the hypotheses fail, False is a counterexample
    parts = [tuple(p) for p in parts]
    assert parts, "Need at least one part"
    total = tuple(sum(col) for col in zip(*parts))
    group = parts + [total]
    for a, b in itertools.combinations(group, 2):
        if not same_linearity_domain(base, a, b, max_rank):
            raise PreconditionError("Parts {} and {} do not share a linearity domain".format(a, b))
    if not same_linearity_domain(base, total, q, max_rank):
        raise PreconditionError("Sum {} and {} do not share a linearity domain".format(total, tuple(q)))
    everything = group + [tuple(q)]
    return all(same_linearity_domain(base, a, b, max_rank) for a, b in itertools.combinations(everything, 2))


# fan check at small rank

def wall_functionals(base, max_rank=DEFAULT_MAX_RANK):
    n = weyl.check_w0_word(tuple(base))
    return [(word, k) for word in weyl.sorted_reduced_words(n, max_rank) for k in walls(word)]


def sign_vector(base, m, max_rank=DEFAULT_MAX_RANK):
    images = all_parametrizations(base, m, max_rank)
    return tuple(_sign(images[word][k - 1] - images[word][k + 1])
                 for word, k in wall_functionals(base, max_rank))


def lattice_box(length, bound):
    grids = np.meshgrid(*[np.arange(bound + 1)] * length, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def linearity_domains(base, box, max_rank=DEFAULT_MAX_RANK):
    # Closed domains as lattice point sets keyed by chamber sign vector.
    # A point lies in the closure of a chamber when its sign vector agrees
    # with the chamber wherever it is nonzero.
    base = tuple(base)
    points = [tuple(int(x) for x in row) for row in lattice_box(len(base), box)]
    signs = {p: sign_vector(base, p, max_rank) for p in points}
    chambers = sorted({s for s in signs.values() if all(x != 0 for x in s)})
    domains = {}
    for chamber in chambers:
        domains[chamber] = [p for p in points
                            if all(x == 0 or x == c for x, c in zip(signs[p], chamber))]
    return domains


def _is_face(cone, sub, chamber, signs, length):
    # sub is a face of cone iff the inequalities vanishing on sub cut it out
    tight_walls = [j for j in range(len(chamber)) if all(signs[p][j] == 0 for p in sub)]
    tight_coords = [t for t in range(length) if all(p[t] == 0 for p in sub)]
    cut = {p for p in cone
           if all(signs[p][j] == 0 for j in tight_walls) and all(p[t] == 0 for t in tight_coords)}
    return cut == sub


def check_fan(base, box, max_rank=DEFAULT_MAX_RANK):
    # Input: base - reduced word for w0
    #        box - lattice box side
    # Output: dict with domain count, chambers, failures and the is_fan verdict
    base = tuple(base)
    domains = linearity_domains(base, box, max_rank)
    points = set().union(*[set(d) for d in domains.values()]) if domains else set()
    signs = {p: sign_vector(base, p, max_rank) for p in points}
    covered = len(points) == (box + 1) ** len(base)
    failures = []
    for (c1, d1), (c2, d2) in itertools.combinations(sorted(domains.items()), 2):
        common = set(d1) & set(d2)
        if not (_is_face(set(d1), common, c1, signs, len(base)) and _is_face(set(d2), common, c2, signs, len(base))):
            failures.append({"domains": [list(c1), list(c2)], "common_points": len(common)})
    return {
        "word": list(base),
        "box": box,
        "domain_count": len(domains),
        "chambers": [list(c) for c in sorted(domains)],
        "covers_box": covered,
        "failures": failures,
        "is_fan": covered and not failures,
    }
