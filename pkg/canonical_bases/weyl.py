import itertools
from collections import deque
from functools import lru_cache

from canonical_bases.utils.misc_utils import (
    DEFAULT_MAX_RANK,
    InvariantViolation,
    PreconditionError,
    check_rank,
)

# Words are tuples of letters in 1..n, roots and weights are tuples of
# coordinates over the simple roots. Positions inside a word are 1-based.

TWO_MOVE = 2
THREE_MOVE = 3


def longest_length(n):
    return n * (n + 1) // 2


def rank_from_length(length):
    n = 0
    while longest_length(n) < length:
        n += 1
    if longest_length(n) != length:
        raise PreconditionError("No rank has a longest element of length {}".format(length))
    return n


def seed_word(n):
    # (1, 2,1, 3,2,1, ...), a reduced word for w0
    return tuple(letter for k in range(1, n + 1) for letter in range(k, 0, -1))


# permutations

def permutation_of_word(word, n):
    # one-line notation of s_{i_1} ... s_{i_k} acting on 1..n+1
    perm = list(range(1, n + 2))
    for i in word:
        assert 1 <= i <= n, "Letter {} outside 1..{}".format(i, n)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def inversions(perm):
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def is_reduced(word, n):
    return inversions(permutation_of_word(word, n)) == len(word)


def is_reduced_w0(word, n):
    return len(word) == longest_length(n) and all(1 <= i <= n for i in word) and is_reduced(word, n)


def check_w0_word(word, n=None):
    # Validate a reduced word for w0
    # Input: word - tuple of letters
    #        n - expected rank, inferred from the length when None
    # Output: rank n
    word = tuple(word)
    if n is None:
        n = rank_from_length(len(word))
    if not is_reduced_w0(word, n):
        raise PreconditionError("{} is not a reduced word for w0 of rank {}".format(word, n))
    return n


# braid moves

def apply_braid_move(word, position, kind):
    word = tuple(word)
    k = position - 1
    if kind == TWO_MOVE:
        if k < 0 or k + 1 >= len(word) or abs(word[k] - word[k + 1]) < 2:
            raise PreconditionError("No 2-move at position {} of {}".format(position, word))
        return word[:k] + (word[k + 1], word[k]) + word[k + 2:]
    if kind == THREE_MOVE:
        if k < 0 or k + 2 >= len(word):
            raise PreconditionError("No 3-move at position {} of {}".format(position, word))
        i, j, l = word[k:k + 3]
        if i != l or abs(i - j) != 1:
            raise PreconditionError("No 3-move at position {} of {}".format(position, word))
        return word[:k] + (j, i, j) + word[k + 3:]
    raise PreconditionError("Unknown braid move kind {}".format(kind))


def braid_moves(word):
    # all applicable moves as (position, kind, resulting word)
    moves = []
    for k in range(len(word) - 1):
        if abs(word[k] - word[k + 1]) >= 2:
            moves.append((k + 1, TWO_MOVE, apply_braid_move(word, k + 1, TWO_MOVE)))
        if k + 2 < len(word) and word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1:
            moves.append((k + 1, THREE_MOVE, apply_braid_move(word, k + 1, THREE_MOVE)))
    return moves


@lru_cache(maxsize=None)
def _reduced_words_w0(n):
    start = seed_word(n)
    seen = {start}
    queue = deque([start])
    while queue:
        word = queue.popleft()
        for _, _, other in braid_moves(word):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return frozenset(seen)


def reduced_words_w0(n, max_rank=DEFAULT_MAX_RANK):
    check_rank(n, max_rank)
    return _reduced_words_w0(n)


def sorted_reduced_words(n, max_rank=DEFAULT_MAX_RANK):
    return tuple(sorted(reduced_words_w0(n, max_rank)))


@lru_cache(maxsize=None)
def _word_graph(n):
    graph = {}
    for word in _reduced_words_w0(n):
        # neighbours sorted by resulting word for a deterministic BFS
        graph[word] = tuple(sorted(braid_moves(word), key=lambda move: move[2]))
    return graph


def word_graph(n, max_rank=DEFAULT_MAX_RANK):
    # Braid-move graph on the reduced words of w0
    # Input: n - rank
    #        max_rank - configured cap
    # Output: dict word -> tuple of (position, kind, neighbour), neighbours sorted
    check_rank(n, max_rank)
    return _word_graph(n)


def braid_move_path(source, target):
    # shortest list of (position, kind) moves turning source into target
    source, target = tuple(source), tuple(target)
    n = check_w0_word(source)
    if check_w0_word(target) != n:
        raise PreconditionError("Words {} and {} have different ranks".format(source, target))
    if source == target:
        return []
    graph = _word_graph(n)
    parent = {source: None}
    queue = deque([source])
    while queue:
        word = queue.popleft()
        for position, kind, other in graph[word]:
            if other in parent:
                continue
            parent[other] = (word, position, kind)
            if other == target:
                queue.clear()
                break
            queue.append(other)
    path = []
    word = target
    while parent[word] is not None:
        previous, position, kind = parent[word]
        path.append((position, kind))
        word = previous
    return path[::-1]


# roots

def simple_root(i, n):
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def cartan_entry(i, j):
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def cartan_pairing(a, b):
    assert len(a) == len(b), "Roots of different ranks"
    n = len(a)
    total = 0
    for i in range(n):
        if not a[i]:
            continue
        total += 2 * a[i] * b[i]
        if i > 0:
            total -= a[i] * b[i - 1]
        if i + 1 < n:
            total -= a[i] * b[i + 1]
    return total


def reflect(i, root):
    n = len(root)
    c = cartan_pairing(root, simple_root(i, n))
    return tuple(x - c * (1 if j == i else 0) for j, x in enumerate(root, start=1))


def add_roots(a, b):
    return tuple(x + y for x, y in zip(a, b))


def scale_root(c, a):
    return tuple(c * x for x in a)


def positive_roots(n):
    # interval sums alpha_a + ... + alpha_b
    return [tuple(1 if a <= j <= b else 0 for j in range(1, n + 1))
            for a in range(1, n + 1) for b in range(a, n + 1)]


@lru_cache(maxsize=None)
def roots_of_word(word):
    # beta_t = s_{i_1} ... s_{i_{t-1}} alpha_{i_t}
    word = tuple(word)
    n = check_w0_word(word)
    roots = []
    for t, letter in enumerate(word):
        root = simple_root(letter, n)
        for i in reversed(word[:t]):
            root = reflect(i, root)
        roots.append(root)
    return tuple(roots)


def weight_of_word(word, n):
    counts = [0] * n
    for i in word:
        counts[i - 1] += 1
    return tuple(counts)


def chevalley_dual(i, n):
    assert 1 <= i <= n, "Index {} outside 1..{}".format(i, n)
    return n + 1 - i


def first_word_starting_with(i, n):
    # lexicographically least reduced word for w0 whose first letter is i
    return min(w for w in _reduced_words_w0(n) if w[0] == i)


# quivers

class Quiver():
    # orientation[e] describes the edge {e+1, e+2}: "lr" is e+1 -> e+2
    def __init__(self, orientation):
        orientation = tuple(orientation)
        for edge in orientation:
            if edge not in ("lr", "rl"):
                raise PreconditionError("Edge direction must be 'lr' or 'rl', got {}".format(edge))
        self.orientation = orientation

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.orientation == other.orientation

    def __hash__(self):
        return hash(self.orientation)

    def __repr__(self):
        return "Quiver({})".format(",".join(self.orientation))

    @property
    def rank(self):
        return len(self.orientation) + 1

    def is_sink(self, v):
        if v > 1 and self.orientation[v - 2] != "lr":
            return False
        if v < self.rank and self.orientation[v - 1] != "rl":
            return False
        return True

    def sinks(self):
        return [v for v in range(1, self.rank + 1) if self.is_sink(v)]

    def reflect(self, v):
        flip = {"lr": "rl", "rl": "lr"}
        edges = list(self.orientation)
        for e in (v - 2, v - 1):
            if 0 <= e < len(edges):
                edges[e] = flip[edges[e]]
        return Quiver(edges)

    def to_json(self):
        return list(self.orientation)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        return cls(x for x in text.split(",") if x) if text else cls(())


def all_quivers(n):
    return [Quiver(o) for o in itertools.product(("lr", "rl"), repeat=n - 1)]


def _extend_sink_word(quiver, prefix, n):
    # depth first over sinks, smallest first, keeping the prefix reduced
    if len(prefix) == longest_length(n):
        return prefix
    for v in quiver.sinks():
        word = prefix + (v,)
        if not is_reduced(word, n):
            continue
        found = _extend_sink_word(quiver.reflect(v), word, n)
        if found is not None:
            return found
    return None


@lru_cache(maxsize=None)
def adapted_word(quiver):
    # Least reduced word for w0 read off as a sequence of sinks of quiver
    # Input: quiver - Quiver of type A_n
    # Output: reduced word for w0 adapted to quiver
    n = quiver.rank
    word = _extend_sink_word(quiver, (), n)
    if word is None or not is_reduced_w0(word, n):
        raise InvariantViolation("No reduced sink sequence for w0 adapted to {}".format(quiver))
    return word


def is_sink_sequence(word, quiver):
    current = quiver
    for v in word:
        if not current.is_sink(v):
            return False
        current = current.reflect(v)
    return True


@lru_cache(maxsize=None)
def commutation_class(word):
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for _, kind, other in braid_moves(current):
            if kind == TWO_MOVE and other not in seen:
                seen.add(other)
                queue.append(other)
    return frozenset(seen)


@lru_cache(maxsize=None)
def adapted_words(n):
    words = set()
    for quiver in all_quivers(n):
        words |= commutation_class(adapted_word(quiver))
    return frozenset(words)


def quiver_of_word(word):
    word = tuple(word)
    n = rank_from_length(len(word))
    for quiver in all_quivers(n):
        if word in commutation_class(adapted_word(quiver)):
            return quiver
    return None


def is_adapted(word):
    word = tuple(word)
    return word in adapted_words(rank_from_length(len(word)))
