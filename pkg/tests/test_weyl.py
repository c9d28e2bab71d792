import pytest

from canonical_bases import weyl
from canonical_bases.utils.misc_utils import CapacityError, PreconditionError


def test_reduced_word_counts():
    assert weyl.reduced_words_w0(1) == {(1,)}
    assert weyl.reduced_words_w0(2) == {(1, 2, 1), (2, 1, 2)}
    assert len(weyl.reduced_words_w0(3)) == 16
    assert len(weyl.reduced_words_w0(4)) == 768
    with pytest.raises(CapacityError):
        weyl.reduced_words_w0(5)


def test_seed_word_is_reduced():
    for n in range(1, 5):
        word = weyl.seed_word(n)
        assert len(word) == weyl.longest_length(n)
        assert weyl.is_reduced_w0(word, n)
        assert weyl.check_w0_word(word) == n


def test_check_w0_word_rejects():
    with pytest.raises(PreconditionError):
        weyl.check_w0_word((1, 1, 2))
    with pytest.raises(PreconditionError):
        weyl.check_w0_word((1, 2))


def test_braid_moves():
    assert weyl.apply_braid_move((1, 2, 1), 1, weyl.THREE_MOVE) == (2, 1, 2)
    assert weyl.apply_braid_move((1, 3, 2), 1, weyl.TWO_MOVE) == (3, 1, 2)
    with pytest.raises(PreconditionError):
        weyl.apply_braid_move((1, 2, 1), 1, weyl.TWO_MOVE)
    with pytest.raises(PreconditionError):
        weyl.apply_braid_move((1, 2, 3), 1, weyl.THREE_MOVE)
    moves = weyl.braid_moves((1, 2, 1, 3, 2, 1))
    assert (1, weyl.THREE_MOVE, (2, 1, 2, 3, 2, 1)) in moves
    assert (3, weyl.TWO_MOVE, (1, 2, 3, 1, 2, 1)) in moves


def test_braid_move_path():
    assert weyl.braid_move_path((1, 2, 1), (2, 1, 2)) == [(1, weyl.THREE_MOVE)]
    assert weyl.braid_move_path((1, 2, 1), (1, 2, 1)) == []
    source, target = weyl.seed_word(3), (3, 2, 1, 3, 2, 3)
    word = source
    for position, kind in weyl.braid_move_path(source, target):
        word = weyl.apply_braid_move(word, position, kind)
    assert word == target
    with pytest.raises(PreconditionError):
        weyl.braid_move_path((1, 2, 1), weyl.seed_word(3))


def test_roots_of_word():
    assert weyl.roots_of_word((1, 2, 1)) == ((1, 0), (1, 1), (0, 1))
    assert weyl.roots_of_word((2, 1, 2)) == ((0, 1), (1, 1), (1, 0))
    for word in weyl.reduced_words_w0(3):
        assert sorted(weyl.roots_of_word(word)) == sorted(weyl.positive_roots(3))


def test_cartan_pairing():
    assert weyl.cartan_pairing((1, 0), (1, 0)) == 2
    assert weyl.cartan_pairing((1, 0), (0, 1)) == -1
    assert weyl.cartan_pairing((1, 1), (1, 0)) == 1
    assert weyl.cartan_pairing((1, 0, 0), (0, 0, 1)) == 0
    assert weyl.reflect(1, (0, 1)) == (1, 1)


def test_chevalley_dual():
    assert weyl.chevalley_dual(1, 2) == 2
    assert weyl.chevalley_dual(2, 3) == 2
    assert weyl.chevalley_dual(1, 4) == 4


def test_first_word_starting_with():
    assert weyl.first_word_starting_with(1, 2) == (1, 2, 1)
    assert weyl.first_word_starting_with(2, 2) == (2, 1, 2)
    word = weyl.first_word_starting_with(3, 3)
    assert word[0] == 3 and weyl.is_reduced_w0(word, 3)


def test_adapted_words():
    assert weyl.adapted_word(weyl.Quiver(("rl",))) == (1, 2, 1)
    assert weyl.adapted_word(weyl.Quiver(("lr",))) == (2, 1, 2)
    assert weyl.adapted_words(2) == {(1, 2, 1), (2, 1, 2)}
    for quiver in weyl.all_quivers(3):
        word = weyl.adapted_word(quiver)
        assert weyl.is_adapted(word)
        assert weyl.quiver_of_word(word) is not None
    assert len(weyl.all_quivers(4)) == 8


def test_quiver_parsing():
    quiver = weyl.Quiver.parse("lr,rl")
    assert quiver.rank == 3
    assert quiver.sinks() == [2]
    assert weyl.Quiver.from_json(quiver.to_json()) == quiver
    with pytest.raises(PreconditionError):
        weyl.Quiver(("up",))


def test_commutation_class():
    assert weyl.commutation_class((1, 2, 1)) == {(1, 2, 1)}
    word = weyl.seed_word(3)
    assert all(weyl.is_reduced_w0(w, 3) for w in weyl.commutation_class(word))
    assert (1, 2, 3, 1, 2, 1) in weyl.commutation_class(word)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_adapted_word_is_a_reduced_sink_sequence(n):
    for quiver in weyl.all_quivers(n):
        word = weyl.adapted_word(quiver)
        assert weyl.is_reduced_w0(word, n)
        assert weyl.is_sink_sequence(word, quiver)
        assert weyl.is_adapted(word)
        assert weyl.quiver_of_word(word) is not None


def test_adapted_word_for_equioriented_quivers():
    for orientation in [("lr", "lr"), ("lr", "lr", "lr"), ("lr", "lr", "rl"), ("lr", "rl", "lr"), ("rl", "lr", "lr")]:
        quiver = weyl.Quiver(orientation)
        word = weyl.adapted_word(quiver)
        assert weyl.is_reduced_w0(word, quiver.rank)
        assert weyl.is_sink_sequence(word, quiver)
    assert weyl.adapted_word(weyl.Quiver(("lr", "lr"))) == (3, 2, 1, 3, 2, 3)


def test_adapted_words_rank_three():
    words = weyl.adapted_words(3)
    assert words <= weyl.reduced_words_w0(3)
    assert weyl.seed_word(3) in words
    assert not weyl.is_sink_sequence((1, 2, 1), weyl.Quiver(("lr",)))


def test_word_graph():
    graph = weyl.word_graph(2)
    assert graph[(1, 2, 1)] == ((1, weyl.THREE_MOVE, (2, 1, 2)),)
    graph = weyl.word_graph(3)
    assert set(graph) == weyl.reduced_words_w0(3)
    for word, moves in graph.items():
        assert [move[2] for move in moves] == sorted(move[2] for move in moves)
        assert all(weyl.apply_braid_move(word, position, kind) == other for position, kind, other in moves)
    with pytest.raises(CapacityError):
        weyl.word_graph(5)
