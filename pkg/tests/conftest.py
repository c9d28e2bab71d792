import pytest

from canonical_bases import weyl
from canonical_bases.algebra import canonical
from canonical_bases.algebra.elements import WordElt
from canonical_bases.coeff import psi


@pytest.fixture
def a2_word():
    return (1, 2, 1)


@pytest.fixture
def a2_other_word():
    return (2, 1, 2)


@pytest.fixture
def a2_words():
    return weyl.sorted_reduced_words(2)


@pytest.fixture
def a3_word():
    return weyl.seed_word(3)


@pytest.fixture
def e1():
    return WordElt.generator(1, 2)


@pytest.fixture
def e2():
    return WordElt.generator(2, 2)


@pytest.fixture
def dual_e1(e1):
    return e1.scale(psi(1))


@pytest.fixture
def dual_e2(e2):
    return e2.scale(psi(1))


@pytest.fixture(autouse=True)
def no_persistent_cache():
    canonical.use_table_cache(None)
    yield
    canonical.use_table_cache(None)
