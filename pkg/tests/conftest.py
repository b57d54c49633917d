import random

import pytest

from wassoc.cohomology import build_delta3_system
from wassoc.corpus import non_wa_corpus, poisson_corpus, wa_corpus
from wassoc.homology import ChainComplex

SEED = 20260810


@pytest.fixture()
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def wa_members():
    return wa_corpus()


@pytest.fixture(scope="session")
def non_wa_members():
    return non_wa_corpus()


@pytest.fixture(scope="session")
def poisson_members():
    return poisson_corpus()


@pytest.fixture(scope="session")
def delta3_system():
    return build_delta3_system()


@pytest.fixture(scope="session")
def chain_complex6():
    return ChainComplex.up_to_degree(6)
