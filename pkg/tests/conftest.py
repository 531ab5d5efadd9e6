import numpy as np
import pytest

from socialbandits.io.scenario import BENCHMARK_MEANS, BENCHMARK_SOCIABILITY
from socialbandits.model import BanditInstance, completeNetwork, cycleNetwork
from socialbandits.policy import PolicyConfig


@pytest.fixture
def benchmarkInstance():
    return BanditInstance(BENCHMARK_MEANS, 25)


@pytest.fixture
def allToAll():
    return completeNetwork(6, BENCHMARK_SOCIABILITY)


@pytest.fixture
def cyclic():
    return cycleNetwork(6, BENCHMARK_SOCIABILITY)


@pytest.fixture
def smallInstance():
    return BanditInstance([1.0, 2.0, 3.0, 5.0, 4.0], 1.0)


@pytest.fixture
def zeroPolicy():
    return PolicyConfig(xi=1.1, inflation='zero', numAgents=3)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
