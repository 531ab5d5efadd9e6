import numpy as np
import pytest

from socialbandits.analysis import BoundParams, empiricalTailProbability, rankAgreement, boundDomination
from socialbandits.errors import NoObservationsError
from socialbandits.model import BanditInstance, ObservationNetwork, completeNetwork
from socialbandits.policy import PolicyConfig


PREDICTED = [(5,), (6,), (2,), (1, 4), (3,)]


def test_fullAgreement():
    means = np.array([40.0, 30.0, 60.0, 41.0, 10.0, 20.0])
    stderrs = np.full(6, 1.0)
    res = rankAgreement(PREDICTED, means, stderrs)
    assert res.agreement
    assert res.kendallDistance == 0
    assert res.orderedPairs == 14
    assert res.distinguishablePairs == 14
    assert res.tiedPairs == [(1, 4)]
    assert res.tiesResolved == []


def test_reversedPairs():
    predicted = [(1,), (2,), (3,)]
    res = rankAgreement(predicted, [30.0, 20.0, 10.0], [0.1, 0.1, 0.1])
    assert not res.agreement
    assert res.kendallDistance == 3
    assert res.discordantPairs == [(1, 2), (1, 3), (2, 3)]


def test_indistinguishableMeansAgreeVacuously():
    res = rankAgreement([(1,), (2,), (3,)], [10.0, 9.0, 11.0], [5.0, 5.0, 5.0])
    assert res.agreement
    assert res.distinguishablePairs == 0
    assert res.kendallDistance == 0


def test_resolvedTie():
    res = rankAgreement([(1, 2)], [1.0, 5.0], [0.1, 0.1])
    assert res.agreement
    assert res.orderedPairs == 0
    assert res.tiesResolved == [(1, 2)]


def test_bandUsesCombinedStandardError():
    # difference 2.9 against 2 * sqrt(1 + 1) = 2.83
    assert rankAgreement([(1,), (2,)], [2.9, 0.0], [1.0, 1.0]).kendallDistance == 1
    assert rankAgreement([(1,), (2,)], [2.8, 0.0], [1.0, 1.0]).kendallDistance == 0


def test_rankAgreementAgentMismatch():
    with pytest.raises(ValueError):
        rankAgreement([(1,), (2,)], [1.0, 2.0, 3.0], [0.1] * 3)


def test_boundDomination(benchmarkInstance):
    params = BoundParams(2.0, 1.1, 2)
    fTs = [0.1, 0.2]
    pulls = np.zeros((2, 10))
    pulls[:, 9] = 500
    res = boundDomination(params, benchmarkInstance, pulls, fTs, 500)
    assert res.dominated
    assert res.bounds.shape == (2, 10)
    assert np.all(np.isnan(res.bounds[:, 9]))

    pulls[1, 3] = 1e6
    res = boundDomination(params, benchmarkInstance, pulls, fTs, 500)
    assert not res.dominated
    assert res.violations == [(2, 4)]


@pytest.fixture
def tailSetup():
    inst = BanditInstance([1.0, 3.0], 1.0)
    net = completeNetwork(3, [0.5, 0.5, 0.5])
    return inst, net, PolicyConfig(xi=1.1, inflation='zero', numAgents=3)


def test_tailHugeRadiusNeverExceeded(tailSetup):
    res = empiricalTailProbability(*tailSetup, arm=2, agent=1, t=30, multiplier=10.0, numRuns=100)
    assert res.frequency == 0.0
    assert res.usedRuns + res.excludedRuns == 100


def test_tailZeroRadiusAlwaysExceeded(tailSetup):
    res = empiricalTailProbability(*tailSetup, arm=2, agent=1, t=30, multiplier=0.0, numRuns=100)
    assert res.frequency == 1.0


def test_tailSeveralAgentsShareRuns(tailSetup):
    tails = empiricalTailProbability(*tailSetup, arm=2, agent=[3, 1], t=30, multiplier=0.5, numRuns=100, baseSeed=4)
    assert list(tails.keys()) == [3, 1]
    for agent in (1, 3):
        single = empiricalTailProbability(*tailSetup, arm=2, agent=agent, t=30, multiplier=0.5, numRuns=100,
                                          baseSeed=4)
        assert tails[agent].toDict() == single.toDict()


def test_tailArguments(tailSetup):
    with pytest.raises(ValueError):
        empiricalTailProbability(*tailSetup, arm=2, agent=1, t=30, multiplier=1.0, numRuns=99)
    with pytest.raises(ValueError):
        empiricalTailProbability(*tailSetup, arm=2, agent=1, t=1, multiplier=1.0, numRuns=100)
    with pytest.raises(IndexError):
        empiricalTailProbability(*tailSetup, arm=3, agent=1, t=30, multiplier=1.0, numRuns=100)
    with pytest.raises(ValueError):
        empiricalTailProbability(*tailSetup, arm=2, agent=[], t=30, multiplier=1.0, numRuns=100)
    with pytest.raises(IndexError):
        empiricalTailProbability(*tailSetup, arm=2, agent=[1, 4], t=30, multiplier=1.0, numRuns=100)


def test_tailWithoutObservations():
    # the cold start covers one arm per round, arm 2 of 3 stays unseen for some runs
    inst = BanditInstance([1.0, 2.0, 3.0], 1.0)
    net = ObservationNetwork(1, (), [0.0])
    res = empiricalTailProbability(inst, net, PolicyConfig(numAgents=1), arm=2, agent=1, t=2, multiplier=1.0,
                                   numRuns=100)
    assert res.excludedRuns > 0
    assert res.usedRuns + res.excludedRuns == 100

    inst = BanditInstance(np.zeros(200000), 1.0)
    with pytest.raises(NoObservationsError):
        empiricalTailProbability(inst, net, PolicyConfig(numAgents=1), arm=200000, agent=1, t=2, multiplier=1.0,
                                 numRuns=100)
