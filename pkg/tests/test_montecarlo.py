import numpy as np
import pytest

from socialbandits.io import loadScenario, policiesFromScenario
from socialbandits.policy import PolicyConfig
from socialbandits.simulation import runEpisode, runMonteCarlo, deriveRunSeed


@pytest.fixture
def policy():
    return PolicyConfig(xi=1.1, inflation=0.4, numAgents=6)


def test_singleRunEqualsEpisode(benchmarkInstance, cyclic, policy):
    result = runMonteCarlo(benchmarkInstance, cyclic, policy, 60, 1, baseSeed=8)
    trace, beliefs = runEpisode(benchmarkInstance, cyclic, policy, 60, deriveRunSeed(8, 0))

    np.testing.assert_array_equal(result.meanRegret, trace.perAgentCumulative)
    np.testing.assert_array_equal(result.stderrRegret, np.zeros((60, 6)))
    np.testing.assert_array_equal(result.terminalStderr(), np.zeros(6))
    np.testing.assert_array_equal(result.meanPullCounts, np.array([b.pullCounts for b in beliefs]))
    assert result.seeds == [deriveRunSeed(8, 0)]


def test_aggregateShapes(benchmarkInstance, allToAll, policy):
    result = runMonteCarlo(benchmarkInstance, allToAll, policy, 40, 12, baseSeed=0)
    assert result.numRuns == 12
    assert result.horizon == 40
    assert result.numAgents == 6
    assert result.meanPullCounts.shape == (6, 10)
    np.testing.assert_allclose(result.meanPullCounts.sum(axis=1), np.full(6, 40))
    assert np.all(result.meanObsCounts >= result.meanPullCounts)
    assert result.terminalRegrets.shape == (12, 6)
    np.testing.assert_allclose(result.terminalMean(), result.meanRegret[-1])
    np.testing.assert_allclose(result.terminalStderr(), result.stderrRegret[-1])


def test_stderrIsStandardErrorOfMean(benchmarkInstance, allToAll, policy):
    result = runMonteCarlo(benchmarkInstance, allToAll, policy, 30, 20, baseSeed=3)
    expected = result.terminalRegrets.std(axis=0, ddof=1) / np.sqrt(20)
    np.testing.assert_allclose(result.terminalStderr(), expected)


def test_parallelMatchesSerial(benchmarkInstance, cyclic, policy):
    serial = runMonteCarlo(benchmarkInstance, cyclic, policy, 50, 8, baseSeed=21, jobs=1)
    parallel = runMonteCarlo(benchmarkInstance, cyclic, policy, 50, 8, baseSeed=21, jobs=2)
    np.testing.assert_array_equal(serial.meanRegret, parallel.meanRegret)
    np.testing.assert_array_equal(serial.stderrRegret, parallel.stderrRegret)
    np.testing.assert_array_equal(serial.meanPullCounts, parallel.meanPullCounts)
    assert serial.seeds == parallel.seeds


def test_keepBeliefs(benchmarkInstance, cyclic, policy):
    result = runMonteCarlo(benchmarkInstance, cyclic, policy, 20, 3, baseSeed=1, keepBeliefs=True)
    assert len(result.beliefs) == 3
    assert all(len(b) == 6 for b in result.beliefs)
    assert runMonteCarlo(benchmarkInstance, cyclic, policy, 20, 3, baseSeed=1).beliefs is None


def test_regretFrameLayout(benchmarkInstance, allToAll, policy):
    frame = runMonteCarlo(benchmarkInstance, allToAll, policy, 5, 2, baseSeed=0).regretFrame()
    assert list(frame.columns) == ['t', 'agent', 'mean_cum_regret', 'stderr']
    assert len(frame) == 30
    assert frame['t'].tolist()[:7] == [1, 1, 1, 1, 1, 1, 2]
    assert frame['agent'].tolist()[:7] == [1, 2, 3, 4, 5, 6, 1]


def test_needsOneRun(benchmarkInstance, allToAll, policy):
    with pytest.raises(ValueError):
        runMonteCarlo(benchmarkInstance, allToAll, policy, 10, 0, baseSeed=0)


@pytest.mark.slow
def test_stderrShrinksWithRuns(benchmarkInstance, allToAll):
    policies = policiesFromScenario(loadScenario('paper-all-to-all'), allToAll)
    half = runMonteCarlo(benchmarkInstance, allToAll, policies, 500, 500, baseSeed=0, jobs=-1)
    full = runMonteCarlo(benchmarkInstance, allToAll, policies, 500, 1000, baseSeed=0, jobs=-1)
    ratio = (full.terminalStderr() ** 2).mean() / (half.terminalStderr() ** 2).mean()
    assert 0.4 <= ratio <= 0.6
