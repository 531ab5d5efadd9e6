import numpy as np
import pytest

from socialbandits.errors import ColdStartError
from socialbandits.model import AgentBeliefs
from socialbandits.policy import (ConstantInflation, LogLogInflation, ZeroInflation, inflationFromSpec, PolicyConfig,
                                  inflationValue, explorationBonus, ucbIndex, ucbIndices, selectArm)


def test_inflationValues():
    assert inflationValue(PolicyConfig(inflation=0.374), 500) == 0.374
    assert inflationValue(PolicyConfig(inflation='zero'), 12345) == 0.0
    assert inflationValue(PolicyConfig(), 7) == 0.0

    loglog = PolicyConfig(inflation='log-log-time')
    assert inflationValue(loglog, 1) == 0.0
    assert inflationValue(loglog, 2) == 0.0
    assert inflationValue(loglog, np.e ** np.e) == pytest.approx(1.0)


def test_logLogIsNondecreasing():
    f = LogLogInflation()
    values = [f.value(t) for t in range(1, 2000)]
    assert all(b >= a for a, b in zip(values, values[1:]))
    assert min(values) >= 0


def test_inflationValueNeedsPositiveRound():
    with pytest.raises(ValueError):
        inflationValue(PolicyConfig(), 0)


def test_inflationFromSpec():
    assert inflationFromSpec(0.2) == ConstantInflation(0.2)
    assert inflationFromSpec('zero') == ZeroInflation()
    assert inflationFromSpec('log-log-time') == LogLogInflation()
    assert inflationFromSpec(LogLogInflation().spec()) == LogLogInflation()
    with pytest.raises(ValueError):
        inflationFromSpec('sqrt')
    with pytest.raises(ValueError):
        ConstantInflation(-1)


@pytest.mark.parametrize('xi, numAgents', [(1.0, 1), (0.5, 1), (1.1, 0)])
def test_invalidPolicy(xi, numAgents):
    with pytest.raises(ValueError):
        PolicyConfig(xi=xi, numAgents=numAgents)


def test_policySigmasScaleWithAgents():
    np.testing.assert_allclose(PolicyConfig(numAgents=6).sigmas([5, 5]), [5 * np.sqrt(6)] * 2)


def test_explorationBonusValues():
    assert explorationBonus(1.0, 1.0, 1, 0.0, np.e) == pytest.approx(2.0)
    assert explorationBonus(3.0, 1.1, 7, 0.4, 1) == 0.0

    # f = 0 reduces to the classic UCB radius
    expected = 5.0 * np.sqrt(2 * 2.1 * np.log(40) / 9)
    assert explorationBonus(5.0, 1.1, 9, 0.0, 40) == pytest.approx(expected)


def test_explorationBonusColdStart():
    with pytest.raises(ColdStartError):
        explorationBonus(1.0, 1.1, 0, 0.0, 10)
    with pytest.raises(ColdStartError):
        explorationBonus(1.0, 1.1, np.array([1, 0]), 0.0, 10)


def test_explorationBonusMonotone():
    N = np.arange(1, 200)
    bonus = explorationBonus(2.0, 1.1, N, 0.5, 50)
    assert np.all(np.diff(bonus) < 0)

    ts = np.arange(1, 500)
    byT = [explorationBonus(2.0, 1.1, 10, 0.5, t) for t in ts]
    assert all(b >= a for a, b in zip(byT, byT[1:]))


def test_ucbIndex():
    assert ucbIndex(90, 5) == 95
    assert ucbIndex(-2, 0) == -2


def _beliefs(counts, means):
    b = AgentBeliefs(len(counts))
    for i, (n, mu) in enumerate(zip(counts, means), start=1):
        b.observe([i] * n, [mu] * n)
        b.pullCounts[i - 1] = n
    return b


def test_selectArmStrictArgmax(rng):
    b = _beliefs([5, 5], [10.0, 20.0])
    assert selectArm(b, PolicyConfig(), [1.0, 1.0], 10, rng) == 2


def test_selectArmColdStartOnlyUnseen(rng):
    b = _beliefs([5, 0, 3, 0], [100.0, 0.0, 100.0, 0.0])
    picks = {selectArm(b, PolicyConfig(), np.ones(4), 9, rng) for _ in range(200)}
    assert picks == {2, 4}


def test_selectArmColdStartUniform(rng):
    b = AgentBeliefs(4)
    picks = np.array([selectArm(b, PolicyConfig(), np.ones(4), 1, rng) for _ in range(8000)])
    freq = np.bincount(picks, minlength=5)[1:] / picks.size
    np.testing.assert_allclose(freq, 0.25, atol=0.02)


def test_selectArmTiesUniform(rng):
    b = _beliefs([5, 5, 5], [3.0, 3.0, 1.0])
    picks = np.array([selectArm(b, PolicyConfig(), np.ones(3), 20, rng) for _ in range(10000)])
    assert set(picks.tolist()) == {1, 2}
    assert np.mean(picks == 1) == pytest.approx(0.5, abs=0.02)


def test_selectArmConsumesOneDrawPerCall():
    b = _beliefs([5, 5], [1.0, 2.0])
    rng = np.random.default_rng(7)
    selectArm(b, PolicyConfig(), np.ones(2), 10, rng)
    reference = np.random.default_rng(7)
    reference.integers(1)
    assert rng.integers(1 << 30) == reference.integers(1 << 30)


def test_selectionTranslationInvariant():
    rng = np.random.default_rng(5)
    cfg = PolicyConfig(xi=1.1, inflation=0.3, numAgents=2)
    for _ in range(200):
        counts = rng.integers(1, 30, size=6)
        means = rng.normal(0, 10, size=6)
        shift = rng.normal(0, 100)
        a = _beliefs(counts, means)
        b = _beliefs(counts, means + shift)
        qa = ucbIndices(a, cfg, np.full(6, 2.0), 50)
        qb = ucbIndices(b, cfg, np.full(6, 2.0), 50)
        assert np.argmax(qa) == np.argmax(qb)


def test_singleAgentReducesToClassicUcb():
    b = _beliefs([4, 9, 2], [1.0, 2.0, 1.5])
    sigmaPrimes = np.array([1.0, 2.0, 3.0])
    q = ucbIndices(b, PolicyConfig(xi=1.5, inflation='zero', numAgents=1), sigmaPrimes, 30)
    classic = b.meanEstimates() + sigmaPrimes * np.sqrt(2 * 2.5 * np.log(30) / b.obsCounts)
    np.testing.assert_allclose(q, classic)
