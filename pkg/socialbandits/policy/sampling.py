"""
The sampling rule: every agent pulls the arm with the largest upper confidence index

    Q_i^k(t) = μ̂_i^k(t) + C_i^k(t),
    C_i^k(t) = σ_i sqrt( 2(ξ+1) (N_i^k(t) + f(t)) / N_i^k(t) · log(t) / N_i^k(t) ),

with σ_i = √K σ'_i and the natural logarithm. Arms that were never observed are pulled first.
"""

import numpy as np

from socialbandits.errors import ColdStartError
from socialbandits.policy.inflation import inflationValue


def explorationBonus(sigma, xi, N, f, t):
    """
    Exploration bonus C of an arm. Works element-wise on arrays of `sigma` and `N`.

    Args:
        sigma (`float` or :class:`numpy.ndarray`): scaled deviation σ_i
        xi (`float`): exploration parameter ξ
        N (`int` or :class:`numpy.ndarray`): number of observations N_i^k(t), at least 1
        f (`float`): inflation value f(t)
        t (`int`): round index, at least 1

    Returns:
        `float` or :class:`numpy.ndarray`
    """

    N = np.asarray(N, dtype=np.float64)
    if np.any(N < 1):
        raise ColdStartError('explorationBonus: N must be >= 1, unseen arms take the cold-start path')
    if t < 1:
        raise ValueError('explorationBonus: t must be >= 1, got {}'.format(t))

    res = sigma * np.sqrt(2.0 * (xi + 1.0) * (N + f) / N * np.log(t) / N)
    return res if res.ndim else float(res)


def ucbIndex(meanEst, bonus):
    """
    Upper confidence index Q = μ̂ + C.

    Args:
        meanEst (`float` or :class:`numpy.ndarray`): empirical mean
        bonus (`float` or :class:`numpy.ndarray`): exploration bonus

    Returns:
        `float` or :class:`numpy.ndarray`
    """

    return meanEst + bonus


def ucbIndices(beliefs, cfg, sigmaPrimes, t):
    """
    Upper confidence index of every arm for an agent that has observed all arms at least once.

    Args:
        beliefs (:class:`socialbandits.model.beliefs.AgentBeliefs`): the agent's statistics
        cfg (:class:`socialbandits.policy.inflation.PolicyConfig`): the agent's policy
        sigmaPrimes (:class:`numpy.ndarray`): standard deviation σ'_i of every arm
        t (`int`): round index the statistics belong to, at least 1

    Returns:
        :class:`numpy.ndarray`
    """

    bonus = explorationBonus(cfg.sigmas(sigmaPrimes), cfg.xi, beliefs.obsCounts, inflationValue(cfg, t), t)
    return ucbIndex(beliefs.meanEstimates(), bonus)


def selectArm(beliefs, cfg, sigmaPrimes, t, rng):
    """
    Choose the arm to pull next.

    If some arms have not been observed, one of them is drawn uniformly. Otherwise the arm with the largest
    :func:`ucbIndices` value is returned, ties are broken uniformly. Every call consumes exactly one integer draw from
    `rng`, so a tie-break stream replays identically whatever the belief state.

    Args:
        beliefs (:class:`socialbandits.model.beliefs.AgentBeliefs`): the agent's statistics after round `t`
        cfg (:class:`socialbandits.policy.inflation.PolicyConfig`): the agent's policy
        sigmaPrimes (:class:`numpy.ndarray`): standard deviation σ'_i of every arm
        t (`int`): number of completed rounds, at least 1
        rng (:class:`numpy.random.Generator`): tie-break stream of the agent

    Returns:
        `int` -- 1-based arm
    """

    unseen = beliefs.unseenArms()
    if unseen.size:
        return int(unseen[rng.integers(unseen.size)])

    q = ucbIndices(beliefs, cfg, sigmaPrimes, t)
    candidates = np.flatnonzero(q == q.max()) + 1
    return int(candidates[rng.integers(candidates.size)])
