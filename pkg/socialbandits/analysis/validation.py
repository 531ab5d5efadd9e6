"""
Empirical checks of the analysis against simulations: tail frequencies of the arm estimates, agreement of the
predicted and the simulated ranking, and domination of the sample bounds.
"""

import logging as log
from itertools import combinations
from numbers import Integral

import numpy as np

from socialbandits.analysis.bounds import armSampleBounds
from socialbandits.errors import NoObservationsError
from socialbandits.ixo.collections import IndexedOrderedDict
from socialbandits.ixo.statistics import combinedStderr
from socialbandits.simulation.engine import resolvePolicies
from socialbandits.simulation.montecarlo import runMonteCarlo


MIN_TAIL_RUNS = 100

# two means closer than this many combined standard errors are indistinguishable
SE_BAND = 2.0


def _tailFrequency(beliefsPerRun, inst, sigma, arm, agent, t, multiplier):
    exceedances = 0
    excluded = 0
    for beliefs in beliefsPerRun:
        b = beliefs[agent - 1]
        N = b.obsCounts[arm - 1]
        if N == 0:
            excluded += 1
            continue
        deviation = abs(b.obsRewardSums[arm - 1] / N - inst.means[arm - 1])
        radius = sigma * np.sqrt(2.0 * multiplier * np.log(t) / N)
        if deviation > radius:
            exceedances += 1

    numRuns = len(beliefsPerRun)
    used = numRuns - excluded
    if used == 0:
        raise NoObservationsError('empiricalTailProbability: agent {} never observed arm {} in {} runs'.format(
            agent, arm, numRuns))
    if excluded:
        log.warning('empiricalTailProbability: %d of %d runs excluded, agent %d never observed arm %d',
                    excluded, numRuns, agent, arm)

    res = IndexedOrderedDict()
    res['frequency'] = exceedances / used
    res['exceedances'] = exceedances
    res['usedRuns'] = used
    res['excludedRuns'] = excluded
    return res


def empiricalTailProbability(inst, net, policies, arm, agent, t, multiplier, numRuns, baseSeed=0, jobs=1):
    """
    Fraction of runs in which the estimate of `arm` held by `agent` after round `t` deviates from the true mean by
    more than ``σ_i sqrt(2 · multiplier · log t / N_i^k(t))``. The multiplier plays the role of δ(ξ) + δ'(ε).

    Runs in which the agent never observed the arm are excluded and counted. Several agents can be checked on the
    same simulated runs by passing a list of agents.

    Args:
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        policies (:class:`.PolicyConfig` or `list`): policy for all agents or one per agent
        arm (`int`): 1-based arm
        agent (`int` or `list` of `int`): 1-based agent(s)
        t (`int`): round after which the estimate is taken, at least 2
        multiplier (`float`): radius multiplier, at least 0
        numRuns (`int`): number of runs, at least 100
        baseSeed (`int`): experiment seed
        jobs (`int`): number of parallel workers

    Returns:
        :class:`socialbandits.ixo.collections.IndexedOrderedDict` with keys `frequency`, `exceedances`, `usedRuns`,
        `excludedRuns`; for a list of agents one such dictionary per agent, keyed by agent
    """

    if numRuns < MIN_TAIL_RUNS:
        raise ValueError('empiricalTailProbability: at least {} runs required, got {}'.format(MIN_TAIL_RUNS, numRuns))
    if t < 2:
        raise ValueError('empiricalTailProbability: t must be >= 2, got {}'.format(t))
    if multiplier < 0:
        raise ValueError('empiricalTailProbability: multiplier must be >= 0, got {}'.format(multiplier))
    single = isinstance(agent, Integral)
    agents = [agent] if single else list(agent)
    if not agents:
        raise ValueError('empiricalTailProbability: no agent given')
    for a in agents:
        net.checkAgent(a)
    if not 1 <= arm <= inst.numArms:
        raise IndexError('empiricalTailProbability: arm {} out of range 1..{}'.format(arm, inst.numArms))

    policies = resolvePolicies(policies, net.numAgents)
    result = runMonteCarlo(inst, net, policies, t, numRuns, baseSeed, jobs=jobs, keepBeliefs=True)

    res = IndexedOrderedDict()
    for a in agents:
        sigma = policies[a - 1].sigmas(inst.sigmaPrimes)[arm - 1]
        res[a] = _tailFrequency(result.beliefs, inst, sigma, arm, a, t, multiplier)
    return res[agent] if single else res


def rankAgreement(predicted, means, stderrs, band=SE_BAND):
    """
    Compare a predicted ranking with simulated terminal regrets.

    Every pair of agents in different predicted tie groups is a strictly ordered pair. It is distinguishable if the
    simulated means differ by at least `band` combined standard errors, and discordant if it is distinguishable and
    the simulated order is reversed. The Kendall distance counts the discordant pairs. Pairs inside a predicted tie
    group are reported separately, together with whether the simulation can tell them apart.

    Args:
        predicted (`list` of `tuple` of `int`): predicted tie groups, best first
        means (:class:`numpy.ndarray`): terminal mean regret, entry ``k - 1`` for agent ``k``
        stderrs (:class:`numpy.ndarray`): standard errors of `means`
        band (`float`): indistinguishability band in combined standard errors

    Returns:
        :class:`socialbandits.ixo.collections.IndexedOrderedDict` with keys `agreement`, `kendallDistance`,
        `orderedPairs`, `distinguishablePairs`, `discordantPairs`, `tiedPairs`, `tiesResolved`
    """

    means = np.asarray(means, dtype=np.float64)
    stderrs = np.asarray(stderrs, dtype=np.float64)
    agents = sorted(a for group in predicted for a in group)
    if agents != list(range(1, means.size + 1)) or stderrs.size != means.size:
        raise ValueError('rankAgreement: predicted ranking and results cover different agents')

    position = {a: g for g, group in enumerate(predicted) for a in group}

    def distinguishable(a, b):
        return abs(means[a - 1] - means[b - 1]) >= band * combinedStderr(stderrs[a - 1], stderrs[b - 1])

    ordered = 0
    distinct = 0
    discordant = []
    tied = []
    resolved = []
    for a, b in combinations(agents, 2):
        if position[a] == position[b]:
            tied.append((a, b))
            if distinguishable(a, b):
                resolved.append((a, b))
            continue
        ordered += 1
        better, worse = (a, b) if position[a] < position[b] else (b, a)
        if not distinguishable(better, worse):
            continue
        distinct += 1
        if means[better - 1] > means[worse - 1]:
            discordant.append((better, worse))

    res = IndexedOrderedDict()
    res['agreement'] = not discordant
    res['kendallDistance'] = len(discordant)
    res['orderedPairs'] = ordered
    res['distinguishablePairs'] = distinct
    res['discordantPairs'] = discordant
    res['tiedPairs'] = tied
    res['tiesResolved'] = resolved
    return res


def boundDomination(params, inst, meanPullCounts, fTs, T):
    """
    Compare mean numbers of suboptimal pulls with their sample bounds.

    Args:
        params (:class:`socialbandits.analysis.bounds.BoundParams`): bound parameters
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        meanPullCounts (:class:`numpy.ndarray`): K x N mean pull counts E[n_i^k(T)]
        fTs (`list` of `float`): inflation value f(T) of every agent
        T (`int`): horizon, at least 2

    Returns:
        :class:`socialbandits.ixo.collections.IndexedOrderedDict` with keys `dominated` (`bool`), `bounds` (K x N,
        `nan` for the optimal arm) and `violations` (list of ``(agent, arm)``)
    """

    meanPullCounts = np.asarray(meanPullCounts, dtype=np.float64)
    bounds = np.array([armSampleBounds(params, inst, fT, T) for fT in fTs])
    violations = []
    for k in range(bounds.shape[0]):
        for i in inst.suboptimalArms():
            if not meanPullCounts[k, i - 1] <= bounds[k, i - 1]:
                violations.append((k + 1, i))

    res = IndexedOrderedDict()
    res['dominated'] = not violations
    res['bounds'] = bounds
    res['violations'] = violations
    return res
