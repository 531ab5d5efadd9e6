import logging as log

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from socialbandits.ixo.statistics import meanStderr
from socialbandits.simulation.engine import runEpisode, resolvePolicies
from socialbandits.simulation.streams import deriveRunSeed


class MonteCarloResult:
    """
    Aggregate of independent runs of the same scenario. Runs are reduced in ascending run order.

    Attributes:
        meanRegret (:class:`numpy.ndarray`):        T x K mean cumulative regret
        stderrRegret (:class:`numpy.ndarray`):      T x K standard error of the cumulative regret
        meanPullCounts (:class:`numpy.ndarray`):    K x N mean number of own pulls E[n_i^k(T)]
        meanObsCounts (:class:`numpy.ndarray`):     K x N mean number of observations E[N_i^k(T)]
        terminalRegrets (:class:`numpy.ndarray`):   M x K regret after the last round of every run
        seeds (`list` of `int`):                    seed of every run
        beliefs (`list`):                           final beliefs of every run, `None` unless requested
    """

    def __init__(self, meanRegret, stderrRegret, meanPullCounts, meanObsCounts, terminalRegrets, seeds,
                 beliefs=None):
        self.meanRegret = meanRegret
        self.stderrRegret = stderrRegret
        self.meanPullCounts = meanPullCounts
        self.meanObsCounts = meanObsCounts
        self.terminalRegrets = terminalRegrets
        self.seeds = seeds
        self.beliefs = beliefs

    @property
    def numRuns(self):
        return len(self.seeds)

    @property
    def horizon(self):
        return self.meanRegret.shape[0]

    @property
    def numAgents(self):
        return self.meanRegret.shape[1]

    def terminalMean(self):
        """
        Mean regret of every agent after the last round.

        Returns:
            :class:`numpy.ndarray`
        """

        return meanStderr(self.terminalRegrets)[0]

    def terminalStderr(self):
        """
        Standard error of the regret of every agent after the last round.

        Returns:
            :class:`numpy.ndarray`
        """

        return meanStderr(self.terminalRegrets)[1]

    def regretFrame(self):
        """
        Long-format table of the regret curves, sorted by round and agent (both 1-based).

        Returns:
            :class:`pandas.DataFrame` with columns `t`, `agent`, `mean_cum_regret`, `stderr`
        """

        T, K = self.meanRegret.shape
        return pd.DataFrame({'t': np.repeat(np.arange(1, T + 1), K),
                             'agent': np.tile(np.arange(1, K + 1), T),
                             'mean_cum_regret': self.meanRegret.ravel(),
                             'stderr': self.stderrRegret.ravel()},
                            columns=['t', 'agent', 'mean_cum_regret', 'stderr'])


def _runReplicate(inst, net, policies, horizon, seed, keepBeliefs):
    trace, beliefs = runEpisode(inst, net, policies, horizon, seed)
    pulls = np.array([b.pullCounts for b in beliefs])
    obs = np.array([b.obsCounts for b in beliefs])
    return trace.perAgentCumulative, pulls, obs, beliefs if keepBeliefs else None


def runMonteCarlo(inst, net, policies, horizon, numRuns, baseSeed, jobs=1, keepBeliefs=False):
    """
    Run `numRuns` independent episodes and aggregate them. Run `r` uses the seed
    :func:`socialbandits.simulation.streams.deriveRunSeed` ``(baseSeed, r)``; the result does not depend on `jobs`.

    Args:
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        policies (:class:`.PolicyConfig` or `list`): policy for all agents or one per agent
        horizon (`int`): number of rounds T
        numRuns (`int`): number of runs M, at least 1
        baseSeed (`int`): experiment seed
        jobs (`int`): number of parallel workers, see :class:`joblib.Parallel`
        keepBeliefs (`bool`): keep the final beliefs of every run

    Returns:
        :class:`.MonteCarloResult`
    """

    if numRuns < 1:
        raise ValueError('runMonteCarlo: at least one run required, got {}'.format(numRuns))

    policies = resolvePolicies(policies, net.numAgents)
    seeds = [deriveRunSeed(baseSeed, r) for r in range(numRuns)]
    log.info('Running %d episodes of %d rounds with %d agents (jobs=%d)', numRuns, horizon, net.numAgents, jobs)

    # joblib returns results in submission order
    replicates = Parallel(n_jobs=jobs)(
        delayed(_runReplicate)(inst, net, policies, horizon, seed, keepBeliefs) for seed in seeds)

    curves = np.stack([rep[0] for rep in replicates])
    pulls = np.stack([rep[1] for rep in replicates])
    obs = np.stack([rep[2] for rep in replicates])

    meanRegret, stderrRegret = meanStderr(curves)
    if horizon:
        terminalRegrets = curves[:, -1, :]
    else:
        terminalRegrets = np.zeros((numRuns, net.numAgents))

    log.info('Monte Carlo finished')
    return MonteCarloResult(meanRegret, stderrRegret, pulls.mean(axis=0), obs.mean(axis=0), terminalRegrets, seeds,
                            beliefs=[rep[3] for rep in replicates] if keepBeliefs else None)
