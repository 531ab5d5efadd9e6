"""
Result files of an experiment: the regret curves, the per-agent summary and the text report.
"""

from pathlib import Path
import logging as log

import numpy as np
import pandas as pd

from socialbandits.simulation.montecarlo import MonteCarloResult


REGRET_COLUMNS = ['t', 'agent', 'mean_cum_regret', 'stderr']
FLOAT_FORMAT = '%.12g'


def emitRegretCsv(curves, path):
    """
    Write regret curves as CSV with header ``t,agent,mean_cum_regret,stderr``, one row per round and agent (both
    1-based), rounds ascending then agents ascending, 12 significant digits, ``\\n`` line endings.

    Args:
        curves (:class:`socialbandits.simulation.montecarlo.MonteCarloResult` or :class:`pandas.DataFrame`): curves,
            a frame must have the four columns above
        path (`str` or :class:`pathlib.Path`): target file

    Returns:
        :class:`pathlib.Path`
    """

    frame = curves.regretFrame() if isinstance(curves, MonteCarloResult) else curves
    if frame is None or frame.empty:
        raise ValueError('emitRegretCsv: no curves given')
    frame = frame[REGRET_COLUMNS].sort_values(['t', 'agent'], kind='stable')

    path = Path(path)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    log.info('Regret curves written to %s', path)
    return path


def summaryFrame(result, sociability, epsilons, predictedRanks, empiricalRanks, regretBounds, sampleBounds):
    """
    Per-agent summary of an experiment.

    Args:
        result (:class:`socialbandits.simulation.montecarlo.MonteCarloResult`): Monte Carlo result
        sociability (:class:`numpy.ndarray`): sociability of every agent
        epsilons (:class:`numpy.ndarray`): performance measure of every agent, `nan` if undefined
        predictedRanks (`dict`): predicted rank keyed by agent, may be empty
        empiricalRanks (`dict`): empirical rank keyed by agent
        regretBounds (:class:`numpy.ndarray`): regret bound of every agent at the horizon
        sampleBounds (:class:`numpy.ndarray`): K x N sample bounds, `nan` for the optimal arm

    Returns:
        :class:`pandas.DataFrame`
    """

    K = result.numAgents
    agents = np.arange(1, K + 1)
    frame = pd.DataFrame({'agent': agents,
                          'p': np.asarray(sociability, dtype=np.float64),
                          'epsilon': np.asarray(epsilons, dtype=np.float64),
                          'predicted_rank': pd.array([predictedRanks.get(k) for k in agents], dtype='Int64'),
                          'empirical_rank': [empiricalRanks[k] for k in agents],
                          'mean_regret_T': result.terminalMean(),
                          'stderr_T': result.terminalStderr(),
                          'regret_bound_T': np.asarray(regretBounds, dtype=np.float64)})

    numArms = result.meanPullCounts.shape[1]
    for i in range(1, numArms + 1):
        frame['pulls_arm{}'.format(i)] = result.meanPullCounts[:, i - 1]
        frame['bound_arm{}'.format(i)] = sampleBounds[:, i - 1]
    return frame


def emitSummaryCsv(frame, path):
    """
    Write the per-agent summary as CSV. Undefined values are left empty.

    Args:
        frame (:class:`pandas.DataFrame`): output of :func:`summaryFrame`
        path (`str` or :class:`pathlib.Path`): target file

    Returns:
        :class:`pathlib.Path`
    """

    path = Path(path)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    log.info('Summary written to %s', path)
    return path


def writeReport(text, path):
    """
    Write the text report.

    Args:
        text (`str`): report
        path (`str` or :class:`pathlib.Path`): target file

    Returns:
        :class:`pathlib.Path`
    """

    path = Path(path)
    if not text.endswith('\n'):
        text += '\n'
    with path.open('w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    log.info('Report written to %s', path)
    return path
