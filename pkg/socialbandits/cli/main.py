"""
Command line tool: load a scenario or preset, run the Monte Carlo experiment and write ``regret.csv``,
``summary.csv`` and ``report.txt``.

Exit status 0 on success, 1 for an invalid scenario, 2 for any other error.
"""

from pathlib import Path
import argparse
import logging as log
import sys

import numpy as np

from socialbandits.analysis.bounds import regretBound, zetaSensitivity
from socialbandits.analysis.measure import (performanceMeasure, predictedRanking, groupRanks, empiricalRanking)
from socialbandits.analysis.validation import rankAgreement, boundDomination
from socialbandits.errors import UndefinedMeasureError
from socialbandits.io.results import emitRegretCsv, summaryFrame, emitSummaryCsv, writeReport
from socialbandits.io.scenario import (ScenarioError, PRESETS, loadScenario, checkScenario, instanceFromScenario,
                                       networkFromScenario, policiesFromScenario, boundParamsFromScenario,
                                       deltaPrimeFromScenario, inflationValues)
from socialbandits.ixo.collections import IndexedOrderedDict, dictStructure
from socialbandits.ixo.utils import configLogger
from socialbandits.simulation.montecarlo import runMonteCarlo


EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2

# command line flag -> scenario key
OVERRIDES = [('seed', ('seed',)),
             ('runs', ('runs',)),
             ('horizon', ('horizon',)),
             ('zeta', ('bounds', 'zeta')),
             ('jobs', ('jobs',))]


def parseArgs(argv=None):
    parser = argparse.ArgumentParser(
        prog='socialbandits',
        description='Simulate agents on a multi-armed bandit that observe their neighbors with a given sociability.')
    parser.add_argument('--scenario', required=True,
                        help='scenario JSON file or preset ({})'.format(', '.join(PRESETS)))
    parser.add_argument('--seed', type=int, help='experiment seed')
    parser.add_argument('--runs', type=int, help='number of Monte Carlo runs M')
    parser.add_argument('--horizon', type=int, help='number of rounds T')
    parser.add_argument('--zeta', type=float, help='bound parameter zeta > 1')
    parser.add_argument('--jobs', type=int, help='number of parallel workers (-1 for all cores)')
    parser.add_argument('--out', default='.', help='output directory (default: current directory)')
    parser.add_argument('--debug', action='store_true', help='show debug messages')
    return parser.parse_args(argv)


def applyOverrides(cfg, args):
    """
    Replace scenario values by the given command line values and record them under the key ``overrides``.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): scenario
        args (:class:`argparse.Namespace`): parsed command line

    Returns:
        :class:`socialbandits.config.ScenarioConfig`
    """

    overrides = IndexedOrderedDict()
    changes = {}
    for flag, keys in OVERRIDES:
        value = getattr(args, flag, None)
        if value is None:
            continue
        target = changes
        for key in keys[:-1]:
            target = target.setdefault(key, {})
        target[keys[-1]] = value
        overrides['--' + flag] = value

    if overrides:
        cfg.update(changes)
        cfg['overrides'] = overrides
        log.info('Command line overrides: %s', dict(overrides))
        checkScenario(cfg)
    return cfg


def _epsilons(net):
    res = np.full(net.numAgents, np.nan)
    for k in range(1, net.numAgents + 1):
        try:
            res[k - 1] = performanceMeasure(net, k)
        except UndefinedMeasureError:
            log.warning('Performance measure undefined for isolated agent %d', k)
    return res


def _formatGroups(groups):
    return ' < '.join(str(g[0]) if len(g) == 1 else '{' + ','.join(str(a) for a in g) + '}' for g in groups)


def buildReport(cfg, bundle):
    """
    Text report of an experiment: parameters, rankings, rank agreement, bound domination and ζ sensitivity.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): scenario
        bundle (:class:`socialbandits.ixo.collections.IndexedOrderedDict`): output of :func:`runExperiment`

    Returns:
        `str`
    """

    lines = ['Scenario: {}'.format(cfg.name), '', 'Parameters', '----------']
    params = cfg.effective().toDict()
    overrides = params.pop('overrides', None)
    params['bounds']['deltaPrime'] = deltaPrimeFromScenario(cfg)
    lines.append(dictStructure(params, indent=2).rstrip())
    lines += ['', 'Command line overrides', '----------------------']
    if overrides:
        lines += ['{} {}'.format(flag, value) for flag, value in overrides.items()]
    else:
        lines.append('none')

    summary = bundle.summary
    lines += ['', 'Agents', '------',
              summary[['agent', 'p', 'epsilon', 'predicted_rank', 'empirical_rank', 'mean_regret_T', 'stderr_T',
                       'regret_bound_T']].to_string(index=False, float_format=lambda v: '{:.4g}'.format(v))]

    lines += ['', 'Rank agreement', '--------------']
    agreement = bundle.agreement
    if agreement is None:
        lines.append('not available: the performance measure is undefined for isolated agents')
    else:
        lines += ['predicted ranking: {}'.format(_formatGroups(bundle.predicted)),
                  'empirical ranking: {}'.format(_formatGroups(bundle.empirical)),
                  'verdict: {}'.format('AGREE' if agreement.agreement else 'DISAGREE'),
                  'Kendall distance: {}'.format(agreement.kendallDistance),
                  'distinguishable pairs: {} of {}'.format(agreement.distinguishablePairs, agreement.orderedPairs),
                  'discordant pairs: {}'.format(agreement.discordantPairs or 'none'),
                  'predicted ties distinguishable in simulation: {}'.format(agreement.tiesResolved or 'none')]

    domination = bundle.domination
    lines += ['', 'Sample bound domination', '-----------------------',
              'verdict: {}'.format('DOMINATED' if domination.dominated else 'VIOLATED'),
              'violations (agent, arm): {}'.format(domination.violations or 'none')]

    lines += ['', 'Regret bound at T for several zeta', '----------------------------------',
              bundle.sensitivity.to_string(float_format=lambda v: '{:.6g}'.format(v))]
    return '\n'.join(lines) + '\n'


def runExperiment(cfg, outDir='.'):
    """
    Run the Monte Carlo experiment of a scenario and write ``regret.csv``, ``summary.csv`` and ``report.txt`` into
    `outDir`. Identical scenarios produce identical files.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): checked scenario
        outDir (`str` or :class:`pathlib.Path`): output directory, created if missing

    Returns:
        :class:`socialbandits.ixo.collections.IndexedOrderedDict` with keys `result`, `summary`, `predicted`,
        `empirical`, `agreement`, `domination`, `sensitivity`, `files`
    """

    inst = instanceFromScenario(cfg)
    net = networkFromScenario(cfg)
    policies = policiesFromScenario(cfg, net)
    params = boundParamsFromScenario(cfg)
    T = cfg.horizon

    result = runMonteCarlo(inst, net, policies, T, cfg.runs, cfg.seed, jobs=cfg.jobs)

    epsilons = _epsilons(net)
    predicted = predictedRanking(net) if np.all(np.isfinite(epsilons)) else None
    means = result.terminalMean()
    stderrs = result.terminalStderr()
    empirical = empiricalRanking(means)

    fTs = inflationValues(policies, T)
    domination = boundDomination(params, inst, result.meanPullCounts, fTs, T)
    regretBounds = np.array([regretBound(params, inst, fT, T) for fT in fTs])

    bundle = IndexedOrderedDict()
    bundle['result'] = result
    bundle['summary'] = summaryFrame(result, net.sociability, epsilons, groupRanks(predicted) if predicted else {},
                                     groupRanks(empirical), regretBounds, domination.bounds)
    bundle['predicted'] = predicted
    bundle['empirical'] = empirical
    bundle['agreement'] = rankAgreement(predicted, means, stderrs) if predicted else None
    bundle['domination'] = domination
    bundle['sensitivity'] = zetaSensitivity(inst, params.xi, params.numAgents, fTs, T)

    out = Path(outDir)
    out.mkdir(parents=True, exist_ok=True)
    files = IndexedOrderedDict()
    files['regret'] = emitRegretCsv(result, out / 'regret.csv')
    files['summary'] = emitSummaryCsv(bundle.summary, out / 'summary.csv')
    files['report'] = writeReport(buildReport(cfg, bundle), out / 'report.txt')
    bundle['files'] = files
    return bundle


def start(argv=None):
    """
    Entry point of the ``socialbandits`` command.

    Args:
        argv (`list` of `str`): command line arguments, defaults to ``sys.argv[1:]``

    Returns:
        `int` -- exit status
    """

    args = parseArgs(argv)
    configLogger(debug=args.debug)

    try:
        cfg = applyOverrides(loadScenario(args.scenario), args)
    except ScenarioError as e:
        print('socialbandits: invalid scenario: {}'.format(e), file=sys.stderr)
        return EXIT_CONFIG

    try:
        bundle = runExperiment(cfg, args.out)
    except ScenarioError as e:
        print('socialbandits: invalid scenario: {}'.format(e), file=sys.stderr)
        return EXIT_CONFIG
    except Exception as e:
        log.debug('Experiment failed', exc_info=True)
        print('socialbandits: {}: {}'.format(type(e).__name__, e), file=sys.stderr)
        return EXIT_RUNTIME

    agreement = bundle.agreement
    if agreement is not None:
        log.info('Rank agreement: %s (Kendall distance %d)', agreement.agreement, agreement.kendallDistance)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(start())
