import json

import numpy as np
import pandas as pd
import pytest

from socialbandits.cli.main import start, runExperiment, EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME
from socialbandits.io import loadScenario, emitRegretCsv


def _twoAgents(tmp_path):
    content = {'name': 'pair',
               'arms': {'means': [1.0, 2.0, 4.0], 'varianceProxies': 1.0},
               'graph': {'type': 'complete', 'numAgents': 2},
               'sociability': [0.5, 0.25],
               'horizon': 3,
               'runs': 2,
               'seed': 7}
    path = tmp_path / 'pair.json'
    path.write_text(json.dumps(content))
    return path


def test_regretCsvLayout(tmp_path):
    out = tmp_path / 'out'
    assert start(['--scenario', str(_twoAgents(tmp_path)), '--out', str(out)]) == EXIT_OK

    text = (out / 'regret.csv').read_text()
    lines = text.split('\n')
    assert text.endswith('\n')
    assert lines[0] == 't,agent,mean_cum_regret,stderr'
    assert len(lines) == 1 + 6 + 1

    frame = pd.read_csv(out / 'regret.csv')
    assert frame['t'].tolist() == [1, 1, 2, 2, 3, 3]
    assert frame['agent'].tolist() == [1, 2, 1, 2, 1, 2]
    for _, rows in frame.groupby('agent'):
        assert rows['mean_cum_regret'].is_monotonic_increasing


def test_emptyCurvesRejected(tmp_path):
    with pytest.raises(ValueError):
        emitRegretCsv(pd.DataFrame(columns=['t', 'agent', 'mean_cum_regret', 'stderr']), tmp_path / 'r.csv')


def test_presetSummaryAndReport(tmp_path):
    out = tmp_path / 'all-to-all'
    code = start(['--scenario', 'paper-all-to-all', '--runs', '4', '--horizon', '30', '--seed', '11', '--zeta', '3',
                  '--out', str(out)])
    assert code == EXIT_OK

    summary = pd.read_csv(out / 'summary.csv')
    np.testing.assert_allclose(summary['epsilon'], [0.542, 0.415, 0.825, 0.542, 0.374, 0.401], atol=5e-4)
    assert summary['predicted_rank'].tolist() == [4, 3, 6, 4, 1, 2]
    assert summary['agent'].tolist() == [1, 2, 3, 4, 5, 6]
    assert sorted(summary['empirical_rank'])[0] == 1
    for i in range(1, 11):
        assert 'pulls_arm{}'.format(i) in summary.columns
        assert 'bound_arm{}'.format(i) in summary.columns
    assert summary['bound_arm10'].isna().all()
    np.testing.assert_allclose(summary[['pulls_arm{}'.format(i) for i in range(1, 11)]].sum(axis=1), 30)

    report = (out / 'report.txt').read_text()
    assert 'Scenario: paper-all-to-all' in report
    assert '--runs 4' in report
    assert '--zeta 3.0' in report
    assert 'predicted ranking: 5 < 6 < 2 < {1,4} < 3' in report
    assert 'verdict: AGREE' in report or 'verdict: DISAGREE' in report
    assert 'verdict: DOMINATED' in report or 'verdict: VIOLATED' in report
    assert 'zeta: 3.0' in report


def test_reportEchoesDefaults(tmp_path):
    out = tmp_path / 'out'
    assert start(['--scenario', str(_twoAgents(tmp_path)), '--out', str(out)]) == EXIT_OK

    report = (out / 'report.txt').read_text()
    params = report.split('Command line overrides')[0]
    assert 'horizon: 3' in params
    assert 'jobs: 1' in params
    assert 'policy:\n  xi: 1.1\n  inflation: performance-measure\n' in params
    assert 'bounds:\n  zeta: 2.0\n  deltaPrime: 0.105' in params
    assert 'name: pair' in params


def test_effectiveKeepsFileValues():
    cfg = loadScenario('paper-case1')
    del cfg['horizon']
    cfg.policy['xi'] = 1.5
    effective = cfg.effective()
    assert effective.horizon == 500
    assert effective.policy.xi == 1.5
    assert 'horizon' not in cfg.keys()


def test_singleRunHasZeroStderr(tmp_path):
    cfg = loadScenario('paper-cyclic')
    cfg['runs'] = 1
    cfg['horizon'] = 20
    bundle = runExperiment(cfg, tmp_path)
    summary = pd.read_csv(bundle.files.summary)
    assert (summary['stderr_T'] == 0).all()
    assert (pd.read_csv(bundle.files.regret)['stderr'] == 0).all()


def test_outputsByteIdentical(tmp_path):
    args = ['--scenario', 'paper-cyclic', '--runs', '5', '--horizon', '25', '--seed', '3']
    assert start(args + ['--out', str(tmp_path / 'a')]) == EXIT_OK
    assert start(args + ['--out', str(tmp_path / 'b')]) == EXIT_OK
    assert start(args + ['--out', str(tmp_path / 'c'), '--jobs', '2']) == EXIT_OK
    for name in ('regret.csv', 'summary.csv', 'report.txt'):
        assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()
    # the worker count only shows up in the parameter echo of the report
    for name in ('regret.csv', 'summary.csv'):
        assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'c' / name).read_bytes()


def test_isolatedAgentsWithoutRanking(tmp_path):
    content = {'name': 'loner',
               'arms': {'means': [1.0, 2.0], 'varianceProxies': 1.0},
               'graph': {'type': 'edges', 'numAgents': 3, 'edges': [[1, 2]]},
               'sociability': [0.5, 0.5, 0.5],
               'policy': {'inflation': 'zero'},
               'horizon': 10,
               'runs': 2}
    path = tmp_path / 'loner.json'
    path.write_text(json.dumps(content))
    bundle = runExperiment(loadScenario(path), tmp_path / 'out')

    assert bundle.agreement is None
    assert np.isnan(bundle.summary['epsilon'][2])
    assert bundle.summary['predicted_rank'].isna().all()
    assert 'not available' in bundle.files.report.read_text()


def test_invalidScenarioExitCode(tmp_path, capsys):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'name': 'bad',
                                'arms': {'means': [1.0, 2.0], 'varianceProxies': 1.0},
                                'graph': {'type': 'complete', 'numAgents': 5},
                                'sociability': [0.5] * 6}))
    assert start(['--scenario', str(path), '--out', str(tmp_path)]) == EXIT_CONFIG
    assert 'sociability' in capsys.readouterr().err

    assert start(['--scenario', 'no-such-preset']) == EXIT_CONFIG
    assert start(['--scenario', 'paper-case1', '--horizon', '1']) == EXIT_CONFIG


def test_runtimeErrorExitCode(tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('not a directory')
    code = start(['--scenario', 'paper-case1', '--runs', '1', '--horizon', '5', '--out', str(blocker)])
    assert code == EXIT_RUNTIME


def test_missingScenarioFlag():
    with pytest.raises(SystemExit):
        start([])
