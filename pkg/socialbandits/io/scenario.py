"""
Scenario files and presets.

A scenario is a JSON document with camelCase keys::

    {
        "name": "paper-all-to-all",
        "arms": {"means": [40, 50, ...], "varianceProxies": [25, 25, ...]},
        "graph": {"type": "complete", "numAgents": 6},
        "sociability": [0.5, 0.85, 0.05, 0.5, 1.0, 0.9],
        "policy": {"xi": 1.1, "inflation": "performance-measure"},
        "horizon": 500,
        "runs": 1000,
        "seed": 0,
        "bounds": {"zeta": 2.0}
    }

`graph.type` is one of ``complete``, ``cycle``, ``regular`` (``degree`` plus either ``edges`` or a random graph drawn
with ``graph.seed``) and ``edges`` (explicit 1-based ``edges``). `policy.inflation` is ``zero``, ``log-log-time``,
``performance-measure`` (agent k uses the constant ε_p^k) or a number for a constant. `varianceProxies` may be a single
number for all arms. `bounds.deltaPrime` defaults to 0.05 (ξ + 1).
"""

from collections import OrderedDict
from numbers import Number
from pathlib import Path
import json
import logging as log

from socialbandits.analysis.bounds import BoundParams
from socialbandits.analysis.measure import performanceMeasure
from socialbandits.config import ScenarioConfig
from socialbandits.errors import UndefinedMeasureError
from socialbandits.model.instance import BanditInstance
from socialbandits.model.network import (completeNetwork, cycleNetwork, regularNetwork, networkFromEdges)
from socialbandits.policy.inflation import ConstantInflation, PolicyConfig, inflationFromSpec, inflationValue


class ScenarioError(ValueError):
    """
    Invalid scenario: unreadable file, JSON syntax error (with line and column) or a schema violation (with the
    dotted field path).
    """


GRAPH_TYPES = ('complete', 'cycle', 'regular', 'edges')
PERFORMANCE_MEASURE = 'performance-measure'

# allowed keys per section
SECTIONS = {'arms': ('means', 'varianceProxies'),
            'graph': ('type', 'numAgents', 'edges', 'degree', 'seed'),
            'policy': ('xi', 'inflation'),
            'bounds': ('zeta', 'deltaPrime')}
TOP_LEVEL = ('name', 'arms', 'graph', 'sociability', 'policy', 'horizon', 'runs', 'seed', 'bounds', 'jobs',
             'overrides')

BENCHMARK_MEANS = [40, 50, 50, 60, 70, 70, 80, 90, 92, 95]
BENCHMARK_VARIANCE_PROXIES = [25] * 10
BENCHMARK_SOCIABILITY = [0.5, 0.85, 0.05, 0.5, 1.0, 0.9]


def _preset(name, graph, sociability, inflation=PERFORMANCE_MEASURE):
    return OrderedDict([('name', name),
                        ('arms', OrderedDict([('means', list(BENCHMARK_MEANS)),
                                              ('varianceProxies', list(BENCHMARK_VARIANCE_PROXIES))])),
                        ('graph', graph),
                        ('sociability', list(sociability)),
                        ('policy', OrderedDict([('xi', 1.1), ('inflation', inflation)])),
                        ('horizon', 500),
                        ('runs', 1000),
                        ('seed', 0),
                        ('bounds', OrderedDict([('zeta', 2.0)]))])


def _complete(numAgents):
    return OrderedDict([('type', 'complete'), ('numAgents', numAgents)])


def _cycle(numAgents):
    return OrderedDict([('type', 'cycle'), ('numAgents', numAgents)])


PRESETS = OrderedDict([
    ('paper-all-to-all', _preset('paper-all-to-all', _complete(6), BENCHMARK_SOCIABILITY)),
    ('paper-cyclic', _preset('paper-cyclic', _cycle(6), BENCHMARK_SOCIABILITY)),
    ('paper-case1', _preset('paper-case1', _complete(4), [0.5, 0, 0, 0])),
    ('paper-case2', _preset('paper-case2', _complete(4), [0.5, 1, 1, 1])),
    ('paper-all-to-all-loglog', _preset('paper-all-to-all-loglog', _complete(6), BENCHMARK_SOCIABILITY,
                                        inflation='log-log-time')),
    ('paper-cyclic-loglog', _preset('paper-cyclic-loglog', _cycle(6), BENCHMARK_SOCIABILITY, inflation='log-log-time')),
])


def loadScenario(source):
    """
    Load a scenario from a preset name or a JSON file and check it with :func:`checkScenario`.

    Args:
        source (`str` or :class:`pathlib.Path`): preset name (see :data:`PRESETS`) or path to a JSON file

    Returns:
        :class:`socialbandits.config.ScenarioConfig`
    """

    if isinstance(source, str) and source in PRESETS:
        log.info('Loading preset scenario "%s"', source)
        cfg = ScenarioConfig(json.loads(json.dumps(PRESETS[source]), object_pairs_hook=OrderedDict))
        return checkScenario(cfg)

    path = Path(source)
    if not path.is_file():
        raise ScenarioError('loadScenario: "{}" is neither a preset ({}) nor an existing file'.format(
            source, ', '.join(PRESETS)))

    try:
        with path.open(encoding='utf-8') as f:
            content = json.load(f, object_pairs_hook=OrderedDict)
    except json.JSONDecodeError as e:
        raise ScenarioError('loadScenario: {} line {} column {}: {}'.format(path, e.lineno, e.colno, e.msg)) from None
    except UnicodeDecodeError as e:
        raise ScenarioError('loadScenario: {} is not UTF-8 encoded: {}'.format(path, e)) from None

    if not isinstance(content, dict):
        raise ScenarioError('loadScenario: {} must contain a JSON object'.format(path))

    log.info('Loading scenario file %s', path)
    return checkScenario(ScenarioConfig(content))


def writeScenario(cfg, path):
    """
    Write a scenario to a JSON file readable by :func:`loadScenario`. CLI overrides are not written.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): scenario
        path (`str` or :class:`pathlib.Path`): target file

    Returns:
        :class:`pathlib.Path`
    """

    path = Path(path)
    content = cfg.toDict()
    content.pop('overrides', None)
    with path.open('w', encoding='utf-8') as f:
        json.dump(content, f, indent=4)
        f.write('\n')
    return path


def _fail(field, message):
    raise ScenarioError('field "{}": {}'.format(field, message))


def _isNumber(value):
    return isinstance(value, Number) and not isinstance(value, bool)


def _isInt(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _numberList(cfg, section, key, minLength=1):
    field = '{}.{}'.format(section, key) if section else key
    values = cfg[section][key] if section else cfg[key]
    if not isinstance(values, list) or len(values) < minLength or not all(_isNumber(v) for v in values):
        _fail(field, 'expected a list of at least {} numbers, got {!r}'.format(minLength, values))
    return values


def _section(cfg, name):
    if name not in cfg.keys():
        _fail(name, 'missing section')
    section = cfg[name]
    if not isinstance(section, dict):
        _fail(name, 'expected an object')
    unknown = [key for key in section.keys() if key not in SECTIONS[name]]
    if unknown:
        _fail('{}.{}'.format(name, unknown[0]), 'unknown key')
    return section


def checkScenario(cfg):
    """
    Check the schema and the cross-field consistency of a scenario. Missing optional sections are added so that
    their defaults apply.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): scenario

    Returns:
        :class:`socialbandits.config.ScenarioConfig` -- the same object
    """

    unknown = [key for key in cfg.keys() if key not in TOP_LEVEL]
    if unknown:
        _fail(unknown[0], 'unknown key')

    # arms
    arms = _section(cfg, 'arms')
    if 'means' not in arms.keys():
        _fail('arms.means', 'missing')
    means = _numberList(cfg, 'arms', 'means', minLength=2)
    if 'varianceProxies' not in arms.keys():
        _fail('arms.varianceProxies', 'missing')
    proxies = arms['varianceProxies']
    if _isNumber(proxies):
        proxies = [proxies]
    elif not isinstance(proxies, list) or not all(_isNumber(v) for v in proxies):
        _fail('arms.varianceProxies', 'expected a number or a list of numbers, got {!r}'.format(proxies))
    elif len(proxies) != len(means):
        _fail('arms.varianceProxies', 'expected {} entries (one per arm), got {}'.format(len(means), len(proxies)))
    if not all(v > 0 for v in proxies):
        _fail('arms.varianceProxies', 'must be strictly positive')

    # graph
    graph = _section(cfg, 'graph')
    graphType = graph['type'] if 'type' in graph.keys() else None
    if graphType not in GRAPH_TYPES:
        _fail('graph.type', 'expected one of {}, got {!r}'.format(', '.join(GRAPH_TYPES), graphType))
    numAgents = graph['numAgents'] if 'numAgents' in graph.keys() else None
    if not _isInt(numAgents) or numAgents < 1:
        _fail('graph.numAgents', 'expected a positive integer, got {!r}'.format(numAgents))
    if graphType == 'cycle' and numAgents < 3:
        _fail('graph.numAgents', 'a cycle needs at least 3 agents')
    if graphType == 'edges' and 'edges' not in graph.keys():
        _fail('graph.edges', 'required for graph type "edges"')
    if graphType == 'regular':
        degree = graph['degree'] if 'degree' in graph.keys() else None
        if not _isInt(degree) or not 0 <= degree < numAgents:
            _fail('graph.degree', 'expected an integer in 0..{}, got {!r}'.format(numAgents - 1, degree))
        if 'edges' not in graph.keys() and (degree * numAgents) % 2:
            _fail('graph.degree', 'no {}-regular graph on {} agents'.format(degree, numAgents))
    if 'edges' in graph.keys():
        edges = graph['edges']
        if not isinstance(edges, list):
            _fail('graph.edges', 'expected a list of agent pairs')
        for n, edge in enumerate(edges):
            field = 'graph.edges[{}]'.format(n)
            if not isinstance(edge, list) or len(edge) != 2 or not all(_isInt(a) for a in edge):
                _fail(field, 'expected a pair of agent indices, got {!r}'.format(edge))
            if not all(1 <= a <= numAgents for a in edge):
                _fail(field, 'agent index out of range 1..{}'.format(numAgents))
            if edge[0] == edge[1]:
                _fail(field, 'self-loop on agent {}'.format(edge[0]))

    # sociability
    if 'sociability' not in cfg.keys():
        _fail('sociability', 'missing')
    sociability = _numberList(cfg, None, 'sociability')
    if len(sociability) != numAgents:
        _fail('sociability', 'expected {} entries (graph.numAgents), got {}'.format(numAgents, len(sociability)))
    if not all(0 <= p <= 1 for p in sociability):
        _fail('sociability', 'values must lie in [0, 1]')

    # policy
    if 'policy' not in cfg.keys():
        cfg['policy'] = ScenarioConfig()
    _section(cfg, 'policy')
    xi = cfg.policy.xi
    if not _isNumber(xi) or not xi > 1:
        _fail('policy.xi', 'expected a number > 1, got {!r}'.format(xi))
    inflation = cfg.policy.inflation
    if inflation != PERFORMANCE_MEASURE:
        try:
            inflationFromSpec(inflation)
        except ValueError as e:
            _fail('policy.inflation', str(e))

    # run parameters
    for key, minimum in (('horizon', 2), ('runs', 1), ('seed', 0), ('jobs', None)):
        value = cfg[key]
        if not _isInt(value) or (minimum is not None and value < minimum):
            _fail(key, 'expected an integer{}, got {!r}'.format(
                '' if minimum is None else ' >= {}'.format(minimum), value))
    if cfg.jobs == 0:
        _fail('jobs', 'must not be 0')

    # bounds
    if 'bounds' not in cfg.keys():
        cfg['bounds'] = ScenarioConfig()
    _section(cfg, 'bounds')
    zeta = cfg.bounds.zeta
    if not _isNumber(zeta) or not zeta > 1:
        _fail('bounds.zeta', 'expected a number > 1, got {!r}'.format(zeta))
    if 'deltaPrime' in cfg.bounds.keys():
        dp = cfg.bounds['deltaPrime']
        if not _isNumber(dp) or dp < 0:
            _fail('bounds.deltaPrime', 'expected a number >= 0, got {!r}'.format(dp))

    # cross-field: the performance-measure protocol needs a neighbor for every agent
    if inflation == PERFORMANCE_MEASURE:
        net = networkFromScenario(cfg)
        isolated = [k for k in range(1, numAgents + 1) if net.degree(k) == 0]
        if isolated:
            _fail('policy.inflation', 'performance-measure is undefined for isolated agents {}'.format(isolated))

    return cfg


def instanceFromScenario(cfg):
    """
    Returns:
        :class:`socialbandits.model.instance.BanditInstance`
    """

    return BanditInstance(cfg.arms.means, cfg.arms.varianceProxies)


def networkFromScenario(cfg):
    """
    Build the observation network of a scenario.

    Returns:
        :class:`socialbandits.model.network.ObservationNetwork`
    """

    graph = cfg.graph
    K = graph.numAgents
    try:
        if graph.type == 'complete':
            return completeNetwork(K, cfg.sociability)
        if graph.type == 'cycle':
            return cycleNetwork(K, cfg.sociability)
        if graph.type == 'regular':
            if 'edges' in graph.keys():
                return networkFromEdges(K, graph.edges, cfg.sociability, degree=graph.degree)
            seed = graph['seed'] if 'seed' in graph.keys() else cfg.seed
            return regularNetwork(K, graph.degree, cfg.sociability, seed=seed)
        return networkFromEdges(K, graph.edges, cfg.sociability)
    except ValueError as e:
        raise ScenarioError('field "graph": {}'.format(e)) from None


def policiesFromScenario(cfg, net=None):
    """
    One policy per agent. With the ``performance-measure`` inflation agent k uses the constant ε_p^k.

    Args:
        cfg (:class:`socialbandits.config.ScenarioConfig`): scenario
        net (:class:`socialbandits.model.network.ObservationNetwork`): network, built from `cfg` if not given

    Returns:
        `list` of :class:`socialbandits.policy.inflation.PolicyConfig`
    """

    net = networkFromScenario(cfg) if net is None else net
    K = net.numAgents
    if cfg.policy.inflation != PERFORMANCE_MEASURE:
        return [PolicyConfig(cfg.policy.xi, cfg.policy.inflation, K)] * K

    try:
        return [PolicyConfig(cfg.policy.xi, ConstantInflation(performanceMeasure(net, k)), K)
                for k in range(1, K + 1)]
    except UndefinedMeasureError as e:
        raise ScenarioError('field "policy.inflation": {}'.format(e)) from None


def boundParamsFromScenario(cfg):
    """
    Returns:
        :class:`socialbandits.analysis.bounds.BoundParams`
    """

    return BoundParams(zeta=cfg.bounds.zeta, xi=cfg.policy.xi, numAgents=cfg.graph.numAgents)


def deltaPrimeFromScenario(cfg):
    """
    Radius slack δ'(ε) of the tail checks, 0.05 (ξ + 1) unless given.

    Returns:
        `float`
    """

    if 'deltaPrime' in cfg.bounds.keys():
        return float(cfg.bounds['deltaPrime'])
    return boundParamsFromScenario(cfg).deltaPrime()


def inflationValues(policies, t):
    """
    Inflation value f(t) of every agent.

    Args:
        policies (`list` of :class:`socialbandits.policy.inflation.PolicyConfig`): policies
        t (`int`): round

    Returns:
        `list` of `float`
    """

    return [inflationValue(cfg, t) for cfg in policies]
