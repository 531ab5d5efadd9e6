"""
Inflation functions f(t) of the exploration bonus and the policy configuration that carries them.
"""

import numpy as np


class Inflation:
    """
    Base class of the nonnegative, nondecreasing, sublogarithmic inflation functions. Subclasses implement
    :meth:`value`.
    """

    name = None

    def value(self, t):
        raise NotImplementedError()

    def spec(self):
        """
        Scenario-file representation, the inverse of :func:`inflationFromSpec`.
        """

        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.spec() == other.spec()

    def __hash__(self):
        return hash((type(self).__name__, self.spec()))

    def __repr__(self):
        return '{}()'.format(self.__class__.__name__)


class ConstantInflation(Inflation):
    """
    f(t) = c for all t. With ``c = ε_p^k`` this is the performance-measure protocol.
    """

    name = 'constant'

    def __init__(self, c):
        c = float(c)
        if not c >= 0:
            raise ValueError('ConstantInflation: value must be >= 0, got {}'.format(c))
        self.c = c

    def value(self, t):
        return self.c

    def spec(self):
        return self.c

    def __repr__(self):
        return 'ConstantInflation({!r})'.format(self.c)


class LogLogInflation(Inflation):
    """
    f(t) = max(0, log(log(t))), 0 for t <= 2.
    """

    name = 'log-log-time'

    def value(self, t):
        if t <= 2:
            return 0.0
        return max(0.0, float(np.log(np.log(t))))


class ZeroInflation(Inflation):
    """
    f(t) = 0, the bonus reduces to the classic UCB bonus.
    """

    name = 'zero'

    def value(self, t):
        return 0.0


def inflationFromSpec(spec):
    """
    Build an inflation function from its scenario-file representation: ``'zero'``, ``'log-log-time'`` or a number
    for a constant.

    The ``'performance-measure'`` protocol depends on the network and is resolved by
    :func:`socialbandits.io.scenario.policiesFromScenario`.

    Args:
        spec (`str` or `float`): inflation specification

    Returns:
        :class:`.Inflation`
    """

    if isinstance(spec, Inflation):
        return spec
    if isinstance(spec, (int, float)) and not isinstance(spec, bool):
        return ConstantInflation(spec)
    if spec == ZeroInflation.name:
        return ZeroInflation()
    if spec == LogLogInflation.name:
        return LogLogInflation()
    raise ValueError('inflationFromSpec: unknown inflation "{}"'.format(spec))


class PolicyConfig:
    """
    Parameters of the sampling rule of one agent.

    Attributes:
        xi (`float`):                   exploration parameter ξ > 1
        inflation (:class:`.Inflation`): inflation function f(t)
        numAgents (`int`):              number of agents K, scales the arm deviations as σ_i = √K σ'_i
    """

    def __init__(self, xi=1.1, inflation=None, numAgents=1):
        """
        Args:
            xi (`float`): exploration parameter ξ, strictly larger than 1
            inflation (:class:`.Inflation`, `str` or `float`): inflation function, defaults to
                :class:`.ZeroInflation`
            numAgents (`int`): number of agents K
        """

        xi = float(xi)
        if not xi > 1:
            raise ValueError('PolicyConfig: xi must be > 1, got {}'.format(xi))
        if int(numAgents) < 1:
            raise ValueError('PolicyConfig: numAgents must be >= 1, got {}'.format(numAgents))

        self.xi = xi
        self.inflation = ZeroInflation() if inflation is None else inflationFromSpec(inflation)
        self.numAgents = int(numAgents)

    def __repr__(self):
        return 'PolicyConfig(xi={}, inflation={!r}, numAgents={})'.format(self.xi, self.inflation, self.numAgents)

    def __eq__(self, other):
        if not isinstance(other, PolicyConfig):
            return NotImplemented
        return (self.xi, self.inflation, self.numAgents) == (other.xi, other.inflation, other.numAgents)

    def sigmas(self, sigmaPrimes):
        """
        Scaled arm deviations σ_i = √K σ'_i.

        Args:
            sigmaPrimes (:class:`numpy.ndarray`): standard deviation σ'_i of every arm

        Returns:
            :class:`numpy.ndarray`
        """

        return np.sqrt(self.numAgents) * np.asarray(sigmaPrimes, dtype=np.float64)


def inflationValue(cfg, t):
    """
    Evaluate the inflation function of a policy at round `t`.

    Args:
        cfg (:class:`.PolicyConfig`): policy
        t (`int`): round index, at least 1

    Returns:
        `float`
    """

    if t < 1:
        raise ValueError('inflationValue: t must be >= 1, got {}'.format(t))
    return cfg.inflation.value(t)
