"""
Closed-form bounds on the number of suboptimal samples and the cumulative regret of an agent, and the concentration
bound of the arm estimates. All logarithms are natural.
"""

import numpy as np
import pandas as pd


class BoundParams:
    """
    Parameters shared by the bounds.

    Attributes:
        zeta (`float`):     peeling parameter ζ > 1
        xi (`float`):       exploration parameter ξ > 1 of the sampling rule
        numAgents (`int`):  number of agents K
    """

    def __init__(self, zeta=2.0, xi=1.1, numAgents=1):
        zeta = float(zeta)
        xi = float(xi)
        if not zeta > 1:
            raise ValueError('BoundParams: zeta must be > 1, got {}'.format(zeta))
        if not xi > 1:
            raise ValueError('BoundParams: xi must be > 1, got {}'.format(xi))
        if int(numAgents) < 1:
            raise ValueError('BoundParams: numAgents must be >= 1, got {}'.format(numAgents))

        self.zeta = zeta
        self.xi = xi
        self.numAgents = int(numAgents)

    def __repr__(self):
        return 'BoundParams(zeta={}, xi={}, numAgents={})'.format(self.zeta, self.xi, self.numAgents)

    @property
    def nu(self):
        """
        ν = 1 / log ζ
        """

        return 1.0 / np.log(self.zeta)

    def kappa(self, sigma):
        """
        κ = 1 / (σ² (ζ^(1/4) + ζ^(-1/4))²), always below 1 / (4σ²).

        Args:
            sigma (`float`): scaled arm deviation σ_i

        Returns:
            `float`
        """

        return 1.0 / (sigma ** 2 * (self.zeta ** 0.25 + self.zeta ** -0.25) ** 2)

    @property
    def delta(self):
        """
        Tail exponent δ(ξ) = ξ + 1.
        """

        return self.xi + 1.0

    def deltaPrime(self, epsilon=0.2):
        """
        Radius slack δ'(ε) = δ(ξ) ε / 4.

        Args:
            epsilon (`float`): ε > 0

        Returns:
            `float`
        """

        return self.delta * epsilon / 4.0

    def sigmas(self, sigmaPrimes):
        """
        σ_i = √K σ'_i
        """

        return np.sqrt(self.numAgents) * np.asarray(sigmaPrimes, dtype=np.float64)


def etaThreshold(sigma, delta, xi, fT, T):
    """
    Number of observations η_i(T) beyond which the index of a suboptimal arm falls below the optimal mean with high
    probability:

        η = (4σ²(ξ+1)/Δ²) (1 + sqrt(1 + Δ²/(2σ²(ξ+1)) · f(T)/log T)) log T

    Args:
        sigma (`float`): scaled arm deviation σ_i
        delta (`float`): gap Δ_i > 0
        xi (`float`): exploration parameter ξ
        fT (`float`): inflation value f(T)
        T (`int`): horizon, at least 2

    Returns:
        `float`
    """

    if not delta > 0:
        raise ValueError('etaThreshold: gap must be > 0, the optimal arm has no threshold')
    if T < 2:
        raise ValueError('etaThreshold: T must be >= 2, got {}'.format(T))

    logT = np.log(T)
    scale = 4.0 * sigma ** 2 * (xi + 1.0) / delta ** 2
    inner = 1.0 + delta ** 2 / (2.0 * sigma ** 2 * (xi + 1.0)) * fT / logT
    return float(scale * (1.0 + np.sqrt(inner)) * logT)


def gammaConstant(zeta, xi, K):
    """
    Horizon independent part of the sample bound:

        Γ(ζ, ξ, K) = (1 + log K) / log ζ + (log K / ξ + 2 / (ξ - 1)) / (2^ξ log ζ)

    Args:
        zeta (`float`): ζ > 1
        xi (`float`): ξ > 1
        K (`int`): number of agents

    Returns:
        `float`
    """

    if not (zeta > 1 and xi > 1 and K >= 1):
        raise ValueError('gammaConstant: need zeta > 1, xi > 1, K >= 1, got {}, {}, {}'.format(zeta, xi, K))

    logZeta = np.log(zeta)
    logK = np.log(K)
    return float((1.0 + logK) / logZeta + (logK / xi + 2.0 / (xi - 1.0)) / (2.0 ** xi * logZeta))


def _horizonTerm(params, T):
    logK = np.log(params.numAgents)
    xi = params.xi
    return (logK / (T * xi) + 1.0 / (xi - 1.0)) / (T ** (xi - 1.0) * np.log(params.zeta))


def expectedSamplesBound(params, sigma, delta, fT, T):
    """
    Upper bound on the expected number of times an agent samples a suboptimal arm in `T` rounds: Γ(ζ, ξ, K), a
    horizon term vanishing as T grows, and the threshold η_i(T).

    Args:
        params (:class:`.BoundParams`): bound parameters
        sigma (`float`): scaled arm deviation σ_i
        delta (`float`): gap Δ_i > 0
        fT (`float`): inflation value f(T) of the agent
        T (`int`): horizon, at least 2

    Returns:
        `float`
    """

    eta = etaThreshold(sigma, delta, params.xi, fT, T)
    return float(gammaConstant(params.zeta, params.xi, params.numAgents) + _horizonTerm(params, T) + eta)


def armSampleBounds(params, inst, fT, T):
    """
    :func:`expectedSamplesBound` for every arm of an instance, `nan` for arms without a gap.

    Args:
        params (:class:`.BoundParams`): bound parameters
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        fT (`float`): inflation value f(T) of the agent
        T (`int`): horizon, at least 2

    Returns:
        :class:`numpy.ndarray`
    """

    sigmas = params.sigmas(inst.sigmaPrimes)
    deltas = inst.gaps()
    res = np.full(inst.numArms, np.nan)
    for i in inst.suboptimalArms():
        res[i - 1] = expectedSamplesBound(params, sigmas[i - 1], deltas[i - 1], fT, T)
    return res


def regretBound(params, inst, fT, T):
    """
    Upper bound on the expected cumulative regret of an agent after `T` rounds, the gap-weighted sum of the sample
    bounds of all suboptimal arms.

    Args:
        params (:class:`.BoundParams`): bound parameters
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        fT (`float`): inflation value f(T) of the agent
        T (`int`): horizon, at least 2

    Returns:
        `float`
    """

    if T < 2:
        raise ValueError('regretBound: T must be >= 2, got {}'.format(T))

    deltas = inst.gaps()
    bounds = armSampleBounds(params, inst, fT, T)
    total = 0.0
    for i in inst.suboptimalArms():
        total += deltas[i - 1] * bounds[i - 1]
    return float(total)


def concentrationBound(params, K, t, delta):
    """
    Bound ν log(K t) / t^δ on the probability that an arm estimate leaves its confidence radius at round `t`.

    Args:
        params (:class:`.BoundParams`): bound parameters, provides ν
        K (`int`): number of agents
        t (`int`): round, at least 2
        delta (`float`): tail exponent δ > 0

    Returns:
        `float`
    """

    if t < 2:
        raise ValueError('concentrationBound: t must be >= 2, got {}'.format(t))
    if not delta > 0:
        raise ValueError('concentrationBound: delta must be > 0, got {}'.format(delta))

    return float(params.nu * np.log(K * t) / t ** delta)


def zetaSensitivity(inst, xi, K, fTs, T, zetas=(1.5, 2.0, np.e, 4.0)):
    """
    Regret bound of every agent for several values of ζ.

    Args:
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        xi (`float`): exploration parameter ξ
        K (`int`): number of agents
        fTs (`list` of `float`): inflation value f(T) of every agent
        T (`int`): horizon
        zetas (`list` of `float`): values of ζ

    Returns:
        :class:`pandas.DataFrame` -- one row per ζ, one column per agent
    """

    rows = []
    for zeta in zetas:
        params = BoundParams(zeta=zeta, xi=xi, numAgents=K)
        rows.append([regretBound(params, inst, fT, T) for fT in fTs])
    return pd.DataFrame(rows, index=pd.Index(zetas, name='zeta'),
                        columns=['agent{}'.format(k) for k in range(1, len(fTs) + 1)])
