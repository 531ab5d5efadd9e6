import numpy as np

from socialbandits.ixo.decorators import lazy


class BanditInstance:
    """
    Ground truth of the bandit: the mean reward and the variance proxy of every arm. Agents never see the means,
    the variance proxies are known to them.

    Rewards are Gaussian, so the variance proxy equals the reward variance. Arms are numbered ``1..N`` in every
    interface, the arrays held by the instance are 0-based.

    Attributes:
        means (:class:`numpy.ndarray`):             mean reward per arm [reward units]
        varianceProxies (:class:`numpy.ndarray`):   variance proxy per arm [reward units²]
    """

    def __init__(self, means, varianceProxies):
        """
        Args:
            means (`list` of `float`): mean reward per arm
            varianceProxies (`list` of `float` or `float`): variance proxy per arm, a scalar is used for all arms
        """

        means = np.array(means, dtype=np.float64).ravel()
        varianceProxies = np.array(varianceProxies, dtype=np.float64)
        if varianceProxies.ndim == 0:
            varianceProxies = np.full(means.shape, float(varianceProxies))
        varianceProxies = varianceProxies.ravel()

        if means.size < 2:
            raise ValueError('BanditInstance: at least 2 arms required, got {}'.format(means.size))
        if means.size != varianceProxies.size:
            raise ValueError('BanditInstance: {} means but {} variance proxies given'.format(
                means.size, varianceProxies.size))
        if not np.all(np.isfinite(means)):
            raise ValueError('BanditInstance: means must be finite')
        if not np.all(varianceProxies > 0):
            raise ValueError('BanditInstance: variance proxies must be strictly positive, got {}'.format(
                varianceProxies.tolist()))

        means.setflags(write=False)
        varianceProxies.setflags(write=False)
        self.means = means
        self.varianceProxies = varianceProxies

    def __repr__(self):
        return 'BanditInstance(means={}, varianceProxies={})'.format(self.means.tolist(),
                                                                     self.varianceProxies.tolist())

    def __eq__(self, other):
        if not isinstance(other, BanditInstance):
            return NotImplemented
        return (np.array_equal(self.means, other.means)
                and np.array_equal(self.varianceProxies, other.varianceProxies))

    @property
    def numArms(self):
        """
        Number of arms N.

        Returns:
            `int`
        """

        return self.means.size

    @lazy
    def sigmaPrimes(self):
        """
        Standard deviation σ' of every arm.

        Returns:
            :class:`numpy.ndarray`
        """

        res = np.sqrt(self.varianceProxies)
        res.setflags(write=False)
        return res

    def optimalArm(self):
        """
        Smallest (1-based) index attaining the largest mean.

        Returns:
            `int`
        """

        # np.argmax returns the first occurrence
        return int(np.argmax(self.means)) + 1

    @lazy
    def _gaps(self):
        res = self.means.max() - self.means
        res.setflags(write=False)
        return res

    def gaps(self):
        """
        Gap Δ_i = μ_{i*} - μ_i of every arm, 0 for the optimal arm. Entry ``i - 1`` belongs to arm ``i``.

        Returns:
            :class:`numpy.ndarray`
        """

        return self._gaps

    def suboptimalArms(self):
        """
        1-based indices of all arms with a strictly positive gap.

        Returns:
            `list` of `int`
        """

        return [int(i) + 1 for i in np.flatnonzero(self.gaps() > 0)]


def optimalArm(inst):
    """
    Smallest (1-based) index of the arm with the largest mean.

    Args:
        inst (:class:`.BanditInstance`): bandit instance

    Returns:
        `int`
    """

    return inst.optimalArm()


def gaps(inst):
    """
    Gaps Δ_i of all arms, entry ``i - 1`` belongs to arm ``i``.

    Args:
        inst (:class:`.BanditInstance`): bandit instance

    Returns:
        :class:`numpy.ndarray`
    """

    return inst.gaps()
