"""
Exceptions raised by the package. All of them derive from :class:`ValueError` since they signal input that the
computation is not defined for.
"""


class ColdStartError(ValueError):
    """
    An exploration bonus was requested for an arm that has not been observed yet (N = 0). The caller has to take the
    cold-start path of :func:`socialbandits.policy.sampling.selectArm` instead.
    """


class UndefinedMeasureError(ValueError):
    """
    The performance measure was requested for an agent without neighbors.
    """


class NoObservationsError(ValueError):
    """
    Every Monte Carlo run of an empirical tail-probability check ended without a single observation of the arm.
    """
