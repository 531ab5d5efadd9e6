import numpy as np
from scipy import stats


def meanStderr(samples):
    """
    Mean and standard error of the mean along the first axis, i.e. over Monte Carlo replicates. Replicates are
    reduced in the order they are stored, so the result does not depend on how they were computed.

    A single replicate has a standard error of 0.

    Args:
        samples (:class:`numpy.ndarray`): array with replicates along axis 0

    Returns:
        - :class:`numpy.ndarray` -- mean over replicates
        - :class:`numpy.ndarray` -- standard error over replicates
    """

    samples = np.asarray(samples, dtype=np.float64)
    if samples.shape[0] < 1:
        raise ValueError('meanStderr: no samples given')

    mean = samples.mean(axis=0)
    if samples.shape[0] == 1:
        return mean, np.zeros_like(mean)

    # corrected sample standard deviation
    stderr = stats.sem(samples, axis=0, ddof=1)
    return mean, stderr


def combinedStderr(stderrA, stderrB):
    """
    Standard error of the difference of two independent means.

    Args:
        stderrA (`float`): standard error of the first mean
        stderrB (`float`): standard error of the second mean

    Returns:
        `float`
    """

    return float(np.sqrt(stderrA ** 2 + stderrB ** 2))
