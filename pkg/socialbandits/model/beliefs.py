import numpy as np


class AgentBeliefs:
    """
    Running statistics of a single agent. Owned by exactly one simulation run.

    Attributes:
        obsCounts (:class:`numpy.ndarray`):       N_i^k, number of observed rewards per arm (own pulls included)
        obsRewardSums (:class:`numpy.ndarray`):   S_i^k, sum of observed rewards per arm
        pullCounts (:class:`numpy.ndarray`):      n_i^k, number of own pulls per arm

    Entry ``i - 1`` of each array belongs to arm ``i``.
    """

    def __init__(self, numArms):
        """
        Args:
            numArms (`int`): number of arms N
        """

        self.obsCounts = np.zeros(numArms, dtype=np.int64)
        self.obsRewardSums = np.zeros(numArms, dtype=np.float64)
        self.pullCounts = np.zeros(numArms, dtype=np.int64)

    def __repr__(self):
        return 'AgentBeliefs(obsCounts={}, obsRewardSums={}, pullCounts={})'.format(
            self.obsCounts.tolist(), self.obsRewardSums.tolist(), self.pullCounts.tolist())

    def __eq__(self, other):
        if not isinstance(other, AgentBeliefs):
            return NotImplemented
        return (np.array_equal(self.obsCounts, other.obsCounts)
                and np.array_equal(self.obsRewardSums, other.obsRewardSums)
                and np.array_equal(self.pullCounts, other.pullCounts))

    @property
    def numArms(self):
        return self.obsCounts.size

    @property
    def rounds(self):
        """
        Number of completed rounds, i.e. the total number of own pulls.

        Returns:
            `int`
        """

        return int(self.pullCounts.sum())

    def unseenArms(self):
        """
        1-based indices of arms without any observation.

        Returns:
            :class:`numpy.ndarray`
        """

        return np.flatnonzero(self.obsCounts == 0) + 1

    def meanEstimates(self):
        """
        Empirical mean S_i^k / N_i^k per arm, `nan` for arms that were never observed.

        Returns:
            :class:`numpy.ndarray`
        """

        res = np.full(self.numArms, np.nan)
        seen = self.obsCounts > 0
        res[seen] = self.obsRewardSums[seen] / self.obsCounts[seen]
        return res

    def observe(self, arms, rewards):
        """
        Add observed pulls. Arms may repeat, e.g. when several neighbors pulled the same arm.

        Args:
            arms (:class:`numpy.ndarray`): 1-based arm of every observed pull
            rewards (:class:`numpy.ndarray`): reward of every observed pull
        """

        idx = np.asarray(arms, dtype=np.int64) - 1
        np.add.at(self.obsCounts, idx, 1)
        np.add.at(self.obsRewardSums, idx, np.asarray(rewards, dtype=np.float64))

    def recordPull(self, arm):
        """
        Count an own pull of `arm`. The reward itself enters through :meth:`observe`.

        Args:
            arm (`int`): 1-based arm
        """

        self.pullCounts[arm - 1] += 1

    def copy(self):
        res = self.__class__(self.numArms)
        res.obsCounts[:] = self.obsCounts
        res.obsRewardSums[:] = self.obsRewardSums
        res.pullCounts[:] = self.pullCounts
        return res
