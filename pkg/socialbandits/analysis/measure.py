"""
Performance measure of the agents and the ranking it predicts:

    ε_p^k = 1 / (p_k + 1) · sqrt( (1 / d_k) Σ_{j neighbor of k} p_j )

A lower value predicts a lower cumulative regret.
"""

import numpy as np

from socialbandits.errors import UndefinedMeasureError


# measures closer than this are reported as ties
TIE_TOLERANCE = 1e-9


def performanceMeasure(net, k):
    """
    Performance measure ε_p^k of agent `k`.

    Args:
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        k (`int`): agent, 1-based

    Returns:
        `float`
    """

    d = net.degree(k)
    if d == 0:
        raise UndefinedMeasureError('performanceMeasure: agent {} has no neighbors'.format(k))

    nb = np.array(sorted(net.neighbors(k)), dtype=np.int64)
    meanNeighborSociability = net.sociability[nb - 1].sum() / d
    return float(np.sqrt(meanNeighborSociability) / (net.sociability[k - 1] + 1))


def performanceMeasures(net):
    """
    Performance measure of every agent, entry ``k - 1`` for agent ``k``.

    Args:
        net (:class:`socialbandits.model.network.ObservationNetwork`): network

    Returns:
        :class:`numpy.ndarray`
    """

    return np.array([performanceMeasure(net, k) for k in range(1, net.numAgents + 1)])


def _groupAscending(values, tolerance):
    order = np.argsort(values, kind='stable')
    groups = []
    for idx in order:
        if groups and abs(values[idx] - values[groups[-1][0] - 1]) <= tolerance:
            groups[-1].append(int(idx) + 1)
        else:
            groups.append([int(idx) + 1])
    return [tuple(sorted(g)) for g in groups]


def predictedRanking(net, tolerance=TIE_TOLERANCE):
    """
    Agents ordered by ascending performance measure, i.e. from the best to the worst predicted performer. Agents
    whose measures agree within `tolerance` form a tie group.

    Example:
        All-to-all network of the six-agent scenario::

            >>> predictedRanking(net)
            [(5,), (6,), (2,), (1, 4), (3,)]

    Args:
        net (:class:`socialbandits.model.network.ObservationNetwork`): network, every agent needs a neighbor
        tolerance (`float`): absolute tolerance for ties

    Returns:
        `list` of `tuple` of `int`
    """

    return _groupAscending(performanceMeasures(net), tolerance)


def groupRanks(groups):
    """
    Rank of every agent from an ordered list of tie groups. Tied agents share the rank of the group, the next group
    continues after all tied agents (1, 2, 3, 4, 4, 6).

    Args:
        groups (`list` of `tuple` of `int`): tie groups, best first

    Returns:
        `dict` -- rank keyed by agent
    """

    ranks = {}
    position = 1
    for group in groups:
        for agent in group:
            ranks[agent] = position
        position += len(group)
    return ranks


def empiricalRanking(means):
    """
    Agents ordered by ascending terminal mean regret. Only exactly equal means are ties.

    Args:
        means (:class:`numpy.ndarray`): terminal mean regret, entry ``k - 1`` for agent ``k``

    Returns:
        `list` of `tuple` of `int`
    """

    return _groupAscending(np.asarray(means, dtype=np.float64), 0.0)
