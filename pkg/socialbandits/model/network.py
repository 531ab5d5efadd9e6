import logging as log

import networkx as nx
import numpy as np

from socialbandits.ixo.decorators import lazy


class ObservationNetwork:
    """
    Undirected observation graph of the agents together with their sociability values. An edge ``{k, j}`` means that
    agents `k` and `j` are neighbors; in each round agent `k` observes each of its neighbors independently with
    probability ``p_k``, its sociability.

    Agents are numbered ``1..K``. Edges are stored as sorted tuples, so ``(1, 2)`` and ``(2, 1)`` are the same edge.

    Attributes:
        numAgents (`int`):                      number of agents K
        edges (`frozenset` of `tuple`):         unordered agent pairs, 1-based
        sociability (:class:`numpy.ndarray`):   observation probability p_k per agent
    """

    def __init__(self, numAgents, edges=(), sociability=None, validate=True):
        """
        Args:
            numAgents (`int`): number of agents K
            edges (iterable of pairs): neighbor pairs ``(k, j)``, 1-based, orientation does not matter
            sociability (`list` of `float`): sociability p_k of every agent, defaults to 0 for all
            validate (`bool`): run :func:`validateNetwork` on construction
        """

        self.numAgents = int(numAgents)
        self.edges = frozenset(tuple(sorted((int(k), int(j)))) for k, j in edges)
        if sociability is None:
            sociability = np.zeros(max(self.numAgents, 0))
        sociability = np.array(sociability, dtype=np.float64).ravel()
        sociability.setflags(write=False)
        self.sociability = sociability

        if validate:
            validateNetwork(self)

    def __repr__(self):
        return 'ObservationNetwork(numAgents={}, edges={}, sociability={})'.format(
            self.numAgents, sorted(self.edges), self.sociability.tolist())

    def __eq__(self, other):
        if not isinstance(other, ObservationNetwork):
            return NotImplemented
        return (self.numAgents == other.numAgents and self.edges == other.edges
                and np.array_equal(self.sociability, other.sociability))

    @lazy
    def graph(self):
        """
        The observation graph as :class:`networkx.Graph` with nodes ``1..K``.

        Returns:
            :class:`networkx.Graph`
        """

        g = nx.Graph()
        g.add_nodes_from(range(1, self.numAgents + 1))
        g.add_edges_from(self.edges)
        return g

    @lazy
    def adjacency(self):
        """
        Boolean adjacency matrix, 0-based, symmetric with an empty diagonal.

        Returns:
            :class:`numpy.ndarray`
        """

        adj = nx.to_numpy_array(self.graph, nodelist=range(1, self.numAgents + 1)) > 0
        adj.setflags(write=False)
        return adj

    @lazy
    def degrees(self):
        """
        Number of neighbors d_k of every agent, entry ``k - 1`` belongs to agent ``k``.

        Returns:
            :class:`numpy.ndarray`
        """

        res = np.array([self.graph.degree(k) for k in range(1, self.numAgents + 1)], dtype=np.int64)
        res.setflags(write=False)
        return res

    def degree(self, k):
        """
        Number of neighbors of agent `k`.

        Args:
            k (`int`): agent, 1-based

        Returns:
            `int`
        """

        self.checkAgent(k)
        return int(self.degrees[k - 1])

    def neighbors(self, k):
        """
        Neighbors of agent `k`, without `k` itself.

        Args:
            k (`int`): agent, 1-based

        Returns:
            `set` of `int`
        """

        self.checkAgent(k)
        return set(self.graph.neighbors(k))

    def isRegular(self):
        """
        Check whether all agents have the same number of neighbors.

        Returns:
            `bool`
        """

        return bool(np.all(self.degrees == self.degrees[0])) if self.numAgents else True

    def withSociability(self, sociability):
        """
        Copy of the network with the same edges and different sociability values.

        Args:
            sociability (`list` of `float`): new sociability values

        Returns:
            :class:`.ObservationNetwork`
        """

        return self.__class__(self.numAgents, self.edges, sociability)

    def checkAgent(self, k):
        if not 1 <= k <= self.numAgents:
            raise IndexError('ObservationNetwork: agent {} out of range 1..{}'.format(k, self.numAgents))


def validateNetwork(net):
    """
    Check all invariants of an :class:`.ObservationNetwork` and return it unchanged if they hold.

    Args:
        net (:class:`.ObservationNetwork`): network to check

    Returns:
        :class:`.ObservationNetwork`
    """

    if net.numAgents < 1:
        raise ValueError('validateNetwork: at least one agent required, got K={}'.format(net.numAgents))
    if net.sociability.size != net.numAgents:
        raise ValueError('validateNetwork: {} sociability values given for {} agents'.format(
            net.sociability.size, net.numAgents))
    for k, j in sorted(net.edges):
        if k == j:
            raise ValueError('validateNetwork: self-loop on agent {}'.format(k))
        if not (1 <= k <= net.numAgents and 1 <= j <= net.numAgents):
            raise ValueError('validateNetwork: edge {{{}, {}}} references an agent outside 1..{}'.format(
                k, j, net.numAgents))
    if not np.all((net.sociability >= 0) & (net.sociability <= 1)):
        raise ValueError('validateNetwork: sociability must lie in [0, 1], got {}'.format(net.sociability.tolist()))

    isolated = [int(k) + 1 for k in np.flatnonzero(net.degrees == 0)]
    if isolated and net.numAgents > 1:
        log.debug('validateNetwork: isolated agents %s', isolated)

    return net


def neighbors(net, k):
    """
    Neighbors of agent `k` in the network, `k` excluded.

    Args:
        net (:class:`.ObservationNetwork`): network
        k (`int`): agent, 1-based

    Returns:
        `set` of `int`
    """

    return net.neighbors(k)


def _fromGraph(g, sociability):
    # networkx generators number nodes from 0
    g = nx.convert_node_labels_to_integers(g, first_label=1, ordering='sorted')
    return ObservationNetwork(g.number_of_nodes(), g.edges(), sociability)


def completeNetwork(numAgents, sociability):
    """
    All-to-all network, every agent is a neighbor of every other agent ((K-1)-regular).

    Args:
        numAgents (`int`): number of agents K
        sociability (`list` of `float`): sociability of every agent

    Returns:
        :class:`.ObservationNetwork`
    """

    return _fromGraph(nx.complete_graph(numAgents), sociability)


def cycleNetwork(numAgents, sociability):
    """
    Cyclic network (2-regular): agents `k` and `j` are neighbors iff ``|(k - j) mod K| = 1``.

    Args:
        numAgents (`int`): number of agents K, at least 3
        sociability (`list` of `float`): sociability of every agent

    Returns:
        :class:`.ObservationNetwork`
    """

    if numAgents < 3:
        raise ValueError('cycleNetwork: a cycle needs at least 3 agents, got {}'.format(numAgents))
    return _fromGraph(nx.cycle_graph(numAgents), sociability)


def regularNetwork(numAgents, degree, sociability, seed=None):
    """
    Random d-regular network.

    Args:
        numAgents (`int`): number of agents K
        degree (`int`): number of neighbors of every agent, ``degree * K`` must be even
        sociability (`list` of `float`): sociability of every agent
        seed (`int`): seed for the graph generator

    Returns:
        :class:`.ObservationNetwork`
    """

    if not 0 <= degree < numAgents or (degree * numAgents) % 2:
        raise ValueError('regularNetwork: no {}-regular graph on {} agents'.format(degree, numAgents))
    return _fromGraph(nx.random_regular_graph(degree, numAgents, seed=seed), sociability)


def networkFromEdges(numAgents, edges, sociability, degree=None):
    """
    Network from an explicit list of 1-based edges. If `degree` is given, the graph must be `degree`-regular.

    Args:
        numAgents (`int`): number of agents K
        edges (iterable of pairs): neighbor pairs
        sociability (`list` of `float`): sociability of every agent
        degree (`int`): required degree of every agent, `None` to skip the check

    Returns:
        :class:`.ObservationNetwork`
    """

    net = ObservationNetwork(numAgents, edges, sociability)
    if degree is not None and not np.all(net.degrees == degree):
        raise ValueError('networkFromEdges: graph is not {}-regular, degrees are {}'.format(
            degree, net.degrees.tolist()))
    return net
