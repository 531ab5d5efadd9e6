"""
Round-by-round simulation of the agents.

In round `t` all agents choose simultaneously from the information of rounds ``1..t-1``. Every pulled arm then
yields one reward shared by all agents pulling it, the observation masks are drawn and each agent adds the pulls it
observed in round `t` (its own always included) to its statistics.
"""

import logging as log

import numpy as np

from socialbandits.model.beliefs import AgentBeliefs
from socialbandits.policy.inflation import PolicyConfig
from socialbandits.policy.sampling import selectArm
from socialbandits.simulation.streams import RunStreams


class RoundOutcome:
    """
    Everything that happened in one round.

    Attributes:
        choices (:class:`numpy.ndarray`):   1-based arm pulled by every agent, entry ``k - 1`` for agent ``k``
        rewards (`dict`):                   reward realization of every pulled arm, keyed by 1-based arm
        masks (:class:`numpy.ndarray`):     boolean K x K matrix, entry ``[k - 1, j - 1]`` is true iff agent `k`
                                            observed agent `j`
    """

    def __init__(self, choices, rewards, masks):
        self.choices = choices
        self.rewards = rewards
        self.masks = masks

    def __repr__(self):
        return 'RoundOutcome(choices={}, rewards={})'.format(self.choices.tolist(), self.rewards)


class RegretTrace:
    """
    Cumulative expected regret of every agent over one run. The increment of agent `k` in round `t` is the gap of
    the arm it pulled.

    Attributes:
        perAgentCumulative (:class:`numpy.ndarray`):    T x K matrix, row ``t - 1`` holds the regret after round `t`
        choices (:class:`numpy.ndarray`):               T x K matrix of pulled arms
        runSeed (`int`):                                seed of the run
        outcomes (`list` of :class:`.RoundOutcome`):    all rounds, only if requested from :func:`runEpisode`
    """

    def __init__(self, perAgentCumulative, choices, runSeed, outcomes=None):
        self.perAgentCumulative = perAgentCumulative
        self.choices = choices
        self.runSeed = runSeed
        self.outcomes = outcomes

    @property
    def horizon(self):
        return self.perAgentCumulative.shape[0]

    @property
    def numAgents(self):
        return self.perAgentCumulative.shape[1]

    def terminal(self):
        """
        Regret of every agent after the last round, zeros for an empty trace.

        Returns:
            :class:`numpy.ndarray`
        """

        if not self.horizon:
            return np.zeros(self.numAgents)
        return self.perAgentCumulative[-1].copy()


def resolvePolicies(policies, numAgents):
    """
    One :class:`socialbandits.policy.inflation.PolicyConfig` per agent. A single config is used for all agents.

    Args:
        policies (:class:`.PolicyConfig` or `list`): policy or policies
        numAgents (`int`): number of agents K

    Returns:
        `list` of :class:`.PolicyConfig`
    """

    if isinstance(policies, PolicyConfig):
        policies = [policies] * numAgents
    policies = list(policies)
    if len(policies) != numAgents:
        raise ValueError('resolvePolicies: {} policies given for {} agents'.format(len(policies), numAgents))
    for cfg in policies:
        if cfg.numAgents != numAgents:
            log.debug('resolvePolicies: policy scales deviations with K=%d in a network of %d agents',
                      cfg.numAgents, numAgents)
    return policies


def initialBeliefs(numAgents, numArms):
    """
    Empty statistics for every agent.

    Returns:
        `list` of :class:`socialbandits.model.beliefs.AgentBeliefs`
    """

    return [AgentBeliefs(numArms) for _ in range(numAgents)]


def drawMasks(net, rng):
    """
    Observation masks of one round. Agent `k` observes each neighbor independently with probability ``p_k``; the
    draws for ``(k, j)`` and ``(j, k)`` are independent. Every agent observes itself, never a non-neighbor.

    Args:
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        rng (:class:`numpy.random.Generator`): mask stream

    Returns:
        :class:`numpy.ndarray` -- boolean K x K matrix
    """

    draws = rng.random((net.numAgents, net.numAgents))
    masks = (draws < net.sociability[:, np.newaxis]) & net.adjacency
    np.fill_diagonal(masks, True)
    return masks


def drawRoundRewards(inst, pulledArms, rng):
    """
    Reward realizations of one round, one Gaussian sample per pulled arm shared by every agent pulling it.

    One sample is drawn for every arm of the instance and the pulled ones are returned, so the realization of arm `i`
    in a round depends on the stream only, not on which other arms were pulled.

    Args:
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        pulledArms (iterable of `int`): 1-based arms pulled in this round
        rng (:class:`numpy.random.Generator`): reward stream

    Returns:
        `dict` -- reward keyed by 1-based arm
    """

    pulledArms = sorted(set(int(i) for i in pulledArms))
    if not pulledArms:
        raise ValueError('drawRoundRewards: no arm pulled')
    draws = rng.normal(inst.means, inst.sigmaPrimes)
    return {i: float(draws[i - 1]) for i in pulledArms}


def step(beliefs, inst, net, policies, t, streams):
    """
    Simulate round `t`. The beliefs are updated in place.

    Args:
        beliefs (`list` of :class:`.AgentBeliefs`): statistics of every agent after round ``t - 1``
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        policies (`list` of :class:`.PolicyConfig`): policy of every agent
        t (`int`): round, at least 1
        streams (:class:`socialbandits.simulation.streams.RunStreams`): random streams of the run

    Returns:
        - :class:`.RoundOutcome` -- the round
        - `list` of :class:`.AgentBeliefs` -- the updated beliefs (same objects)
        - :class:`numpy.ndarray` -- regret increment of every agent
    """

    if t < 1:
        raise ValueError('step: t must be >= 1, got {}'.format(t))

    # the index of round t uses the statistics of round t - 1, round 1 is always a cold start
    tPrev = max(t - 1, 1)
    choices = np.array([selectArm(beliefs[k], policies[k], inst.sigmaPrimes, tPrev, streams.tieBreaks[k])
                        for k in range(net.numAgents)], dtype=np.int64)

    rewards = drawRoundRewards(inst, choices, streams.rewards)
    masks = drawMasks(net, streams.masks)

    choiceRewards = np.array([rewards[i] for i in choices])
    for k in range(net.numAgents):
        observed = masks[k]
        beliefs[k].observe(choices[observed], choiceRewards[observed])
        beliefs[k].recordPull(choices[k])

    increments = inst.gaps()[choices - 1]
    return RoundOutcome(choices, rewards, masks), beliefs, increments


def runEpisode(inst, net, policies, horizon, seed, keepOutcomes=False):
    """
    Simulate `horizon` rounds. The result is fully determined by the arguments.

    Args:
        inst (:class:`socialbandits.model.instance.BanditInstance`): bandit instance
        net (:class:`socialbandits.model.network.ObservationNetwork`): network
        policies (:class:`.PolicyConfig` or `list`): policy for all agents or one per agent
        horizon (`int`): number of rounds T
        seed (`int`): seed of the run
        keepOutcomes (`bool`): store every :class:`.RoundOutcome` in the trace

    Returns:
        - :class:`.RegretTrace`
        - `list` of :class:`.AgentBeliefs` -- final statistics of every agent
    """

    if horizon < 0:
        raise ValueError('runEpisode: horizon must be >= 0, got {}'.format(horizon))

    policies = resolvePolicies(policies, net.numAgents)
    streams = RunStreams(seed, net.numAgents)
    beliefs = initialBeliefs(net.numAgents, inst.numArms)

    increments = np.zeros((horizon, net.numAgents))
    choices = np.zeros((horizon, net.numAgents), dtype=np.int64)
    outcomes = [] if keepOutcomes else None
    for t in range(1, horizon + 1):
        outcome, beliefs, increments[t - 1] = step(beliefs, inst, net, policies, t, streams)
        choices[t - 1] = outcome.choices
        if keepOutcomes:
            outcomes.append(outcome)

    log.debug('runEpisode: seed %d finished after %d rounds', seed, horizon)
    trace = RegretTrace(np.cumsum(increments, axis=0), choices, seed, outcomes=outcomes)
    return trace, beliefs


def replayBeliefs(outcomes, numArms):
    """
    Rebuild the statistics of every agent from recorded rounds.

    Args:
        outcomes (`list` of :class:`.RoundOutcome`): recorded rounds
        numArms (`int`): number of arms N

    Returns:
        `list` of :class:`.AgentBeliefs`
    """

    if not outcomes:
        raise ValueError('replayBeliefs: no rounds given')
    numAgents = outcomes[0].choices.size
    beliefs = initialBeliefs(numAgents, numArms)
    for outcome in outcomes:
        for k in range(numAgents):
            for j in np.flatnonzero(outcome.masks[k]):
                arm = int(outcome.choices[j])
                beliefs[k].observe([arm], [outcome.rewards[arm]])
            beliefs[k].recordPull(int(outcome.choices[k]))
    return beliefs
