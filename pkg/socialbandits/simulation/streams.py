"""
Named, independent random streams. Every stream is derived from the seed of a run and a stream label (and the agent
for per-agent streams), so changing how much one stream is consumed never shifts the others.
"""

import numpy as np


STREAM_LABELS = {'rewards': 0,
                 'masks': 1,
                 'tiebreak': 2}


def deriveRunSeed(baseSeed, run):
    """
    Seed of Monte Carlo run `run` of an experiment with seed `baseSeed`.

    Args:
        baseSeed (`int`): experiment seed
        run (`int`): 0-based run index

    Returns:
        `int`
    """

    seq = np.random.SeedSequence(int(baseSeed), spawn_key=(int(run),))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def streamGenerator(seed, label, agent=None):
    """
    Random generator of stream `label` of a run.

    Args:
        seed (`int`): seed of the run
        label (`str`): one of ``'rewards'``, ``'masks'``, ``'tiebreak'``
        agent (`int`): 1-based agent for per-agent streams

    Returns:
        :class:`numpy.random.Generator`
    """

    try:
        key = (STREAM_LABELS[label],)
    except KeyError:
        raise ValueError('streamGenerator: unknown stream "{}"'.format(label)) from None
    if agent is not None:
        key += (int(agent),)
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=key))


class RunStreams:
    """
    All random streams of one run: arm rewards, observation masks and one tie-break stream per agent.

    Attributes:
        seed (`int`):                                           seed of the run
        rewards (:class:`numpy.random.Generator`):              reward realizations
        masks (:class:`numpy.random.Generator`):                observation masks
        tieBreaks (`list` of :class:`numpy.random.Generator`):  tie-break stream of agent ``k`` at ``k - 1``
    """

    def __init__(self, seed, numAgents):
        self.seed = int(seed)
        self.rewards = streamGenerator(seed, 'rewards')
        self.masks = streamGenerator(seed, 'masks')
        self.tieBreaks = [streamGenerator(seed, 'tiebreak', agent=k) for k in range(1, numAgents + 1)]
