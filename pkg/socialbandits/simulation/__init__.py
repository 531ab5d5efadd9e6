from .streams import RunStreams, streamGenerator, deriveRunSeed
from .engine import (RoundOutcome, RegretTrace, drawMasks, drawRoundRewards, step, runEpisode, initialBeliefs,
                     resolvePolicies, replayBeliefs)
from .montecarlo import MonteCarloResult, runMonteCarlo
