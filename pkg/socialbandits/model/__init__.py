from .instance import BanditInstance, optimalArm, gaps
from .network import (ObservationNetwork, validateNetwork, neighbors, completeNetwork, cycleNetwork,
                      regularNetwork, networkFromEdges)
from .beliefs import AgentBeliefs
