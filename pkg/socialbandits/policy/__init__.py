from .inflation import (ConstantInflation, LogLogInflation, ZeroInflation, inflationFromSpec, PolicyConfig,
                        inflationValue)
from .sampling import explorationBonus, ucbIndex, selectArm, ucbIndices
