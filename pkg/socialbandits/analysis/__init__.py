from .measure import performanceMeasure, performanceMeasures, predictedRanking, groupRanks, empiricalRanking
from .bounds import (BoundParams, etaThreshold, gammaConstant, expectedSamplesBound, armSampleBounds, regretBound,
                     concentrationBound, zetaSensitivity)
from .validation import empiricalTailProbability, rankAgreement, boundDomination
