from .model import BanditInstance, ObservationNetwork, AgentBeliefs
from .policy import PolicyConfig, ConstantInflation, LogLogInflation, ZeroInflation, selectArm
from .simulation import runEpisode, runMonteCarlo, MonteCarloResult
from .analysis import performanceMeasure, predictedRanking, regretBound, rankAgreement
from .io import loadScenario, ScenarioError, PRESETS
from .config import ScenarioConfig
from .ixo.utils import configLogger

__doc__ = """\
Simulation and analysis of agents on a shared multi-armed bandit that observe their neighbors with a given
sociability
"""


configLogger(debug=False)
