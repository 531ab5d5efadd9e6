from .scenario import (ScenarioError, PRESETS, loadScenario, writeScenario, checkScenario, instanceFromScenario,
                       networkFromScenario, policiesFromScenario, boundParamsFromScenario, deltaPrimeFromScenario,
                       inflationValues)
from .results import emitRegretCsv, summaryFrame, emitSummaryCsv, writeReport
