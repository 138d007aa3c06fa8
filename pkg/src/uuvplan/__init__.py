"""Multi-UUV target assignment and motion planning under ocean currents."""

from .assignment import AssignmentMatrix, PriorityList, build_matrix, greedy_assign
from .binn import (ActivityField, BinnParams, Path, candidate_activity, external_input,
                   iter_plan, path_length, plan_path, transfer)
from .currents import CurrentField, Helix3D, Uniform, Wave2D, Zero, field_from_dict
from .errors import (AllPairsInfeasible, EndpointBlocked, InfeasibleResidue, NoPath,
                     PlanningError, ScenarioError)
from .gridworld import GridMap, euclid, neighbors, octile_distance, step_length
from .harness import (RunReport, Scenario, bundled_scenario, emit_outputs, load_scenario,
                      run_experiment, run_sweep, save_scenario)
from .nav import (Mode, SimConfig, SimOutcome, Status, TrajectoryRecord, compensation,
                  cross_track_error, desired_velocity, follow_path)

__version__ = "0.1.0"
