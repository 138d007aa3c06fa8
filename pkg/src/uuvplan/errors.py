"""Exception hierarchy shared by the planner, assignment and harness."""


class PlanningError(RuntimeError):
    """Base class for failures while planning or assigning."""


class NoPath(PlanningError):
    """The planner did not reach the target within its step budget."""


class EndpointBlocked(PlanningError):
    """Start or target cell is occupied by an obstacle."""


class AllPairsInfeasible(PlanningError):
    """A target cannot be reached by any vehicle."""


class InfeasibleResidue(PlanningError):
    """A residue matrix left some target without a finite entry."""


class ScenarioError(ValueError):
    """Scenario file failed validation.

    ``problems`` holds one ``"field: message"`` string per violation.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
