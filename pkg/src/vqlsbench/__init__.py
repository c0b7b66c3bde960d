"""Variational linear-system solver with a classical-optimizer benchmark.

The package simulates a variational quantum linear solver: a layered
rotation ansatz prepares a trial state, a local Hadamard-test cost
measures how close the operator image is to the target state, and eight
classical optimizers minimize that cost under a shared evaluation-unit
budget across three noise models (exact statevector, finite-shot
sampling, depolarizing device noise with readout error).
"""

from .bench import (
    DEFAULT_BUDGETS,
    NOISE_LEVELS,
    CsvFormatError,
    ExperimentPlan,
    PlanError,
    RunRecord,
    SummaryStats,
    average_convergence,
    boxplot_stats,
    convergence_curve,
    execute_plan,
    execute_run,
    format_summary,
    initial_parameters,
    read_runs_csv,
    select_top_k,
    subseed,
    summarize,
    write_runs_csv,
    write_summary_csv,
)
from .cost import (
    DEFAULT_SHOTS,
    CostEvaluator,
    DegenerateDenominatorError,
    DeviceNoise,
    EvaluationLedger,
    Exact,
    ShotSampling,
    UnsupportedProblemError,
    estimate_expectation,
)
from .optimizers import (
    OPTIMIZER_NAMES,
    OPTIMIZERS,
    Objective,
    OptimizerConfig,
    OptimizerRun,
    classical_objective,
    line_search_wolfe,
)
from .problem import (
    PROBLEM_NAMES,
    AnsatzCircuit,
    LinearCombinationOperator,
    LinearSystemProblem,
    ProblemFormatError,
    SingularOperatorError,
    UnitaryWord,
    UnknownProblemError,
    classical_solution,
    dense_matrix,
    instance,
    load_problem,
    prepare_b,
)
from .quantum import DensityMatrix, Gate, GateError, NoiseParams, Statevector

__version__ = "0.1.0"

__all__ = [
    "AnsatzCircuit",
    "CostEvaluator",
    "CsvFormatError",
    "DEFAULT_BUDGETS",
    "DEFAULT_SHOTS",
    "DegenerateDenominatorError",
    "DensityMatrix",
    "DeviceNoise",
    "EvaluationLedger",
    "Exact",
    "ExperimentPlan",
    "Gate",
    "GateError",
    "LinearCombinationOperator",
    "LinearSystemProblem",
    "NOISE_LEVELS",
    "NoiseParams",
    "OPTIMIZERS",
    "OPTIMIZER_NAMES",
    "Objective",
    "OptimizerConfig",
    "OptimizerRun",
    "PROBLEM_NAMES",
    "PlanError",
    "ProblemFormatError",
    "RunRecord",
    "ShotSampling",
    "SingularOperatorError",
    "Statevector",
    "SummaryStats",
    "UnitaryWord",
    "UnknownProblemError",
    "UnsupportedProblemError",
    "average_convergence",
    "boxplot_stats",
    "classical_objective",
    "classical_solution",
    "convergence_curve",
    "dense_matrix",
    "estimate_expectation",
    "execute_plan",
    "execute_run",
    "format_summary",
    "initial_parameters",
    "instance",
    "line_search_wolfe",
    "load_problem",
    "prepare_b",
    "read_runs_csv",
    "select_top_k",
    "subseed",
    "summarize",
    "write_runs_csv",
    "write_summary_csv",
    "__version__",
]
