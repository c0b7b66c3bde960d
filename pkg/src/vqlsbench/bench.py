"""Benchmark harness: seeded run matrices, selection, and CSV schemas.

An :class:`ExperimentPlan` names a grid of (problem, optimizer, noise)
cells.  Every cell runs ``runs_per_cell`` independent optimizations from
initial parameters drawn uniformly from [0, 2pi).  The initial point of
run ``r`` on a problem depends only on (master_seed, problem, r), so the
same starting parameters are used in every optimizer and noise cell;
backend sampling and optimizer randomness get their own per-cell
sub-seed streams.  Sub-seeds are derived by hashing a canonical string
with SHA-256 and taking the first eight bytes, which keeps them stable
across processes and platforms.

Two CSV formats are produced, both comma-separated with LF line endings
and floats rendered with ``format(value, ".9g")``:

    runs.csv     one row per recorded trace point
                 problem,optimizer,noise,run_index,units,best_cost
    summary.csv  one row per cell over the selected best runs
                 problem,optimizer,noise,n_selected,min,q1,median,q3,max,final_mean

Selection keeps the ``top_k`` runs with the lowest final best cost
(ties broken by run index), a guard against optimizations stranded by
bad initializations.  Quartiles use linear interpolation.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .cost import CostEvaluator, DeviceNoise, EvaluationLedger, Exact, ShotSampling
from .optimizers import OPTIMIZERS, Objective, OptimizerConfig
from .problem import PROBLEM_NAMES, AnsatzCircuit, instance
from .quantum import NoiseParams

NOISE_LEVELS = ("exact", "shots", "device")

DEFAULT_BUDGETS = {"A1": 600, "A2": 800, "A3": 1000}

RUNS_HEADER = "problem,optimizer,noise,run_index,units,best_cost"
SUMMARY_HEADER = (
    "problem,optimizer,noise,n_selected,min,q1,median,q3,max,final_mean"
)


class PlanError(ValueError):
    """The experiment plan is internally inconsistent."""


class CsvFormatError(ValueError):
    """A results file does not match the expected schema."""


@dataclass(frozen=True)
class ExperimentPlan:
    problems: tuple[str, ...] = PROBLEM_NAMES
    optimizers: tuple[str, ...] = tuple(OPTIMIZERS)
    noise_levels: tuple[str, ...] = NOISE_LEVELS
    runs_per_cell: int = 100
    top_k: int = 50
    master_seed: int = 0
    budgets: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_BUDGETS))
    shots: int = 10_000
    noise: NoiseParams = field(default_factory=NoiseParams)
    ansatz_depth: int = 2

    def validate(self) -> None:
        if not self.problems:
            raise PlanError("plan names no problems")
        for name in self.problems:
            instance(name)  # raises UnknownProblemError for bad names
            if name not in self.budgets:
                raise PlanError(f"no budget given for problem {name!r}")
            if self.budgets[name] < 1:
                raise PlanError(f"budget for {name!r} must be positive")
        for name in self.optimizers:
            if name not in OPTIMIZERS:
                raise PlanError(
                    f"unknown optimizer {name!r}; valid: {', '.join(OPTIMIZERS)}"
                )
        for name in self.noise_levels:
            if name not in NOISE_LEVELS:
                raise PlanError(
                    f"unknown noise level {name!r}; valid: {', '.join(NOISE_LEVELS)}"
                )
        if self.runs_per_cell < 1:
            raise PlanError("runs_per_cell must be positive")
        if not 1 <= self.top_k <= self.runs_per_cell:
            raise PlanError("top_k must be between 1 and runs_per_cell")
        if self.shots < 1:
            raise PlanError("shots must be positive")
        if self.ansatz_depth < 0:
            raise PlanError("ansatz_depth must be non-negative")


@dataclass
class RunRecord:
    problem: str
    optimizer: str
    noise: str
    run_index: int
    theta0: np.ndarray
    trace: list[tuple[int, float]]
    final_best_cost: float
    termination: str
    failure_reason: str | None = None
    final_theta: np.ndarray | None = None


def subseed(master_seed: int, *parts) -> int:
    """Stable 64-bit stream seed from a master seed and a label path."""
    text = ":".join([str(master_seed), *[str(p) for p in parts]])
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def initial_parameters(
    master_seed: int, problem: str, run_index: int, param_count: int
) -> np.ndarray:
    """Starting angles for one run, shared by every optimizer/noise cell."""
    rng = np.random.default_rng(subseed(master_seed, "init", problem, run_index))
    return rng.uniform(0.0, 2.0 * np.pi, size=param_count)


def _make_backend(plan: ExperimentPlan, problem: str, optimizer: str, noise: str, run_index: int):
    if noise == "exact":
        return Exact()
    rng = np.random.default_rng(
        subseed(plan.master_seed, "backend", problem, optimizer, noise, run_index)
    )
    if noise == "shots":
        return ShotSampling(shots=plan.shots, rng=rng)
    return DeviceNoise(noise=plan.noise, shots=plan.shots, rng=rng)


def execute_run(
    plan: ExperimentPlan, problem: str, optimizer: str, noise: str, run_index: int
) -> RunRecord:
    """One optimization run of the grid, fully determined by its cell key."""
    system = instance(problem)
    ansatz = AnsatzCircuit(system.a.n_qubits, depth=plan.ansatz_depth)
    ledger = EvaluationLedger()
    evaluator = CostEvaluator(
        system,
        ansatz,
        backend=_make_backend(plan, problem, optimizer, noise, run_index),
        ledger=ledger,
    )
    objective = Objective(
        cost=evaluator.evaluate_cost,
        param_count=ansatz.param_count,
        units=lambda: ledger.units,
        gradient=evaluator.evaluate_gradient,
    )
    theta0 = initial_parameters(plan.master_seed, problem, run_index, ansatz.param_count)
    config = OptimizerConfig(
        budget=plan.budgets[problem],
        seed=subseed(plan.master_seed, "optimizer", problem, optimizer, noise, run_index),
    )
    run = OPTIMIZERS[optimizer](objective, theta0, config)
    return RunRecord(
        problem=problem,
        optimizer=optimizer,
        noise=noise,
        run_index=run_index,
        theta0=theta0,
        trace=run.trace,
        final_best_cost=run.final_best_cost,
        termination=run.termination,
        failure_reason=run.failure_reason,
        final_theta=run.final_theta,
    )


def _execute_cell_run(args) -> RunRecord:
    return execute_run(*args)


def execute_plan(plan: ExperimentPlan, parallel: int = 1) -> list[RunRecord]:
    """Run the whole grid; records come back in canonical cell order."""
    plan.validate()
    if parallel < 1:
        raise PlanError("parallel worker count must be positive")
    tasks = [
        (plan, problem, optimizer, noise, run_index)
        for problem in plan.problems
        for optimizer in plan.optimizers
        for noise in plan.noise_levels
        for run_index in range(plan.runs_per_cell)
    ]
    if parallel == 1:
        return [execute_run(*task) for task in tasks]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        return list(pool.map(_execute_cell_run, tasks, chunksize=1))


def select_top_k(records: list[RunRecord], k: int) -> list[RunRecord]:
    """The k records with the lowest final cost, ties broken by run index."""
    if k > len(records):
        raise ValueError(f"cannot select {k} runs from {len(records)}")
    ranked = sorted(records, key=lambda r: (r.final_best_cost, r.run_index))
    return ranked[:k]


@dataclass(frozen=True)
class SummaryStats:
    problem: str
    optimizer: str
    noise: str
    n_selected: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float
    final_mean: float


def boxplot_stats(values) -> tuple[float, float, float, float, float]:
    """(min, q1, median, q3, max) with linearly interpolated quartiles."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("no values to summarize")
    q1, median, q3 = np.percentile(values, [25.0, 50.0, 75.0])
    return (
        float(values.min()),
        float(q1),
        float(median),
        float(q3),
        float(values.max()),
    )


def summarize(records: list[RunRecord], top_k: int) -> list[SummaryStats]:
    """Per-cell box statistics over the selected best runs.

    Cells appear in the order their first record appears, so feeding
    canonically ordered records yields canonically ordered summaries.
    """
    cells: dict[tuple[str, str, str], list[RunRecord]] = {}
    for record in records:
        cells.setdefault((record.problem, record.optimizer, record.noise), []).append(
            record
        )
    rows = []
    for (problem, optimizer, noise), cell_records in cells.items():
        selected = select_top_k(cell_records, min(top_k, len(cell_records)))
        finals = [r.final_best_cost for r in selected]
        minimum, q1, median, q3, maximum = boxplot_stats(finals)
        rows.append(
            SummaryStats(
                problem=problem,
                optimizer=optimizer,
                noise=noise,
                n_selected=len(selected),
                minimum=minimum,
                q1=q1,
                median=median,
                q3=q3,
                maximum=maximum,
                final_mean=float(np.mean(finals)),
            )
        )
    return rows


def convergence_curve(trace: list[tuple[int, float]], budget: int) -> np.ndarray:
    """Best-so-far sampled on the unit grid 1..budget.

    The curve holds the last recorded value between trace points and
    carries the first recorded value back to the start of the grid.
    """
    if not trace:
        raise ValueError("cannot build a curve from an empty trace")
    units = np.array([u for u, _ in trace])
    bests = np.array([c for _, c in trace])
    grid = np.arange(1, budget + 1)
    positions = np.searchsorted(units, grid, side="right") - 1
    return bests[np.clip(positions, 0, None)]


def average_convergence(traces: list[list[tuple[int, float]]], budget: int) -> np.ndarray:
    """Mean best-so-far curve over several runs on the unit grid."""
    if not traces:
        raise ValueError("no traces to average")
    return np.mean([convergence_curve(t, budget) for t in traces], axis=0)


def _format_float(value: float) -> str:
    return format(value, ".9g")


def write_runs_csv(path, records: list[RunRecord]) -> None:
    lines = [RUNS_HEADER]
    for record in records:
        for units, best in record.trace:
            lines.append(
                f"{record.problem},{record.optimizer},{record.noise},"
                f"{record.run_index},{units},{_format_float(best)}"
            )
    with open(path, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")


def format_summary(rows: list[SummaryStats]) -> str:
    lines = [SUMMARY_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    row.problem,
                    row.optimizer,
                    row.noise,
                    str(row.n_selected),
                    _format_float(row.minimum),
                    _format_float(row.q1),
                    _format_float(row.median),
                    _format_float(row.q3),
                    _format_float(row.maximum),
                    _format_float(row.final_mean),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_summary_csv(path, rows: list[SummaryStats]) -> None:
    with open(path, "w", newline="") as handle:
        handle.write(format_summary(rows))


def read_runs_csv(path) -> list[RunRecord]:
    """Parse a runs file back into records (traces only, no parameters).

    Rows belonging to the same (problem, optimizer, noise, run_index)
    are folded into one record in file order; errors carry the
    offending line number.
    """
    with open(path, "r", newline="") as handle:
        lines = handle.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CsvFormatError(f"{path}:1: file is empty")
    if lines[0] != RUNS_HEADER:
        raise CsvFormatError(
            f"{path}:1: expected header {RUNS_HEADER!r}, got {lines[0]!r}"
        )
    runs: dict[tuple[str, str, str, int], RunRecord] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 6:
            raise CsvFormatError(
                f"{path}:{lineno}: expected 6 comma-separated fields, "
                f"got {len(fields)}"
            )
        problem, optimizer, noise, run_text, units_text, best_text = fields
        try:
            run_index = int(run_text)
            units = int(units_text)
        except ValueError:
            raise CsvFormatError(
                f"{path}:{lineno}: run_index and units must be integers"
            ) from None
        try:
            best = float(best_text)
        except ValueError:
            raise CsvFormatError(
                f"{path}:{lineno}: best_cost {best_text!r} is not a number"
            ) from None
        key = (problem, optimizer, noise, run_index)
        record = runs.get(key)
        if record is None:
            record = RunRecord(
                problem=problem,
                optimizer=optimizer,
                noise=noise,
                run_index=run_index,
                theta0=np.empty(0),
                trace=[],
                final_best_cost=best,
                termination="",
            )
            runs[key] = record
        record.trace.append((units, best))
        record.final_best_cost = best
    return list(runs.values())
