"""Command-line front end.

Subcommands:

    run    execute an experiment grid and write runs.csv, summary.csv
           and manifest.txt into the output directory
    solve  run one optimization on one problem and print the outcome
    stats  recompute a summary from an existing runs.csv
    list   show available problems, optimizers and noise levels

Exit codes: 0 on success, 1 for runtime failures (unsolvable problem,
unwritable output), 2 for bad arguments, bad configuration or malformed
input files.

The run command reads an optional plan file, a line-oriented format with
``[section]`` headers and ``key = value`` entries ('#' starts a comment
line; values for list keys are whitespace- or comma-separated):

    [plan]
    problems = A1 A2 A3
    optimizers = spsa bfgs
    noise = exact shots device
    runs = 100
    top-k = 50
    master-seed = 0
    shots = 10000
    depth = 2

    [budgets]
    A1 = 600

    [noise]
    p1 = 0.001
    p2 = 0.01
    p-readout = 0.02

    [output]
    dir = results
    parallel = 1

Output directory precedence: --out flag, then the VQLSBENCH_OUT
environment variable, then the plan file's [output] dir, then
``results``.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .bench import (
    DEFAULT_BUDGETS,
    NOISE_LEVELS,
    CsvFormatError,
    ExperimentPlan,
    PlanError,
    execute_plan,
    format_summary,
    read_runs_csv,
    summarize,
    write_runs_csv,
)
from .cost import CostEvaluator, DeviceNoise, EvaluationLedger, Exact, ShotSampling
from .optimizers import OPTIMIZERS, Objective, OptimizerConfig
from .problem import (
    PROBLEM_NAMES,
    AnsatzCircuit,
    ProblemFormatError,
    SingularOperatorError,
    UnknownProblemError,
    bind_ansatz,
    classical_solution,
    instance,
    load_problem,
)
from .quantum import NoiseParams, Statevector, apply_gate


class ConfigError(ValueError):
    """A plan file entry is missing, duplicated, unknown or unparsable."""


_PLAN_KEYS = {
    "problems",
    "optimizers",
    "noise",
    "runs",
    "top-k",
    "master-seed",
    "shots",
    "depth",
}
_NOISE_KEYS = {"p1", "p2", "p-readout"}
_OUTPUT_KEYS = {"dir", "parallel"}


def _split_list(value: str) -> tuple[str, ...]:
    return tuple(part for part in value.replace(",", " ").split() if part)


def parse_plan_file(path) -> tuple[ExperimentPlan, str | None, int]:
    """Read a plan file; returns (plan, output dir or None, parallelism)."""
    try:
        text = Path(path).read_text()
    except OSError as error:
        raise ConfigError(f"{path}: {error.strerror or error}") from None

    sections: dict[str, dict[str, tuple[int, str]]] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in ("plan", "budgets", "noise", "output"):
                raise ConfigError(f"{path}:{lineno}: unknown section [{current}]")
            if current in sections:
                raise ConfigError(f"{path}:{lineno}: duplicate section [{current}]")
            sections[current] = {}
            continue
        if "=" not in line:
            raise ConfigError(
                f"{path}:{lineno}: expected 'key = value', got {line!r}"
            )
        if current is None:
            raise ConfigError(f"{path}:{lineno}: entry before any [section]")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not value:
            raise ConfigError(f"{path}:{lineno}: empty value for {key!r}")
        if key in sections[current]:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        sections[current][key] = (lineno, value)

    def parse_int(section: str, key: str, lineno: int, value: str) -> int:
        try:
            return int(value)
        except ValueError:
            raise ConfigError(
                f"{path}:{lineno}: [{section}] {key} must be an integer, "
                f"got {value!r}"
            ) from None

    def parse_float(section: str, key: str, lineno: int, value: str) -> float:
        try:
            return float(value)
        except ValueError:
            raise ConfigError(
                f"{path}:{lineno}: [{section}] {key} must be a number, "
                f"got {value!r}"
            ) from None

    for section, allowed in (
        ("plan", _PLAN_KEYS),
        ("noise", _NOISE_KEYS),
        ("output", _OUTPUT_KEYS),
    ):
        for key, (lineno, _) in sections.get(section, {}).items():
            if key not in allowed:
                raise ConfigError(
                    f"{path}:{lineno}: unknown key {key!r} in [{section}]; "
                    f"valid: {', '.join(sorted(allowed))}"
                )

    plan = ExperimentPlan()
    plan_section = sections.get("plan", {})
    updates: dict = {}
    if "problems" in plan_section:
        updates["problems"] = _split_list(plan_section["problems"][1])
    if "optimizers" in plan_section:
        updates["optimizers"] = _split_list(plan_section["optimizers"][1])
    if "noise" in plan_section:
        updates["noise_levels"] = _split_list(plan_section["noise"][1])
    for key, attr in (
        ("runs", "runs_per_cell"),
        ("top-k", "top_k"),
        ("master-seed", "master_seed"),
        ("shots", "shots"),
        ("depth", "ansatz_depth"),
    ):
        if key in plan_section:
            lineno, value = plan_section[key]
            updates[attr] = parse_int("plan", key, lineno, value)

    if "budgets" in sections:
        budgets = dict(DEFAULT_BUDGETS)
        for key, (lineno, value) in sections["budgets"].items():
            budgets[key] = parse_int("budgets", key, lineno, value)
        updates["budgets"] = budgets

    if "noise" in sections:
        values = {}
        for key, attr in (("p1", "p1"), ("p2", "p2"), ("p-readout", "p_readout")):
            if key in sections["noise"]:
                lineno, value = sections["noise"][key]
                values[attr] = parse_float("noise", key, lineno, value)
        try:
            updates["noise"] = replace(NoiseParams(), **values)
        except ValueError as error:
            raise ConfigError(f"{path}: [noise] {error}") from None

    plan = replace(plan, **updates)

    output_dir = None
    parallel = 1
    output_section = sections.get("output", {})
    if "dir" in output_section:
        output_dir = output_section["dir"][1]
    if "parallel" in output_section:
        lineno, value = output_section["parallel"]
        parallel = parse_int("output", "parallel", lineno, value)
    return plan, output_dir, parallel


def _manifest_text(plan: ExperimentPlan, parallel: int, record_count: int) -> str:
    budget_text = " ".join(f"{k}={plan.budgets[k]}" for k in plan.problems)
    return (
        f"problems: {' '.join(plan.problems)}\n"
        f"optimizers: {' '.join(plan.optimizers)}\n"
        f"noise-levels: {' '.join(plan.noise_levels)}\n"
        f"runs-per-cell: {plan.runs_per_cell}\n"
        f"top-k: {plan.top_k}\n"
        f"master-seed: {plan.master_seed}\n"
        f"shots: {plan.shots}\n"
        f"ansatz-depth: {plan.ansatz_depth}\n"
        f"budgets: {budget_text}\n"
        f"noise-params: p1={plan.noise.p1:g} p2={plan.noise.p2:g} "
        f"p-readout={plan.noise.p_readout:g}\n"
        f"parallel: {parallel}\n"
        f"records: {record_count}\n"
    )


def cmd_run(args) -> int:
    if args.config is not None:
        plan, config_dir, parallel = parse_plan_file(args.config)
    else:
        plan, config_dir, parallel = ExperimentPlan(), None, 1
    if args.parallel is not None:
        parallel = args.parallel
    out_dir = (
        args.out
        or os.environ.get("VQLSBENCH_OUT")
        or config_dir
        or "results"
    )
    plan.validate()
    if parallel < 1:
        raise PlanError("parallel worker count must be positive")

    records = execute_plan(plan, parallel=parallel)
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    runs_path = out_path / "runs.csv"
    write_runs_csv(runs_path, records)
    # summarize from the file just written so `stats` on the same file
    # reproduces summary.csv byte for byte
    rows = summarize(read_runs_csv(runs_path), top_k=plan.top_k)
    (out_path / "summary.csv").write_text(format_summary(rows))
    (out_path / "manifest.txt").write_text(
        _manifest_text(plan, parallel, len(records))
    )
    print(f"wrote {runs_path}")
    print(f"wrote {out_path / 'summary.csv'}")
    print(f"wrote {out_path / 'manifest.txt'}")
    return 0


def cmd_solve(args) -> int:
    if args.problem in PROBLEM_NAMES:
        problem = instance(args.problem)
    elif Path(args.problem).exists():
        problem = load_problem(args.problem)
    else:
        raise UnknownProblemError(
            f"{args.problem!r} is neither a built-in problem nor a file"
        )
    if args.optimizer not in OPTIMIZERS:
        print(
            f"error: unknown optimizer {args.optimizer!r}; "
            f"valid: {', '.join(OPTIMIZERS)}",
            file=sys.stderr,
        )
        return 2
    if args.noise not in NOISE_LEVELS:
        print(
            f"error: unknown noise level {args.noise!r}; "
            f"valid: {', '.join(NOISE_LEVELS)}",
            file=sys.stderr,
        )
        return 2

    budget = args.budget
    if budget is None:
        budget = DEFAULT_BUDGETS.get(problem.name, 600)

    ansatz = AnsatzCircuit(problem.a.n_qubits, depth=args.depth)
    rng = np.random.default_rng(args.seed)
    if args.noise == "exact":
        backend = Exact()
    elif args.noise == "shots":
        backend = ShotSampling(shots=args.shots, rng=rng)
    else:
        backend = DeviceNoise(shots=args.shots, rng=rng)
    ledger = EvaluationLedger()
    evaluator = CostEvaluator(problem, ansatz, backend=backend, ledger=ledger)
    objective = Objective(
        cost=evaluator.evaluate_cost,
        param_count=ansatz.param_count,
        units=lambda: ledger.units,
        gradient=evaluator.evaluate_gradient,
    )
    theta0 = rng.uniform(0.0, 2.0 * np.pi, size=ansatz.param_count)
    run = OPTIMIZERS[args.optimizer](
        objective, theta0, OptimizerConfig(budget=budget, seed=args.seed)
    )

    target = classical_solution(problem)
    state = Statevector.zero(problem.a.n_qubits)
    for gate in bind_ansatz(ansatz, np.asarray(run.final_theta, dtype=float)):
        state = apply_gate(state, gate)
    fidelity = abs(np.vdot(target.amplitudes, state.amplitudes)) ** 2

    print(f"problem: {problem.name}")
    print(f"optimizer: {args.optimizer}")
    print(f"noise: {args.noise}")
    print(f"budget: {budget}")
    print(f"units: {ledger.units}")
    print(f"termination: {run.termination}")
    if run.failure_reason:
        print(f"failure-reason: {run.failure_reason}")
    print(f"final-cost: {format(run.final_best_cost, '.9g')}")
    print(f"fidelity: {format(fidelity, '.9g')}")
    return 0


def cmd_stats(args) -> int:
    records = read_runs_csv(args.runs)
    if not records:
        print(f"error: {args.runs}: no runs found", file=sys.stderr)
        return 2
    if args.top_k < 1:
        print("error: --top-k must be positive", file=sys.stderr)
        return 2
    text = format_summary(summarize(records, top_k=args.top_k))
    if args.out is not None:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_list(args) -> int:
    print("problems:")
    for name in PROBLEM_NAMES:
        problem = instance(name)
        terms = " + ".join(
            f"{coeff.real:g}*{word}" for coeff, word in problem.a.terms
        )
        print(f"  {name}: {problem.a.n_qubits} qubits, A = {terms}")
    print("optimizers:")
    for name in OPTIMIZERS:
        print(f"  {name}")
    print("noise levels:")
    for name in NOISE_LEVELS:
        print(f"  {name}")
    print("default budgets:")
    for name, budget in DEFAULT_BUDGETS.items():
        print(f"  {name}: {budget}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vqlsbench",
        description="Variational linear-solver optimizer benchmark.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser(
        "run", help="execute an experiment grid and write CSV results"
    )
    run_parser.add_argument("--config", help="plan file (defaults used if omitted)")
    run_parser.add_argument("--out", help="output directory")
    run_parser.add_argument(
        "--parallel", type=int, help="worker processes (default from plan file or 1)"
    )
    run_parser.set_defaults(handler=cmd_run)

    solve_parser = commands.add_parser(
        "solve", help="optimize one problem and report cost and fidelity"
    )
    solve_parser.add_argument("problem", help="built-in name (A1/A2/A3) or file path")
    solve_parser.add_argument("--optimizer", default="bfgs")
    solve_parser.add_argument(
        "--noise", default="exact", help="exact, shots or device"
    )
    solve_parser.add_argument("--shots", type=int, default=10_000)
    solve_parser.add_argument("--budget", type=int, default=None)
    solve_parser.add_argument("--depth", type=int, default=2)
    solve_parser.add_argument("--seed", type=int, default=0)
    solve_parser.set_defaults(handler=cmd_solve)

    stats_parser = commands.add_parser(
        "stats", help="summarize an existing runs.csv"
    )
    stats_parser.add_argument("runs", help="path to runs.csv")
    stats_parser.add_argument("--top-k", type=int, default=50)
    stats_parser.add_argument("--out", help="write summary here instead of stdout")
    stats_parser.set_defaults(handler=cmd_stats)

    list_parser = commands.add_parser(
        "list", help="show problems, optimizers and noise levels"
    )
    list_parser.set_defaults(handler=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, CsvFormatError, PlanError, ProblemFormatError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except (UnknownProblemError, SingularOperatorError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
