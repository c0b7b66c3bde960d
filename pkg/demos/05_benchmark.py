#!/usr/bin/env python3
"""A miniature benchmark grid, written to CSV like the real thing.

The full protocol (three problems, eight optimizers, three noise
levels, one hundred runs per cell) takes a while; this scaled-down grid
finishes in seconds and produces the same file formats.
"""

from pathlib import Path

from vqlsbench import (
    ExperimentPlan,
    execute_plan,
    format_summary,
    read_runs_csv,
    summarize,
    write_runs_csv,
)

plan = ExperimentPlan(
    problems=("A1",),
    optimizers=("spsa", "nelder-mead", "bfgs"),
    noise_levels=("exact", "shots"),
    runs_per_cell=8,
    top_k=4,
    master_seed=123,
    budgets={"A1": 200},
    shots=2_000,
)

print("running", len(plan.problems) * len(plan.optimizers)
      * len(plan.noise_levels) * plan.runs_per_cell, "optimizations...")
records = execute_plan(plan, parallel=2)

out = Path("demo-results")
out.mkdir(exist_ok=True)
write_runs_csv(out / "runs.csv", records)
rows = summarize(read_runs_csv(out / "runs.csv"), top_k=plan.top_k)
(out / "summary.csv").write_text(format_summary(rows))

print(f"wrote {out / 'runs.csv'} and {out / 'summary.csv'}\n")
print(f"{'optimizer':<12} {'noise':<6} {'median':>12} {'best':>12}")
for row in rows:
    print(f"{row.optimizer:<12} {row.noise:<6} {row.median:>12.3e} {row.minimum:>12.3e}")

print("\nthe same summary comes from the command line:")
print("  vqlsbench stats demo-results/runs.csv --top-k 4")
