#!/usr/bin/env python3
"""Every optimizer against the same instance, same start, same budget."""

import numpy as np

from vqlsbench import (
    OPTIMIZER_NAMES,
    OPTIMIZERS,
    AnsatzCircuit,
    CostEvaluator,
    EvaluationLedger,
    Objective,
    OptimizerConfig,
    instance,
)
from vqlsbench.bench import convergence_curve

BUDGET = 600

problem = instance("A1")
ansatz = AnsatzCircuit(problem.n_qubits, depth=2)
rng = np.random.default_rng(12)
theta0 = rng.uniform(0, 2 * np.pi, ansatz.param_count)

print(f"A1, exact evaluation, budget {BUDGET} units, shared start\n")
print(f"{'optimizer':<12} {'final best':>12} {'units':>6}  termination")

curves = {}
for name in OPTIMIZER_NAMES:
    ledger = EvaluationLedger()
    evaluator = CostEvaluator(problem, ansatz, ledger=ledger)
    objective = Objective(
        cost=evaluator.evaluate_cost,
        param_count=ansatz.param_count,
        units=lambda: ledger.units,
        gradient=evaluator.evaluate_gradient,
    )
    run = OPTIMIZERS[name](objective, theta0, OptimizerConfig(budget=BUDGET, seed=4))
    curves[name] = convergence_curve(run.trace, BUDGET)
    print(f"{name:<12} {run.final_best_cost:>12.3e} {ledger.units:>6}  {run.termination}")

# coarse text rendering of the best-so-far curves (log scale)
print("\nbest-so-far by units spent (columns at 60-unit steps):")
levels = " .:-=+*#%@"
for name in OPTIMIZER_NAMES:
    row = []
    for position in range(60, BUDGET + 1, 60):
        value = max(curves[name][position - 1], 1e-12)
        depth = min(int(-np.log10(value) * 1.2), len(levels) - 1)
        row.append(levels[max(depth, 0)])
    print(f"{name:<12} {''.join(row)}")
print("\n(darker means lower cost; columns are 60-unit checkpoints)")
