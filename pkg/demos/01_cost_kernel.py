#!/usr/bin/env python3
"""Walk through the local cost function on the smallest instance."""

import numpy as np

from vqlsbench import AnsatzCircuit, CostEvaluator, instance

problem = instance("A1")
print("operator terms of A1:")
for coeff, word in problem.a.terms:
    print(f"  {coeff.real:g} * {word}")

ansatz = AnsatzCircuit(problem.n_qubits, depth=2)
print(f"\nansatz: {problem.n_qubits} qubits, depth 2, "
      f"{ansatz.param_count} rotation angles")

evaluator = CostEvaluator(problem, ansatz)
rng = np.random.default_rng(1)
theta = rng.uniform(0, 2 * np.pi, ansatz.param_count)

# the cost is 1/2 - B / (2 n D); D and B are built from the overlap
# terms below, so the pieces can be inspected one by one
print("\noverlap terms at a random point (imaginary parts vanish here):")
d00 = evaluator.delta_term(theta, 0, 0)
d01 = evaluator.delta_term(theta, 0, 1)
b000 = evaluator.beta_term(theta, 0, 0, 0)
print(f"  delta(0,0) = {d00.real:.6f}   (always 1 for unitary terms)")
print(f"  delta(0,1) = {d01.real:.6f}")
print(f"  beta(0,0,j=0) = {b000.real:.6f}")

cost = evaluator.evaluate_cost(theta)
print(f"\ncost at the random point: {cost:.6f}")
print(f"units charged so far: {evaluator.ledger.units}")

# costs stay inside [0, 1] everywhere
samples = [evaluator.evaluate_cost(rng.uniform(0, 2 * np.pi, ansatz.param_count))
           for _ in range(20)]
print(f"\n20 more random points: min {min(samples):.4f}, max {max(samples):.4f}")

# gradients come from the parameter-shift rule and cost 2 units per angle
grad = evaluator.evaluate_gradient(theta)
print(f"\ngradient norm at the first point: {np.linalg.norm(grad):.4f}")
print(f"ledger after one gradient: {evaluator.ledger.units} units "
      f"(cost calls are 1 unit, a gradient is {2 * ansatz.param_count})")
