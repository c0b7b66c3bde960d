#!/usr/bin/env python3
"""One point on the cost landscape seen through three noise models."""

import numpy as np

from vqlsbench import (
    AnsatzCircuit,
    CostEvaluator,
    DeviceNoise,
    Exact,
    NoiseParams,
    ShotSampling,
    instance,
)

problem = instance("A1")
ansatz = AnsatzCircuit(problem.n_qubits, depth=2)
rng = np.random.default_rng(5)
theta = rng.uniform(0, 2 * np.pi, ansatz.param_count)

exact = CostEvaluator(problem, ansatz, backend=Exact())
truth = exact.evaluate_cost(theta)
print(f"exact cost: {truth:.8f}")

# finite sampling scatters estimates around the exact value; more shots
# means less scatter
for shots in (100, 1_000, 10_000, 100_000):
    estimates = []
    for seed in range(30):
        backend = ShotSampling(shots=shots, rng=np.random.default_rng(seed))
        noisy = CostEvaluator(problem, ansatz, backend=backend)
        estimates.append(noisy.evaluate_cost(theta))
    spread = np.std(estimates)
    print(f"{shots:>7d} shots: mean {np.mean(estimates):.6f}, spread {spread:.6f}")

# gate and readout errors shift the value systematically as well
device = CostEvaluator(
    problem,
    ansatz,
    backend=DeviceNoise(
        noise=NoiseParams(p1=0.001, p2=0.01, p_readout=0.02),
        shots=10_000,
        rng=np.random.default_rng(0),
    ),
)
estimates = [device.evaluate_cost(theta) for _ in range(10)]
print(f"\ndevice noise: mean {np.mean(estimates):.6f} "
      f"(bias {np.mean(estimates) - truth:+.6f} relative to exact)")
