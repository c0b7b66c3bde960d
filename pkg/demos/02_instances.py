#!/usr/bin/env python3
"""The three built-in linear systems and their classical solutions."""

import numpy as np

from vqlsbench import PROBLEM_NAMES, classical_solution, dense_matrix, instance, prepare_b

for name in PROBLEM_NAMES:
    problem = instance(name)
    a = dense_matrix(problem.a)
    n = problem.n_qubits
    print(f"{name}: {n} qubits, dimension {2**n}")
    print(f"  A = " + " + ".join(f"{c.real:g}*{w}" for c, w in problem.a.terms))
    print(f"  b prepared by: {problem.b_prep}")
    print(f"  condition number: {np.linalg.cond(a):.3f}")

    x = classical_solution(problem)
    b = prepare_b(n)
    residual = a @ x.amplitudes
    residual = residual / np.linalg.norm(residual)
    overlap = abs(np.vdot(residual, b.amplitudes)) ** 2
    print(f"  |<b|A x>|^2 after normalization: {overlap:.12f}")
    print(f"  largest solution amplitude: {np.abs(x.amplitudes).max():.4f}")
    print()

# problems can also come from files; the format is one coefficient and
# one factor string per line
from vqlsbench.problem import parse_problem_text

custom = parse_problem_text("qubits 2\n1.0 II\n0.4 XZ\n", name="demo")
print("custom 2-qubit problem parsed from text:",
      " + ".join(f"{c.real:g}*{w}" for c, w in custom.a.terms))
