"""Independent dense-matrix oracles used by the test suite.

Everything here is built from np.kron / explicit matrix products only, on
the convention that qubit 0 is the leftmost tensor factor (most
significant bit).  No simulator kernel code is reused, so agreement with
the package is a genuine two-route check.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2.0)
P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)
MATS = {"I": I2, "X": X, "Y": Y, "Z": Z, "H": H}


def ry(angle: float) -> np.ndarray:
    c, s = np.cos(angle / 2.0), np.sin(angle / 2.0)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def embed(ops: dict[int, np.ndarray], n: int) -> np.ndarray:
    """Kron together per-qubit matrices, identity elsewhere."""
    return reduce(np.kron, [ops.get(q, I2) for q in range(n)])


def controlled(control: int, ops: dict[int, np.ndarray], n: int) -> np.ndarray:
    """|0><0|_c (x) 1  +  |1><1|_c (x) (product of ops)."""
    return embed({control: P0}, n) + embed({control: P1, **ops}, n)


def word_matrix(factors, n: int) -> np.ndarray:
    return embed({q: MATS[f] for q, f in enumerate(factors) if f != "I"}, n)


def ansatz_unitary(n: int, depth: int, theta: np.ndarray) -> np.ndarray:
    """Dense unitary of the hardware-efficient Ry + CX-ladder layout."""
    theta = np.asarray(theta, dtype=float)
    u = np.eye(2**n, dtype=np.complex128)
    for q in range(n):
        u = embed({q: ry(theta[q])}, n) @ u
    for block in range(depth):
        offset = block % 2
        for c in range(offset, n - 1, 2):
            u = controlled(c, {c + 1: X}, n) @ u
        for q in range(n):
            u = embed({q: ry(theta[(block + 1) * n + q])}, n) @ u
    return u


def ansatz_state(n: int, depth: int, theta: np.ndarray) -> np.ndarray:
    e0 = np.zeros(2**n, dtype=np.complex128)
    e0[0] = 1.0
    return ansatz_unitary(n, depth, theta) @ e0


def dense_operator(terms, n: int) -> np.ndarray:
    """Sum of coefficient-weighted word matrices."""
    a = np.zeros((2**n, 2**n), dtype=np.complex128)
    for coeff, factors in terms:
        a = a + coeff * word_matrix(factors, n)
    return a


def local_cost(terms, n: int, depth: int, theta: np.ndarray) -> float:
    """Normalized local cost from the dense projector construction."""
    a = dense_operator(terms, n)
    u_b = reduce(np.kron, [H] * n)
    proj = sum(embed({j: P0}, n) for j in range(n)) / n
    h_local = a.conj().T @ u_b @ (np.eye(2**n) - proj) @ u_b.conj().T @ a
    phi = ansatz_state(n, depth, theta)
    denom = float(np.real(phi.conj() @ (a.conj().T @ a) @ phi))
    return float(np.real(phi.conj() @ h_local @ phi)) / denom


def depolarize_dense(rho: np.ndarray, qubits, p: float, n: int) -> np.ndarray:
    """Depolarizing channel via the uniform Pauli-mixture identity.

    (1/4^k) sum_{P in {I,X,Y,Z}^k} P rho P  equals  I/2^k (x) tr_k rho,
    which makes this an independent route to the same channel.
    """
    k = len(qubits)
    paulis = [I2, X, Y, Z]
    mixed = np.zeros_like(rho)
    for choice in np.ndindex(*(4,) * k):
        p_op = embed({q: paulis[c] for q, c in zip(qubits, choice)}, n)
        mixed += p_op @ rho @ p_op.conj().T
    return (1.0 - p) * rho + p * mixed / 4**k


def frozen_quadratic():
    """Fixed well-conditioned 9-parameter quadratic with minimum value zero.

    Shared by the optimizer suite and the acceptance gate: every method
    is expected to drive it below 1e-2 within a 600-unit budget.
    """
    rng = np.random.default_rng(42)
    gram = rng.normal(size=(9, 9))
    gram = gram.T @ gram
    eigenvalues, vectors = np.linalg.eigh(gram)
    rescaled = 1.0 + 5.0 * (eigenvalues - eigenvalues[0]) / (
        eigenvalues[-1] - eigenvalues[0]
    )
    matrix = vectors @ np.diag(rescaled) @ vectors.T
    matrix = 0.5 * (matrix + matrix.T)
    linear = rng.normal(size=9)
    solution = np.linalg.solve(matrix, linear)
    offset = float(0.5 * solution @ matrix @ solution - linear @ solution)

    def f(x):
        return float(0.5 * x @ matrix @ x - linear @ x) - offset

    def g(x):
        return matrix @ x - linear

    return f, g
