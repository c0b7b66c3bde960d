"""Statevector and density-matrix simulation kernel.

Qubit ordering convention: qubit 0 is the leftmost tensor factor and
therefore the most significant bit of an amplitude index.  For ``n``
qubits the basis state |q0 q1 ... q_{n-1}> lives at index
q0 * 2^(n-1) + q1 * 2^(n-2) + ... + q_{n-1}.

States are treated as immutable: every operation returns a fresh object
and never mutates its input.  Supported gates are Ry rotations, the
fixed single-qubit gates H/X/Z, CX on an adjacent-or-not pair, and a
controlled tensor-product word (one shared control, one single-qubit
factor per non-identity label).

Density-matrix evolution optionally attaches a depolarizing channel
after every gate (strength p1 for one-qubit gates, p2 per two-qubit
gate; a controlled word counts one two-qubit gate per non-identity
factor).  State preparation is noiseless; readout error applies only
where explicitly requested (see :func:`ancilla_prob0`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

_INV_SQRT2 = 1.0 / np.sqrt(2.0)

#: Dense matrices for the single-qubit factors a word may carry.
FACTOR_MATRICES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128),
    "H": np.array(
        [[_INV_SQRT2, _INV_SQRT2], [_INV_SQRT2, -_INV_SQRT2]], dtype=np.complex128
    ),
}


class GateError(ValueError):
    """Malformed gate: bad kind, out-of-range index, or control == target."""


def ry_matrix(angle: float) -> np.ndarray:
    """Rotation about Y: [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]."""
    c = np.cos(angle / 2.0)
    s = np.sin(angle / 2.0)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


@dataclass(frozen=True)
class NoiseParams:
    """Depolarizing-plus-readout noise strengths.

    p1/p2 are per-gate depolarizing probabilities for one- and two-qubit
    gates; p_readout is the symmetric bit-flip probability applied to the
    measured ancilla outcome.
    """

    p1: float = 0.001
    p2: float = 0.01
    p_readout: float = 0.02

    def __post_init__(self) -> None:
        for name in ("p1", "p2", "p_readout"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


@dataclass(frozen=True)
class Gate:
    """One circuit operation.

    kind is one of "ry", "h", "x", "z", "cx", "cword".  For "cword" the
    factors tuple holds one label per qubit of the target register; the
    gate applies the controlled version of the corresponding tensor
    product, decomposed into one controlled two-qubit gate per
    non-identity factor.
    """

    kind: str
    target: int = 0
    control: int = -1
    angle: float = 0.0
    factors: tuple[str, ...] = ()

    @classmethod
    def ry(cls, angle: float, target: int) -> "Gate":
        return cls(kind="ry", target=target, angle=float(angle))

    @classmethod
    def h(cls, target: int) -> "Gate":
        return cls(kind="h", target=target)

    @classmethod
    def x(cls, target: int) -> "Gate":
        return cls(kind="x", target=target)

    @classmethod
    def z(cls, target: int) -> "Gate":
        return cls(kind="z", target=target)

    @classmethod
    def cx(cls, control: int, target: int) -> "Gate":
        return cls(kind="cx", target=target, control=control)

    @classmethod
    def controlled_word(cls, control: int, factors: Iterable[str]) -> "Gate":
        return cls(kind="cword", control=control, factors=tuple(factors))


@dataclass(frozen=True)
class Statevector:
    """Pure state as a length-2^n complex amplitude vector."""

    n_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero(cls, n_qubits: int) -> "Statevector":
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        amps = np.zeros(2**n_qubits, dtype=np.complex128)
        amps[0] = 1.0
        return cls(n_qubits=n_qubits, amplitudes=amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state as a 2^n x 2^n complex matrix."""

    n_qubits: int
    matrix: np.ndarray

    @classmethod
    def zero(cls, n_qubits: int) -> "DensityMatrix":
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        dim = 2**n_qubits
        mat = np.zeros((dim, dim), dtype=np.complex128)
        mat[0, 0] = 1.0
        return cls(n_qubits=n_qubits, matrix=mat)

    @classmethod
    def from_statevector(cls, state: Statevector) -> "DensityMatrix":
        amps = state.amplitudes
        return cls(n_qubits=state.n_qubits, matrix=np.outer(amps, amps.conj()))

    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


# ---------------------------------------------------------------------------
# low-level tensor helpers (shared by the pure and mixed kernels)


def _mat_on_axis(tensor: np.ndarray, mat: np.ndarray, axis: int) -> np.ndarray:
    """Contract a 2x2 matrix into one tensor axis, keeping axis order."""
    out = np.tensordot(mat, tensor, axes=([1], [axis]))
    return np.moveaxis(out, 0, axis)

def _controlled_on_axes(
    tensor: np.ndarray, mat: np.ndarray, control_axis: int, target_axis: int
) -> np.ndarray:
    """Apply mat to target_axis on the control_axis == 1 slice only."""
    index: list = [slice(None)] * tensor.ndim
    index[control_axis] = 1
    sub = tensor[tuple(index)]
    shifted = target_axis - 1 if target_axis > control_axis else target_axis
    sub = np.moveaxis(np.tensordot(mat, sub, axes=([1], [shifted])), 0, shifted)
    out = tensor.copy()
    out[tuple(index)] = sub
    return out


def apply_matrix1(amplitudes: np.ndarray, mat: np.ndarray, qubit: int, n_qubits: int) -> np.ndarray:
    """Apply a 2x2 matrix to one qubit of a raw amplitude vector."""
    tensor = amplitudes.reshape((2,) * n_qubits)
    return _mat_on_axis(tensor, mat, qubit).reshape(-1)


def _check_qubit(q: int, n: int) -> None:
    if not 0 <= q < n:
        raise GateError(f"qubit index {q} out of range for {n} qubits")


def _gate_ops(gate: Gate, n: int) -> list[tuple[np.ndarray, int | None, int]]:
    """Resolve a gate into (matrix, control, target) primitive operations."""
    if gate.kind == "ry":
        _check_qubit(gate.target, n)
        return [(ry_matrix(gate.angle), None, gate.target)]
    if gate.kind in ("h", "x", "z"):
        _check_qubit(gate.target, n)
        return [(FACTOR_MATRICES[gate.kind.upper()], None, gate.target)]
    if gate.kind == "cx":
        _check_qubit(gate.control, n)
        _check_qubit(gate.target, n)
        if gate.control == gate.target:
            raise GateError("cx control and target must differ")
        return [(FACTOR_MATRICES["X"], gate.control, gate.target)]
    if gate.kind == "cword":
        _check_qubit(gate.control, n)
        ops: list[tuple[np.ndarray, int | None, int]] = []
        for q, label in enumerate(gate.factors):
            if label == "I":
                continue
            if label not in FACTOR_MATRICES:
                raise GateError(f"unknown word factor {label!r}")
            _check_qubit(q, n)
            if q == gate.control:
                raise GateError("word factor may not sit on the control qubit")
            ops.append((FACTOR_MATRICES[label], gate.control, q))
        return ops
    raise GateError(f"unknown gate kind {gate.kind!r}")


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """Apply one gate to a pure state and return the new state."""
    n = state.n_qubits
    tensor = state.amplitudes.reshape((2,) * n)
    for mat, control, target in _gate_ops(gate, n):
        if control is None:
            tensor = _mat_on_axis(tensor, mat, target)
        else:
            tensor = _controlled_on_axes(tensor, mat, control, target)
    return Statevector(n_qubits=n, amplitudes=tensor.reshape(-1))


def _depolarize(tensor: np.ndarray, qubits: tuple[int, ...], p: float, n: int) -> np.ndarray:
    """Depolarizing channel on a density tensor: (1-p) rho + p I/2^k (x) tr_k rho."""
    if p == 0.0:
        return tensor
    k = len(qubits)
    source = list(qubits) + [n + q for q in qubits]
    moved = np.moveaxis(tensor, source, range(2 * k))
    reduced = moved[(0,) * 2 * k].copy()
    for bits in list(np.ndindex(*(2,) * k))[1:]:
        reduced += moved[bits + bits]
    out = (1.0 - p) * moved
    scale = p / 2**k
    for bits in np.ndindex(*(2,) * k):
        out[bits + bits] += scale * reduced
    return np.moveaxis(out, range(2 * k), source)


def apply_gate_dm(
    rho: DensityMatrix, gate: Gate, noise: NoiseParams | None = None
) -> DensityMatrix:
    """Apply one gate (and its optional post-gate channel) to a mixed state.

    With noise set, every primitive operation is followed by a depolarizing
    channel on the qubits it acted on: p1 for one-qubit operations, p2 for
    each controlled two-qubit operation.
    """
    n = rho.n_qubits
    dim = 2**n
    tensor = rho.matrix.reshape((2,) * (2 * n))
    for mat, control, target in _gate_ops(gate, n):
        conj = mat.conj()
        if control is None:
            tensor = _mat_on_axis(tensor, mat, target)
            tensor = _mat_on_axis(tensor, conj, n + target)
            if noise is not None:
                tensor = _depolarize(tensor, (target,), noise.p1, n)
        else:
            tensor = _controlled_on_axes(tensor, mat, control, target)
            tensor = _controlled_on_axes(tensor, conj, n + control, n + target)
            if noise is not None:
                tensor = _depolarize(tensor, (control, target), noise.p2, n)
    return DensityMatrix(n_qubits=n, matrix=tensor.reshape(dim, dim))


def _marginal_prob0(state: Statevector | DensityMatrix, qubit: int) -> float:
    n = state.n_qubits
    _check_qubit(qubit, n)
    if isinstance(state, Statevector):
        probs = np.abs(state.amplitudes.reshape((2,) * n)) ** 2
    else:
        probs = np.diagonal(state.matrix).real.reshape((2,) * n)
    axes = tuple(i for i in range(n) if i != qubit)
    by_value = probs.sum(axis=axes) if axes else probs
    return float(by_value[0])


def expectation_z(state: Statevector | DensityMatrix, qubit: int) -> float:
    """<Z_qubit>: probability-weighted +1/-1 over the qubit's marginal."""
    p0 = _marginal_prob0(state, qubit)
    return 2.0 * p0 - 1.0


def ancilla_prob0(rho: DensityMatrix, ancilla: int, p_readout: float = 0.0) -> float:
    """Probability of reading 0 on one qubit, after symmetric readout error."""
    if not 0.0 <= p_readout <= 1.0:
        raise ValueError(f"p_readout must lie in [0, 1], got {p_readout}")
    p0 = _marginal_prob0(rho, ancilla)
    return p0 * (1.0 - p_readout) + (1.0 - p0) * p_readout
