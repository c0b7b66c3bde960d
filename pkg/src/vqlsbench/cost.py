"""Normalized local cost of a trial state, under three noise backends.

For A = sum_l c_l A_l, trial state |phi(theta)> and |b> = U|0> with
U = H^(x)n, the cost combines two ingredient families:

    delta(l, m)   = <phi| A_l^dag A_m |phi>
    beta(l, m, j) = <phi| A_l^dag U Z_j U^dag A_m |phi>

into  C(theta) = 1/2 - B / (2 n D)  with  D = sum_{l,m} c_l* c_m delta
and B = sum_j sum_{l,m} c_l* c_m beta.  C is 0 exactly when A|phi| is
proportional to |b>, and stays in [0, 1].

Backends
    Exact         exact statevector expectations.
    ShotSampling  exact circuit probabilities, binomially sampled with a
                  fixed shot count per expectation term.
    DeviceNoise   full density-matrix simulation of the estimation
                  circuit (one ancilla driving controlled words), with a
                  depolarizing channel after every gate, ancilla readout
                  error, and the same binomial sampling.

Accounting: one "cost evaluation" is the full set of expectation
estimates behind one C value and charges 1 unit to the ledger.  The
analytic gradient shifts every parameter by +-pi/2, re-estimating the
full set per shift, and charges exactly 2 * param_count units; the
unshifted (B, D) pair is reused from the most recent cost evaluation
without extra charge.  Coefficients must be real: the estimator reads
only real parts and symmetrizes over (l, m) pairs, which is unbiased
for real weights only; complex problems are rejected up front.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .problem import AnsatzCircuit, LinearSystemProblem, bind_ansatz
from .quantum import (
    DensityMatrix,
    FACTOR_MATRICES,
    Gate,
    NoiseParams,
    Statevector,
    ancilla_prob0,
    apply_gate,
    apply_gate_dm,
    apply_matrix1,
)

#: Default number of measurement shots behind one expectation estimate.
DEFAULT_SHOTS = 10000

#: Denominators smaller than this are treated as degenerate.
DENOMINATOR_FLOOR = 1e-12


class UnsupportedProblemError(ValueError):
    """Problem shape the estimator cannot handle (complex coefficients)."""


class DegenerateDenominatorError(ArithmeticError):
    """|<phi| A^dag A |phi>| fell below the safe-division floor."""


@dataclass(frozen=True)
class Exact:
    """Infinite-precision backend: expectations are computed, not sampled."""


@dataclass
class ShotSampling:
    """Binomial sampling of exact circuit probabilities."""

    shots: int = DEFAULT_SHOTS
    rng: np.random.Generator = field(default_factory=np.random.default_rng)

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError(f"shots must be positive, got {self.shots}")


@dataclass
class DeviceNoise:
    """Depolarizing gate noise plus ancilla readout error plus sampling."""

    noise: NoiseParams = field(default_factory=NoiseParams)
    shots: int = DEFAULT_SHOTS
    rng: np.random.Generator = field(default_factory=np.random.default_rng)

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError(f"shots must be positive, got {self.shots}")


NoiseBackend = Exact | ShotSampling | DeviceNoise


def estimate_expectation(value: float, backend: NoiseBackend) -> float:
    """Turn a circuit expectation in [-1, 1] into a measured estimate.

    Exact passes the value through.  Sampling backends map it to the
    ancilla probability p0 = (1 + value) / 2, apply readout error for
    DeviceNoise, draw Binomial(shots, p0), and return 2 p0_hat - 1.
    """
    if isinstance(backend, Exact):
        return float(value)
    p0 = min(max((1.0 + float(value)) / 2.0, 0.0), 1.0)
    if isinstance(backend, DeviceNoise):
        r = backend.noise.p_readout
        p0 = p0 * (1.0 - r) + (1.0 - p0) * r
    hits = backend.rng.binomial(backend.shots, p0)
    return 2.0 * hits / backend.shots - 1.0


@dataclass
class EvaluationLedger:
    """Running count of charged evaluation units, entry by entry."""

    units: int = 0
    log: list[tuple[str, int]] = field(default_factory=list)

    def charge(self, kind: str, amount: int) -> None:
        if amount < 1:
            raise ValueError(f"charge must be positive, got {amount}")
        self.units += amount
        self.log.append((kind, amount))


class CostEvaluator:
    """Evaluates C(theta) and its parameter-shift gradient on one backend.

    All stochastic draws flow through the backend's rng in a fixed
    ingredient order (delta pairs l <= m lexicographically, then beta by
    qubit j with the same pair order), so seeded runs are reproducible.
    """

    def __init__(
        self,
        problem: LinearSystemProblem,
        ansatz: AnsatzCircuit,
        backend: NoiseBackend | None = None,
        ledger: EvaluationLedger | None = None,
    ) -> None:
        if ansatz.n_qubits != problem.n_qubits:
            raise ValueError(
                f"ansatz acts on {ansatz.n_qubits} qubits, problem has "
                f"{problem.n_qubits}"
            )
        for coeff, _ in problem.a.terms:
            if complex(coeff).imag != 0.0:
                raise UnsupportedProblemError(
                    "complex coefficients are not supported: the estimator "
                    "measures real parts only, which is unbiased only for "
                    "real-weighted operators"
                )
        self.problem = problem
        self.ansatz = ansatz
        self.backend: NoiseBackend = backend if backend is not None else Exact()
        self.ledger = ledger if ledger is not None else EvaluationLedger()
        self._coeffs = np.array(
            [complex(c).real for c, _ in problem.a.terms], dtype=float
        )
        self._words = [word.factors for _, word in problem.a.terms]
        self._n = problem.n_qubits
        self._n_terms = len(self._words)
        # sign pattern of Z_j over amplitude indices, one row per qubit
        indices = np.arange(2**self._n)
        self._z_signs = np.array(
            [1.0 - 2.0 * ((indices >> (self._n - 1 - j)) & 1) for j in range(self._n)]
        )
        self._cached: tuple[bytes, float, float] | None = None

    @property
    def param_count(self) -> int:
        return self.ansatz.param_count

    # -- exact statevector ingredients ------------------------------------

    def _trial_state(self, theta: np.ndarray) -> np.ndarray:
        state = Statevector.zero(self._n)
        for gate in bind_ansatz(self.ansatz, theta):
            state = apply_gate(state, gate)
        return state.amplitudes

    def _apply_word(self, amplitudes: np.ndarray, factors: tuple[str, ...]) -> np.ndarray:
        out = amplitudes
        for q, label in enumerate(factors):
            if label != "I":
                out = apply_matrix1(out, FACTOR_MATRICES[label], q, self._n)
        return out

    def _hadamard_all(self, amplitudes: np.ndarray) -> np.ndarray:
        out = amplitudes
        for q in range(self._n):
            out = apply_matrix1(out, FACTOR_MATRICES["H"], q, self._n)
        return out

    def _exact_raw(
        self, theta: np.ndarray
    ) -> tuple[dict[tuple[int, int], complex], dict[tuple[int, int, int], complex]]:
        phi = self._trial_state(theta)
        images = [self._apply_word(phi, w) for w in self._words]
        rotated = [self._hadamard_all(psi) for psi in images]
        deltas: dict[tuple[int, int], complex] = {}
        betas: dict[tuple[int, int, int], complex] = {}
        for l in range(self._n_terms):
            for m in range(l, self._n_terms):
                deltas[(l, m)] = complex(np.vdot(images[l], images[m]))
                for j in range(self._n):
                    betas[(l, m, j)] = complex(
                        np.vdot(rotated[l], self._z_signs[j] * rotated[m])
                    )
        return deltas, betas

    # -- noisy density-matrix ingredients ----------------------------------

    def _device_raw(
        self, theta: np.ndarray
    ) -> tuple[dict[tuple[int, int], complex], dict[tuple[int, int, int], complex]]:
        """Pre-readout estimation-circuit expectations for every ingredient.

        One ancilla (the last qubit) drives every controlled word.  The
        shared prefix (ancilla Hadamard + trial circuit) and the per-m
        branches are computed once and reused; density-matrix evolution
        is deterministic, so the reuse is exact.
        """
        assert isinstance(self.backend, DeviceNoise)
        noise = self.backend.noise
        n = self._n
        ancilla = n
        all_h = ("H",) * n

        rho = DensityMatrix.zero(n + 1)
        rho = apply_gate_dm(rho, Gate.h(ancilla), noise)
        for gate in bind_ansatz(self.ansatz, theta):
            rho = apply_gate_dm(rho, gate, noise)

        def finish(state: DensityMatrix, l: int) -> complex:
            out = apply_gate_dm(
                state, Gate.controlled_word(ancilla, self._words[l]), noise
            )
            out = apply_gate_dm(out, Gate.h(ancilla), noise)
            return complex(2.0 * ancilla_prob0(out, ancilla) - 1.0)

        deltas: dict[tuple[int, int], complex] = {}
        betas: dict[tuple[int, int, int], complex] = {}
        for m in range(self._n_terms):
            with_m = apply_gate_dm(
                rho, Gate.controlled_word(ancilla, self._words[m]), noise
            )
            for l in range(0, m + 1):
                deltas[(l, m)] = finish(with_m, l)
            unprepared = apply_gate_dm(
                with_m, Gate.controlled_word(ancilla, all_h), noise
            )
            for j in range(n):
                flipped = apply_gate_dm(
                    unprepared,
                    Gate.controlled_word(ancilla, tuple("Z" if q == j else "I" for q in range(n))),
                    noise,
                )
                reprepared = apply_gate_dm(
                    flipped, Gate.controlled_word(ancilla, all_h), noise
                )
                for l in range(0, m + 1):
                    betas[(l, m, j)] = finish(reprepared, l)
        return deltas, betas

    # -- assembly -----------------------------------------------------------

    def _raw_ingredients(self, theta: np.ndarray):
        if isinstance(self.backend, DeviceNoise):
            return self._device_raw(theta)
        return self._exact_raw(theta)

    def _assemble(self, theta: np.ndarray) -> tuple[float, float]:
        """Estimate (D, B) at theta, consuming rng draws in canonical order."""
        deltas, betas = self._raw_ingredients(theta)
        c = self._coeffs
        d_total = 0.0
        b_total = 0.0
        for l in range(self._n_terms):
            for m in range(l, self._n_terms):
                weight = c[l] * c[m] * (1.0 if l == m else 2.0)
                d_total += weight * estimate_expectation(
                    deltas[(l, m)].real, self.backend
                )
        for j in range(self._n):
            for l in range(self._n_terms):
                for m in range(l, self._n_terms):
                    weight = c[l] * c[m] * (1.0 if l == m else 2.0)
                    b_total += weight * estimate_expectation(
                        betas[(l, m, j)].real, self.backend
                    )
        return d_total, b_total

    def _cost_from(self, d_total: float, b_total: float) -> float:
        if abs(d_total) < DENOMINATOR_FLOOR:
            raise DegenerateDenominatorError(
                f"normalization <phi|A^dag A|phi> = {d_total:.3e} is too small"
            )
        value = 0.5 - b_total / (2.0 * self._n * d_total)
        if isinstance(self.backend, Exact) and -1e-9 <= value < 0.0:
            value = 0.0
        return float(value)

    def _check_theta(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if theta.shape != (self.param_count,):
            raise ValueError(
                f"expected {self.param_count} parameters, got shape {theta.shape}"
            )
        return theta

    # -- public surface ------------------------------------------------------

    def delta_term(self, theta, l: int, m: int) -> complex:
        """Single overlap <phi|A_l^dag A_m|phi> under the backend (uncharged)."""
        theta = self._check_theta(theta)
        self._check_term_index(l)
        self._check_term_index(m)
        raw = self._single_raw(theta, l, m, j=None)
        if isinstance(self.backend, Exact):
            return raw
        return complex(estimate_expectation(raw.real, self.backend), 0.0)

    def beta_term(self, theta, l: int, m: int, j: int) -> complex:
        """Single rotated-Z overlap for qubit j under the backend (uncharged)."""
        theta = self._check_theta(theta)
        self._check_term_index(l)
        self._check_term_index(m)
        if not 0 <= j < self._n:
            raise ValueError(f"qubit index {j} out of range")
        raw = self._single_raw(theta, l, m, j=j)
        if isinstance(self.backend, Exact):
            return raw
        return complex(estimate_expectation(raw.real, self.backend), 0.0)

    def _check_term_index(self, index: int) -> None:
        if not 0 <= index < self._n_terms:
            raise ValueError(f"term index {index} out of range")

    def _single_raw(self, theta: np.ndarray, l: int, m: int, j: int | None) -> complex:
        if isinstance(self.backend, DeviceNoise):
            noise = self.backend.noise
            n = self._n
            ancilla = n
            rho = DensityMatrix.zero(n + 1)
            gates = [Gate.h(ancilla)]
            gates.extend(bind_ansatz(self.ansatz, theta))
            gates.append(Gate.controlled_word(ancilla, self._words[m]))
            if j is not None:
                all_h = ("H",) * n
                z_j = tuple("Z" if q == j else "I" for q in range(n))
                gates.append(Gate.controlled_word(ancilla, all_h))
                gates.append(Gate.controlled_word(ancilla, z_j))
                gates.append(Gate.controlled_word(ancilla, all_h))
            gates.append(Gate.controlled_word(ancilla, self._words[l]))
            gates.append(Gate.h(ancilla))
            for gate in gates:
                rho = apply_gate_dm(rho, gate, noise)
            return complex(2.0 * ancilla_prob0(rho, ancilla) - 1.0)
        phi = self._trial_state(theta)
        left = self._apply_word(phi, self._words[l])
        right = self._apply_word(phi, self._words[m])
        if j is None:
            return complex(np.vdot(left, right))
        left = self._hadamard_all(left)
        right = self._hadamard_all(right)
        return complex(np.vdot(left, self._z_signs[j] * right))

    def evaluate_cost(self, theta) -> float:
        """C(theta) under the backend; charges one unit."""
        theta = self._check_theta(theta)
        d_total, b_total = self._assemble(theta)
        value = self._cost_from(d_total, b_total)
        self.ledger.charge("cost", 1)
        self._cached = (theta.tobytes(), d_total, b_total)
        return value

    def evaluate_gradient(self, theta) -> np.ndarray:
        """Parameter-shift gradient of C; charges 2 * param_count units.

        Uses shifts of +-pi/2 on each Ry parameter and the quotient rule
        dC = -(dB * D - B * dD) / (2 n D^2) with the unshifted (D, B)
        reused from the most recent cost evaluation when available.
        """
        theta = self._check_theta(theta)
        if self._cached is not None and self._cached[0] == theta.tobytes():
            d_total, b_total = self._cached[1], self._cached[2]
        else:
            d_total, b_total = self._assemble(theta)
        if abs(d_total) < DENOMINATOR_FLOOR:
            raise DegenerateDenominatorError(
                f"normalization <phi|A^dag A|phi> = {d_total:.3e} is too small"
            )
        grad = np.empty(self.param_count, dtype=float)
        for k in range(self.param_count):
            shifted = theta.copy()
            shifted[k] = theta[k] + np.pi / 2.0
            d_plus, b_plus = self._assemble(shifted)
            shifted[k] = theta[k] - np.pi / 2.0
            d_minus, b_minus = self._assemble(shifted)
            d_deriv = (d_plus - d_minus) / 2.0
            b_deriv = (b_plus - b_minus) / 2.0
            grad[k] = -(b_deriv * d_total - b_total * d_deriv) / (
                2.0 * self._n * d_total * d_total
            )
        self.ledger.charge("gradient", 2 * self.param_count)
        return grad
