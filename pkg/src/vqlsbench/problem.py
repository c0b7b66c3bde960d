"""Linear-system instances, right-hand-side preparation, and the ansatz.

A problem is a linear combination of unitary words A = sum_l c_l A_l,
where each A_l is a tensor product of single-qubit factors from
{I, X, Y, Z, H}, together with the fixed right-hand side
|b> = H^(x)n |0...0> (uniform positive amplitudes).

Three built-in instances are provided (A1: 3 qubits, A2: 4 qubits,
A3: 5 qubits); custom instances load from a small text format, see
:func:`parse_problem_text`.

The trial-state ansatz is a hardware-efficient layout: one Ry rotation
per qubit, then ``depth`` repetitions of a CX ladder over adjacent
pairs (pair offset alternating 0, 1, 0, ...) followed by another Ry
layer.  Parameters are ordered layer-major, qubit-minor, giving
n_qubits * (depth + 1) parameters in total.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from pathlib import Path

import numpy as np

from .quantum import FACTOR_MATRICES, Gate, Statevector

VALID_FACTORS = frozenset(FACTOR_MATRICES)

#: How |b> is prepared from |0...0> for every problem in this package.
B_PREPARATION = "Hadamard on every qubit"


class UnknownProblemError(ValueError):
    """Requested instance name is not one of the built-ins."""


class SingularOperatorError(ValueError):
    """The dense operator is numerically singular; carries the singular value."""


class ProblemFormatError(ValueError):
    """A problem definition file failed to parse; message is line-anchored."""


@dataclass(frozen=True)
class UnitaryWord:
    """Tensor product of single-qubit factors, one label per qubit."""

    factors: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a word needs at least one factor")
        bad = [f for f in self.factors if f not in VALID_FACTORS]
        if bad:
            raise ValueError(
                f"unknown factor labels {bad}; valid labels are I, X, Y, Z, H"
            )

    @classmethod
    def from_string(cls, text: str) -> "UnitaryWord":
        return cls(factors=tuple(text))

    def __str__(self) -> str:
        return "".join(self.factors)

    @property
    def n_qubits(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class LinearCombinationOperator:
    """A = sum_l coefficient_l * word_l on a fixed register width."""

    n_qubits: int
    terms: tuple[tuple[complex, UnitaryWord], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("operator needs at least one term")
        for coeff, word in self.terms:
            if word.n_qubits != self.n_qubits:
                raise ValueError(
                    f"word {word} has {word.n_qubits} factors, expected {self.n_qubits}"
                )
            if not np.isfinite(complex(coeff).real) or not np.isfinite(
                complex(coeff).imag
            ):
                raise ValueError(f"non-finite coefficient {coeff!r}")


@dataclass(frozen=True)
class LinearSystemProblem:
    """Named operator plus the fixed uniform right-hand side."""

    name: str
    a: LinearCombinationOperator
    b_prep: str = B_PREPARATION

    @property
    def n_qubits(self) -> int:
        return self.a.n_qubits


@dataclass(frozen=True)
class AnsatzCircuit:
    """Layout parameters of the Ry + CX-ladder trial circuit."""

    n_qubits: int
    depth: int = 2

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("ansatz needs at least one qubit")
        if self.depth < 0:
            raise ValueError("depth must be non-negative")

    @property
    def param_count(self) -> int:
        return self.n_qubits * (self.depth + 1)

    def entangler_pairs(self, block: int) -> list[tuple[int, int]]:
        offset = block % 2
        return [(c, c + 1) for c in range(offset, self.n_qubits - 1, 2)]


_BUILTIN_TERMS: dict[str, tuple[int, tuple[tuple[float, str], ...]]] = {
    "A1": (3, ((1.0, "III"), (0.25, "IZI"), (0.15, "IIH"))),
    "A2": (4, ((1.0, "ZIII"), (0.15, "IIZI"), (0.5, "IIIH"))),
    "A3": (5, ((1.0, "HIIII"), (0.25, "IIZII"), (0.5, "IIIXI"))),
}

PROBLEM_NAMES = tuple(_BUILTIN_TERMS)


def instance(name: str) -> LinearSystemProblem:
    """Return one of the built-in problems A1, A2 or A3."""
    if name not in _BUILTIN_TERMS:
        raise UnknownProblemError(
            f"unknown problem {name!r}; built-ins are {', '.join(PROBLEM_NAMES)}"
        )
    n, terms = _BUILTIN_TERMS[name]
    op = LinearCombinationOperator(
        n_qubits=n,
        terms=tuple(
            (complex(c), UnitaryWord.from_string(w)) for c, w in terms
        ),
    )
    return LinearSystemProblem(name=name, a=op)


def dense_matrix(op: LinearCombinationOperator) -> np.ndarray:
    """Dense 2^n x 2^n matrix of the operator (verification / classical solve)."""
    total = np.zeros((2**op.n_qubits,) * 2, dtype=np.complex128)
    for coeff, word in op.terms:
        factors = [FACTOR_MATRICES[f] for f in word.factors]
        total += complex(coeff) * reduce(np.kron, factors)
    return total


def prepare_b(n_qubits: int) -> Statevector:
    """|b> = H^(x)n |0>: uniform amplitude 2^(-n/2) on every basis state."""
    dim = 2**n_qubits
    amps = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    return Statevector(n_qubits=n_qubits, amplitudes=amps)


def bind_ansatz(spec: AnsatzCircuit, theta: np.ndarray) -> list[Gate]:
    """Materialize the gate list for one parameter vector.

    Layer ordering: Ry(theta[0..n-1]) on qubits 0..n-1, then per block b
    the CX ladder with pair offset b % 2 followed by Ry on parameters
    (b+1)*n .. (b+2)*n - 1.
    """
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (spec.param_count,):
        raise ValueError(
            f"expected {spec.param_count} parameters, got shape {theta.shape}"
        )
    n = spec.n_qubits
    gates = [Gate.ry(theta[q], q) for q in range(n)]
    for block in range(spec.depth):
        gates.extend(Gate.cx(c, t) for c, t in spec.entangler_pairs(block))
        gates.extend(Gate.ry(theta[(block + 1) * n + q], q) for q in range(n))
    return gates


def classical_solution(problem: LinearSystemProblem) -> Statevector:
    """Normalized solution of A x = b via a dense solve.

    Raises SingularOperatorError when the smallest singular value is below
    1e-12 times the largest.
    """
    a = dense_matrix(problem.a)
    singular_values = np.linalg.svd(a, compute_uv=False)
    smallest, largest = float(singular_values[-1]), float(singular_values[0])
    if smallest < 1e-12 * largest:
        raise SingularOperatorError(
            f"operator of {problem.name!r} is numerically singular "
            f"(smallest singular value {smallest:.3e})"
        )
    x = np.linalg.solve(a, prepare_b(problem.n_qubits).amplitudes)
    x = x / np.linalg.norm(x)
    return Statevector(n_qubits=problem.n_qubits, amplitudes=x)


def parse_problem_text(text: str, name: str = "<custom>") -> LinearSystemProblem:
    """Parse a problem definition.

    Grammar (one declaration per line, '#' starts a comment):

        qubits <n>
        <coefficient> <word>
        <coefficient> <word>
        ...

    The qubits line must come first; every word needs exactly n factor
    labels from {I, X, Y, Z, H}.  Coefficients are real literals.
    """
    n_qubits: int | None = None
    terms: list[tuple[complex, UnitaryWord]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n_qubits is None:
            if len(fields) != 2 or fields[0] != "qubits":
                raise ProblemFormatError(
                    f"{name}:{lineno}: expected 'qubits <n>' before any term"
                )
            try:
                n_qubits = int(fields[1])
            except ValueError:
                raise ProblemFormatError(
                    f"{name}:{lineno}: qubit count {fields[1]!r} is not an integer"
                ) from None
            if n_qubits < 1:
                raise ProblemFormatError(
                    f"{name}:{lineno}: qubit count must be positive"
                )
            continue
        if len(fields) != 2:
            raise ProblemFormatError(
                f"{name}:{lineno}: expected '<coefficient> <word>', got {line!r}"
            )
        try:
            coeff = float(fields[0])
        except ValueError:
            raise ProblemFormatError(
                f"{name}:{lineno}: coefficient {fields[0]!r} is not a real number"
            ) from None
        word_text = fields[1]
        if len(word_text) != n_qubits:
            raise ProblemFormatError(
                f"{name}:{lineno}: word {word_text!r} has {len(word_text)} "
                f"factors, expected {n_qubits}"
            )
        bad = sorted(set(word_text) - VALID_FACTORS)
        if bad:
            raise ProblemFormatError(
                f"{name}:{lineno}: unknown factor labels {bad} in {word_text!r}"
            )
        terms.append((complex(coeff), UnitaryWord.from_string(word_text)))
    if n_qubits is None:
        raise ProblemFormatError(f"{name}: no 'qubits <n>' declaration found")
    if not terms:
        raise ProblemFormatError(f"{name}: no terms declared")
    op = LinearCombinationOperator(n_qubits=n_qubits, terms=tuple(terms))
    return LinearSystemProblem(name=name, a=op)


def load_problem(path: str | Path) -> LinearSystemProblem:
    """Read a problem definition file; the problem is named after the file."""
    path = Path(path)
    return parse_problem_text(path.read_text(), name=path.stem)
