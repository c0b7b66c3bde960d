"""Eight classical minimizers sharing one budgeted objective protocol.

Every method consumes an :class:`Objective` whose handles charge
evaluation units to a shared ledger (one unit per cost call, two units
per parameter per gradient call) and respects a hard unit budget: a call
that would push the ledger past the budget is never made, and the run
ends with termination "budget-exhausted".  A trace entry (units,
best-cost-so-far) is recorded at every ledger increment; best-so-far is
the lowest *observed* value, noisy or not.

Methods and their knobs (defaults in :class:`OptimizerConfig`):

    spsa         simultaneous-perturbation stochastic approximation,
                 gains a_k = a/(A+k+1)^0.602, c_k = c/(k+1)^0.101,
                 Rademacher directions, two cost calls per iteration,
                 runs until the budget is gone.
    nelder-mead  reflection 1, expansion 2, contraction 0.5, shrink 0.5;
                 initial simplex theta0 + 0.1 e_k; converges when the
                 simplex cost spread drops below 1e-8.
    powell       per-direction line minimization (bracketing plus golden
                 section, tolerance 1e-4, at most 20 cost calls per
                 line) with the classic largest-decrease direction
                 replacement rule.
    bfgs         dense inverse-Hessian update, strong Wolfe line search
                 (c1 = 1e-4, c2 = 0.9), converges when the gradient
                 infinity-norm drops below 1e-6.
    l-bfgs       two-loop recursion, memory 10, initial scaling fixed to
                 the identity so a short run retraces bfgs exactly.
    cg           Polak-Ribiere+ with restart on non-descent directions,
                 Wolfe c2 = 0.4.
    adam         learning rate 0.1, beta1 0.9, beta2 0.999, epsilon
                 1e-8, bias-corrected moments; one cost call (for the
                 trace) plus one gradient per iteration, runs until the
                 budget is gone.
    amsgrad      adam plus a running maximum of the corrected second
                 moment; identical to adam on the first iteration.

Final parameters are the method's own notion of result: the last
iterate for spsa/adam/amsgrad and the gradient methods, the best
simplex vertex for nelder-mead, the current point for powell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

TERM_BUDGET = "budget-exhausted"
TERM_CONVERGED = "converged"
TERM_FAILURE = "internal-failure"


class NonDescentDirectionError(ValueError):
    """Line search was asked to move along a non-descent direction."""


@dataclass
class Objective:
    """Budget-aware handle pair over some underlying evaluation ledger."""

    cost: Callable[[np.ndarray], float]
    param_count: int
    units: Callable[[], int]
    gradient: Callable[[np.ndarray], np.ndarray] | None = None


@dataclass
class OptimizerConfig:
    budget: int
    seed: int | None = None
    # spsa
    spsa_a: float = 0.2
    spsa_c: float = 0.1
    spsa_stability: float | None = None  # defaults to budget / 20
    # adam family
    learning_rate: float = 0.1
    beta1: float = 0.9
    beta2: float = 0.999
    adam_eps: float = 1e-8
    # nelder-mead
    simplex_step: float = 0.1
    simplex_spread_tol: float = 1e-8
    # powell
    line_tol: float = 1e-4
    line_max_evals: int = 20
    powell_ftol: float = 1e-8
    # gradient-based methods
    grad_tol: float = 1e-6
    wolfe_c1: float = 1e-4
    wolfe_c2: float = 0.9
    cg_wolfe_c2: float = 0.4
    wolfe_max_trials: int = 10
    lbfgs_memory: int = 10

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")


@dataclass
class OptimizerRun:
    """Outcome of one optimization: trace, final point, termination."""

    trace: list[tuple[int, float]]
    final_theta: np.ndarray
    final_best_cost: float
    termination: str
    failure_reason: str | None = None


class _BudgetExceeded(Exception):
    """Internal control flow: the next handle call would overrun the budget."""


class _NonFinite(Exception):
    """Internal control flow: the objective produced a non-finite value."""


class _Tracker:
    """Wraps an Objective with budget enforcement and trace recording."""

    def __init__(self, objective: Objective, budget: int) -> None:
        self.objective = objective
        self.budget = budget
        self.trace: list[tuple[int, float]] = []
        self.best = math.inf

    def cost(self, theta: np.ndarray) -> float:
        if self.objective.units() + 1 > self.budget:
            raise _BudgetExceeded
        value = float(self.objective.cost(np.asarray(theta, dtype=float)))
        if not math.isfinite(value):
            raise _NonFinite(f"objective returned non-finite cost {value!r}")
        if value < self.best:
            self.best = value
        self.trace.append((self.objective.units(), self.best))
        return value

    def gradient(self, theta: np.ndarray) -> np.ndarray:
        if self.objective.gradient is None:
            raise ValueError("objective provides no gradient handle")
        if self.objective.units() + 2 * self.objective.param_count > self.budget:
            raise _BudgetExceeded
        grad = np.asarray(
            self.objective.gradient(np.asarray(theta, dtype=float)), dtype=float
        )
        if not np.all(np.isfinite(grad)):
            raise _NonFinite("objective returned a non-finite gradient")
        if math.isfinite(self.best):
            self.trace.append((self.objective.units(), self.best))
        return grad


def _check_theta0(objective: Objective, theta0) -> np.ndarray:
    theta0 = np.asarray(theta0, dtype=float).copy()
    if theta0.shape != (objective.param_count,):
        raise ValueError(
            f"expected {objective.param_count} initial parameters, "
            f"got shape {theta0.shape}"
        )
    return theta0


def _finish(
    tracker: _Tracker,
    theta: np.ndarray,
    termination: str,
    reason: str | None = None,
) -> OptimizerRun:
    return OptimizerRun(
        trace=tracker.trace,
        final_theta=np.asarray(theta, dtype=float).copy(),
        final_best_cost=tracker.best,
        termination=termination,
        failure_reason=reason,
    )


def spsa_minimize(
    objective: Objective, theta0, config: OptimizerConfig
) -> OptimizerRun:
    theta = _check_theta0(objective, theta0)
    tracker = _Tracker(objective, config.budget)
    rng = np.random.default_rng(config.seed)
    stability = (
        config.spsa_stability
        if config.spsa_stability is not None
        else config.budget / 20.0
    )
    k = 0
    try:
        while True:
            a_k = config.spsa_a / (stability + k + 1.0) ** 0.602
            c_k = config.spsa_c / (k + 1.0) ** 0.101
            delta = rng.integers(0, 2, size=theta.size) * 2.0 - 1.0
            f_plus = tracker.cost(theta + c_k * delta)
            f_minus = tracker.cost(theta - c_k * delta)
            # 1/delta_i = delta_i for Rademacher entries
            theta = theta - a_k * (f_plus - f_minus) / (2.0 * c_k) * delta
            k += 1
    except _BudgetExceeded:
        return _finish(tracker, theta, TERM_BUDGET)
    except _NonFinite as error:
        return _finish(tracker, theta, TERM_FAILURE, str(error))
    except Exception as error:  # objective-side failures are recorded, not raised
        return _finish(tracker, theta, TERM_FAILURE, repr(error))


def nelder_mead_minimize(
    objective: Objective, theta0, config: OptimizerConfig
) -> OptimizerRun:
    theta0 = _check_theta0(objective, theta0)
    tracker = _Tracker(objective, config.budget)
    dim = theta0.size
    best_point = theta0.copy()
    best_value = math.inf

    def sample(point: np.ndarray) -> float:
        nonlocal best_point, best_value
        value = tracker.cost(point)
        if value < best_value:
            best_point, best_value = point.copy(), value
        return value

    try:
        vertices: list[np.ndarray] = []
        values: list[float] = []
        for k in range(dim + 1):
            vertex = theta0.copy()
            if k > 0:
                vertex[k - 1] += config.simplex_step
            values.append(sample(vertex))
            vertices.append(vertex)
        sim = np.array(vertices)
        fsim = np.array(values)
        while True:
            order = np.argsort(fsim, kind="stable")
            sim, fsim = sim[order], fsim[order]
            if fsim[-1] - fsim[0] < config.simplex_spread_tol:
                return _finish(tracker, sim[0], TERM_CONVERGED)
            centroid = sim[:-1].mean(axis=0)
            reflected = centroid + (centroid - sim[-1])
            f_reflected = sample(reflected)
            if f_reflected < fsim[0]:
                expanded = centroid + 2.0 * (centroid - sim[-1])
                f_expanded = sample(expanded)
                if f_expanded < f_reflected:
                    sim[-1], fsim[-1] = expanded, f_expanded
                else:
                    sim[-1], fsim[-1] = reflected, f_reflected
            elif f_reflected < fsim[-2]:
                sim[-1], fsim[-1] = reflected, f_reflected
            else:
                if f_reflected < fsim[-1]:
                    contracted = centroid + 0.5 * (reflected - centroid)
                    f_contracted = sample(contracted)
                    if f_contracted <= f_reflected:
                        sim[-1], fsim[-1] = contracted, f_contracted
                    else:
                        _shrink(sample, sim, fsim)
                else:
                    contracted = centroid - 0.5 * (centroid - sim[-1])
                    f_contracted = sample(contracted)
                    if f_contracted < fsim[-1]:
                        sim[-1], fsim[-1] = contracted, f_contracted
                    else:
                        _shrink(sample, sim, fsim)
    except _BudgetExceeded:
        return _finish(tracker, best_point, TERM_BUDGET)
    except _NonFinite as error:
        return _finish(tracker, best_point, TERM_FAILURE, str(error))
    except Exception as error:
        return _finish(tracker, best_point, TERM_FAILURE, repr(error))


def _shrink(
    sample: Callable[[np.ndarray], float], sim: np.ndarray, fsim: np.ndarray
) -> None:
    for i in range(1, sim.shape[0]):
        sim[i] = sim[0] + 0.5 * (sim[i] - sim[0])
        fsim[i] = sample(sim[i])


def _line_minimize(
    tracker: _Tracker,
    x: np.ndarray,
    direction: np.ndarray,
    fx: float,
    config: OptimizerConfig,
) -> tuple[np.ndarray, float]:
    """Derivative-free minimization along one direction.

    Brackets downhill with golden-ratio expansion, then contracts by
    golden section until the step interval is below line_tol or the
    per-line evaluation cap is hit.  Returns the best point seen, which
    is the starting point itself when nothing improved.
    """
    evals = 0
    best_alpha, best_value = 0.0, fx

    def probe(alpha: float) -> float:
        nonlocal evals, best_alpha, best_value
        value = tracker.cost(x + alpha * direction)
        evals += 1
        if value < best_value:
            best_alpha, best_value = alpha, value
        return value

    golden = 1.618033988749895
    inv_golden = 0.6180339887498949

    lo_alpha, lo_value = 0.0, fx
    hi_alpha = 1.0
    hi_value = probe(hi_alpha)
    if hi_value > lo_value:
        lo_alpha, hi_alpha = hi_alpha, lo_alpha
        lo_value, hi_value = hi_value, lo_value
    far_alpha = hi_alpha + golden * (hi_alpha - lo_alpha)
    far_value = probe(far_alpha)
    while far_value < hi_value and evals < config.line_max_evals:
        lo_alpha, lo_value = hi_alpha, hi_value
        hi_alpha, hi_value = far_alpha, far_value
        far_alpha = hi_alpha + golden * (hi_alpha - lo_alpha)
        far_value = probe(far_alpha)

    left, right = min(lo_alpha, far_alpha), max(lo_alpha, far_alpha)
    inner_a = right - inv_golden * (right - left)
    inner_b = left + inv_golden * (right - left)
    if evals + 2 <= config.line_max_evals:
        value_a, value_b = probe(inner_a), probe(inner_b)
        while right - left > config.line_tol and evals < config.line_max_evals:
            if value_a < value_b:
                right, inner_b, value_b = inner_b, inner_a, value_a
                inner_a = right - inv_golden * (right - left)
                value_a = probe(inner_a)
            else:
                left, inner_a, value_a = inner_a, inner_b, value_b
                inner_b = left + inv_golden * (right - left)
                value_b = probe(inner_b)
    if best_alpha == 0.0:
        return x, fx
    return x + best_alpha * direction, best_value


def powell_minimize(
    objective: Objective, theta0, config: OptimizerConfig
) -> OptimizerRun:
    x = _check_theta0(objective, theta0)
    tracker = _Tracker(objective, config.budget)
    dim = x.size
    directions = [np.eye(dim)[i] for i in range(dim)]
    try:
        fx = tracker.cost(x)
        while True:
            sweep_start_x = x.copy()
            sweep_start_f = fx
            largest_decrease = 0.0
            largest_index = 0
            for i, direction in enumerate(directions):
                previous = fx
                x, fx = _line_minimize(tracker, x, direction, fx, config)
                if previous - fx > largest_decrease:
                    largest_decrease = previous - fx
                    largest_index = i
            if 2.0 * (sweep_start_f - fx) <= config.powell_ftol * (
                abs(sweep_start_f) + abs(fx)
            ) + 1e-20:
                return _finish(tracker, x, TERM_CONVERGED)
            # largest-decrease direction replacement (classic extrapolation test)
            extrapolated = 2.0 * x - sweep_start_x
            f_extrapolated = tracker.cost(extrapolated)
            if f_extrapolated < sweep_start_f:
                test = 2.0 * (
                    sweep_start_f - 2.0 * fx + f_extrapolated
                ) * (sweep_start_f - fx - largest_decrease) ** 2 - largest_decrease * (
                    sweep_start_f - f_extrapolated
                ) ** 2
                if test < 0.0:
                    new_direction = x - sweep_start_x
                    norm = np.linalg.norm(new_direction)
                    if norm > 1e-14:
                        x, fx = _line_minimize(
                            tracker, x, new_direction / norm, fx, config
                        )
                        directions[largest_index] = directions[-1]
                        directions[-1] = new_direction / norm
    except _BudgetExceeded:
        return _finish(tracker, x, TERM_BUDGET)
    except _NonFinite as error:
        return _finish(tracker, x, TERM_FAILURE, str(error))
    except Exception as error:
        return _finish(tracker, x, TERM_FAILURE, repr(error))


def _wolfe_search(
    cost: Callable[[np.ndarray], float],
    gradient: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    direction: np.ndarray,
    f0: float,
    g0: np.ndarray,
    c1: float,
    c2: float,
    max_trials: int,
) -> tuple[float, float, np.ndarray, bool]:
    """Strong Wolfe search; returns (alpha, f, g, satisfied).

    Each trial evaluates cost and gradient once.  On exhaustion the best
    (lowest-cost) trial is returned with satisfied=False.
    """
    slope0 = float(g0 @ direction)
    if slope0 >= 0.0:
        raise NonDescentDirectionError(
            f"directional derivative {slope0:.3e} is not negative"
        )
    trials = 0
    best: tuple[float, float, np.ndarray] | None = None

    def evaluate(alpha: float) -> tuple[float, np.ndarray]:
        nonlocal trials, best
        point = x + alpha * direction
        value = cost(point)
        grad = gradient(point)
        trials += 1
        if best is None or value < best[1]:
            best = (alpha, value, grad)
        return value, grad

    def interpolate(lo: float, f_lo: float, slope_lo: float, hi: float, f_hi: float) -> float:
        span = hi - lo
        denominator = 2.0 * (f_hi - f_lo - slope_lo * span)
        alpha = lo + (-slope_lo * span * span / denominator if denominator != 0 else span / 2.0)
        fraction = (alpha - lo) / span if span != 0 else 0.5
        if not 0.1 <= fraction <= 0.9:
            alpha = lo + span / 2.0
        return alpha

    def zoom(
        lo: float, f_lo: float, slope_lo: float, hi: float, f_hi: float
    ) -> tuple[float, float, np.ndarray, bool]:
        while trials < max_trials:
            alpha = interpolate(lo, f_lo, slope_lo, hi, f_hi)
            value, grad = evaluate(alpha)
            if value > f0 + c1 * alpha * slope0 or value >= f_lo:
                hi, f_hi = alpha, value
            else:
                slope = float(grad @ direction)
                if abs(slope) <= -c2 * slope0:
                    return alpha, value, grad, True
                if slope * (hi - lo) >= 0.0:
                    hi, f_hi = lo, f_lo
                lo, f_lo, slope_lo = alpha, value, slope
        assert best is not None
        return best[0], best[1], best[2], False

    previous_alpha, previous_value, previous_slope = 0.0, f0, slope0
    alpha = 1.0
    first = True
    while trials < max_trials:
        value, grad = evaluate(alpha)
        if value > f0 + c1 * alpha * slope0 or (not first and value >= previous_value):
            return zoom(previous_alpha, previous_value, previous_slope, alpha, value)
        slope = float(grad @ direction)
        if abs(slope) <= -c2 * slope0:
            return alpha, value, grad, True
        if slope >= 0.0:
            return zoom(alpha, value, slope, previous_alpha, previous_value)
        previous_alpha, previous_value, previous_slope = alpha, value, slope
        alpha *= 2.0
        first = False
    assert best is not None
    return best[0], best[1], best[2], False


def line_search_wolfe(
    objective: Objective,
    theta,
    direction,
    grad,
    config: OptimizerConfig | None = None,
) -> float:
    """Standalone strong-Wolfe step-length search along one direction.

    Evaluates the objective at theta once for the reference value, then
    runs the same search the gradient-based methods use and returns the
    accepted (or best-found) step length.
    """
    config = config if config is not None else OptimizerConfig(budget=0)
    theta = np.asarray(theta, dtype=float)
    direction = np.asarray(direction, dtype=float)
    grad = np.asarray(grad, dtype=float)
    f0 = float(objective.cost(theta))
    if objective.gradient is None:
        raise ValueError("objective provides no gradient handle")
    alpha, _, _, _ = _wolfe_search(
        lambda p: float(objective.cost(p)),
        lambda p: np.asarray(objective.gradient(p), dtype=float),
        theta,
        direction,
        f0,
        grad,
        config.wolfe_c1,
        config.wolfe_c2,
        config.wolfe_max_trials,
    )
    return float(alpha)


def _gradient_descent_family(
    objective: Objective, theta0, config: OptimizerConfig, method: str
) -> OptimizerRun:
    """Shared driver for bfgs, l-bfgs and cg."""
    x = _check_theta0(objective, theta0)
    tracker = _Tracker(objective, config.budget)
    c2 = config.cg_wolfe_c2 if method == "cg" else config.wolfe_c2
    dim = x.size
    try:
        f = tracker.cost(x)
        g = tracker.gradient(x)
        if np.max(np.abs(g)) < config.grad_tol:
            return _finish(tracker, x, TERM_CONVERGED)
        hessian_inverse = np.eye(dim)
        memory: list[tuple[np.ndarray, np.ndarray]] = []
        cg_direction = -g
        stalls = 0
        while True:
            if method == "bfgs":
                direction = -(hessian_inverse @ g)
            elif method == "l-bfgs":
                direction = -_two_loop(g, memory)
            else:
                direction = cg_direction
            if float(g @ direction) >= 0.0:
                # restart from steepest descent when curvature info misleads
                direction = -g
                if method == "bfgs":
                    hessian_inverse = np.eye(dim)
                elif method == "l-bfgs":
                    memory.clear()
                else:
                    cg_direction = direction
            alpha, f_new, g_new, _ = _wolfe_search(
                tracker.cost,
                tracker.gradient,
                x,
                direction,
                f,
                g,
                config.wolfe_c1,
                c2,
                config.wolfe_max_trials,
            )
            step = alpha * direction
            y = g_new - g
            if f - f_new <= 1e-14 * (1.0 + abs(f)):
                stalls += 1
            else:
                stalls = 0
            x = x + step
            if method == "bfgs":
                sy = float(step @ y)
                if sy > 1e-12 * np.linalg.norm(step) * np.linalg.norm(y):
                    rho = 1.0 / sy
                    outer = np.outer(step, y)
                    v = np.eye(dim) - rho * outer
                    hessian_inverse = v @ hessian_inverse @ v.T + rho * np.outer(
                        step, step
                    )
            elif method == "l-bfgs":
                sy = float(step @ y)
                if sy > 1e-12 * np.linalg.norm(step) * np.linalg.norm(y):
                    memory.append((step, y))
                    if len(memory) > config.lbfgs_memory:
                        memory.pop(0)
            else:
                g_dot = float(g @ g)
                beta = max(0.0, float(g_new @ (g_new - g)) / g_dot) if g_dot > 0 else 0.0
                cg_direction = -g_new + beta * cg_direction
            f, g = f_new, g_new
            if np.max(np.abs(g)) < config.grad_tol:
                return _finish(tracker, x, TERM_CONVERGED)
            if stalls >= 2:
                # two consecutive sweeps without measurable decrease: treat
                # as converged to working precision
                return _finish(tracker, x, TERM_CONVERGED)
    except _BudgetExceeded:
        return _finish(tracker, x, TERM_BUDGET)
    except _NonFinite as error:
        return _finish(tracker, x, TERM_FAILURE, str(error))
    except NonDescentDirectionError as error:
        return _finish(tracker, x, TERM_FAILURE, str(error))
    except Exception as error:
        return _finish(tracker, x, TERM_FAILURE, repr(error))


def _two_loop(g: np.ndarray, memory: list[tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
    """L-BFGS two-loop recursion with identity initial scaling."""
    q = g.copy()
    alphas: list[float] = []
    rhos: list[float] = []
    for s, y in reversed(memory):
        rho = 1.0 / float(s @ y)
        a = rho * float(s @ q)
        q -= a * y
        alphas.append(a)
        rhos.append(rho)
    r = q
    for (s, y), a, rho in zip(memory, reversed(alphas), reversed(rhos)):
        b = rho * float(y @ r)
        r += (a - b) * s
    return r


def bfgs_minimize(objective: Objective, theta0, config: OptimizerConfig) -> OptimizerRun:
    return _gradient_descent_family(objective, theta0, config, "bfgs")


def lbfgs_minimize(objective: Objective, theta0, config: OptimizerConfig) -> OptimizerRun:
    return _gradient_descent_family(objective, theta0, config, "l-bfgs")


def cg_minimize(objective: Objective, theta0, config: OptimizerConfig) -> OptimizerRun:
    return _gradient_descent_family(objective, theta0, config, "cg")


def _adam_family(
    objective: Objective, theta0, config: OptimizerConfig, amsgrad: bool
) -> OptimizerRun:
    theta = _check_theta0(objective, theta0)
    tracker = _Tracker(objective, config.budget)
    m = np.zeros_like(theta)
    v = np.zeros_like(theta)
    v_max = np.zeros_like(theta)
    t = 0
    try:
        while True:
            tracker.cost(theta)  # progress sample for the trace
            g = tracker.gradient(theta)
            t += 1
            m = config.beta1 * m + (1.0 - config.beta1) * g
            v = config.beta2 * v + (1.0 - config.beta2) * g * g
            m_hat = m / (1.0 - config.beta1**t)
            v_hat = v / (1.0 - config.beta2**t)
            if amsgrad:
                v_max = np.maximum(v_max, v_hat)
                denominator = np.sqrt(v_max) + config.adam_eps
            else:
                denominator = np.sqrt(v_hat) + config.adam_eps
            theta = theta - config.learning_rate * m_hat / denominator
    except _BudgetExceeded:
        return _finish(tracker, theta, TERM_BUDGET)
    except _NonFinite as error:
        return _finish(tracker, theta, TERM_FAILURE, str(error))
    except Exception as error:
        return _finish(tracker, theta, TERM_FAILURE, repr(error))


def adam_minimize(objective: Objective, theta0, config: OptimizerConfig) -> OptimizerRun:
    return _adam_family(objective, theta0, config, amsgrad=False)


def amsgrad_minimize(objective: Objective, theta0, config: OptimizerConfig) -> OptimizerRun:
    return _adam_family(objective, theta0, config, amsgrad=True)


OPTIMIZERS: dict[str, Callable[[Objective, np.ndarray, OptimizerConfig], OptimizerRun]] = {
    "spsa": spsa_minimize,
    "nelder-mead": nelder_mead_minimize,
    "powell": powell_minimize,
    "bfgs": bfgs_minimize,
    "l-bfgs": lbfgs_minimize,
    "cg": cg_minimize,
    "adam": adam_minimize,
    "amsgrad": amsgrad_minimize,
}

OPTIMIZER_NAMES = tuple(OPTIMIZERS)


def classical_objective(
    f: Callable[[np.ndarray], float],
    param_count: int,
    gradient: Callable[[np.ndarray], np.ndarray] | None = None,
) -> Objective:
    """Wrap a plain function with ledger-equivalent unit accounting.

    Cost calls charge one unit; gradient calls charge 2 * param_count,
    mirroring the parameter-shift price of the quantum evaluator.  Useful
    for calibration objectives and tests.
    """
    counter = {"units": 0}

    def cost(theta: np.ndarray) -> float:
        counter["units"] += 1
        return float(f(theta))

    wrapped_gradient = None
    if gradient is not None:

        def wrapped_gradient(theta: np.ndarray) -> np.ndarray:
            counter["units"] += 2 * param_count
            return np.asarray(gradient(theta), dtype=float)

    return Objective(
        cost=cost,
        param_count=param_count,
        units=lambda: counter["units"],
        gradient=wrapped_gradient,
    )
