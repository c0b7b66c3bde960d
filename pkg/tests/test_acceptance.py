"""End-to-end acceptance gate.

These are the checks that define "working" for the package: cost-kernel
equivalence against independent dense oracles, cost bounds, gradient
fidelity, exact unit accounting and budget compliance across the full
benchmark matrix, sampling statistics, the shared-initialization
protocol, optimizer sanity on a benign quadratic, the qualitative
noise-robustness ordering at reduced scale, and byte-level determinism
of the results files.

The noise-trend test is statistical by nature and prints its measured
medians; everything else is deterministic.
"""

import time

import numpy as np
import pytest

from oracles import frozen_quadratic, local_cost
from vqlsbench.bench import (
    ExperimentPlan,
    execute_plan,
    execute_run,
    select_top_k,
    write_runs_csv,
)
from vqlsbench.cost import (
    CostEvaluator,
    EvaluationLedger,
    Exact,
    ShotSampling,
    estimate_expectation,
)
from vqlsbench.optimizers import OPTIMIZER_NAMES, OPTIMIZERS, Objective, OptimizerConfig
from vqlsbench.problem import (
    PROBLEM_NAMES,
    AnsatzCircuit,
    instance,
    parse_problem_text,
)

DEPTH = 2


def sampled_thetas(problem_name, count, seed):
    problem = instance(problem_name)
    ansatz = AnsatzCircuit(problem.n_qubits, depth=DEPTH)
    rng = np.random.default_rng(seed)
    return problem, ansatz, rng.uniform(0, 2 * np.pi, (count, ansatz.param_count))


class TestCostKernel:
    def test_matches_dense_oracle_on_all_instances(self):
        started = time.monotonic()
        for name in PROBLEM_NAMES:
            problem, ansatz, thetas = sampled_thetas(name, 100, seed=2024)
            evaluator = CostEvaluator(problem, ansatz)
            terms = [(coeff, word.factors) for coeff, word in problem.a.terms]
            for theta in thetas:
                mine = evaluator.evaluate_cost(theta)
                reference = local_cost(terms, problem.n_qubits, DEPTH, theta)
                assert abs(mine - reference) < 1e-9
        assert time.monotonic() - started < 10.0

    def test_cost_stays_inside_unit_interval(self):
        for name in PROBLEM_NAMES:
            problem, ansatz, thetas = sampled_thetas(name, 100, seed=2024)
            evaluator = CostEvaluator(problem, ansatz)
            for theta in thetas:
                value = evaluator.evaluate_cost(theta)
                assert 0.0 <= value <= 1.0

    def test_exact_solution_has_zero_cost(self):
        # for A = identity the solution equals the target state, which
        # the first rotation layer prepares with every angle at pi/2
        problem = parse_problem_text("qubits 3\n1.0 III\n", name="identity")
        ansatz = AnsatzCircuit(3, depth=DEPTH)
        theta = np.zeros(ansatz.param_count)
        theta[:3] = np.pi / 2
        value = CostEvaluator(problem, ansatz).evaluate_cost(theta)
        assert 0.0 <= value <= 1e-12


class TestGradientFidelity:
    def test_parameter_shift_matches_central_differences(self):
        h = 1e-5
        for name in PROBLEM_NAMES:
            problem, ansatz, thetas = sampled_thetas(name, 20, seed=77)
            evaluator = CostEvaluator(problem, ansatz)
            for theta in thetas:
                analytic = evaluator.evaluate_gradient(theta)
                numeric = np.empty_like(analytic)
                for k in range(theta.size):
                    plus, minus = theta.copy(), theta.copy()
                    plus[k] += h
                    minus[k] -= h
                    numeric[k] = (
                        evaluator.evaluate_cost(plus)
                        - evaluator.evaluate_cost(minus)
                    ) / (2 * h)
                scale = max(np.max(np.abs(numeric)), 1e-12)
                assert np.max(np.abs(analytic - numeric)) / scale < 1e-6


class TestUnitAccounting:
    def test_instrumented_bfgs_ledger_is_exact(self):
        problem = instance("A1")
        ansatz = AnsatzCircuit(problem.n_qubits, depth=DEPTH)
        assert ansatz.param_count == 9
        ledger = EvaluationLedger()
        evaluator = CostEvaluator(problem, ansatz, ledger=ledger)
        calls = {"cost": 0, "grad": 0}

        def counted_cost(theta):
            calls["cost"] += 1
            return evaluator.evaluate_cost(theta)

        def counted_gradient(theta):
            calls["grad"] += 1
            return evaluator.evaluate_gradient(theta)

        objective = Objective(
            cost=counted_cost,
            param_count=9,
            units=lambda: ledger.units,
            gradient=counted_gradient,
        )
        theta0 = np.random.default_rng(3).uniform(0, 2 * np.pi, 9)
        OPTIMIZERS["bfgs"](objective, theta0, OptimizerConfig(budget=300))
        assert calls["cost"] > 0 and calls["grad"] > 0
        assert ledger.units == calls["cost"] + 18 * calls["grad"]

    def test_full_matrix_budget_audit(self):
        # every cell of the benchmark grid at its real budget, one run
        # per cell: no trace may record units past the cap
        plan = ExperimentPlan(runs_per_cell=1, top_k=1, master_seed=0)
        records = execute_plan(plan, parallel=4)
        assert len(records) == 3 * len(OPTIMIZER_NAMES) * 3
        for record in records:
            cap = plan.budgets[record.problem]
            assert record.trace, f"empty trace in {record}"
            assert record.trace[-1][0] <= cap
            assert all(units <= cap for units, _ in record.trace)


class TestSamplingStatistics:
    def test_estimator_mean_and_spread(self):
        started = time.monotonic()
        expectation = 0.3
        shots = 10_000
        repeats = 200
        backend = ShotSampling(shots=shots, rng=np.random.default_rng(123))
        samples = np.array(
            [estimate_expectation(expectation, backend) for _ in range(repeats)]
        )
        sigma = np.sqrt((1 - expectation**2) / shots)
        assert abs(samples.mean() - expectation) < 5 * sigma / np.sqrt(repeats)
        assert sigma / 3 < samples.std(ddof=1) < 3 * sigma
        assert time.monotonic() - started < 5.0


class TestInitializationSharing:
    def test_theta0_is_bitwise_identical_across_cells(self):
        plan = ExperimentPlan(
            problems=("A1",),
            optimizers=("spsa", "nelder-mead", "bfgs"),
            noise_levels=("exact", "shots", "device"),
            runs_per_cell=2,
            top_k=1,
            master_seed=9,
            budgets={"A1": 4},
            shots=50,
        )
        records = execute_plan(plan)
        for run_index in range(plan.runs_per_cell):
            group = [r.theta0 for r in records if r.run_index == run_index]
            assert len(group) == 9
            for theta in group[1:]:
                assert np.array_equal(theta, group[0])
        first = [r.theta0 for r in records if r.run_index == 0][0]
        second = [r.theta0 for r in records if r.run_index == 1][0]
        assert not np.array_equal(first, second)


class TestOptimizerSanity:
    @pytest.mark.parametrize("name", OPTIMIZER_NAMES)
    def test_solves_benign_quadratic_within_budget(self, name):
        f, g = frozen_quadratic()
        units = {"count": 0}

        def cost(x):
            units["count"] += 1
            return f(x)

        def gradient(x):
            units["count"] += 2 * 9
            return g(x)

        objective = Objective(
            cost=cost, param_count=9, units=lambda: units["count"], gradient=gradient
        )
        run = OPTIMIZERS[name](objective, np.zeros(9), OptimizerConfig(budget=600, seed=1))
        assert units["count"] <= 600
        assert f(run.final_theta) < 1e-2


def median_termination_cost(records, optimizer, top_k=10):
    """Median noiseless cost of the parameters the top runs returned.

    Under sampling noise the minimum *observed* estimate saturates at
    the noise floor for every method (a lottery won by whoever samples
    most), so solution quality is the discriminating statistic.
    Selection into the top half still uses the recorded best-observed
    cost, exactly as the summary pipeline does.
    """
    problem = instance("A1")
    reference = CostEvaluator(problem, AnsatzCircuit(problem.n_qubits, depth=DEPTH))
    cell = [r for r in records if r.optimizer == optimizer]
    top = select_top_k(cell, top_k)
    return float(np.median([reference.evaluate_cost(r.final_theta) for r in top]))


def trend_records(optimizers, noise):
    plan = ExperimentPlan(
        problems=("A1",),
        optimizers=optimizers,
        noise_levels=(noise,),
        runs_per_cell=20,
        top_k=10,
        master_seed=0,
    )
    return execute_plan(plan, parallel=4)


class TestNoiseTrends:
    """Reduced-scale statistical orderings (A1, 20 seeds, top 10)."""

    def test_gradient_methods_lead_under_sampling_noise(self, capsys):
        started = time.monotonic()
        records = trend_records(("bfgs", "nelder-mead"), "shots")
        bfgs_median = median_termination_cost(records, "bfgs")
        nm_median = median_termination_cost(records, "nelder-mead")
        elapsed = time.monotonic() - started
        with capsys.disabled():
            print(
                f"\n[shots trend] bfgs={bfgs_median:.6g} "
                f"nelder-mead={nm_median:.6g} ({elapsed:.0f}s)"
            )
        assert elapsed < 900.0
        assert bfgs_median <= nm_median

    def test_perturbation_method_leads_under_device_noise(self, capsys):
        """KNOWN RED on current defaults; kept as an honest flag.

        The assertion encodes the robustness ordering the benchmark was
        built to probe: SPSA, which never trusts any single noisy
        evaluation, should survive gate/readout noise better than a
        conjugate-gradient loop.  This implementation's line search is
        contractually forgiving (best-trial fallback plus a
        steepest-descent restart instead of aborting), so its CG
        degrades gracefully under noise and empirically ends at better
        parameters than SPSA at this scale.  The measured medians are
        printed either way so the gap stays visible.
        """
        started = time.monotonic()
        records = trend_records(("spsa", "cg"), "device")
        spsa_median = median_termination_cost(records, "spsa")
        cg_median = median_termination_cost(records, "cg")
        elapsed = time.monotonic() - started
        with capsys.disabled():
            print(
                f"\n[device trend] spsa={spsa_median:.6g} "
                f"cg={cg_median:.6g} ({elapsed:.0f}s)"
            )
        assert elapsed < 1800.0
        assert spsa_median <= cg_median, (
            f"device-noise ordering not reproduced: spsa median "
            f"{spsa_median:.6g} > cg median {cg_median:.6g}; this check "
            f"documents a design tension and is expected to fail on "
            f"current defaults (see test docstring)"
        )


class TestDeterminism:
    def test_rerun_writes_identical_runs_csv(self, tmp_path):
        plan = ExperimentPlan(
            problems=("A1",),
            optimizers=("spsa", "adam"),
            noise_levels=("exact", "shots", "device"),
            runs_per_cell=2,
            top_k=2,
            master_seed=31,
            budgets={"A1": 30},
            shots=300,
        )
        paths = []
        for tag in ("first", "second"):
            records = execute_plan(plan)
            path = tmp_path / f"{tag}.csv"
            write_runs_csv(path, records)
            paths.append(path)
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_single_runs_reproduce_grid_cells(self):
        plan = ExperimentPlan(
            problems=("A1",),
            optimizers=("bfgs",),
            noise_levels=("shots",),
            runs_per_cell=2,
            top_k=1,
            master_seed=5,
            budgets={"A1": 40},
            shots=100,
        )
        grid = execute_plan(plan)
        lone = execute_run(plan, "A1", "bfgs", "shots", 1)
        twin = next(r for r in grid if r.run_index == 1)
        assert lone.trace == twin.trace
        assert np.array_equal(lone.final_theta, twin.final_theta)
