"""Command-line behavior: plan files, outputs, exit codes."""

import subprocess
import sys

import pytest

from vqlsbench.bench import RUNS_HEADER
from vqlsbench.cli import ConfigError, main, parse_plan_file

TINY_PLAN = """\
# two-cell smoke plan
[plan]
problems = A1
optimizers = nelder-mead spsa
noise = exact
runs = 2
top-k = 2
master-seed = 7
shots = 100
depth = 1

[budgets]
A1 = 20

[output]
dir = from-config
parallel = 1
"""


@pytest.fixture()
def tiny_plan_path(tmp_path):
    path = tmp_path / "plan.ini"
    path.write_text(TINY_PLAN)
    return path


class TestPlanFile:
    def test_parses_all_sections(self, tiny_plan_path):
        plan, out_dir, parallel = parse_plan_file(tiny_plan_path)
        assert plan.problems == ("A1",)
        assert plan.optimizers == ("nelder-mead", "spsa")
        assert plan.noise_levels == ("exact",)
        assert plan.runs_per_cell == 2
        assert plan.top_k == 2
        assert plan.master_seed == 7
        assert plan.shots == 100
        assert plan.ansatz_depth == 1
        assert plan.budgets["A1"] == 20
        assert out_dir == "from-config"
        assert parallel == 1

    def test_comma_separated_lists(self, tmp_path):
        path = tmp_path / "plan.ini"
        path.write_text("[plan]\nproblems = A1, A2\n")
        plan, _, _ = parse_plan_file(path)
        assert plan.problems == ("A1", "A2")

    def test_defaults_survive_partial_files(self, tmp_path):
        path = tmp_path / "plan.ini"
        path.write_text("[plan]\nruns = 5\ntop-k = 3\n")
        plan, out_dir, parallel = parse_plan_file(path)
        assert plan.runs_per_cell == 5
        assert plan.top_k == 3
        assert plan.problems == ("A1", "A2", "A3")
        assert plan.budgets == {"A1": 600, "A2": 800, "A3": 1000}
        assert out_dir is None and parallel == 1

    def test_noise_section(self, tmp_path):
        path = tmp_path / "plan.ini"
        path.write_text("[noise]\np1 = 0.005\np-readout = 0.04\n")
        plan, _, _ = parse_plan_file(path)
        assert plan.noise.p1 == 0.005
        assert plan.noise.p2 == 0.01
        assert plan.noise.p_readout == 0.04

    @pytest.mark.parametrize(
        "content,lineno,fragment",
        [
            ("[mystery]\n", 1, "unknown section"),
            ("[plan]\n[plan]\n", 2, "duplicate section"),
            ("[plan]\nruns\n", 2, "key = value"),
            ("runs = 5\n", 1, "before any"),
            ("[plan]\nruns = 5\nruns = 6\n", 3, "duplicate key"),
            ("[plan]\nruns = soon\n", 2, "integer"),
            ("[plan]\nwidgets = 3\n", 2, "unknown key"),
            ("[noise]\np1 = tiny\n", 2, "number"),
            ("[plan]\nruns =\n", 2, "empty value"),
        ],
    )
    def test_errors_name_their_line(self, tmp_path, content, lineno, fragment):
        path = tmp_path / "plan.ini"
        path.write_text(content)
        with pytest.raises(ConfigError, match=f":{lineno}:") as caught:
            parse_plan_file(path)
        assert fragment in str(caught.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            parse_plan_file(tmp_path / "absent.ini")


class TestRunCommand:
    def test_writes_all_outputs(self, tiny_plan_path, tmp_path, capsys):
        out = tmp_path / "results"
        code = main(
            ["run", "--config", str(tiny_plan_path), "--out", str(out)]
        )
        assert code == 0
        assert (out / "runs.csv").exists()
        assert (out / "summary.csv").exists()
        assert (out / "manifest.txt").exists()
        runs_text = (out / "runs.csv").read_text()
        assert runs_text.startswith(RUNS_HEADER + "\n")
        manifest = (out / "manifest.txt").read_text()
        assert "master-seed: 7" in manifest
        assert "budgets: A1=20" in manifest

    def test_env_var_sets_output_dir(self, tiny_plan_path, tmp_path, monkeypatch):
        target = tmp_path / "env-results"
        monkeypatch.setenv("VQLSBENCH_OUT", str(target))
        monkeypatch.chdir(tmp_path)
        assert main(["run", "--config", str(tiny_plan_path)]) == 0
        assert (target / "runs.csv").exists()

    def test_flag_beats_env_var(self, tiny_plan_path, tmp_path, monkeypatch):
        monkeypatch.setenv("VQLSBENCH_OUT", str(tmp_path / "ignored"))
        chosen = tmp_path / "chosen"
        assert (
            main(["run", "--config", str(tiny_plan_path), "--out", str(chosen)]) == 0
        )
        assert (chosen / "runs.csv").exists()
        assert not (tmp_path / "ignored").exists()

    def test_config_dir_used_without_overrides(
        self, tiny_plan_path, tmp_path, monkeypatch
    ):
        monkeypatch.delenv("VQLSBENCH_OUT", raising=False)
        monkeypatch.chdir(tmp_path)
        assert main(["run", "--config", str(tiny_plan_path)]) == 0
        assert (tmp_path / "from-config" / "runs.csv").exists()

    def test_rerun_reproduces_runs_csv(self, tiny_plan_path, tmp_path):
        first = tmp_path / "first"
        second = tmp_path / "second"
        main(["run", "--config", str(tiny_plan_path), "--out", str(first)])
        main(["run", "--config", str(tiny_plan_path), "--out", str(second)])
        assert (first / "runs.csv").read_bytes() == (second / "runs.csv").read_bytes()
        assert (
            first / "summary.csv"
        ).read_bytes() == (second / "summary.csv").read_bytes()

    def test_bad_config_exits_two(self, tmp_path, capsys):
        path = tmp_path / "plan.ini"
        path.write_text("[plan]\nruns = argh\n")
        assert main(["run", "--config", str(path)]) == 2
        assert ":2:" in capsys.readouterr().err

    def test_parallel_flag(self, tiny_plan_path, tmp_path):
        serial = tmp_path / "serial"
        threaded = tmp_path / "parallel"
        main(["run", "--config", str(tiny_plan_path), "--out", str(serial)])
        main(
            [
                "run",
                "--config",
                str(tiny_plan_path),
                "--out",
                str(threaded),
                "--parallel",
                "2",
            ]
        )
        assert (serial / "runs.csv").read_bytes() == (
            threaded / "runs.csv"
        ).read_bytes()


class TestStatsCommand:
    def test_matches_run_summary_byte_for_byte(self, tiny_plan_path, tmp_path):
        out = tmp_path / "results"
        main(["run", "--config", str(tiny_plan_path), "--out", str(out)])
        recomputed = tmp_path / "summary2.csv"
        code = main(
            [
                "stats",
                str(out / "runs.csv"),
                "--top-k",
                "2",
                "--out",
                str(recomputed),
            ]
        )
        assert code == 0
        assert recomputed.read_bytes() == (out / "summary.csv").read_bytes()

    def test_prints_to_stdout(self, tiny_plan_path, tmp_path, capsys):
        out = tmp_path / "results"
        main(["run", "--config", str(tiny_plan_path), "--out", str(out)])
        capsys.readouterr()
        assert main(["stats", str(out / "runs.csv"), "--top-k", "1"]) == 0
        printed = capsys.readouterr().out
        assert printed.startswith("problem,optimizer,noise,n_selected,")
        assert ",1," in printed

    def test_malformed_csv_exits_two_naming_line(self, tmp_path, capsys):
        bad = tmp_path / "runs.csv"
        bad.write_text(RUNS_HEADER + "\nA1,spsa,exact,0,abc,0.5\n")
        assert main(["stats", str(bad)]) == 2
        assert ":2:" in capsys.readouterr().err

    def test_missing_file_exits_one(self, tmp_path, capsys):
        assert main(["stats", str(tmp_path / "nope.csv")]) == 1


class TestSolveCommand:
    def test_builtin_problem(self, capsys):
        code = main(["solve", "A1", "--seed", "3", "--optimizer", "bfgs"])
        assert code == 0
        out = capsys.readouterr().out
        fields = dict(
            line.split(": ", 1) for line in out.strip().split("\n") if ": " in line
        )
        assert fields["problem"] == "A1"
        assert fields["noise"] == "exact"
        assert fields["budget"] == "600"  # built-in default for A1
        assert int(fields["units"]) <= 600
        assert 0.0 <= float(fields["final-cost"]) <= 1.0
        assert 0.0 <= float(fields["fidelity"]) <= 1.0 + 1e-9
        # a vanishing cost forces the prepared state onto the solution
        assert float(fields["final-cost"]) < 1e-6
        assert float(fields["fidelity"]) > 0.999

    def test_problem_file(self, tmp_path, capsys):
        path = tmp_path / "custom.prob"
        path.write_text("qubits 2\n1.0 II\n0.3 ZI\n")
        code = main(
            ["solve", str(path), "--budget", "40", "--depth", "1", "--seed", "1"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "problem: custom" in out

    def test_shots_noise(self, capsys):
        code = main(
            [
                "solve",
                "A1",
                "--noise",
                "shots",
                "--shots",
                "500",
                "--budget",
                "30",
                "--optimizer",
                "spsa",
            ]
        )
        assert code == 0
        assert "noise: shots" in capsys.readouterr().out

    def test_unknown_problem_exits_one(self, capsys):
        assert main(["solve", "A9"]) == 1
        assert "A9" in capsys.readouterr().err

    def test_unknown_optimizer_exits_two(self, capsys):
        assert main(["solve", "A1", "--optimizer", "sgd"]) == 2

    def test_bad_problem_file_exits_two(self, tmp_path, capsys):
        path = tmp_path / "broken.prob"
        path.write_text("qubits 2\n1.0 QQ\n")
        assert main(["solve", str(path)]) == 2
        assert ":2:" in capsys.readouterr().err

    def test_singular_problem_exits_one(self, tmp_path, capsys):
        path = tmp_path / "singular.prob"
        path.write_text("qubits 2\n0.5 II\n-0.5 ZZ\n")
        assert main(["solve", str(path), "--budget", "10"]) == 1
        assert "singular" in capsys.readouterr().err.lower()


class TestListCommand:
    def test_lists_everything(self, capsys):
        assert main(["list"]) == 0
        out = capsys.readouterr().out
        for token in (
            "A1",
            "A2",
            "A3",
            "spsa",
            "nelder-mead",
            "powell",
            "bfgs",
            "l-bfgs",
            "cg",
            "adam",
            "amsgrad",
            "exact",
            "shots",
            "device",
            "600",
            "800",
            "1000",
        ):
            assert token in out


class TestInstalledEntryPoint:
    def test_console_script_runs(self):
        result = subprocess.run(
            [sys.executable, "-m", "vqlsbench.cli", "list"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert "optimizers:" in result.stdout

    def test_missing_subcommand_exits_two(self):
        result = subprocess.run(
            [sys.executable, "-m", "vqlsbench.cli"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 2
