"""
Tests for experiment configs, the cell executor and the blpinn command
"""
import logging
import textwrap
from functools import lru_cache

import numpy as np
import pandas as pd
import pytest

from blpinn.cli import (
    CellExecutor,
    CellStatus,
    ExperimentCell,
    ExperimentConfig,
    ProblemConfig,
    parse_config,
    run_cell,
    seed_offset,
)
from blpinn.cli.config import SEED_OFFSET_ENV
from blpinn.cli.main import EXIT_CONFIG, EXIT_DATA, EXIT_OK, main
from blpinn.cli.output import (
    PLAIN_CONTRAST,
    TABLE_COLUMNS,
    acceptance_band,
    row_passes,
    sweep_frame,
    table_frame,
)
from blpinn.exceptions import ConfigError
from blpinn.problems import ProblemKind
from blpinn.records import FileRunStore, RunEventType
from blpinn.training import TrainConfig


TINY_TRAIN = {"n_points": 8, "width": 4, "max_iters": 0}


def tiny_cell(seed=0, kind=ProblemKind.SINGULAR_CD, eps=1e-2, label="ECD"):
    return ExperimentCell(label=label, kind=kind, eps=eps, train=TrainConfig(seed=seed, **TINY_TRAIN))


def write_config(tmp_path, body):
    path = tmp_path / "experiment.yaml"
    path.write_text(textwrap.dedent(body), encoding="utf-8")
    return str(path)


class TestParseConfig:
    """YAML experiment configs"""

    def test_minimal(self):
        config = parse_config("problem:\n  kind: singular_cd\n  eps: 1.0e-4\n")
        assert config.problem.kind == ProblemKind.SINGULAR_CD
        assert config.n_seeds == 3
        assert config.train.max_iters == 50000
        assert config.spec().enriched is True

    def test_full(self):
        config = parse_config(textwrap.dedent("""
            problem:
              kind: burgers
              eps: 1.0e-3
              forcing: "const:-1"
            train:
              n_points: 100
              lr: 5.0e-4
            enrichment: false
            n_seeds: 2
            eps_list: [1.0e-2, 1.0e-3]
            logging:
              level: debug
        """))
        assert config.train.n_points == 100
        assert config.logging.level == "DEBUG"
        assert config.spec(1e-2).eps == 1e-2
        assert config.spec().enriched is False

    def test_syntax_error_has_line(self):
        with pytest.raises(ConfigError) as exc_info:
            parse_config("problem:\n  kind: [singular_cd\n  eps: 1\n")
        assert exc_info.value.line is not None
        assert str(exc_info.value).startswith("line ")

    def test_unknown_key(self):
        with pytest.raises(ConfigError):
            parse_config("problem:\n  kind: singular_cd\nlearning_rate: 0.1\n")

    def test_unknown_kind(self):
        with pytest.raises(ConfigError):
            parse_config("problem:\n  kind: heat\n")

    def test_not_a_mapping(self):
        with pytest.raises(ConfigError):
            parse_config("- 1\n- 2\n")

    def test_eps_list_positive(self):
        with pytest.raises(ConfigError):
            parse_config("problem:\n  kind: singular_cd\neps_list: [0.1, -1]\n")


class TestSeeds:
    """Best-of-n seeds and the environment offset"""

    def test_default(self, monkeypatch):
        monkeypatch.delenv(SEED_OFFSET_ENV, raising=False)
        config = ExperimentConfig(problem=ProblemConfig(kind=ProblemKind.SINGULAR_CD), n_seeds=3)
        assert config.seeds() == [0, 1, 2]

    def test_offset(self, monkeypatch):
        monkeypatch.setenv(SEED_OFFSET_ENV, "10")
        config = ExperimentConfig(problem=ProblemConfig(kind=ProblemKind.SINGULAR_CD), n_seeds=2)
        assert config.seeds() == [10, 11]

    def test_bad_offset(self, monkeypatch):
        monkeypatch.setenv(SEED_OFFSET_ENV, "ten")
        with pytest.raises(ConfigError):
            seed_offset()


class TestOutput:
    """Acceptance bands and table assembly"""

    def test_bands(self):
        assert acceptance_band("ECD", 50) == (0.0, 1.5e-2)
        assert acceptance_band("ECD", 400) == (0.0, 5e-3)
        assert acceptance_band("CCD", 100) == (0.0, np.inf)
        assert acceptance_band("BE", 400) == (0.0, 5e-3)
        with pytest.raises(ValueError):
            acceptance_band("XYZ", 50)

    def test_table_frame(self):
        rows = []
        for label in TABLE_COLUMNS:
            good = 0.9 if label == "CCD" else 1e-3
            rows.append({"problem": label, "N": 50, "seed": 0, "rel_l2": good})
            rows.append({"problem": label, "N": 50, "seed": 1, "rel_l2": 2.0 * good})
        rows.append({"problem": "ECD", "N": 100, "seed": 0, "rel_l2": 1e-3})

        table = table_frame(rows, [50, 100])
        assert list(table.columns) == ["N", *TABLE_COLUMNS, "pass"]
        assert table.loc[0, "ECD"] == 1e-3
        assert bool(table.loc[0, "pass"])
        assert np.isnan(table.loc[1, "CCD"])
        assert not bool(table.loc[1, "pass"])

    def test_plain_column_must_stay_worse_than_enriched(self):
        values = {label: 1e-3 for label in TABLE_COLUMNS}
        values["CCD"] = PLAIN_CONTRAST * 1e-3
        assert row_passes(50, values)
        values["CCD"] = 5e-3
        assert not row_passes(50, values)
        values["CCD"] = np.nan
        assert not row_passes(50, values)

    def test_sweep_frame(self):
        rows = [
            {"eps": 1e-2, "rel_l2": 0.2},
            {"eps": 1e-2, "rel_l2": 0.1},
            {"eps": 1e-3, "rel_l2": 0.3},
        ]
        frame = sweep_frame(rows)
        assert list(frame["eps"]) == [1e-2, 1e-3]
        assert list(frame["best_rel_l2"]) == [0.1, 0.3]


class TestExperimentCell:
    """Cells and their evaluation"""

    def test_cell_id(self):
        assert tiny_cell(seed=4).cell_id == "ECD-eps0.01-N8-seed4"

    def test_run_cell_row(self):
        outcome = run_cell(tiny_cell())
        row = outcome.row
        assert row["problem"] == "ECD"
        assert row["iterations"] == 0
        assert row["enriched"] is True
        assert 0.0 <= row["rel_l2"]
        assert list(outcome.solution.columns) == ["x", "u_pred", "u_ref", "abs_err"]
        assert len(outcome.solution) == 2001
        np.testing.assert_allclose(
            outcome.solution["abs_err"], np.abs(outcome.solution["u_pred"] - outcome.solution["u_ref"])
        )

    def test_degenerate_burgers_falls_back_to_plain(self, caplog):
        cell = ExperimentCell(
            label="BE",
            kind=ProblemKind.BURGERS,
            eps=1e-2,
            forcing="const:0",
            reference_mesh=1024,
            train=TrainConfig(**TINY_TRAIN),
        )
        with caplog.at_level(logging.WARNING, logger="blpinn.cli.runner"):
            outcome = run_cell(cell)
        assert outcome.row["enriched"] is False
        assert np.isfinite(outcome.row["rel_l2"])
        assert "plain ansatz" in caplog.text
        # exact solution is u = -1, matched by the lift at the walls
        np.testing.assert_allclose(outcome.solution["u_ref"], -1.0, atol=1e-10)


class TestCellExecutor:
    """Batch execution with run-log events"""

    @pytest.fixture
    async def store(self, tmp_path):
        store = FileRunStore({"base_path": str(tmp_path)})
        await store.initialize()
        return store

    async def test_execute_all(self, store):
        cells = [tiny_cell(seed=0), tiny_cell(seed=1)]
        summary = await CellExecutor(1, store).execute_all(cells)

        assert summary["total"] == 2
        assert summary["completed"] == 2
        assert summary["failed"] == 0
        assert all(cell.status == CellStatus.COMPLETED for cell in cells)
        assert len(await store.completed_rows()) == 2

    async def test_failure_is_recorded(self, store):
        bad = tiny_cell(kind=ProblemKind.REGULAR_CD, eps=0.5, label="bad")
        summary = await CellExecutor(1, store).execute_all([bad, tiny_cell()])

        assert summary["failed"] == 1
        assert summary["completed"] == 1
        assert summary["outcomes"][0] is None
        assert summary["errors"][0]["cell"] == bad.cell_id
        assert bad.status == CellStatus.FAILED
        failed = await store.retrieve(event_type=RunEventType.FAILED)
        assert [e.cell_id for e in failed] == [bad.cell_id]

    async def test_worker_processes(self, store):
        cells = [tiny_cell(seed=0), tiny_cell(seed=1), tiny_cell(seed=2)]
        summary = await CellExecutor(2, store).execute_all(cells)
        assert summary["completed"] == 3
        serial = run_cell(tiny_cell(seed=1))
        assert summary["outcomes"][1].row["rel_l2"] == serial.row["rel_l2"]

    def test_rejects_non_positive_parallelism(self):
        with pytest.raises(ValueError):
            CellExecutor(0)


@pytest.mark.integration
class TestMain:
    """End-to-end runs of the blpinn command"""

    def test_train(self, tmp_path):
        path = write_config(tmp_path, f"""
            problem:
              kind: singular_cd
              eps: 1.0e-2
            train:
              n_points: 8
              width: 4
              max_iters: 0
            n_seeds: 2
            output_dir: {tmp_path / "out"}
        """)
        assert main(["train", path]) == EXIT_OK

        report = pd.read_csv(tmp_path / "out" / "report.csv")
        assert len(report) == 2
        assert list(report.columns[:6]) == ["problem", "eps", "N", "width", "seed", "rel_l2"]
        solution = pd.read_csv(tmp_path / "out" / "solution.csv")
        assert list(solution.columns) == ["x", "u_pred", "u_ref", "abs_err"]
        assert (tmp_path / "out" / "runs.jsonl").exists()

    def test_sweep(self, tmp_path):
        path = write_config(tmp_path, f"""
            problem:
              kind: singular_rd
            train:
              n_points: 8
              width: 4
              max_iters: 0
            n_seeds: 1
            eps_list: [1.0e-2, 1.0e-3]
            output_dir: {tmp_path / "out"}
        """)
        assert main(["sweep", path]) == EXIT_OK

        sweep = pd.read_csv(tmp_path / "out" / "sweep.csv")
        assert list(sweep.columns) == ["eps", "best_rel_l2"]
        assert len(sweep) == 2
        assert (tmp_path / "out" / "solution_eps0.01.csv").exists()
        assert (tmp_path / "out" / "solution_eps0.001.csv").exists()

    def test_sweep_needs_eps_list(self, tmp_path):
        path = write_config(tmp_path, f"""
            problem:
              kind: singular_rd
            output_dir: {tmp_path / "out"}
        """)
        assert main(["sweep", path]) == EXIT_CONFIG

    def test_broken_yaml(self, tmp_path):
        path = write_config(tmp_path, "problem:\n  kind: [burgers\n")
        assert main(["train", path]) == EXIT_CONFIG

    def test_missing_config(self, tmp_path):
        assert main(["train", str(tmp_path / "absent.yaml")]) == EXIT_CONFIG

    def test_burgers_data_condition(self, tmp_path):
        path = write_config(tmp_path, f"""
            problem:
              kind: burgers
              eps: 1.0e-3
              forcing: "const:1"
            output_dir: {tmp_path / "out"}
        """)
        assert main(["train", path]) == EXIT_DATA

    def test_invalid_jobs(self, tmp_path):
        path = write_config(tmp_path, "problem:\n  kind: singular_cd\n")
        assert main(["train", path, "--jobs", "0"]) == EXIT_CONFIG

    def test_reference(self, tmp_path):
        code = main(["reference", "singular_cd", "0.01", "--mesh", "128", "--out", str(tmp_path)])
        assert code == EXIT_OK
        frame = pd.read_csv(tmp_path / "reference_singular_cd_eps0.01.csv")
        assert list(frame.columns) == ["x", "u"]
        assert len(frame) == 129
        assert frame["x"].iloc[0] == 0.0 and frame["x"].iloc[-1] == 1.0

    def test_reference_hyperbolic(self, tmp_path):
        code = main(["reference", "hyperbolic", "1", "--mesh", "64", "--forcing", "cos", "--out", str(tmp_path)])
        assert code == EXIT_OK
        frame = pd.read_csv(tmp_path / "reference_hyperbolic_eps1.csv")
        np.testing.assert_allclose(frame["u"], np.sin(frame["x"]), atol=1e-9)

    def test_reference_rejects_eps_for_regular_kind(self, tmp_path):
        code = main(["reference", "regular_cd", "0.5", "--mesh", "64", "--out", str(tmp_path)])
        assert code == EXIT_CONFIG

    @pytest.mark.slow
    def test_table(self, tmp_path):
        path = write_config(tmp_path, """
            problem:
              kind: singular_cd
            train:
              width: 4
              max_iters: 0
            n_seeds: 1
            reference_mesh: 2048
        """)
        out = tmp_path / "table"
        assert main(["table", "--config", path, "--out", str(out), "--sizes", "8"]) == EXIT_OK

        table = pd.read_csv(out / "table.csv")
        assert list(table.columns) == ["N", *TABLE_COLUMNS, "pass"]
        assert list(table["N"]) == [8]
        assert len(pd.read_csv(out / "report.csv")) == len(TABLE_COLUMNS)


def table_cell(label, n, seed):
    kind, eps, forcing, enriched = TABLE_COLUMNS[label]
    return ExperimentCell(
        label=label,
        kind=kind,
        eps=eps,
        forcing=forcing,
        enriched=enriched,
        reference_mesh=8192,
        train=TrainConfig(n_points=n, seed=seed),
    )


@lru_cache(maxsize=None)
def best_table_error(label, n, seeds=3):
    """Best-of-seeds relative L² error of one table column at default training"""
    return min(run_cell(table_cell(label, n, seed)).row["rel_l2"] for seed in range(seeds))


def first_crossing(frame, level):
    """Smallest x where the predicted curve passes through level"""
    x = frame["x"].to_numpy()
    gap = frame["u_pred"].to_numpy() - level
    i = int(np.flatnonzero(np.sign(gap[1:]) != np.sign(gap[:-1]))[0])
    return x[i] + (x[i + 1] - x[i]) * gap[i] / (gap[i] - gap[i + 1])


@pytest.mark.slow
class TestAcceptance:
    """Accuracy of the table columns at their published settings"""

    # N = 400 vs N = 50 ordering is only checked above this level
    ORDERING_FLOOR = 1e-4

    def test_enriched_convection_diffusion(self):
        coarse, fine = best_table_error("ECD", 50), best_table_error("ECD", 400)
        assert coarse <= 1.5e-2
        assert fine <= 5e-3
        assert fine <= max(coarse, self.ORDERING_FLOOR)

    def test_plain_convection_diffusion_single_seed(self):
        # fits u⁰ = 1 - x at the points and drops to 0 before the first one
        error = run_cell(table_cell("CCD", 50, seed=0)).row["rel_l2"]
        assert error >= 0.1

    @pytest.mark.parametrize("n", [50, 400])
    def test_plain_convection_diffusion_stays_worse(self, n):
        assert best_table_error("CCD", n) >= PLAIN_CONTRAST * best_table_error("ECD", n)

    def test_linear_reaction_diffusion(self):
        assert best_table_error("LRD", 50) <= 5e-3

    @pytest.mark.parametrize("n,bound", [(50, 1e-1), (400, 1e-2)])
    def test_nonlinear_convection_diffusion(self, n, bound):
        assert best_table_error("NCD", n) <= bound

    @pytest.mark.parametrize("n,bound", [(50, 1e-2), (400, 5e-3)])
    def test_burgers(self, n, bound):
        assert best_table_error("BE", n) <= bound

    @pytest.mark.parametrize(
        "kind,forcing,level",
        [
            ("singular_cd", "const:1", 0.5),
            ("burgers", "const:-1", -0.5 * (1.0 + np.sqrt(3.0))),
        ],
    )
    def test_sweep_layer_narrows_with_eps(self, tmp_path, kind, forcing, level):
        out = tmp_path / "out"
        path = write_config(tmp_path, f"""
            problem:
              kind: {kind}
              forcing: "{forcing}"
            n_seeds: 1
            eps_list: [1.0e-2, 1.0e-3, 1.0e-4]
            output_dir: {out}
        """)
        assert main(["sweep", path, "--jobs", "3"]) == EXIT_OK

        crossings = []
        for eps in (1e-2, 1e-3, 1e-4):
            crossing = first_crossing(pd.read_csv(out / f"solution_eps{eps:g}.csv"), level)
            assert 0.0 < crossing < 10.0 * eps
            crossings.append(crossing)
        assert crossings[0] > crossings[1] > crossings[2]

    @pytest.mark.parametrize(
        "kind", [ProblemKind.HYPERBOLIC, ProblemKind.REGULAR_CD, ProblemKind.REGULAR_RD]
    )
    def test_regular_baselines(self, kind):
        cell = ExperimentCell(label=kind.value, kind=kind, eps=1.0, train=TrainConfig(seed=0))
        assert run_cell(cell).row["rel_l2"] <= 1e-2
