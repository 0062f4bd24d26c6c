"""Tests for the command line interface."""

import json

import pytest
from typer.testing import CliRunner

from mixedsurf import __version__
from mixedsurf.cli.app import app
from mixedsurf.groups import save_catalogue

runner = CliRunner()

K2_TWO_INPUT = {
    "G": {"degree": 4, "generators": [[2, 3, 4, 1]]},
    "G0_generators": [2],
    "tau_prime": 1,
    "vector": {"genus_part": [0, 0], "tail": [2, 2]},
    "signature": [1, 2, 2],
}


@pytest.fixture
def catalogue_file(tmp_path, catalogue):
    path = tmp_path / "small.json"
    save_catalogue(catalogue, path)
    return path


@pytest.fixture
def input_file(tmp_path):
    path = tmp_path / "candidate.json"
    path.write_text(json.dumps(K2_TWO_INPUT))
    return path


class TestBasics:
    """Test version, init and help."""

    def test_version(self):
        """--version prints the package version."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert f"mixedsurf {__version__}" in result.output

    def test_init(self, isolated_test_db):
        """init creates the home directory and config file."""
        result = runner.invoke(app, ["init"])
        assert result.exit_code == 0
        assert isolated_test_db.config_file.exists()
        assert isolated_test_db.db_path.exists()


class TestSingularity:
    """Test the singularity inspector."""

    def test_d21(self):
        """D(2,1) is shown with its A3 description."""
        result = runner.invoke(app, ["singularity", "D(2,1)"])
        assert result.exit_code == 0
        assert "A3" in result.output

    def test_c83(self):
        """C(8,3) shows its continued fraction."""
        result = runner.invoke(app, ["singularity", "C(8,3)"])
        assert result.exit_code == 0
        assert "[3,3]" in result.output

    def test_inadmissible(self):
        """D(8,5) is a validation failure."""
        result = runner.invoke(app, ["singularity", "D(8,5)"])
        assert result.exit_code == 2
        assert "DTypeInadmissible" in result.output


class TestBaskets:
    """Test the frontier preview."""

    def test_k2_eight(self):
        """(2, 2, 8) has one basket and one branch."""
        result = runner.invoke(app, ["baskets", "--pg", "2", "--q", "2", "--k2", "8"])
        assert result.exit_code == 0
        assert "1 baskets, 1 branches" in result.output

    def test_bad_range(self):
        """Malformed K^2 ranges exit with a validation failure."""
        result = runner.invoke(app, ["baskets", "--pg", "0", "--q", "0", "--k2", "3..1"])
        assert result.exit_code == 2


class TestClassify:
    """Test classification runs and the run store."""

    def test_classify_and_runs(self):
        """A run prints its table, is stored, listed, exported and deleted."""
        result = runner.invoke(app, ["classify", "--pg", "2", "--q", "2", "--k2", "8"])
        assert result.exit_code == 0
        assert "Z2\t4\tZ4" in result.output
        assert "Stored as run #1" in result.output

        listed = runner.invoke(app, ["runs", "list"])
        assert listed.exit_code == 0
        assert "1" in listed.output

        shown = runner.invoke(app, ["runs", "show", "1"])
        assert shown.exit_code == 0
        assert "2;-" in shown.output

        exported = runner.invoke(app, ["runs", "export", "1", "--format", "json"])
        assert exported.exit_code == 0

        deleted = runner.invoke(app, ["runs", "delete", "1", "--yes"])
        assert deleted.exit_code == 0
        assert runner.invoke(app, ["runs", "show", "1"]).exit_code == 1

    def test_export_file(self, isolated_test_db):
        """Exports land in the runs directory by default."""
        runner.invoke(app, ["classify", "--pg", "2", "--q", "2", "--k2", "8"])
        result = runner.invoke(app, ["runs", "export", "1"])
        assert result.exit_code == 0
        path = isolated_test_db.runs_dir / "run-1.tsv"
        assert path.read_text().startswith("K2\tpg\tq")

    def test_out_file(self, tmp_path):
        """--out writes the table instead of printing it."""
        out = tmp_path / "table.json"
        result = runner.invoke(
            app, ["classify", "--pg", "2", "--q", "2", "--k2", "8", "--format", "json", "--out", str(out),
                  "--no-save"],
        )
        assert result.exit_code == 0
        rows = json.loads(out.read_text())
        assert rows[0]["signature"] == "2;-"
        assert runner.invoke(app, ["runs", "list"]).output.strip() == "No stored runs"

    def test_bad_k2(self):
        """An unparseable K^2 range exits with code 2."""
        result = runner.invoke(app, ["classify", "--pg", "1", "--q", "1", "--k2", "a..b"])
        assert result.exit_code == 2
        assert "InputError" in result.output

    def test_missing_run(self):
        """Unknown run IDs exit with code 1."""
        assert runner.invoke(app, ["runs", "show", "99"]).exit_code == 1
        assert runner.invoke(app, ["runs", "export", "99"]).exit_code == 1
        assert runner.invoke(app, ["runs", "delete", "99", "--yes"]).exit_code == 1


class TestAnalyze:
    """Test single-candidate analysis from a file."""

    def test_analyze(self, input_file):
        """The table row carries the basket and the Albanese genus."""
        result = runner.invoke(app, ["analyze", "--input", str(input_file)])
        assert result.exit_code == 0
        row = result.output.splitlines()[1].split("\t")
        assert row[3] == "C(2,1);2xD(2,1)"
        assert row[10] == "2"

    def test_analyze_json(self, input_file):
        """JSON output includes the representative."""
        result = runner.invoke(app, ["analyze", "--input", str(input_file), "--format", "json", "--oracle-check"])
        assert result.exit_code == 0
        assert json.loads(result.output)[0]["representative"]["signature"] == [1, 2, 2]

    def test_missing_input(self, tmp_path):
        """A missing input file is an input error."""
        result = runner.invoke(app, ["analyze", "--input", str(tmp_path / "nope.json")])
        assert result.exit_code == 2


class TestCatalogueCommands:
    """Test catalogue validate and show."""

    def test_validate_packaged(self, catalogue_file):
        """The packaged catalogue validates."""
        result = runner.invoke(
            app, ["catalogue", "validate", str(catalogue_file), "--oracle-max", "4"]
        )
        assert result.exit_code == 0
        assert "OK" in result.output

    def test_validate_bad_file(self, tmp_path):
        """A broken catalogue exits with code 3."""
        path = tmp_path / "bad.json"
        path.write_text("[]")
        result = runner.invoke(app, ["catalogue", "validate", str(path)])
        assert result.exit_code == 3

    def test_show(self, catalogue_file):
        """show lists the groups of one order."""
        result = runner.invoke(app, ["catalogue", "show", str(catalogue_file), "--order", "8"])
        assert result.exit_code == 0
        assert "Q8" in result.output
        assert "Z2xZ4" in result.output

    def test_build(self, tmp_path):
        """build writes a catalogue that validates."""
        out = tmp_path / "built.json"
        result = runner.invoke(app, ["catalogue", "build", "--max-order", "8", "--out", str(out)])
        assert result.exit_code == 0
        assert out.exists()
        assert runner.invoke(app, ["catalogue", "validate", str(out), "--oracle-max", "8"]).exit_code == 0
