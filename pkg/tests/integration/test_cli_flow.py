"""
Integration tests for the command-line flow.

These run the real application through ``create_app`` with every adapter in
place: generation, solving, evaluation and sweeps write and read actual files.
"""
import pytest

from rotation_sync.adapters.cli.exit_codes import ExitCode
from rotation_sync.main import create_app


def run(*argv):
    return create_app().run([str(arg) for arg in argv])


@pytest.fixture
def clean_instance(tmp_path):
    """A noiseless synthetic instance on disk."""
    graph_path = tmp_path / "graph.txt"
    status = run("synth", "--n", 12, "--p", 0.6, "--outliers", 0, "--sigma-deg", 0,
                 "--seed", 1, "--out", graph_path)
    assert status == ExitCode.OK
    return graph_path, tmp_path / "graph.gt.txt"


class TestCommandLineFlow:
    @pytest.mark.integration
    def test_synth_solve_eval(self, clean_instance, tmp_path, capsys):
        """Test generating, solving and scoring an instance end to end."""
        # Arrange
        graph_path, truth_path = clean_instance
        out_path = tmp_path / "rotations.txt"

        # Act
        solve_status = run("solve", "--in", graph_path, "--out", out_path,
                           "--method", "spanning-tree", "--ground-truth", truth_path)
        eval_status = run("eval", "--estimate", out_path, "--ground-truth", truth_path)

        # Assert
        assert solve_status == ExitCode.OK
        assert eval_status == ExitCode.OK
        assert out_path.read_text().startswith("# method: spanning-tree\n")
        report = (tmp_path / "rotations.csv").read_text().splitlines()
        assert len(report) == 2
        assert report[0].startswith("n,p,missing_requested")
        assert "mean 0.0000 deg" in capsys.readouterr().out.splitlines()[-1]

    @pytest.mark.integration
    def test_npz_instance(self, tmp_path):
        """Test that the archive format works through the whole pipeline."""
        # Arrange
        graph_path = tmp_path / "graph.npz"
        run("synth", "--n", 10, "--p", 0.7, "--seed", 2, "--out", graph_path)

        # Act
        status = run("solve", "--in", graph_path, "--out", tmp_path / "r.txt", "--method", "spectral")

        # Assert
        assert status == ExitCode.OK
        assert (tmp_path / "r.txt").exists()

    @pytest.mark.integration
    def test_solve_is_byte_identical(self, clean_instance, tmp_path):
        """Test that repeating a DMF solve reproduces its output files exactly."""
        # Arrange
        graph_path, truth_path = clean_instance
        out_path = tmp_path / "r.txt"
        argv = ["solve", "--in", graph_path, "--out", out_path, "--ground-truth", truth_path,
                "--depth", 3, "--max-iters", 300]
        outputs = []

        # Act
        for _ in range(2):
            status = run(*argv)
            outputs.append((status, out_path.read_bytes(), (tmp_path / "r.csv").read_bytes()))

        # Assert
        assert outputs[0] == outputs[1]
        assert outputs[0][0] == ExitCode.OK
        assert len(outputs[0][2].splitlines()) == 2

    @pytest.mark.integration
    def test_sweep_is_byte_identical(self, tmp_path):
        """Test that a sweep repeated with other worker counts writes the same CSV."""
        # Arrange
        flags = ["--n", 10, "--missing", 0.3, 0.5, "--seeds", 0, 1, "--depths", 2,
                 "--methods", "dmf", "spectral", "spanning-tree", "--max-iters", 100]

        # Act
        first = run("sweep", *flags, "--workers", 1, "--out", tmp_path / "a.csv")
        second = run("sweep", *flags, "--workers", 3, "--out", tmp_path / "b.csv")

        # Assert
        assert first == second == ExitCode.OK
        content = (tmp_path / "a.csv").read_bytes()
        assert content == (tmp_path / "b.csv").read_bytes()
        assert len(content.splitlines()) == 1 + 2 * 2 * 3

    @pytest.mark.integration
    def test_missing_input(self, tmp_path, capsys):
        """Test that a missing input file fails with the I/O code and writes nothing."""
        # Act
        status = run("solve", "--in", tmp_path / "absent.txt", "--out", tmp_path / "r.txt")

        # Assert
        assert status == ExitCode.IO
        assert not (tmp_path / "r.txt").exists()
        assert capsys.readouterr().err.startswith("error: FileNotFoundError")

    @pytest.mark.integration
    def test_malformed_input(self, tmp_path, capsys):
        """Test that a parse error names the offending line."""
        # Arrange
        graph_path = tmp_path / "graph.txt"
        graph_path.write_text("n 2\n1 2 1 0 0 0 1 0 0 0\n")

        # Act
        status = run("solve", "--in", graph_path, "--out", tmp_path / "r.txt")

        # Assert
        assert status == ExitCode.PARSE
        assert f"{graph_path}:2:" in capsys.readouterr().err

    @pytest.mark.integration
    def test_reflection_block_is_rejected(self, tmp_path, capsys):
        """Test that a det = -1 measurement is an invariant violation with its line number."""
        # Arrange
        graph_path = tmp_path / "graph.txt"
        graph_path.write_text("n 2\n1 2 1 0 0 0 1 0 0 0 -1\n")

        # Act
        status = run("solve", "--in", graph_path, "--out", tmp_path / "r.txt", "--method", "spanning-tree")

        # Assert
        assert status == ExitCode.PARSE
        err = capsys.readouterr().err
        assert "GraphInvariantError" in err
        assert f"{graph_path}:2:" in err
        assert not (tmp_path / "r.txt").exists()

    @pytest.mark.integration
    def test_disconnected_input(self, tmp_path):
        """Test that a disconnected graph has its own exit code."""
        # Arrange
        identity = "1 0 0 0 1 0 0 0 1"
        graph_path = tmp_path / "graph.txt"
        graph_path.write_text(f"n 4\n1 2 {identity}\n3 4 {identity}\n")

        # Act
        status = run("solve", "--in", graph_path, "--out", tmp_path / "r.txt", "--method", "spectral")

        # Assert
        assert status == ExitCode.DISCONNECTED
        assert not (tmp_path / "r.txt").exists()

    @pytest.mark.integration
    def test_usage_error(self, tmp_path):
        """Test that an invalid solver flag value is a usage error."""
        # Act
        status = run("solve", "--in", tmp_path / "g.txt", "--out", tmp_path / "r.txt", "--depth", 1)

        # Assert
        assert status == ExitCode.USAGE
