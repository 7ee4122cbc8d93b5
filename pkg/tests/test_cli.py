import json
import math

import numpy as np
import pytest

from qfrac.cli import main, parse_angle, parse_gate

from conftest import DATA


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_matrix(lines):
    return np.array([[complex(e.replace("i", "j")) for e in line.split("\t")] for line in lines])


class TestParsing:
    @pytest.mark.parametrize("text,value", [
        ("pi/24", math.pi / 24), ("3pi/4", 3 * math.pi / 4), ("-2*pi", -2 * math.pi),
        ("0.5", 0.5), ("pi", math.pi), ("-pi/2", -math.pi / 2),
    ])
    def test_parse_angle(self, text, value):
        assert parse_angle(text) == pytest.approx(value)

    def test_parse_gate(self):
        np.testing.assert_array_equal(parse_gate("0,1,1,0"), [[0, 1], [1, 0]])
        np.testing.assert_array_equal(parse_gate("1,0,0,1i"), [[1, 0], [0, 1j]])
        np.testing.assert_array_equal(parse_gate("x"), [[0, 1], [1, 0]])


class TestPower:
    def test_square_root_of_x(self, capsys):
        code, out, _ = run_cli(capsys, "power", "--gate", "X", "--exponent", "0.5")
        assert code == 0
        lines = out.splitlines()
        c = math.sqrt(2) / 2
        np.testing.assert_allclose(parse_matrix(lines[:2]), [[c, 1j * c], [1j * c, c]], atol=1e-11)
        assert lines[2].startswith("check\tB^2 vs A^1\tup to global phase")

    def test_recover_phase_is_exact(self, capsys):
        code, out, _ = run_cli(capsys, "power", "--gate", "H", "--exponent", "0.1", "--recover-phase")
        assert code == 0
        b = parse_matrix(out.splitlines()[:2])
        h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        np.testing.assert_allclose(np.linalg.matrix_power(b, 10), h, atol=1e-9)
        assert "\texact\t" in out

    def test_irrational_exponent(self, capsys):
        code, out, _ = run_cli(capsys, "power", "--gate", "Y", "--exponent", "1/pi", "--recover-phase")
        assert code == 0 and "B^(1/" in out

    def test_roots(self, capsys):
        code, out, _ = run_cli(capsys, "power", "--gate", "Z", "--exponent", "1/3", "--roots", "3")
        assert code == 0
        assert out.count("root ") == 3

    def test_non_unitary(self, capsys):
        code, _, err = run_cli(capsys, "power", "--gate", "1,1,0,1", "--exponent", "0.5")
        assert code == 2 and "unitary" in err

    def test_bad_entries(self, capsys):
        code, _, _ = run_cli(capsys, "power", "--gate", "1,2,3", "--exponent", "0.5")
        assert code == 2

    def test_precision(self, capsys):
        _, out, _ = run_cli(capsys, "--precision", "3", "power", "--gate", "X", "--exponent", "0.5")
        assert out.splitlines()[0].startswith("0.707+0i")


class TestAdder:
    def test_fifty_fifty(self, capsys):
        code, out, _ = run_cli(capsys, "adder", "--generators", "x,x", "--angles", "pi/2,1.234")
        assert code == 0
        values = dict(line.split("=") for line in out.splitlines())
        assert float(values["p_one"]) == pytest.approx(0.5, abs=1e-11)
        assert float(values["closed_form"]) == pytest.approx(0.5, abs=1e-11)

    def test_degrees_and_exponent_units(self, capsys):
        _, deg, _ = run_cli(capsys, "adder", "--generators", "x", "--angles", "90", "--degrees")
        _, expo, _ = run_cli(capsys, "adder", "--generators", "x", "--angles", "0.5", "--unit", "exponent")
        assert deg == expo == "p_one=0.5\n"

    def test_shots(self, capsys):
        argv = ["--seed", "5", "adder", "--generators", "x,h", "--angles", "1,2", "--shots", "2000"]
        _, a, _ = run_cli(capsys, *argv)
        _, b, _ = run_cli(capsys, *argv)
        assert a == b
        assert "shots=2000\tseed=5\trng=numpy.PCG64" in a

    def test_length_mismatch(self, capsys):
        code, _, err = run_cli(capsys, "adder", "--generators", "x,x", "--angles", "1")
        assert code == 2 and "same length" in err

    def test_bad_generator(self, capsys):
        code, _, _ = run_cli(capsys, "adder", "--generators", "y", "--angles", "1")
        assert code == 2


class TestSurface:
    def test_rows(self, capsys):
        code, out, _ = run_cli(capsys, "surface", "--generators", "x,h", "--resolution", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "theta,phi,p_one" and len(lines) == 10

    def test_resolution_two_hits_only_multiples_of_two_pi(self, capsys):
        _, out, _ = run_cli(capsys, "surface", "--generators", "x,x", "--resolution", "2")
        assert [abs(float(l.split(",")[2])) < 1e-12 for l in out.splitlines()[1:]] == [True] * 4

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "grid.csv"
        code, out, _ = run_cli(capsys, "surface", "--generators", "h,h", "--resolution", "5", "--out", str(target))
        assert code == 0 and out == ""
        assert len(target.read_text().splitlines()) == 26

    def test_wrong_generator_count(self, capsys):
        code, _, _ = run_cli(capsys, "surface", "--generators", "x")
        assert code == 2


class TestClassifierCommands:
    @pytest.fixture
    def model_path(self, capsys, tmp_path):
        path = tmp_path / "model.json"
        code, _, _ = run_cli(capsys, "train", str(DATA / "two_phrase.tsv"), "--output", str(path))
        assert code == 0
        return path

    def test_train_output(self, model_path):
        doc = json.loads(model_path.read_text())
        assert doc["topics"] == ["sport", "music"]
        assert doc["vocabulary"] == ["football", "guitar"]
        assert doc["increment_radians"] == pytest.approx(math.pi / 24)

    def test_classify_worked_example(self, capsys, model_path):
        code, out, _ = run_cli(capsys, "classify", str(model_path), "I", "kicked", "the", "football")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("sport\t0.00427756")
        assert lines[1] == "music\t0"
        assert lines[2:] == ["topic=sport", "tie=false"]

    def test_cancellation_is_a_tie(self, capsys, model_path):
        _, out, _ = run_cli(capsys, "classify", str(model_path), "football football", "--dedupe", "off")
        assert "tie=true" in out

    def test_sampled_classify(self, capsys, model_path):
        _, out, _ = run_cli(capsys, "--seed", "3", "classify", str(model_path), "guitar", "--shots", "100")
        assert "shots=100\tseed=3\trng=numpy.PCG64" in out

    def test_evaluate(self, capsys, model_path):
        code, out, _ = run_cli(capsys, "evaluate", str(model_path), str(DATA / "two_phrase.tsv"))
        assert code == 0 and out.splitlines()[-1] == "accuracy=1"

    def test_lambeq_with_vocab_file(self, capsys, tmp_path):
        base = DATA / "lambeq_mc"
        path = tmp_path / "mc.json"
        run_cli(capsys, "train", str(base / "mc_train_data.txt"), "--format", "lambeq",
                "--vocab-file", str(base / "vocab_9.txt"), "--out", str(path))
        _, out, _ = run_cli(capsys, "evaluate", str(path), str(base / "mc_test_data.txt"), "--format", "lambeq")
        assert out.splitlines()[-1] == "accuracy=1"

    def test_missing_corpus(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "train", str(tmp_path / "absent.tsv"))
        assert code == 2 and err.startswith("qfrac: error:")

    def test_malformed_corpus(self, capsys, tmp_path):
        bad = tmp_path / "bad.tsv"
        bad.write_text("sport\tfine\nbroken\n")
        code, _, err = run_cli(capsys, "train", str(bad))
        assert code == 2 and ":2:" in err


class TestEulerDemo:
    def test_runs(self, capsys):
        code, out, _ = run_cli(capsys, "euler-demo")
        assert code == 0
        names = [line.split("\t")[0] for line in out.splitlines()]
        assert names == ["euler rx18_ry9", "euler ry9_rx18", "euler rx9_ry9", "quaternion", "target"]


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["--precision", "0", "euler-demo"])
    assert err.value.code == 2
