import json
import subprocess
import sys
from fractions import Fraction

import pytest

from legrep import cli
from legrep.field import gl_order
from legrep.laurent import QValue
from legrep.verify import VerificationRow


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rulings_of_unknot(capsys):
    code, out, _ = run(capsys, "rulings", "catalog:unknot", "-m", "0")
    assert code == 0
    assert "R⁰(z) = z^-1" in out.splitlines()


def test_rulings_of_figure_eight_ungraded(capsys):
    code, out, _ = run(capsys, "rulings", "catalog:figure8", "-m", "1")
    assert code == 0 and out.splitlines()[-1] == "R¹(z) = z + z^-1"


def test_verify_unknot(capsys):
    code, out, _ = run(capsys, "verify", "catalog:unknot", "-n", "2", "-q", "2,3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["ok"]
    for row in data["rows"]:
        expected = str(QValue(row["q"], Fraction(1, gl_order(2, row["q"]))))
        assert row["categorical"] == row["closed_form"] == row["ruling_side"] == expected


def test_verify_trefoil(capsys):
    code, out, _ = run(capsys, "verify", "catalog:trefoil", "-n", "1", "-q", "2", "--json")
    (row,) = json.loads(out)["rows"]
    assert code == 0
    assert row["representations"] == 5 and row["categorical"] == "5"


def test_verify_reports_mismatch(capsys, monkeypatch):
    def broken(d, n, q):
        return VerificationRow(n, q, 0, QValue(q, 1), QValue(q, 1), QValue(q, 2))

    monkeypatch.setattr(cli, "verify_identity", broken)
    code, out, _ = run(capsys, "verify", "catalog:unknot", "-q", "2")
    assert code == 1 and "MISMATCH" in out


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "catalog:trefoil", "--json")
    data = json.loads(out)
    assert code == 0 and (data["tb"], data["r"]) == (1, 0)


def test_dga_reports_check(capsys):
    code, out, _ = run(capsys, "dga", "catalog:figure8", "--json")
    data = json.loads(out)
    assert code == 0 and data["chi_star"] == 1


def test_reps_and_homcard(capsys):
    code, out, _ = run(capsys, "reps", "catalog:trefoil", "-q", "2,3,4,5", "--json")
    assert code == 0 and [r["count"] for r in json.loads(out)["rows"]] == [5, 10, 17, 26]
    code, out, _ = run(capsys, "homcard", "catalog:figure8", "-q", "2", "--json")
    (row,) = json.loads(out)["rows"]
    assert code == 0 and row["match"] and row["classes"][0]["aut"] == 2


def test_colored_ruling(capsys):
    code, out, _ = run(capsys, "colored-ruling", "catalog:trefoil", "-n", "2", "-q", "2", "--json")
    assert code == 0 and json.loads(out)["ruling_side"]["2"] == "154/3"


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and out.split() == ["figure8", "trefoil", "unknot", "unknot_s2"]
    code, out, _ = run(capsys, "catalog", "unknot")
    assert out == "L 1\n* 1\nR 1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "catalog:nope"],
        ["reps", "catalog:trefoil", "-q", "6"],
        ["reps", "catalog:trefoil", "-q", "two"],
        ["verify", "catalog:trefoil", "-n", "0"],
        ["invariants", "/nonexistent/front.txt"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_fronts_exit_2(capsys, tmp_path):
    nested = tmp_path / "nested.front"
    nested.write_text("L 1\nL 2\n* 1\nX 1\nR 2\nR 1\n")
    code, _, err = run(capsys, "dga", str(nested))
    assert code == 2 and "plat" in err
    stabilized = tmp_path / "stab.front"
    stabilized.write_text("L 1\nL 1\nX 1\nX 2\n* 1\nR 1\nR 1\n")  # r = -1
    assert run(capsys, "invariants", str(stabilized))[0] == 0
    code, _, err = run(capsys, "rulings", str(stabilized))
    assert code == 2 and "rotation" in err
    garbage = tmp_path / "garbage.front"
    garbage.write_text("Q 7\n")
    assert run(capsys, "invariants", str(garbage))[0] == 2


def test_json_is_deterministic_across_jobs(capsys):
    argv = ["verify", "catalog:trefoil", "-n", "1", "-q", "2,3,4", "--json"]
    _, one, _ = run(capsys, *argv, "--jobs", "1")
    _, again, _ = run(capsys, *argv, "--jobs", "1")
    _, two, _ = run(capsys, *argv, "--jobs", "2")
    assert one == again == two
    _, h1, _ = run(capsys, "homcard", "catalog:figure8", "-q", "2,3", "--json", "--jobs", "1")
    _, h2, _ = run(capsys, "homcard", "catalog:figure8", "-q", "2,3", "--json", "--jobs", "2")
    assert h1 == h2


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "legrep.cli", "rulings", "catalog:trefoil"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert out.splitlines()[-1] == "R⁰(z) = z + 2*z^-1"
