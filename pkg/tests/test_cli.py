import json
import shutil
import subprocess

import pytest

from akzeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--matrix", "-1,3;0,1")
    assert code == 0
    info = json.loads(out)
    assert info["admissibility"]["admissible"] is False
    assert info["admissibility"]["witness_T"] == "3/2"


def test_compute_classical(capsys):
    code, out, _ = run(capsys, "compute", "classical", "--kind", "B", "--k", "-3", "--n", "3")
    assert (code, out.strip()) == (0, "230")
    code, out, _ = run(capsys, "compute", "classical", "--kind", "C", "--k", "1", "--n", "1", "--json")
    assert json.loads(out)["value"] == {"num": -1, "den": 2}


def test_compute_gl2(capsys):
    code, out, _ = run(capsys, "compute", "gl2", "--matrix", "-1,3;0,1", "--u", "-3", "--m", "2",
                       "--y", "1", "--w", "0")
    assert (code, out.strip()) == (0, "242")
    code, out, _ = run(capsys, "compute", "gl2", "--matrix", "-1,i;0,1", "--u", "-3", "--m", "2",
                       "--y", "1", "--w", "0", "--json")
    assert json.loads(out)["text"] == "-4/125-22/125*i"


def test_compute_gl2_polynomial(capsys):
    code, out, _ = run(capsys, "compute", "gl2", "--matrix", "-1,1;0,1", "--u", "-1", "--m", "1")
    assert code == 0 and "y" in out


def test_compute_positive_index_needs_y(capsys):
    code, _, err = run(capsys, "compute", "gl2", "--matrix", "-1,1;0,1", "--u", "2", "--m", "1")
    assert code == 2 and err.startswith("error:")


def test_zeta_auto_methods(capsys):
    code, out, _ = run(capsys, "zeta", "--matrix", "1,-1;1,0", "--u", "1", "--s", "2", "--y", "1", "--w", "0")
    assert code == 0 and out.startswith("2.40411380631918")
    code, out, _ = run(capsys, "zeta", "--matrix", "-1,1;0,1", "--u", "-2", "--s", "-3", "--y", "1", "--w", "0",
                       "--json")
    body = json.loads(out)
    assert body["method"] == "circle" and abs(body["re"] - 46) < 1e-9
    code, out, _ = run(capsys, "zeta", "--matrix", "-1,1;0,1", "--u", "2", "--s", "-0.5", "--y", "1", "--w", "0",
                       "--json")
    assert json.loads(out)["method"] == "hankel"


def test_zeta_domain_error(capsys):
    code, _, err = run(capsys, "zeta", "--matrix", "-1,3;0,1", "--u", "1", "--s", "2", "--y", "1", "--w", "0")
    assert code == 2 and "admissibility" in err
    code, _, err = run(capsys, "zeta", "--matrix", "-1,1;0,1", "--u", "1", "--s", "2", "--y", "1", "--w", "0",
                       "--method", "circle")
    assert code == 2


def test_verify_selection(capsys):
    code, out, _ = run(capsys, "verify", "--case", "example-values", "--exact-only")
    assert code == 0
    body = json.loads(out)
    assert body["all_passed"] and len(body["cases"]) == 3


def test_verify_csv_and_matrix(capsys):
    code, out, _ = run(capsys, "verify", "--case", "duality-n0", "--matrix", "g_xi", "--matrix", "1,-1;1,1",
                       "--max-order", "2", "--exact-only", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("case_id,") and len(lines) == 1 + 2 * 9


def test_verify_no_match(capsys):
    code, _, err = run(capsys, "verify", "--case", "no-such-case", "--exact-only")
    assert code == 1 and "no case" in err


@pytest.mark.skipif(shutil.which("akzeta") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["akzeta", "compute", "classical", "--kind", "B", "--k", "-2", "--n", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "14"
