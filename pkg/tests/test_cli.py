import json
import subprocess
import sys

from asreg.cli import main

PLALG_D_TEXT = """\
relation: x1*x2 - x2*x1
relation: x2*x3 - x3*x2
relation: x1*x3 - x3*x1
relation: x2*x4 - x4*x2
relation: x1*x4 - x4*x1
relation: x3*x4 - x4*x3 - x1*x2
quadric: (x1, x2)
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_hilbert_from_catalog(capsys):
    code, rep, _ = run(capsys, "hilbert", "--family", "plalg_b", "--max-degree", "3")
    assert code == 0 and rep["dims"] == [1, 4, 10, 20]


def test_hilbert_from_file(tmp_path, capsys):
    f = tmp_path / "d.alg"
    f.write_text(PLALG_D_TEXT)
    code, rep, _ = run(capsys, "hilbert", "--alg", str(f), "--max-degree", "4")
    assert code == 0 and rep["dims"] == [1, 4, 10, 20, 35]


def test_stab_answer_sets_exit_code(capsys):
    code, rep, _ = run(capsys, "stab", "--family", "plalg_d", "--tau", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,2")
    assert code == 1 and rep["stabilizes"] is False
    code, rep, _ = run(capsys, "stab", "--family", "plalg_d", "--tau", "2,0,0,0;0,3,0,0;0,0,2,0;0,0,0,3")
    assert code == 0 and rep["stabilizes"] is True


def test_sigma_at_a_point(capsys):
    code, rep, _ = run(capsys, "sigma", "--family", "plalg_b", "--point", "1,1,0,0")
    assert code == 0 and rep["sigma"] == ["2", "1", "0", "0"]


def test_normal_element(capsys):
    code, rep, _ = run(capsys, "normal", "--family", "plalg_b", "--element", "x1")
    assert code == 0 and rep["normal"] and rep["phi"] == "1,0,0,0;0,1/2,0,0;0,0,1,0;0,0,0,1"


def test_bad_parameter_is_a_usage_error(capsys):
    code, _, err = run(capsys, "hilbert", "--family", "plalg_b", "--params", "alpha=1")
    assert code == 2 and "alpha" in err


def test_parse_error_reports_position(tmp_path, capsys):
    f = tmp_path / "bad.alg"
    f.write_text("relation: x1*x2\nrelation: x1**x2\n")
    code, _, err = run(capsys, "hilbert", "--alg", str(f))
    assert code == 2 and "line 2" in err


def test_json_file_output(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, rep, _ = run(capsys, "central", "--family", "poly4", "--json", str(out))
    assert code == 0
    assert json.loads(out.read_text()) == rep


def test_multiplicity_report(capsys):
    code, rep, _ = run(capsys, "multiplicity", "--family", "prop1_b_beta0")
    assert code == 0 and rep["classification"] == "Q_uplus_L"


def test_verify_selected_checks(capsys):
    code, rep, _ = run(capsys, "verify-paper", "--checks", "hilbert_poly4,sigma_direction")
    assert code == 0 and rep["counts"]["pass"] == 2


def test_flipped_convention_fails_sigma(capsys):
    code, rep, _ = run(capsys, "verify-paper", "--checks", "sigma_direction", "--flip-convention")
    assert code == 1 and rep["counts"]["fail"] == 1


def test_console_script_help():
    r = subprocess.run([sys.executable, "-m", "asreg.cli", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "verify-paper" in r.stdout


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2
    assert "required" in capsys.readouterr().err
