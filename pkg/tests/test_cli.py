import json
import pathlib

import pytest

from rgpert.cli import main


GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_examples_listing(capsys):
    code, out = run(capsys, "examples")
    assert code == 0
    names = [line.split(":")[0] for line in out.splitlines()]
    assert names == ["duffing", "mathieu", "nonauto", "rayleigh", "vdp"]


@pytest.mark.parametrize("name,argv", [
    ("vdp_expand_order3.txt",
     ["expand", "--example", "vdp", "--order", "3"]),
    ("vdp_polar_order8.txt",
     ["polar", "--example", "vdp", "--order", "8"]),
    ("vdp_limit_cycle_order7.txt",
     ["limit-cycle", "--example", "vdp", "--order", "7"]),
    ("duffing_polar_order5.txt",
     ["polar", "--example", "duffing", "--bind", "g=1", "--order", "5"]),
    ("rayleigh_polar_order6.txt",
     ["polar", "--example", "rayleigh", "--order", "6"]),
    ("nonauto_polar_order4.txt",
     ["polar", "--example", "nonauto", "--order", "4"]),
    ("nonauto_rg_order4.txt",
     ["rg", "--example", "nonauto", "--order", "4"]),
    ("mathieu_order5.txt",
     ["mathieu", "--order", "5"]),
])
def test_golden_outputs(capsys, name, argv):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_expand_json(capsys):
    code, out = run(capsys, "expand", "--example", "vdp", "--order", "2",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 2
    assert "1" in data["table"] and "-1" in data["table"]


def test_polar_json(capsys):
    code, out = run(capsys, "polar", "--example", "vdp", "--order", "3",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"d log R/dt", "d theta/dt"}


def test_inline_potential_with_params(capsys):
    code, out = run(capsys, "polar", "--potential", "-y' - g*y^3",
                    "--params", "g", "--bind", "g=1", "--order", "2")
    assert code == 0
    assert "d log R/dt" in out


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "--example", "rayleigh", "--order", "3")
    assert code == 0
    assert out.count("pass") == 4


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["expand"])            # no potential given
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_domain_error_exit_1(capsys):
    # Duffing has no limit cycle: the failure is reported, not raised
    code = main(["limit-cycle", "--example", "duffing",
                 "--bind", "g=1", "--order", "3"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_mathieu_crosscheck_csv(capsys):
    code, out = run(capsys, "mathieu", "--order", "7",
                    "--crosscheck", "eps=0.05:0.1,N=12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "eps,branch,a_series,a_determinant,deviation"
    assert len(lines) == 5
    assert all(float(line.split(",")[4]) < 1e-5 for line in lines[1:])


def test_compare_csv_contract(capsys, tmp_path):
    out_file = tmp_path / "cmp.csv"
    code, _ = run(capsys, "compare", "--example", "nonauto", "--order", "3",
                  "--eps", "0.25", "--R0", "0.2", "--theta0", "-0.1",
                  "--tmax", "6.28", "--out", str(out_file))
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0] == "t,y_numeric,y_rg,diff"
    assert len(lines) > 100


def test_simulate_stdout(capsys):
    code, out = run(capsys, "simulate", "--example", "vdp", "--eps", "0.1",
                    "--y0", "0.5", "--dy0", "0.0", "--tmax", "1.0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,y,dy"
    assert lines[1].startswith("0.0,0.5,")


def test_byte_identical_reruns(capsys):
    _, a = run(capsys, "polar", "--example", "vdp", "--order", "6")
    _, b = run(capsys, "polar", "--example", "vdp", "--order", "6")
    assert a == b
