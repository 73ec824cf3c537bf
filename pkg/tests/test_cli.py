import json
import subprocess
import sys

import pytest

from e2qes.cli import main, parse_grid
from e2qes.errors import ConfigError
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_E3s(capsys):
    code, out, _ = run(capsys, "spectrum", "--N", "3", "--sector", "s", "--zeta", "1")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "e2spec/1"
    assert doc["result"]["energies"][0]["re"] == 5.0
    assert doc["result"]["zeta"] == {"method": "exact", "value": 1.0, "rational": "1"}


def test_decimal_input_is_exact(capsys):
    _, out, _ = run(capsys, "spectrum", "--N", "5", "--sector", "s", "--zeta", "0.3")
    assert json.loads(out)["result"]["zeta"]["rational"] == "3/10"


def test_even_N_guard_and_override(capsys):
    assert run(capsys, "spectrum", "--N", "4", "--sector", "s", "--zeta", "1")[0] == 2
    code, out, _ = run(capsys, "spectrum", "--N", "4", "--sector", "s", "--zeta", "1", "--allow-even-N")
    assert code == 0 and len(json.loads(out)["result"]["energies"]) == 1


@pytest.mark.parametrize("argv", [
    ["spectrum", "--N", "3", "--zeta", "x"],
    ["spectrum", "--N", "3", "--zeta", "0"],
    ["spectrum", "--N", "3", "--zeta-range", "1:0:1"],
    ["exceptional", "mathieu", "--trunc", "12", "--kind", "xi"],
    ["exceptional", "mathieu", "--trunc", "12", "--kind", "xi", "--stabilize-against", "14"],
    ["verify", "--suite", "nope"],
    ["orthopoly", "--N", "7", "--sector", "s", "--zeta", "1/2", "--format", "csv"],
    ["bogus"],
])
def test_config_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_sweep_csv_layout(capsys):
    code, out, _ = run(capsys, "spectrum", "--N", "9", "--sector", "s", "--zeta-range", "0:0.03:0.01",
                       "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "zeta,re_E1,im_E1,re_E2,im_E2,re_E3,im_E3,re_E4,im_E4"
    assert len(lines) == 5
    assert lines[2].startswith("0.01,") and lines[4].startswith("0.029999999999999999,")


def test_exceptional_qes_N5(capsys):
    code, out, _ = run(capsys, "exceptional", "qes", "--N", "5")
    pts = json.loads(out)["result"]["points"]
    assert code == 0
    assert [round(p["zeta0_N"]["value"], 5) for p in pts] == [1.47963, 7.5]
    assert [p["sector"] for p in pts] == ["c", "s"]


def test_exceptional_mathieu_exact(capsys):
    code, out, _ = run(capsys, "exceptional", "mathieu", "--trunc", "2", "--kind", "xi",
                       "--method", "exact", "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("6,2,xi,exact")


def test_exceptional_mathieu_stabilized(capsys):
    code, out, _ = run(capsys, "exceptional", "mathieu", "--trunc", "27", "--kind", "theta",
                       "--stabilize-against", "26")
    pts = json.loads(out)["result"]["points"]
    bold = [round(p["g0"]["value"], 3) for p in pts if p["stabilized"]]
    assert code == 0
    assert bold == [1.469, 16.471, 47.806, 95.475, 159.479, 239.818, 336.491]


def test_orthopoly_moments(capsys):
    code, out, _ = run(capsys, "orthopoly", "--N", "7", "--sector", "s", "--zeta", "1/2", "--moments", "4")
    res = json.loads(out)["result"]
    assert code == 0
    # mu_n(u) at u = 1/4 from 1, 4 + u, 16 - 32u + u^2, ...
    assert [m["rational"] for m in res["moments"]] == ["1", "17/4", "129/16", "-10927/64", "-1043839/256"]
    assert res["functional_identity_residual"]["value"] < 1e-8


def test_orthopoly_trivial(capsys):
    code, out, _ = run(capsys, "orthopoly", "--N", "1", "--sector", "c", "--zeta", "1")
    m = json.loads(out)["result"]["measure"]
    assert code == 0
    assert m["roots"] == [{"method": "float", "re": 1.0, "im": 0.0}]
    assert m["weights"] == [{"method": "float", "re": 1.0, "im": 0.0}]


def test_orthopoly_refuses_at_exceptional_point(capsys):
    _, out, _ = run(capsys, "exceptional", "qes", "--N", "7", "--sector", "s")
    z0 = json.loads(out)["result"]["points"][0]["zeta0"]["interval"][1]
    code, _, err = run(capsys, "orthopoly", "--N", "7", "--sector", "s", "--zeta", z0)
    assert code == 4 and "nearly coincident roots" in err


def test_recurrence_dump(capsys):
    code, out, _ = run(capsys, "recurrence", "--N", "3", "--sector", "s")
    polys = json.loads(out)["result"]["polynomials"]
    assert code == 0 and polys[1]["polynomial"] == "E - t - 4"


def test_floquet_free(capsys):
    code, out, _ = run(capsys, "floquet", "--g", "0", "--window=-0.5:16.5", "--format", "csv")
    es = [float(l.split(",")[1]) for l in out.splitlines()[1:]]
    assert code == 0 and [round(e, 5) for e in es] == [0, 4, 4, 16, 16]


def test_verify_quick_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra")
    assert code == 0 and "4/4 criteria passed" in out


def test_verify_failure_exit_1(capsys):
    # the tables suite contains the one unreproducible Table 1 entry
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 1 and "[FAIL] criterion  3" in out


def test_output_bytes_stable_across_threads(tmp_path):
    outs = []
    for threads in ("1", "4"):
        path = tmp_path / f"out{threads}.json"
        subprocess.run([sys.executable, "-m", "e2qes.cli", "exceptional", "mathieu", "--trunc", "14",
                        "--kind", "xi", "--method", "numeric", "--out", str(path)],
                       check=True, env={"E2SPEC_THREADS": threads, "PATH": ""})
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_parse_grid():
    assert parse_grid("0:1/2:1/4") == [0, Fraction(1, 4), Fraction(1, 2)]
    assert parse_grid("0:0.3:0.1")[-1] == Fraction(3, 10)
    with pytest.raises(ConfigError):
        parse_grid("0:1")
