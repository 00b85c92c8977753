import json
import subprocess
import sys

import pytest

from curvecolor import fractional, kneser, surface
from curvecolor.cli import main
from curvecolor.graph import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def petersen_file(tmp_path):
    path = tmp_path / "petersen.col"
    path.write_text(kneser.build_kg(5, 2).to_dimacs())
    return path


def test_build_dimacs_round_trip(capsys):
    code, out, _ = run(capsys, "build", "kg", "5", "2")
    assert code == 0
    g = Graph.from_dimacs(out)
    assert g == kneser.build_kg(5, 2)


@pytest.mark.parametrize("argv", [
    ["build", "kg", "3", "2"],
    ["build", "kg", "5"],
    ["build", "kg", "five", "2"],
    ["build", "octahedron-n", "1"],
    ["color", "kneser", "5"],
    ["bounds", "--genus", "1"],
    ["sp", "--g", "0"],
    ["farey", "--bound", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["build", "nonsense"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["report", "--budget", "0"])


def test_missing_graph_file(capsys, tmp_path):
    code, _, err = run(capsys, "chromatic", str(tmp_path / "nope.col"))
    assert code == 2 and "cannot read" in err


def test_chromatic_json(capsys, petersen_file):
    code, out, _ = run(capsys, "chromatic", str(petersen_file), "--json")
    data = json.loads(out)
    assert code == 0 and data["chromatic_number"] == 3
    assert data["coloring"]["palette_size"] == 3 and len(data["coloring"]["colors"]) == 10


def test_chromatic_budget_exhausted(capsys, tmp_path):
    path = tmp_path / "kg.col"
    path.write_text(kneser.build_kg(7, 2).to_dimacs())
    code, _, err = run(capsys, "chromatic", str(path), "--budget", "5")
    assert code == 3 and "budget" in err


def test_clique_text(capsys, petersen_file):
    code, out, _ = run(capsys, "clique", str(petersen_file))
    assert code == 0 and out.splitlines()[0] == "2"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "g.col"
    code, out, _ = run(capsys, "build", "cg", "6", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert Graph.from_dimacs(target.read_text()) == kneser.build_cg(6, 2)


def test_fractional_verify_valid_and_invalid(capsys, petersen_file, tmp_path):
    cert = tmp_path / "cert.json"
    cert.write_text(fractional.kg_fractional_coloring(5, 2).to_json())
    code, out, _ = run(capsys, "fractional-verify", str(petersen_file), str(cert), "--json")
    assert code == 0 and json.loads(out) == {"kind": "coloring", "valid": True, "value": "5/2"}

    cert.write_text(json.dumps({"weights": {"{1,2}": "1", "{1,3}": "1"}}))
    code, out, _ = run(capsys, "fractional-verify", str(petersen_file), str(cert), "--json")
    data = json.loads(out)
    assert code == 1 and data["valid"] is False and data["error"] == "clique-violation"


def test_fractional_verify_bad_certificate(capsys, petersen_file, tmp_path):
    cert = tmp_path / "cert.json"
    cert.write_text("{}")
    assert run(capsys, "fractional-verify", str(petersen_file), str(cert))[0] == 2
    cert.write_text("not json")
    assert run(capsys, "fractional-verify", str(petersen_file), str(cert))[0] == 2


@pytest.mark.parametrize("argv", [["kneser", "7", "3"], ["total", "6"],
                                  ["farey-mod2", "5"], ["farey-mod3", "5"]])
def test_color_schemes_proper(capsys, argv):
    code, out, _ = run(capsys, "color", *argv)
    data = json.loads(out)
    assert code == 0 and data["proper"] is True and data["scheme"] == argv[0]


def test_domain_json(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(surface.cobounding_diagram(5, 3).to_json())
    code, out, _ = run(capsys, "domain", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and data["genus"] == 5 and data["f"] == 3
    assert {"m", "f_prime", "f", "domain"} <= set(data) and data["f_prime"] == 6


def test_domain_text(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(surface.cobounding_diagram(3, 1).to_json())
    code, out, _ = run(capsys, "domain", str(path))
    assert code == 0 and "f = 1 (mod 2)" in out


def test_domain_nonhomologous_exit_1(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(surface.nonhomologous_diagram(3).to_json())
    code, out, _ = run(capsys, "domain", str(path))
    assert code == 1 and json.loads(out)["error"] == "not-homologous"


def test_domain_invalid_json_exit_1(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text("{")
    code, out, _ = run(capsys, "domain", str(path))
    assert code == 1 and "error" in json.loads(out)


def test_farey_coloring_comments(capsys):
    code, out, _ = run(capsys, "farey", "--bound", "2", "--extended", "--color", "mod3")
    assert code == 0
    colors = [line for line in out.splitlines() if line.startswith("c color ")]
    assert len(colors) == Graph.from_dimacs(out).n
    assert "proper=True" in out


def test_farey_json(capsys):
    code, out, _ = run(capsys, "farey", "--bound", "3", "--color", "mod2", "--json")
    data = json.loads(out)
    assert code == 0 and data["proper"] is True and data["dimacs"].startswith("c ")


def test_octahedron(capsys):
    code, out, _ = run(capsys, "octahedron", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["N"] == {"vertices": 12, "edges": 30, "chromatic_number": 4}
    assert data["C"] == {"vertices": 16, "edges": 54, "chromatic_number": 5}


def test_sp(capsys):
    code, out, _ = run(capsys, "sp", "--g", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["srg"] == [15, 6, 1, 3] and data["isomorphic_to_kg_6_2"]


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--genus", "2", "--json")
    assert code == 0 and json.loads(out) == {
        "genus": 2, "lower_g_ln_g": "1.386294", "homologous_upper": 15,
        "upper_g_4_pow_g": 32, "exact": 5}


def test_report_subset_and_schema(capsys):
    code, out, _ = run(capsys, "report", "--only", "petersen-core", "--only", "four-holed", "--json")
    data = json.loads(out)
    assert code == 0 and data["exit_code"] == 0
    assert [c["criterion"] for c in data["criteria"]] == ["petersen-core", "four-holed"]
    for crit in data["criteria"]:
        for e in crit["entries"]:
            assert {"claim", "status", "computed", "expected", "source", "metadata"} <= set(e)
            assert e["source"] in {"stated", "derived", "trivial"}


def test_report_budget_exhaustion_exit_3(capsys):
    code, out, _ = run(capsys, "report", "--only", "kneser-values", "--budget", "10")
    assert code == 3 and "skipped-budget" in out.lower()


def test_output_deterministic(capsys):
    first = run(capsys, "build", "cg-total", "6")[1]
    assert run(capsys, "build", "cg-total", "6")[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "curvecolor", "bounds", "--genus", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "homologous_upper: 126" in proc.stdout
