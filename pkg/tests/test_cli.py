import json
import subprocess
import sys
from pathlib import Path

import pytest

from hopfeq import formats
from hopfeq.cli import run

DATA = Path(__file__).parent / "data"


def cli(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_fk_over_gf2_passes(capsys):
    code, out, _ = cli(capsys, "check", "hopf", "--matrix", DATA / "fk_matrix.json")
    assert code == 0 and out.startswith("pass")


def test_check_fk_over_q_fails_with_witness(capsys):
    code, out, _ = cli(capsys, "check", "hopf", "--matrix", DATA / "fk_matrix.json", "--field", "Q")
    assert code == 1
    assert "hopf at m2⊗m1⊗m1" in out


def test_check_inverse_and_json(capsys):
    code, out, _ = cli(capsys, "--json", "check", "inverse-eq", "--matrix", DATA / "fk_matrix.json", "--invert")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass" and data["field"] == "GF(2)"
    code2, out2, _ = cli(capsys, "check", "commute13", "--matrix", DATA / "fk_matrix.json", "--json")
    assert code2 == 0 and json.loads(out2)["status"] == "pass"


def test_verify_example_verbatim(capsys):
    code, out, _ = cli(capsys, "verify-example", "fk", "--variant", "verbatim")
    assert code == 1
    assert "(H1) c=z h=z: lhs x, rhs t" in out


def test_verify_example_with_parameters(capsys):
    code, out, _ = cli(capsys, "verify-example", "eq2", "--q", "-1")
    assert code == 0
    code, _, err = cli(capsys, "verify-example", "fk", "--q", "2")
    assert code == 3 and "does not take" in err


def test_search_gf3_scalars(capsys):
    code, out, _ = cli(capsys, "search", "solutions", "--field", "GF(3)", "--n", "1")
    assert code == 0
    assert out.splitlines()[0].startswith("2 hopf solutions")


def test_search_range_partition_is_consistent(capsys):
    counts = []
    for rng in ("0..30000", "30000..65536"):
        code, out, _ = cli(capsys, "--json", "search", "solutions", "--field", "GF(2)", "--n", "2", "--range", rng)
        counts.append(json.loads(out)["count"])
    assert sum(counts) == 147


def test_search_sigmas(capsys):
    code, out, _ = cli(
        capsys, "--json", "search", "sigmas", "--field", "GF(2)",
        "--bialgebra", DATA / "tk_bialgebra_gf2.json", "--subcoalgebra", "x",
    )
    assert code == 0 and json.loads(out)["count"] == 2


def test_verify_sigma_files(capsys):
    base = ["verify-sigma", "--bialgebra", DATA / "fk_bialgebra.json", "--sigma"]
    assert cli(capsys, *base, DATA / "fk_sigma_corrected.json", "--words", "3")[0] == 0
    code, out, _ = cli(capsys, *base, DATA / "fk_sigma_verbatim.json")
    assert code == 1 and "(H1) c=z h=z: lhs x, rhs t" in out


def test_integrals(capsys):
    code, out, _ = cli(capsys, "--json", "integrals", "--bialgebra", DATA / "tk_bialgebra.json")
    data = json.loads(out)
    assert code == 0 and data["dimension"] == 2
    assert all(b["x"] == "0" for b in data["basis"])


def test_hopf_element(capsys):
    base = ["hopf-element", "--bialgebra", DATA / "tk_bialgebra.json", "--element"]
    code, out, _ = cli(capsys, *base, DATA / "tk_x_tensor_1.json")
    assert code == 0 and "QT4 fail" in out
    code, out, _ = cli(capsys, *base, DATA / "tk_1_tensor_1.json")
    assert code == 1 and "(HE3) a=x: lhs x⊗x, rhs 1⊗x" in out


def test_build_br_emits_a_reloadable_presentation(capsys, tmp_path):
    code, out, _ = cli(capsys, "build-br", "--matrix", DATA / "fk_matrix.json", "--emit-relations")
    assert code == 0
    path = tmp_path / "br.json"
    path.write_text(out)
    again = formats.bialgebra_from_json(formats.load_json(path))
    assert formats.bialgebra_to_json(again) == json.loads(out)
    assert again.check_axioms().passed
    code, out, _ = cli(capsys, "build-br", "--matrix", DATA / "fk_matrix.json")
    assert "16 nonzero relations" in out and "χ(1,2,1,2) = c21*c12 + c11*c22 + c11" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["--degree", "1", "check", "hopf", "--matrix", "x"],
        ["check", "hopf", "--matrix", "missing.json"],
        ["check", "hopf", "--matrix", str(DATA / "bad_matrix.json")],
        ["search", "solutions", "--field", "Q", "--n", "1"],
        ["search", "solutions", "--field", "GF(2)", "--n", "1", "--range", "5..2"],
        ["search", "solutions", "--field", "GF(3)", "--n", "2"],
    ],
)
def test_usage_and_input_errors_exit_3(capsys, argv):
    assert cli(capsys, *argv)[0] == 3


def test_malformed_input_names_the_location(capsys):
    code, _, err = cli(capsys, "check", "hopf", "--matrix", DATA / "bad_matrix.json")
    assert code == 3 and "matrix" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfeq", "check", "hopf", "--matrix", str(DATA / "fk_matrix.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("pass")


@pytest.mark.parametrize(
    "argv,schema",
    [
        (["check", "hopf", "--matrix", str(DATA / "fk_matrix_q.json")], "VERDICT_SCHEMA"),
        (["verify-sigma", "--bialgebra", str(DATA / "fk_bialgebra.json"), "--sigma", str(DATA / "fk_sigma_verbatim.json")], "VERDICT_SCHEMA"),
        (["hopf-element", "--bialgebra", str(DATA / "tk_bialgebra.json"), "--element", str(DATA / "tk_1_tensor_1.json")], "VERDICT_SCHEMA"),
        (["verify-example", "tk"], "REPORT_SCHEMA"),
        (["verify-example", "fk", "--variant", "verbatim"], "REPORT_SCHEMA"),
        (["search", "solutions", "--field", "GF(3)", "--n", "1"], "SEARCH_SCHEMA"),
        (["search", "sigmas", "--field", "GF(2)", "--bialgebra", str(DATA / "tk_bialgebra_gf2.json"), "--subcoalgebra", "x"], "SEARCH_SCHEMA"),
    ],
)
def test_json_output_matches_the_published_schema(capsys, argv, schema):
    jsonschema = pytest.importorskip("jsonschema")
    _, out, _ = cli(capsys, "--json", *argv)
    jsonschema.validate(json.loads(out), getattr(formats, schema))


def test_output_is_deterministic(capsys):
    argv = ["--json", "verify-example", "fk"]
    assert cli(capsys, *argv)[1] == cli(capsys, *argv)[1]
