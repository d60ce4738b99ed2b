"""CLI golden examples, exit codes, schema validation, and byte stability."""

import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator

from sheafchase.chase import Certificate, verify_certificate
from sheafchase.cli import main
from sheafchase.scenarios import run_scenario


@pytest.fixture(scope="module")
def validator():
    schema = json.loads(
        resources.files("sheafchase").joinpath("schemas/output.schema.json").read_text()
    )
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cohomology_o1_sections(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--space", "gr:1,3", "--bundle", "O(1)", "--window", "0:0"
    )
    assert code == 0
    assert "| 0 | 0 | Dim:6 |" in out


def test_cohomology_q3_cotangent(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--space", "q:3", "--bundle", "Omega^1(0)", "--window", "0:0"
    )
    assert code == 0
    assert "| 1 | 0 | Dim:1 |" in out
    assert "1 nonzero entr(ies)" in out


def test_cohomology_tangent_sections(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--space", "gr:1,3", "--bundle", "T", "--window", "0:0"
    )
    assert code == 0
    assert "| 0 | 0 | Dim:15 |" in out


def test_cohomology_sum_and_tensor(capsys):
    code, out, _ = run_cli(
        capsys,
        "cohomology",
        "--space",
        "gr:1,3",
        "--bundle",
        "Q x Sdual + O(-4)",
        "--window",
        "0:0",
        "--format",
        "csv",
    )
    assert code == 0
    assert "0,0,Dim:15" in out  # the tangent bundle summand
    assert "4,0,Dim:1" in out  # the canonical summand


def test_decompose_wedge_square(capsys):
    code, out, _ = run_cli(capsys, "decompose", "wedge^1 x wedge^1", "--rank", "2")
    assert code == 0
    assert "(1,1):1" in out and "(2):1" in out


def test_decompose_pieri(capsys):
    code, out, _ = run_cli(capsys, "decompose", "S_(2,1) x S_(1)", "--rank", "3")
    assert code == 0
    assert "(2,1,1):1" in out and "(2,2):1" in out and "(3,1):1" in out


def test_decompose_empty_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "decompose", "", "--rank", "2")
    assert code == 2
    assert "empty" in err


def test_parse_error_reports_position(capsys):
    code, _, err = run_cli(
        capsys, "cohomology", "--space", "gr:1,3", "--bundle", "O(1) x x O(2)"
    )
    assert code == 2
    assert "position" in err


def test_space_bundle_mismatch(capsys):
    code, _, err = run_cli(capsys, "cohomology", "--space", "q:4", "--bundle", "Qdual")
    assert code == 3


def test_spinor_rejected_on_grassmannian(capsys):
    code, _, _ = run_cli(
        capsys, "cohomology", "--space", "gr:1,3", "--bundle", "Spinor(0)"
    )
    assert code == 3


def test_quadric_tensor_rejected(capsys):
    code, _, _ = run_cli(
        capsys, "cohomology", "--space", "q:4", "--bundle", "T x Spinor(0)"
    )
    assert code == 3


def test_verify_unknown_scenario(capsys):
    code, _, _ = run_cli(capsys, "verify", "nope")
    assert code == 4


def test_verify_tfsplit_fail(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "quadric-tfsplit-bound", "--n", "4", "--degrees", "1,0,0"
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "quadric-dim2")
    assert code == 0
    assert "PASS" in out
    assert "assumptions:" in out


def test_verify_inconsistent_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "quadric-conormal")
    assert code == 5
    assert "inconsistent" in out


def test_json_outputs_validate_and_are_stable(capsys, validator):
    cases = [
        ("cohomology", "--space", "gr:1,3", "--bundle", "Omega^1(0)", "--format", "json"),
        ("decompose", "wedge^2 x wedge^1", "--rank", "3", "--format", "json"),
        ("verify", "quadric-lemma-aux", "--format", "json"),
        ("scenarios", "--format", "json"),
    ]
    for argv in cases:
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2  # byte-stable
        obj = json.loads(out1)
        assert not list(validator.iter_errors(obj))


def test_cert_text_reverifies(capsys):
    code, out, _ = run_cli(capsys, "verify", "quadric-dim2", "--format", "cert-text")
    assert code == 0
    cert = Certificate.parse(out)
    rep = run_scenario("quadric-dim2")
    assert cert.render() == rep.certificate.render()
    assert verify_certificate(cert, rep.nodes_meta, rep.sequences)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run_cli(
        capsys,
        "cohomology",
        "--space",
        "gr:1,3",
        "--bundle",
        "O(1)",
        "--format",
        "json",
        "--out",
        str(target),
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["command"] == "cohomology"


def test_window_flag_with_negative_bound(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--space", "gr:1,3", "--bundle", "O(0)", "--window=-4:-4"
    )
    assert code == 0
    assert "| 4 | -4 | Dim:1 |" in out  # the canonical twist
