"""Command line front end: dispatch, JSON shape, exit codes, determinism."""

import io
import json

import pytest

from hypersect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_moduli_dim_json(capsys):
    code, payload, _ = run_json(capsys, "moduli-dim", "--d", "3", "--n", "2")
    assert code == 0
    assert payload["schema_version"] == "1"
    assert payload["command"] == "moduli-dim"
    assert payload["request"] == {"d": 3, "n": 2}
    assert payload["result"] == {"m": 1}


def test_moduli_dim_human(capsys):
    code, out, err = run(capsys, "moduli-dim", "--d", "3", "--n", "2")
    assert code == 0
    assert out == "moduli_dim: 1\n"
    assert err.startswith("elapsed_ms:")


def test_smooth_exit_codes(capsys):
    code, payload, _ = run_json(capsys, "smooth", "--fixture", "fermat", "--n", "3", "--d", "3", "--char", "0")
    assert code == 0 and payload["result"] == {"smooth": True}
    code, payload, _ = run_json(capsys, "smooth", "--f", "x0^3", "--char", "0", "--nvars", "3")
    assert code == 1 and payload["result"] == {"smooth": False}


def test_smooth_inline_infers_nvars(capsys):
    code, payload, _ = run_json(capsys, "smooth", "--f", "x0^2 + x1^2 + x2^2", "--char", "7")
    assert code == 0
    assert payload["request"]["nvars"] == 3
    assert payload["request"]["char"] == 7


def test_smooth_honors_degree_cap(capsys):
    args = ("smooth", "--fixture", "fermat", "--n", "3", "--d", "3", "--char", "0")
    code, payload, _ = run_json(capsys, *args, "--t-max", "4")
    assert code == 1 and payload["result"]["smooth"] is False
    assert payload["request"]["t_max"] == 4
    code, payload, _ = run_json(capsys, *args, "--t-max", "5")
    assert code == 0 and payload["result"]["smooth"] is True


def test_criterion_displayed_cubic(capsys):
    code, payload, _ = run_json(
        capsys, "criterion", "--fixture", "cubic-threefold", "--char", "0", "--h", "x0"
    )
    assert code == 0
    result = payload["result"]
    assert result["status"] == "computed"
    assert result["kernel_dim"] == 2
    assert result["kernel_basis"] == ["x1", "x4"]
    assert result["criterion_form"] == "x1^2"
    assert result["graded_ideal_dim"] == 16
    assert result["hyperplane"] == "x0"


def test_criterion_inline_matches_fixture(capsys):
    _, fixture_payload, _ = run_json(
        capsys, "criterion", "--fixture", "cubic-threefold", "--char", "0", "--h", "x0"
    )
    _, inline_payload, _ = run_json(
        capsys,
        "criterion",
        "--f", "x0^3 + x1^3 + x0*x1^2 + x1*x2^2 + x3^3 + x2*x4^2",
        "--char", "0",
        "--h", "x0",
    )
    assert inline_payload["result"] == fixture_payload["result"]


def test_criterion_tilted_hyperplane(capsys):
    code, payload, _ = run_json(
        capsys, "criterion", "--fixture", "fermat", "--n", "3", "--d", "3",
        "--char", "0", "--h", "x0 + 2*x1",
    )
    assert code == 0
    assert payload["result"]["status"] == "computed"
    assert payload["request"]["h"] == "x0 + 2*x1"


def test_certify_displayed_cubic(capsys):
    code, payload, _ = run_json(capsys, "certify", "--fixture", "cubic-threefold", "--char", "0")
    assert code == 0
    result = payload["result"]
    assert result["verdict"] == "certified"
    assert result["witness"] == "x0 + x1 + 2*x2 + 3*x3 + 4*x4"
    assert result["trial_count"] == 10
    assert len(result["trials"]) == 10
    assert payload["request"]["seed"] == 0
    assert payload["request"]["budget"] == 64


def test_certify_inconclusive_exit_code(capsys):
    code, payload, _ = run_json(
        capsys, "certify", "--fixture", "fermat", "--n", "3", "--d", "3",
        "--char", "2", "--budget", "8",
    )
    assert code == 1
    assert payload["result"]["verdict"] == "inconclusive"
    assert payload["result"]["witness"] is None
    assert payload["result"]["trial_count"] == 8


def test_certify_rejects_singular_ambient(capsys):
    # the cyclic quartic threefold has a rational singular point, so there
    # is nothing to certify and the request errors out
    code, payload, err = run_json(
        capsys, "certify", "--fixture", "cyclic-fermat", "--n", "3", "--d", "4", "--char", "0"
    )
    assert code == 2
    assert payload["error"]["code"] == "SingularInput"
    assert "error[SingularInput]" in err


def test_certify_human_output(capsys):
    code, out, _ = run(capsys, "certify", "--fixture", "cubic-threefold", "--char", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict: certified"
    assert lines[1] == "witness: x0 + x1 + 2*x2 + 3*x3 + 4*x4"
    assert lines[2] == "trials: 10"


def test_survey_coordinate_planes(capsys):
    code, payload, _ = run_json(
        capsys, "survey", "--fixture", "cubic-threefold", "--char", "0",
        "--h", "x0", "--h", "x1", "--h", "x3",
    )
    assert code == 0
    statuses = [r["status"] for r in payload["result"]["reports"]]
    assert statuses == ["computed", "singular_section", "vacuous"]
    assert payload["request"]["h"] == ["x0", "x1", "x3"]


def test_parse_canonicalizes(capsys):
    code, payload, _ = run_json(capsys, "parse", "--f", "2/4*x0 + x1 + x0", "--char", "0")
    assert code == 0
    result = payload["result"]
    assert result["polynomial"] == "3/2*x0 + x1"
    assert result["nvars"] == 2
    assert result["degree"] == 1
    assert result["homogeneous"] is True
    assert result["term_count"] == 2


def test_parse_zero_degree_is_null(capsys):
    code, payload, _ = run_json(capsys, "parse", "--f", "x0 - x0", "--char", "0")
    assert code == 0
    assert payload["result"]["degree"] is None
    assert payload["result"]["polynomial"] == "0"


def test_fixture_command_prints_polynomial(capsys):
    code, payload, _ = run_json(capsys, "fixture", "--fixture", "cyclic-fermat", "--n", "3", "--d", "4", "--char", "0")
    assert code == 0
    assert payload["result"]["name"] == "cyclic-fermat"
    assert payload["result"]["degree"] == 4
    assert payload["result"]["polynomial"].startswith("x0^4 + x0^3*x1")


def test_fixture_normal_form(capsys):
    code, payload, _ = run_json(
        capsys, "fixture", "--fixture", "cubic-threefold-normal-form", "--char", "0",
        "--a", "1", "--a", "1", "--a", "1", "--a", "1",
        "--g", "x1*x2*x3",
    )
    assert code == 0
    assert payload["result"]["polynomial"] == (
        "x0^3 + x0*x1^2 + x0*x2^2 + x0*x3^2 + x0*x4^2 + x1*x2*x3"
    )


def test_stdin_source(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x0^3 + x1^3 + x2^3 + x3^3\n"))
    code, payload, _ = run_json(capsys, "smooth", "--f", "-", "--char", "0")
    assert code == 0
    assert payload["result"]["smooth"] is True


def test_flag_order_does_not_matter(capsys):
    a = run_json(capsys, "smooth", "--char", "0", "--fixture", "fermat", "--n", "3", "--d", "3")
    b = run_json(capsys, "smooth", "--fixture", "fermat", "--d", "3", "--n", "3", "--char", "0")
    assert a[:2] == b[:2]


def test_json_output_is_byte_deterministic(capsys):
    args = ("certify", "--fixture", "cubic-threefold", "--char", "0", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert out1.endswith("\n") and out1.count("\n") == 1
    # keys arrive sorted so the bytes are reproducible
    payload = json.loads(out1)
    assert list(payload) == sorted(payload)


def test_timing_goes_to_stderr_not_stdout(capsys):
    _, out, err = run(capsys, "moduli-dim", "--d", "4", "--n", "3", "--json")
    assert "elapsed_ms" not in out
    assert "elapsed_ms" in err


@pytest.mark.parametrize(
    "argv,code",
    [
        (("smooth", "--fixture", "fermat", "--n", "3", "--d", "3"), "UsageError"),  # no --char
        (("smooth", "--f", "x0", "--fixture", "fermat", "--char", "0"), "UsageError"),
        (("smooth", "--char", "0"), "UsageError"),  # no source
        (("smooth", "--f", "x0^2", "--char", "6"), "CompositeCharacteristic"),
        (("smooth", "--f", "x0^2 +", "--char", "0"), "ParseError"),
        (("smooth", "--f", "x0^2", "--char", "0", "--seed", "1"), "UsageError"),
        (("criterion", "--fixture", "fermat", "--n", "3", "--d", "3", "--char", "0"), "UsageError"),
        (("survey", "--fixture", "fermat", "--n", "3", "--d", "3", "--char", "0"), "UsageError"),
        (("moduli-dim", "--d", "3"), "UsageError"),
        (("moduli-dim", "--d", "3", "--n", "2", "--char", "0"), "UsageError"),
        (("fixture", "--f", "x0^2", "--char", "0"), "UsageError"),
        (("smooth", "--f", "x0 + x5", "--char", "0", "--nvars", "2"), "UsageError"),
        (("moduli-dim", "--d", "2", "--n", "3"), "DegreeTooSmall"),
    ],
)
def test_error_paths_emit_json_and_exit_two(capsys, argv, code):
    exit_code, payload, err = run_json(capsys, *argv)
    assert exit_code == 2
    assert payload["error"]["code"] == code
    assert err.startswith(f"error[{code}]")


def test_unknown_command_is_usage_error(capsys):
    exit_code, payload, _ = run_json(capsys, "frobnicate")
    assert exit_code == 2
    assert payload["error"]["code"] == "UsageError"


def test_parse_error_carries_position(capsys):
    _, payload, _ = run_json(capsys, "parse", "--f", "x0 ++ x1", "--char", "0")
    assert payload["error"]["code"] == "ParseError"
    assert payload["error"]["position"] == 4


def test_error_without_json_prints_nothing_to_stdout(capsys):
    code, out, err = run(capsys, "smooth", "--char", "6", "--f", "x0^2")
    assert code == 2
    assert out == ""
    assert "CompositeCharacteristic" in err
