import io
import json

import pytest

from tduality.cli import (
    DEGENERATE_KERNEL_WARNING,
    NONCOPRIME_K_WARNING,
    ComputationResult,
    parse_result,
    run,
    serialize,
)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(text):
    return json.loads(text)


# one invocation per subcommand in the dispatch table
COVERAGE_TABLE = [
    ("tdual gamma-point", ["tdual", "gamma-point", "--n", "12", "--q", "5", "--s", "0"]),
    (
        "tdual seifert",
        ["tdual", "seifert", "--genus", "0", "--cones", "12", "--e", "5", "--chi", "4", "--f", "2", "--a", "3"],
    ),
    ("cohomology bgamma", ["cohomology", "bgamma", "--n", "12", "--degree", "2"]),
    (
        "cohomology seifert-base",
        ["cohomology", "seifert-base", "--genus", "0", "--cones", "2,3,7", "--degree", "2"],
    ),
    ("h3 gamma-point", ["h3", "gamma-point", "--n", "12", "--q", "4"]),
    ("h3 seifert", ["h3", "seifert", "--genus", "0", "--cones", "12", "--chi", "4"]),
    ("ktheory gamma-dual", ["ktheory", "gamma-dual", "--n", "12", "--q", "5"]),
    ("chern seifert", ["chern", "seifert", "--c", "0", "--cones", "2,3", "--phi", "1,1"]),
    ("thom", ["thom", "--n", "5", "--q0", "2", "--q1", "3"]),
]


@pytest.mark.parametrize("command,argv", COVERAGE_TABLE, ids=[c for c, _ in COVERAGE_TABLE])
def test_every_subcommand_is_reachable(command, argv):
    code, out, err = run_cli(*argv)
    assert code == 0, err
    doc = payload(out)
    assert doc["command"] == command
    assert set(doc) == {"command", "inputs", "result", "warnings"}


@pytest.mark.parametrize("command,argv", COVERAGE_TABLE, ids=[c for c, _ in COVERAGE_TABLE])
def test_output_round_trips(command, argv):
    code, out, _ = run_cli(*argv)
    assert code == 0
    result = parse_result(out)
    assert serialize(result) == out
    assert parse_result(serialize(result)) == result


def test_output_is_deterministic():
    argv = ["ktheory", "gamma-dual", "--n", "9", "--q", "3", "--via-mv"]
    first = run_cli(*argv)
    second = run_cli(*argv)
    assert first == second


def test_thom_golden_output():
    code, out, _ = run_cli("thom", "--n", "5", "--q0", "2", "--q1", "3")
    assert code == 0
    assert out == (
        '{\n'
        '  "command": "thom",\n'
        '  "inputs": {\n'
        '    "n": 5,\n'
        '    "q0": 2,\n'
        '    "q1": 3\n'
        '  },\n'
        '  "result": {\n'
        '    "exists": false\n'
        '  },\n'
        '  "warnings": []\n'
        '}\n'
    )


def test_tdual_gamma_point_worked_value():
    code, out, _ = run_cli("tdual", "gamma-point", "--n", "12", "--q", "5", "--s", "0")
    assert code == 0
    doc = payload(out)
    assert doc["result"] == {"n": 12, "q": 0, "s": 7}


def test_tdual_gamma_point_validation_failure():
    code, out, err = run_cli("tdual", "gamma-point", "--n", "12", "--q", "4", "--s", "1")
    assert code == 2
    assert out == ""
    assert "12 does not divide 4" in err


def test_tdual_seifert_worked_value():
    code, out, _ = run_cli(
        "tdual", "seifert", "--cones", "12", "--e", "5", "--chi", "4", "--f", "2", "--a", "3"
    )
    assert code == 0
    doc = payload(out)
    assert doc["result"] == {"genus": 0, "cones": [12], "e": -2, "chi": [9], "f": -5, "a": [8]}


def test_residues_are_normalized_and_echoed():
    code, out, _ = run_cli("tdual", "gamma-point", "--n", "12", "--q", "-5", "--s", "24")
    assert code == 0
    doc = payload(out)
    assert doc["inputs"] == {"n": 12, "q": 7, "s": 0}


def test_parse_errors_exit_3():
    for argv in (
        ["nonsense"],
        ["tdual"],
        ["tdual", "gamma-point", "--n", "x", "--q", "0", "--s", "0"],
        ["tdual", "gamma-point", "--q", "0", "--s", "0"],
        ["chern", "seifert", "--c", "0", "--cones", "2;3", "--phi", "1,1"],
        [],
    ):
        code, out, err = run_cli(*argv)
        assert code == 3, argv
        assert out == ""
        assert err


def test_validation_errors_exit_2():
    for argv in (
        ["cohomology", "bgamma", "--n", "0", "--degree", "2"],
        ["cohomology", "bgamma", "--n", "3", "--degree", "-1"],
        ["tdual", "seifert", "--cones", "12", "--e", "0", "--chi", "4,1", "--f", "0", "--a", "3"],
        ["cohomology", "seifert-base", "--cones", "0", "--degree", "2"],
        ["tdual", "gamma-point", "--n", "0", "--q", "0", "--s", "0"],
    ):
        code, out, err = run_cli(*argv)
        assert code == 2, argv
        assert out == ""
        assert "validation error" in err


def test_oracle_size_guard_exits_4():
    code, out, err = run_cli("cohomology", "bgamma", "--n", "5", "--degree", "2", "--oracle")
    assert code == 4
    assert out == ""
    assert "size guard" in err


def test_oracle_flag_cross_checks():
    code, out, _ = run_cli("cohomology", "bgamma", "--n", "3", "--degree", "2", "--oracle")
    assert code == 0
    doc = payload(out)
    assert doc["result"]["oracle_checked"] is True
    assert doc["result"]["group"] == {"free_rank": 0, "torsion": [3]}


def test_h3_gamma_point_payload():
    code, out, _ = run_cli("h3", "gamma-point", "--n", "12", "--q", "4")
    doc = payload(out)
    assert code == 0
    assert doc["result"]["group"] == {"free_rank": 0, "torsion": [4]}
    assert doc["result"]["generator"] == 3
    assert doc["result"]["chern_class_of_character"] == 4


def test_h3_seifert_payload():
    code, out, _ = run_cli("h3", "seifert", "--cones", "12,5", "--chi", "4,0")
    doc = payload(out)
    assert code == 0
    assert doc["result"]["group"] == {"free_rank": 1, "torsion": [20]}


def test_ktheory_warns_on_noncoprime_inputs():
    code, out, _ = run_cli("ktheory", "gamma-dual", "--n", "4", "--q", "2")
    doc = payload(out)
    assert code == 0
    assert doc["warnings"] == [NONCOPRIME_K_WARNING]
    assert doc["result"]["k0"] == {"free_rank": 2, "torsion": []}
    assert doc["result"]["model"] == "algebraic (uncompleted)"
    assert doc["result"]["equals_untwisted_free_quotient"] is False

    code, out, _ = run_cli("ktheory", "gamma-dual", "--n", "5", "--q", "2")
    doc = payload(out)
    assert doc["warnings"] == []
    assert doc["result"]["equals_untwisted_free_quotient"] is True


def test_ktheory_routes_agree():
    direct = payload(run_cli("ktheory", "gamma-dual", "--n", "6", "--q", "4")[1])
    via_mv = payload(run_cli("ktheory", "gamma-dual", "--n", "6", "--q", "4", "--via-mv")[1])
    assert direct["result"]["k0"] == via_mv["result"]["k0"]
    assert direct["result"]["k1"] == via_mv["result"]["k1"]
    assert direct["result"]["route"] == "dual-operator"
    assert via_mv["result"]["route"] == "mayer-vietoris"


def test_chern_warns_on_degenerate_sum():
    code, out, _ = run_cli("chern", "seifert", "--c", "-1", "--cones", "2,2", "--phi", "1,1")
    doc = payload(out)
    assert code == 0
    assert doc["result"] == {"e": 0, "chi": [1, 1]}
    assert doc["warnings"] == [DEGENERATE_KERNEL_WARNING]


def test_oracle_mismatch_fails_loudly(monkeypatch):
    from tduality.abelian import FgAbGroup

    monkeypatch.setattr(
        "tduality.cli.cohomology_bgamma_oracle", lambda group, degree: FgAbGroup.free(9)
    )
    with pytest.raises(RuntimeError, match="disagrees"):
        run_cli("cohomology", "bgamma", "--n", "3", "--degree", "2", "--oracle")


def test_computation_result_round_trip_unit():
    result = ComputationResult(
        command="thom", inputs={"n": 5}, result={"exists": True}, warnings=["w"]
    )
    assert parse_result(serialize(result)) == result
