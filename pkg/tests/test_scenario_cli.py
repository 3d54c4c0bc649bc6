import json

import pytest

from liebalance import blocks, groups
from liebalance import report as report_mod
from liebalance import scenario as sc_mod
from liebalance.blocks import ScenarioError
from liebalance.cli import main


def su23_scenario(status="maximal_positive", oracle=False):
    return {
        "schema": "liebalance-scenario/1",
        "group": {"family": "SU", "p": 2, "q": 3},
        "surface": {"genus": 1152},
        "blocks": [
            {"kind": "sesq_self", "dim": 1, "class_sig": [0, 1],
             "mult_sig": [1, 0], "label": "D"},
            {"kind": "sesq_self", "dim": 2, "class_sig": [1, 1],
             "mult_sig": [2, 0], "label": "E"},
        ],
        "decorations": [{"target": "E:il", "status": status}],
        "options": {"oracle": oracle},
    }


def test_scenario_round_trip():
    sc = sc_mod.from_json(su23_scenario())
    again = sc_mod.from_json(json.loads(json.dumps(sc_mod.to_json(sc))))
    assert sc_mod.to_json(again) == sc_mod.to_json(sc)


def test_run_scenario_rigid():
    sc = sc_mod.from_json(su23_scenario())
    res = report_mod.run_scenario(sc)
    assert res.verdict.outcome == "rigid_maximal"
    assert res.verdict.descriptor == "S(U(2,2) x U(1))"
    assert res.exit_code() == 0


def test_reports_are_deterministic():
    sc = sc_mod.from_json(su23_scenario())
    out1 = report_mod.render_json(report_mod.run_scenario(sc))
    out2 = report_mod.render_json(report_mod.run_scenario(sc))
    assert out1 == out2


def test_report_round_trips_to_same_verdict():
    sc = sc_mod.from_json(su23_scenario())
    res = report_mod.run_scenario(sc)
    echoed = report_mod.to_json(res)["scenario"]
    res2 = report_mod.run_scenario(sc_mod.from_json(echoed))
    assert report_mod.to_json(res2)["verdict"] == report_mod.to_json(res)["verdict"]


def test_schema_version_checked():
    bad = su23_scenario()
    bad["schema"] = "something/9"
    with pytest.raises(ScenarioError):
        sc_mod.from_json(bad)


def test_center_dim_crosscheck_runs():
    cases = [
        (groups.su(2, 3), [blocks.sesq_self(1, (0, 1), (1, 0), label="D"),
                           blocks.sesq_self(2, (1, 1), (2, 0), label="E")]),
        (groups.so(4, 2), [blocks.imag_pair(1, 1, (1, 0)),
                           blocks.zero_block(4, (2, 2))]),
        (groups.sl_c(6), [blocks.cls(1), blocks.cls(2), blocks.cls(3)]),
        (groups.so_c(8), [blocks.dual_pair(2, 1), blocks.quad_pair(1, 1) if False
                          else blocks.dual_pair(1, 2)]),
        (groups.sl_r(5), [blocks.conj_pair(1, 2), blocks.real_cls(1, 1)]),
    ]
    from liebalance.report import center_dim_crosscheck
    from liebalance.roots import root_system
    for spec, bl in cases:
        system = root_system(spec, bl)
        total, dim_c = center_dim_crosscheck(spec, system)
        assert total == dim_c, spec.describe()


def test_cli_check_exit_codes(tmp_path, capsys):
    path = tmp_path / "sc.json"

    path.write_text(json.dumps(su23_scenario()))
    assert main(["--format", "text", "check", str(path)]) == 0
    out = capsys.readouterr().out
    assert "rigid_maximal" in out and "S(U(2,2) x U(1))" in out

    sc = su23_scenario()
    sc["decorations"] = []
    path.write_text(json.dumps(sc))
    assert main(["check", str(path)]) == 2  # indeterminate

    sc = su23_scenario()
    sc["blocks"][0]["dim"] = 2  # dimension mismatch
    path.write_text(json.dumps(sc))
    assert main(["check", str(path)]) == 3

    path.write_text("{ not json")
    assert main(["check", str(path)]) == 3


def test_cli_check_with_oracle(tmp_path):
    path = tmp_path / "sc.json"
    path.write_text(json.dumps(su23_scenario(oracle=True)))
    assert main(["check", str(path)]) == 0


def test_cli_sweep(capsys):
    assert main(["--format", "text", "sweep", "SL_H", "6"]) == 0
    out = capsys.readouterr().out
    assert "matches the expected rigid list" in out
    assert main(["sweep", "NOPE", "4"]) == 3


def test_cli_verify_appendix(capsys):
    assert main(["--format", "text", "verify-appendix"]) == 0
    assert "all checks passed" in capsys.readouterr().out


def test_cli_oracle_small(capsys):
    assert main(["--format", "text", "oracle", "--instances", "1", "--seed", "5"]) == 0
    assert "0 disagreements" in capsys.readouterr().out


def test_block_json_errors():
    with pytest.raises(ScenarioError):
        sc_mod.block_from_json({"kind": "wat", "dim": 1})
    with pytest.raises(ScenarioError):
        sc_mod.block_from_json({"kind": "sesq_self", "dim": 1})
    with pytest.raises(ScenarioError):
        sc_mod.group_from_json({"family": "SU", "p": 1})
