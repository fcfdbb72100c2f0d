"""Golden tests for the command-line interface and its exit-code contract."""

import json
import math

import numpy as np
import pytest

from screwalg.cli import main

X_AXIS = {"point": [0, 0, 0], "direction": [1, 0, 0]}
Y_AXIS_OFFSET = {"point": [0, 0, 1], "direction": [0, 1, 0]}
Z_AXIS_OFFSET = {"point": [1, 0, 0], "direction": [0, 0, 1]}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLineAngle:
    def test_perpendicular_offset_golden(self, capsys):
        code, out, _ = run(
            capsys,
            "line-angle",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(Y_AXIS_OFFSET),
        )
        assert code == 0
        assert "Theta = 1.5707963267948966 + 1ε" in out
        assert "theta = 1.5707963267948966" in out
        assert "d = 1" in out

    def test_identical_lines(self, capsys):
        code, out, _ = run(
            capsys,
            "line-angle",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(X_AXIS),
        )
        assert code == 0
        assert "Theta = 0" in out

    def test_parallel_offset_lines_exit_3_with_oracle_distance(self, capsys):
        other = {"point": [0, 2, 0], "direction": [1, 0, 0]}
        code, _, err = run(
            capsys,
            "line-angle",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(other),
        )
        assert code == 3
        assert "oracle distance = 2" in err

    def test_check_mode_agrees_with_oracle(self, capsys):
        code, out, _ = run(
            capsys,
            "line-angle", "--check",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(Y_AXIS_OFFSET),
        )
        assert code == 0
        assert "Theta" in out

    def test_json_output_round_trips(self, capsys):
        code, out, _ = run(
            capsys,
            "line-angle", "--format", "json",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(Y_AXIS_OFFSET),
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["Theta"]["re"] == pytest.approx(math.pi / 2, abs=1e-15)
        assert doc["d"] == pytest.approx(1.0, abs=1e-15)

    def test_malformed_json_exits_2(self, capsys):
        code, _, err = run(capsys, "line-angle", "--json", "{not json", "--json", "{}")
        assert code == 2
        assert "error" in err

    def test_wrong_document_count_exits_2(self, capsys):
        code, _, _ = run(capsys, "line-angle", "--json", json.dumps(X_AXIS))
        assert code == 2

    def test_file_input(self, tmp_path, capsys):
        f1 = tmp_path / "l1.json"
        f2 = tmp_path / "l2.json"
        f1.write_text(json.dumps(X_AXIS))
        f2.write_text(json.dumps(Y_AXIS_OFFSET))
        code, out, _ = run(capsys, "line-angle", str(f1), str(f2))
        assert code == 0
        assert "Theta = 1.5707963267948966 + 1ε" in out


class TestCommonNormal:
    def test_skew_lines(self, capsys):
        code, out, _ = run(
            capsys,
            "common-normal", "--format", "json",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(Y_AXIS_OFFSET),
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["direction"] == pytest.approx([0, 0, 1])
        assert doc["point"] == pytest.approx([0, 0, 0])
        # Output doubles as a valid line input document.
        code2, out2, _ = run(
            capsys,
            "line-angle",
            "--json", json.dumps({"point": doc["point"], "direction": doc["direction"]}),
            "--json", json.dumps(X_AXIS),
        )
        assert code2 == 0

    def test_parallel_exit_3(self, capsys):
        other = {"point": [0, 1, 0], "direction": [1, 0, 0]}
        code, _, err = run(
            capsys,
            "common-normal",
            "--json", json.dumps(X_AXIS),
            "--json", json.dumps(other),
        )
        assert code == 3
        assert "parallel" in err.lower()


class TestScrewAxis:
    def test_worked_motor_golden(self, capsys):
        motor = {"re": [2, 0, 0], "du": [3, 2, 0]}
        code, out, _ = run(capsys, "screw-axis", "--json", json.dumps(motor))
        assert code == 0
        assert "axis point = (0, 0, 1)" in out
        assert "axis direction = (1, 0, 0)" in out
        assert "magnitude = 2" in out
        assert "pitch = 1.5" in out

    def test_zero_pitch_motor(self, capsys):
        motor = {"re": [0, 0, 1], "du": [0, 0, 0]}
        code, out, _ = run(capsys, "screw-axis", "--json", json.dumps(motor))
        assert code == 0
        assert "axis point = (0, 0, 0)" in out
        assert "pitch = 0" in out

    def test_pure_dual_motor_exit_3(self, capsys):
        motor = {"re": [0, 0, 0], "du": [1, 2, 3]}
        code, _, err = run(capsys, "screw-axis", "--json", json.dumps(motor))
        assert code == 3
        assert "error" in err


class TestCompose:
    def test_empty_chain(self, capsys):
        code, out, _ = run(capsys, "compose", "--json", "[]")
        assert code == 0
        assert "translation = (0, 0, 0)" in out

    def test_pure_translation_joint(self, capsys):
        chain = [{"axis": {"point": [0, 0, 0], "direction": [0, 0, 1]}, "angle": "0 + 1eps"}]
        code, out, _ = run(capsys, "compose", "--json", json.dumps(chain))
        assert code == 0
        assert "translation = (0, 0, 1)" in out

    def test_quarter_turn_joint(self, capsys):
        chain = [
            {
                "axis": {"point": [0, 0, 0], "direction": [0, 0, 1]},
                "angle": {"re": math.pi / 2, "du": 0.0},
            }
        ]
        code, out, _ = run(capsys, "compose", "--format", "json", "--json", json.dumps(chain))
        assert code == 0
        doc = json.loads(out)
        rot = np.array(doc["rotation"])
        assert rot[0] == pytest.approx([0, 1, 0], abs=1e-12)
        assert doc["translation"] == pytest.approx([0, 0, 0], abs=1e-12)

    def test_matrix_joint_round_trip(self, capsys):
        chain = [{"axis": {"point": [1, 0, 0], "direction": [0, 1, 0]}, "angle": "0.7 + 0.3eps"}]
        code, out, _ = run(capsys, "compose", "--format", "json", "--json", json.dumps(chain))
        assert code == 0
        doc = json.loads(out)
        code2, out2, _ = run(
            capsys,
            "compose", "--format", "json",
            "--json", json.dumps([{"matrix": doc["matrix"]}]),
        )
        assert code2 == 0
        assert json.loads(out2)["translation"] == pytest.approx(doc["translation"])

    def test_screw_joint_translates_along_axis(self, capsys):
        chain = [
            {
                "axis": {"point": [0, 0, 0], "direction": [0, 0, 1]},
                "angle": {"re": math.pi / 2, "du": 0.25},
            }
        ]
        code, out, _ = run(capsys, "compose", "--format", "json", "--json", json.dumps(chain))
        assert code == 0
        assert json.loads(out)["translation"] == pytest.approx([0, 0, 0.25], abs=1e-12)

    def test_invalid_joint_exits_2(self, capsys):
        code, _, _ = run(capsys, "compose", "--json", json.dumps([{"angle": 1.0}]))
        assert code == 2

    def test_non_frame_matrix_exits_3(self, capsys):
        bad = {"matrix": {"re": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}}
        code, _, _ = run(capsys, "compose", "--json", json.dumps([bad]))
        assert code == 3


class TestVerify:
    def test_petersen_morley_worked_triple_exits_0(self, capsys):
        doc = {"x": X_AXIS, "y": Y_AXIS_OFFSET, "z": Z_AXIS_OFFSET}
        code, out, _ = run(capsys, "verify", "petersen-morley", "--json", json.dumps(doc))
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert report["jacobi_residual"] == 0.0

    def test_petersen_morley_non_generic_exits_3(self, capsys):
        doc = {
            "x": X_AXIS,
            "y": {"point": [0, 0, 0], "direction": [0, 1, 0]},
            "z": {"point": [0, 1, 0], "direction": [0, 1, 0]},
        }
        code, _, err = run(capsys, "verify", "petersen-morley", "--json", json.dumps(doc))
        assert code == 3
        assert "error" in err

    def test_equilibrium_families_exit_0(self, capsys):
        doc = {"x": X_AXIS, "y": Y_AXIS_OFFSET}
        for theorem in ("cosines", "sines", "anglesum"):
            code, out, _ = run(capsys, "verify", theorem, "--json", json.dumps(doc))
            assert code == 0
            assert json.loads(out)["passed"] is True

    def test_unreachable_tolerance_exits_1(self, capsys):
        doc = {"x": X_AXIS, "y": Y_AXIS_OFFSET}
        code, out, _ = run(
            capsys, "verify", "cosines", "--tol", "1e-30", "--json", json.dumps(doc)
        )
        assert code == 1
        assert json.loads(out)["passed"] is False

    def test_degenerate_equilibrium_exits_3(self, capsys):
        doc = {"x": X_AXIS, "y": {"point": [0, 1, 0], "direction": [1, 0, 0]}}
        code, _, _ = run(capsys, "verify", "cosines", "--json", json.dumps(doc))
        assert code == 3

    def test_thales_exits_0(self, capsys):
        doc = {
            "x": X_AXIS,
            "y": {"re": [-1, 0, 0], "du": [0, 0, 0]},
            "z": Y_AXIS_OFFSET,
            "r": 1.0,
        }
        code, out, _ = run(capsys, "verify", "thales", "--json", json.dumps(doc))
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_thales_off_sphere_exits_3(self, capsys):
        doc = {
            "x": X_AXIS,
            "y": {"re": [-1, 0, 0], "du": [0, 0, 0]},
            "z": {"re": [0, 1, 0], "du": [0, 0.5, 0]},
            "r": 1.0,
        }
        code, _, _ = run(capsys, "verify", "thales", "--json", json.dumps(doc))
        assert code == 3

    def test_delassus_exits_0(self, capsys):
        samples = [
            {"point": [0, 0, 0], "value": [0, 0, 0]},
            {"point": [1, 0, 0], "value": [0, 1, 0]},
            {"point": [0, 1, 0], "value": [-1, 0, 0]},
            {"point": [0, 0, 1], "value": [0, 0, 0]},
        ]
        code, out, _ = run(
            capsys, "verify", "delassus", "--json", json.dumps({"samples": samples})
        )
        assert code == 0
        report = json.loads(out)
        assert report["resultant"] == pytest.approx([0, 0, 1], abs=1e-10)

    def test_unknown_theorem_exits_2(self, capsys):
        code, _, _ = run(capsys, "verify", "pythagoras", "--json", "{}")
        assert code == 2


class TestFit:
    def test_recovers_rotation_field(self, capsys):
        samples = [
            {"point": [0, 0, 0], "value": [0, 0, 0]},
            {"point": [1, 0, 0], "value": [0, 1, 0]},
            {"point": [0, 1, 0], "value": [-1, 0, 0]},
            {"point": [0, 0, 1], "value": [0, 0, 0]},
        ]
        code, out, _ = run(
            capsys, "fit", "--format", "json", "--json", json.dumps({"samples": samples})
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["re"] == pytest.approx([0, 0, 1], abs=1e-10)
        assert doc["du"] == pytest.approx([0, 0, 0], abs=1e-10)

    def test_non_equiprojective_field_exits_1(self, capsys):
        samples = [
            {"point": [0, 0, 0], "value": [0, 0, 0]},
            {"point": [1, 0, 0], "value": [1, 0, 0]},
            {"point": [0, 1, 0], "value": [0, 0, 0]},
            {"point": [0, 0, 1], "value": [0, 0, 0]},
        ]
        code, _, err = run(capsys, "fit", "--json", json.dumps({"samples": samples}))
        assert code == 1
        assert "error" in err

    def test_collinear_points_exit_3(self, capsys):
        samples = [
            {"point": [t, 0, 0], "value": [0, 0, 0]} for t in (0.0, 1.0, 2.0)
        ]
        code, _, _ = run(capsys, "fit", "--json", json.dumps({"samples": samples}))
        assert code == 3


class TestTolerancePlumbing:
    def test_env_var_sets_default(self, capsys, monkeypatch):
        doc = {"x": X_AXIS, "y": Y_AXIS_OFFSET}
        monkeypatch.setenv("SCREWALG_TOL", "1e-30")
        code, _, _ = run(capsys, "verify", "cosines", "--json", json.dumps(doc))
        assert code == 1

    def test_flag_overrides_env(self, capsys, monkeypatch):
        doc = {"x": X_AXIS, "y": Y_AXIS_OFFSET}
        monkeypatch.setenv("SCREWALG_TOL", "1e-30")
        code, _, _ = run(
            capsys, "verify", "cosines", "--tol", "1e-9", "--json", json.dumps(doc)
        )
        assert code == 0

    def test_invalid_env_value_exits_2(self, capsys, monkeypatch):
        monkeypatch.setenv("SCREWALG_TOL", "soon")
        code, _, _ = run(capsys, "line-angle", "--json", json.dumps(X_AXIS), "--json", json.dumps(X_AXIS))
        assert code == 2
