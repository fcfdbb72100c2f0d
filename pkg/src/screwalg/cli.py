"""Command-line front end for line geometry, screw analysis and verification.

Inputs arrive as positional JSON files and/or inline ``--json`` strings, in
that order. Exit codes: 0 success, 1 residual beyond tolerance, 2 parse or
usage error, 3 violated precondition. The default tolerance is 1e-9,
overridable by the SCREWALG_TOL environment variable and then by ``--tol``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .dual import DEFAULT_TOL, Dual, format_dual, parse_dual
from .errors import NotEquiprojective, ScrewAlgError
from .geometry import Line, axis_decompose, common_normal, dual_angle, line_from_point_direction
from .linalg import DualMat3, DualVec3, exp_so3d, frame_translation, is_frame
from .oracle import delassus_fit, line_distance_angle
from .theorems import equilibrium_laws, petersen_morley, thales_check

EXIT_OK = 0
EXIT_RESIDUAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

_THEOREMS = ("cosines", "sines", "anglesum", "petersen-morley", "thales", "delassus")


class _InputError(Exception):
    """Malformed or missing input; maps to the parse/usage exit code."""


# -- input parsing -----------------------------------------------------------

def _load_documents(args, expected: int) -> list:
    docs = []
    try:
        for path in args.files:
            docs.append(json.loads(Path(path).read_text()))
        for text in args.json or []:
            docs.append(json.loads(text))
    except (OSError, json.JSONDecodeError) as exc:
        raise _InputError(f"cannot read input: {exc}") from exc
    if len(docs) != expected:
        raise _InputError(f"expected {expected} input document(s), got {len(docs)}")
    return docs


def _parse_dual_value(obj) -> Dual:
    if isinstance(obj, str):
        try:
            return parse_dual(obj)
        except ValueError as exc:
            raise _InputError(str(exc)) from exc
    if isinstance(obj, (int, float)):
        return Dual(float(obj))
    if isinstance(obj, dict) and set(obj) <= {"re", "du"}:
        return Dual(float(obj.get("re", 0.0)), float(obj.get("du", 0.0)))
    raise _InputError(f"cannot interpret {obj!r} as a dual number")


def _parse_screw(obj) -> DualVec3:
    """A screw motor: {"re": [..], "du": [..]} or a line as point + direction."""
    if not isinstance(obj, dict):
        raise _InputError("screw must be a JSON object")
    try:
        if "re" in obj:
            return DualVec3(obj["re"], obj.get("du"))
        if "point" in obj and "direction" in obj:
            p = np.asarray(obj["point"], dtype=float)
            e = np.asarray(obj["direction"], dtype=float)
            return DualVec3(e, np.cross(p, e))
    except (ValueError, TypeError) as exc:
        raise _InputError(f"bad screw document: {exc}") from exc
    raise _InputError("screw document needs re/du or point/direction fields")


def _parse_line(obj, tol: float) -> Line:
    if isinstance(obj, dict) and "point" in obj and "direction" in obj:
        try:
            return line_from_point_direction(obj["point"], obj["direction"], tol=tol)
        except (ValueError, TypeError) as exc:
            raise _InputError(f"bad line document: {exc}") from exc
    return Line(_parse_screw(obj), tol=tol)


def _parse_matrix(obj) -> DualMat3:
    if not isinstance(obj, dict) or "re" not in obj:
        raise _InputError("matrix document needs re (and optionally du) 3x3 arrays")
    try:
        return DualMat3(obj["re"], obj.get("du"))
    except (ValueError, TypeError) as exc:
        raise _InputError(f"bad matrix document: {exc}") from exc


def _require(doc: dict, *keys: str) -> list:
    missing = [k for k in keys if k not in doc]
    if missing:
        raise _InputError(f"input document is missing fields: {', '.join(missing)}")
    return [doc[k] for k in keys]


# -- output formatting -------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_fmt(c) for c in v) + ")"


def _json_text(obj) -> str:
    """Serialize with floats at 17 significant digits for reproducibility."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int,)):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_json_text(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_text(v) for v in obj) + "]"
    if isinstance(obj, np.ndarray):
        return _json_text(obj.tolist())
    if isinstance(obj, Dual):
        return _json_text({"re": obj.re, "du": obj.du})
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(_json_text(json_obj))
    else:
        for line in text_lines:
            print(line)


# -- subcommands -------------------------------------------------------------

def _cmd_line_angle(args, tol: float) -> int:
    docs = _load_documents(args, 2)
    l1 = _parse_line(docs[0], tol)
    l2 = _parse_line(docs[1], tol)
    e1, e2 = l1.direction, l2.direction
    rel = line_distance_angle(l1.point, e1, l2.point, e2, tol=tol)
    if float(np.linalg.norm(np.cross(e1, e2))) <= tol:
        if rel.distance > tol:
            print(
                "parallel lines: the dual angle cannot represent their distance; "
                f"oracle distance = {_fmt(rel.distance)}, angle = {_fmt(rel.angle)}",
                file=sys.stderr,
            )
            return EXIT_PRECONDITION
    theta = dual_angle(l1.screw, l2.screw, tol=tol)
    if args.check:
        angle_err = abs(theta.re - rel.angle)
        dist_err = abs(abs(theta.du) - rel.distance)
        if angle_err > tol or dist_err > tol * max(1.0, rel.distance):
            print(
                f"oracle cross-check failed: angle error {angle_err:g}, "
                f"distance error {dist_err:g}",
                file=sys.stderr,
            )
            return EXIT_RESIDUAL
    _emit(
        args,
        [
            f"Theta = {format_dual(theta)}",
            f"theta = {_fmt(theta.re)}",
            f"d = {_fmt(theta.du)}",
        ],
        {"Theta": theta, "theta": theta.re, "d": theta.du},
    )
    return EXIT_OK


def _cmd_common_normal(args, tol: float) -> int:
    docs = _load_documents(args, 2)
    z1 = _parse_screw(docs[0])
    z2 = _parse_screw(docs[1])
    line = common_normal(z1, z2, tol=tol)
    _emit(
        args,
        [
            f"point = {_fmt_vec(line.point)}",
            f"direction = {_fmt_vec(line.direction)}",
        ],
        {
            "point": line.point,
            "direction": line.direction,
            "re": line.screw.re,
            "du": line.screw.du,
        },
    )
    return EXIT_OK


def _cmd_screw_axis(args, tol: float) -> int:
    docs = _load_documents(args, 1)
    z = _parse_screw(docs[0])
    dec = axis_decompose(z, tol=tol)
    _emit(
        args,
        [
            f"axis point = {_fmt_vec(dec.axis.point)}",
            f"axis direction = {_fmt_vec(dec.axis.direction)}",
            f"magnitude = {_fmt(dec.magnitude)}",
            f"pitch = {_fmt(dec.pitch)}",
        ],
        {
            "axis": {"point": dec.axis.point, "direction": dec.axis.direction},
            "magnitude": dec.magnitude,
            "pitch": dec.pitch,
        },
    )
    return EXIT_OK


def _cmd_compose(args, tol: float) -> int:
    docs = _load_documents(args, 1)
    doc = docs[0]
    if isinstance(doc, dict) and "chain" in doc:
        doc = doc["chain"]
    if not isinstance(doc, list):
        raise _InputError("compose expects a list of joints (or {'chain': [...]})")
    frame = DualMat3.identity()
    for joint in doc:
        if not isinstance(joint, dict):
            raise _InputError("each joint must be a JSON object")
        if "matrix" in joint:
            m = _parse_matrix(joint["matrix"])
        elif "axis" in joint and "angle" in joint:
            axis = _parse_line(joint["axis"], tol)
            angle = _parse_dual_value(joint["angle"])
            m = exp_so3d(angle * axis.screw)
        else:
            raise _InputError("joint needs either matrix or axis + angle fields")
        if not is_frame(m, tol=max(tol, 1e-7)):
            raise ScrewAlgError("joint matrix fails the frame invariant")
        frame = frame @ m
    translation = frame_translation(frame, tol=max(tol, 1e-7))
    _emit(
        args,
        [
            f"frame re = {frame.re.tolist()}",
            f"frame du = {frame.du.tolist()}",
            f"rotation rows = {frame.re.tolist()}",
            f"translation = {_fmt_vec(translation)}",
        ],
        {
            "matrix": {"re": frame.re, "du": frame.du},
            "rotation": frame.re,
            "translation": translation,
        },
    )
    return EXIT_OK


def _cmd_verify(args, tol: float) -> int:
    docs = _load_documents(args, 1)
    doc = docs[0]
    if not isinstance(doc, dict):
        raise _InputError("verify expects a JSON object")
    theorem = args.theorem

    if theorem in ("cosines", "sines", "anglesum"):
        x_doc, y_doc = _require(doc, "x", "y")
        report = equilibrium_laws(_parse_screw(x_doc), _parse_screw(y_doc), tol=tol)
        family = {
            "cosines": report.cosine_residuals,
            "sines": report.sine_ratio_residuals,
            "anglesum": (report.angle_sum_residual,),
        }[theorem]
        bound = tol * max(1.0, report.scale)
        passed = all(max(abs(r.re), abs(r.du)) <= bound for r in family)
        out = report.to_dict()
        out["theorem"] = theorem
        out["passed"] = passed
        print(_json_text(out))
        return EXIT_OK if passed else EXIT_RESIDUAL

    if theorem == "petersen-morley":
        x_doc, y_doc, z_doc = _require(doc, "x", "y", "z")
        report = petersen_morley(
            _parse_screw(x_doc), _parse_screw(y_doc), _parse_screw(z_doc), tol=tol
        )
        passed = report.ok(tol)
        out = report.to_dict()
        out["theorem"] = theorem
        out["passed"] = passed
        print(_json_text(out))
        return EXIT_OK if passed else EXIT_RESIDUAL

    if theorem == "thales":
        x_doc, y_doc, z_doc, r_doc = _require(doc, "x", "y", "z", "r")
        radius = _parse_dual_value(r_doc)
        residual = thales_check(
            _parse_screw(x_doc),
            _parse_screw(y_doc),
            _parse_screw(z_doc),
            radius,
            tol=tol,
        )
        bound = tol * max(1.0, radius.re * radius.re)
        passed = max(abs(residual.re), abs(residual.du)) <= bound
        print(
            _json_text({"theorem": theorem, "residual": residual, "passed": passed})
        )
        return EXIT_OK if passed else EXIT_RESIDUAL

    if theorem == "delassus":
        fitted, residual = _fit_from_doc(doc, tol)
        print(
            _json_text(
                {
                    "theorem": theorem,
                    "resultant": fitted.resultant,
                    "value_at_origin": fitted.value_at_origin,
                    "max_residual": residual,
                    "passed": True,
                }
            )
        )
        return EXIT_OK

    raise _InputError(f"unknown theorem {theorem!r}")


def _cmd_fit(args, tol: float) -> int:
    docs = _load_documents(args, 1)
    doc = docs[0]
    fitted, residual = _fit_from_doc(doc, tol)
    _emit(
        args,
        [
            f"resultant = {_fmt_vec(fitted.resultant)}",
            f"value at origin = {_fmt_vec(fitted.value_at_origin)}",
            f"max residual = {_fmt(residual)}",
        ],
        {
            "re": fitted.resultant,
            "du": fitted.value_at_origin,
            "max_residual": residual,
        },
    )
    return EXIT_OK


def _fit_from_doc(doc, tol: float):
    if not isinstance(doc, dict) or "samples" not in doc:
        raise _InputError("fit expects {'samples': [{'point': [...], 'value': [...]}]}")
    samples = []
    for entry in doc["samples"]:
        if not isinstance(entry, dict) or "point" not in entry or "value" not in entry:
            raise _InputError("each sample needs point and value fields")
        samples.append((entry["point"], entry["value"]))
    fitted = delassus_fit(samples, tol=tol)
    residual = max(
        float(np.linalg.norm(fitted.field(np.asarray(p, dtype=float)) - np.asarray(v, dtype=float)))
        for p, v in samples
    )
    return fitted, residual


# -- driver ------------------------------------------------------------------

def _env_tol() -> float:
    raw = os.environ.get("SCREWALG_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError as exc:
        raise _InputError(f"SCREWALG_TOL is not a number: {raw!r}") from exc


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("files", nargs="*", help="input JSON files")
    parser.add_argument(
        "--json",
        action="append",
        metavar="STRING",
        help="inline JSON document (repeatable; appended after files)",
    )
    parser.add_argument("--tol", type=float, default=None, help="tolerance override")
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default text)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="screwalg",
        description="Line geometry, screw analysis and rigid-motion composition "
        "over the dual numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("line-angle", help="dual angle (angle + distance) of two lines")
    _add_common(p)
    p.add_argument("--check", action="store_true", help="cross-check against the classical oracle")
    p.set_defaults(func=_cmd_line_angle)

    p = sub.add_parser("common-normal", help="common normal line of two screw axes")
    _add_common(p)
    p.set_defaults(func=_cmd_common_normal)

    p = sub.add_parser("screw-axis", help="axis, magnitude and pitch of a screw")
    _add_common(p)
    p.set_defaults(func=_cmd_screw_axis)

    p = sub.add_parser("compose", help="compose a chain of joint transforms")
    _add_common(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("verify", help="verify a theorem on user data")
    p.add_argument("theorem", choices=_THEOREMS)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fit", help="fit a screw to sampled field values")
    _add_common(p)
    p.set_defaults(func=_cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        tol = args.tol if args.tol is not None else _env_tol()
        return args.func(args, tol)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotEquiprojective as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESIDUAL
    except ScrewAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
