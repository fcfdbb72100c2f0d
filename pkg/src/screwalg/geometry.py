"""Euclidean interpretation of dual vectors: fields, lines, axes, angles.

Points are plain real 3-vectors holding coordinates relative to the
canonical frame. A dual vector induces an equiprojective field over those
points; its value at P is ``du + re x P``, the transport of the
origin-reduced motor. Everything here is derived from that one formula.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dual import DEFAULT_TOL, Dual, acos_principal
from .errors import NotALine, NotUnit, NullVector, ParallelResultants
from .linalg import (
    DualMat3,
    DualVec3,
    _cross3,
    axial_matrix,
    cross,
    dot,
    frame_translation,
    norm,
)


def _point(p) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a point as a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("point coordinates must be finite")
    return a


class Line:
    """Oriented line: a unit zero-pitch screw (a sliding unit vector).

    Construction canonicalizes the motor: the resultant is renormalized to
    unit length and the residual pitch component of the moment (which must be
    below ``tol``) is projected away, so equal lines compare stably.
    """

    __slots__ = ("screw",)

    def __init__(self, screw: DualVec3, tol: float = DEFAULT_TOL):
        e = screw.re
        length = float(np.linalg.norm(e))
        if abs(length - 1.0) > tol:
            raise NotALine(f"resultant length {length} is not 1 within {tol}")
        e = e / length
        m = screw.du / length
        pitch_component = float(m @ e)
        if abs(pitch_component) > tol:
            raise NotALine(f"pitch {pitch_component} exceeds tolerance {tol}")
        object.__setattr__(self, "screw", DualVec3(e, m - pitch_component * e))

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @property
    def direction(self) -> np.ndarray:
        return self.screw.re

    @property
    def moment(self) -> np.ndarray:
        return self.screw.du

    @property
    def point(self) -> np.ndarray:
        """The point of the line closest to the canonical origin."""
        return _cross3(self.direction, self.moment)

    def __repr__(self) -> str:
        return f"Line(point={self.point.tolist()}, direction={self.direction.tolist()})"


def line_from_point_direction(point, direction, tol: float = DEFAULT_TOL) -> Line:
    """The oriented line through ``point`` with unit direction ``direction``."""
    p = _point(point)
    e = np.asarray(direction, dtype=float)
    if abs(float(np.linalg.norm(e)) - 1.0) > tol:
        raise NotUnit(f"direction {e.tolist()} is not unit length within {tol}")
    return Line(DualVec3(e, _cross3(p, e)), tol=tol)


def field_at(z: DualVec3, point) -> np.ndarray:
    """Value at ``point`` of the screw field induced by z."""
    p = _point(point)
    return z.du + _cross3(z.re, p)


def comoment(z1: DualVec3, z2: DualVec3) -> float:
    """Reduction-point-independent screw pairing; the dual part of dot."""
    return dot(z1, z2).du


def commutator(z1: DualVec3, z2: DualVec3) -> DualVec3:
    """Negative Lie bracket of the fields; as motors it is just the cross product."""
    return cross(z1, z2)


@dataclass(frozen=True)
class AxisDecomposition:
    """Polar form of a proper screw: magnitude * exp(eps * pitch) * axis."""

    magnitude: float
    pitch: float
    axis: Line

    def reconstruct(self) -> DualVec3:
        return Dual(self.magnitude, self.magnitude * self.pitch) * self.axis.screw


def axis_decompose(z: DualVec3, tol: float = DEFAULT_TOL) -> AxisDecomposition:
    """Split a proper screw into magnitude, pitch and axis line.

    Magnitude and pitch come from the dual modulus |z| = a + b*eps, p = b/a.
    The axis point is chosen as s x field(origin) / |s|**2, the unique axis
    point closest to the canonical origin; any other axis point would serve,
    the choice is a convention. On the axis the field is parallel to the
    resultant, which is the characterization tests verify.
    """
    n = norm(z)
    a = n.re
    pitch = n.du / a
    s = z.re
    point = _cross3(s, z.du) / float(s @ s)
    axis = line_from_point_direction(point, s / float(np.linalg.norm(s)), tol=tol)
    return AxisDecomposition(magnitude=a, pitch=pitch, axis=axis)


def dual_angle(x: DualVec3, y: DualVec3, tol: float = DEFAULT_TOL) -> Dual:
    """Angle between resultants plus eps times the signed distance between axes.

    Defined by cos(Theta) = x o y / (|x| |y|) on the principal range. When
    the resultants are proportional the dual part of the cosine vanishes
    identically, so the result is exactly 0 or pi and the axis distance is
    not representable; parallel-line distance lives in the classical oracle.
    """
    c = dot(x, y) / (norm(x) * norm(y))
    return acos_principal(c, tol=tol)


def common_normal(x: DualVec3, y: DualVec3, tol: float = DEFAULT_TOL) -> Line:
    """The oriented line meeting both screw axes at right angles.

    It is the axis of x cross y, oriented along the cross product of the
    resultants; both full dual products dot(u, x) and dot(u, y) vanish on it.
    """
    s1, s2 = x.re, y.re
    scale = float(np.linalg.norm(s1) * np.linalg.norm(s2))
    if scale == 0.0:
        raise NullVector("common normal requires proper screws")
    if float(np.linalg.norm(_cross3(s1, s2))) <= tol * scale:
        raise ParallelResultants("resultants are parallel; no unique common normal")
    # The axis of the cross product, built from point + direction, is the
    # same line as normalized(cross(x, y)) but has exactly zero pitch.
    return axis_decompose(cross(x, y), tol=tol).axis


def axes_intersect(x: DualVec3, y: DualVec3, tol: float = DEFAULT_TOL) -> bool:
    """Whether the axes of two unit screws meet; true iff the comoment vanishes."""
    for z in (x, y):
        if abs(dot(z, z).re - 1.0) > tol:
            raise NotUnit("axes_intersect expects unit screws")
    return abs(comoment(x, y)) <= tol


def motor_reduce(z: DualVec3, point) -> tuple[np.ndarray, np.ndarray]:
    """Represent z by (resultant, field value at ``point``)."""
    return z.re.copy(), field_at(z, point)


def motor_unreduce(point, resultant, value) -> DualVec3:
    """Rebuild the dual vector from a motor reduced at ``point``."""
    p = _point(point)
    s = np.asarray(resultant, dtype=float)
    v = np.asarray(value, dtype=float)
    return DualVec3(s, v - _cross3(s, p))


def point_from_frame(u: DualMat3, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The point a frame is anchored at; see frame_translation for coordinates."""
    return frame_translation(u, tol=tol)


def frame_from_point(point) -> DualMat3:
    """The translation-only frame at ``point``: rows are its three axis lines."""
    p = _point(point)
    return DualMat3(np.eye(3), axial_matrix(p))
