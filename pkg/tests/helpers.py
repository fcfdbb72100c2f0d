"""Shared random generators and closeness assertions for the test suite."""

import numpy as np

from screwalg import (
    Dual,
    DualMat3,
    DualVec3,
    Line,
    exp_so3d,
    frame_from_point,
    line_from_point_direction,
)


def assert_close(a, b, tol=1e-12, scale=1.0):
    s = max(1.0, abs(scale))
    assert abs(a - b) <= tol * s, f"{a} != {b} (tol {tol}, scale {s})"


def assert_dual_close(a: Dual, b: Dual, tol=1e-12, scale=1.0):
    s = max(1.0, abs(scale))
    assert abs(a.re - b.re) <= tol * s, f"real parts differ: {a} vs {b}"
    assert abs(a.du - b.du) <= tol * s, f"dual parts differ: {a} vs {b}"


def assert_vec_close(a, b, tol=1e-12, scale=1.0):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    s = max(1.0, abs(scale))
    assert np.abs(a - b).max() <= tol * s, f"{a} != {b} (tol {tol}, scale {s})"


def assert_dualvec_close(a: DualVec3, b: DualVec3, tol=1e-12, scale=1.0):
    assert_vec_close(a.re, b.re, tol, scale)
    assert_vec_close(a.du, b.du, tol, scale)


def rand_dual(rng, lo=-10.0, hi=10.0) -> Dual:
    return Dual(rng.uniform(lo, hi), rng.uniform(lo, hi))


def rand_vec(rng, span=2.0):
    return rng.uniform(-span, span, size=3)


def rand_unit(rng):
    while True:
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
        if n > 0.1:
            return v / n


def rand_dualvec(rng, span=2.0) -> DualVec3:
    return DualVec3(rand_vec(rng, span), rand_vec(rng, span))


def rand_proper_screw(rng, min_mag=0.5, max_mag=2.0) -> DualVec3:
    """Screw with resultant length in [min_mag, max_mag] and a generic moment."""
    a = rng.uniform(min_mag, max_mag)
    return DualVec3(a * rand_unit(rng), rand_vec(rng))


def rand_line(rng, span=2.0) -> Line:
    return line_from_point_direction(rand_vec(rng, span), rand_unit(rng))


def rand_skew_lines(rng, span=2.0, min_sin=0.1, min_dist=0.05):
    """A pair of lines with a healthy angle and separation between the axes."""
    while True:
        l1 = rand_line(rng, span)
        l2 = rand_line(rng, span)
        n = np.cross(l1.direction, l2.direction)
        if np.linalg.norm(n) < min_sin:
            continue
        dist = abs((l2.point - l1.point) @ n) / np.linalg.norm(n)
        if dist >= min_dist:
            return l1, l2


def rand_rotation_frame(rng) -> DualMat3:
    return exp_so3d(DualVec3(rng.uniform(-np.pi, np.pi) * rand_unit(rng)))


def rand_frame(rng, span=2.0) -> DualMat3:
    """Uniform-ish frame: a rotation composed with a translation."""
    return rand_rotation_frame(rng) @ frame_from_point(rand_vec(rng, span))


def rand_equilibrium_pair(rng, min_cross=0.1):
    """x, y whose triple (x, y, -x-y) has pairwise independent resultants."""
    while True:
        x = rand_proper_screw(rng)
        y = rand_proper_screw(rng)
        z = -(x + y)
        rs = [x.re, y.re, z.re]
        if all(
            np.linalg.norm(np.cross(rs[i], rs[j]))
            > min_cross * np.linalg.norm(rs[i]) * np.linalg.norm(rs[j])
            for i, j in ((0, 1), (1, 2), (2, 0))
        ):
            return x, y


def rand_generic_triple(rng, margin=0.1):
    """Triple passing the Petersen-Morley genericity checks with a margin."""
    from screwalg.linalg import cross, magnitude

    while True:
        x = rand_proper_screw(rng)
        y = rand_proper_screw(rng)
        z = rand_proper_screw(rng)
        yz, xy, zx = cross(y, z), cross(x, y), cross(z, x)
        if any(
            np.linalg.norm(c.re) < margin for c in (yz, xy, zx)
        ):
            continue
        a, b, c = cross(x, yz), cross(z, xy), cross(y, zx)
        if any(np.linalg.norm(w.re) < margin * magnitude(w) for w in (a, b, c)):
            continue
        if any(
            np.linalg.norm(np.cross(u.re, v.re))
            < margin * np.linalg.norm(u.re) * np.linalg.norm(v.re)
            for u, v in ((a, b), (b, c), (c, a))
        ):
            continue
        return x, y, z


def rand_sphere_triple(rng, radius: Dual):
    """Three screws of equal dual modulus ``radius`` with x = -y."""
    from screwalg.linalg import norm

    def on_sphere():
        z = rand_proper_screw(rng)
        return z * (radius * norm(z).inv())

    x = on_sphere()
    return x, -x, on_sphere()
