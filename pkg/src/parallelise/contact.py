"""The standard contact form on S^3 and its adapted frame, checked numerically.

Coordinates on R^4 are ordered ``(x1, y1, x2, y2)`` and identified with the
quaternion ``x1 + y1 i + x2 j + y2 k``.  With that identification the three
frame fields are left multiplication by ``i``, ``j`` and ``k``:

    e1(p) = i p,   e2(p) = j p,   e3(p) = k p

with no sign changes.  ``quaternion_frame`` evaluates them through the
Hamilton product, ``frame_at`` through the coordinate formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SPHERE_TOL = 1e-12
EXACT_TOL = 1e-10
FD_TOL = 1e-5
FD_STEP = 1e-6
QUATERNION_TOL = 1e-12


class OffSphereError(ValueError):
    pass


def _point(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape != (4,):
        raise ValueError(f"expected a point in R^4, got shape {p.shape}")
    return p


def _require_on_sphere(p: np.ndarray) -> None:
    err = abs(float(p @ p) - 1.0)
    if err > SPHERE_TOL:
        raise OffSphereError(f"point {p.tolist()} is off the unit sphere by {err:.3e}")


@dataclass
class Frame3At:
    base: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray
    residuals: dict[str, float] = field(default_factory=dict)

    @property
    def vectors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.e1, self.e2, self.e3


def _frame_residuals(p: np.ndarray, e1, e2, e3) -> dict[str, float]:
    es = (e1, e2, e3)
    gram = np.array([[u @ v for v in es] for u in es])
    return {
        "tangency": max(abs(float(e @ p)) for e in es),
        "orthogonality": float(np.max(np.abs(gram - np.diag(np.diag(gram))))),
        "unit_norm": float(np.max(np.abs(np.diag(gram) - 1.0))),
    }


def frame_at(p) -> Frame3At:
    p = _point(p)
    _require_on_sphere(p)
    x1, y1, x2, y2 = p
    e1 = np.array([-y1, x1, -y2, x2])
    e2 = np.array([-x2, y2, x1, -y1])
    e3 = np.array([-y2, -x2, y1, x1])
    return Frame3At(p, e1, e2, e3, _frame_residuals(p, e1, e2, e3))


def quat_mul(q, r) -> np.ndarray:
    """Hamilton product of quaternions stored as ``(real, i, j, k)``; broadcasts over leading axes."""
    q = np.asarray(q, dtype=float)
    r = np.asarray(r, dtype=float)
    a1, b1, c1, d1 = np.moveaxis(q, -1, 0)
    a2, b2, c2, d2 = np.moveaxis(r, -1, 0)
    return np.stack(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ],
        axis=-1,
    )


QI = np.array([0.0, 1.0, 0.0, 0.0])
QJ = np.array([0.0, 0.0, 1.0, 0.0])
QK = np.array([0.0, 0.0, 0.0, 1.0])


def quaternion_frame(p) -> Frame3At:
    """Frame obtained by multiplying the outward normal ``p`` by ``i, j, k`` on the left.

    On the unit sphere these products are already tangent, so projecting
    along the normal changes nothing.
    """
    p = _point(p)
    _require_on_sphere(p)
    e1, e2, e3 = (quat_mul(u, p) for u in (QI, QJ, QK))
    return Frame3At(p, e1, e2, e3, _frame_residuals(p, e1, e2, e3))


def alpha(p, v) -> float:
    """``x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2`` evaluated on ``v`` at ``p``."""
    x1, y1, x2, y2 = _point(p)
    vx1, vy1, vx2, vy2 = _point(v)
    return float(x1 * vy1 - y1 * vx1 + x2 * vy2 - y2 * vx2)


def d_alpha(p, u, v) -> float:
    """Exterior derivative ``2 (dx1 ^ dy1 + dx2 ^ dy2)``; independent of ``p``."""
    _point(p)
    ux1, uy1, ux2, uy2 = _point(u)
    vx1, vy1, vx2, vy2 = _point(v)
    return float(2.0 * (ux1 * vy1 - uy1 * vx1 + ux2 * vy2 - uy2 * vx2))


def d_alpha_finite_difference(p, u, v, step: float = FD_STEP) -> float:
    """``u(alpha(v)) - v(alpha(u))`` by central differences, treating ``u, v`` as constant fields."""
    p = _point(p)
    u = _point(u)
    v = _point(v)

    def directional(w, f):
        return (f(p + step * w) - f(p - step * w)) / (2.0 * step)

    return directional(u, lambda q: alpha(q, v)) - directional(v, lambda q: alpha(q, u))


def sample_sphere(count: int, seed: int) -> np.ndarray:
    """``count`` points uniform on S^3: normalised standard normal 4-vectors."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((count, 4))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


_BASIS = np.eye(4)

CHECK_TOLERANCES = {
    "tangency": EXACT_TOL,
    "orthonormality": EXACT_TOL,
    "alpha_e1": EXACT_TOL,
    "alpha_e2_e3": EXACT_TOL,
    "d_alpha_e2_e3": EXACT_TOL,
    "d_alpha_finite_difference": FD_TOL,
    "quaternion_agreement": QUATERNION_TOL,
}


@dataclass
class FrameCheckReport:
    sample_count: int
    seed: int
    max_residuals: dict[str, float]

    @property
    def passed(self) -> dict[str, bool]:
        return {k: self.max_residuals[k] <= tol for k, tol in CHECK_TOLERANCES.items()}

    @property
    def ok(self) -> bool:
        return all(self.passed.values())


def check_point(p) -> dict[str, float]:
    """Residual of every frame and contact-form identity at one point of S^3."""
    f = frame_at(p)
    q = quaternion_frame(p)
    e1, e2, e3 = f.vectors
    fd = 0.0
    for a in range(4):
        for b in range(a + 1, 4):
            u, v = _BASIS[a], _BASIS[b]
            fd = max(fd, abs(d_alpha_finite_difference(p, u, v) - d_alpha(p, u, v)))
    for u, v in ((e2, e3), (e1, e2), (e1, e3)):
        fd = max(fd, abs(d_alpha_finite_difference(p, u, v) - d_alpha(p, u, v)))
    return {
        "tangency": f.residuals["tangency"],
        "orthonormality": max(f.residuals["orthogonality"], f.residuals["unit_norm"]),
        "alpha_e1": abs(alpha(p, e1) - 1.0),
        "alpha_e2_e3": max(abs(alpha(p, e2)), abs(alpha(p, e3))),
        "d_alpha_e2_e3": abs(d_alpha(p, e2, e3) - 2.0),
        "d_alpha_finite_difference": fd,
        "quaternion_agreement": float(
            max(np.max(np.abs(a - b)) for a, b in zip(f.vectors, q.vectors))
        ),
    }


def verify_frame_properties(sample_count: int, seed: int = 0, points=None) -> FrameCheckReport:
    """Maximum residual of each identity over ``sample_count`` seeded points on S^3.

    ``points`` overrides the random sample (its length is then the sample count).
    """
    if points is None:
        if sample_count < 1:
            raise ValueError(f"sample_count must be at least 1, got {sample_count}")
        points = sample_sphere(sample_count, seed)
    else:
        points = np.atleast_2d(np.asarray(points, dtype=float))
        sample_count = len(points)
    worst = {k: 0.0 for k in CHECK_TOLERANCES}
    for p in points:
        for k, r in check_point(p).items():
            worst[k] = max(worst[k], r)
    return FrameCheckReport(sample_count, seed, worst)
