"""Rigid-body kinematics of the drill boom.

Pure functions: per-link homogeneous transforms from DH parameters, the
forward-kinematics chain to the drill end, preview-point geometry on the
drill axis, and a central-difference Jacobian for the numerical IK layer.
All lengths in meters, all angles in radians.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, JointLimitError

_BOTTOM_ROW = np.array([0.0, 0.0, 0.0, 1.0])


@dataclass(frozen=True)
class DhParameters:
    """One DH row: joint angle theta, twist alpha, link length a, offset d."""

    theta: float
    alpha: float
    a: float
    d: float

    def as_tuple(self):
        return (self.theta, self.alpha, self.a, self.d)


@dataclass(frozen=True)
class HomogeneousTransform:
    """A 4x4 rigid-body transform (rotation block + translation column)."""

    m: np.ndarray

    @classmethod
    def from_matrix(cls, m, check=True):
        m = np.asarray(m, dtype=float)
        if check:
            _check_transform(m)
        return cls(m)

    @property
    def rotation(self):
        return self.m[:3, :3]

    @property
    def translation(self):
        return self.m[:3, 3]

    def inverse(self):
        r = self.rotation.T
        out = np.eye(4)
        out[:3, :3] = r
        out[:3, 3] = -r @ self.translation
        return HomogeneousTransform(out)


@dataclass(frozen=True)
class DrillEndPose:
    """Drill-end position and unit drilling axis, both in the base frame."""

    position: np.ndarray
    direction: np.ndarray


def _check_transform(m):
    if m.shape != (4, 4):
        raise InvalidParameterError(f"transform must be 4x4, got {m.shape}")
    if not np.array_equal(m[3], _BOTTOM_ROW):
        raise InvalidParameterError(f"bottom row must be [0, 0, 0, 1], got {m[3]}")
    r = m[:3, :3]
    ortho = np.linalg.norm(r.T @ r - np.eye(3))
    det = np.linalg.det(r)
    if ortho >= 1e-9 or abs(det - 1.0) >= 1e-9:
        raise InvalidParameterError(
            f"rotation block not orthonormal (||R'R - I|| = {ortho:.3g}, det = {det:.12g})"
        )


def _dh_matrix(theta, alpha, a, d, out=None):
    """Raw 4x4 for one DH row; hot path, no validation."""
    ct, st = np.cos(theta), np.sin(theta)
    ca, sa = np.cos(alpha), np.sin(alpha)
    if out is None:
        out = np.empty((4, 4))
    out[0, 0] = ct
    out[0, 1] = -st * ca
    out[0, 2] = st * sa
    out[0, 3] = a * ct
    out[1, 0] = st
    out[1, 1] = ct * ca
    out[1, 2] = -ct * sa
    out[1, 3] = a * st
    out[2, 0] = 0.0
    out[2, 1] = sa
    out[2, 2] = ca
    out[2, 3] = d
    out[3] = _BOTTOM_ROW
    return out


def dh_transform(p: DhParameters) -> HomogeneousTransform:
    """Homogeneous transform between adjacent joint frames for one DH row."""
    vals = p.as_tuple()
    if not all(np.isfinite(v) for v in vals):
        raise InvalidParameterError(f"non-finite DH parameters: {p}")
    return HomogeneousTransform(_dh_matrix(*vals))


def compose(a: HomogeneousTransform, b: HomogeneousTransform) -> HomogeneousTransform:
    """Cascade two transforms: returns a . b."""
    return HomogeneousTransform(a.m @ b.m)


def chain_matrices(config, q) -> list[np.ndarray]:
    """Cumulative transforms T_0^i for i = 1..8 as raw 4x4 arrays.

    ``q`` must already satisfy the config's joint limits; see
    :func:`forward_kinematics` for the validating entry point.
    """
    rows = config.dh_rows(q)
    acc = np.eye(4)
    out = []
    scratch = np.empty((4, 4))
    for theta, alpha, a, d in rows:
        acc = acc @ _dh_matrix(theta, alpha, a, d, out=scratch)
        out.append(acc)
    return out


def forward_kinematics(config, q) -> DrillEndPose:
    """Pose of the drill end for joint vector ``q``.

    Position is the translation column of the full chain product; the
    drilling axis is the z-axis of the last frame expressed in the base
    frame (the propulsion joint slides along it).
    """
    q = np.asarray(q, dtype=float)
    bad = config.limit_violations(q)
    if bad:
        raise JointLimitError(
            f"joint(s) {[i + 1 for i in bad]} outside limits for q={q}", bad
        )
    t = chain_matrices(config, q)[-1]
    return DrillEndPose(position=t[:3, 3].copy(), direction=t[:3, 2].copy())


def preview_point(pose: DrillEndPose, depth: float) -> np.ndarray:
    """Point one drilling depth ahead of the drill end along its axis."""
    if not (np.isfinite(depth) and depth >= 0.0):
        raise InvalidParameterError(f"depth must be >= 0, got {depth}")
    return pose.position + depth * pose.direction


@dataclass(frozen=True)
class JacobianResult:
    """Central-difference Jacobian plus which probes hit a joint limit."""

    matrix: np.ndarray  # 6x8: rows = d(position)/dq over d(direction)/dq
    clamped: np.ndarray  # bool per joint: q +/- eps left the limit box


def jacobian_fd(config, q, eps: float = 1e-5) -> JacobianResult:
    """6x8 Jacobian of [position; direction] by central differences.

    Probe points are clamped into the limit box; clamped columns use the
    actual (shrunken) probe separation so the difference quotient stays
    consistent.
    """
    if not (np.isfinite(eps) and eps > 0.0):
        raise InvalidParameterError(f"eps must be > 0, got {eps}")
    q = np.asarray(q, dtype=float)
    lo, hi = config.limits_lo(), config.limits_hi()
    jac = np.empty((6, 8))
    clamped = np.zeros(8, dtype=bool)
    for i in range(8):
        qp = q.copy()
        qm = q.copy()
        qp[i] = min(q[i] + eps, hi[i])
        qm[i] = max(q[i] - eps, lo[i])
        clamped[i] = (qp[i] != q[i] + eps) or (qm[i] != q[i] - eps)
        span = qp[i] - qm[i]
        tp = chain_matrices(config, qp)[-1]
        tm = chain_matrices(config, qm)[-1]
        jac[:3, i] = (tp[:3, 3] - tm[:3, 3]) / span
        jac[3:, i] = (tp[:3, 2] - tm[:3, 2]) / span
    return JacobianResult(matrix=jac, clamped=clamped)
