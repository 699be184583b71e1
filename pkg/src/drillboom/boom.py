"""Concrete description of the 8-DOF drill boom.

Joints 3 and 8 are prismatic (telescopic boom extension and propulsion
feed), the other six revolute. Exactly one DH parameter per joint is
variable: theta for revolute joints, d for prismatic ones; the remaining
three are fixed structure.

The paper's boom geometry is unpublished, so :func:`default_boom` ships a
fixed reference geometry (jumbo scale, ~10 m reach) that all quantitative
tests and experiment configs are pinned against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidParameterError
from .kinematics import DhParameters

N_JOINTS = 8
PRISMATIC_JOINTS = (2, 7)  # 0-based; "the 3rd and 8th joints are prismatic pairs"

# Actuator rate bounds per joint: rad/s for revolute, m/s for prismatic
# (20 mm/s feed converted to m/s).
RATE_MAX = np.array([0.08, 0.08, 0.020, 0.08, 0.08, 0.12, 0.08, 0.020])


class JointKind(Enum):
    REVOLUTE = "revolute"
    PRISMATIC = "prismatic"


@dataclass(frozen=True)
class JointSpec:
    """One joint: kind, fixed DH entries, limit box, rate bound.

    The variable DH entry (theta for revolute, d for prismatic) is ignored
    in ``fixed`` and overwritten by the joint value.
    """

    kind: JointKind
    fixed: DhParameters
    q_min: float
    q_max: float
    rate_max: float

    @property
    def is_prismatic(self):
        return self.kind is JointKind.PRISMATIC


@dataclass(frozen=True)
class BoomConfig:
    """Immutable kinematic description of one boom."""

    joints: tuple[JointSpec, ...]
    drill_depth_default: float
    name: str

    def __post_init__(self):
        # Precompute the fixed (8, 4) DH table and limit arrays once;
        # dh_rows() is on the FK hot path.
        table = np.array([j.fixed.as_tuple() for j in self.joints])
        var_col = np.array(
            [3 if j.is_prismatic else 0 for j in self.joints]
        )  # d is column 3, theta column 0
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_var_col", var_col)
        object.__setattr__(self, "_lo", np.array([j.q_min for j in self.joints]))
        object.__setattr__(self, "_hi", np.array([j.q_max for j in self.joints]))

    def dh_rows(self, q) -> np.ndarray:
        """(8, 4) array of (theta, alpha, a, d) with q written into the variable slots."""
        rows = self._table.copy()
        rows[np.arange(N_JOINTS), self._var_col] = q
        return rows

    def limits_lo(self):
        return self._lo

    def limits_hi(self):
        return self._hi

    def limit_violations(self, q):
        """0-based indices of entries outside [q_min, q_max]."""
        q = np.asarray(q, dtype=float)
        if q.shape != (N_JOINTS,):
            raise InvalidParameterError(f"joint vector must have 8 entries, got shape {q.shape}")
        bad = (q < self._lo) | (q > self._hi) | ~np.isfinite(q)
        return list(np.flatnonzero(bad))

    def nominal_q(self):
        """Mid-range posture, the reference 'parked facing the face' pose."""
        return 0.5 * (self._lo + self._hi)

    def rate_limits(self):
        return np.array([j.rate_max for j in self.joints])


def joint_vector_to_dh_rows(config: BoomConfig, q) -> list[DhParameters]:
    """Materialize the per-joint DH rows for joint vector ``q``."""
    q = np.asarray(q, dtype=float)
    if q.shape != (N_JOINTS,):
        raise InvalidParameterError(f"joint vector must have 8 entries, got shape {q.shape}")
    rows = []
    for spec, qi in zip(config.joints, q):
        f = spec.fixed
        if spec.is_prismatic:
            rows.append(DhParameters(theta=f.theta, alpha=f.alpha, a=f.a, d=float(qi)))
        else:
            rows.append(DhParameters(theta=float(qi), alpha=f.alpha, a=f.a, d=f.d))
    return rows


def clamp_joint_vector(config: BoomConfig, q):
    """Clamp ``q`` into the limit box.

    Returns ``(q_clamped, clamped)`` where ``clamped`` is a bool array
    marking the components that moved.
    """
    q = np.asarray(q, dtype=float)
    out = np.clip(q, config.limits_lo(), config.limits_hi())
    return out, out != q


def validate(config: BoomConfig) -> list[str]:
    """All violations of the boom invariants; empty list means ok."""
    problems = []
    if len(config.joints) != N_JOINTS:
        problems.append(f"boom must have {N_JOINTS} joints, got {len(config.joints)}")
        return problems
    for i, spec in enumerate(config.joints):
        label = f"joint {i + 1}"
        should_be_prismatic = i in PRISMATIC_JOINTS
        if should_be_prismatic and not spec.is_prismatic:
            problems.append(f"{label} must be prismatic")
        if not should_be_prismatic and spec.is_prismatic:
            problems.append(f"{label} must be revolute")
        if not spec.q_min < spec.q_max:
            problems.append(f"{label}: q_min ({spec.q_min}) must be < q_max ({spec.q_max})")
        if not spec.rate_max > 0:
            problems.append(f"{label}: rate_max must be positive, got {spec.rate_max}")
        if not all(np.isfinite(v) for v in spec.fixed.as_tuple()):
            problems.append(f"{label}: non-finite fixed DH parameters {spec.fixed}")
        if not (np.isfinite(spec.q_min) and np.isfinite(spec.q_max)):
            problems.append(f"{label}: non-finite limits [{spec.q_min}, {spec.q_max}]")
    if not (np.isfinite(config.drill_depth_default) and config.drill_depth_default > 0):
        problems.append(f"drill_depth_default must be positive, got {config.drill_depth_default}")
    return problems


def _rev(theta_nominal, alpha, a, d, half_range=1.2, rate=0.08):
    return JointSpec(
        kind=JointKind.REVOLUTE,
        fixed=DhParameters(theta=0.0, alpha=alpha, a=a, d=d),
        q_min=theta_nominal - half_range,
        q_max=theta_nominal + half_range,
        rate_max=rate,
    )


def _pri(theta, alpha, a, d_min, d_max, rate=0.020):
    return JointSpec(
        kind=JointKind.PRISMATIC,
        fixed=DhParameters(theta=theta, alpha=alpha, a=a, d=0.0),
        q_min=d_min,
        q_max=d_max,
        rate_max=rate,
    )


def default_boom() -> BoomConfig:
    """The fixed reference geometry all default configs and tests pin.

    Chain (standard DH, joint i moves about/along z_{i-1}):
      1 swing of the whole boom about the vertical carrier axis
      2 boom lift (pitch); at nominal the boom axis points along base +x
      3 telescopic boom extension, sliding along the boom axis
      4 boom roll about its own axis, plus the fixed 2.5 m base boom length
      5 feed swing
      6 feed tilt
      7 feed roll about the propulsion axis
      8 propulsion feed, sliding along the drilling axis (alpha = 0 keeps
        the slide axis equal to the drill-end z-axis)

    Revolute limits are nominal +/- 1.2 rad; extensions are 0-2.5 m
    (telescope) and 0-3.5 m (feed), giving roughly 10 m of reach.
    """
    half_pi = 0.5 * np.pi
    joints = (
        _rev(0.0, -half_pi, 0.30, 1.50),
        _rev(half_pi, half_pi, 0.00, 0.00),
        _pri(0.0, 0.0, 0.00, 0.0, 2.5),
        _rev(0.0, half_pi, 0.00, 2.50),
        _rev(half_pi, -half_pi, 0.25, 0.00),
        _rev(half_pi, half_pi, 0.00, 0.30, rate=0.12),
        _rev(half_pi, 0.0, 0.10, 0.40),
        _pri(0.0, 0.0, 0.00, 0.0, 3.5),
    )
    cfg = BoomConfig(joints=joints, drill_depth_default=3.0, name="reference-jumbo-8dof")
    problems = validate(cfg)
    if problems:  # construction bug, not user error
        raise AssertionError(f"default boom invalid: {problems}")
    return cfg
