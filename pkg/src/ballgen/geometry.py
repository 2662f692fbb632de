"""Boundary geometry of the unit ball at the vertex e1.

Provides the pluricomplex Poisson kernel with pole at e1, its pairing
with a holomorphic field, horospheres and Koranyi approach regions,
deterministic seeded samplers, and the approach curves used by every
boundary-limit estimate in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from .errors import DomainError, EmptyRegion
from .fields import as_point

DEFAULT_GRID_T0 = 0.2
DEFAULT_GRID_RATIO = 0.5
DEFAULT_GRID_STEPS = 20


def poisson(z) -> float:
    """-(1 - |z|^2) / |1 - z1|^2, negative on the open ball."""
    pt = as_point(z)
    nrm2 = float(np.sum(np.abs(pt) ** 2))
    if nrm2 >= 1.0:
        raise DomainError("Poisson kernel needs an interior point", point=pt)
    denom = abs(1.0 - pt[0]) ** 2
    if denom == 0.0:
        raise DomainError("Poisson kernel has its pole at e1", point=pt)
    return -(1.0 - nrm2) / denom


def poisson_pairing(field, z) -> float:
    """Real differential of the Poisson kernel applied to the field.

    Closed form: -2 Re(<G(z), e1>/(1-z1)) (1-|z|^2)/|1-z1|^2
                 + 2 Re<G(z), z>/|1-z1|^2.
    """
    pt = as_point(z, field.dim)
    g = field.evaluate(pt)
    return pairing_from_values(g, pt)


def pairing_from_values(g, pt) -> float:
    nrm2 = float(np.sum(np.abs(pt) ** 2))
    d2 = abs(1.0 - pt[0]) ** 2
    if d2 == 0.0:
        raise DomainError("pairing undefined at e1", point=pt)
    first = (g[0] / (1.0 - pt[0])).real
    inner = float(np.real(np.sum(g * np.conj(pt))))
    return -2.0 * first * (1.0 - nrm2) / d2 + 2.0 * inner / d2


def pairing_batch(field, pts):
    """Vectorized poisson_pairing over rows of pts."""
    vals = field.evaluate_batch(pts)
    nrm2 = np.sum(np.abs(pts) ** 2, axis=1)
    d2 = np.abs(1.0 - pts[:, 0]) ** 2
    first = np.real(vals[:, 0] / (1.0 - pts[:, 0]))
    inner = np.real(np.sum(vals * np.conj(pts), axis=1))
    return -2.0 * first * (1.0 - nrm2) / d2 + 2.0 * inner / d2


def poisson_batch(pts):
    nrm2 = np.sum(np.abs(pts) ** 2, axis=1)
    return -(1.0 - nrm2) / np.abs(1.0 - pts[:, 0]) ** 2


@dataclass(frozen=True)
class KoranyiRegion:
    """Nonisotropic approach region |1 - z1| <= (R/2)(1 - |z|^2)."""

    amplitude: float = 2.0

    def __post_init__(self):
        if self.amplitude < 1.0:
            raise ValueError("amplitude must be >= 1")

    def contains(self, z) -> bool:
        pt = as_point(z)
        return abs(1.0 - pt[0]) <= (self.amplitude / 2.0) * (1.0 - float(np.sum(np.abs(pt) ** 2)))


@dataclass(frozen=True)
class Horosphere:
    """Sublevel set {poisson < -1/R} of the kernel, tangent at e1."""

    radius: float

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError("radius must be positive")

    def contains(self, z) -> bool:
        return poisson(z) < -1.0 / self.radius


@dataclass(frozen=True)
class ApproachCurve:
    """Parametrized curve tending to e1, sampled on a geometric grid.

    kinds:
      radial               z(t) = (1 - t) e1
      nontangential        z(t) = (1 - t e^{i theta}) e1, |theta| <= pi/3
      restricted           z(t) = (1 - t e^{i theta}) e1 + t^{(1+gamma)/2 + 1/4} u
                           with u a unit vector orthogonal to e1
    """

    kind: str
    dim: int
    theta: float = 0.0
    direction: Optional[tuple] = None
    gamma: float = 0.5
    t0: float = DEFAULT_GRID_T0
    ratio: float = DEFAULT_GRID_RATIO
    steps: int = DEFAULT_GRID_STEPS

    def __post_init__(self):
        if self.kind not in ("radial", "nontangential", "restricted"):
            raise ValueError(f"unknown curve kind {self.kind!r}")
        if self.kind == "nontangential" and abs(self.theta) > math.pi / 3 + 1e-12:
            raise ValueError("nontangential angle limited to pi/3")
        if self.kind == "restricted":
            if self.dim < 2:
                raise ValueError("restricted curves need a transversal direction")
            u = np.asarray(self.direction, dtype=np.complex128)
            if abs(u[0]) > 1e-12 or abs(np.linalg.norm(u) - 1.0) > 1e-10:
                raise ValueError("direction must be a unit vector orthogonal to e1")

    def params(self):
        return self.t0 * self.ratio ** np.arange(self.steps)

    def points(self):
        t = self.params()
        pts = np.zeros((self.steps, self.dim), dtype=np.complex128)
        if self.kind == "radial":
            pts[:, 0] = 1.0 - t
        else:
            pts[:, 0] = 1.0 - t * np.exp(1j * self.theta)
            if self.kind == "restricted":
                u = np.asarray(self.direction, dtype=np.complex128)
                expo = (1.0 + self.gamma) / 2.0 + 0.25
                pts += (t ** expo)[:, None] * u[None, :]
        return pts

    def restricted_ratio(self):
        """||z - <z,e1> e1||^2 / (1 - |<z,e1>|^2) along the grid."""
        pts = self.points()
        transversal = np.sum(np.abs(pts[:, 1:]) ** 2, axis=1) if self.dim > 1 else np.zeros(self.steps)
        return transversal / (1.0 - np.abs(pts[:, 0]) ** 2)


def koranyi_sample(region: KoranyiRegion, count: int, seed: int, closeness: float = 1.0, dim: int = 2):
    """Seeded points of the region with |1 - z1| <= closeness.

    z1 = 1 - s e^{i theta} with s log-uniform in [closeness/10, closeness]
    and theta uniform over the feasible angles; the transversal part is
    uniform in the ball whose squared radius is the membership budget
    1 - |z1|^2 - (2/R)|1 - z1|.  Every returned point is re-checked
    against the membership inequality.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 0.0 < closeness <= 1.0:
        raise ValueError("closeness must lie in (0, 1]")
    R = region.amplitude
    s_hi = closeness
    s_lo = closeness / 10.0
    # cos(theta) must exceed 1/R + s/2 for the budget to be positive.
    if 1.0 / R + s_lo / 2.0 >= 1.0:
        raise EmptyRegion(f"no interior points with amplitude {R} at closeness {closeness}")
    rng = np.random.default_rng(seed)
    n_t = dim - 1
    out = []
    max_rounds = 200
    for _ in range(max_rounds):
        need = count - len(out)
        if need <= 0:
            break
        s = np.exp(rng.uniform(np.log(s_lo), np.log(s_hi), size=need))
        cos_floor = 1.0 / R + s / 2.0
        ok = cos_floor < 1.0
        s = s[ok]
        if s.size == 0:
            continue
        theta_max = np.arccos(np.clip(cos_floor[ok], -1.0, 1.0))
        theta = rng.uniform(-1.0, 1.0, size=s.size) * theta_max
        z1 = 1.0 - s * np.exp(1j * theta)
        budget = 1.0 - np.abs(z1) ** 2 - (2.0 / R) * s
        keep = budget > 0.0
        z1, budget = z1[keep], budget[keep]
        m = z1.size
        if m == 0:
            continue
        pts = np.zeros((m, dim), dtype=np.complex128)
        pts[:, 0] = z1
        if n_t > 0:
            w = rng.standard_normal((m, n_t)) + 1j * rng.standard_normal((m, n_t))
            nw = np.linalg.norm(w, axis=1, keepdims=True)
            nw[nw == 0.0] = 1.0
            radii = np.sqrt(budget) * rng.uniform(0.0, 1.0, size=m) ** (1.0 / (2 * n_t))
            pts[:, 1:] = (w / nw) * radii[:, None]
        lhs = np.abs(1.0 - pts[:, 0])
        rhs = (R / 2.0) * (1.0 - np.sum(np.abs(pts) ** 2, axis=1))
        good = lhs <= rhs
        out.extend(pts[good])
    if len(out) < count:
        raise EmptyRegion(
            f"could not draw {count} points at closeness {closeness} with amplitude {R}"
        )
    return np.array(out[:count], dtype=np.complex128).reshape(count, dim)


def boundary_sample(dim: int, count: int, seed: int):
    """Seeded uniform points on the unit sphere of C^n."""
    rng = np.random.default_rng(seed)
    w = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    return w


def ball_sample(dim: int, count: int, seed: int, radius: float = 1.0):
    """Seeded uniform points of the ball of the given radius."""
    rng = np.random.default_rng(seed)
    w = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    r = radius * rng.uniform(0.0, 1.0, size=count) ** (1.0 / (2 * dim))
    return w * r[:, None]


def stratified_ball_sample(dim: int, count: int, seed: int, shell_depths=(1, 2, 3, 4, 5, 6)):
    """Bulk samples plus spheres at boundary distances 10**-k.

    The certification routines sample this way: a uniform bulk portion
    and equal-sized shells hugging the boundary, where violations of
    the boundary inequalities concentrate.
    """
    groups = len(shell_depths) + 1
    per = max(1, count // groups)
    parts = [ball_sample(dim, per, seed, radius=1.0 - 1e-3)]
    for i, k in enumerate(shell_depths):
        dirs = boundary_sample(dim, per, seed + 1 + i)
        parts.append(dirs * (1.0 - 10.0 ** (-k)))
    return np.concatenate(parts, axis=0)


def disc_sample(count: int, seed: int, shell_depths=(1, 2, 3, 4)):
    """Seeded points of the unit disc: uniform bulk plus boundary shells."""
    rng = np.random.default_rng(seed)
    groups = len(shell_depths) + 1
    per = max(1, count // groups)
    bulk = np.sqrt(rng.uniform(0.0, 1.0, size=per)) * np.exp(
        2j * np.pi * rng.uniform(0.0, 1.0, size=per)
    )
    parts = [bulk]
    for k in shell_depths:
        ang = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size=per))
        parts.append((1.0 - 10.0 ** (-k)) * ang)
    return np.concatenate(parts)
