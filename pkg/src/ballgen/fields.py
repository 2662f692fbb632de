"""Holomorphic vector fields on the unit ball of C^n.

A field is stored per component as a ratio of complex multivariate
polynomials in the standard coordinates centered at the origin.  This
covers every field this package ships or certifies, keeps evaluation a
pure monomial-sum kernel call, and makes boundary jets exact: the
degree-3 data at the distinguished boundary point e1 = (1, 0, ..., 0)
is obtained by recentering numerator and denominator and dividing the
power series, never by quadrature.

Points and vectors are numpy complex128 arrays ("CxVec").  All
operations are pure; instances are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Dict, Optional, Tuple

import numpy as np

from . import kernels
from .errors import DimensionMismatch, DomainError, JetOrderTooLow, NotSmoothAtE1
from .exact import ComplexRational

DENOMINATOR_FLOOR = 1e-14

MultiIndex = Tuple[int, ...]


def as_point(z, dim=None):
    """Coerce to a complex vector, checking the ambient dimension."""
    pt = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if pt.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {pt.shape}")
    if dim is not None and pt.shape[0] != dim:
        raise DimensionMismatch(f"point has dimension {pt.shape[0]}, field has {dim}")
    return pt


class MultiPoly:
    """Multivariate polynomial: exponent multi-index -> complex coefficient.

    Canonical form stores no zero coefficients.  Coefficients may be
    Python/numpy complex or ComplexRational; arithmetic is generic so
    the exact jet path reuses the same code.
    """

    __slots__ = ("dim", "terms", "_arrays")

    def __init__(self, dim, terms=None):
        self.dim = int(dim)
        clean = {}
        for idx, c in (terms or {}).items():
            idx = tuple(int(e) for e in idx)
            if len(idx) != self.dim:
                raise DimensionMismatch(f"multi-index {idx} has wrong length for dim {self.dim}")
            if any(e < 0 for e in idx):
                raise ValueError(f"negative exponent in {idx}")
            if not _is_zero(c):
                clean[idx] = clean[idx] + c if idx in clean else c
        self.terms = {i: c for i, c in clean.items() if not _is_zero(c)}
        self._arrays = None

    @classmethod
    def constant(cls, dim, value):
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def coordinate(cls, dim, j):
        idx = [0] * dim
        idx[j] = 1
        return cls(dim, {tuple(idx): 1.0 + 0.0j})

    @classmethod
    def one(cls, dim):
        return cls.constant(dim, 1.0 + 0.0j)

    def degree(self):
        return max((sum(i) for i in self.terms), default=0)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.dim: self.terms.get((0,) * self.dim)} and _is_one(
            self.terms.get((0,) * self.dim, 0)
        )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out[i] + c if i in out else c
        return MultiPoly(self.dim, out)

    def __neg__(self):
        return MultiPoly(self.dim, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return MultiPoly(self.dim, {i: c * s for i, c in self.terms.items()})

    def mul(self, other, max_degree=None):
        self._check(other)
        out: Dict[MultiIndex, object] = {}
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                idx = tuple(a + b for a, b in zip(i1, i2))
                if max_degree is not None and sum(idx) > max_degree:
                    continue
                c = c1 * c2
                out[idx] = out[idx] + c if idx in out else c
        return MultiPoly(self.dim, out)

    def __mul__(self, other):
        return self.mul(other)

    def truncate(self, max_degree):
        return MultiPoly(self.dim, {i: c for i, c in self.terms.items() if sum(i) <= max_degree})

    def diff(self, j):
        """Exact partial derivative in coordinate j."""
        out = {}
        for idx, c in self.terms.items():
            if idx[j] == 0:
                continue
            new = list(idx)
            new[j] -= 1
            out[tuple(new)] = c * idx[j]
        return MultiPoly(self.dim, out)

    def recenter_to_vertex(self):
        """Rewrite in powers of w = z - e1 (so z1 = 1 + w1)."""
        out: Dict[MultiIndex, object] = {}
        for idx, c in self.terms.items():
            i1 = idx[0]
            for a in range(i1 + 1):
                new = (a,) + idx[1:]
                contrib = c * math.comb(i1, a)
                out[new] = out[new] + contrib if new in out else contrib
        return MultiPoly(self.dim, out)

    def recenter_to_origin(self):
        """Inverse of recenter_to_vertex: substitute w1 = z1 - 1."""
        out: Dict[MultiIndex, object] = {}
        for idx, c in self.terms.items():
            a = idx[0]
            for b in range(a + 1):
                new = (b,) + idx[1:]
                contrib = c * (math.comb(a, b) * (-1) ** (a - b))
                out[new] = out[new] + contrib if new in out else contrib
        return MultiPoly(self.dim, out)

    def to_exact(self):
        return MultiPoly(self.dim, {i: ComplexRational.coerce(_as_complex(c)) for i, c in self.terms.items()})

    def to_float(self):
        return MultiPoly(self.dim, {i: _as_complex(c) for i, c in self.terms.items()})

    def arrays(self):
        if self._arrays is None:
            if self.terms:
                idx = sorted(self.terms)
                exps = np.array(idx, dtype=np.int64).reshape(len(idx), self.dim)
                coeffs = np.array([_as_complex(self.terms[i]) for i in idx], dtype=np.complex128)
            else:
                exps = np.zeros((0, self.dim), dtype=np.int64)
                coeffs = np.zeros(0, dtype=np.complex128)
            self._arrays = (coeffs, exps)
        return self._arrays

    def eval_batch(self, pts):
        coeffs, exps = self.arrays()
        if coeffs.shape[0] == 0:
            return np.zeros(pts.shape[0], dtype=np.complex128)
        return kernels.eval_poly_batch(np.ascontiguousarray(pts), coeffs, exps)

    def eval_point(self, pt):
        coeffs, exps = self.arrays()
        if coeffs.shape[0] == 0:
            return 0j
        return kernels.eval_poly_point(pt, coeffs, exps)

    def coeff(self, idx):
        return self.terms.get(tuple(idx), 0j)

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, tuple(sorted((i, _as_complex(c)) for i, c in self.terms.items()))))

    def __repr__(self):
        return f"MultiPoly(dim={self.dim}, terms={len(self.terms)})"

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")


def _is_zero(c):
    if isinstance(c, ComplexRational):
        return not c
    return c == 0

def _is_one(c):
    if isinstance(c, ComplexRational):
        return c == ComplexRational(1)
    return c == 1

def _as_complex(c):
    return complex(c)


class RationalField:
    """n-component holomorphic field, each component a polynomial ratio.

    Denominators must be nonvanishing wherever the caller evaluates;
    evaluation raises DomainError when a denominator modulus drops
    below 1e-14.  Components with denominator 1 behave exactly as
    polynomial components.
    """

    def __init__(self, components, label="", singularities=None):
        comps = []
        dim = None
        for num, den in components:
            if dim is None:
                dim = num.dim
            if num.dim != dim or den.dim != dim:
                raise DimensionMismatch("component polynomials disagree on dimension")
            if den.is_zero():
                raise ValueError("zero denominator polynomial")
            comps.append((num, den))
        if dim is None or len(comps) != dim:
            raise DimensionMismatch(
                f"need exactly n components for dimension n, got {len(comps)} for dim {dim}"
            )
        self.dim = dim
        self.components = tuple(comps)
        self.label = label
        self.singularities = tuple(singularities or ())

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_polynomials(cls, polys, label=""):
        polys = list(polys)
        one = MultiPoly.one(polys[0].dim)
        return cls([(p, one) for p in polys], label=label)

    def is_polynomial(self):
        return all(den.is_one() for _, den in self.components)

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, z):
        """Componentwise numerator(z) / denominator(z) at a single point."""
        pt = as_point(z, self.dim)
        out = np.empty(self.dim, dtype=np.complex128)
        for k, (num, den) in enumerate(self.components):
            d = den.eval_point(pt)
            if abs(d) < DENOMINATOR_FLOOR:
                raise DomainError(f"denominator of component {k} vanishes at {pt}", point=pt)
            out[k] = num.eval_point(pt) / d
        return out

    def evaluate_batch(self, pts):
        pts = np.ascontiguousarray(pts, dtype=np.complex128)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise DimensionMismatch(f"batch shape {pts.shape} does not match dimension {self.dim}")
        out = np.empty(pts.shape, dtype=np.complex128)
        for k, (num, den) in enumerate(self.components):
            if den.is_one():
                out[:, k] = num.eval_batch(pts)
                continue
            d = den.eval_batch(pts)
            bad = np.abs(d) < DENOMINATOR_FLOOR
            if bad.any():
                where = pts[int(np.argmax(bad))]
                raise DomainError(f"denominator of component {k} vanishes at {where}", point=where)
            out[:, k] = num.eval_batch(pts) / d
        return out

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RationalField):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch("cannot add fields of different dimension")
        comps = []
        for (n1, d1), (n2, d2) in zip(self.components, other.components):
            if d1 == d2:
                comps.append((n1 + n2, d1))
            elif d2.is_one():
                comps.append((n1 + n2 * d1, d1))
            elif d1.is_one():
                comps.append((n2 + n1 * d2, d2))
            else:
                comps.append((n1 * d2 + n2 * d1, d1 * d2))
        label = f"({self.label}+{other.label})" if self.label or other.label else ""
        return RationalField(comps, label=label,
                             singularities=self.singularities + other.singularities)

    def __neg__(self):
        return self.scale(-1.0)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        comps = [(num.scale(s), den) for num, den in self.components]
        return RationalField(comps, label=self.label, singularities=self.singularities)

    def coefficients_equal(self, other):
        return (
            self.dim == other.dim
            and all(
                n1 == n2 and d1 == d2
                for (n1, d1), (n2, d2) in zip(self.components, other.components)
            )
        )

    def __repr__(self):
        return f"RationalField(dim={self.dim}, label={self.label!r})"


def identity_field(dim):
    return RationalField.from_polynomials(
        [MultiPoly.coordinate(dim, j) for j in range(dim)], label="identity"
    )


def from_self_map(f: RationalField) -> RationalField:
    """The field z -> f(z) - z associated with a holomorphic self-map f."""
    comps = []
    for k, (num, den) in enumerate(f.components):
        zk = MultiPoly.coordinate(f.dim, k)
        comps.append((num - zk * den, den))
    return RationalField(comps, label=f"({f.label or 'f'}-id)", singularities=f.singularities)


def hyperbolic_generator(rate, dim=2):
    """The canonical hyperbolic group generator (rate/2) * (e1 - z1 z)."""
    b = float(rate)
    comps = []
    z1 = MultiPoly.coordinate(dim, 0)
    first = MultiPoly.constant(dim, b / 2.0) - (z1 * z1).scale(b / 2.0)
    comps.append(first)
    for k in range(1, dim):
        zk = MultiPoly.coordinate(dim, k)
        comps.append((z1 * zk).scale(-b / 2.0))
    return RationalField.from_polynomials(comps, label=f"h-beta:{_fmt(b)}")


def _fmt(x):
    return f"{x:g}"


# -- Cauchy-integral differentiation ------------------------------------------


def derivative_matrix(field, z, scale=0.5, koranyi_amplitude=None, nodes=64):
    """Full Jacobian dG_z by trapezoid-rule Cauchy integrals.

    Column j is (1/2 pi i) * contour integral of G(z + zeta e_j)/zeta^2
    over |zeta| = r_j with M = `nodes` equispaced nodes.  With
    `koranyi_amplitude` R set, the radii are anisotropic: r_1 =
    delta*|1 - z1| along e1 and r_j = delta*|1 - z1|**0.5 across, with
    delta = (1/3)(1/R - 1/R') and R' = 2R.  Otherwise every radius is
    scale * dist(z, boundary).
    """
    pt = as_point(z, field.dim)
    n = field.dim
    if koranyi_amplitude is not None:
        r_axis = abs(1.0 - pt[0])
        if r_axis == 0.0:
            raise DomainError("vertex itself has no interior polydisc", point=pt)
        delta = (1.0 / 3.0) * (1.0 / koranyi_amplitude - 1.0 / (2.0 * koranyi_amplitude))
        radii = np.full(n, delta * math.sqrt(r_axis))
        radii[0] = delta * r_axis
    else:
        dist = 1.0 - float(np.linalg.norm(pt))
        if dist <= 0.0:
            raise DomainError("uniform radii need an interior point", point=pt)
        radii = np.full(n, scale * dist)

    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    phase = np.exp(1j * theta)
    # One batched field evaluation covering all n circles.
    pts = np.repeat(pt[None, :], n * nodes, axis=0)
    for j in range(n):
        pts[j * nodes : (j + 1) * nodes, j] += radii[j] * phase
    vals = field.evaluate_batch(pts)
    jac = np.empty((n, n), dtype=np.complex128)
    for j in range(n):
        block = vals[j * nodes : (j + 1) * nodes]  # (nodes, n)
        jac[:, j] = (block.T @ np.conj(phase)) / (nodes * radii[j])
    return jac


# -- boundary jets -------------------------------------------------------------


@dataclass
class JetData:
    """Degree <= 3 Taylor data of a field at e1, in powers of z - e1.

    T is the n x n linear-part matrix; q2 maps (component, multi-index)
    with total degree 2 to the coefficient; q3_first maps degree-3
    multi-indices of the first component.  beta is the real part of
    T[0, 0], the boundary rate when the field has one.  `exact` holds
    the same data over Gaussian rationals when requested.
    """

    beta: float
    T: np.ndarray
    q2: Dict[Tuple[int, MultiIndex], complex]
    q3_first: Dict[MultiIndex, complex]
    dim: int
    order: int
    exact: Optional[dict] = dc_field(default=None, repr=False)

    def require_order(self, k):
        if self.order < k:
            raise JetOrderTooLow(f"jet of order {self.order} cannot answer an order-{k} question")

    def q2_coeff(self, component, idx):
        return self.q2.get((component, tuple(idx)), 0j)

    def q3_coeff(self, idx):
        return self.q3_first.get(tuple(idx), 0j)

    def s_block(self):
        return self.T[1:, 1:]

    def t_column(self):
        return self.T[1:, 0]

    def eval_q2(self, v):
        """All components of the quadratic part at the vector v."""
        out = np.zeros(self.dim, dtype=np.complex128)
        for (k, idx), c in self.q2.items():
            out[k] += c * _power(v, idx)
        return out

    def eval_q3_first(self, v):
        return sum((c * _power(v, idx) for idx, c in self.q3_first.items()), 0j)

    def mutate(self, entry, delta):
        """Return a copy with one coefficient perturbed (test harness hook).

        `entry` is ("T", i, j), ("q2", k, idx) or ("q3", idx).
        """
        T = self.T.copy()
        q2 = dict(self.q2)
        q3 = dict(self.q3_first)
        kind = entry[0]
        if kind == "T":
            T[entry[1], entry[2]] += delta
        elif kind == "q2":
            key = (entry[1], tuple(entry[2]))
            q2[key] = q2.get(key, 0j) + delta
        elif kind == "q3":
            key = tuple(entry[1])
            q3[key] = q3.get(key, 0j) + delta
        else:
            raise ValueError(f"unknown jet entry kind {kind!r}")
        return JetData(beta=float(T[0, 0].real), T=T, q2=q2, q3_first=q3,
                       dim=self.dim, order=self.order)


def _power(v, idx):
    out = 1.0 + 0.0j
    for base, e in zip(v, idx):
        if e:
            out *= base ** e
    return out


def jet_at_e1(field, order=3, exact=False):
    """Taylor coefficients of the field at e1 by power-series division.

    Requires every denominator to be nonzero at e1; fields singular
    there (however mildly) are rejected with NotSmoothAtE1.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    n = field.dim
    e1_probe = np.zeros(n, dtype=np.complex128)
    e1_probe[0] = 1.0
    jets = []
    for k, (num, den) in enumerate(field.components):
        if exact:
            num, den = num.to_exact(), den.to_exact()
        num_v = num.recenter_to_vertex().truncate(order)
        den_v = den.recenter_to_vertex().truncate(order)
        d0 = den_v.coeff((0,) * n)
        if _is_zero(d0) or (not exact and abs(_as_complex(d0)) < DENOMINATOR_FLOOR):
            raise NotSmoothAtE1(f"component {k} denominator vanishes at e1")
        # den = d0 (1 + E): invert the series by the geometric sum.
        eps = den_v.scale(_inverse(d0)) - MultiPoly.one(n).scale(_unit_like(d0))
        inv = MultiPoly.one(n).scale(_unit_like(d0))
        power = MultiPoly.one(n).scale(_unit_like(d0))
        for _ in range(order):
            power = power.mul(eps, max_degree=order).scale(-1)
            inv = inv + power
        jets.append(num_v.mul(inv, max_degree=order).scale(_inverse(d0)))

    T = np.zeros((n, n), dtype=np.complex128)
    q2: Dict[Tuple[int, MultiIndex], complex] = {}
    q3: Dict[MultiIndex, complex] = {}
    exact_data = {"T": {}, "q2": {}, "q3": {}} if exact else None
    for k, poly in enumerate(jets):
        for idx, c in poly.terms.items():
            deg = sum(idx)
            cf = _as_complex(c)
            if deg == 1:
                j = idx.index(1)
                T[k, j] = cf
                if exact:
                    exact_data["T"][(k, j)] = c
            elif deg == 2:
                q2[(k, idx)] = cf
                if exact:
                    exact_data["q2"][(k, idx)] = c
            elif deg == 3 and k == 0:
                q3[idx] = cf
                if exact:
                    exact_data["q3"][idx] = c
    return JetData(beta=float(T[0, 0].real), T=T, q2=q2, q3_first=q3,
                   dim=n, order=order, exact=exact_data)


def _inverse(c):
    if isinstance(c, ComplexRational):
        return ComplexRational(1) / c
    return 1.0 / c

def _unit_like(c):
    return ComplexRational(1) if isinstance(c, ComplexRational) else 1.0 + 0.0j


def quadratic_truncation(jet: JetData) -> RationalField:
    """Polynomial field T(z-e1) + Q2(z-e1), back in origin coordinates."""
    jet.require_order(2)
    n = jet.dim
    comps = []
    for k in range(n):
        terms: Dict[MultiIndex, complex] = {}
        for j in range(n):
            if jet.T[k, j] != 0:
                idx = [0] * n
                idx[j] = 1
                terms[tuple(idx)] = jet.T[k, j]
        for (comp, idx), c in jet.q2.items():
            if comp == k:
                terms[idx] = terms.get(idx, 0j) + c
        comps.append(MultiPoly(n, terms).recenter_to_origin())
    label = f"{jet_label(jet)}~quad"
    return RationalField.from_polynomials(comps, label=label)


def jet_label(jet):
    return f"jet(dim={jet.dim},order={jet.order})"
