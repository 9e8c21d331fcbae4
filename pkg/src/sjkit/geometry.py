"""Invariant metrics, Laplacians, and the volume density.

The Laplacians act on user-supplied scalar fields through central finite
differences.  Differentiation of the symmetric base variable uses
upper-triangle coordinates: perturbing an off-diagonal coordinate moves both
mirrored entries, and the (1 + delta)/2 weight is applied so that the matrix
derivative of trace(B Omega) is exactly B for symmetric B.  The fiber
gradient is arranged as a g x h matrix whose (l, k) entry differentiates the
(k, l) fiber entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .numkit import (
    DEFAULT_TOL,
    ConsistencyError,
    DimensionError,
    DomainError,
    Tolerance,
    as_cmatrix,
    frob,
    guarded_inv,
    symmetry_defect,
)
from .spaces import DiskJacobiPoint, DiskPoint, SiegelJacobiPoint, SiegelPoint, partial_cayley

__all__ = [
    "TangentVector",
    "ScalarField",
    "MetricParams",
    "TEST_FIELDS",
    "metric_siegel",
    "metric_disk",
    "metric_sj",
    "pullback_metric_disk",
    "wirtinger_gradient",
    "laplacian_siegel",
    "laplacian_disk",
    "laplacian_sj",
    "volume_density",
    "pushforward",
    "sample_tangent",
    "real_coordinates",
    "action_jacobian_det",
]

FD_FIRST_STEP = 1e-6
FD_SECOND_STEP = 1e-4


class TangentVector:
    """A symmetric base displacement plus an optional fiber displacement."""

    __slots__ = ("dbase", "dfiber")

    def __init__(self, dbase, dfiber=None, tol: Tolerance = DEFAULT_TOL):
        self.dbase = as_cmatrix(dbase, "dbase")
        if self.dbase.shape[0] != self.dbase.shape[1]:
            raise DimensionError(f"dbase must be square, got {self.dbase.shape}")
        if symmetry_defect(self.dbase) > tol.algebraic_rel:
            raise DomainError("dbase is not symmetric within tolerance")
        self.dfiber = None if dfiber is None else as_cmatrix(dfiber, "dfiber")

    @property
    def g(self) -> int:
        return self.dbase.shape[0]

    def norm(self) -> float:
        n2 = frob(self.dbase) ** 2
        if self.dfiber is not None:
            n2 += frob(self.dfiber) ** 2
        return float(np.sqrt(n2))

    def scaled(self, t: float) -> "TangentVector":
        return TangentVector(
            t * self.dbase, None if self.dfiber is None else t * self.dfiber
        )


@dataclass(frozen=True)
class MetricParams:
    """The two positive weights of the two-parameter invariant metric."""

    a: float = 1.0
    b: float = 1.0

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError("metric parameters must be positive")


@dataclass(frozen=True)
class ScalarField:
    """A named twice-differentiable test field on one of the domains."""

    name: str
    domain: str  # "siegel", "disk", or "sj"
    fn: Callable

    def __call__(self, point):
        return self.fn(point)


def _tr(a) -> complex:
    return complex(np.trace(a))


TEST_FIELDS = [
    ScalarField("trace-re-base", "sj", lambda p: float(np.trace(np.real(p.omega)))),
    ScalarField("logdet-y", "sj", lambda p: float(np.log(np.linalg.det(np.imag(p.omega))))),
    ScalarField(
        "trace-yvv",
        "sj",
        lambda p: float(np.real(_tr(np.imag(p.omega) @ np.imag(p.z).T @ np.imag(p.z)))),
    ),
    ScalarField("re-trace-z", "sj", lambda p: float(np.real(np.trace(p.z)))),
    ScalarField("abs2-trace-z", "sj", lambda p: float(abs(np.trace(p.z)) ** 2)),
    ScalarField(
        "logdet-disk",
        "disk",
        lambda p: float(np.real(np.log(np.linalg.det(np.eye(p.g) - p.w @ p.w.conj())))),
    ),
]


# ---------------------------------------------------------------------------
# metrics


def _real_value(val: complex, tol: float, what: str) -> float:
    if abs(np.imag(val)) > tol * max(1.0, abs(val)):
        raise ConsistencyError(f"{what}: imaginary residual {np.imag(val):.3e}")
    return float(np.real(val))


def metric_siegel(p: SiegelPoint, v: TangentVector, tol: Tolerance = DEFAULT_TOL) -> float:
    """trace(Y^-1 dOmega Y^-1 conj(dOmega))."""
    yi = guarded_inv(p.y.astype(complex), "Im(omega)")
    val = _tr(yi @ v.dbase @ yi @ v.dbase.conj())
    return _real_value(val, tol.algebraic_rel, "siegel metric")


def metric_disk(p: DiskPoint, v: TangentVector, tol: Tolerance = DEFAULT_TOL) -> float:
    """4 trace((I - W conj W)^-1 dW (I - conj(W) W)^-1 conj(dW))."""
    i = np.eye(p.g)
    s = guarded_inv(i - p.w @ p.w.conj(), "I - W conj(W)")
    sb = guarded_inv(i - p.w.conj() @ p.w, "I - conj(W) W")
    val = 4.0 * _tr(s @ v.dbase @ sb @ v.dbase.conj())
    return _real_value(val, tol.algebraic_rel, "disk metric")


def metric_sj(params: MetricParams, p: SiegelJacobiPoint, v: TangentVector,
              tol: Tolerance = DEFAULT_TOL) -> float:
    """The five-term A/B metric in dOmega and dZ.

    Reduces to a times the base metric when dZ = 0 and Im(Z) = 0.
    """
    if v.dfiber is None:
        raise DimensionError("tangent vector must carry a fiber part")
    yi = guarded_inv(p.base.y.astype(complex), "Im(omega)")
    vmat = p.v.astype(complex)
    do, dob = v.dbase, v.dbase.conj()
    dz, dzb = v.dfiber, v.dfiber.conj()
    m1 = _tr(yi @ do @ yi @ dob)
    m2 = _tr(yi @ vmat.T @ vmat @ yi @ do @ yi @ dob)
    m3 = _tr(yi @ dz.T @ dzb)
    m4 = _tr(vmat @ yi @ do @ yi @ dzb.T)
    m5 = _tr(vmat @ yi @ dob @ yi @ dz.T)
    val = params.a * m1 + params.b * (m2 + m3 - m4 - m5)
    return _real_value(val, tol.algebraic_rel, "siegel-jacobi metric")


def pullback_metric_disk(params: MetricParams, p: DiskJacobiPoint, v: TangentVector,
                         tol: Tolerance = DEFAULT_TOL) -> float:
    """The invariant metric on the bounded model, realized as the pullback of
    the unbounded-model metric through the partial Cayley transform."""
    moved = partial_cayley(p, tol)
    dv = pushforward(lambda q: partial_cayley(q, tol), p, v, tol)
    return metric_sj(params, moved, dv, tol)


# ---------------------------------------------------------------------------
# point plumbing shared by the finite-difference operators


def _point_parts(p) -> tuple[np.ndarray, np.ndarray | None]:
    if isinstance(p, SiegelJacobiPoint):
        return p.omega, p.z
    if isinstance(p, DiskJacobiPoint):
        return p.w, p.eta
    if isinstance(p, SiegelPoint):
        return p.omega, None
    if isinstance(p, DiskPoint):
        return p.w, None
    raise DimensionError(f"unsupported point type: {type(p).__name__}")


def _rebuild(p, base: np.ndarray, fiber: np.ndarray | None, validate: bool):
    if isinstance(p, SiegelJacobiPoint):
        return SiegelJacobiPoint(SiegelPoint(base, validate=validate), fiber)
    if isinstance(p, DiskJacobiPoint):
        return DiskJacobiPoint(DiskPoint(base, validate=validate), fiber)
    if isinstance(p, SiegelPoint):
        return SiegelPoint(base, validate=validate)
    return DiskPoint(base, validate=validate)


def point_norm(p) -> float:
    base, fiber = _point_parts(p)
    n2 = frob(base) ** 2
    if fiber is not None:
        n2 += frob(fiber) ** 2
    return float(np.sqrt(n2))


def _pd_margin(p) -> float:
    base = p.base if isinstance(p, (SiegelJacobiPoint, DiskJacobiPoint)) else p
    return base.pd_margin()


def _sym_coords(g: int):
    """Upper-triangle coordinates (weight, direction matrix) of symmetric g x g."""
    out = []
    for mu in range(g):
        for nu in range(mu, g):
            e = np.zeros((g, g))
            e[mu, nu] = 1.0
            e[nu, mu] = 1.0
            w = 1.0 if mu == nu else 0.5
            out.append((mu, nu, w, e))
    return out


def _fiber_coords(h: int, g: int):
    out = []
    for k in range(h):
        for l in range(g):
            e = np.zeros((h, g))
            e[k, l] = 1.0
            out.append((k, l, 1.0, e))
    return out


# ---------------------------------------------------------------------------
# first derivatives


def wirtinger_gradient(f: Callable, p, which: str, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Matrix of weighted Wirtinger derivatives of f at p by central differences.

    which selects the variable: "base" / "base_bar" give the symmetric g x g
    operator matrices; "fiber" / "fiber_bar" give the g x h arrangement.
    """
    base, fiber = _point_parts(p)
    g = base.shape[0]
    h = 1e-6 * max(1.0, point_norm(p))
    if _pd_margin(p) <= 10 * h:
        raise DomainError("point is too close to the boundary for the difference stencil")

    def df(dirmat, to_fiber):
        def ev(delta):
            if to_fiber:
                return f(_rebuild(p, base, fiber + delta, validate=False))
            return f(_rebuild(p, base + delta, fiber, validate=False))

        dx = (ev(h * dirmat) - ev(-h * dirmat)) / (2 * h)
        dy = (ev(1j * h * dirmat) - ev(-1j * h * dirmat)) / (2 * h)
        if which.endswith("_bar"):
            return 0.5 * (dx + 1j * dy)
        return 0.5 * (dx - 1j * dy)

    if which in ("base", "base_bar"):
        out = np.zeros((g, g), dtype=complex)
        for mu, nu, w, e in _sym_coords(g):
            d = w * df(e, False)
            out[mu, nu] = d
            out[nu, mu] = d
        return out
    if which in ("fiber", "fiber_bar"):
        if fiber is None:
            raise DimensionError("point has no fiber variable")
        hh, gg = fiber.shape
        out = np.zeros((gg, hh), dtype=complex)
        for k, l, w, e in _fiber_coords(hh, gg):
            out[l, k] = df(e, True)
        return out
    raise DomainError(f"unknown derivative selector: {which!r}")


# ---------------------------------------------------------------------------
# Laplacians


def _stencil_points(p, base, fiber, d1, d2, h):
    """Evaluate-and-cache helper: point displaced by d1 + d2 (complex deltas)."""
    nb, nf = base, fiber
    for slot, delta in (d1, d2):
        if delta is None:
            continue
        if slot == "base":
            nb = nb + h * delta
        else:
            nf = nf + h * delta
    return _rebuild(p, nb, nf, validate=False)


def _mixed_wirtinger_hessian(f: Callable, p, coords, h2: float) -> np.ndarray:
    """H[a, b] = w_a w_b d^2 f / (d conj(c_a) d c_b) over the given coordinates.

    coords is a list of (slot, weight, direction) with slot "base" or "fiber".
    Uses 4-point cross stencils for distinct real directions and the 3-point
    stencil on the diagonal.
    """
    base, fiber = _point_parts(p)
    f0 = f(p)
    dirs = []
    for slot, w, e in coords:
        dirs.append((slot, e))        # real displacement
        dirs.append((slot, 1j * e))   # imaginary displacement
    n = len(dirs)

    def ev(i, ti, j, tj):
        si, ei = dirs[i]
        sj, ej = dirs[j]
        return f(_stencil_points(p, base, fiber, (si, ti * ei), (sj, tj * ej), h2))

    hr = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i, n):
            if i == j:
                si, ei = dirs[i]
                plus = f(_stencil_points(p, base, fiber, (si, ei), ("base", None), h2))
                minus = f(_stencil_points(p, base, fiber, (si, -ei), ("base", None), h2))
                hr[i, i] = (plus - 2 * f0 + minus) / h2**2
            else:
                val = (ev(i, 1, j, 1) - ev(i, 1, j, -1) - ev(i, -1, j, 1) + ev(i, -1, j, -1)) / (
                    4 * h2**2
                )
                hr[i, j] = val
                hr[j, i] = val

    nc = len(coords)
    out = np.zeros((nc, nc), dtype=complex)
    for a in range(nc):
        xa, ya = 2 * a, 2 * a + 1
        for b in range(nc):
            xb, yb = 2 * b, 2 * b + 1
            dd = 0.25 * (hr[xa, xb] + hr[ya, yb] + 1j * (hr[ya, xb] - hr[xa, yb]))
            out[a, b] = coords[a][1] * coords[b][1] * dd
    return out


def _laplacian_setup(p, with_fiber: bool):
    base, fiber = _point_parts(p)
    g = base.shape[0]
    h2 = FD_SECOND_STEP * max(1.0, point_norm(p))
    if _pd_margin(p) <= 10 * h2:
        raise DomainError("point is too close to the boundary for the difference stencil")
    coords = [("base", w, e) for _, _, w, e in _sym_coords(g)]
    fcoords = []
    if with_fiber:
        if fiber is None:
            raise DimensionError("point has no fiber variable")
        fcoords = [("fiber", w, e) for _, _, w, e in _fiber_coords(*fiber.shape)]
    return coords, fcoords, h2


def laplacian_siegel(f: Callable, p: SiegelPoint, tol: Tolerance = DEFAULT_TOL) -> float:
    """4 trace(Y t(Y dbar) d) evaluated by nested central differences."""
    coords, _, h2 = _laplacian_setup(p, with_fiber=False)
    hess = _mixed_wirtinger_hessian(f, p, coords, h2)
    y = np.imag(_point_parts(p)[0])
    val = 0.0 + 0.0j
    for a, (_, _, ea) in enumerate(coords):
        ye_a = y @ ea @ y
        for b, (_, _, eb) in enumerate(coords):
            val += _tr(ye_a @ eb) * hess[a, b]
    return _real_value(4.0 * val, tol.fd_second_rel, "siegel laplacian")


def laplacian_disk(f: Callable, p: DiskPoint, tol: Tolerance = DEFAULT_TOL) -> float:
    """trace(S t(S dbar) d) with S = I - W conj(W)."""
    coords, _, h2 = _laplacian_setup(p, with_fiber=False)
    hess = _mixed_wirtinger_hessian(f, p, coords, h2)
    s = np.eye(p.g) - p.w @ p.w.conj()
    st = s.T
    val = 0.0 + 0.0j
    for a, (_, _, ea) in enumerate(coords):
        left = s @ ea @ st
        for b, (_, _, eb) in enumerate(coords):
            val += _tr(left @ eb) * hess[a, b]
    return _real_value(val, tol.fd_second_rel, "disk laplacian")


def laplacian_sj(params: MetricParams, f: Callable, p: SiegelJacobiPoint,
                 tol: Tolerance = DEFAULT_TOL) -> float:
    """The (4/A)(base + cross terms) + (4/B)(fiber term) invariant operator."""
    coords, fcoords, h2 = _laplacian_setup(p, with_fiber=True)
    allc = coords + fcoords
    hess = _mixed_wirtinger_hessian(f, p, allc, h2)
    nb = len(coords)
    y = p.base.y
    yi = guarded_inv(y.astype(complex), "Im(omega)")
    vm = p.v
    t_a = 0.0 + 0.0j
    # base-base: trace(Y E_a Y E_b)
    for a, (_, _, ea) in enumerate(coords):
        left = y @ ea @ y
        for b, (_, _, eb) in enumerate(coords):
            t_a += _tr(left @ eb) * hess[a, b]
    # fiber-fiber with V: trace(V Y^-1 t(V) t(F_a) Y F_b)
    for a, (_, _, fa) in enumerate(fcoords):
        left = vm @ yi @ vm.T @ fa.T @ y
        for b, (_, _, fb) in enumerate(fcoords):
            t_a += _tr(left @ fb) * hess[nb + a, nb + b]
    # base(bar)-fiber: trace(V E_a Y F_b)
    for a, (_, _, ea) in enumerate(coords):
        left = vm @ ea @ y
        for b, (_, _, fb) in enumerate(fcoords):
            t_a += _tr(left @ fb) * hess[a, nb + b]
    # fiber(bar)-base: trace(t(V) t(F_a) Y E_b)
    for a, (_, _, fa) in enumerate(fcoords):
        left = vm.T @ fa.T @ y
        for b, (_, _, eb) in enumerate(coords):
            t_a += _tr(left @ eb) * hess[nb + a, b]
    # pure fiber term: trace(Y F_b t(F_a))
    t_b = 0.0 + 0.0j
    for a, (_, _, fa) in enumerate(fcoords):
        for b, (_, _, fb) in enumerate(fcoords):
            t_b += _tr(y @ fb @ fa.T) * hess[nb + a, nb + b]
    val = (4.0 / params.a) * t_a + (4.0 / params.b) * t_b
    return _real_value(val, tol.fd_second_rel, "siegel-jacobi laplacian")


# ---------------------------------------------------------------------------
# volume density and numerical differentials


def volume_density(p: SiegelJacobiPoint) -> float:
    """det(Y)^-(g+h+1), the density of the invariant volume element."""
    det = float(np.linalg.det(p.base.y))
    return det ** (-(p.g + p.h + 1))


def pushforward(map_fn: Callable, p, v: TangentVector, tol: Tolerance = DEFAULT_TOL) -> TangentVector:
    """Directional derivative of a holomorphic map by complex-linear central
    differences; the base part of the result is re-symmetrized."""
    h = FD_FIRST_STEP * max(1.0, point_norm(p)) / max(1.0, v.norm())
    base, fiber = _point_parts(p)
    fiber_delta = None if v.dfiber is None else v.dfiber
    if fiber is not None and fiber_delta is None:
        fiber_delta = np.zeros_like(fiber)
    try:
        plus = map_fn(_rebuild(p, base + h * v.dbase,
                               None if fiber is None else fiber + h * fiber_delta, validate=True))
        minus = map_fn(_rebuild(p, base - h * v.dbase,
                                None if fiber is None else fiber - h * fiber_delta, validate=True))
    except DomainError as exc:
        raise DomainError(f"difference stencil left the domain: {exc}") from exc
    bp, fp = _point_parts(plus)
    bm, fm = _point_parts(minus)
    dbase = (bp - bm) / (2 * h)
    dbase = (dbase + dbase.T) / 2
    dfiber = None if fp is None else (fp - fm) / (2 * h)
    return TangentVector(dbase, dfiber, tol)


def sample_tangent(g: int, h: int | None = None, seed: int = 0, scale: float = 1.0) -> TangentVector:
    """Random tangent vector, deterministic in seed; fiber part iff h given."""
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), 20]))

    def csym():
        s = rng.uniform(-scale, scale, (g, g)) + 1j * rng.uniform(-scale, scale, (g, g))
        return (s + s.T) / 2

    dfiber = None
    if h is not None:
        dfiber = rng.uniform(-scale, scale, (h, g)) + 1j * rng.uniform(-scale, scale, (h, g))
    return TangentVector(csym(), dfiber)


def real_coordinates(p) -> np.ndarray:
    """Flatten a point to its independent real coordinates.

    Order: upper-triangle of Re(base), upper-triangle of Im(base), then
    Re(fiber) and Im(fiber) row-major.
    """
    base, fiber = _point_parts(p)
    g = base.shape[0]
    iu = np.triu_indices(g)
    parts = [np.real(base)[iu], np.imag(base)[iu]]
    if fiber is not None:
        parts += [np.real(fiber).ravel(), np.imag(fiber).ravel()]
    return np.concatenate(parts)


def _from_real_coordinates(p, coords: np.ndarray):
    base, fiber = _point_parts(p)
    g = base.shape[0]
    iu = np.triu_indices(g)
    nsym = len(iu[0])
    re = np.zeros((g, g))
    im = np.zeros((g, g))
    re[iu] = coords[:nsym]
    im[iu] = coords[nsym : 2 * nsym]
    re = re + re.T - np.diag(np.diag(re))
    im = im + im.T - np.diag(np.diag(im))
    nb = 2 * nsym
    nf = None
    if fiber is not None:
        hh, gg = fiber.shape
        k = hh * gg
        nf = coords[nb : nb + k].reshape(hh, gg) + 1j * coords[nb + k : nb + 2 * k].reshape(hh, gg)
    return _rebuild(p, re + 1j * im, nf, validate=False)


def action_jacobian_det(map_fn: Callable, p, tol: Tolerance = DEFAULT_TOL) -> float:
    """|det| of the differential of map_fn in the real coordinates of p."""
    x0 = real_coordinates(p)
    n = x0.size
    h = FD_FIRST_STEP * max(1.0, point_norm(p))
    jac = np.zeros((n, n))
    for k in range(n):
        xp = x0.copy()
        xp[k] += h
        xm = x0.copy()
        xm[k] -= h
        fp = real_coordinates(map_fn(_from_real_coordinates(p, xp)))
        fm = real_coordinates(map_fn(_from_real_coordinates(p, xm)))
        jac[:, k] = (fp - fm) / (2 * h)
    return abs(float(np.linalg.det(jac)))
