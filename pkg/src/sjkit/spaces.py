"""The four homogeneous domains and the maps between them.

Points of the upper-half-space model carry a symmetric matrix with positive
definite imaginary part; points of the bounded model carry a symmetric W with
I - W conj(W) positive definite.  Both extend by an h x g fiber coordinate.
Actions re-symmetrize their output and record the defect, which must stay
below the algebraic tolerance.
"""

from __future__ import annotations

import numpy as np

from .groups import (
    GStarElement,
    GStarJacobiElement,
    JacobiElement,
    SymplecticMatrix,
    theta,
)
from .numkit import (
    DEFAULT_TOL,
    DimensionError,
    DomainError,
    Tolerance,
    as_cmatrix,
    fast_mode,
    guarded_rsolve,
    hermitian_pd_margin,
    rel_error,
    symmetry_defect,
)

__all__ = [
    "SiegelPoint",
    "DiskPoint",
    "SiegelJacobiPoint",
    "DiskJacobiPoint",
    "act_siegel",
    "act_disk",
    "act_jacobi",
    "act_jacobi_disk",
    "cayley",
    "cayley_inv",
    "partial_cayley",
    "partial_cayley_inv",
    "check_compatibility",
    "sample_point",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _check_square_symmetric(m: np.ndarray, name: str, tol: Tolerance) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be square, got {m.shape}")
    if symmetry_defect(m) > tol.algebraic_rel:
        raise DomainError(f"{name} is not symmetric within tolerance")


class SiegelPoint:
    """A symmetric complex matrix with positive definite imaginary part."""

    __slots__ = ("omega",)

    def __init__(self, omega, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        self.omega = _freeze(as_cmatrix(omega, "omega"))
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        _check_square_symmetric(self.omega, "omega", tol)
        if self.pd_margin(tol) <= tol.pd_min_eig:
            raise DomainError("Im(omega) is not positive definite")

    def pd_margin(self, tol: Tolerance = DEFAULT_TOL) -> float:
        return hermitian_pd_margin(self.y.astype(complex), tol)

    @property
    def g(self) -> int:
        return self.omega.shape[0]

    @property
    def x(self) -> np.ndarray:
        return np.real(self.omega)

    @property
    def y(self) -> np.ndarray:
        return np.imag(self.omega)

    def __repr__(self):
        return f"SiegelPoint(g={self.g})"


class DiskPoint:
    """A symmetric complex matrix W with I - W conj(W) positive definite."""

    __slots__ = ("w",)

    def __init__(self, w, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        self.w = _freeze(as_cmatrix(w, "w"))
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        _check_square_symmetric(self.w, "w", tol)
        if self.pd_margin(tol) <= tol.pd_min_eig:
            raise DomainError("I - W conj(W) is not positive definite")

    def pd_margin(self, tol: Tolerance = DEFAULT_TOL) -> float:
        g = self.w.shape[0]
        m = np.eye(g) - self.w @ self.w.conj()
        # symmetrize away the roundoff skew before the Hermitian eigensolve
        m = (m + m.conj().T) / 2
        return hermitian_pd_margin(m, tol)

    @property
    def g(self) -> int:
        return self.w.shape[0]

    def __repr__(self):
        return f"DiskPoint(g={self.g})"


class SiegelJacobiPoint:
    """A SiegelPoint together with an h x g complex fiber coordinate."""

    __slots__ = ("base", "z")

    def __init__(self, base: SiegelPoint, z, tol: Tolerance = DEFAULT_TOL):
        if not isinstance(base, SiegelPoint):
            base = SiegelPoint(base, tol)
        self.base = base
        self.z = _freeze(as_cmatrix(z, "z"))
        if self.z.shape[1] != base.g:
            raise DimensionError(f"z must have {base.g} columns, got {self.z.shape}")

    @property
    def omega(self) -> np.ndarray:
        return self.base.omega

    @property
    def g(self) -> int:
        return self.base.g

    @property
    def h(self) -> int:
        return self.z.shape[0]

    @property
    def u(self) -> np.ndarray:
        return np.real(self.z)

    @property
    def v(self) -> np.ndarray:
        return np.imag(self.z)

    def __repr__(self):
        return f"SiegelJacobiPoint(g={self.g}, h={self.h})"


class DiskJacobiPoint:
    """A DiskPoint together with an h x g complex fiber coordinate."""

    __slots__ = ("base", "eta")

    def __init__(self, base: DiskPoint, eta, tol: Tolerance = DEFAULT_TOL):
        if not isinstance(base, DiskPoint):
            base = DiskPoint(base, tol)
        self.base = base
        self.eta = _freeze(as_cmatrix(eta, "eta"))
        if self.eta.shape[1] != base.g:
            raise DimensionError(f"eta must have {base.g} columns, got {self.eta.shape}")

    @property
    def w(self) -> np.ndarray:
        return self.base.w

    @property
    def g(self) -> int:
        return self.base.g

    @property
    def h(self) -> int:
        return self.eta.shape[0]

    def __repr__(self):
        return f"DiskJacobiPoint(g={self.g}, h={self.h})"


# ---------------------------------------------------------------------------
# actions


def _symmetrized(m: np.ndarray, tol: Tolerance, what: str) -> np.ndarray:
    defect = symmetry_defect(m)
    if defect > tol.algebraic_rel:
        raise DomainError(f"{what}: output symmetry defect {defect:.3e} exceeds tolerance")
    return (m + m.T) / 2


def act_siegel(m: SymplecticMatrix, p: SiegelPoint, tol: Tolerance = DEFAULT_TOL) -> SiegelPoint:
    """Fractional linear action (A omega + B)(C omega + D)^-1."""
    if m.g != p.g:
        raise DimensionError(f"degree mismatch: element g={m.g}, point g={p.g}")
    den = m.c @ p.omega + m.d
    om = guarded_rsolve(m.a @ p.omega + m.b, den, "C omega + D")
    return SiegelPoint(_symmetrized(om, tol, "siegel action"), tol)


def act_disk(gs: GStarElement, p: DiskPoint, tol: Tolerance = DEFAULT_TOL) -> DiskPoint:
    """Fractional linear action (P W + Q)(conj(Q) W + conj(P))^-1."""
    if gs.g != p.g:
        raise DimensionError(f"degree mismatch: element g={gs.g}, point g={p.g}")
    den = gs.q.conj() @ p.w + gs.p.conj()
    w = guarded_rsolve(gs.p @ p.w + gs.q, den, "conj(Q) W + conj(P)")
    return DiskPoint(_symmetrized(w, tol, "disk action"), tol)


def act_jacobi(a: JacobiElement, p: SiegelJacobiPoint,
               tol: Tolerance = DEFAULT_TOL) -> SiegelJacobiPoint:
    """(M omega, (Z + lam omega + mu)(C omega + D)^-1); kappa plays no role."""
    if (a.g, a.h) != (p.g, p.h):
        raise DimensionError(f"(g, h) mismatch: ({a.g}, {a.h}) vs ({p.g}, {p.h})")
    base = act_siegel(a.m, p.base, tol)
    den = a.m.c @ p.omega + a.m.d
    z = guarded_rsolve(p.z + a.hs.lam @ p.omega + a.hs.mu, den, "C omega + D")
    return SiegelJacobiPoint(base, z, tol)


def act_jacobi_disk(a: GStarJacobiElement, p: DiskJacobiPoint,
                    tol: Tolerance = DEFAULT_TOL) -> DiskJacobiPoint:
    """((P W + Q) d^-1, (eta + xi W + mu) d^-1) with d = conj(Q) W + conj(P)."""
    if (a.g, a.h) != (p.g, p.h):
        raise DimensionError(f"(g, h) mismatch: ({a.g}, {a.h}) vs ({p.g}, {p.h})")
    base = act_disk(a.gs, p.base, tol)
    den = a.gs.q.conj() @ p.w + a.gs.p.conj()
    eta = guarded_rsolve(p.eta + a.hc.xi @ p.w + a.hc.eta, den, "conj(Q) W + conj(P)")
    return DiskJacobiPoint(base, eta, tol)


# ---------------------------------------------------------------------------
# Cayley transforms


def cayley(p: DiskPoint, tol: Tolerance = DEFAULT_TOL) -> SiegelPoint:
    """W -> i (I + W)(I - W)^-1."""
    i = np.eye(p.g)
    om = 1j * guarded_rsolve(i + p.w, i - p.w, "I - W")
    return SiegelPoint(_symmetrized(om, tol, "cayley"), tol)


def cayley_inv(p: SiegelPoint, tol: Tolerance = DEFAULT_TOL) -> DiskPoint:
    """omega -> (omega - iI)(omega + iI)^-1."""
    i = np.eye(p.g)
    w = guarded_rsolve(p.omega - 1j * i, p.omega + 1j * i, "omega + iI")
    return DiskPoint(_symmetrized(w, tol, "inverse cayley"), tol)


def partial_cayley(p: DiskJacobiPoint, tol: Tolerance = DEFAULT_TOL) -> SiegelJacobiPoint:
    """(W, eta) -> (i (I + W)(I - W)^-1, 2i eta (I - W)^-1)."""
    base = cayley(p.base, tol)
    z = 2j * guarded_rsolve(p.eta, np.eye(p.g) - p.w, "I - W")
    return SiegelJacobiPoint(base, z, tol)


def partial_cayley_inv(p: SiegelJacobiPoint, tol: Tolerance = DEFAULT_TOL) -> DiskJacobiPoint:
    """(omega, Z) -> ((omega - iI)(omega + iI)^-1, Z (omega + iI)^-1)."""
    base = cayley_inv(p.base, tol)
    eta = guarded_rsolve(p.z, p.omega + 1j * np.eye(p.g), "omega + iI")
    return DiskJacobiPoint(base, eta, tol)


def check_compatibility(a: JacobiElement, p: DiskJacobiPoint,
                        tol: Tolerance = DEFAULT_TOL) -> float:
    """Residual of the compatibility identity between the two models.

    Compares acting upstairs after transforming against transforming after
    acting downstairs (through theta); returns the worse of the base and
    fiber relative residuals.
    """
    lhs = act_jacobi(a, partial_cayley(p, tol), tol)
    rhs = partial_cayley(act_jacobi_disk(theta(a), p, tol), tol)
    return max(rel_error(lhs.omega, rhs.omega), rel_error(lhs.z, rhs.z))


# ---------------------------------------------------------------------------
# sampling


_DISK_RADIUS = 0.9


def sample_point(kind: str, g: int, h: int = 1, seed: int = 0, scale: float = 1.0):
    """Draw a random point of the requested domain, deterministic in seed.

    kind is one of siegel, disk, siegel_jacobi, disk_jacobi.  Disk bases are
    scaled to spectral norm < 0.9; Siegel bases get Im >= 0.1 I.
    """
    if kind not in _KIND_TAG:
        raise DomainError(f"unknown point kind: {kind!r}")
    if g < 1 or h < 1:
        raise DimensionError("g and h must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence([int(seed), _KIND_TAG[kind]]))

    def sym(n):
        s = rng.uniform(-scale, scale, (n, n))
        return (s + s.T) / 2

    def fiber():
        return rng.uniform(-scale, scale, (h, g)) + 1j * rng.uniform(-scale, scale, (h, g))

    def disk_base():
        s = sym(g) + 1j * sym(g)
        return DiskPoint(_DISK_RADIUS * s / (1 + np.linalg.norm(s, 2)))

    def siegel_base():
        r = rng.uniform(-scale, scale, (g, g))
        return SiegelPoint(sym(g) + 1j * (r.T @ r + 0.1 * np.eye(g)))

    if kind == "siegel":
        return siegel_base()
    if kind == "disk":
        return disk_base()
    if kind == "siegel_jacobi":
        return SiegelJacobiPoint(siegel_base(), fiber())
    if kind == "disk_jacobi":
        return DiskJacobiPoint(disk_base(), fiber())
    raise AssertionError("unreachable")


_KIND_TAG = {"siegel": 10, "disk": 11, "siegel_jacobi": 12, "disk_jacobi": 13}
