"""Harish-Chandra decompositions.

For a bounded-model block element the classical factorization into an upper
unipotent, a block diagonal, and a lower unipotent part; for the Jacobi
group the three components of g . (point embedded in the upper unipotent
part), including the central coordinate kappa_star that later feeds the
automorphic factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import (
    BigComplexGroupElement,
    ComplexHeisenbergElement,
    GStarElement,
    GStarJacobiElement,
    big_mul,
    embed_gstarj,
)
from .numkit import (
    DEFAULT_TOL,
    ConsistencyError,
    Tolerance,
    frob,
    guarded_rsolve,
    rel_error,
    symmetry_defect,
)
from .spaces import DiskJacobiPoint, DiskPoint, act_jacobi_disk

__all__ = [
    "HCFactors",
    "JacobiHCFactors",
    "hc_decompose_gstar",
    "pplus_component",
    "kc_component",
    "pminus_component",
    "decompose_full",
    "component_residuals",
    "reconstruction_residual",
    "embed_disk_jacobi_point",
]


@dataclass(frozen=True)
class HCFactors:
    """Factors [[I, pplus_w], [0, I]] [[k_p, 0], [0, k_lower]] [[I, 0], [pminus_w, I]]."""

    pplus_w: np.ndarray
    k_p: np.ndarray
    k_lower: np.ndarray
    pminus_w: np.ndarray

    def reconstruct(self) -> np.ndarray:
        g = self.k_p.shape[0]
        i = np.eye(g)
        z = np.zeros((g, g))
        up = np.block([[i, self.pplus_w], [z, i]])
        mid = np.block([[self.k_p, z], [z, self.k_lower]])
        low = np.block([[i, z], [self.pminus_w, i]])
        return up @ mid @ low


@dataclass(frozen=True)
class JacobiHCFactors:
    """The three components of a Jacobi group element applied to an embedded point."""

    hc: HCFactors
    pplus_eta: np.ndarray
    pminus_xi: np.ndarray
    kappa_star: np.ndarray

    def factors(self, h: int) -> tuple[BigComplexGroupElement, ...]:
        g = self.hc.k_p.shape[0]
        i = np.eye(g)
        z = np.zeros((g, g))
        zf = np.zeros((h, g), dtype=complex)
        zc = np.zeros((h, h), dtype=complex)
        up = BigComplexGroupElement(
            np.block([[i, self.hc.pplus_w], [z, i]]),
            ComplexHeisenbergElement(zf, self.pplus_eta, zc, validate=False),
            validate=False,
        )
        mid = BigComplexGroupElement(
            np.block([[self.hc.k_p, z], [z, self.hc.k_lower]]),
            ComplexHeisenbergElement(zf, zf, self.kappa_star, validate=False),
            validate=False,
        )
        low = BigComplexGroupElement(
            np.block([[i, z], [self.hc.pminus_w, i]]),
            ComplexHeisenbergElement(self.pminus_xi, zf, zc, validate=False),
            validate=False,
        )
        return up, mid, low


def hc_decompose_gstar(gs: GStarElement, tol: Tolerance = DEFAULT_TOL) -> HCFactors:
    """Factor [[P, Q], [conj Q, conj P]] through the origin.

    The upper coordinate Q conj(P)^-1 lands in the bounded domain; the
    factorization is validated by reconstruction.
    """
    p, q = gs.p, gs.q
    pbar = p.conj()
    qbar = q.conj()
    pplus_w = guarded_rsolve(q, pbar, "conj(P)")
    pminus_w = np.linalg.solve(pbar, qbar)
    k_p = p - pplus_w @ qbar
    factors = HCFactors(pplus_w=pplus_w, k_p=k_p, k_lower=pbar, pminus_w=pminus_w)
    res = rel_error(factors.reconstruct(), gs.block())
    if res > tol.algebraic_rel:
        raise ConsistencyError(f"Harish-Chandra reconstruction residual {res:.3e}")
    if symmetry_defect(pplus_w) > tol.algebraic_rel:
        raise ConsistencyError("Q conj(P)^-1 is not symmetric")
    DiskPoint((pplus_w + pplus_w.T) / 2, tol)  # membership check
    return factors


def embed_disk_jacobi_point(p: DiskJacobiPoint) -> BigComplexGroupElement:
    """Identify (W, eta) with ([[I, W], [0, I]], (0, eta; 0))."""
    g, h = p.g, p.h
    i = np.eye(g)
    z = np.zeros((g, g))
    zf = np.zeros((h, g), dtype=complex)
    return BigComplexGroupElement(
        np.block([[i, p.w], [z, i]]),
        ComplexHeisenbergElement(zf, p.eta, np.zeros((h, h), dtype=complex), validate=False),
        validate=False,
    )


def pplus_component(a: GStarJacobiElement, p: DiskJacobiPoint,
                    tol: Tolerance = DEFAULT_TOL) -> DiskJacobiPoint:
    """Upper-unipotent coordinates of a . (embedded point).

    By construction this coincides with the transitive action on the
    Siegel-Jacobi disk; both code paths exist and are cross-checked in the
    test suite.
    """
    return act_jacobi_disk(a, p, tol)


def _common(a: GStarJacobiElement, p: DiskJacobiPoint):
    lam, mu, kap = a.hc.xi, a.hc.eta, a.hc.zeta
    qbar = a.gs.q.conj()
    den = qbar @ p.w + a.gs.p.conj()
    y = p.eta + lam @ p.w + mu
    return lam, mu, kap, qbar, den, y


def kc_component(a: GStarJacobiElement, p: DiskJacobiPoint,
                 tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Block-diagonal component: (P - (PW+Q) d^-1 conj(Q), d, kappa_star)
    with d = conj(Q) W + conj(P).

    kappa_star is computed from the simplified formula
        kappa + lam t(eta) + y t(lam) - y d^-1 conj(Q) t(y),  y = eta + lam W + mu,
    and cross-checked against the transposed variant, which agrees exactly
    when d^-1 conj(Q) is symmetric.
    """
    lam, mu, kap, qbar, den, y = _common(a, p)
    wprime = guarded_rsolve(a.gs.p @ p.w + a.gs.q, den, "conj(Q) W + conj(P)")
    k_p = a.gs.p - wprime @ qbar
    sym_block = guarded_rsolve(qbar.T, den.T, "t(conj(Q) W + conj(P))").T  # d^-1 conj(Q)
    kappa_base = kap + lam @ p.eta.T + y @ lam.T
    kappa_star = kappa_base - y @ sym_block @ y.T
    kappa_alt = kappa_base - y @ qbar.T @ np.linalg.solve(den.T, y.T)
    if frob(kappa_star - kappa_alt) > tol.algebraic_rel * max(1.0, frob(kappa_star)):
        raise ConsistencyError("the two kappa_star expressions disagree")
    return k_p, den, kappa_star


def pminus_component(a: GStarJacobiElement, p: DiskJacobiPoint,
                     tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Lower-unipotent component: (d^-1 conj(Q), lam - y d^-1 conj(Q))."""
    lam, mu, kap, qbar, den, y = _common(a, p)
    pminus_w = guarded_rsolve(qbar.T, den.T, "t(conj(Q) W + conj(P))").T
    if symmetry_defect(pminus_w) > tol.algebraic_rel:
        raise ConsistencyError("d^-1 conj(Q) is not symmetric")
    return pminus_w, lam - y @ pminus_w


def decompose_full(a: GStarJacobiElement, p: DiskJacobiPoint,
                   tol: Tolerance = DEFAULT_TOL) -> JacobiHCFactors:
    """All three components of a . (embedded point), validated by rebuilding
    the product in the ambient group."""
    moved = pplus_component(a, p, tol)
    k_p, k_lower, kappa_star = kc_component(a, p, tol)
    pminus_w, pminus_xi = pminus_component(a, p, tol)
    out = JacobiHCFactors(
        hc=HCFactors(pplus_w=moved.w, k_p=k_p, k_lower=k_lower, pminus_w=pminus_w),
        pplus_eta=moved.eta,
        pminus_xi=pminus_xi,
        kappa_star=kappa_star,
    )
    res = reconstruction_residual(a, p, out)
    if res > tol.algebraic_rel:
        raise ConsistencyError(f"component reconstruction residual {res:.3e}")
    return out


def component_residuals(a: GStarJacobiElement, p: DiskJacobiPoint) -> dict:
    """Raw residuals of the decomposition identities, without raising.

    Returns reconstruction (triple product vs embedded product), the
    symmetry defect of the lower-unipotent coordinate, and the relative
    disagreement of the two kappa_star expressions.
    """
    lam, mu, kap, qbar, den, y = _common(a, p)
    wprime = guarded_rsolve(a.gs.p @ p.w + a.gs.q, den, "conj(Q) W + conj(P)")
    etap = guarded_rsolve(y, den, "conj(Q) W + conj(P)")
    pminus_w = guarded_rsolve(qbar.T, den.T, "t(conj(Q) W + conj(P))").T
    kappa_base = kap + lam @ p.eta.T + y @ lam.T
    kappa_star = kappa_base - y @ pminus_w @ y.T
    kappa_alt = kappa_base - y @ qbar.T @ np.linalg.solve(den.T, y.T)
    factors = JacobiHCFactors(
        hc=HCFactors(
            pplus_w=(wprime + wprime.T) / 2,
            k_p=a.gs.p - wprime @ qbar,
            k_lower=den,
            pminus_w=pminus_w,
        ),
        pplus_eta=etap,
        pminus_xi=lam - y @ pminus_w,
        kappa_star=kappa_star,
    )
    return {
        "reconstruction": reconstruction_residual(a, p, factors),
        "pminus_symmetry": symmetry_defect(pminus_w),
        "kappa_agreement": frob(kappa_star - kappa_alt) / max(1.0, frob(kappa_star)),
    }


def reconstruction_residual(a: GStarJacobiElement, p: DiskJacobiPoint,
                            factors: JacobiHCFactors) -> float:
    """Relative residual of (up mid low) against a . (embedded point)."""
    up, mid, low = factors.factors(p.h)
    rebuilt = big_mul(big_mul(up, mid), low)
    target = big_mul(embed_gstarj(a), embed_disk_jacobi_point(p))
    return max(
        rel_error(rebuilt.block, target.block),
        rel_error(rebuilt.hc.xi, target.hc.xi),
        rel_error(rebuilt.hc.eta, target.hc.eta),
        rel_error(rebuilt.hc.zeta, target.hc.zeta),
    )
