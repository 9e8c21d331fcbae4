"""Canonical automorphic factors of the bounded-model Jacobi group.

The factor splits as J = a . b: an additive central part kappa_star (a
summand of automorphy) fed to a character of the additive group of h x h
matrices, and a block part fed to a holomorphic representation of GL(g,C).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .decomp import kc_component
from .groups import GStarJacobiElement
from .numkit import (
    DEFAULT_TOL,
    DimensionError,
    DomainError,
    Tolerance,
    as_cmatrix,
    frob,
    rel_error,
)
from .spaces import DiskJacobiPoint, act_jacobi_disk

__all__ = [
    "IndexMatrix",
    "Representation",
    "chi_character",
    "rho_eval",
    "summand_a",
    "factor_b",
    "j_factor",
    "verify_cocycle",
]

# beyond this the complex exponential overflows double precision
_EXP_LIMIT = 700.0


@dataclass(frozen=True)
class IndexMatrix:
    """A real symmetric h x h index; optionally flagged half-integral / psd."""

    m: np.ndarray
    half_integral: bool = False
    psd: bool = False
    tol: Tolerance = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        m = np.asarray(self.m, dtype=float)
        object.__setattr__(self, "m", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"index matrix must be square, got {m.shape}")
        if frob(m - m.T) > self.tol.algebraic_rel * max(1.0, frob(m)):
            raise DomainError("index matrix must be symmetric")
        if self.half_integral:
            diag = np.diag(m)
            off = 2.0 * (m - np.diag(diag))
            if frob(diag - np.round(diag)) > self.tol.algebraic_rel or \
               frob(off - np.round(off)) > self.tol.algebraic_rel:
                raise DomainError("index matrix is not half-integral")
        if self.psd and np.linalg.eigvalsh(m)[0] < -self.tol.pd_min_eig:
            raise DomainError("index matrix is not positive semidefinite")

    @property
    def h(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True)
class Representation:
    """det^k (one-dimensional) or the standard representation of GL(g,C)."""

    kind: str  # "det_power" or "standard"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("det_power", "standard"):
            raise DomainError(f"unknown representation kind: {self.kind!r}")

    def dimension(self, g: int) -> int:
        return 1 if self.kind == "det_power" else g


def chi_character(idx: IndexMatrix, c, tol: Tolerance = DEFAULT_TOL) -> complex:
    """exp(-2 pi i trace(M c)), a character of the additive group."""
    c = as_cmatrix(c, "c")
    if c.shape != (idx.h, idx.h):
        raise DimensionError(f"expected a {idx.h} x {idx.h} argument, got {c.shape}")
    s = complex(np.trace(idx.m @ c))
    if abs(2.0 * np.pi * np.imag(s)) > _EXP_LIMIT:
        raise DomainError("character exponent out of double-precision range")
    return complex(np.exp(-2j * np.pi * s))


def rho_eval(rep: Representation, p, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Evaluate the representation on an invertible matrix; result is dim x dim."""
    p = as_cmatrix(p, "P")
    if p.shape[0] != p.shape[1]:
        raise DimensionError(f"representation argument must be square, got {p.shape}")
    det = complex(np.linalg.det(p))
    if abs(det) < 1e-300 or not np.isfinite(abs(det)):
        raise DomainError("representation argument is singular")
    if rep.kind == "det_power":
        return np.array([[det**rep.k]], dtype=complex)
    return p.copy()


def summand_a(a: GStarJacobiElement, p: DiskJacobiPoint,
              tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The central coordinate kappa_star; additive under composition."""
    _, _, kappa_star = kc_component(a, p, tol)
    return kappa_star


def factor_b(a: GStarJacobiElement, p: DiskJacobiPoint,
             tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """The two diagonal blocks (P - (PW+Q) d^-1 conj(Q), d); depends only on
    the block part of a and the base coordinate W."""
    k_p, k_lower, _ = kc_component(a, p, tol)
    return k_p, k_lower


def j_factor(idx: IndexMatrix, rep: Representation, a: GStarJacobiElement,
             p: DiskJacobiPoint, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """chi(kappa_star) rho(conj(Q) W + conj(P)), the automorphic factor."""
    if idx.h != a.h:
        raise DimensionError(f"index matrix degree {idx.h} != element h={a.h}")
    _, k_lower, kappa_star = kc_component(a, p, tol)
    return chi_character(idx, kappa_star, tol) * rho_eval(rep, k_lower, tol)


def verify_cocycle(idx: IndexMatrix, rep: Representation, g1: GStarJacobiElement,
                   g2: GStarJacobiElement, p: DiskJacobiPoint,
                   tol: Tolerance = DEFAULT_TOL) -> float:
    """Worst relative residual of the additive cocycle of kappa_star and the
    multiplicative cocycle of the automorphic factor on (g1, g2, p)."""
    from .groups import gstarj_mul

    prod = gstarj_mul(g1, g2, tol)
    moved = act_jacobi_disk(g2, p, tol)

    add_lhs = summand_a(prod, p, tol)
    add_rhs = summand_a(g1, moved, tol) + summand_a(g2, p, tol)
    res_add = rel_error(add_lhs, add_rhs)

    mul_lhs = j_factor(idx, rep, prod, p, tol)
    mul_rhs = j_factor(idx, rep, g1, moved, tol) @ j_factor(idx, rep, g2, p, tol)
    res_mul = rel_error(mul_lhs, mul_rhs)
    return max(res_add, res_mul)
