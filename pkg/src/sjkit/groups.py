"""Group elements and group laws.

Covers the real symplectic group, the real and complexified Heisenberg
groups, the Jacobi group and its bounded-model conjugate, the semidirect
product SL(2g,C) x H_C, the Cayley conjugations, and seeded random sampling
of all of them.  The conjugated blocks are always stored as the upper half
(P, Q); the lower row (conj Q, conj P) is implied by the structure.
"""

from __future__ import annotations

import numpy as np

from .numkit import (
    DEFAULT_TOL,
    ConsistencyError,
    DimensionError,
    DomainError,
    Tolerance,
    as_cmatrix,
    fast_mode,
    frob,
    rel_error,
)

__all__ = [
    "SymplecticMatrix",
    "HeisenbergElement",
    "JacobiElement",
    "GStarElement",
    "ComplexHeisenbergElement",
    "GStarJacobiElement",
    "BigComplexGroupElement",
    "symplectic_j",
    "cayley_matrix",
    "heisenberg_mul",
    "heisenberg_identity",
    "jacobi_mul",
    "jacobi_inv",
    "jacobi_identity",
    "big_mul",
    "gstarj_mul",
    "gstarj_inv",
    "gstarj_identity",
    "conjugate_by_T",
    "theta",
    "embed_sp_gph",
    "embed_gstarj",
    "tstar_conjugate_oracle",
    "sample_element",
]


def symplectic_j(g: int) -> np.ndarray:
    """The standard symplectic form [[0, I], [-I, 0]] of degree g."""
    z = np.zeros((g, g))
    i = np.eye(g)
    return np.block([[z, i], [-i, z]]).astype(np.complex128)


def cayley_matrix(n: int) -> np.ndarray:
    """The unitary 2n x 2n matrix (1/sqrt 2) [[I, I], [iI, -iI]]."""
    i = np.eye(n)
    return np.block([[i, i], [1j * i, -1j * i]]) / np.sqrt(2.0)


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _require_real(a: np.ndarray, name: str, tol: Tolerance) -> None:
    if frob(np.imag(a)) > tol.algebraic_rel * max(1.0, frob(a)):
        raise DomainError(f"{name} must be real")


class SymplecticMatrix:
    """A real 2g x 2g matrix M with t(M) J M = J."""

    __slots__ = ("m", "g")

    def __init__(self, m, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        m = as_cmatrix(m, "symplectic matrix")
        if m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise DimensionError(f"expected a 2g x 2g matrix, got {m.shape}")
        self.m = _freeze(m)
        self.g = m.shape[0] // 2
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        _require_real(self.m, "symplectic matrix", tol)
        j = symplectic_j(self.g)
        if rel_error(self.m.T @ j @ self.m, j) > tol.algebraic_rel:
            raise DomainError("matrix is not symplectic within tolerance")

    @property
    def a(self) -> np.ndarray:
        return self.m[: self.g, : self.g]

    @property
    def b(self) -> np.ndarray:
        return self.m[: self.g, self.g :]

    @property
    def c(self) -> np.ndarray:
        return self.m[self.g :, : self.g]

    @property
    def d(self) -> np.ndarray:
        return self.m[self.g :, self.g :]

    def inv(self) -> "SymplecticMatrix":
        # M^-1 = [[tD, -tB], [-tC, tA]], exact for symplectic M
        a, b, c, d = self.a, self.b, self.c, self.d
        mi = np.block([[d.T, -b.T], [-c.T, a.T]])
        return SymplecticMatrix(mi, validate=False)

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls(np.eye(2 * g), validate=False)

    def __repr__(self):
        return f"SymplecticMatrix(g={self.g})"


class HeisenbergElement:
    """A triple (lam, mu; kappa) of real matrices with kappa + mu t(lam) symmetric."""

    __slots__ = ("lam", "mu", "kappa", "g", "h")

    def __init__(self, lam, mu, kappa, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        self.lam = _freeze(np.asarray(lam, dtype=float))
        self.mu = _freeze(np.asarray(mu, dtype=float))
        self.kappa = _freeze(np.asarray(kappa, dtype=float))
        if self.lam.ndim != 2 or self.mu.shape != self.lam.shape:
            raise DimensionError("lam and mu must be h x g matrices of equal shape")
        self.h, self.g = self.lam.shape
        if self.kappa.shape != (self.h, self.h):
            raise DimensionError(f"kappa must be {self.h} x {self.h}, got {self.kappa.shape}")
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        s = self.kappa + self.mu @ self.lam.T
        if frob(s - s.T) > tol.algebraic_rel * max(1.0, frob(s)):
            raise DomainError("kappa + mu t(lam) is not symmetric")

    @classmethod
    def identity(cls, g: int, h: int) -> "HeisenbergElement":
        z = np.zeros((h, g))
        return cls(z, z, np.zeros((h, h)), validate=False)

    def __repr__(self):
        return f"HeisenbergElement(g={self.g}, h={self.h})"


class JacobiElement:
    """An element (M, (lam, mu; kappa)) of the semidirect product group."""

    __slots__ = ("m", "hs")

    def __init__(self, m: SymplecticMatrix, hs: HeisenbergElement):
        if m.g != hs.g:
            raise DimensionError(f"degree mismatch: symplectic g={m.g}, Heisenberg g={hs.g}")
        self.m = m
        self.hs = hs

    @property
    def g(self) -> int:
        return self.m.g

    @property
    def h(self) -> int:
        return self.hs.h

    @classmethod
    def identity(cls, g: int, h: int) -> "JacobiElement":
        return cls(SymplecticMatrix.identity(g), HeisenbergElement.identity(g, h))

    def __repr__(self):
        return f"JacobiElement(g={self.g}, h={self.h})"


class GStarElement:
    """Upper blocks (P, Q) of a matrix [[P, Q], [conj Q, conj P]] satisfying
    t(P) conj(P) - t(conj Q) Q = I and t(P) conj(Q) = t(conj Q) P."""

    __slots__ = ("p", "q", "g")

    def __init__(self, p, q, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        self.p = _freeze(as_cmatrix(p, "P"))
        self.q = _freeze(as_cmatrix(q, "Q"))
        if self.p.shape[0] != self.p.shape[1] or self.p.shape != self.q.shape:
            raise DimensionError("P and Q must be square matrices of equal size")
        self.g = self.p.shape[0]
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        p, q = self.p, self.q
        if rel_error(p.T @ p.conj() - q.conj().T @ q, np.eye(self.g)) > tol.algebraic_rel:
            raise DomainError("t(P) conj(P) - t(conj Q) Q != I")
        lhs = p.T @ q.conj()
        if frob(lhs - q.conj().T @ p) > tol.algebraic_rel * max(1.0, frob(lhs)):
            raise DomainError("t(P) conj(Q) != t(conj Q) P")

    def block(self) -> np.ndarray:
        """The full 2g x 2g matrix [[P, Q], [conj Q, conj P]]."""
        return np.block([[self.p, self.q], [self.q.conj(), self.p.conj()]])

    @classmethod
    def identity(cls, g: int) -> "GStarElement":
        return cls(np.eye(g), np.zeros((g, g)), validate=False)

    def __repr__(self):
        return f"GStarElement(g={self.g})"


class ComplexHeisenbergElement:
    """A triple (xi, eta; zeta) of complex matrices with zeta + eta t(xi) symmetric."""

    __slots__ = ("xi", "eta", "zeta", "g", "h")

    def __init__(self, xi, eta, zeta, tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        self.xi = _freeze(as_cmatrix(xi, "xi"))
        self.eta = _freeze(as_cmatrix(eta, "eta"))
        self.zeta = _freeze(as_cmatrix(zeta, "zeta"))
        if self.eta.shape != self.xi.shape:
            raise DimensionError("xi and eta must have equal shape")
        self.h, self.g = self.xi.shape
        if self.zeta.shape != (self.h, self.h):
            raise DimensionError(f"zeta must be {self.h} x {self.h}, got {self.zeta.shape}")
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        s = self.zeta + self.eta @ self.xi.T
        if frob(s - s.T) > tol.algebraic_rel * max(1.0, frob(s)):
            raise DomainError("zeta + eta t(xi) is not symmetric")

    @classmethod
    def identity(cls, g: int, h: int) -> "ComplexHeisenbergElement":
        z = np.zeros((h, g), dtype=complex)
        return cls(z, z, np.zeros((h, h), dtype=complex), validate=False)

    def __repr__(self):
        return f"ComplexHeisenbergElement(g={self.g}, h={self.h})"


class GStarJacobiElement:
    """Bounded-model Jacobi group element: a GStarElement together with a
    complex Heisenberg triple of the constrained form (xi, conj xi; i kappa),
    kappa real."""

    __slots__ = ("gs", "hc")

    def __init__(self, gs: GStarElement, hc: ComplexHeisenbergElement,
                 tol: Tolerance = DEFAULT_TOL, validate: bool = True):
        if gs.g != hc.g:
            raise DimensionError(f"degree mismatch: blocks g={gs.g}, Heisenberg g={hc.g}")
        self.gs = gs
        self.hc = hc
        if validate and not fast_mode():
            self.validate(tol)

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        scale = max(1.0, frob(self.hc.xi), frob(self.hc.zeta))
        if frob(self.hc.eta - self.hc.xi.conj()) > tol.algebraic_rel * scale:
            raise DomainError("eta != conj(xi)")
        if frob(np.real(self.hc.zeta)) > tol.algebraic_rel * scale:
            raise DomainError("zeta is not i * (real kappa)")

    @property
    def g(self) -> int:
        return self.gs.g

    @property
    def h(self) -> int:
        return self.hc.h

    @property
    def kappa(self) -> np.ndarray:
        """The real matrix kappa with central part zeta = i kappa."""
        return np.imag(self.hc.zeta)

    @classmethod
    def identity(cls, g: int, h: int) -> "GStarJacobiElement":
        return cls(GStarElement.identity(g), ComplexHeisenbergElement.identity(g, h),
                   validate=False)

    def __repr__(self):
        return f"GStarJacobiElement(g={self.g}, h={self.h})"


class BigComplexGroupElement:
    """An element (block, (xi, eta; zeta)) of SL(2g,C) x H_C (semidirect)."""

    __slots__ = ("block", "hc", "g")

    def __init__(self, block, hc: ComplexHeisenbergElement, validate: bool = True):
        self.block = _freeze(as_cmatrix(block, "block"))
        n = self.block.shape[0]
        if self.block.shape[1] != n or n % 2:
            raise DimensionError(f"block must be 2g x 2g, got {self.block.shape}")
        self.g = n // 2
        if hc.g != self.g:
            raise DimensionError(f"Heisenberg width {hc.g} != block degree {self.g}")
        self.hc = hc
        if validate and not fast_mode():
            if abs(np.linalg.det(self.block)) < 1e-300:
                raise DomainError("block matrix is singular")

    @classmethod
    def identity(cls, g: int, h: int) -> "BigComplexGroupElement":
        return cls(np.eye(2 * g), ComplexHeisenbergElement.identity(g, h), validate=False)

    def __repr__(self):
        return f"BigComplexGroupElement(g={self.g}, h={self.hc.h})"


# ---------------------------------------------------------------------------
# group laws


def _check_gh(a, b) -> None:
    if (a.g, a.h) != (b.g, b.h):
        raise DimensionError(f"(g, h) mismatch: ({a.g}, {a.h}) vs ({b.g}, {b.h})")


def heisenberg_mul(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    """(lam, mu; kappa)(lam', mu'; kappa') with central twist lam t(mu') - mu t(lam')."""
    _check_gh(a, b)
    kappa = a.kappa + b.kappa + a.lam @ b.mu.T - a.mu @ b.lam.T
    return HeisenbergElement(a.lam + b.lam, a.mu + b.mu, kappa)


def heisenberg_identity(g: int, h: int) -> HeisenbergElement:
    return HeisenbergElement.identity(g, h)


def jacobi_mul(a: JacobiElement, b: JacobiElement) -> JacobiElement:
    """Semidirect product: the Heisenberg part of a is first pushed through
    the symplectic part of b via (lam~, mu~) = (lam, mu) M'."""
    _check_gh(a, b)
    lm = np.hstack([a.hs.lam, a.hs.mu]) @ np.real(b.m.m)
    lt, mt = lm[:, : a.g], lm[:, a.g :]
    kappa = a.hs.kappa + b.hs.kappa + lt @ b.hs.mu.T - mt @ b.hs.lam.T
    return JacobiElement(
        SymplecticMatrix(np.real(a.m.m @ b.m.m)),
        HeisenbergElement(lt + b.hs.lam, mt + b.hs.mu, kappa),
    )


def jacobi_inv(a: JacobiElement) -> JacobiElement:
    mi = a.m.inv()
    lm = np.hstack([a.hs.lam, a.hs.mu]) @ np.real(mi.m)
    lt, mt = lm[:, : a.g], lm[:, a.g :]
    kappa = -a.hs.kappa + lt @ mt.T - mt @ lt.T
    return JacobiElement(mi, HeisenbergElement(-lt, -mt, kappa))


def jacobi_identity(g: int, h: int) -> JacobiElement:
    return JacobiElement.identity(g, h)


def big_mul(a: BigComplexGroupElement, b: BigComplexGroupElement) -> BigComplexGroupElement:
    """Product in SL(2g,C) x H_C with (xi~, eta~) = (xi, eta) block(b)."""
    if a.g != b.g or a.hc.h != b.hc.h:
        raise DimensionError("dimension mismatch in big group product")
    g = a.g
    pp, qp = b.block[:g, :g], b.block[:g, g:]
    rp, sp = b.block[g:, :g], b.block[g:, g:]
    xit = a.hc.xi @ pp + a.hc.eta @ rp
    ett = a.hc.xi @ qp + a.hc.eta @ sp
    zeta = a.hc.zeta + b.hc.zeta + xit @ b.hc.eta.T - ett @ b.hc.xi.T
    hc = ComplexHeisenbergElement(xit + b.hc.xi, ett + b.hc.eta, zeta)
    return BigComplexGroupElement(a.block @ b.block, hc)


def embed_gstarj(a: GStarJacobiElement) -> BigComplexGroupElement:
    """Forget the constraints: view a G_* Jacobi element inside SL(2g,C) x H_C."""
    return BigComplexGroupElement(a.gs.block(), a.hc, validate=False)


def gstarj_mul(a: GStarJacobiElement, b: GStarJacobiElement,
               tol: Tolerance = DEFAULT_TOL) -> GStarJacobiElement:
    """Multiply in the ambient group and re-read the constrained form.

    Closure holds in exact arithmetic, so a violation beyond tolerance is
    reported as a consistency error rather than repaired.
    """
    _check_gh(a, b)
    g = a.g
    prod = big_mul(embed_gstarj(a), embed_gstarj(b))
    p, q = prod.block[:g, :g], prod.block[:g, g:]
    lower = prod.block[g:, :]
    upper_conj = np.hstack([q.conj(), p.conj()])
    if rel_error(lower, upper_conj) > tol.algebraic_rel:
        raise ConsistencyError("product left the (P, Q; conj Q, conj P) block form")
    try:
        return GStarJacobiElement(GStarElement(p, q, tol), prod.hc, tol)
    except DomainError as exc:
        raise ConsistencyError(f"product violates closure: {exc}") from exc


def gstarj_inv(a: GStarJacobiElement, tol: Tolerance = DEFAULT_TOL) -> GStarJacobiElement:
    """Inverse in the bounded model: block inverse [[t(conj P), -t(Q)], ...]
    with the Heisenberg part pushed through it."""
    g = a.g
    p_i = a.gs.p.T.conj()
    q_i = -a.gs.q.T
    minv = np.block([[p_i, q_i], [q_i.conj(), p_i.conj()]])
    xit = a.hc.xi @ minv[:g, :g] + a.hc.eta @ minv[g:, :g]
    ett = a.hc.xi @ minv[:g, g:] + a.hc.eta @ minv[g:, g:]
    zeta = -a.hc.zeta + xit @ ett.T - ett @ xit.T
    return GStarJacobiElement(
        GStarElement(p_i, q_i, tol), ComplexHeisenbergElement(-xit, -ett, zeta, tol), tol
    )


def gstarj_identity(g: int, h: int) -> GStarJacobiElement:
    return GStarJacobiElement.identity(g, h)


# ---------------------------------------------------------------------------
# Cayley conjugations


def conjugate_by_T(m: SymplecticMatrix) -> GStarElement:
    """Blocks of T^-1 M T: P = ((A+D) + i(B-C))/2, Q = ((A-D) - i(B+C))/2."""
    a, b, c, d = m.a, m.b, m.c, m.d
    p = 0.5 * ((a + d) + 1j * (b - c))
    q = 0.5 * ((a - d) - 1j * (b + c))
    return GStarElement(p, q)


def theta(a: JacobiElement) -> GStarJacobiElement:
    """The isomorphism onto the bounded model: blocks via conjugate_by_T and
    Heisenberg part ((lam + i mu)/2, (lam - i mu)/2; -i kappa / 2)."""
    gs = conjugate_by_T(a.m)
    xi = 0.5 * (a.hs.lam + 1j * a.hs.mu)
    eta = 0.5 * (a.hs.lam - 1j * a.hs.mu)
    zeta = -0.5j * a.hs.kappa
    return GStarJacobiElement(gs, ComplexHeisenbergElement(xi, eta, zeta))


def embed_sp_gph(a: JacobiElement) -> np.ndarray:
    """The real 2(g+h) x 2(g+h) symplectic matrix identified with a."""
    g, h = a.g, a.h
    A, B = np.real(a.m.a), np.real(a.m.b)
    C, D = np.real(a.m.c), np.real(a.m.d)
    lam, mu, kap = a.hs.lam, a.hs.mu, a.hs.kappa
    zgh = np.zeros((g, h))
    e = np.block(
        [
            [A, zgh, B, A @ mu.T - B @ lam.T],
            [lam, np.eye(h), mu, kap],
            [C, zgh, D, C @ mu.T - D @ lam.T],
            [np.zeros((h, g)), np.zeros((h, h)), np.zeros((h, g)), np.eye(h)],
        ]
    )
    return e


def _tstar_blocks(a: JacobiElement) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(numeric P*, numeric Q*, closed-form P*, closed-form Q*)."""
    g, h = a.g, a.h
    n = g + h
    ts = cayley_matrix(n)
    conj = ts.conj().T @ embed_sp_gph(a).astype(complex) @ ts  # T* is unitary
    p_num, q_num = conj[:n, :n], conj[:n, n:]

    gs = conjugate_by_T(a.m)
    lam, mu, kap = a.hs.lam, a.hs.mu, a.hs.kappa
    lp = (lam + 1j * mu) / 2.0
    lm = (lam - 1j * mu) / 2.0
    p_closed = np.block([[gs.p, gs.q @ lp.T - gs.p @ lm.T],
                         [lp, np.eye(h) + 0.5j * kap]])
    q_closed = np.block([[gs.q, gs.p @ lm.T - gs.q @ lp.T],
                         [lm, -0.5j * kap]])
    return p_num, q_num, p_closed, q_closed


def tstar_conjugate_oracle(a: JacobiElement,
                           tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Upper blocks of the conjugated embedding, computed two ways.

    The explicit matrix conjugation and the closed-form blocks must agree;
    a mismatch signals an implementation bug.
    """
    p_num, q_num, p_closed, q_closed = _tstar_blocks(a)
    res = max(rel_error(p_num, p_closed), rel_error(q_num, q_closed))
    if res > tol.algebraic_rel:
        raise ConsistencyError(f"conjugation blocks disagree with closed form (residual {res:.3e})")
    return p_closed, q_closed


def tstar_agreement_residual(a: JacobiElement) -> float:
    """Relative residual between the two block computations (for suites)."""
    p_num, q_num, p_closed, q_closed = _tstar_blocks(a)
    return max(rel_error(p_num, p_closed), rel_error(q_num, q_closed))


# ---------------------------------------------------------------------------
# sampling


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def _sample_symplectic(rng: np.random.Generator, g: int, scale: float) -> SymplecticMatrix:
    # Products of elementary generators keep condition numbers moderate.
    j = np.real(symplectic_j(g))
    m = np.eye(2 * g)
    for _ in range(int(rng.integers(4, 9))):
        kind = int(rng.integers(0, 4))
        if kind == 0:
            b = rng.uniform(-scale, scale, (g, g))
            b = (b + b.T) / 2
            gen = np.block([[np.eye(g), b], [np.zeros((g, g)), np.eye(g)]])
        elif kind == 1:
            c = rng.uniform(-scale, scale, (g, g))
            c = (c + c.T) / 2
            gen = np.block([[np.eye(g), np.zeros((g, g))], [c, np.eye(g)]])
        elif kind == 2:
            # A = I + R with |R|_2 < 1 so the block stays well conditioned
            r = rng.uniform(-scale, scale, (g, g)) / max(1, g)
            a = np.eye(g) + r
            gen = np.block(
                [[a, np.zeros((g, g))], [np.zeros((g, g)), np.linalg.inv(a).T]]
            )
        else:
            gen = j
        m = m @ gen
    return SymplecticMatrix(m)


def _sample_heisenberg(rng: np.random.Generator, g: int, h: int, scale: float) -> HeisenbergElement:
    lam = rng.uniform(-scale, scale, (h, g))
    mu = rng.uniform(-scale, scale, (h, g))
    s = rng.uniform(-scale, scale, (h, h))
    s = (s + s.T) / 2
    # kappa = S - mu t(lam) + (mu t(lam) + lam t(mu))/2 makes
    # kappa + mu t(lam) = S + sym part, symmetric by construction.
    kappa = s - mu @ lam.T + (mu @ lam.T + lam @ mu.T) / 2
    return HeisenbergElement(lam, mu, kappa)


def _sample_unitary(rng: np.random.Generator, g: int) -> np.ndarray:
    z = rng.normal(size=(g, g)) + 1j * rng.normal(size=(g, g))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def sample_element(kind: str, g: int, h: int = 1, seed: int = 0, scale: float = 0.8):
    """Draw a random element of the requested group, deterministic in seed.

    kind is one of sp, heisenberg, jacobi, gstar, gstarj, kstarj.
    """
    if kind not in _KIND_TAG:
        raise DomainError(f"unknown element kind: {kind!r}")
    if g < 1 or h < 1:
        raise DimensionError("g and h must be >= 1")
    if not scale > 0:
        raise DomainError("scale must be positive")
    rng = _rng([int(seed), _KIND_TAG[kind]])
    if kind == "sp":
        return _sample_symplectic(rng, g, scale)
    if kind == "heisenberg":
        return _sample_heisenberg(rng, g, h, scale)
    if kind == "jacobi":
        return JacobiElement(_sample_symplectic(rng, g, scale), _sample_heisenberg(rng, g, h, scale))
    if kind == "gstar":
        return conjugate_by_T(_sample_symplectic(rng, g, scale))
    if kind == "gstarj":
        return theta(JacobiElement(_sample_symplectic(rng, g, scale),
                                   _sample_heisenberg(rng, g, h, scale)))
    if kind == "kstarj":
        p = _sample_unitary(rng, g)
        kap = rng.uniform(-scale, scale, (h, h))
        kap = (kap + kap.T) / 2
        z = np.zeros((h, g), dtype=complex)
        return GStarJacobiElement(
            GStarElement(p, np.zeros((g, g))),
            ComplexHeisenbergElement(z, z, 1j * kap),
        )
    raise AssertionError("unreachable")


_KIND_TAG = {"sp": 0, "heisenberg": 1, "jacobi": 2, "gstar": 3, "gstarj": 4, "kstarj": 5}
