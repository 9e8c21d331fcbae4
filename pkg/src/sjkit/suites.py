"""Property-verification suites.

Each suite draws deterministic per-trial samples, evaluates one identity,
and reports the worst relative residual.  Per-trial seeds are derived from
the master seed and the trial index alone, so serial and parallel runs of
the same suite produce identical reports.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import decomp
from .automorphy import IndexMatrix, Representation, verify_cocycle
from .geometry import (
    MetricParams,
    TEST_FIELDS,
    action_jacobian_det,
    laplacian_disk,
    laplacian_sj,
    laplacian_siegel,
    metric_disk,
    metric_siegel,
    metric_sj,
    pullback_metric_disk,
    pushforward,
    sample_tangent,
    volume_density,
)
from .groups import (
    JacobiElement,
    conjugate_by_T,
    embed_sp_gph,
    gstarj_identity,
    gstarj_inv,
    gstarj_mul,
    heisenberg_identity,
    heisenberg_mul,
    jacobi_identity,
    jacobi_inv,
    jacobi_mul,
    sample_element,
    symplectic_j,
    theta,
    tstar_agreement_residual,
)
from .numkit import DomainError, rel_error
from .spaces import (
    act_disk,
    act_jacobi,
    act_jacobi_disk,
    act_siegel,
    cayley,
    check_compatibility,
    sample_point,
)

__all__ = ["VerifyReport", "SUITES", "run_suite", "run_all"]


@dataclass
class VerifyReport:
    suite: str
    g: int
    h: int
    trials: int
    max_residual: float
    tolerance: float
    failures: list = field(default_factory=list)
    passed: bool = True

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "g": self.g,
            "h": self.h,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "failures": self.failures,
            "passed": self.passed,
        }


def trial_seed(master: int, index: int) -> int:
    """Stable per-trial seed; identical across runs and platforms."""
    ss = np.random.SeedSequence([int(master), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _scalar_rel(x: float, y: float) -> float:
    return abs(x - y) / max(1.0, abs(x), abs(y))


# ---------------------------------------------------------------------------
# element distances


def _dist_jacobi(a: JacobiElement, b: JacobiElement) -> float:
    return max(
        rel_error(a.m.m, b.m.m),
        rel_error(a.hs.lam, b.hs.lam),
        rel_error(a.hs.mu, b.hs.mu),
        rel_error(a.hs.kappa, b.hs.kappa),
    )


def _dist_heis(a, b) -> float:
    return max(rel_error(a.lam, b.lam), rel_error(a.mu, b.mu), rel_error(a.kappa, b.kappa))


def _dist_gstarj(a, b) -> float:
    return max(
        rel_error(a.gs.p, b.gs.p),
        rel_error(a.gs.q, b.gs.q),
        rel_error(a.hc.xi, b.hc.xi),
        rel_error(a.hc.eta, b.hc.eta),
        rel_error(a.hc.zeta, b.hc.zeta),
    )


# ---------------------------------------------------------------------------
# per-trial residuals


def _trial_group_axioms(g: int, h: int, s: int) -> float:
    a, b, c = (sample_element("jacobi", g, h, s + k) for k in range(3))
    e = jacobi_identity(g, h)
    res = _dist_jacobi(jacobi_mul(jacobi_mul(a, b), c), jacobi_mul(a, jacobi_mul(b, c)))
    res = max(res, _dist_jacobi(jacobi_mul(a, e), a), _dist_jacobi(jacobi_mul(e, a), a))
    res = max(res, _dist_jacobi(jacobi_mul(a, jacobi_inv(a)), e))
    res = max(res, _dist_jacobi(jacobi_mul(jacobi_inv(a), a), e))

    ha, hb, hc = (sample_element("heisenberg", g, h, s + 3 + k) for k in range(3))
    he = heisenberg_identity(g, h)
    res = max(res, _dist_heis(heisenberg_mul(heisenberg_mul(ha, hb), hc),
                              heisenberg_mul(ha, heisenberg_mul(hb, hc))))
    res = max(res, _dist_heis(heisenberg_mul(ha, he), ha))

    sa, sb, sc = (sample_element("gstarj", g, h, s + 6 + k) for k in range(3))
    se = gstarj_identity(g, h)
    res = max(res, _dist_gstarj(gstarj_mul(gstarj_mul(sa, sb), sc),
                                gstarj_mul(sa, gstarj_mul(sb, sc))))
    res = max(res, _dist_gstarj(gstarj_mul(sa, se), sa), _dist_gstarj(gstarj_mul(se, sa), sa))
    res = max(res, _dist_gstarj(gstarj_mul(sa, gstarj_inv(sa)), se))
    return res


def _trial_theta_hom(g: int, h: int, s: int) -> float:
    a = sample_element("jacobi", g, h, s)
    b = sample_element("jacobi", g, h, s + 1)
    res = _dist_gstarj(theta(jacobi_mul(a, b)), gstarj_mul(theta(a), theta(b)))
    res = max(res, tstar_agreement_residual(a))
    ea, eb = embed_sp_gph(a), embed_sp_gph(b)
    res = max(res, rel_error(embed_sp_gph(jacobi_mul(a, b)), ea @ eb))
    j = symplectic_j(g + h)
    res = max(res, rel_error(ea.T @ np.real(j) @ ea, np.real(j)))
    return res


def _trial_compat_29(g: int, h: int, s: int) -> float:
    m = sample_element("sp", g, h, s)
    w = sample_point("disk", g, h, s + 1)
    lhs = act_siegel(m, cayley(w))
    rhs = cayley(act_disk(conjugate_by_T(m), w))
    return rel_error(lhs.omega, rhs.omega)


def _trial_compat_37(g: int, h: int, s: int) -> float:
    a = sample_element("jacobi", g, h, s)
    p = sample_point("disk_jacobi", g, h, s + 1)
    return check_compatibility(a, p)


def _trial_hc_reconstruct(g: int, h: int, s: int) -> float:
    a = sample_element("gstarj", g, h, s)
    p = sample_point("disk_jacobi", g, h, s + 1)
    res = decomp.component_residuals(a, p)
    return max(res["reconstruction"], res["pminus_symmetry"], res["kappa_agreement"])


def _metric_action_residual(metric_fn, act_fn, p, v) -> float:
    moved_p = act_fn(p)
    moved_v = pushforward(act_fn, p, v)
    return _scalar_rel(metric_fn(p, v), metric_fn(moved_p, moved_v))


def _trial_metric_invariance(g: int, h: int, s: int) -> float:
    res = 0.0
    m = sample_element("sp", g, h, s)
    ps = sample_point("siegel", g, h, s + 1)
    vs = sample_tangent(g, None, s + 2)
    res = max(res, _metric_action_residual(metric_siegel, lambda q: act_siegel(m, q), ps, vs))

    gs = sample_element("gstar", g, h, s + 3)
    pd = sample_point("disk", g, h, s + 4)
    vd = sample_tangent(g, None, s + 5)
    res = max(res, _metric_action_residual(metric_disk, lambda q: act_disk(gs, q), pd, vd))

    a = sample_element("jacobi", g, h, s + 6)
    pj = sample_point("siegel_jacobi", g, h, s + 7)
    vj = sample_tangent(g, h, s + 8)
    for params in (MetricParams(1.0, 1.0), MetricParams(2.0, 0.5)):
        res = max(
            res,
            _metric_action_residual(
                lambda q, u, pr=params: metric_sj(pr, q, u), lambda q: act_jacobi(a, q), pj, vj
            ),
        )

    # Cayley isometry: the factor 4 in the bounded-model metric
    pc = sample_point("disk", g, h, s + 9)
    vc = sample_tangent(g, None, s + 10)
    lhs = metric_disk(pc, vc)
    rhs = metric_siegel(cayley(pc), pushforward(cayley, pc, vc))
    res = max(res, _scalar_rel(lhs, rhs))

    # pullback metric on the disk model is invariant under the bounded action
    b = sample_element("gstarj", g, h, s + 11)
    pb = sample_point("disk_jacobi", g, h, s + 12)
    vb = sample_tangent(g, h, s + 13)
    params = MetricParams(1.0, 1.0)
    res = max(
        res,
        _metric_action_residual(
            lambda q, u: pullback_metric_disk(params, q, u),
            lambda q: act_jacobi_disk(b, q),
            pb,
            vb,
        ),
    )
    return res


def _trial_laplacian_invariance(g: int, h: int, s: int) -> float:
    fld = TEST_FIELDS[s % len(TEST_FIELDS)]
    params = MetricParams(1.0, 1.0)
    if fld.domain == "disk":
        gs = sample_element("gstar", g, h, s)
        p = sample_point("disk", g, h, s + 1)
        lhs = laplacian_disk(lambda q: fld(act_disk(gs, q)), p)
        rhs = laplacian_disk(fld, act_disk(gs, p))
        return _scalar_rel(lhs, rhs)
    a = sample_element("jacobi", g, h, s)
    p = sample_point("siegel_jacobi", g, h, s + 1)
    lhs = laplacian_sj(params, lambda q: fld(act_jacobi(a, q)), p)
    rhs = laplacian_sj(params, fld, act_jacobi(a, p))
    res = _scalar_rel(lhs, rhs)
    if fld.name in ("trace-re-base", "logdet-y"):
        m = sample_element("sp", g, h, s + 2)
        pb = sample_point("siegel", g, h, s + 3)
        lhs = laplacian_siegel(lambda q: fld(act_siegel(m, q)), pb)
        rhs = laplacian_siegel(fld, act_siegel(m, pb))
        res = max(res, _scalar_rel(lhs, rhs))
    return res


def _half_integral_example(h: int) -> IndexMatrix:
    m = 2.0 * np.eye(h) + 0.5 * (np.ones((h, h)) - np.eye(h))
    return IndexMatrix(m, half_integral=True, psd=True)


def _trial_cocycle(g: int, h: int, s: int) -> float:
    g1 = sample_element("gstarj", g, h, s)
    g2 = sample_element("gstarj", g, h, s + 1)
    p = sample_point("disk_jacobi", g, h, s + 2)
    indexes = [
        IndexMatrix(np.zeros((h, h))),
        IndexMatrix(np.eye(h)),
        _half_integral_example(h),
    ]
    reps = [Representation("det_power", k) for k in (0, 1, 2)] + [Representation("standard")]
    res = 0.0
    for idx in indexes:
        for rep in reps:
            res = max(res, verify_cocycle(idx, rep, g1, g2, p))
    return res


def _trial_volume_invariance(g: int, h: int, s: int) -> float:
    a = sample_element("jacobi", g, h, s)
    p = sample_point("siegel_jacobi", g, h, s + 1)
    det_j = action_jacobian_det(lambda q: act_jacobi(a, q), p)
    lhs = volume_density(act_jacobi(a, p)) * det_j
    return _scalar_rel(lhs, volume_density(p))


# name -> (trial function, default tolerance)
SUITES = {
    "group-axioms": (_trial_group_axioms, 1e-9),
    "theta-hom": (_trial_theta_hom, 1e-9),
    "compat-29": (_trial_compat_29, 1e-9),
    "compat-37": (_trial_compat_37, 1e-9),
    "hc-reconstruct": (_trial_hc_reconstruct, 1e-9),
    "metric-invariance": (_trial_metric_invariance, 1e-5),
    "laplacian-invariance": (_trial_laplacian_invariance, 1e-3),
    "cocycle": (_trial_cocycle, 1e-8),
    "volume-invariance": (_trial_volume_invariance, 1e-4),
}


def run_suite(name: str, g: int = 1, h: int = 1, trials: int = 100, seed: int = 0,
              tol: float | None = None, jobs: int = 1) -> VerifyReport:
    """Run one named suite; deterministic in (name, g, h, trials, seed)."""
    if name not in SUITES:
        raise DomainError(f"unknown suite: {name!r}")
    trial_fn, default_tol = SUITES[name]
    tolerance = default_tol if tol is None else float(tol)

    def one(idx: int) -> tuple[int, float]:
        s = trial_seed(seed, idx)
        return s, trial_fn(g, h, s)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(one, range(trials)))
    else:
        results = [one(i) for i in range(trials)]

    failures = [
        {"seed": s, "residual": float(r)} for s, r in results if not r <= tolerance
    ]
    max_res = float(max((r for _, r in results), default=0.0))
    return VerifyReport(
        suite=name,
        g=g,
        h=h,
        trials=trials,
        max_residual=max_res,
        tolerance=tolerance,
        failures=failures,
        passed=not failures,
    )


def run_all(g: int = 1, h: int = 1, trials: int = 100, seed: int = 0,
            tol: float | None = None, jobs: int = 1) -> list[VerifyReport]:
    return [run_suite(name, g, h, trials, seed, tol, jobs) for name in SUITES]
