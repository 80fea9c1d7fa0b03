"""Verification suites: each one checks a family of identities and returns
machine-readable reports.

Exact suites (bernstein, rodrigues) compare rational coefficient maps and
carry zero tolerance.  Numerical suites compare independent pipelines
(quadrature against closed forms, spectral against real-side norms) at the
tolerances fixed here.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import engine, model
from .algebra import (
    AlgebraParams,
    OperatorPoly,
    SigmaSpan,
    bernstein_even,
    bernstein_odd,
    bernstein_poly,
    bernstein_scalar,
    direct_q_span,
    operator_apply,
    rising,
    rodrigues_span,
    shift_poly,
    weight_span,
)
from .model import BC1Params, QSpec, SpectralPoint
from .quadrature import QuadConfig

__all__ = [
    "VerificationReport",
    "DEFAULT_EXACT_TRIPLES",
    "suite_bernstein",
    "suite_rodrigues",
    "suite_eigen",
    "suite_gram",
    "suite_wtilde",
    "suite_transform",
    "suite_plancherel",
    "SUITES",
    "run_suite",
]

#: exact parameter triples (b, iota, sigma) exercised by the rational suites
DEFAULT_EXACT_TRIPLES: tuple[tuple, ...] = (
    (1, 1, 6),
    (Fraction(1, 2), 2, 8),
    (2, Fraction(1, 2), Fraction(13, 2)),
    (3, 1, 9),
    (1, 3, Fraction(11, 2)),
)


@dataclass
class VerificationReport:
    """Outcome of one verification run."""

    test: str
    params: dict
    max_abs_dev: float
    max_rel_dev: float
    tolerance: float
    passed: bool
    seconds: float
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "test": self.test,
            "params": self.params,
            "max_abs_dev": self.max_abs_dev,
            "max_rel_dev": self.max_rel_dev,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seconds": round(self.seconds, 6),
        }
        if self.extra:
            out["extra"] = self.extra
        return out


def _param_dict(p) -> dict:
    if isinstance(p, AlgebraParams):
        return {"b": str(p.b), "iota": str(p.iota), "sigma": str(p.sigma)}
    return {"b": p.b, "iota": p.iota, "sigma": p.sigma}


def _span_gap(lhs: SigmaSpan, rhs: SigmaSpan) -> float:
    """Largest absolute coefficient of the difference (0.0 iff exactly equal)."""
    diff = lhs - rhs
    if diff.is_zero():
        return 0.0
    return float(max(abs(c) for c in diff.terms.values()))


def suite_bernstein(
    triples: Sequence[tuple] = DEFAULT_EXACT_TRIPLES, m_max: int = 6
) -> list[VerificationReport]:
    """Even and odd weight-shift operator identities, exact arithmetic."""
    reports = []
    for triple in triples:
        params = AlgebraParams(*triple)
        start = time.perf_counter()
        worst = 0.0
        failures: list[str] = []
        for m in range(m_max + 1):
            for name, check in (("even", bernstein_even), ("odd", bernstein_odd)):
                lhs, rhs = check(params, m)
                gap = _span_gap(lhs, rhs)
                if gap:
                    failures.append(f"{name} m={m}")
                worst = max(worst, gap)
        reports.append(
            VerificationReport(
                test="bernstein",
                params=_param_dict(params) | {"m_max": m_max},
                max_abs_dev=worst,
                max_rel_dev=worst,
                tolerance=0.0,
                passed=not failures,
                seconds=time.perf_counter() - start,
                extra={"failures": failures} if failures else {},
            )
        )
    return reports


def suite_rodrigues(
    triples: Sequence[tuple] = DEFAULT_EXACT_TRIPLES,
    n_max: int = 6,
    k_max: int = 3,
    m_max: int = 4,
) -> list[VerificationReport]:
    """Operator-built orthogonal functions against their direct expansions,
    plus the weighted shift identities, all exact."""
    reports = []
    for triple in triples:
        params = AlgebraParams(*triple)
        start = time.perf_counter()
        worst = 0.0
        failures: list[str] = []
        for parity in (1, -1):
            for k in range(k_max + 1):
                for n in range(n_max + 1):
                    gap = _span_gap(
                        rodrigues_span(params, n, k, parity),
                        direct_q_span(params, n, k, parity),
                    )
                    if gap:
                        failures.append(f"rodrigues n={n} k={k} parity={parity}")
                    worst = max(worst, gap)
        w = SigmaSpan.monomial(params, 0, 0)
        for k in range(k_max + 1):
            for m in range(m_max + 1):
                lhs = operator_apply(
                    bernstein_poly(params, m) * shift_poly(params, "L", k, m), w
                )
                rhs = weight_span(params, m, k, 0).scale(bernstein_scalar(params, m))
                gap = _span_gap(lhs, rhs)
                if gap:
                    failures.append(f"weighted-shift even k={k} m={m}")
                worst = max(worst, gap)
                lhs = operator_apply(
                    OperatorPoly.x_plus(params.rho)
                    * bernstein_poly(params, m)
                    * shift_poly(params, "M", k, m),
                    w,
                )
                coeff = (
                    -params.sigma
                    * rising(params.sigma / 2 + 1, m)
                    * rising((params.sigma + 1 - params.iota) / 2, m)
                )
                rhs = weight_span(params, m, k, 1).scale(coeff)
                gap = _span_gap(lhs, rhs)
                if gap:
                    failures.append(f"weighted-shift odd k={k} m={m}")
                worst = max(worst, gap)
        reports.append(
            VerificationReport(
                test="rodrigues",
                params=_param_dict(params) | {"n_max": n_max, "k_max": k_max},
                max_abs_dev=worst,
                max_rel_dev=worst,
                tolerance=0.0,
                passed=not failures,
                seconds=time.perf_counter() - start,
                extra={"failures": failures} if failures else {},
            )
        )
    return reports


def _apply_operator_fd(params: BC1Params, lam: complex, t: float, h: float = 1e-6) -> complex:
    gp = (
        model.eigenfunction_g(params, lam, t + h)
        - model.eigenfunction_g(params, lam, t - h)
    ) / (2.0 * h)
    refl = (
        2.0 * params.iota / (1.0 - math.exp(-4.0 * t))
        + 2.0 * params.b / (1.0 - math.exp(-2.0 * t))
    ) * (model.eigenfunction_g(params, lam, t) - model.eigenfunction_g(params, lam, -t))
    return gp + refl - params.rho * model.eigenfunction_g(params, lam, t)


def suite_eigen(
    params: BC1Params,
    nus: Sequence[float] = (0.5, 1.0, 2.0),
    t_count: int = 20,
    tolerance: float = 1e-6,
) -> list[VerificationReport]:
    """Residual of the defining eigen-equation along the spectrum."""
    start = time.perf_counter()
    worst_abs = worst_rel = 0.0
    for nu in nus:
        lam = 1j * nu
        for i in range(t_count):
            t = 0.1 + (2.0 - 0.1) * i / (t_count - 1)
            g = model.eigenfunction_g(params, lam, t)
            resid = abs(_apply_operator_fd(params, lam, t) - lam * g)
            worst_abs = max(worst_abs, resid)
            worst_rel = max(worst_rel, resid / (1.0 + abs(g)))
    return [
        VerificationReport(
            test="eigen",
            params=_param_dict(params) | {"nus": list(nus), "t_count": t_count},
            max_abs_dev=worst_abs,
            max_rel_dev=worst_rel,
            tolerance=tolerance,
            passed=worst_rel <= tolerance,
            seconds=time.perf_counter() - start,
        )
    ]


def suite_gram(
    params: BC1Params,
    n_max: int = 5,
    ks: Sequence[int] = (0, 1, 2),
    parities: Sequence[int] = (1, -1),
    tolerance: float = 1e-8,
    cfg: QuadConfig | None = None,
) -> list[VerificationReport]:
    """Orthogonality and closed-form norms from real-line quadrature."""
    cfg = cfg or QuadConfig()
    reports = []
    for k in ks:
        for parity in parities:
            start = time.perf_counter()
            G = engine.gram_matrix(params, n_max, k, parity, cfg)
            off = 0.0
            diag = 0.0
            for i in range(n_max + 1):
                closed = model.q_norm_sq_closed(params, QSpec(i, k, parity))
                diag = max(diag, abs(G[i, i] - closed) / closed)
                for j in range(i + 1, n_max + 1):
                    off = max(off, abs(G[i, j]) / math.sqrt(G[i, i] * G[j, j]))
            worst = max(off, diag)
            reports.append(
                VerificationReport(
                    test="gram",
                    params=_param_dict(params)
                    | {"n_max": n_max, "k": k, "parity": parity},
                    max_abs_dev=worst,
                    max_rel_dev=worst,
                    tolerance=tolerance,
                    passed=worst <= tolerance,
                    seconds=time.perf_counter() - start,
                    extra={
                        "max_offdiag_rel": off,
                        "max_diag_rel_dev": diag,
                        "diag0": G[0, 0],
                    },
                )
            )
    return reports


def suite_wtilde(
    params: BC1Params,
    nus: Sequence[float] = (0.0, 0.25, 0.5, 1.0, 2.0, 4.0),
    tolerance: float = 1e-8,
    cfg: QuadConfig | None = None,
) -> list[VerificationReport]:
    """Quadrature transform of the base weight against its Gamma closed form."""
    cfg = cfg or QuadConfig.for_params(params.sigma, params.rho)
    start = time.perf_counter()
    f = engine.q_function(params, QSpec(0, 0, 1))
    worst_abs = worst_rel = 0.0
    values = {}
    for nu in nus:
        lam = 1j * nu if nu else 0.0
        quad = engine.forward_transform(params, f, lam, cfg)
        closed = model.w_tilde(params, lam)
        dev = max(abs(quad.f_plus - closed), abs(quad.f_minus - closed))
        worst_abs = max(worst_abs, dev)
        worst_rel = max(worst_rel, dev / abs(closed))
        values[f"{nu:g}"] = closed.real
    return [
        VerificationReport(
            test="wtilde",
            params=_param_dict(params) | {"nus": list(nus)},
            max_abs_dev=worst_abs,
            max_rel_dev=worst_rel,
            tolerance=tolerance,
            passed=worst_rel <= tolerance,
            seconds=time.perf_counter() - start,
            extra={"closed_values": values},
        )
    ]


def suite_transform(
    params: BC1Params,
    n_max: int = 4,
    k_max: int = 2,
    parities: Sequence[int] = (1, -1),
    nus: Sequence[float] = (0.25, 0.5, 1.0, 2.0, 4.0),
    tolerance: float = 1e-6,
    cfg: QuadConfig | None = None,
) -> list[VerificationReport]:
    """Forward quadrature transform against the closed forms; records which
    parameter variant the odd weighted case selects."""
    cfg = cfg or QuadConfig.for_params(params.sigma, params.rho)
    reports = []
    for parity in parities:
        for k in range(k_max + 1):
            for n in range(n_max + 1):
                spec = QSpec(n, k, parity)
                start = time.perf_counter()
                f = engine.q_function(params, spec)
                variants = (
                    ("delta1", "delta0") if (parity == -1 and k > 0 and n > 0) else ("delta1",)
                )
                pairs = []
                for nu in nus:
                    p = SpectralPoint(nu)
                    quad = engine.forward_transform(params, f, p, cfg)
                    closed = {
                        v: model.closed_transform(params, spec, p, v) for v in variants
                    }
                    pairs.append((quad, closed))
                # the spectral polynomials have zeros; deviations are measured
                # against the closed form's size over the whole grid
                scale = max(
                    max(abs(c[v].f_plus), abs(c[v].f_minus))
                    for _q, c in pairs
                    for v in variants
                )
                dev = {v: 0.0 for v in variants}
                for quad, closed in pairs:
                    for v in variants:
                        d = max(
                            abs(quad.f_plus - closed[v].f_plus),
                            abs(quad.f_minus - closed[v].f_minus),
                        ) / scale
                        dev[v] = max(dev[v], d)
                worst = dev["delta1"]
                extra = {}
                if len(variants) > 1:
                    selected = min(variants, key=lambda v: dev[v])
                    extra = {
                        "variant_rel_dev": {v: dev[v] for v in variants},
                        "selected_variant": selected,
                    }
                reports.append(
                    VerificationReport(
                        test="transform",
                        params=_param_dict(params)
                        | {"n": n, "k": k, "parity": parity, "nus": list(nus)},
                        max_abs_dev=worst,
                        max_rel_dev=worst,
                        tolerance=tolerance,
                        passed=worst <= tolerance,
                        seconds=time.perf_counter() - start,
                        extra=extra,
                    )
                )
    return reports


def suite_plancherel(
    params: BC1Params,
    n_max: int = 2,
    k_max: int = 1,
    parities: Sequence[int] = (1, -1),
    lam_max: float = 40.0,
    tolerance: float = 1e-4,
    cfg: QuadConfig | None = None,
) -> list[VerificationReport]:
    """Spectral-side norms of the closed transforms against the real-side
    closed norms; the measured calibration ratio is reported explicitly."""
    cfg = cfg or QuadConfig()
    reports = []
    for parity in parities:
        for k in range(k_max + 1):
            for n in range(n_max + 1):
                spec = QSpec(n, k, parity)
                start = time.perf_counter()
                spectral, tail = engine.transform_norm_sq(params, spec, lam_max, cfg)
                real_side = model.q_norm_sq_closed(params, spec)
                rel = abs(spectral - real_side) / real_side
                reports.append(
                    VerificationReport(
                        test="plancherel",
                        params=_param_dict(params)
                        | {"n": n, "k": k, "parity": parity, "lambda_max": lam_max},
                        max_abs_dev=abs(spectral - real_side),
                        max_rel_dev=rel,
                        tolerance=tolerance,
                        passed=rel <= tolerance,
                        seconds=time.perf_counter() - start,
                        extra={
                            "calibration": spectral / real_side,
                            "tail_estimate": tail,
                            "spectral_norm_sq": spectral,
                            "closed_norm_sq": real_side,
                        },
                    )
                )
    return reports


SUITES: dict[str, Callable[..., list[VerificationReport]]] = {
    "bernstein": suite_bernstein,
    "rodrigues": suite_rodrigues,
    "eigen": suite_eigen,
    "gram": suite_gram,
    "wtilde": suite_wtilde,
    "transform": suite_transform,
    "plancherel": suite_plancherel,
}

#: suites that demand exact rational parameters
EXACT_SUITES = frozenset({"bernstein", "rodrigues"})


def run_suite(name: str, /, **kwargs) -> list[VerificationReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
