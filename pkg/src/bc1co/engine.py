"""Forward transform by quadrature, Gram matrices, and spectral norms.

The two transform components at a spectral point lam = i nu are the scalar
transform read at +-lam.  Both are produced in a single pass: the kernel's
even part F and reduced odd part S are evaluated once per node and the four
sign combinations G(+-lam, +-t) are linear in (F, S).
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from . import model
from .model import BC1Params, QSpec, SpectralPoint, TransformValue
from .quadrature import QuadConfig, integrate_pair, integrate_spectral

__all__ = [
    "forward_transform",
    "q_function",
    "gram_matrix",
    "spectral_norm_sq",
    "transform_norm_sq",
]


def q_function(params: BC1Params, spec: QSpec) -> Callable[[float], float]:
    """The orthogonal function as a plain callable."""

    def f(t: float) -> float:
        return model.q_eval(params, spec, t)

    return f


def forward_transform(
    params: BC1Params,
    f: Callable[[float], float],
    p: SpectralPoint | complex,
    cfg: QuadConfig | None = None,
) -> TransformValue:
    """Both components of the transform of f by real-line quadrature."""
    params.require_transform()
    cfg = cfg or QuadConfig.for_params(params.sigma, params.rho)
    lam = p.lam if isinstance(p, SpectralPoint) else complex(p)
    rho = params.rho
    c = (1.0 + params.iota) / 2.0 + params.b
    a1 = (lam + rho) / 2.0
    a2 = (rho - lam) / 2.0
    k1 = a1 / (2.0 * c)
    k2 = a2 / (2.0 * c)

    def fvec(t: float):
        feven, sodd = model.eigenfunction_parts(params, lam, t)
        ft, fmt = f(t), f(-t)
        mu = model.mu_density(params, t)
        # component +1: f(t) G(lam, t) + f(-t) G(lam, -t)
        # component -1: f(t) G(-lam, t) + f(-t) G(-lam, -t)
        plus = (ft + fmt) * feven + (ft - fmt) * k1 * sodd
        minus = (ft + fmt) * feven + (ft - fmt) * k2 * sodd
        return (plus * mu, minus * mu)

    vals, _err, _lev = integrate_pair(fvec, 2, cfg)
    return TransformValue(vals[0], vals[1])


def gram_matrix(
    params: BC1Params,
    n_max: int,
    k: int,
    parity: int,
    cfg: QuadConfig | None = None,
) -> np.ndarray:
    """Matrix of pairwise inner products of Q_0 ... Q_{n_max} (fixed k, parity).

    All upper-triangle products are integrated over one shared node set; the
    integrands are even, so the symmetric rule contributes 2 f(t) per node.
    """
    cfg = cfg or QuadConfig()
    specs = [QSpec(n, k, parity) for n in range(n_max + 1)]
    pairs = [(i, j) for i in range(n_max + 1) for j in range(i, n_max + 1)]

    def fvec(t: float):
        qs = [model.q_eval(params, s, t) for s in specs]
        mu = model.mu_density(params, t)
        return [2.0 * qs[i] * qs[j] * mu for i, j in pairs]

    vals, _err, _lev = integrate_pair(fvec, len(pairs), cfg)
    out = np.zeros((n_max + 1, n_max + 1))
    for (i, j), v in zip(pairs, vals):
        out[i, j] = out[j, i] = v.real if isinstance(v, complex) else v
    return out


def spectral_norm_sq(
    params: BC1Params,
    fpair: Callable[[float], tuple[complex, complex]],
    lam_max: float | None = None,
    cfg: QuadConfig | None = None,
) -> tuple[float, float]:
    """Squared norm of a component pair against the spectral density.

    Integrates |F_1|^2 + |F_-1|^2 over nu in (0, lam_max]; returns the value
    and the truncation-tail estimate.
    """
    cfg = cfg or QuadConfig()
    lam_max = lam_max if lam_max is not None else cfg.lambda_max

    def integrand(nu: float) -> float:
        fp, fm = fpair(nu)
        dens = model.muhat_density(params, SpectralPoint(nu))
        return (abs(fp) ** 2 + abs(fm) ** 2) * dens

    return integrate_spectral(integrand, lam_max, cfg)


def transform_norm_sq(
    params: BC1Params,
    spec: QSpec,
    lam_max: float | None = None,
    cfg: QuadConfig | None = None,
    delta_variant: str = "delta1",
) -> tuple[float, float]:
    """Spectral-side squared norm of the closed-form transform of Q_spec."""
    params.require_transform()

    def fpair(nu: float):
        tv = model.closed_transform(params, spec, SpectralPoint(nu), delta_variant)
        return tv.f_plus, tv.f_minus

    return spectral_norm_sq(params, fpair, lam_max, cfg)
