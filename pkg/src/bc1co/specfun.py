"""Scalar special functions: Gamma, Pochhammer, terminating and Gauss
hypergeometric series, classical Jacobi polynomials.

The Gauss function is only ever needed at non-positive real argument
x = -sinh(t)^2.  Three evaluation regimes cover it:

  * moderate x: the Pfaff transform maps x onto x/(x-1) in [0, 1) where the
    plain series converges geometrically;
  * large -x with distinct upper parameters: the 1/x connection formula;
  * large -x with equal upper parameters (spectral parameter 0): the
    logarithmic large-argument expansion, including the sub-case where the
    Gamma quotient degenerates to an integer.

Branches are cross-checked against each other and against the ODE residual
in the test suite.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    DegenerateParameterError,
    GammaOverflowError,
    PoleError,
    SlowConvergenceError,
)

__all__ = [
    "ComplexLike",
    "HypSpec",
    "pochhammer",
    "gamma_real",
    "gamma_complex",
    "digamma_real",
    "hyp_terminating",
    "gauss_2f1",
    "gauss_2f1_deriv",
    "jacobi_poly",
]

ComplexLike = complex | float | int

_SERIES_TOL = 1e-17
_SERIES_CAP = 100_000
_PFAFF_LIMIT = 0.999
_CONNECTION_SWITCH = -2.0

# Lanczos rational approximation, g = 607/128, 15 coefficients.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _is_nonpositive_int(z: ComplexLike, tol: float = 1e-12) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def pochhammer(a: ComplexLike, m: int) -> complex:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1); (a)_0 = 1."""
    if m < 0:
        raise ValueError("pochhammer order must be non-negative")
    out = complex(1.0)
    a = complex(a)
    for i in range(m):
        out *= a + i
    return out


def gamma_real(x: float) -> float:
    """Gamma on the real line; poles and overflow raise typed errors."""
    if _is_nonpositive_int(x):
        raise PoleError(f"Gamma pole at {x}")
    try:
        return math.gamma(x)
    except OverflowError as exc:
        raise GammaOverflowError(f"Gamma({x}) overflows double precision") from exc
    except ValueError as exc:  # pragma: no cover - guarded above
        raise PoleError(f"Gamma pole at {x}") from exc


def gamma_complex(z: ComplexLike) -> complex:
    """Lanczos approximation with reflection for Re z < 1/2."""
    z = complex(z)
    if z.imag == 0.0:
        return complex(gamma_real(z.real))
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            raise PoleError(f"Gamma pole at {z}")
        return cmath.pi / (s * gamma_complex(1.0 - z))
    zm = z - 1.0
    acc = complex(_LANCZOS_COEF[0])
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (zm + i)
    t = zm + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (zm + 0.5) * cmath.exp(-t) * acc


def digamma_real(x: float) -> float:
    """Digamma for real non-pole argument (asymptotic series + recurrence)."""
    if _is_nonpositive_int(x):
        raise PoleError(f"digamma pole at {x}")
    out = 0.0
    while x < 8.0:
        out -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    # B_2n/(2n) coefficients
    out += (
        math.log(x)
        - 0.5 * inv
        - inv2
        * (
            1.0 / 12
            - inv2
            * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132)))
        )
    )
    return out


@dataclass(frozen=True)
class HypSpec:
    """Parameter tuple of a (terminating) pFq series."""

    numerator: tuple[complex, ...]
    denominator: tuple[complex, ...]
    termination: int | None = None

    @classmethod
    def terminating(
        cls, n: int, numerator: tuple[ComplexLike, ...], denominator: tuple[ComplexLike, ...]
    ) -> HypSpec:
        return cls(
            numerator=(complex(-n),) + tuple(complex(a) for a in numerator),
            denominator=tuple(complex(b) for b in denominator),
            termination=n,
        )


def hyp_terminating(spec: HypSpec, arg: ComplexLike) -> complex:
    """Exact finite sum of a terminating hypergeometric series."""
    if spec.termination is None:
        raise ValueError("hyp_terminating requires a termination index")
    n = spec.termination
    for bparam in spec.denominator:
        if _is_nonpositive_int(bparam) and -round(bparam.real) < n:
            raise DegenerateParameterError(
                f"denominator parameter {bparam} degenerates before index {n}"
            )
    arg = complex(arg)
    total = complex(1.0)
    term = complex(1.0)
    for m in range(n):
        num = complex(1.0)
        for a in spec.numerator:
            num *= a + m
        den = complex(m + 1)
        for bparam in spec.denominator:
            den *= bparam + m
        term *= num / den * arg
        total += term
    return total


def _series_2f1(a: complex, b: complex, c: complex, w: complex) -> complex:
    """Plain Gauss series at argument w, |w| < 1.

    Stops when three consecutive terms are below the relative floor; the
    term cap turns runaway arguments into a typed error.
    """
    total = complex(1.0)
    term = complex(1.0)
    small = 0
    for m in range(_SERIES_CAP):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * w
        total += term
        if abs(term) <= _SERIES_TOL * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise SlowConvergenceError(
        f"Gauss series did not converge at argument {w!r} within {_SERIES_CAP} terms"
    )


def _terminating_2f1(a: complex, b: complex, c: complex, x: complex) -> complex:
    n = -round(a.real)
    total = complex(1.0)
    term = complex(1.0)
    for m in range(n):
        den = (c + m) * (m + 1)
        if den == 0:
            raise DegenerateParameterError(f"denominator parameter {c} degenerate")
        term *= (a + m) * (b + m) / den * x
        total += term
    return total


def _pfaff_2f1(a: complex, b: complex, c: complex, x: float) -> complex:
    w = x / (x - 1.0)
    if w > _PFAFF_LIMIT:
        raise SlowConvergenceError(
            f"transformed argument {w:.6f} too close to 1 (|t| too large)"
        )
    return (1.0 - x) ** (-a) * _series_2f1(a, c - b, c, w)


def _connection_distinct(a: complex, b: complex, c: complex, x: float) -> complex:
    """DLMF 15.8.2 continuation for x << -1, b - a not an integer."""
    lx = math.log(-x)
    t1 = (
        gamma_complex(c)
        * gamma_complex(b - a)
        / (gamma_complex(b) * gamma_complex(c - a))
        * cmath.exp(-a * lx)
        * _series_2f1(a, a - c + 1.0, a - b + 1.0, 1.0 / x)
    )
    t2 = (
        gamma_complex(c)
        * gamma_complex(a - b)
        / (gamma_complex(a) * gamma_complex(c - b))
        * cmath.exp(-b * lx)
        * _series_2f1(b, b - c + 1.0, b - a + 1.0, 1.0 / x)
    )
    return t1 + t2


def _connection_equal(a: float, c: float, x: float) -> complex:
    """Large-argument expansion of 2F1(a, a; c; x), x << -1, real a, c.

    Logarithmic case; when s = c - a is a positive integer the psi poles
    cancel against vanishing Pochhammers and the n >= s tail collapses to an
    elementary series.
    """
    s = c - a
    lx = math.log(-x)
    pref_log = lambda: gamma_real(c) / (gamma_real(a) * gamma_real(s)) * (-x) ** (-a)
    if abs(s - round(s)) < 1e-12 and round(s) >= 1:
        si = round(s)
        total = 0.0
        coef = 1.0  # (a)_n (1-s)_n / (n!)^2 x^-n
        for n in range(si):
            total += coef * (
                lx
                + 2.0 * digamma_real(n + 1.0)
                - digamma_real(a + n)
                - digamma_real(si - n)
            )
            coef *= (a + n) * (1.0 - si + n) / ((n + 1.0) ** 2) / x
        sgn = (-1.0) ** si * math.gamma(si)
        rf = 1.0
        for i in range(si):
            rf *= a + i
        # term_n = sgn * (a)_n * (n-s)! / (n!)^2 / x^n, iterated from n = si
        term = sgn * rf / (math.factorial(si) ** 2) / x**si
        n = si
        while True:
            total += term
            n += 1
            if n - si > _SERIES_CAP:  # pragma: no cover
                raise SlowConvergenceError("equal-parameter tail did not converge")
            term *= (a + n - 1.0) * (n - si) / (n * n) / x
            if abs(term) < _SERIES_TOL * abs(total) and n > si + 8:
                total += term
                break
        return pref_log() * total
    if _is_nonpositive_int(s):
        raise DegenerateParameterError(f"c - a = {s} non-positive integer")
    total = 0.0
    coef = 1.0
    n = 0
    while True:
        total += coef * (
            lx
            + 2.0 * digamma_real(n + 1.0)
            - digamma_real(a + n)
            - digamma_real(s - n)
        )
        coef *= (a + n) * (a - c + 1.0 + n) / ((n + 1.0) ** 2) / x
        n += 1
        if n > 12 and abs(coef) * (abs(lx) + 30.0) < _SERIES_TOL * abs(total):
            break
        if n > _SERIES_CAP:  # pragma: no cover
            raise SlowConvergenceError("equal-parameter series did not converge")
    return pref_log() * total


def gauss_2f1(a: ComplexLike, b: ComplexLike, c: ComplexLike, x: float) -> complex:
    """2F1(a, b; c; x) for real x <= 0."""
    if x > 0:
        raise ValueError("gauss_2f1 is restricted to x <= 0")
    a, b, c = complex(a), complex(b), complex(c)
    if _is_nonpositive_int(c):
        raise DegenerateParameterError(f"denominator parameter c = {c} degenerate")
    if x == 0.0:
        return complex(1.0)
    if _is_nonpositive_int(a):
        return _terminating_2f1(complex(round(a.real)), b, c, x)
    if _is_nonpositive_int(b):
        return _terminating_2f1(complex(round(b.real)), a, c, x)
    if x >= _CONNECTION_SWITCH:
        return _pfaff_2f1(a, b, c, x)
    d = b - a
    if abs(d) < 1e-12:
        if abs(a.imag) < 1e-13 and abs(c.imag) < 1e-13:
            return _connection_equal(a.real, c.real, x)
        return _pfaff_2f1(a, b, c, x)  # pragma: no cover - complex equal params
    if abs(d.imag) < 1e-9 and abs(d.real - round(d.real)) < 0.05:
        # near-integer parameter difference: the connection formula is
        # ill-conditioned, fall back to the (possibly slow) Pfaff series
        return _pfaff_2f1(a, b, c, x)
    return _connection_distinct(a, b, c, x)


def gauss_2f1_deriv(a: ComplexLike, b: ComplexLike, c: ComplexLike, x: float) -> complex:
    """d/dx 2F1(a, b; c; x) via the parameter-shift identity (ab/c) 2F1(+1)."""
    a, b, c = complex(a), complex(b), complex(c)
    if a == 0 or b == 0:
        return complex(0.0)
    return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x)


def jacobi_poly(n: int, alpha: float, beta: float, x: float) -> float:
    """Classical Jacobi polynomial P_n^(alpha,beta)(x), terminating series.

    The alternating sum is carried out in exact rational arithmetic (floats
    convert to dyadic rationals losslessly), so cancellation near polynomial
    zeros costs no relative accuracy; the single rounding happens on return.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if _is_nonpositive_int(alpha + 1) and -round(alpha + 1) < n:
        raise DegenerateParameterError(f"alpha = {alpha} degenerate for degree {n}")
    from fractions import Fraction

    al, be, y = Fraction(alpha), Fraction(beta), Fraction(1.0 - x) / 2
    total = Fraction(1)
    term = Fraction(1)
    for m in range(n):
        term *= Fraction(-n + m) * (n + al + be + 1 + m) * y
        term /= (al + 1 + m) * (m + 1)
        total += term
    lead = Fraction(1)
    for i in range(n):
        lead *= (al + 1 + i) / (i + 1)
    return float(lead * total)
