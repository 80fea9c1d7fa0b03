"""Exact rational engine for the hyperbolic-weight monomial family.

Everything in this module works on finite sums

    f(t) = sum over (m, eps) of  c[m, eps] * cosh(t)**-(sigma + 2m) * tanh(t)**eps

with shift index m >= 0, parity bit eps in {0, 1} and coefficients c[m, eps]
stored as exact ``fractions.Fraction`` values.  Powers tanh**j with j >= 2 are
always eliminated through tanh^2 = 1 - cosh^-2, so the representation above is
a normal form: two spans over the same base parameters are equal iff their
term maps are equal.

The family is closed under the rank-one differential-reflection operator

    D = d/dt + 2*iota/(1 - exp(-4t))*(1 - s) + 2*b/(1 - exp(-2t))*(1 - s) - rho

where (s f)(t) = f(-t) and rho = b + iota.  Writing E_m for the even monomial
cosh**-(sigma+2m) and O_m = E_m * tanh, the action on the family is (with
a = sigma + 2m):

    D E_m = -rho * E_m - a * O_m
    D O_m = (2*rho - a) * E_m + rho * O_m + (a + 1 - iota) * E_{m+1}

The odd rule follows from tanh(t)/(1 - exp(-2t)) = (1 + tanh t)/2 and
tanh(t)/(1 - exp(-4t)) = 1/2 + tanh(t)/2 - cosh(t)**-2/4.  Both rules are
validated pointwise against the defining formula of D in the test suite; all
operator identities in this module reduce to them by exact arithmetic.

Coefficients never touch floating point: parameters are rationals and float
inputs are rejected at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateParameterError, ParameterDomainError

RatLike = Fraction | int | str

__all__ = [
    "AlgebraParams",
    "SigmaSpan",
    "OperatorPoly",
    "as_fraction",
    "rising",
    "span_normalize",
    "cherednik_apply",
    "operator_apply",
    "weight_span",
    "bernstein_poly",
    "bernstein_scalar",
    "bernstein_even",
    "bernstein_odd",
    "shift_poly",
    "q_operator_poly",
    "rodrigues_span",
    "direct_q_span",
]


def as_fraction(x: RatLike) -> Fraction:
    """Coerce to an exact Fraction; floats are rejected, not silently rounded."""
    if isinstance(x, float):
        raise ParameterDomainError(
            f"exact engine requires rational input, got float {x!r}"
        )
    return Fraction(x)


def rising(a: Fraction, m: int) -> Fraction:
    """Pochhammer symbol (a)_m = a (a+1) ... (a+m-1) over the rationals."""
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


@dataclass(frozen=True)
class AlgebraParams:
    """Root multiplicities and base weight exponent, all exact rationals.

    b is the multiplicity of the short root pair, iota twice the multiplicity
    of the long pair; rho = b + iota.  Membership of the base weight in the
    L2 space requires sigma > iota + b.
    """

    b: Fraction
    iota: Fraction
    sigma: Fraction

    def __init__(self, b: RatLike, iota: RatLike, sigma: RatLike):
        object.__setattr__(self, "b", as_fraction(b))
        object.__setattr__(self, "iota", as_fraction(iota))
        object.__setattr__(self, "sigma", as_fraction(sigma))
        if self.b <= 0 or self.iota <= 0:
            raise ParameterDomainError("multiplicities b and iota must be positive")
        if self.sigma <= self.iota + self.b:
            raise ParameterDomainError(
                f"sigma must exceed iota + b = {self.iota + self.b}, got {self.sigma}"
            )

    @property
    def rho(self) -> Fraction:
        return self.b + self.iota

    @property
    def sigma0(self) -> Fraction:
        return self.sigma - (self.iota + self.b + 1)

    @property
    def delta0(self) -> Fraction:
        return (self.iota - 1) / 2 + self.b

    @property
    def delta1(self) -> Fraction:
        return self.delta0 + 1


class SigmaSpan:
    """Normal-form span of cosh**-(sigma+2m) * tanh**eps monomials."""

    __slots__ = ("base", "terms")

    def __init__(self, base: AlgebraParams, terms: dict[tuple[int, int], Fraction] | None = None):
        self.base = base
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (m, eps), coeff in terms.items():
                if coeff:
                    self.terms[(m, eps)] = coeff

    @classmethod
    def zero(cls, base: AlgebraParams) -> SigmaSpan:
        return cls(base)

    @classmethod
    def monomial(cls, base: AlgebraParams, m: int, eps: int, coeff: RatLike = 1) -> SigmaSpan:
        if m < 0 or eps not in (0, 1):
            raise ValueError(f"monomial index out of range: m={m}, eps={eps}")
        return cls(base, {(m, eps): as_fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SigmaSpan):
            return NotImplemented
        return self.base == other.base and self.terms == other.terms

    def __hash__(self):  # pragma: no cover - spans are not used as dict keys
        return hash((self.base, frozenset(self.terms.items())))

    def __add__(self, other: SigmaSpan) -> SigmaSpan:
        if self.base != other.base:
            raise ValueError("cannot combine spans over different base parameters")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, Fraction(0)) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return SigmaSpan(self.base, out)

    def __sub__(self, other: SigmaSpan) -> SigmaSpan:
        return self + other.scale(-1)

    def scale(self, factor: RatLike) -> SigmaSpan:
        factor = as_fraction(factor)
        if not factor:
            return SigmaSpan.zero(self.base)
        return SigmaSpan(self.base, {k: c * factor for k, c in self.terms.items()})

    def shift(self, j: int = 1) -> SigmaSpan:
        """Multiply by cosh**-2j, i.e. move every shift index up by j."""
        return SigmaSpan(self.base, {(m + j, eps): c for (m, eps), c in self.terms.items()})

    def times_tanh(self) -> SigmaSpan:
        """Multiply by tanh t, reducing tanh^2 = 1 - cosh^-2 on odd terms."""
        out = SigmaSpan.zero(self.base)
        for (m, eps), c in self.terms.items():
            if eps == 0:
                out = out + SigmaSpan(self.base, {(m, 1): c})
            else:
                out = out + SigmaSpan(self.base, {(m, 0): c, (m + 1, 0): -c})
        return out

    def evaluate(self, t: float) -> float:
        """Floating-point value of the span at a real point t."""
        sig = float(self.base.sigma)
        sech = 1.0 / math.cosh(t)
        th = math.tanh(t)
        total = 0.0
        for (m, eps), c in sorted(self.terms.items()):
            total += float(c) * sech ** (sig + 2 * m) * (th if eps else 1.0)
        return total

    def to_json(self) -> list[dict]:
        """JSON-ready term list: [{m, eps, num, den}, ...] in sorted order."""
        return [
            {"m": m, "eps": eps, "num": c.numerator, "den": c.denominator}
            for (m, eps), c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, base: AlgebraParams, items: Iterable[dict]) -> SigmaSpan:
        terms: dict[tuple[int, int], Fraction] = {}
        for it in items:
            terms[(int(it["m"]), int(it["eps"]))] = Fraction(int(it["num"]), int(it["den"]))
        return cls(base, terms)

    def __repr__(self):
        body = " + ".join(
            f"{c}*E{m}" if eps == 0 else f"{c}*O{m}"
            for (m, eps), c in sorted(self.terms.items())
        )
        return f"SigmaSpan({body or '0'})"


def span_normalize(
    raw_terms: Sequence[tuple[int, int, RatLike]], base: AlgebraParams
) -> SigmaSpan:
    """Reduce (m, tanh-power j, coeff) triples to the (m, eps) normal form.

    tanh**j with j >= 2 is expanded through tanh^2 = 1 - cosh^-2 until every
    term carries eps in {0, 1}.
    """
    out = SigmaSpan.zero(base)
    for m, j, coeff in raw_terms:
        if m < 0 or j < 0:
            raise ValueError(f"invalid raw term m={m}, j={j}")
        piece = SigmaSpan.monomial(base, m, 0, coeff)
        for _ in range(j):
            piece = piece.times_tanh()
        out = out + piece
    return out


def cherednik_apply(f: SigmaSpan) -> SigmaSpan:
    """Exact action of the Cherednik operator D on a normal-form span."""
    p = f.base
    rho, iota, sigma = p.rho, p.iota, p.sigma
    out: dict[tuple[int, int], Fraction] = {}

    def add(key: tuple[int, int], val: Fraction) -> None:
        new = out.get(key, Fraction(0)) + val
        if new:
            out[key] = new
        else:
            out.pop(key, None)

    for (m, eps), c in f.terms.items():
        a = sigma + 2 * m
        if eps == 0:
            add((m, 0), -rho * c)
            add((m, 1), -a * c)
        else:
            add((m, 0), (2 * rho - a) * c)
            add((m, 1), rho * c)
            add((m + 1, 0), (a + 1 - iota) * c)
    return SigmaSpan(f.base, out)


class OperatorPoly:
    """Polynomial in the Cherednik operator D with exact rational coefficients.

    Stored as an ascending coefficient list; applied to spans Horner-style by
    repeated cherednik_apply.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RatLike]):
        cs = [as_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: list[Fraction] = cs

    @classmethod
    def one(cls) -> OperatorPoly:
        return cls([1])

    @classmethod
    def x_plus(cls, shift: RatLike) -> OperatorPoly:
        """The linear polynomial x + shift."""
        return cls([as_fraction(shift), Fraction(1)])

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __mul__(self, other: OperatorPoly) -> OperatorPoly:
        if not self.coeffs or not other.coeffs:
            return OperatorPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return OperatorPoly(out)

    def __add__(self, other: OperatorPoly) -> OperatorPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            out[i] += a
        for i, b in enumerate(other.coeffs):
            out[i] += b
        return OperatorPoly(out)

    def scale(self, factor: RatLike) -> OperatorPoly:
        factor = as_fraction(factor)
        return OperatorPoly([c * factor for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def eval_rational(self, x: RatLike) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"OperatorPoly({[str(c) for c in self.coeffs]})"


def operator_apply(poly: OperatorPoly, f: SigmaSpan) -> SigmaSpan:
    """Exact P(D) f via Horner recursion on cherednik_apply."""
    if not poly.coeffs:
        return SigmaSpan.zero(f.base)
    acc = f.scale(poly.coeffs[-1])
    for c in reversed(poly.coeffs[:-1]):
        acc = cherednik_apply(acc) + f.scale(c)
    return acc


def weight_span(params: AlgebraParams, m: int, k: int, eps: int) -> SigmaSpan:
    """Expansion of cosh**-(sigma+2m) tanh**(2k) (tanh)**eps into the family.

    Uses tanh^(2k) = (1 - cosh^-2)^k, i.e. coefficients (-k)_j / j!.
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be non-negative")
    terms: dict[tuple[int, int], Fraction] = {}
    for j in range(k + 1):
        coeff = rising(Fraction(-k), j) / math.factorial(j)
        if coeff:
            terms[(m + j, eps)] = coeff
    return SigmaSpan(params, terms)


def bernstein_poly(params: AlgebraParams, m: int) -> OperatorPoly:
    """The degree-2m shift operator polynomial

    B_m(x) = prod_{i=0}^{m-1} ((sigma - rho + 2i)^2 - x^2) / 4.
    """
    out = OperatorPoly.one()
    base = params.sigma - params.rho
    for i in range(m):
        r = base + 2 * i
        out = out * OperatorPoly([r * r / 4, 0, Fraction(-1, 4)])
    return out


def bernstein_scalar(params: AlgebraParams, m: int) -> Fraction:
    """The matching scalar (sigma/2)_m ((sigma+1-iota)/2)_m."""
    return rising(params.sigma / 2, m) * rising((params.sigma + 1 - params.iota) / 2, m)


def bernstein_even(params: AlgebraParams, m: int) -> tuple[SigmaSpan, SigmaSpan]:
    """Both sides of the even shift identity B_m(D) w = b_m * w_{+2m}."""
    lhs = operator_apply(bernstein_poly(params, m), SigmaSpan.monomial(params, 0, 0))
    rhs = SigmaSpan.monomial(params, m, 0, bernstein_scalar(params, m))
    return lhs, rhs


def bernstein_odd(params: AlgebraParams, m: int) -> tuple[SigmaSpan, SigmaSpan]:
    """Both sides of the odd variant

    (D + rho) B_m(D) w = (-sigma) (sigma/2 + 1)_m ((sigma+1-iota)/2)_m w_{+2m} tanh.
    """
    op = OperatorPoly.x_plus(params.rho) * bernstein_poly(params, m)
    lhs = operator_apply(op, SigmaSpan.monomial(params, 0, 0))
    coeff = (
        -params.sigma
        * rising(params.sigma / 2 + 1, m)
        * rising((params.sigma + 1 - params.iota) / 2, m)
    )
    rhs = SigmaSpan.monomial(params, m, 1, coeff)
    return lhs, rhs


def shift_poly(params: AlgebraParams, which: str, k: int, m: int) -> OperatorPoly:
    """The terminating 3F2-type factor polynomials of the weighted shifts.

    which = "L": denominators (sigma/2 + m)_j, ((sigma+1-iota)/2 + m)_j;
    which = "M": denominators (sigma/2 + 1 + m)_j, ((sigma+1-iota)/2 + m)_j.
    Numerator Pochhammers sit at (sigma - rho)/2 + m +- x/2, giving exact
    even polynomials of degree 2k.
    """
    if which not in ("L", "M"):
        raise ValueError("which must be 'L' or 'M'")
    d1 = params.sigma / 2 + m + (1 if which == "M" else 0)
    d2 = (params.sigma + 1 - params.iota) / 2 + m
    out = OperatorPoly([0])
    base = params.sigma - params.rho + 2 * m
    prod = OperatorPoly.one()
    for j in range(k + 1):
        den = math.factorial(j) * rising(d1, j) * rising(d2, j)
        if den == 0:
            raise DegenerateParameterError(
                f"zero denominator Pochhammer in {which}_({k},{m}) at j={j}"
            )
        num = rising(Fraction(-k), j)
        out = out + prod.scale(num / den)
        r = base + 2 * j
        prod = prod * OperatorPoly([r * r / 4, 0, Fraction(-1, 4)])
    return out


def q_operator_poly(params: AlgebraParams, n: int, parity: int) -> OperatorPoly:
    """Operator polynomial whose action on the base weight yields Q_(n,parity).

    Even: degree 2n; odd: degree 2n + 1 with the (x + rho) prefactor and
    leading scalar -1/sigma.
    """
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    s0, d0, d1 = params.sigma0, params.delta0, params.delta1
    lead = rising(s0 + 1, n) / math.factorial(n)
    out = OperatorPoly([0])
    for m in range(n + 1):
        if parity == 1:
            den = bernstein_scalar(params, m)
        else:
            den = rising(params.sigma / 2 + 1, m) * rising(
                (params.sigma + 1 - params.iota) / 2, m
            )
        if den == 0:
            raise DegenerateParameterError(
                f"zero divisor in operator polynomial at m={m}"
            )
        d = d0 if parity == 1 else d1
        num = rising(Fraction(-n), m) * rising(n + s0 + d + 1, m)
        den = den * rising(s0 + 1, m) * math.factorial(m)
        out = out + bernstein_poly(params, m).scale(num / den)
    out = out.scale(lead)
    if parity == -1:
        out = OperatorPoly.x_plus(params.rho) * out
        out = out.scale(Fraction(-1) / params.sigma)
    return out


def rodrigues_span(params: AlgebraParams, n: int, k: int, parity: int) -> SigmaSpan:
    """Q_(n,parity) with tanh-power index k, built by operators acting on w."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    w = SigmaSpan.monomial(params, 0, 0)
    if k == 0:
        return operator_apply(q_operator_poly(params, n, parity), w)
    s0 = params.sigma0
    d = params.delta0 if parity == 1 else params.delta1
    lead = rising(s0 + 1, n) / math.factorial(n)
    out = SigmaSpan.zero(params)
    for m in range(n + 1):
        coeff = rising(Fraction(-n), m) * rising(n + s0 + d + 2 * k + 1, m)
        coeff /= rising(s0 + 1, m) * math.factorial(m)
        if parity == 1:
            den = bernstein_scalar(params, m)
            op = bernstein_poly(params, m) * shift_poly(params, "L", k, m)
        else:
            den = (
                -params.sigma
                * rising(params.sigma / 2 + 1, m)
                * rising((params.sigma + 1 - params.iota) / 2, m)
            )
            op = (
                OperatorPoly.x_plus(params.rho)
                * bernstein_poly(params, m)
                * shift_poly(params, "M", k, m)
            )
        if den == 0:
            raise DegenerateParameterError(f"zero divisor at m={m}")
        out = out + operator_apply(op, w).scale(lead * coeff / den)
    return out


def direct_q_span(params: AlgebraParams, n: int, k: int, parity: int) -> SigmaSpan:
    """Q_(n,parity) expanded directly from its Jacobi-polynomial definition.

    The Jacobi polynomial in 2 tanh^2 - 1 is written as the terminating Gauss
    series in cosh^-2 and multiplied term by term against the weight
    expansion; this path never touches the operator D, so it serves as the
    independent counterpart of rodrigues_span.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    s0 = params.sigma0
    d = (params.delta0 if parity == 1 else params.delta1) + 2 * k
    lead = rising(s0 + 1, n) / math.factorial(n)
    eps = 0 if parity == 1 else 1
    out = SigmaSpan.zero(params)
    for m in range(n + 1):
        coeff = rising(Fraction(-n), m) * rising(n + s0 + d + 1, m)
        den = rising(s0 + 1, m) * math.factorial(m)
        if den == 0:
            raise DegenerateParameterError(f"zero divisor at m={m}")
        out = out + weight_span(params, m, k, eps).scale(lead * coeff / den)
    return out
