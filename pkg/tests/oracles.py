"""Shared test oracles, independent of the code paths they check.

Exact integrals: at the reference point (b, iota) = (1, 1) the measure
density on t > 0 is 16 sinh^3(t) cosh(t), so for any span pair the product
integrand is a finite sum of sinh^p cosh^-q terms with p odd, and the
substitution u = cosh t turns each term into a rational antiderivative.
Everything below is carried out in Fraction arithmetic; no quadrature, no
floating point.
"""

from __future__ import annotations

from fractions import Fraction

from bc1co.algebra import AlgebraParams, SigmaSpan


def _half_line_integral(power: int, tanh_sq: int) -> Fraction:
    """integral over (0, inf) of sinh^(3 + 2*tanh_sq) cosh^(1 - power - 2*tanh_sq) dt.

    Expands (c^2 - 1)^(1 + tanh_sq) against powers of c = cosh t; requires the
    exponents to decay, i.e. power > 4.
    """
    if power <= 4:
        raise ValueError("integral diverges")
    # (c^2 - 1)^(1+s) * c^(1 - power - 2s) integrated over (1, inf)
    s = tanh_sq
    total = Fraction(0)
    # binomial expansion of (c^2 - 1)^(1+s)
    from math import comb

    for j in range(s + 2):
        coeff = Fraction((-1) ** j * comb(s + 1, j))
        expo = 2 * (s + 1 - j) + 1 - power - 2 * s  # power of c
        # integral of c^expo over (1, inf) = 1 / (-expo - 1), needs expo < -1
        total += coeff * Fraction(1, -expo - 1)
    return total


def exact_pair_integral(
    base: AlgebraParams, f: SigmaSpan, g: SigmaSpan
) -> Fraction:
    """Exact integral of f * g against the measure; reference multiplicities only."""
    assert base.b == 1 and base.iota == 1, "oracle hard-wired to (b, iota) = (1, 1)"
    assert base.sigma.denominator == 1
    sigma = int(base.sigma)
    total = Fraction(0)
    for (mi, ei), ci in f.terms.items():
        for (mj, ej), cj in g.terms.items():
            eps = ei + ej
            if eps % 2 == 1:
                continue  # odd integrand
            power = 2 * sigma + 2 * (mi + mj)
            total += 32 * ci * cj * _half_line_integral(power, eps // 2)
    return total
