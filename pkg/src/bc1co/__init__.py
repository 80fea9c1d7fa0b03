"""Rank-one (BC1) Cherednik-Opdam transform toolkit.

Exact rational verification of the shift-operator identities behind the
Jacobi-type orthogonal functions, floating-point special functions, the
forward transform by quadrature, and closed-form transform formulas checked
against each other.
"""

from .algebra import (
    AlgebraParams,
    OperatorPoly,
    SigmaSpan,
    bernstein_even,
    bernstein_odd,
    cherednik_apply,
    direct_q_span,
    operator_apply,
    rodrigues_span,
    span_normalize,
    weight_span,
)
from .errors import (
    Bc1Error,
    DegenerateParameterError,
    GammaOverflowError,
    ParameterDomainError,
    PoleError,
    QuadratureError,
    SlowConvergenceError,
)

__version__ = "0.1.0"
