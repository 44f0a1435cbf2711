"""Exact nonsymmetric Jack polynomials over the rational-function field Q(α).

Thin python facade over the C++ core. All values are exact; polynomials and
field elements render to text with the symbol α.
"""

from ._jackpoly import (
    Frac,
    Poly,
    constants,
    dual_g,
    dual_q,
    eigenvalues,
    integral,
    monic,
    monomial_symmetric,
    pair,
    pair_symmetric,
    symmetric_integral,
    symmetric_monic,
    verify,
)

__all__ = [
    "Frac",
    "Poly",
    "constants",
    "dual_g",
    "dual_q",
    "eigenvalues",
    "integral",
    "monic",
    "monomial_symmetric",
    "pair",
    "pair_symmetric",
    "symmetric_integral",
    "symmetric_monic",
    "verify",
]

__version__ = "0.1.0"
