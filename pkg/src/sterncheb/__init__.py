"""Exact arithmetic for the Stern diatomic sequence.

    a(0) = 0,  a(1) = 1,  a(2n) = a(n),  a(2n+1) = a(n) + a(n+1)

The sequence is computed through several independent pathways (binary
pair scan, gap-code polynomial evaluation, tridiagonal determinant,
alternating-parity subset expansion, and a closed form in a quadratic
integer ring), all exact at any input size.  Symbolic builders expose
the underlying generalized Chebyshev polynomials, and the identities
module machine-checks the relations connecting everything.

>>> from sterncheb import stern_pair, stern_via_gaps
>>> stern_pair(21), stern_via_gaps(21)
(8, 8)
"""

from .chebyshev import (
    QuadInt,
    binet,
    cheb_const,
    cheb_eval,
    cheb_periodic,
    divisibility_class,
    stern_via_gaps,
)
from .determinant import continuant_det, stern_via_det
from .encoding import (
    bit_reverse,
    digit_sum,
    gaps_of,
    parse_gap_code,
    parse_nat,
    to_odd,
    value_of,
)
from .identities import Failure, Report
from .stern import build_table, stern_pair
from .subsets import (
    alternating_sequences,
    cheb_via_subsets,
    iter_alternating_sequences,
    reverse_involution,
    weight,
)
from .sympoly import Poly, cheb_poly, cheb_poly_subsets, gap_poly

__version__ = "0.1.0"

__all__ = [
    "QuadInt",
    "binet",
    "cheb_const",
    "cheb_eval",
    "cheb_periodic",
    "divisibility_class",
    "stern_via_gaps",
    "continuant_det",
    "stern_via_det",
    "bit_reverse",
    "digit_sum",
    "gaps_of",
    "parse_gap_code",
    "parse_nat",
    "to_odd",
    "value_of",
    "Failure",
    "Report",
    "build_table",
    "stern_pair",
    "alternating_sequences",
    "cheb_via_subsets",
    "iter_alternating_sequences",
    "reverse_involution",
    "weight",
    "Poly",
    "cheb_poly",
    "cheb_poly_subsets",
    "gap_poly",
    "__version__",
]
