"""The determinant pathway: continuants of tridiagonal matrices.

For the r x r matrix with diagonal (y_1,...,y_r) and 1's on the sub- and
super-diagonal, the determinant satisfies the three-term recurrence

    D_0 = 1,  D_1 = y_1,  D_i = y_i D_{i-1} - D_{i-2},

which is the whole implementation: the matrix is never materialized.
The r = 0 case is the empty matrix with determinant 1.  For odd n with
gap code (c_1,...,c_r), a(n) is the determinant at diagonal
(c_1+1,...,c_r+1), i.e. det(I_r + M_r(c_1,...,c_r)).
"""

from collections.abc import Sequence

from ._bigint import HAVE_GMP, mpz
from .encoding import gaps_of

_GMP_STEPS = 4096


def continuant_det(diag: Sequence[int]) -> int:
    """Determinant of the tridiagonal matrix with the given diagonal and
    unit off-diagonals."""
    if HAVE_GMP and len(diag) >= _GMP_STEPS:
        prev, cur = mpz(0), mpz(1)
    else:
        prev, cur = 0, 1
    for y in diag:
        cur, prev = y * cur - prev, cur
    return int(cur)


def stern_via_det(n: int) -> int:
    """a(n) for odd n, as the determinant over diagonal gaps-plus-one."""
    code = gaps_of(n)
    return continuant_det([c + 1 for c in code])
