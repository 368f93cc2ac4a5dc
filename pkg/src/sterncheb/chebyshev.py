"""Numeric evaluation of the generalized Chebyshev polynomials q_r and
the sequence pathways built on them.

    q_0 = 1,  q_1(y_1) = y_1,
    q_r(y_1,...,y_r) = y_1 q_{r-1}(y_2,...,y_r) - q_{r-2}(y_3,...,y_r).

For odd n with gap code (c_1,...,c_r), a(n) = q_r(c_1+1,...,c_r+1).
The constant-argument case q_r(v,...,v) collapses to a two-term linear
recurrence, and for n = (2^{rt}-1)/(2^t-1) a closed form evaluates in
O(log r) multiplications inside the ring Z[L] with L^2 = (t+1)L - 1.
"""

from collections.abc import Sequence

from ._bigint import HAVE_GMP, mpz
from .encoding import digit_sum, gaps_of

# Step counts above which the accumulators go through gmpy2.
_GMP_STEPS = 4096


def cheb_eval(ys: Sequence[int]) -> int:
    """q_r(y_1,...,y_r) by the suffix recurrence, r multiplications.

    Runs e_{r+1} = 1, e_r = y_r, e_i = y_i e_{i+1} - e_{i+2} and returns
    e_1.  The empty argument list gives q_0 = 1.  Arguments of either
    sign are fine; the polynomials live over all integers.
    """
    r = len(ys)
    if r == 0:
        return 1
    if HAVE_GMP and r >= _GMP_STEPS:
        cur, prev = mpz(ys[-1]), mpz(1)
    else:
        cur, prev = ys[-1], 1
    for i in range(r - 2, -1, -1):
        cur, prev = ys[i] * cur - prev, cur
    return int(cur)


def stern_via_gaps(n: int) -> int:
    """a(n) for odd n, through the gap code: q_r at the gaps plus one."""
    code = gaps_of(n)
    return cheb_eval([c + 1 for c in code])


def cheb_const(v: int, r: int) -> int:
    """q_r(v,...,v) via the linear recurrence b_0 = 1, b_1 = v,
    b_i = v b_{i-1} - b_{i-2}."""
    if r < 0:
        raise ValueError("polynomial index must be >= 0")
    if r == 0:
        return 1
    if HAVE_GMP and r >= _GMP_STEPS:
        prev, cur = mpz(1), mpz(v)
    else:
        prev, cur = 1, v
    for _ in range(r - 1):
        cur, prev = v * cur - prev, cur
    return int(cur)


def cheb_periodic(pattern: Sequence[int], r: int) -> int:
    """q_r(x_1,...,x_r) with x_i cycling through pattern.

    Period 1 reduces to cheb_const; longer periods cover arguments such
    as alternating (t, s, t, s, ...) blocks.
    """
    if not pattern:
        raise ValueError("pattern must be non-empty")
    if r < 0:
        raise ValueError("polynomial index must be >= 0")
    p = len(pattern)
    return cheb_eval([pattern[i % p] for i in range(r)])


class QuadInt:
    """Element a + b*L of the ring Z[L], L^2 = (t+1)*L - 1, for fixed t.

    L and its conjugate M = (t+1) - L are the two roots of
    x^2 - (t+1)x + 1; their product is 1, so both are units.
    """

    __slots__ = ("a", "b", "t")

    def __init__(self, a: int, b: int, t: int):
        self.a = a
        self.b = b
        self.t = t

    @classmethod
    def one(cls, t: int) -> "QuadInt":
        return cls(1, 0, t)

    @classmethod
    def root(cls, t: int) -> "QuadInt":
        """The distinguished root L itself."""
        return cls(0, 1, t)

    def conjugate(self) -> "QuadInt":
        """Image under L -> (t+1) - L, which swaps the two roots."""
        return QuadInt(self.a + (self.t + 1) * self.b, -self.b, self.t)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        if not isinstance(other, QuadInt):
            return NotImplemented
        if self.t != other.t:
            raise ValueError("ring parameters differ")
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return QuadInt(a * c - bd, a * d + b * c + (self.t + 1) * bd, self.t)

    def __pow__(self, exponent: int) -> "QuadInt":
        if exponent < 0:
            raise ValueError("negative powers not supported")
        result = QuadInt.one(self.t)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadInt)
            and self.a == other.a
            and self.b == other.b
            and self.t == other.t
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.t))

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b}, t={self.t})"


def binet(r: int, t: int) -> int:
    """a((2^{rt}-1)/(2^t-1)) in O(log r) big-integer multiplications.

    With L, M the roots of x^2 - (t+1)x + 1, the value is
    (L^r - M^r)/(L - M): exactly the L-coefficient of L^r in Z[L], so no
    square roots are ever taken.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if t < 2:
        raise ValueError("need t >= 2")
    return (QuadInt.root(t) ** r).b


_RESIDUE_BY_DIGIT_SUM = (0, 1, 1, 0, -1, -1)


def divisibility_class(n: int, k: int) -> int:
    """Predicted residue of a(n) mod k, one of {-1, 0, +1}.

    Valid when k divides the exponent of every power of 2 in the binary
    expansion of n (checked here).  The residue depends only on the
    digit sum s(n) mod 6: 0 for s in {0, 3}, +1 for s in {1, 2}, and
    -1 for s in {4, 5}.
    """
    if k < 1:
        raise ValueError("modulus must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if k > 1:
        bits = bin(n)[2:]
        for pos, ch in enumerate(reversed(bits)):
            if ch == "1" and pos % k:
                raise ValueError(
                    f"exponent {pos} in the expansion of n is not divisible by {k}"
                )
    return _RESIDUE_BY_DIGIT_SUM[digit_sum(n) % 6]
