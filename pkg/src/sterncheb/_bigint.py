"""Big-integer backend selection.

CPython integers are exact at any size but their add/mul kernels fall
behind GMP once operands reach a few hundred thousand bits.  The hot
evaluators switch to gmpy2.mpz above a size threshold and hand plain
``int`` back to callers.  Without gmpy2 everything still works, just
slower on very large inputs.
"""

try:
    from gmpy2 import mpz

    HAVE_GMP = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int
    HAVE_GMP = False

# Operand size (bits) above which mpz wins by a wide margin.
GMP_BITS = 1 << 14

# str(int) / int(str) are quadratic in CPython; GMP's conversions are not.
_DEC_FAST_BITS = 1 << 14


def to_decimal(n: int) -> str:
    """Decimal string of n, subquadratic even for million-bit values."""
    if HAVE_GMP and n.bit_length() > _DEC_FAST_BITS:
        return mpz(n).digits(10)
    return str(n)


def from_decimal(text: str) -> int:
    """Parse a decimal string, subquadratic even for huge literals."""
    if HAVE_GMP and len(text) > 4000:
        return int(mpz(text))
    return int(text)
