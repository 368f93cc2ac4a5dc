"""Binary expansions, gap codes, and bit-level utilities.

An odd integer n with 1-bits at positions 0 = d_0 < d_1 < ... < d_r is
encoded by its gap code (c_1, ..., c_r), where c_i = d_i - d_{i-1} is the
distance between consecutive 1-bits.  Decoding extends to arbitrary
non-negative gaps: value_of returns 2^{d_r} + ... + 2^{d_1} + 1 with
d_i = c_1 + ... + c_i, summing repeated powers arithmetically when some
c_i = 0 (the result then need not be a binary expansion).

Gap codes are plain lists of machine-sized ints: a gap is a bit-position
difference, and inputs beyond 2^64 bits are out of physical scope.
"""

from ._bigint import from_decimal


def gaps_of(n: int) -> list[int]:
    """Gap code of an odd integer n >= 1.

    All returned gaps are >= 1; the empty list encodes 1.  Callers holding
    an even value must strip trailing zero bits first (see to_odd); the
    sequence value a(n) is unchanged by that reduction.
    """
    if n < 1:
        raise ValueError("gap code is defined for n >= 1")
    if n & 1 == 0:
        raise ValueError("gap code is defined for odd n; reduce with to_odd first")
    bits = bin(n)[2:]
    positions = [i for i, ch in enumerate(reversed(bits)) if ch == "1"]
    return [positions[i] - positions[i - 1] for i in range(1, len(positions))]


def value_of(code: list[int] | tuple[int, ...]) -> int:
    """Integer 2^{d_r} + ... + 2^{d_1} + 1 with d_i the partial sums of code.

    Zero gaps are allowed; the corresponding equal powers are summed
    arithmetically.  The empty code decodes to 1.
    """
    n = 1
    d = 0
    for c in code:
        if c < 0:
            raise ValueError("gaps must be non-negative")
        d += c
        n += 1 << d
    return n


def bit_reverse(n: int) -> int:
    """Integer whose binary digits are those of n in reverse order.

    Defined for n >= 1 only: the leading 1 anchors the reversal.  On odd
    input the gap code of the result is the reversed gap code of n.
    """
    if n < 1:
        raise ValueError("bit reversal needs a leading digit; n must be >= 1")
    return int(bin(n)[:1:-1], 2)


def digit_sum(n: int) -> int:
    """Number of 1-bits in the binary expansion of n >= 0."""
    if n < 0:
        raise ValueError("digit sum is defined for n >= 0")
    return n.bit_count()


def to_odd(n: int) -> tuple[int, int]:
    """Factor n >= 1 as odd * 2^twos, returning (odd, twos)."""
    if n < 1:
        raise ValueError("cannot factor out powers of two from n < 1")
    twos = (n & -n).bit_length() - 1
    return n >> twos, twos


def parse_nat(text: str) -> int:
    """Parse a non-negative integer literal: decimal, or hex with 0x prefix."""
    t = text.strip()
    if t.startswith(("0x", "0X")):
        n = int(t, 16)
    else:
        if not t or t[0] == "-" or not t.isdigit():
            raise ValueError(f"not a non-negative integer literal: {text!r}")
        n = from_decimal(t)
    if n < 0:
        raise ValueError(f"not a non-negative integer literal: {text!r}")
    return n


def parse_gap_code(text: str) -> list[int]:
    """Parse a bracketed gap-code literal such as [2,2] or []."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"gap code literal must be bracketed: {text!r}")
    inner = t[1:-1].strip()
    if not inner:
        return []
    code = []
    for part in inner.split(","):
        part = part.strip()
        if not part.isdigit():
            raise ValueError(f"bad gap entry {part!r} in {text!r}")
        code.append(int(part))
    return code
