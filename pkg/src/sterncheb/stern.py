"""Ground-truth evaluators of the Stern diatomic sequence.

    a(0) = 0,  a(1) = 1,  a(2n) = a(n),  a(2n+1) = a(n) + a(n+1).

build_table unfolds the recurrence into a dense table; stern_pair scans
the binary expansion once, maintaining the pair (a(m), a(m+1)), so it
reaches inputs with millions of bits.  Every other pathway in the
package is validated against these two.
"""

import re

from ._bigint import GMP_BITS, HAVE_GMP, mpz

# Beyond this the dense table stops being a sensible in-memory object.
TABLE_LIMIT = 1 << 24

_RUNS = re.compile("1+|0+")


def build_table(n: int) -> list[int]:
    """First n values of the sequence, table[m] = a(m).

    Every entry is below its index (for m > 1), so the values stay
    machine-word sized throughout the supported range.
    """
    if n < 2:
        raise ValueError("table needs at least the two seed entries a(0), a(1)")
    if n > TABLE_LIMIT:
        raise ValueError(f"table size {n} exceeds the supported {TABLE_LIMIT}")
    table = [0] * n
    table[1] = 1
    for m in range(2, n):
        half = m >> 1
        if m & 1:
            table[m] = table[half] + table[half + 1]
        else:
            table[m] = table[half]
    return table


def stern_pair(n: int) -> int:
    """a(n) from one most-significant-first pass over the bits of n.

    The scan carries the pair (x, y) = (a(m), a(m+1)) for the prefix m
    read so far; a 0-bit maps (x, y) -> (x, x+y) and a 1-bit maps
    (x, y) -> (x+y, y).  Long inputs batch maximal runs of equal bits,
    since k zeros give (x, y+k*x) and k ones give (x+k*y, y) at the cost
    of a single word-by-bignum multiply.  O(bits) time, O(1) state.
    """
    if n < 0:
        raise ValueError("the sequence is indexed by n >= 0")
    if n == 0:
        return 0
    bits = bin(n)[2:]
    if len(bits) < 1024:
        x, y = 0, 1
        for ch in bits:
            if ch == "1":
                x += y
            else:
                y += x
        return x
    if HAVE_GMP and len(bits) >= GMP_BITS:
        x, y = mpz(0), mpz(1)
    else:
        x, y = 0, 1
    ones = True
    for run in _RUNS.findall(bits):
        k = len(run)
        if ones:
            x += k * y
        else:
            y += k * x
        ones = not ones
    return int(x)
