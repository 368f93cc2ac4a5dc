"""Alternating-parity index sequences and the subset expansion of the
generalized Chebyshev polynomials.

A(r, s) is the set of strictly increasing sequences (i_1, ..., i_s) in
{1, ..., r} whose j-th entry has the parity of j: odd, even, odd, ...
A(r, 0) holds the single empty sequence, standing for the empty product.
Attaching the weight

    w(r, s) = (-1)^r cos(pi (r+s) / 2)  in  {-1, 0, +1}

to each length s gives the expansion

    q_r(y_1,...,y_r) = sum_s w(r, s) * sum_{u in A(r,s)} prod_{i in u} y_i.

The weight vanishes exactly when r + s is odd, so only every other s
contributes.
"""

from collections.abc import Iterator
from functools import lru_cache

# |A(r, s)| grows combinatorially; past this arity callers must stream.
MATERIALIZE_LIMIT = 32

# Streamed enumerations for small arity are reused across evaluations.
_CACHE_ARITY = 24

AltSeq = tuple[int, ...]


def weight(r: int, s: int) -> int:
    """Exact value of (-1)^r cos(pi (r+s) / 2), by parity arithmetic.

    Zero when r + s is odd; otherwise (-1)^(r + (r+s)/2).  No
    floating-point cosine is involved.
    """
    if r < 0 or s < 0:
        raise ValueError("indices must be non-negative")
    if (r + s) & 1:
        return 0
    return -1 if (r + (r + s) // 2) & 1 else 1


def iter_alternating_sequences(r: int, s: int) -> Iterator[AltSeq]:
    """Yield the elements of A(r, s) in lexicographic order.

    Accepts any r >= 0 and 0 <= s <= r; for s = 0 the single empty
    sequence is yielded.  Use this streaming form above the
    materialization limit.
    """
    if r < 0 or s < 0 or s > r:
        raise ValueError(f"no such index family: r={r}, s={s}")
    if s == 0:
        yield ()
        return
    seq = [0] * s

    def extend(j: int, lowest: int) -> Iterator[AltSeq]:
        # Entry j (1-based) needs parity j mod 2 and room for s - j more,
        # which pack tightest as consecutive integers.
        first = lowest if lowest % 2 == j % 2 else lowest + 1
        for i in range(first, r - (s - j) + 1, 2):
            seq[j - 1] = i
            if j == s:
                yield tuple(seq)
            else:
                yield from extend(j + 1, i + 1)

    yield from extend(1, 1)


def alternating_sequences(r: int, s: int) -> list[AltSeq]:
    """A(r, s) as a lexicographically ordered list, for r >= 1.

    Refuses r beyond the materialization limit (the counts grow
    combinatorially); stream with iter_alternating_sequences instead.
    """
    if r < 1:
        raise ValueError("materialized enumeration needs r >= 1")
    if s < 0 or s > r:
        raise ValueError(f"no such index family: r={r}, s={s}")
    if r > MATERIALIZE_LIMIT:
        raise ValueError(
            f"r={r} exceeds the materialization limit {MATERIALIZE_LIMIT}; "
            "use iter_alternating_sequences"
        )
    return list(iter_alternating_sequences(r, s))


@lru_cache(maxsize=None)
def _cached_sequences(r: int, s: int) -> tuple[AltSeq, ...]:
    return tuple(iter_alternating_sequences(r, s))


def cheb_via_subsets(ys: list[int] | tuple[int, ...]) -> int:
    """q_r(y_1,...,y_r) evaluated through the subset expansion.

    Exponentially many monomials in r: intended for moderate arity and
    for cross-checking the recurrence evaluators.
    """
    r = len(ys)
    if r == 0:
        return 1
    total = 0
    for s in range(r % 2, r + 1, 2):
        seqs = (
            _cached_sequences(r, s)
            if r <= _CACHE_ARITY
            else iter_alternating_sequences(r, s)
        )
        block = 0
        for u in seqs:
            prod = 1
            for i in u:
                prod *= ys[i - 1]
            block += prod
        total += weight(r, s) * block
    return total


def reverse_involution(u: AltSeq, r: int) -> AltSeq:
    """The reversal i_j -> r - i_{s-j+1} + 1 on A(r, s).

    Parity-valid only when r and s have equal parity (otherwise the
    weight w(r, s) vanishes and no involution is needed); applying it
    twice gives back u.
    """
    s = len(u)
    if (r - s) & 1:
        raise ValueError("reversal is parity-valid only for r = s (mod 2)")
    _validate_member(u, r)
    return tuple(r - i + 1 for i in reversed(u))


def _validate_member(u: AltSeq, r: int) -> None:
    prev = 0
    for j, i in enumerate(u, start=1):
        if i <= prev or i > r:
            raise ValueError(f"{u} is not strictly increasing within 1..{r}")
        if i % 2 != j % 2:
            raise ValueError(f"{u} breaks the alternating parity at position {j}")
        prev = i
