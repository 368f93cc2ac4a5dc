"""Exact sparse symbolic polynomials, squarefree by construction.

A monomial is a bitset of 1-based variable indices (bit i-1 set means
variable i is present); since everything built here is multilinear, the
support set is the whole story.  A Poly maps monomial bitsets to nonzero
integer coefficients at a fixed arity.

Two independent builders produce the generalized Chebyshev polynomial
q_r (recurrence vs. subset expansion), and gap_poly derives the shifted
family p_r(x_1,...,x_r) = q_r(x_1+1,...,x_r+1), whose value at a gap
code is the sequence value itself.
"""

from collections.abc import Sequence

from .subsets import iter_alternating_sequences, weight

# Term counts follow a Fibonacci law for q and explode further under the
# p substitution; the guards are hard errors, not silent truncation.
Q_ARITY_LIMIT = 28
P_ARITY_LIMIT = 20


class Poly:
    """Sparse multilinear polynomial with integer coefficients.

    Instances are treated as immutable: every operation returns a new
    Poly.  ``terms`` maps a support bitset to its nonzero coefficient;
    ``var`` is only a rendering hint ("y" for the q family, "x" for p).
    """

    __slots__ = ("arity", "terms", "var")

    def __init__(self, arity: int, terms: dict[int, int] | None = None, var: str = "y"):
        if arity < 0:
            raise ValueError("arity must be >= 0")
        clean: dict[int, int] = {}
        for mask, coeff in (terms or {}).items():
            if mask < 0 or mask >> arity:
                raise ValueError(f"support {bin(mask)} outside arity {arity}")
            if coeff:
                clean[mask] = coeff
        self.arity = arity
        self.terms = clean
        self.var = var

    @classmethod
    def constant(cls, value: int, arity: int = 0, var: str = "y") -> "Poly":
        return cls(arity, {0: value} if value else {}, var)

    @classmethod
    def variable(cls, index: int, arity: int, var: str = "y") -> "Poly":
        if not 1 <= index <= arity:
            raise ValueError(f"variable index {index} outside 1..{arity}")
        return cls(arity, {1 << (index - 1): 1}, var)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch in polynomial sum")
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            new = terms.get(mask, 0) + coeff
            if new:
                terms[mask] = new
            else:
                terms.pop(mask, None)
        return Poly(self.arity, terms, self.var)

    def __neg__(self) -> "Poly":
        return Poly(self.arity, {m: -c for m, c in self.terms.items()}, self.var)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def shift_mul(self, index: int) -> "Poly":
        """Multiply by the single variable ``index``.

        The index must be absent from every term; a repeat would break
        squarefreeness, so it is rejected.
        """
        if not 1 <= index <= self.arity:
            raise ValueError(f"variable index {index} outside 1..{self.arity}")
        bit = 1 << (index - 1)
        terms = {}
        for mask, coeff in self.terms.items():
            if mask & bit:
                raise ValueError(
                    f"variable {index} already present; product would not be squarefree"
                )
            terms[mask | bit] = coeff
        return Poly(self.arity, terms, self.var)

    def evaluate(self, args: Sequence[int]) -> int:
        """Exact value at the given argument vector."""
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        total = 0
        for mask, coeff in self.terms.items():
            prod = coeff
            m = mask
            while m:
                prod *= args[(m & -m).bit_length() - 1]
                m &= m - 1
            total += prod
        return total

    def reverse(self) -> "Poly":
        """New polynomial with variable i replaced by arity - i + 1."""
        r = self.arity
        terms = {}
        for mask, coeff in self.terms.items():
            new = 0
            m = mask
            while m:
                new |= 1 << (r - (m & -m).bit_length())
                m &= m - 1
            terms[new] = coeff
        return Poly(r, terms, self.var)

    def support_sets(self) -> list[tuple[int, ...]]:
        """Canonically ordered supports, as 1-based index tuples."""
        return [idx for idx, _ in self._canonical()]

    def _canonical(self) -> list[tuple[tuple[int, ...], int]]:
        # Degree-descending, then lexicographic by support indices.
        def indices(mask: int) -> tuple[int, ...]:
            out = []
            while mask:
                out.append((mask & -mask).bit_length())
                mask &= mask - 1
            return tuple(out)

        entries = [(indices(m), c) for m, c in self.terms.items()]
        entries.sort(key=lambda e: (-len(e[0]), e[0]))
        return entries

    def render(self, fmt: str = "text") -> str:
        """Deterministic rendering; coefficient +-1 appears as sign only."""
        if fmt not in ("text", "latex"):
            raise ValueError(f"unknown format {fmt!r}")
        entries = self._canonical()
        if not entries:
            return "0"
        pieces = []
        for pos, (idx, coeff) in enumerate(entries):
            mag = abs(coeff)
            if fmt == "text":
                body = "*".join(f"{self.var}{i}" for i in idx)
                if not idx:
                    body = str(mag)
                elif mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = "".join(f"{self.var}_{{{i}}}" for i in idx)
                if not idx:
                    body = str(mag)
                elif mag != 1:
                    body = f"{mag}{body}"
            if pos == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def json_terms(self) -> list[dict]:
        """Canonically ordered [{support: [...], coeff: "..."}] objects."""
        return [
            {"support": list(idx), "coeff": str(coeff)}
            for idx, coeff in self._canonical()
        ]

    def __repr__(self) -> str:
        return f"Poly({self.arity}, {self.render()!r})"


def cheb_poly(r: int) -> Poly:
    """q_r as a Poly, built right-to-left from the defining recurrence.

    e_{r+1} = 1 and e_r = y_r seed suffix polynomials in the variables
    y_i..y_r; e_i = y_i e_{i+1} - e_{i+2} never repeats an index, so
    every product is a plain shift.
    """
    _check_arity(r, Q_ARITY_LIMIT)
    if r == 0:
        return Poly.constant(1)
    above = Poly.constant(1, r)
    cur = Poly.variable(r, r)
    for i in range(r - 1, 0, -1):
        cur, above = cur.shift_mul(i) - above, cur
    return cur


def cheb_poly_subsets(r: int) -> Poly:
    """q_r assembled term-by-term from the subset expansion.

    Independent of cheb_poly: each alternating-parity sequence
    contributes its support with the weight of its length.
    """
    _check_arity(r, Q_ARITY_LIMIT)
    terms: dict[int, int] = {}
    if r == 0:
        return Poly.constant(1)
    for s in range(r % 2, r + 1, 2):
        w = weight(r, s)
        for u in iter_alternating_sequences(r, s):
            mask = 0
            for i in u:
                mask |= 1 << (i - 1)
            terms[mask] = w
    return Poly(r, terms)


def gap_poly(r: int) -> Poly:
    """p_r(x_1,...,x_r) = q_r(x_1+1,...,x_r+1), expanded.

    Substituting x_i + 1 spreads each monomial over the subsets of its
    support, which keeps everything multilinear but inflates the term
    count; hence the tighter arity guard.
    """
    _check_arity(r, P_ARITY_LIMIT)
    q = cheb_poly(r)
    acc: dict[int, int] = {}
    for mask, coeff in q.terms.items():
        sub = mask
        while True:
            acc[sub] = acc.get(sub, 0) + coeff
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return Poly(r, acc, var="x")


def _check_arity(r: int, limit: int) -> None:
    if r < 0:
        raise ValueError("arity must be >= 0")
    if r > limit:
        raise ValueError(f"arity {r} beyond the guard {limit}; term count is exponential")
