"""Machine verification of the sequence identities.

Each verifier sweeps a finite input range, evaluates both sides of one
identity with stern_pair as the only sequence oracle, and returns a
Report carrying replayable counterexample witnesses.  Mismatches are
collected (up to a cap), never raised: a sweep that throws on the first
failure hides structure.

Reports merge associatively, and the merged result of disjoint
sub-ranges equals the single-pass result, so sweeps may be partitioned
freely.  Randomized verifiers take an explicit seed, recorded in the
report, making every failure reproducible.
"""

import random
import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .chebyshev import binet, cheb_const, cheb_eval, divisibility_class, stern_via_gaps
from .determinant import stern_via_det
from .encoding import bit_reverse, digit_sum, gaps_of, value_of
from .stern import stern_pair
from .subsets import cheb_via_subsets

FAILURE_CAP = 10


@dataclass(frozen=True)
class Failure:
    """One counterexample: the inputs fed in and the two unequal sides."""

    inputs: tuple
    lhs: int
    rhs: int

    def to_json(self) -> dict:
        return {
            "input": [_json_scalar(v) for v in self.inputs],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


def _json_scalar(v):
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_json_scalar(x) for x in v]
    return v


@dataclass
class Report:
    """Outcome of one identity sweep."""

    identity: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "Report") -> "Report":
        """Combine reports of disjoint sub-sweeps of the same identity.

        Associative, and failure lists keep their sweep order, so the
        merged report does not depend on how the range was partitioned.
        """
        if self.identity != other.identity:
            raise ValueError("cannot merge reports of different identities")
        if self.seed is not None and other.seed is not None and self.seed != other.seed:
            raise ValueError("cannot merge reports with different seeds")
        return Report(
            identity=self.identity,
            checked=self.checked + other.checked,
            failures=(self.failures + other.failures)[:FAILURE_CAP],
            seed=self.seed if self.seed is not None else other.seed,
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
        )

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "checked": self.checked,
            "failures": [f.to_json() for f in self.failures],
            "seed": self.seed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def merge_all(reports: Sequence[Report]) -> Report:
    """Fold a non-empty list of same-identity reports into one."""
    if not reports:
        raise ValueError("nothing to merge")
    merged = reports[0]
    for r in reports[1:]:
        merged = merged.merge(r)
    return merged


class _Sweep:
    """Accumulates comparisons for one report; check() says keep going."""

    def __init__(self, identity: str, seed: int | None = None):
        self.report = Report(identity, seed=seed)
        self._start = time.perf_counter()

    def check(self, inputs: tuple, lhs: int, rhs: int) -> bool:
        r = self.report
        r.checked += 1
        if lhs != rhs:
            r.failures.append(Failure(inputs, lhs, rhs))
            if len(r.failures) >= FAILURE_CAP:
                return False
        return True

    def done(self) -> Report:
        self.report.elapsed_ms = (time.perf_counter() - self._start) * 1000.0
        return self.report


def verify_shift(n_max: int = 1 << 12, c_max: int = 10) -> Report:
    """a(2^c n + 1) = a(n) c + a(n+1) over 1 <= n <= n_max, 0 <= c <= c_max."""
    sweep = _Sweep("shift")
    a = stern_pair
    for n in range(1, n_max + 1):
        an, an1 = a(n), a(n + 1)
        for c in range(c_max + 1):
            if not sweep.check((n, c), a((n << c) + 1), an * c + an1):
                return sweep.done()
    return sweep.done()


def verify_code_identities(code: Sequence[int]) -> Report:
    """The four gap-code relations on one code with leading entry > 0:

    [c_1,...,c_r] = 2 [c_1 - 1, c_2,...,c_r] - 1
    [c_1,...,c_r] = 1 + 2^{c_1} [c_2,...,c_r]
    a([c_1,...,c_r] - 1) = a([c_2,...,c_r])
    a([c_1,...,c_r] + 1) = a([c_1 - 1, c_2,...,c_r])
    """
    if not code:
        raise ValueError("need a non-empty gap code")
    if code[0] < 1:
        raise ValueError("the decrement relations need a leading entry > 0")
    sweep = _Sweep("code")
    c = tuple(code)
    n = value_of(c)
    tail = c[1:]
    dec = (c[0] - 1,) + tail
    sweep.check((c, "double-decrement"), n, 2 * value_of(dec) - 1)
    sweep.check((c, "head-split"), n, 1 + (1 << c[0]) * value_of(tail))
    sweep.check((c, "predecessor"), stern_pair(n - 1), stern_pair(value_of(tail)))
    sweep.check((c, "successor"), stern_pair(n + 1), stern_pair(value_of(dec)))
    return sweep.done()


def verify_lemma_l2(code: Sequence[int]) -> Report:
    """a([c_1,...,c_r]) = (c_1+1) a([c_2,...,c_r]) - a([c_3,...,c_r]),
    for length >= 2 and c_2 > 0."""
    if len(code) < 2:
        raise ValueError("the three-term relation needs length >= 2")
    if code[1] < 1:
        raise ValueError("the three-term relation needs a positive second entry")
    sweep = _Sweep("lemma-l2")
    c = tuple(code)
    lhs = stern_pair(value_of(c))
    rhs = (c[0] + 1) * stern_pair(value_of(c[1:])) - stern_pair(value_of(c[2:]))
    sweep.check((c,), lhs, rhs)
    return sweep.done()


def _codes(max_len: int, max_entry: int, head_min: int, second_min: int = 0) -> Iterator[tuple]:
    def grow(prefix: tuple, length: int) -> Iterator[tuple]:
        if len(prefix) == length:
            yield prefix
            return
        lo = head_min if not prefix else (second_min if len(prefix) == 1 else 0)
        for e in range(lo, max_entry + 1):
            yield from grow(prefix + (e,), length)

    for length in range(1, max_len + 1):
        yield from grow((), length)


def sweep_code_identities(max_len: int = 5, max_entry: int = 4) -> Report:
    """Merge verify_code_identities over all codes with len <= max_len,
    entries <= max_entry, leading entry >= 1."""
    report = Report("code")
    for code in _codes(max_len, max_entry, head_min=1):
        report = report.merge(verify_code_identities(code))
        if len(report.failures) >= FAILURE_CAP:
            break
    return report


def sweep_lemma_l2(max_len: int = 5, max_entry: int = 4) -> Report:
    """Merge verify_lemma_l2 over all codes with 2 <= len <= max_len,
    entries <= max_entry, second entry >= 1."""
    report = Report("lemma-l2")
    for code in _codes(max_len, max_entry, head_min=0, second_min=1):
        if len(code) < 2:
            continue
        report = report.merge(verify_lemma_l2(code))
        if len(report.failures) >= FAILURE_CAP:
            break
    return report


def verify_reversal(n_max: int = 1 << 18) -> Report:
    """a(bit_reverse(n)) = a(n) over odd n < n_max."""
    sweep = _Sweep("reversal")
    a = stern_pair
    for n in range(1, n_max, 2):
        if not sweep.check((n,), a(bit_reverse(n)), a(n)):
            break
    return sweep.done()


def verify_splitting(ts: Sequence[int], ys: Sequence[int]) -> Report:
    """q_{k+r}(t, y) = q_k(t) q_r(y) - q_{k-1}(t_1..t_{k-1}) q_{r-1}(y_2..y_r)."""
    if not ts or not ys:
        raise ValueError("both blocks must be non-empty; the empty case is the convention q_0 = 1")
    sweep = _Sweep("splitting")
    ts, ys = list(ts), list(ys)
    lhs = cheb_eval(ts + ys)
    rhs = cheb_eval(ts) * cheb_eval(ys) - cheb_eval(ts[:-1]) * cheb_eval(ys[1:])
    sweep.check((tuple(ts), tuple(ys)), lhs, rhs)
    return sweep.done()


def sweep_splitting(
    cases: int = 200, max_total: int = 16, bits: int = 64, seed: int = 0
) -> Report:
    """Random split checks with signed entries of the given bit size."""
    rng = random.Random(seed)
    lo, hi = -(1 << (bits - 1)), (1 << (bits - 1)) - 1
    report = Report("splitting", seed=seed)
    for _ in range(cases):
        total = rng.randint(2, max_total)
        k = rng.randint(1, total - 1)
        ts = [rng.randint(lo, hi) for _ in range(k)]
        ys = [rng.randint(lo, hi) for _ in range(total - k)]
        part = verify_splitting(ts, ys)
        part.seed = seed
        report = report.merge(part)
        if len(report.failures) >= FAILURE_CAP:
            break
    return report


def verify_coons(e: int, u_max: int = 16) -> Report:
    """a(c) a(2u+5) + a(2^e - c) a(2u+3) = a(2^e (u+2) + c) + a(2^e (u+1) + c),
    exhaustively over 0 <= c <= 2^e and 0 <= u <= u_max."""
    if e < 0:
        raise ValueError("need e >= 0")
    sweep = _Sweep("coons")
    a = stern_pair
    p = 1 << e
    for u in range(u_max + 1):
        a25, a23 = a(2 * u + 5), a(2 * u + 3)
        hi, lo = p * (u + 2), p * (u + 1)
        for c in range(p + 1):
            lhs = a(c) * a25 + a(p - c) * a23
            rhs = a(hi + c) + a(lo + c)
            if not sweep.check((e, u, c), lhs, rhs):
                return sweep.done()
    return sweep.done()


def verify_reznick_split(e: int) -> Report:
    """a(2^e + c) = a(2^e - c) + a(c) for 0 <= c <= 2^e."""
    if e < 0:
        raise ValueError("need e >= 0")
    sweep = _Sweep("reznick")
    a = stern_pair
    p = 1 << e
    for c in range(p + 1):
        if not sweep.check((e, c), a(p + c), a(p - c) + a(c)):
            break
    return sweep.done()


def verify_linear_comb(e: int, u_max: int = 16) -> Report:
    """a(2^e - c) a(u+1) + a(c) a(u+2) = a(2^e (u+1) + c),
    exhaustively over 0 <= c <= 2^e and 0 <= u <= u_max."""
    if e < 0:
        raise ValueError("need e >= 0")
    sweep = _Sweep("linear-comb")
    a = stern_pair
    p = 1 << e
    for u in range(u_max + 1):
        au1, au2 = a(u + 1), a(u + 2)
        base = p * (u + 1)
        for c in range(p + 1):
            lhs = a(p - c) * au1 + a(c) * au2
            if not sweep.check((e, u, c), lhs, a(base + c)):
                return sweep.done()
    return sweep.done()


def verify_divisibility(
    k: int, trials: int = 10_000, seed: int = 0, max_len: int = 24
) -> Report:
    """Residue prediction against the oracle on random gap codes whose
    entries are k, 2k, or 3k (so every exponent is a multiple of k)."""
    if k < 1:
        raise ValueError("modulus must be >= 1")
    rng = random.Random(seed)
    sweep = _Sweep(f"divisibility-k{k}", seed=seed)
    for _ in range(trials):
        code = [k * rng.randint(1, 3) for _ in range(rng.randint(1, max_len))]
        n = value_of(code)
        predicted = divisibility_class(n, k) % k
        if not sweep.check((tuple(code), k), stern_pair(n) % k, predicted):
            break
    return sweep.done()


def verify_binet(r_max: int = 40, t_min: int = 2, t_max: int = 6) -> Report:
    """Three-way agreement of the closed form, the constant-argument
    recurrence, and the oracle on n = (2^{rt} - 1)/(2^t - 1)."""
    if t_min < 2:
        raise ValueError("need t >= 2")
    sweep = _Sweep("binet")
    for t in range(t_min, t_max + 1):
        for r in range(1, r_max + 1):
            b = binet(r, t)
            n = ((1 << (r * t)) - 1) // ((1 << t) - 1)
            if not sweep.check((r, t, "const-recurrence"), b, cheb_const(t + 1, r - 1)):
                return sweep.done()
            if not sweep.check((r, t, "oracle"), b, stern_pair(n)):
                return sweep.done()
    return sweep.done()


def verify_cross(ns: Iterable[int], subset_digit_limit: int = 17) -> Report:
    """All pathways agree: pair scan, gap polynomial, determinant, and
    (while the digit sum stays within the limit) the subset expansion."""
    sweep = _Sweep("cross")
    for n in ns:
        if n < 1 or n & 1 == 0:
            raise ValueError("cross-validation runs on odd n >= 1")
        v = stern_pair(n)
        ok = sweep.check((n, "gaps"), stern_via_gaps(n), v)
        ok = ok and sweep.check((n, "det"), stern_via_det(n), v)
        if ok and digit_sum(n) <= subset_digit_limit:
            ys = [c + 1 for c in gaps_of(n)]
            ok = sweep.check((n, "subsets"), cheb_via_subsets(ys), v)
        if not ok:
            break
    return sweep.done()
