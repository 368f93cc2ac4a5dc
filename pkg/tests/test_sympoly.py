"""Symbolic polynomial builders: golden expansions, structure, rendering."""

import json
import random

import pytest

from sterncheb.chebyshev import cheb_eval, stern_via_gaps
from sterncheb.encoding import value_of
from sterncheb.stern import build_table
from sterncheb.sympoly import (
    P_ARITY_LIMIT,
    Poly,
    Q_ARITY_LIMIT,
    cheb_poly,
    cheb_poly_subsets,
    gap_poly,
)


def poly_from(arity, entries, var="y"):
    """Build a Poly from {(indices...): coeff} for readable goldens."""
    terms = {}
    for indices, coeff in entries.items():
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        terms[mask] = coeff
    return Poly(arity, terms, var)


GOLDEN_Q = {
    0: {(): 1},
    1: {(1,): 1},
    2: {(1, 2): 1, (): -1},
    3: {(1, 2, 3): 1, (1,): -1, (3,): -1},
    # The constant +1 is forced by the recurrence
    # q_4 = y1 q_3(y2,y3,y4) - q_2(y3,y4); dropping it fails the oracle
    # (see test_q4_constant_term_is_forced).
    4: {(1, 2, 3, 4): 1, (1, 2): -1, (1, 4): -1, (3, 4): -1, (): 1},
    5: {
        (1, 2, 3, 4, 5): 1,
        (1, 2, 3): -1,
        (1, 2, 5): -1,
        (1, 4, 5): -1,
        (3, 4, 5): -1,
        (1,): 1,
        (3,): 1,
        (5,): 1,
    },
}

GOLDEN_P = {
    1: {(1,): 1, (): 1},
    2: {(1, 2): 1, (1,): 1, (2,): 1},
    3: {(1, 2, 3): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1, (2,): 1, (): -1},
    4: {
        (1, 2, 3, 4): 1,
        (1, 2, 3): 1,
        (2, 3, 4): 1,
        (1, 3, 4): 1,
        (1, 2, 4): 1,
        (2, 4): 1,
        (1, 3): 1,
        (2, 3): 1,
        (1,): -1,
        (4,): -1,
        (): -1,
    },
}


class TestGoldenExpansions:
    @pytest.mark.parametrize("r", sorted(GOLDEN_Q))
    def test_q_family(self, r):
        assert cheb_poly(r) == poly_from(r, GOLDEN_Q[r])

    @pytest.mark.parametrize("r", sorted(GOLDEN_P))
    def test_p_family(self, r):
        assert gap_poly(r) == poly_from(r, GOLDEN_P[r], var="x")

    def test_q4_constant_term_is_forced(self):
        # a(341) = 55 pins the constant: the four product terms alone
        # evaluate to 54 at the gap code (2,2,2,2) shifted by one.
        table = build_table(512)
        assert value_of([2, 2, 2, 2]) == 341
        four_terms = poly_from(4, {(1, 2, 3, 4): 1, (1, 2): -1, (1, 4): -1, (3, 4): -1})
        assert cheb_poly(4).evaluate([3, 3, 3, 3]) == table[341] == 55
        assert four_terms.evaluate([3, 3, 3, 3]) == 54
        assert cheb_poly(4) == four_terms + Poly.constant(1, 4)

    def test_term_counts(self):
        # No cancellation in the recurrence: counts follow a Fibonacci law.
        assert [len(cheb_poly(r).terms) for r in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]


class TestTwoRoutesAgree:
    @pytest.mark.parametrize("r", range(13))
    def test_recurrence_equals_subset_expansion(self, r):
        assert cheb_poly(r) == cheb_poly_subsets(r)


class TestStructure:
    def test_coefficients_are_units(self):
        for r in range(13):
            assert set(cheb_poly(r).terms.values()) <= {-1, 1}

    def test_supports_alternate_parity(self):
        for r in range(1, 13):
            for support in cheb_poly(r).support_sets():
                for j, i in enumerate(support, start=1):
                    assert i % 2 == j % 2

    def test_reversal_symmetry(self):
        for r in range(13):
            q = cheb_poly(r)
            assert q.reverse() == q

    def test_reverse_golden_and_involution(self):
        p = Poly.variable(1, 3)
        assert p.reverse() == Poly.variable(3, 3)
        rng = random.Random(61)
        for _ in range(40):
            terms = {rng.getrandbits(6): rng.randint(-5, 5) for _ in range(6)}
            poly = Poly(6, terms)
            assert poly.reverse().reverse() == poly


class TestEvaluation:
    def test_matches_direct_evaluator(self):
        rng = random.Random(62)
        for _ in range(150):
            r = rng.randint(0, 10)
            q = cheb_poly(r)
            args = [rng.randint(-20, 20) for _ in range(r)]
            assert q.evaluate(args) == cheb_eval(args)

    def test_gap_polynomial_gives_sequence_values(self):
        rng = random.Random(63)
        for _ in range(120):
            r = rng.randint(0, 10)
            code = [rng.randint(1, 6) for _ in range(r)]
            assert gap_poly(r).evaluate(code) == stern_via_gaps(value_of(code))

    def test_all_ones_gives_period_six(self):
        expected = [1, 1, 0, -1, -1, 0]
        for r in range(13):
            assert cheb_poly(r).evaluate([1] * r) == expected[r % 6]

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            cheb_poly(3).evaluate([1, 2])


class TestSplittingIdentity:
    @staticmethod
    def embed(p, arity, offset):
        return Poly(arity, {mask << offset: c for mask, c in p.terms.items()})

    @staticmethod
    def mul_disjoint(a, b):
        terms = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                assert m1 & m2 == 0, "blocks must stay squarefree"
                key = m1 | m2
                terms[key] = terms.get(key, 0) + c1 * c2
        return Poly(a.arity, terms)

    def test_symbolic_split(self):
        # q_{k+r}(t, y) = q_k(t) q_r(y) - q_{k-1}(t_1..t_{k-1}) q_{r-1}(y_2..y_r)
        # on disjoint variable blocks.
        for total in range(2, 15):
            for k in range(1, total):
                r = total - k
                lhs = cheb_poly(total)
                first = self.mul_disjoint(
                    self.embed(cheb_poly(k), total, 0),
                    self.embed(cheb_poly(r), total, k),
                )
                second = self.mul_disjoint(
                    self.embed(cheb_poly(k - 1), total, 0),
                    self.embed(cheb_poly(r - 1), total, k + 1),
                )
                assert lhs == first - second


class TestPolyOps:
    def test_add_and_cancellation(self):
        q2 = cheb_poly(2)  # y1*y2 - 1
        assert q2 + Poly.constant(1, 2) == poly_from(2, {(1, 2): 1})
        assert q2 + Poly.constant(0, 2) == q2

    def test_add_arity_mismatch(self):
        with pytest.raises(ValueError):
            cheb_poly(2) + cheb_poly(3)

    def test_shift_mul(self):
        one = Poly.constant(1, 3)
        assert one.shift_mul(1) == Poly.variable(1, 3)
        y23 = poly_from(3, {(2, 3): 1})
        assert y23.shift_mul(1) == poly_from(3, {(1, 2, 3): 1})

    def test_shift_mul_squarefree_violation(self):
        with pytest.raises(ValueError, match="squarefree"):
            Poly.variable(1, 2).shift_mul(1)

    def test_shift_mul_range(self):
        with pytest.raises(ValueError):
            Poly.constant(1, 2).shift_mul(3)

    def test_constructor_validation(self):
        with pytest.raises(ValueError):
            Poly(2, {0b100: 1})  # index 3 outside arity 2
        assert Poly(2, {0b01: 0}).terms == {}  # zero coefficients dropped


class TestRendering:
    def test_text(self):
        assert cheb_poly(2).render() == "y1*y2 - 1"
        assert cheb_poly(0).render() == "1"
        assert cheb_poly(4).render() == "y1*y2*y3*y4 - y1*y2 - y1*y4 - y3*y4 + 1"
        assert gap_poly(2).render() == "x1*x2 + x1 + x2"

    def test_latex(self):
        assert cheb_poly(3).render("latex") == "y_{1}y_{2}y_{3} - y_{1} - y_{3}"

    def test_zero_and_coefficients(self):
        assert Poly(2).render() == "0"
        assert Poly(2, {0b11: 2, 0: -3}).render() == "2*y1*y2 - 3"
        assert Poly(1, {1: -1}).render() == "-y1"

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            cheb_poly(2).render("html")

    def test_json_terms_round_trip(self):
        q5 = cheb_poly(5)
        payload = json.loads(json.dumps(q5.json_terms()))
        rebuilt = poly_from(
            5, {tuple(t["support"]): int(t["coeff"]) for t in payload}
        )
        assert rebuilt == q5

    def test_json_canonical_order(self):
        terms = cheb_poly(4).json_terms()
        assert terms[0]["support"] == [1, 2, 3, 4]
        assert terms[-1] == {"support": [], "coeff": "1"}


class TestGuards:
    def test_q_guard(self):
        with pytest.raises(ValueError):
            cheb_poly(Q_ARITY_LIMIT + 1)
        with pytest.raises(ValueError):
            cheb_poly_subsets(Q_ARITY_LIMIT + 1)

    def test_p_guard(self):
        with pytest.raises(ValueError):
            gap_poly(P_ARITY_LIMIT + 1)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            cheb_poly(-1)
