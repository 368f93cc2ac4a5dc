"""Verifier sweeps, the report machinery, and failure reporting."""

import json

import pytest

from sterncheb import identities
from sterncheb.identities import (
    FAILURE_CAP,
    Failure,
    Report,
    sweep_code_identities,
    sweep_lemma_l2,
    sweep_splitting,
    verify_binet,
    verify_code_identities,
    verify_coons,
    verify_cross,
    verify_divisibility,
    verify_lemma_l2,
    verify_linear_comb,
    verify_reversal,
    verify_reznick_split,
    verify_shift,
    verify_splitting,
)


class TestVerifiersPass:
    def test_shift(self):
        report = verify_shift(n_max=256, c_max=6)
        assert report.passed
        assert report.checked == 256 * 7

    def test_code_identities_single(self):
        for code in [(2,), (2, 2), (1, 1), (3, 0, 2)]:
            report = verify_code_identities(code)
            assert report.passed
            assert report.checked == 4

    def test_code_identities_rejects(self):
        with pytest.raises(ValueError):
            verify_code_identities(())
        with pytest.raises(ValueError):
            verify_code_identities((0, 2))

    def test_code_sweep(self):
        report = sweep_code_identities(max_len=4, max_entry=3)
        assert report.passed
        # 3 * 4^(len-1) codes per length, 4 checks each.
        assert report.checked == sum(3 * 4 ** (length - 1) for length in range(1, 5)) * 4

    def test_lemma_l2_single(self):
        for code in [(1, 1), (2, 2), (3, 1, 2), (0, 2, 0)]:
            assert verify_lemma_l2(code).passed

    def test_lemma_l2_rejects(self):
        with pytest.raises(ValueError):
            verify_lemma_l2((2,))
        with pytest.raises(ValueError):
            verify_lemma_l2((2, 0, 1))

    def test_lemma_l2_sweep(self):
        assert sweep_lemma_l2(max_len=4, max_entry=3).passed

    def test_reversal(self):
        report = verify_reversal(1 << 10)
        assert report.passed
        assert report.checked == (1 << 9)

    def test_splitting_single(self):
        assert verify_splitting([3], [4]).passed
        assert verify_splitting([5, -2], [7]).passed

    def test_splitting_rejects_empty_block(self):
        with pytest.raises(ValueError):
            verify_splitting([], [4])

    def test_splitting_sweep_deterministic(self):
        a = sweep_splitting(cases=40, max_total=10, bits=32, seed=9)
        b = sweep_splitting(cases=40, max_total=10, bits=32, seed=9)
        assert a.passed and b.passed
        assert a.checked == b.checked == 40
        assert a.seed == b.seed == 9

    def test_coons(self):
        report = verify_coons(e=4, u_max=6)
        assert report.passed
        assert report.checked == 7 * 17  # (u_max+1) * (2^e + 1)

    def test_coons_rejects_negative(self):
        with pytest.raises(ValueError):
            verify_coons(-1)

    def test_reznick(self):
        for e in range(7):
            report = verify_reznick_split(e)
            assert report.passed
            assert report.checked == (1 << e) + 1

    def test_exhaustive_sweeps_stay_cheap_at_e12(self):
        report = verify_reznick_split(12)
        assert report.passed and report.checked == (1 << 12) + 1

    def test_linear_comb(self):
        assert verify_linear_comb(e=5, u_max=6).passed

    def test_divisibility(self):
        for k in (1, 2, 5):
            report = verify_divisibility(k, trials=300, seed=3)
            assert report.passed
            assert report.checked == 300
            assert report.seed == 3

    def test_binet(self):
        report = verify_binet(r_max=12, t_min=2, t_max=4)
        assert report.passed
        assert report.checked == 3 * 12 * 2  # two comparisons per (r, t)

    def test_cross(self):
        report = verify_cross(range(1, 2048, 2))
        assert report.passed

    def test_cross_rejects_even(self):
        with pytest.raises(ValueError):
            verify_cross([2])


class TestFailureReporting:
    def test_counterexamples_collected_up_to_cap(self, monkeypatch):
        # A corrupted oracle makes the reversal sweep fail on every
        # non-palindrome; the sweep must record witnesses and stop at
        # the cap instead of throwing.
        monkeypatch.setattr(identities, "stern_pair", lambda n: n)
        report = verify_reversal(1 << 10)
        assert not report.passed
        assert len(report.failures) == FAILURE_CAP
        assert report.checked < (1 << 9)  # stopped early
        first = report.failures[0]
        assert first.inputs == (11,)  # first non-palindrome odd number
        assert first.lhs == 13 and first.rhs == 11

    def test_witnesses_are_replayable(self, monkeypatch):
        monkeypatch.setattr(identities, "stern_pair", lambda n: n)
        report = verify_reversal(64)
        for f in report.failures:
            (n,) = f.inputs
            assert f.lhs != f.rhs
            assert n < 64 and n % 2 == 1


class TestReport:
    def fake(self, checked=1, nfail=0, seed=None):
        return Report(
            "fake",
            checked=checked,
            failures=[Failure((i,), i, i + 1) for i in range(nfail)],
            seed=seed,
            elapsed_ms=1.0,
        )

    def test_merge_counts_and_cap(self):
        merged = self.fake(5, 4).merge(self.fake(7, 8))
        assert merged.checked == 12
        assert len(merged.failures) == FAILURE_CAP
        assert not merged.passed

    def test_merge_associative(self):
        a, b, c = self.fake(1, 2), self.fake(2, 3), self.fake(3, 4)
        left = a.merge(b).merge(c)
        right = a.merge(b.merge(c))
        assert left.checked == right.checked
        assert left.failures == right.failures

    def test_merge_rejects_mismatched_identity(self):
        with pytest.raises(ValueError):
            self.fake().merge(Report("other"))

    def test_merge_rejects_mismatched_seed(self):
        with pytest.raises(ValueError):
            self.fake(seed=1).merge(self.fake(seed=2))

    def test_partition_independence(self):
        whole = verify_shift(n_max=60, c_max=4)
        left = verify_shift(n_max=30, c_max=4)
        right_sweep = identities._Sweep("shift")
        for n in range(31, 61):
            an, an1 = identities.stern_pair(n), identities.stern_pair(n + 1)
            for c in range(5):
                right_sweep.check((n, c), identities.stern_pair((n << c) + 1), an * c + an1)
        merged = left.merge(right_sweep.done())
        assert merged.checked == whole.checked
        assert merged.failures == whole.failures
        assert merged.passed == whole.passed

    def test_json_schema(self):
        report = Report(
            "demo",
            checked=3,
            failures=[Failure((5, (2, 2)), 1 << 80, 2)],
            seed=7,
            elapsed_ms=1.25,
        )
        payload = json.loads(json.dumps(report.to_json()))
        assert payload["identity"] == "demo"
        assert payload["checked"] == 3
        assert payload["seed"] == 7
        failure = payload["failures"][0]
        # Big integers ride as decimal strings; nested inputs keep shape.
        assert failure["lhs"] == str(1 << 80)
        assert failure["rhs"] == "2"
        assert failure["input"] == ["5", ["2", "2"]]

    def test_passed_reports_serialize_empty_failures(self):
        payload = verify_reznick_split(3).to_json()
        assert payload["failures"] == []
        assert payload["identity"] == "reznick"
