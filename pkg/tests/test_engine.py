import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catlr.engine import (
    NO_SMOOTHING,
    SmoothingPolicy,
    conditional_probability,
    full_table_lrs,
    likelihood_ratio,
    lr_from_error_rates,
    presentation_round,
)
from catlr.model import ConfusionTable, DataError, GroundTruth

SAME = GroundTruth.SAME_SOURCE
DIFF = GroundTruth.DIFFERENT_SOURCE


def fraction_lr(table, statement):
    """Independent oracle: the LR as an exact rational (None for 0/0)."""
    k = table.categories.index(statement)
    n1 = sum(table.same_source)
    n2 = sum(table.different_source)
    p1 = Fraction(table.same_source[k], n1)
    p2 = Fraction(table.different_source[k], n2)
    if p2 > 0:
        return p1 / p2
    return math.inf if p1 > 0 else None


class TestConditionalProbability:
    def test_bullets_id_same_source(self, bullets):
        p = conditional_probability(bullets, "ID", SAME)
        assert p == 1076 / 1429
        assert p == pytest.approx(0.7530, abs=5e-5)

    def test_bullets_id_different_source(self, bullets):
        p = conditional_probability(bullets, "ID", DIFF)
        assert p == 20 / 2891
        assert p == pytest.approx(0.006918, abs=5e-7)

    def test_full_row_gives_one(self):
        t = ConfusionTable(("only", "never"), (7, 0), (3, 1))
        assert conditional_probability(t, "only", SAME) == 1.0

    def test_zero_row_total_without_smoothing(self):
        t = ConfusionTable(("a",), (0,), (3,))
        with pytest.raises(DataError, match="no observations under hypothesis"):
            conditional_probability(t, "a", SAME)

    def test_add_alpha_formula(self):
        t = ConfusionTable(("a", "b"), (3, 1), (0, 4))
        smoothing = SmoothingPolicy.add_alpha(0.5)
        assert conditional_probability(t, "a", SAME, smoothing) == (3 + 0.5) / (4 + 1.0)
        assert conditional_probability(t, "a", DIFF, smoothing) == 0.5 / 5.0

    def test_add_alpha_allows_empty_row(self):
        t = ConfusionTable(("a", "b"), (0, 0), (1, 1))
        p = conditional_probability(t, "a", SAME, SmoothingPolicy.add_alpha(1.0))
        assert p == 0.5


class TestLikelihoodRatio:
    def test_bullets_id(self, bullets):
        est = likelihood_ratio(bullets, "ID")
        assert est.lr == pytest.approx(108.84, abs=0.005)
        assert presentation_round(est.lr) == "109"
        assert est.p_given_h1 == 1076 / 1429
        assert est.p_given_h2 == 20 / 2891

    def test_bullets_elimination(self, bullets):
        est = likelihood_ratio(bullets, "Elimination")
        assert est.lr == pytest.approx(0.0863, abs=5e-4)
        assert presentation_round(est.lr) == "1 / 12"

    def test_count_provenance_is_exact(self, bullets):
        est = likelihood_ratio(bullets, "ID")
        assert Fraction(est.h1_count, est.h1_total) == Fraction(1076, 1429)
        assert Fraction(est.h2_count, est.h2_total) == Fraction(20, 2891)

    def test_identical_rows_give_exactly_one(self):
        t = ConfusionTable(("a", "b", "c"), (10, 30, 60), (10, 30, 60))
        for est in full_table_lrs(t):
            assert est.lr == 1.0

    def test_zero_denominator_count_is_infinite(self):
        t = ConfusionTable(("a", "b"), (5, 5), (0, 10))
        est = likelihood_ratio(t, "a")
        assert est.lr == math.inf
        assert presentation_round(est.lr) == "∞"

    def test_zero_both_counts_is_undefined(self):
        t = ConfusionTable(("a", "b"), (0, 5), (0, 10))
        est = likelihood_ratio(t, "a")
        assert est.is_undefined

    def test_smoothing_recorded(self, bullets):
        est = likelihood_ratio(bullets, "ID", SmoothingPolicy.add_alpha(0.5))
        assert est.smoothing == "add-alpha(0.5)"
        assert likelihood_ratio(bullets, "ID").smoothing == "none"

    def test_add_alpha_converges_to_raw(self, bullets):
        raw = likelihood_ratio(bullets, "ID").lr
        gaps = [
            abs(likelihood_ratio(bullets, "ID", SmoothingPolicy.add_alpha(a)).lr - raw)
            for a in (1.0, 1e-2, 1e-4, 1e-6)
        ]
        assert gaps == sorted(gaps, reverse=True)
        assert gaps[-1] < 1e-4


class TestErrorRateShortcut:
    def test_perfect_detector(self):
        assert lr_from_error_rates(0.0, 1.0) == 1.0

    def test_direct_arithmetic(self):
        assert lr_from_error_rates(0.5, 0.25) == 2.0

    def test_zero_fpr_is_infinite(self):
        assert lr_from_error_rates(0.2, 0.0) == math.inf

    def test_zero_fpr_full_fnr_is_undefined(self):
        assert lr_from_error_rates(1.0, 0.0) is None

    def test_rates_validated(self):
        with pytest.raises(DataError):
            lr_from_error_rates(1.5, 0.5)
        with pytest.raises(DataError):
            lr_from_error_rates(0.5, -0.1)

    def test_matches_two_category_likelihood_ratio(self):
        # On an ID/Elimination-only table the shortcut and the table route
        # must agree: FNR = elimination rate under same source, FPR = ID
        # rate under different source.
        rng = random.Random(99)
        for _ in range(1000):
            t = ConfusionTable(
                ("ID", "Elimination"),
                (rng.randint(0, 500), rng.randint(0, 500)),
                (rng.randint(1, 500), rng.randint(0, 500)),
            )
            if t.row_total(SAME) == 0:
                continue
            fnr = t.count(SAME, "Elimination") / t.row_total(SAME)
            fpr = t.count(DIFF, "ID") / t.row_total(DIFF)
            shortcut = lr_from_error_rates(fnr, fpr)
            direct = likelihood_ratio(t, "ID").lr
            assert shortcut == pytest.approx(direct, rel=1e-12)


class TestPresentationRound:
    @pytest.mark.parametrize(
        "lr,expected",
        [
            (108.84, "109"),
            (0.0863, "1 / 12"),
            (1.0, "1"),
            (2.4, "2"),
            (2.5, "3"),  # half-up, not banker's
            (11.5, "12"),
            (0.5, "1 / 2"),
            (0.75, "1"),  # reciprocal 1.33 rounds to 1
            (0.9587, "1"),
            (0.0, "0"),
            (math.inf, "∞"),
        ],
    )
    def test_cases(self, lr, expected):
        assert presentation_round(lr) == expected

    def test_inconclusive_a_recomputed_from_counts(self, bullets):
        # second route: exact rationals, then float, then display
        ratio = Fraction(127, 1429) / Fraction(268, 2891)
        assert float(ratio) == pytest.approx(0.9587, abs=5e-5)
        assert presentation_round(float(ratio)) == "1"
        assert presentation_round(likelihood_ratio(bullets, "Inconcl.-A").lr) == "1"

    def test_infinite_with_bound_text(self):
        assert presentation_round(math.inf, zero_count_bound=100.64) == "> 101"

    def test_undefined_rejected(self):
        with pytest.raises(DataError, match="undefined"):
            presentation_round(None)

    def test_negative_rejected(self):
        with pytest.raises(DataError):
            presentation_round(-0.5)


class TestFullTable:
    def test_bullets_display_row(self, bullets):
        displays = [presentation_round(e.lr) for e in full_table_lrs(bullets)]
        assert displays == ["109", "1", "1 / 3", "1 / 10", "1 / 12", "1"]

    def test_identical_rows_all_one(self):
        t = ConfusionTable(("a", "b"), (5, 5), (5, 5))
        assert [presentation_round(e.lr) for e in full_table_lrs(t)] == ["1", "1"]

    def test_order_matches_table(self, bullets):
        assert [e.statement for e in full_table_lrs(bullets)] == list(bullets.categories)

    def test_random_tables_match_fraction_oracle(self):
        rng = random.Random(21)
        for _ in range(200):
            t = ConfusionTable(
                ("w", "x", "y", "z"),
                tuple(rng.randint(0, 200) for _ in range(4)),
                tuple(rng.randint(0, 200) for _ in range(4)),
            )
            if t.row_total(SAME) == 0 or t.row_total(DIFF) == 0:
                continue
            for est in full_table_lrs(t):
                oracle = fraction_lr(t, est.statement)
                if oracle is None:
                    assert est.is_undefined
                elif oracle == math.inf:
                    assert est.lr == math.inf
                else:
                    assert est.lr == pytest.approx(float(oracle), rel=1e-12)


positive_table_strategy = st.lists(
    st.tuples(st.integers(1, 5000), st.integers(1, 5000)),
    min_size=1,
    max_size=8,
).map(
    lambda rows: ConfusionTable(
        tuple(f"c{i}" for i in range(len(rows))),
        tuple(r[0] for r in rows),
        tuple(r[1] for r in rows),
    )
)


class TestAlgebraicProperties:
    @given(table=positive_table_strategy)
    @settings(max_examples=200)
    def test_calibration_identity(self, table):
        ests = full_table_lrs(table)
        assert abs(math.fsum(e.p_given_h2 * e.lr for e in ests) - 1.0) < 1e-12
        assert abs(math.fsum(e.p_given_h1 / e.lr for e in ests) - 1.0) < 1e-12

    @given(table=positive_table_strategy, k=st.integers(1, 1000))
    @settings(max_examples=150)
    def test_row_scaling_leaves_lrs_exactly_unchanged(self, table, k):
        scaled = ConfusionTable(
            table.categories,
            tuple(c * k for c in table.same_source),
            table.different_source,
        )
        for before, after in zip(full_table_lrs(table), full_table_lrs(scaled)):
            assert after.lr == before.lr

    def test_increasing_same_source_count_strictly_increases_lr(self):
        rng = random.Random(12)
        for _ in range(100):
            same = [rng.randint(0, 50) for _ in range(3)]
            diff = [rng.randint(1, 50) for _ in range(3)]
            if sum(same) == 0:
                same[0] += 1
            t = ConfusionTable(("a", "b", "c"), tuple(same), tuple(diff))
            bumped = ConfusionTable(
                ("a", "b", "c"), (same[0] + 1, same[1], same[2]), tuple(diff)
            )
            assert likelihood_ratio(bumped, "a").lr > likelihood_ratio(t, "a").lr


class TestSmoothingPolicy:
    def test_describe(self):
        assert NO_SMOOTHING.describe() == "none"
        assert SmoothingPolicy.add_alpha(0.5).describe() == "add-alpha(0.5)"

    def test_alpha_must_be_positive_for_add_alpha(self):
        with pytest.raises(DataError):
            SmoothingPolicy.add_alpha(0.0)
        with pytest.raises(DataError):
            SmoothingPolicy.add_alpha(-1.0)

    def test_negative_alpha_rejected(self):
        with pytest.raises(DataError):
            SmoothingPolicy(-0.5)
