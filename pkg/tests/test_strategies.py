from fractions import Fraction
from math import ceil

import pytest

from discreet_weighings import (
    ConstructionError,
    Outcome,
    ProblemInstance,
    best_single_guess,
    build_equal_piles,
    build_leftover_reveal,
    build_official,
    build_reference_pile,
    build_triple_case,
    classify_privacy,
    consistent_assignments,
    consistent_family_from_cases,
    count_consistent,
    validate_plan,
    verify_proof,
)
from helpers import brute_consistent


def assert_bundle_claims_hold(bundle):
    """Cross-validate a bundle against the judge engine."""
    assert validate_plan(bundle.plan) == []
    transcript = bundle.transcript()
    assert transcript.outcomes == bundle.expected_outcomes
    verdict = verify_proof(bundle.instance, transcript, bundle.placement)
    assert verdict.valid
    report = classify_privacy(bundle.instance, transcript)
    assert report.discreet == bundle.expected_discreet
    assert report.revealed_real == bundle.revealed_expected
    assert not report.revealed_fake
    assert bundle.placement in consistent_family_from_cases(bundle.cases)
    return transcript, verdict, report


def assert_cases_match_judge_exactly(bundle):
    """The judge's surviving sets must be precisely the case-structure family."""
    transcript = bundle.transcript()
    survivors = set(
        consistent_assignments(bundle.instance.t, bundle.instance.f, transcript)
    )
    assert survivors == consistent_family_from_cases(bundle.cases)


@pytest.mark.parametrize(
    "t,f,d,a",
    [(80, 2, 1, 2), (80, 4, 3, 2), (80, 4, 3, 4), (12, 4, 1, 2), (9, 3, 1, 3)],
)
def test_equal_piles_bundles(t, f, d, a):
    bundle = build_equal_piles(ProblemInstance(t, f, d), a)
    _, verdict, _ = assert_bundle_claims_hold(bundle)
    per_pile = f // a
    pile_size = t // a
    from math import comb

    assert verdict.consistent_count_f == comb(pile_size, per_pile) ** a


def test_equal_piles_reference_counts():
    inst = ProblemInstance(80, 2, 1)
    bundle = build_equal_piles(inst, 2)
    assert count_consistent(80, 2, bundle.transcript()) == 1600
    assert bundle.plan.weighings[0].left == frozenset(range(40))

    inst = ProblemInstance(80, 4, 3)
    assert count_consistent(80, 4, build_equal_piles(inst, 4).transcript()) == 160000
    assert count_consistent(80, 4, build_equal_piles(inst, 2).transcript()) == 608400


def test_equal_piles_small_family_matches_judge():
    assert_cases_match_judge_exactly(build_equal_piles(ProblemInstance(12, 4, 1), 2))


def test_equal_piles_preconditions():
    inst = ProblemInstance(80, 4, 2)
    with pytest.raises(ConstructionError, match="a > 1"):
        build_equal_piles(inst, 1)
    with pytest.raises(ConstructionError, match="divide t"):
        build_equal_piles(ProblemInstance(81, 3, 2), 2)
    with pytest.raises(ConstructionError, match="divide f"):
        build_equal_piles(ProblemInstance(80, 3, 2), 2)
    with pytest.raises(ConstructionError, match="divides d"):
        build_equal_piles(inst, 2)  # a=2 divides d=2


def test_triple_case_layout_matches_documented_sizes():
    bundle = build_triple_case(ProblemInstance(80, 3, 2))
    sizes = [len(p.coins) for case in bundle.cases.cases for p in case]
    assert sizes == [24, 24, 23, 1, 1, 2, 2, 2, 1]
    # weighings pair A_1+B_1 against each A_i+B_i, then B_1+C_1 against B_i+C_i
    assert len(bundle.plan.weighings) == 4
    assert all(len(w.left) == len(w.right) for w in bundle.plan.weighings)
    assert {len(bundle.plan.weighings[0].left), len(bundle.plan.weighings[2].left)} == {25, 3}


def test_triple_case_judge_count_at_scale():
    bundle = build_triple_case(ProblemInstance(80, 3, 2))
    assert count_consistent(80, 3, bundle.transcript()) == 24 * 24 * 23 + 2 + 4
    assert_bundle_claims_hold(bundle)


@pytest.mark.parametrize("t,f,d", [(9, 2, 1), (14, 3, 2), (23, 5, 3), (80, 3, 2)])
def test_triple_case_bundles(t, f, d):
    bundle = build_triple_case(ProblemInstance(t, f, d))
    assert_bundle_claims_hold(bundle)


def test_triple_case_nine_coins_family():
    bundle = build_triple_case(ProblemInstance(9, 2, 1))
    transcript = bundle.transcript()
    assert count_consistent(9, 2, transcript) == 6
    assert set(consistent_assignments(9, 2, transcript)) == brute_consistent(
        9, 2, transcript
    )
    assert_cases_match_judge_exactly(bundle)


def test_triple_case_preconditions():
    with pytest.raises(ConstructionError, match="not divide t"):
        build_triple_case(ProblemInstance(80, 4, 3))
    with pytest.raises(ConstructionError, match=">= 4"):
        build_triple_case(ProblemInstance(7, 2, 1))
    with pytest.raises(ConstructionError, match="0 < d < f"):
        build_triple_case(ProblemInstance(80, 3, 4))


def test_triple_case_size_identity():
    # r piles of size k+1 and f-r piles of size k recover t = f*k + r
    for f in range(2, 7):
        for k in range(4, 11):
            for r in range(1, f):
                t = f * k + r
                bundle = build_triple_case(ProblemInstance(t, f, 1))
                covered = frozenset().union(
                    *(p.coins for case in bundle.cases.cases for p in case)
                )
                assert covered == frozenset(range(t))
                group_sizes = sorted(
                    len(a.coins) + len(b.coins) + len(c.coins)
                    for a, b, c in zip(*(case for case in bundle.cases.cases))
                )
                assert group_sizes == [k] * (f - r) + [k + 1] * r


def test_official_structure_and_counts():
    bundle = build_official(ProblemInstance(80, 3, 2))
    assert bundle.expected_outcomes == (
        Outcome.BALANCED,
        Outcome.BALANCED,
        Outcome.RIGHT_LIGHTER,
    )
    transcript, verdict, _ = assert_bundle_claims_hold(bundle)
    assert verdict.consistent_count_f == 8000


@pytest.mark.parametrize("t", [8, 16, 80])
def test_official_bundles(t):
    bundle = build_official(ProblemInstance(t, 3, 2))
    assert_bundle_claims_hold(bundle)


def test_official_family_matches_judge_small():
    for t in (8, 16):
        bundle = build_official(ProblemInstance(t, 3, 1))
        transcript = bundle.transcript()
        assert set(
            consistent_assignments(t, 3, transcript)
        ) == brute_consistent(t, 3, transcript)
        assert_cases_match_judge_exactly(bundle)


def test_official_preconditions():
    with pytest.raises(ConstructionError, match="f = 3"):
        build_official(ProblemInstance(80, 4, 2))
    with pytest.raises(ConstructionError, match="divisible by 8"):
        build_official(ProblemInstance(81, 3, 2))
    with pytest.raises(ConstructionError, match="0 < d < 3"):
        build_official(ProblemInstance(80, 3, 4))


def test_leftover_reveal_reference_case():
    bundle = build_leftover_reveal(ProblemInstance(80, 3, 2))
    transcript, verdict, report = assert_bundle_claims_hold(bundle)
    assert verdict.consistent_count_f == 16900
    # the two leftovers plus the coin borrowed from the first pile
    assert bundle.revealed_expected == frozenset({78, 79, 25})
    assert report.revealed_real == frozenset({78, 79, 25})
    assert len(bundle.plan.weighings) == 4  # 2 pile weighings + 2 chain links


@pytest.mark.parametrize("t,f,d", [(80, 3, 2), (100, 3, 2), (50, 4, 3), (14, 4, 2)])
def test_leftover_reveal_bundles(t, f, d):
    bundle = build_leftover_reveal(ProblemInstance(t, f, d))
    transcript, verdict, report = assert_bundle_claims_hold(bundle)
    r = t % f
    assert len(report.revealed_real) == max(r, d + 1)
    coin, prob = best_single_guess(consistent_assignments(t, f, transcript))
    assert prob == Fraction(1, t // f - ceil(d / f))


def test_leftover_reveal_family_matches_judge_small():
    assert_cases_match_judge_exactly(build_leftover_reveal(ProblemInstance(14, 4, 2)))


def test_leftover_reveal_preconditions():
    with pytest.raises(ConstructionError, match="not divide t"):
        build_leftover_reveal(ProblemInstance(81, 3, 2))
    with pytest.raises(ConstructionError, match="not divide d"):
        build_leftover_reveal(ProblemInstance(80, 3, 6))
    with pytest.raises(ConstructionError, match="borrow"):
        build_leftover_reveal(ProblemInstance(7, 3, 5))


def test_reference_pile_cases():
    bundle = build_reference_pile(ProblemInstance(80, 3, 2))
    transcript, verdict, report = assert_bundle_claims_hold(bundle)
    assert verdict.consistent_count_f == 8000
    assert report.revealed_real == frozenset(range(60, 80))
    coin, prob = best_single_guess(consistent_assignments(80, 3, transcript))
    assert prob == Fraction(1, 20)

    small = build_reference_pile(ProblemInstance(8, 3, 2))
    _, _, report = assert_bundle_claims_hold(small)
    assert len(report.revealed_real) == 2
    assert_cases_match_judge_exactly(small)


@pytest.mark.parametrize("t,f,d", [(80, 3, 2), (8, 3, 2), (12, 2, 1)])
def test_reference_pile_bundles(t, f, d):
    assert_bundle_claims_hold(build_reference_pile(ProblemInstance(t, f, d)))


def test_reference_pile_preconditions():
    with pytest.raises(ConstructionError, match="does not divide"):
        build_reference_pile(ProblemInstance(81, 3, 2))
    with pytest.raises(ConstructionError, match="0 < d < f"):
        build_reference_pile(ProblemInstance(80, 3, 4))


def test_case_families_match_judge_at_full_scale():
    instance = ProblemInstance(80, 3, 2)
    for builder in (build_official, build_leftover_reveal, build_reference_pile):
        assert_cases_match_judge_exactly(builder(instance))
