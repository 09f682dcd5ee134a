import itertools
import random
from statistics import median

import pytest
from hypothesis import given, strategies as st

from morphweave.errors import DomainError, EmptySample, TooFewPairs
from morphweave.stats import f_measure, hodges_lehmann, wilcoxon_signed_rank


def brute_force_signed_rank(diffs):
    """Exhaustive enumeration of every sign assignment."""
    diffs = [d for d in diffs if d != 0]
    n = len(diffs)
    magnitudes = sorted(abs(d) for d in diffs)
    ranks = {}
    for value in set(magnitudes):
        positions = [i + 1 for i, m in enumerate(magnitudes) if m == value]
        ranks[value] = sum(positions) / len(positions)
    w_plus = sum(ranks[abs(d)] for d in diffs if d > 0)
    rank_list = [ranks[abs(d)] for d in diffs]
    totals = []
    for signs in itertools.product((0, 1), repeat=n):
        totals.append(sum(r for r, s in zip(rank_list, signs) if s))
    le = sum(1 for t in totals if t <= w_plus + 1e-12)
    ge = sum(1 for t in totals if t >= w_plus - 1e-12)
    p = min(1.0, 2.0 * min(le, ge) / len(totals))
    return w_plus, p


def test_simple_positive_differences():
    result = wilcoxon_signed_rank([2, 3, 4], [1, 1, 1])
    assert result.w_statistic == 6.0
    assert result.p_value == 0.25
    assert result.exact


def test_all_zero_differences_rejected():
    with pytest.raises(TooFewPairs):
        wilcoxon_signed_rank([1, 2, 3], [1, 2, 3])


def test_mixed_signs_match_brute_force():
    a, b = [5, 0, 4, 3], [0, 1, 0, 0]  # differences 5, -1, 4, 3
    result = wilcoxon_signed_rank(a, b)
    w, p = brute_force_signed_rank([5, -1, 4, 3])
    assert result.w_statistic == w
    assert result.p_value == pytest.approx(p, abs=1e-12)


def test_exact_path_matches_brute_force_randomly():
    rng = random.Random(7)
    for trial in range(100):
        n = rng.randrange(3, 9)
        diffs = [rng.randrange(-6, 7) for _ in range(n)]
        while sum(1 for d in diffs if d != 0) < 3:
            diffs = [rng.randrange(-6, 7) for _ in range(n)]
        a = diffs
        b = [0] * n
        result = wilcoxon_signed_rank(a, b)
        w, p = brute_force_signed_rank(diffs)
        assert result.w_statistic == pytest.approx(w), f"trial {trial}"
        assert result.p_value == pytest.approx(p, abs=1e-12), f"trial {trial}"


def test_large_sample_uses_normal_approximation():
    rng = random.Random(3)
    a = [rng.random() + 0.3 for _ in range(40)]
    b = [rng.random() for _ in range(40)]
    result = wilcoxon_signed_rank(a, b)
    assert not result.exact
    assert 0.0 <= result.p_value <= 1.0
    assert result.reject  # a consistent upward shift should be detected


def test_hodges_lehmann_small_cases():
    assert hodges_lehmann([1, 2, 3]) == 2.0
    assert hodges_lehmann([4]) == 4.0
    assert hodges_lehmann([-1, 1]) == 0.0


def test_hodges_lehmann_walsh_set_example():
    walsh = sorted((x + y) / 2 for i, x in enumerate([1, 2, 3])
                   for y in [1, 2, 3][i:])
    assert walsh == [1, 1.5, 2, 2, 2.5, 3]
    assert hodges_lehmann([1, 2, 3]) == median(walsh)


def test_hodges_lehmann_matches_materialized_median():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(1, 30)
        sample = [rng.uniform(-5, 5) for _ in range(n)]
        walsh = [(sample[j] + sample[k]) / 2
                 for j in range(n) for k in range(j, n)]
        assert hodges_lehmann(sample) == median(walsh)


def test_hodges_lehmann_empty():
    with pytest.raises(EmptySample):
        hodges_lehmann([])


def test_f_measure_examples():
    assert f_measure(0.966, 0.966) == pytest.approx(0.966)
    assert f_measure(1.0, 0.0) == 0.0
    assert f_measure(0.9, 0.8) == pytest.approx(2 * 0.9 * 0.8 / 1.7)


def test_f_measure_domain():
    with pytest.raises(DomainError):
        f_measure(1.2, 0.5)
    with pytest.raises(DomainError):
        f_measure(0.5, -0.1)


@given(st.floats(0, 1), st.floats(0, 1))
def test_f_measure_symmetry(p, r):
    assert f_measure(p, r) == f_measure(r, p)


@given(st.floats(0, 1))
def test_f_measure_idempotent_on_diagonal(p):
    assert f_measure(p, p) == pytest.approx(p)


@given(st.floats(0.0001, 1), st.floats(0.0001, 1))
def test_f_measure_bounded_by_extremes(p, r):
    f = f_measure(p, r)
    assert min(p, r) - 1e-12 <= f <= max(p, r) + 1e-12
