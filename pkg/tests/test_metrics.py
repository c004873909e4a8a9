import pytest
from hypothesis import given, strategies as st

from zigzagtwist.freegroup.words import Word, counts, gamma, reduce
from zigzagtwist.metrics import (
    DualMetric,
    ExoticMetric,
    StandardMetric,
    create_metric,
    d_cox,
    d_dual,
    d_exotic,
    d_standard,
    dual_oracle,
    sweep_heart,
)
from zigzagtwist.metrics.exotic import cox_length, cox_segments

rank2_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=3).map(lambda ls: reduce(Word(tuple(ls))))


def test_standard_compare():
    report = StandardMetric(2).compare(Word.of(1, 1, -2))
    assert report.phi == (-1, 2)
    assert report.homological == 3
    assert report.combinatorial == 3
    assert report.agrees is True
    assert report.to_dict()["alpha"] == "s1 s1 s2^-1"
    assert report.mode == "tilde"
    assert report.phi_clamped is None


@given(rank2_words)
def test_standard_phi_counts_letters(w):
    positive, negative = counts(w)
    assert StandardMetric(2).phi(w) == (-negative, positive)


def test_d_standard():
    assert d_standard(Word.of(1, 2), Word.of(1)) == 1
    assert d_standard(Word.of(1), Word.of(1)) == 0
    assert d_standard(Word.of(2), Word.of(-1)) == 2


def test_dual_lengths():
    metric = DualMetric(2, {"bound": 3})
    assert metric.length(Word()) == 0
    assert metric.length(Word.of(-1)) == 1
    assert metric.length(Word.of(1, 1)) == 2
    assert metric.length(gamma(2)) == 1


def test_dual_oracle():
    assert dual_oracle(Word(), 2, 3) == (0, True)
    assert dual_oracle(gamma(2), 2, 3) == (1, True)
    assert dual_oracle(Word.of(1, 1), 2, 3) == (2, True)
    distance = d_dual(Word.of(1, 1), 2, 3)
    assert distance.agrees is True


def test_dual_report_carries_the_clamped_phi():
    report = DualMetric(2, {"bound": 3}).compare(Word.of(-1))
    low, high = report.phi
    assert report.mode == "vec"
    assert report.phi_clamped == (min(low, 0), max(high, 0))
    assert report.homological == report.phi_clamped[1] - report.phi_clamped[0] == 1
    record = report.to_dict()
    assert record["mode"] == "vec"
    assert record["phi_clamped"] == list(report.phi_clamped)


def test_cox_segments():
    assert cox_segments(Word.of(1, 2, 1)) == [Word.of(1, 2, 1)]
    assert cox_segments(Word.of(1, 1)) == [Word.of(1), Word.of(1)]
    assert cox_segments(Word.of(1, 3, -1, -2, 2)) == [Word.of(1, 3), Word.of(-1)]
    assert cox_length(Word.of(1, 2, 1, 2)) == 1
    assert cox_length(Word.of(1, 2, 1, 2), bound=2) == 2


def test_exotic_distance_is_shorter_than_cox():
    alpha, beta = Word.of(2, 1), Word.of(1, 3, -1)
    assert d_cox(alpha, beta) == 3
    assert d_exotic(alpha, beta, 3) == 2
    assert d_exotic(Word.of(1), Word(), 2) == 1


def test_exotic_metric_certifies_rank_two():
    _, exact, provenance = ExoticMetric(2).combinatorial(Word.of(1, -2))
    assert exact
    assert provenance == "cox-segments"
    _, exact, _ = ExoticMetric(3).combinatorial(Word.of(1, -2))
    assert not exact


def test_factory():
    assert isinstance(create_metric("vec", 2), DualMetric)
    assert isinstance(create_metric("Standard", 2), StandardMetric)
    assert create_metric("path", 3).name == "exotic"
    with pytest.raises(ValueError):
        create_metric("hyperbolic", 2)
    with pytest.raises(ValueError):
        create_metric("standard", 0)


def test_heart_sweep(tilde):
    sweep = sweep_heart(Word.of(1), 2, tilde, samples=4, seed=7)
    assert list(sweep.samples.columns) == ["sample", "summands", "phi_minus", "phi_plus", "excess"]
    assert len(sweep.samples) <= 4
    assert sweep.max_excess >= 0
    assert sweep.generator_phi == (0, 1)
