import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reqlens.analysis import (
    SetPartition,
    WordStats,
    aggregate,
    map_subclasses,
    occurrence_percentage,
    partition,
    top_k,
    word_report_rows,
)
from reqlens.corpus import Requirement
from reqlens.errors import ZeroTotal
from reqlens.lime import Explanation


def exp(req_id, weights):
    return Explanation(
        requirement_id=req_id,
        prob_nfr=0.5,
        intercept=0.0,
        word_weights=tuple(weights),
    )


def test_aggregate_counts_per_document_presence():
    stats = aggregate([exp(0, [("second", 0.4)]), exp(1, [("second", 0.1), ("load", 0.2)])])
    assert stats.supportive_counts["second"] == 2
    assert stats.supportive_counts["load"] == 1
    assert stats.n_supportive == 3
    assert stats.n_distractive == 0


def test_aggregate_signs_route_words():
    stats = aggregate([exp(0, [("a", 0.3), ("b", -0.2)])])
    assert set(stats.supportive_counts) == {"a"}
    assert set(stats.distractive_counts) == {"b"}


def test_aggregate_empty():
    stats = aggregate([])
    assert stats.n_supportive == 0 and stats.n_distractive == 0


def test_occurrence_percentage():
    assert occurrence_percentage({"x": 5}, 50)["x"] == pytest.approx(10.0)
    assert occurrence_percentage({"x": 7}, 7)["x"] == pytest.approx(100.0)
    pct = occurrence_percentage({"a": 3, "b": 1, "c": 6}, 10)
    assert sum(pct.values()) == pytest.approx(100.0, abs=1e-9)
    with pytest.raises(ZeroTotal):
        occurrence_percentage({}, 0)


def test_partition_set_algebra():
    stats = WordStats(
        supportive_counts={"a": 1, "b": 2, "c": 1},
        distractive_counts={"b": 1, "d": 4},
    )
    parts = partition(stats)
    assert parts.distractive_only == {"d"}
    assert parts.supportive_only == {"a", "c"}
    assert parts.common == {"b"}


def test_partition_empty():
    parts = partition(WordStats(supportive_counts={}, distractive_counts={}))
    assert parts.distractive_only == parts.supportive_only == parts.common == frozenset()


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.sampled_from(["a", "b", "c", "d", "e", "f", "g"]),
            st.floats(-1, 1).filter(lambda v: v != 0),
        ),
        max_size=8,
    ).map(lambda ws: list(dict(ws).items())),
    st.integers(0, 50),
)
def test_partition_laws_fuzz(weights, n_extra):
    explanations = [exp(i, weights) for i in range(1 + n_extra % 3)]
    stats = aggregate(explanations)
    parts = partition(stats)
    a, b, c = parts.distractive_only, parts.supportive_only, parts.common
    assert not a & b and not a & c and not b & c
    assert a | c == set(stats.distractive_counts)
    assert b | c == set(stats.supportive_counts)
    assert a | b | c == set(stats.supportive_counts) | set(stats.distractive_counts)
    # percentages are scale free: duplicate explanations leave pc_i unchanged
    doubled = aggregate(explanations * 2)
    if stats.n_supportive:
        p1 = occurrence_percentage(stats.supportive_counts, stats.n_supportive)
        p2 = occurrence_percentage(doubled.supportive_counts, doubled.n_supportive)
        for k in p1:
            assert p1[k] == pytest.approx(p2[k], abs=1e-9)


def test_aggregate_order_invariant():
    exps = [exp(0, [("a", 0.2)]), exp(1, [("a", -0.1), ("b", 0.4)]), exp(2, [("c", 0.3)])]
    forward = aggregate(exps)
    backward = aggregate(list(reversed(exps)))
    assert forward.supportive_counts == backward.supportive_counts
    assert forward.distractive_counts == backward.distractive_counts


def test_top_k_ordering_and_ties():
    assert top_k({"a": 3, "b": 1}, 1) == [("a", 75.0)]
    assert top_k({"a": 1, "b": 1}, 2) == [("a", 50.0), ("b", 50.0)]
    assert top_k({"a": 1, "b": 9}, 5) == [("b", 90.0), ("a", 10.0)]
    assert top_k({}, 3) == []
    with pytest.raises(ValueError):
        top_k({"a": 1}, 0)


def test_top_k_truncates_to_30():
    counts = {f"w{i:02d}": i + 1 for i in range(40)}
    out = top_k(counts, 30)
    assert len(out) == 30
    assert out[0][0] == "w39"


def test_map_subclasses_argmax_and_ties():
    reqs = {
        0: Requirement(id=0, text="response in seconds", raw_label="PE"),
        1: Requirement(id=1, text="response again", raw_label="PE"),
        2: Requirement(id=2, text="login screen", raw_label="US"),
        3: Requirement(id=3, text="functional thing", raw_label="F"),
    }
    exps = [
        exp(0, [("second", 0.5)]),
        exp(1, [("second", 0.2), ("screen", 0.1)]),
        exp(2, [("screen", 0.4), ("second", 0.3)]),
        exp(3, [("second", 0.9)]),  # FR-labeled: ignored
    ]
    mapping = map_subclasses(exps, reqs)
    assert mapping["second"] == "PE"  # 2 PE vs 1 US
    # screen ties 1 PE vs 1 US -> lexicographic subclass code
    assert mapping["screen"] == "PE"


def test_map_subclasses_single_subclass():
    reqs = {0: Requirement(id=0, text="simple training", raw_label="US")}
    mapping = map_subclasses([exp(0, [("train", 0.3)])], reqs)
    assert mapping == {"train": "US"}


def test_word_report_rows_shape():
    stats = aggregate([exp(0, [("a", 0.5), ("b", -0.25)]), exp(1, [("a", -0.1)])])
    rows = word_report_rows(stats, partition(stats), {"a": "PE"})
    by_key = {(r["word"], r["side"]): r for r in rows}
    assert by_key[("a", "supportive")]["set"] == "C"
    assert by_key[("b", "distractive")]["set"] == "A"
    assert by_key[("a", "supportive")]["subclass"] == "PE"
    assert by_key[("a", "supportive")]["percentage"] == pytest.approx(100.0)
