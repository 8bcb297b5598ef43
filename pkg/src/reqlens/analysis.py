"""Corpus-wide aggregation of explanation words.

Supportive words carry positive surrogate weight toward the NFR class,
distractive words negative weight. Counting is per-document presence: a stem
contributes once to a side for each explanation that reports it there.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .corpus import NFR_SUBCLASSES, Requirement
from .errors import ZeroTotal
from .lime import Explanation


@dataclass
class WordStats:
    supportive_counts: Counter
    distractive_counts: Counter

    @property
    def n_supportive(self) -> int:
        return sum(self.supportive_counts.values())

    @property
    def n_distractive(self) -> int:
        return sum(self.distractive_counts.values())


@dataclass(frozen=True)
class SetPartition:
    distractive_only: frozenset[str]  # A = D - C
    supportive_only: frozenset[str]  # B = S - C
    common: frozenset[str]  # C = S intersect D


def aggregate(explanations: Iterable[Explanation]) -> WordStats:
    supportive: Counter = Counter()
    distractive: Counter = Counter()
    for exp in explanations:
        supportive.update(set(exp.supportive()))
        distractive.update(set(exp.distractive()))
    return WordStats(supportive_counts=supportive, distractive_counts=distractive)


def occurrence_percentage(counts: Mapping[str, int], total: int) -> dict[str, float]:
    """pc_i = 100 * n_i / N over one side's counts."""
    if total <= 0:
        raise ZeroTotal("occurrence percentages need a positive total")
    return {stem: 100.0 * n / total for stem, n in counts.items()}


def partition(stats: WordStats) -> SetPartition:
    s_keys = frozenset(stats.supportive_counts)
    d_keys = frozenset(stats.distractive_counts)
    common = s_keys & d_keys
    return SetPartition(
        distractive_only=d_keys - common,
        supportive_only=s_keys - common,
        common=common,
    )


def top_k(counts: Mapping[str, int], k: int) -> list[tuple[str, float]]:
    """Top k stems by occurrence percentage, ties broken lexicographically."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = sum(counts.values())
    pct = occurrence_percentage(counts, total) if total else {}
    ranked = sorted(pct.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]


def map_subclasses(
    explanations: Sequence[Explanation],
    requirements: Mapping[int, Requirement],
) -> dict[str, str]:
    """Assign each supportive stem to the NFR subclass where it appears most.

    Appearances are counted over NFR-labeled requirements whose explanation
    listed the stem supportively; argmax ties break lexicographically by
    subclass code.
    """
    per_stem: dict[str, Counter] = {}
    for exp in explanations:
        req = requirements.get(exp.requirement_id)
        if req is None or req.raw_label not in NFR_SUBCLASSES:
            continue
        for stem in exp.supportive():
            per_stem.setdefault(stem, Counter())[req.raw_label] += 1
    assignments = {}
    for stem, subclass_counts in per_stem.items():
        assignments[stem] = min(
            subclass_counts, key=lambda code: (-subclass_counts[code], code)
        )
    return assignments


def word_report_rows(
    stats: WordStats,
    parts: SetPartition,
    subclasses: Mapping[str, str],
) -> list[dict]:
    """Flat per-word report rows (word, side, count, percentage, set, subclass)."""
    rows = []
    for side, counts, total in (
        ("supportive", stats.supportive_counts, stats.n_supportive),
        ("distractive", stats.distractive_counts, stats.n_distractive),
    ):
        pct = occurrence_percentage(counts, total) if total else {}
        for stem in sorted(counts):
            if stem in parts.common:
                set_name = "C"
            elif stem in parts.supportive_only:
                set_name = "B"
            else:
                set_name = "A"
            rows.append(
                {
                    "word": stem,
                    "side": side,
                    "count": counts[stem],
                    "percentage": pct[stem],
                    "set": set_name,
                    "subclass": subclasses.get(stem, ""),
                }
            )
    return rows
