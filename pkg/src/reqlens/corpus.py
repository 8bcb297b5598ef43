"""Loading, binarizing and splitting PROMISE-style requirement datasets.

Input format: UTF-8 CSV with a header row and columns (project_id?, text,
label). The leading project-id column is optional and ignored. Labels come
from the 12-value PROMISE inventory; F maps to the binary class FR and every
other label to NFR.
"""

from __future__ import annotations

import csv
import io
import random
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyDataset, EmptyText, InvalidFraction, MalformedRecord, UnknownLabel

RAW_LABELS = ("F", "A", "FT", "L", "LF", "MN", "O", "PE", "PO", "SC", "SE", "US")
NFR_SUBCLASSES = RAW_LABELS[1:]

SUBCLASS_NAMES = {
    "A": "Availability",
    "FT": "Fault Tolerance",
    "L": "Legal",
    "LF": "Look & Feel",
    "MN": "Maintainability",
    "O": "Operational",
    "PE": "Performance",
    "PO": "Portability",
    "SC": "Scalability",
    "SE": "Security",
    "US": "Usability",
}

FR = "FR"
NFR = "NFR"


@dataclass(frozen=True)
class Requirement:
    id: int
    text: str
    raw_label: str
    binary_label: str = field(init=False)

    def __post_init__(self):
        if self.raw_label not in RAW_LABELS:
            raise ValueError(f"label {self.raw_label!r} outside enum")
        if not self.text.strip():
            raise ValueError("requirement text is empty")
        object.__setattr__(self, "binary_label", FR if self.raw_label == "F" else NFR)


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[Requirement, ...]
    test: tuple[Requirement, ...]
    seed: int
    test_fraction: float


def parse_dataset(raw: Iterable[str] | str) -> list[Requirement]:
    """Parse a CSV text stream (or string) into requirements with ids 0..n-1.

    Raises MalformedRecord / UnknownLabel / EmptyText with the offending
    1-based line number (header = line 1).
    """
    if isinstance(raw, str):
        raw = io.StringIO(raw)
    reader = csv.reader(raw)
    requirements: list[Requirement] = []
    next_id = 0
    for row in reader:
        line = reader.line_num
        if line == 1:
            continue  # header row
        if not row or (len(row) == 1 and not row[0].strip()):
            continue  # blank line
        if len(row) == 2:
            text, label = row
        elif len(row) == 3:
            _, text, label = row
        else:
            raise MalformedRecord(line, f"expected 2 or 3 columns, got {len(row)}")
        label = label.strip()
        if label not in RAW_LABELS:
            raise UnknownLabel(line, label)
        text = text.strip()
        if not text:
            raise EmptyText(line)
        requirements.append(Requirement(id=next_id, text=text, raw_label=label))
        next_id += 1
    return requirements


def load_dataset(path: str | Path) -> list[Requirement]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_dataset(fh)


def serialize_dataset(requirements: Sequence[Requirement]) -> str:
    """Write requirements back to canonical 2-column CSV (text, label)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["text", "label"])
    for req in requirements:
        writer.writerow([req.text, req.raw_label])
    return out.getvalue()


def split(dataset: Sequence[Requirement], test_fraction: float, seed: int) -> DatasetSplit:
    """Uniform random train/test split, deterministic for a fixed seed.

    Test ids are drawn without replacement via random.Random(seed).sample
    over the dataset indices; no stratification is applied. Both halves are
    returned in ascending id order.
    """
    if not 0 < test_fraction < 1:
        raise InvalidFraction(f"test_fraction must be in (0,1), got {test_fraction}")
    n = len(dataset)
    if n == 0:
        raise EmptyDataset("cannot split an empty dataset")
    classes = {r.binary_label for r in dataset}
    if n < 2 or len(classes) < 2:
        warnings.warn("dataset has fewer than 2 rows or only one binary class", stacklevel=2)
    n_test = round(test_fraction * n)
    n_test = min(max(n_test, 1), n - 1)
    test_positions = set(random.Random(seed).sample(range(n), n_test))
    train = tuple(r for i, r in enumerate(dataset) if i not in test_positions)
    test = tuple(r for i, r in enumerate(dataset) if i in test_positions)
    return DatasetSplit(train=train, test=test, seed=seed, test_fraction=test_fraction)


def fr_fraction(dataset: Sequence[Requirement]) -> float:
    if not dataset:
        raise EmptyDataset("empty dataset has no class proportions")
    return sum(1 for r in dataset if r.binary_label == FR) / len(dataset)
