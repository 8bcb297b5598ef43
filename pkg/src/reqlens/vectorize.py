"""TF-IDF vectorization over preprocessed stem documents.

Weighting: raw term count times smoothed idf,
    idf(t) = ln((1 + n_docs) / (1 + df[t])) + 1,
followed by L2 normalization of each nonempty vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import EmptyCorpus
from .preprocess import ProcessedDoc

VOCAB_FORMAT_VERSION = 1


@dataclass
class Vocabulary:
    term_to_index: dict[str, int]
    document_frequency: dict[str, int]
    n_train_docs: int
    _idf: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.term_to_index)

    def idf(self, term: str) -> float:
        return math.log((1 + self.n_train_docs) / (1 + self.document_frequency[term])) + 1.0

    def idf_array(self) -> np.ndarray:
        """idf values aligned with feature indices."""
        if self._idf is None:
            idf = np.empty(self.size)
            for term, i in self.term_to_index.items():
                idf[i] = self.idf(term)
            self._idf = idf
        return self._idf

    def index_to_term(self) -> list[str]:
        terms = [""] * self.size
        for term, i in self.term_to_index.items():
            terms[i] = term
        return terms


@dataclass(frozen=True)
class TfIdfVector:
    entries: dict[int, float]
    source_id: int


def build_vocabulary(train_docs: Sequence[ProcessedDoc]) -> Vocabulary:
    """Vocabulary over all distinct training stems, indexed lexicographically."""
    if not train_docs:
        raise EmptyCorpus("no training documents")
    df: dict[str, int] = {}
    for doc in train_docs:
        for s in doc.distinct_stems:
            df[s] = df.get(s, 0) + 1
    terms = sorted(df)
    return Vocabulary(
        term_to_index={t: i for i, t in enumerate(terms)},
        document_frequency=df,
        n_train_docs=len(train_docs),
    )


def transform(doc: ProcessedDoc, vocab: Vocabulary) -> TfIdfVector:
    """Map a document to a unit-norm sparse TF-IDF vector.

    Out-of-vocabulary stems are ignored; a document with no in-vocabulary
    stems yields the zero vector.
    """
    counts: dict[str, int] = {}
    for s in doc.stems:
        if s in vocab.term_to_index:
            counts[s] = counts.get(s, 0) + 1
    if not counts:
        return TfIdfVector(entries={}, source_id=doc.requirement_id)
    raw = {vocab.term_to_index[t]: c * vocab.idf(t) for t, c in counts.items()}
    norm = math.sqrt(sum(w * w for w in raw.values()))
    return TfIdfVector(
        entries={i: w / norm for i, w in raw.items()},
        source_id=doc.requirement_id,
    )


def to_dense(vector: TfIdfVector, n_features: int) -> np.ndarray:
    out = np.zeros(n_features)
    for i, w in vector.entries.items():
        out[i] = w
    return out


def batch_matrix(docs: Sequence[ProcessedDoc], vocab: Vocabulary) -> np.ndarray:
    """Dense (n_docs, vocabulary size) TF-IDF matrix."""
    X = np.zeros((len(docs), vocab.size))
    for row, doc in enumerate(docs):
        for i, w in transform(doc, vocab).entries.items():
            X[row, i] = w
    return X


def vocab_to_dict(vocab: Vocabulary) -> dict:
    terms = vocab.index_to_term()
    return {
        "format_version": VOCAB_FORMAT_VERSION,
        "n_train_docs": vocab.n_train_docs,
        "terms": [
            {"term": t, "index": i, "df": vocab.document_frequency[t]}
            for i, t in enumerate(terms)
        ],
    }


def vocab_from_dict(data: dict) -> Vocabulary:
    if data.get("format_version") != VOCAB_FORMAT_VERSION:
        raise ValueError(f"unsupported vocabulary format: {data.get('format_version')!r}")
    return Vocabulary(
        term_to_index={e["term"]: e["index"] for e in data["terms"]},
        document_frequency={e["term"]: e["df"] for e in data["terms"]},
        n_train_docs=data["n_train_docs"],
    )
