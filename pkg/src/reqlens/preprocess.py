"""Text preprocessing: tokenization, stop-word and number removal, stemming,
and the expert-configurable word-removal step.

Removal profiles:
  A      keep every stem
  A-M    additionally remove modal-word stems (shall, should, must, ...)
  A-M-C  A-M plus the stems of the top-3 common words (system, user, product)
  custom any of the above extended with analyst-supplied stems
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from . import stemmer
from .corpus import Requirement

PROFILE_NAMES = ("A", "A-M", "A-M-C")


@dataclass(frozen=True)
class RemovalProfile:
    name: str
    removed_stems: frozenset[str]


@dataclass(frozen=True)
class ProcessedDoc:
    requirement_id: int
    stems: tuple[str, ...]
    distinct_stems: frozenset[str]


@dataclass(frozen=True)
class PreprocessConfig:
    stopwords: frozenset[str]
    profile: RemovalProfile


def read_word_list(source: str | Path | Iterable[str]) -> list[str]:
    """Read a plain-text word list: one word per line, '#' starts a comment."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = list(source)
    words = []
    for line in lines:
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.append(word)
    return words


def _packaged_words(filename: str) -> list[str]:
    text = resources.files("reqlens.data").joinpath(filename).read_text(encoding="utf-8")
    return read_word_list(text.splitlines())


def default_stopwords() -> frozenset[str]:
    return frozenset(_packaged_words("stopwords.txt"))


def modal_word_stems() -> frozenset[str]:
    return frozenset(stemmer.stem(w) for w in _packaged_words("modal_words.txt"))


def common_word_stems() -> frozenset[str]:
    return frozenset(stemmer.stem(w) for w in _packaged_words("common_words.txt"))


def make_profile(name: str, extra_stems: Iterable[str] = ()) -> RemovalProfile:
    """Build a removal profile by name; extra stems turn it into 'custom'.

    Extra entries are stemmed here so callers may pass plain words.
    """
    if name == "A":
        removed: frozenset[str] = frozenset()
    elif name == "A-M":
        removed = modal_word_stems()
    elif name == "A-M-C":
        removed = modal_word_stems() | common_word_stems()
    else:
        raise ValueError(f"unknown removal profile {name!r}")
    extra = frozenset(stemmer.stem(w.lower()) for w in extra_stems)
    if extra:
        return RemovalProfile(name="custom", removed_stems=removed | extra)
    return RemovalProfile(name=name, removed_stems=removed)


def default_config(profile_name: str = "A", extra_stems: Iterable[str] = ()) -> PreprocessConfig:
    return PreprocessConfig(
        stopwords=default_stopwords(),
        profile=make_profile(profile_name, extra_stems),
    )


def tokenize(text: str) -> list[str]:
    """Lowercased maximal runs of alphabetic characters.

    Digits, punctuation and symbols act as separators, so number removal
    falls out of the token definition ("2-day" -> ["day"]).
    """
    return "".join(c if c.isalpha() else " " for c in text.lower()).split()


def filter_and_stem(
    tokens: Sequence[str],
    stopwords: frozenset[str],
    profile: RemovalProfile,
) -> list[str]:
    """Drop stop words and 1-letter tokens, stem the rest, then drop stems
    in the profile's removal set. Order is preserved."""
    stems = []
    for token in tokens:
        if len(token) < 2 or token in stopwords:
            continue
        s = stemmer.stem(token)
        if s in profile.removed_stems:
            continue
        stems.append(s)
    return stems


def preprocess(requirement: Requirement, config: PreprocessConfig) -> ProcessedDoc:
    stems = tuple(filter_and_stem(tokenize(requirement.text), config.stopwords, config.profile))
    return ProcessedDoc(
        requirement_id=requirement.id,
        stems=stems,
        distinct_stems=frozenset(stems),
    )
