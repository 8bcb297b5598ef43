import random

import pytest

from reqlens.corpus import Requirement

F_TEXTS = [
    "The {s} shall allow the {a} to {v} the {o}.",
    "The {s} shall display the {o} when the {a} requests it.",
    "The {a} shall be able to {v} the {o}.",
    "The {s} shall {v} the {o} for the {a}.",
]
N_TEXTS = [
    ("The {s} shall respond to the {a} within {n} seconds.", "PE"),
    ("Only authorized {a}s shall access the {o} after a logon.", "SE"),
    ("The {s} shall be available {n} hours per day.", "A"),
    ("The {s} shall be easy to use after a short training course.", "US"),
    ("The navigation of the {s} shall be consistent on every screen.", "LF"),
    ("The {s} shall operate in the corporate environment.", "O"),
]


def make_corpus(n=72, seed=5):
    """Small balanced synthetic corpus for interface-level tests."""
    rng = random.Random(seed)
    subs = ["system", "product", "application"]
    actors = ["user", "administrator", "clerk"]
    verbs = ["update", "delete", "search", "print", "export"]
    objs = ["report", "record", "invoice", "profile"]
    reqs = []
    for i in range(n):
        if i % 2:
            template, label = rng.choice(N_TEXTS)
        else:
            template, label = rng.choice(F_TEXTS), "F"
        text = template.format(
            s=rng.choice(subs),
            a=rng.choice(actors),
            v=rng.choice(verbs),
            o=rng.choice(objs),
            n=rng.choice([2, 5, 10, 24]),
        )
        reqs.append(Requirement(id=i, text=text, raw_label=label))
    return reqs


@pytest.fixture(scope="session")
def tiny_corpus():
    return make_corpus()


@pytest.fixture(scope="session")
def tiny_csv(tmp_path_factory, tiny_corpus):
    import csv

    path = tmp_path_factory.mktemp("data") / "tiny.csv"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["text", "label"])
        for r in tiny_corpus:
            writer.writerow([r.text, r.raw_label])
    return path
