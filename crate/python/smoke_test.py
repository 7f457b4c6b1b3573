#!/usr/bin/env python3
"""Smoke test for the lightverbs_py extension module.

Builds nothing itself: run `cargo build -p lightverbs-py --release` first
(or pass --debug to use the debug artifact), then:

    python3 python/smoke_test.py
"""

import argparse
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def import_module(profile: str):
    built = REPO_ROOT / "target" / profile / "liblightverbs_py.so"
    if not built.exists():
        sys.exit(
            f"{built} not found - run `cargo build -p lightverbs-py "
            f"{'--release' if profile == 'release' else ''}` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="lightverbs_py."))
    shutil.copy2(built, stage / "lightverbs_py.so")
    sys.path.insert(0, str(stage))
    import lightverbs_py

    return lightverbs_py


def approx(a: float, b: float, tol: float = 1e-9) -> bool:
    return abs(a - b) <= tol


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--debug", action="store_true", help="use target/debug")
    args = ap.parse_args()
    lv = import_module("debug" if args.debug else "release")

    # lemmatization
    assert lv.lemmatize_verb("made", "VBD") == "make"
    assert lv.lemmatize_verb("includes", "VBZ") == "include"
    assert lv.lemmatize_verb("making", "VBG") == "make"
    assert lv.lemmatize_noun("decisions", "NNS") == "decision"
    assert lv.lemmatize_noun("studies", "NNS") == "study"

    # parsing and density
    corpus = lv.parse_corpus("The/DT dog/NN ran/VBD ./.")
    assert len(corpus) == 1
    assert approx(corpus.lexical_density(), 2.0 / 3.0)

    # the bundled corpus: extraction, tables, ranking
    mini = lv.parse_corpus(lv.MINI_CORPUS)
    assert len(mini) == 40
    pairs = lv.extract_pairs(mini)
    assert len(pairs) == 30
    tables = lv.build_tables(pairs)
    assert tables.global_count("make") == 12
    assert tables.global_count("reject") == 3
    assert tables.grand_total == 30
    assert tables.local_count("proposal", "make") == 3
    assert tables.local_count("proposal", "reject") == 3

    ranked = tables.rank("proposal")
    assert ranked[0].verb == "make" and ranked[0].rank == 1
    assert ranked[1].verb == "reject"
    assert approx(lv.choice_ratio(ranked), 4.0, tol=1e-12)

    # nominal filter narrows extraction
    only_proposal = lv.extract_pairs(mini, nominals=["proposal"])
    assert len(only_proposal) == 6
    assert {p.object for p in only_proposal} == {"proposal"}

    # lexicon derivation and filtering
    lex = lv.Lexicon.derive(
        ["proposal", "department", "judgment"],
        ["propose", "depart", "judge"],
    )
    assert lex.lookup("proposal", include_candidates=True) == ["propose"]
    assert lex.lookup("judgment", include_candidates=True) == ["judge"]
    assert lex.lookup("department", include_candidates=True) == ["depart"]
    assert lex.lookup("department") == []  # candidates hidden by default

    # scoring: the published first choices give 13/18 strict, 14/15 lenient
    published = {
        "attempt": [("make", 9.36), ("include", 1.0)],
        "change": [("make", 1.85), ("produce", 1.0)],
        "concession": [("make", 11.47), ("include", 1.0)],
        "demand": [("make", 1.03), ("create", 1.0)],
        "distinction": [("make", 3.04), ("have", 1.0)],
        "drink": [("become", 1.0)],
        "effect": [("have", 3.04), ("produce", 1.0)],
        "feeling": [("have", 3.27), ("produce", 1.0)],
        "gift": [("have", 9.89), ("include", 1.0)],
        "harm": [("cause", 1.26), ("do", 1.0)],
        "judgment": [("make", 2.43), ("have", 1.0)],
        "knowledge": [("have", 12.36), ("use", 1.0)],
        "progress": [("make", 64.33), ("allow", 1.0)],
        "proposal": [("make", 1.10), ("include", 1.0)],
        "resemblance": [("bear", 2.64), ("have", 1.0)],
        "use": [("make", 6.55), ("have", 1.0)],
    }
    predictions = {
        nominal: [
            lv.Candidate(verb, adjusted, rank=i + 1)
            for i, (verb, adjusted) in enumerate(choices)
        ]
        for nominal, choices in published.items()
    }
    report = lv.score(lv.default_testset(), predictions)
    assert report.strict == (13, 18), report.strict
    assert report.lenient == (14, 15), report.lenient
    assert "make an attempt" in report.format("pretty")

    # one-call evaluation over the bundled corpus
    mini_report = lv.evaluate_corpus(lv.MINI_CORPUS)
    assert mini_report.strict == (9, 18), mini_report.strict
    rows = {row[0]: row for row in mini_report.rows()}
    assert rows["proposal"][1] == "make"
    assert approx(rows["proposal"][3], 4.0, tol=1e-12)

    print("smoke test passed")


if __name__ == "__main__":
    main()
