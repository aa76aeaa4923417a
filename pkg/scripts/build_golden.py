"""Freeze the golden derivations used by the logical-form tests.

The expected formulas are transcribed by hand from the printed tables and
are never produced by the composer. Derivations are the parser's choice,
stored before the monotonicity rewrite so tests exercise ingest, rewrite
and composition.

    python scripts/build_golden.py [output.jsonl]
"""

from __future__ import annotations

import json
import sys

from ccgnli.ccg import cky_parse, merge_numerals, rewrite_monotonicity_features, to_document
from ccgnli.harness.pipeline import bundled_resources, data_path
from ccgnli.semantics import compose

GOLDEN = [
    ("John shouted loudly",
     "exists e.(shout(e) & subj(e) = john & loud(e, th_loud))"),
    ("Ann studied English very hard",
     "exists e.(study(e) & subj(e) = ann & acc(e) = english & exists d.(hard(e, d) & th_hard < d))"),
    ("Jim sings better than Mary",
     "exists e1.exists e2.(sing(e1) & subj(e1) = jim & sing(e2) & subj(e2) = mary"
     " & exists d.(good(e1, d) & -good(e2, d)))"),
    ("Bob drives as carefully as John",
     "exists e1.exists e2.(drive(e1) & subj(e1) = bob & drive(e2) & subj(e2) = john"
     " & forall d.(careful(e2, d) -> careful(e1, d)))"),
    ("Many people cried",
     "exists x.(people(x) & many(x, th_many_person) & exists e.(cry(e) & subj(e) = x))"),
    ("Less than five students laughed",
     "-exists x.(student(x) & many(x, 5) & exists e.(laugh(e) & subj(e) = x))"),
    ("Exactly eleven boys play soccer",
     "exists x.(boy(x) & many(x, 11) & exists e.(play(e) & subj(e) = x & acc(e) = soccer))"
     " & forall x.forall d.(boy(x) & many(x, d) & exists e.(play(e) & subj(e) = x & acc(e) = soccer) -> d < 12)"),
]


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    path = argv[0] if argv else data_path("golden.jsonl")
    res = bundled_resources()
    with open(path, "w", encoding="utf-8") as fh:
        for sentence, expected in GOLDEN:
            tokens = merge_numerals(res.tagger.tag(sentence))
            for tree in cky_parse(tokens, res.lexicon):
                try:
                    compose(rewrite_monotonicity_features(tree, res.lexicon), res.bank)
                except Exception:
                    continue
                break
            else:
                raise SystemExit(f"no composable derivation for {sentence!r}")
            rec = {"sentence": sentence, "expected": expected, "derivation": to_document(tree)}
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    print(f"wrote {len(GOLDEN)} golden derivations to {path}")


if __name__ == "__main__":
    main()
