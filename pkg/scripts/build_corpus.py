"""Regenerate the bundled corpus from the authored problem table below.

Each row reads ``id | tags | gold | optional schemas | P1 ; P2 => H``.
Sentences are tokenized with the bundled tagger so the stored records carry
surface, lemma and POS for every token.

    python scripts/build_corpus.py [output.jsonl]
"""

from __future__ import annotations

import json
import sys

from ccgnli.harness.pipeline import bundled_resources, data_path
from ccgnli.harness.problems import Problem, Sentence, problem_from_record, problem_to_record

EI = "event-individuation"

TABLE = """
hc-fracas-241 | hard-case numeric clausal-comparative | yes | | ITEL won more orders than APCOM lost ; APCOM lost ten orders => ITEL won at least eleven orders
hc-med-485 | hard-case non-monotone | unknown | | Exactly 12 aliens threw some tennis balls => Exactly 12 aliens threw some balls
hc-med-176 | hard-case downward lexical-hypernym | yes | | Few aliens saw birds => Few aliens saw doves
hc-sick-1357 | hard-case lexical-hypernym adverb-drop | yes | | A puppy is repeatedly rolling from side to side on its back => A dog is rolling from side to side
hc-hans-23991 | hard-case disjunction-constituent | unknown | | The actors contacted the president, or the lawyers recommended the managers => The lawyers recommended the managers
hc-cad-115 | hard-case numeric non-monotone | yes | | Exactly seven students smiled => At most nine students smiled
hc-cad-157 | hard-case adverb-equative lexical-antonym | no | EI | Ann runs as fast as Luis does ; Ann runs slowly => Luis runs fast

ad-01 | adverb-drop | yes | | John shouted loudly => John shouted
ad-02 | adverb-drop | unknown | | John shouted => John shouted loudly
ad-03 | adverb-drop | yes | | Mary sings very loudly => Mary sings loudly
ad-04 | adverb-drop | unknown | | Mary sings loudly => Mary sings very loudly
ad-05 | adverb-drop | yes | | Bob studied hard => Bob studied
ad-06 | adverb-drop | yes | | Ann drives carefully => Ann drives
ad-07 | adverb-drop downward | yes | | John did not shout => John did not shout loudly
ad-08 | adverb-drop downward | unknown | | John did not shout loudly => John did not shout
ad-09 | adverb-drop upward | yes | | Every student laughed loudly => Every student laughed
ad-10 | adverb-drop | no | | John shouted loudly => John did not shout
ad-11 | adverb-drop upward | yes | | Some boys cried extremely loudly => Some boys cried loudly
ad-12 | adverb-drop | yes | | Mary sings happily => Mary sings
ad-13 | adverb-drop | no | | John worked hard => John did not work
ad-14 | adverb-drop | yes | | Mary sings very well => Mary sings

ac-01 | adverb-comparative | yes | | John sings better than Mary => John sings
ac-02 | adverb-comparative | yes | EI | John sings better than Mary ; Mary sings well => John sings well
ac-03 | adverb-comparative | no | EI | John sings better than Mary => Mary sings better than John
ac-04 | adverb-comparative | unknown | EI | John sings better than Mary => John sings well
ac-05 | adverb-comparative | yes | EI | John runs more quickly than Mary ; Mary runs fast => John runs fast
ac-06 | adverb-comparative | yes | EI | John runs more quickly than Mary ; Mary runs more quickly than Bob => John runs more quickly than Bob
ac-07 | adverb-comparative | no | EI | John runs more quickly than Mary => Mary runs more quickly than John
ac-08 | adverb-comparative adverb-drop | yes | | John shouted more loudly than Mary => John shouted
ac-09 | adverb-comparative | yes | EI | John shouted more loudly than Mary ; Mary shouted loudly => John shouted very loudly
ac-10 | adverb-comparative | unknown | EI | John shouted more loudly than Mary => Mary shouted loudly

ae-01 | adverb-equative | yes | EI | Ann runs as fast as Luis ; Luis runs fast => Ann runs fast
ae-02 | adverb-equative | unknown | EI | Ann runs as fast as Luis => Ann runs fast
ae-03 | adverb-equative | yes | EI | Ann sings as well as Mary ; Mary sings very well => Ann sings very well
ae-04 | adverb-equative | yes | EI | Ann sings as well as Mary ; Mary sings well => Ann sings well
ae-05 | adverb-equative | yes | EI | Ann runs as fast as Luis ; Luis runs as fast as Bob => Ann runs as fast as Bob
ae-06 | adverb-equative | unknown | EI | Ann runs as fast as Luis => Luis runs as fast as Ann
ae-07 | adverb-equative adverb-comparative | yes | EI | Ann runs as fast as Luis ; Luis runs more quickly than Bob => Ann runs more quickly than Bob
ae-08 | adverb-equative adverb-comparative | no | EI | Ann runs as fast as Luis ; Bob runs more quickly than Ann => Luis runs more quickly than Bob
ae-09 | adverb-equative adverb-drop | yes | | Ann shouted as loudly as John => Ann shouted
ae-10 | adverb-equative | yes | EI | Ann works as hard as Bob does ; Bob works hard => Ann works hard

jc-01 | adjective-comparative | yes | | John is taller than Mary ; Mary is taller than Bob => John is taller than Bob
jc-02 | adjective-comparative | no | | John is taller than Mary => Mary is taller than John
jc-03 | adjective-comparative | unknown | | John is taller than Mary => John is tall
jc-04 | adjective-comparative | yes | | John is taller than Mary ; Mary is tall => John is tall
jc-05 | adjective-comparative | no | | John is taller than Mary ; John is not tall => Mary is tall
jc-06 | adjective-comparative numeric | yes | | John is 6 feet tall => John is 5 feet tall
jc-07 | adjective-comparative numeric | unknown | | John is 5 feet tall => John is 6 feet tall
jc-08 | adjective-comparative numeric | unknown | | John is 6 feet tall ; Mary is 5 feet tall => John is taller than Mary
jc-09 | adjective-comparative | yes | | John is very tall => John is tall
jc-10 | adjective-comparative | no | | John is older than Mary ; Mary is older than Bob => Bob is older than John
jc-11 | adjective-comparative | yes | | John is heavier than Mary ; Mary is heavy => John is very heavy
jc-12 | adjective-comparative | yes | | John is younger than Mary ; Mary is young => John is young
jc-13 | adjective-comparative | unknown | | John is tall => John is very tall
jc-14 | adjective-comparative numeric | no | | John is 6 feet tall ; Mary is taller than John => Mary is not 5 feet tall

nu-01 | numeric upward | yes | | At least five students smiled => At least three students smiled
nu-02 | numeric upward | unknown | | At least three students smiled => At least five students smiled
nu-03 | numeric upward | yes | | More than five students smiled => At least six students smiled
nu-04 | numeric non-monotone | no | | Exactly five students smiled => Exactly six students smiled
nu-05 | numeric downward | yes | | Less than five students shouted => Less than seven students shouted
nu-06 | numeric downward | no | | At most four students smiled => More than six students smiled
nu-07 | numeric upward | yes | | Five students smiled => Three students smiled
nu-08 | numeric upward | unknown | | Three students smiled => Five students smiled
nu-09 | numeric non-monotone | yes | | Exactly five boys cried => At least five boys cried
nu-10 | numeric non-monotone | no | | Exactly five boys cried => More than five boys cried
nu-11 | numeric non-monotone | yes | | Exactly five boys cried => At most five boys cried
nu-12 | numeric downward | no | | At least six students smiled => Less than five students smiled
nu-13 | numeric downward | unknown | | Less than seven students shouted => Less than five students shouted
nu-14 | numeric downward | yes | | Fewer than three boys laughed => At most two boys laughed

cc-01 | clausal-comparative numeric | unknown | | ITEL won more orders than APCOM lost ; APCOM lost five orders => ITEL won at least seven orders
cc-02 | clausal-comparative numeric | no | | ITEL won more orders than APCOM lost ; APCOM lost five orders => ITEL won at most five orders
cc-03 | clausal-comparative numeric | yes | | ITEL won more orders than APCOM lost ; APCOM lost ten orders => ITEL won more than ten orders
cc-04 | clausal-comparative numeric | yes | | Mary read more books than John wrote ; John wrote three books => Mary read at least four books
cc-05 | clausal-comparative numeric | unknown | | Mary read more books than John wrote ; John wrote three books => Mary read at least five books

up-01 | upward adverb-drop | yes | | Some boys cried loudly => Some boys cried
up-02 | upward | yes | | Some students threw tennis balls => Some students threw balls
up-03 | upward | unknown | | Every student laughed => Every student laughed loudly
up-04 | upward adverb-drop | yes | | Many students cried loudly => Many students cried
up-05 | upward | yes | | A student read a book => A student read
up-06 | upward | yes | | At least five students laughed loudly => At least five students laughed
up-07 | upward numeric | yes | | More than five students laughed loudly => More than three students laughed
up-08 | upward | yes | | Every student read a book => Every student read
up-09 | upward | unknown | | A bird flew => A dove flew
up-10 | upward | unknown | | Some students threw balls => Some students threw tennis balls

dn-01 | downward | yes | | No student cried => No student cried loudly
dn-02 | downward | unknown | | No student cried loudly => No student cried
dn-03 | downward | yes | | Few students cried => Few students cried loudly
dn-04 | downward numeric | yes | | Less than five students shouted => Less than five students shouted loudly
dn-05 | downward numeric | yes | | At most three boys laughed => At most three boys laughed loudly
dn-06 | downward | no | | No student cried => Some students cried
dn-07 | downward | unknown | | Few students cried loudly => Few students cried
dn-08 | downward numeric | unknown | | At most three boys laughed loudly => At most three boys laughed
dn-09 | downward | no | | John did not cry => John cried
dn-10 | downward | unknown | | No dove flew => No bird flew
dn-11 | downward | yes | | No student threw balls => No student threw tennis balls

nm-01 | non-monotone | unknown | | Exactly five boys cried loudly => Exactly five boys cried
nm-02 | non-monotone | unknown | | Exactly five boys cried => Exactly five boys cried loudly
nm-03 | non-monotone | unknown | | Exactly 12 aliens threw some balls => Exactly 12 aliens threw some tennis balls
nm-04 | non-monotone numeric | no | | Exactly five boys cried => Less than four boys cried
nm-05 | non-monotone numeric | yes | | Only five boys cried => At least five boys cried
nm-06 | non-monotone numeric | no | | Exactly five boys cried => At least six boys cried

lh-01 | lexical-hypernym upward | yes | | A dove flew => A bird flew
lh-02 | lexical-hypernym downward | yes | | Every bird flew => Every dove flew
lh-03 | lexical-hypernym downward | yes | | No animal barked => No dog barked
lh-04 | lexical-hypernym upward | yes | | A dog barked => An animal barked
lh-05 | lexical-hypernym upward | yes | | Some kittens slept => Some cats slept
lh-06 | lexical-hypernym | yes | | John sprinted => John ran
lh-07 | lexical-hypernym | yes | | Every boy shouted => Every boy spoke
lh-08 | lexical-hypernym downward | yes | | No person danced => No girl danced
lh-09 | lexical-hypernym downward | no | | No bird flew => A sparrow flew
lh-10 | lexical-hypernym downward | yes | | Every animal slept => Every cat slept
lh-11 | lexical-hypernym adverb-drop | yes | | A puppy barked loudly => A dog barked

la-01 | lexical-antonym | no | | John is short => John is tall
la-02 | lexical-antonym | no | EI | Ann runs slowly => Ann runs fast
la-03 | lexical-antonym | no | | John is old => John is young
la-04 | lexical-antonym adjective-comparative | yes | | John is shorter than Mary => Mary is taller than John
la-05 | lexical-antonym adjective-comparative | yes | | John is younger than Mary => Mary is older than John
la-06 | lexical-antonym | no | | John is heavy => John is light
la-07 | lexical-antonym | no | EI | Ann runs fast => Ann runs slowly

dc-01 | disjunction-constituent | yes | | John cried or Mary laughed ; John did not cry => Mary laughed
dc-02 | disjunction-constituent | yes | | John cried and Mary laughed => Mary laughed
dc-03 | disjunction-constituent | yes | | John cried => John cried or Mary laughed
dc-04 | disjunction-constituent | unknown | | John cried or Mary laughed => John cried
dc-05 | disjunction-constituent | no | | John did not cry ; Mary did not laugh => John cried or Mary laughed
dc-06 | disjunction-constituent | unknown | | John cried or Mary laughed => John cried and Mary laughed
dc-07 | disjunction-constituent | yes | | Ann contacted the president, or the lawyers recommended the managers ; Ann did not contact the president => The lawyers recommended the managers
dc-08 | disjunction-constituent | unknown | | The actors contacted the president, or the lawyers recommended the managers ; The actors did not contact the president => The lawyers recommended the managers
"""


def rows():
    for line in TABLE.strip().splitlines():
        if not line.strip():
            continue
        pid, tags, gold, schemas, body = (f.strip() for f in line.split("|"))
        premises, hypothesis = body.split("=>")
        yield pid, tags.split(), gold, ["event-individuation"] if schemas == "EI" else [], \
            [p.strip() for p in premises.split(";")], hypothesis.strip()


def build() -> list[Problem]:
    tagger = bundled_resources().tagger

    def sentence(text):
        return Sentence(text=text + ".", tokens=tuple(tagger.tag(text)))

    out = []
    for pid, tags, gold, schemas, premises, hyp in rows():
        p = Problem(pid, [sentence(s) for s in premises], sentence(hyp), gold, frozenset(tags), tuple(schemas))
        problem_from_record(problem_to_record(p))  # validates tags and schemas
        out.append(p)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    path = argv[0] if argv else data_path("corpus.jsonl")
    problems = build()
    with open(path, "w", encoding="utf-8") as fh:
        for p in problems:
            fh.write(json.dumps(problem_to_record(p), sort_keys=True) + "\n")
    print(f"wrote {len(problems)} problems to {path}")


if __name__ == "__main__":
    main()
