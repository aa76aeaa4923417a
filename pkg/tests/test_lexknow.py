import pytest

from ccgnli.harness import logical_form
from ccgnli.lexknow import (
    KINDS,
    KBParseError,
    KnowledgeBase,
    LexRelation,
    UnknownKind,
    candidate_pairs,
    load_kb,
    relation_for,
    synthesize_axioms,
)
from ccgnli.logic import Arrow, Const, D, E, T, V, alpha_equal, parse_term, type_of
from ccgnli.prover import Budget, decide_entailment

ET = Arrow(E, T)


def kb_from(tmp_path, text):
    path = tmp_path / "kb.tsv"
    path.write_text(text)
    return load_kb(path)


def axiom(text):
    return parse_term(text, expected=T)


def test_seven_kinds():
    assert len(KINDS) == 7


class TestLoading:
    def test_hyponym_gets_dual(self, tmp_path):
        kb = kb_from(tmp_path, "puppy\thyponym\tdog\n")
        assert kb.kinds("dog", "puppy") == {"hypernym"}
        assert relation_for(kb, "puppy", "dog") == "hypernym"

    def test_symmetric_kinds(self, tmp_path):
        kb = kb_from(tmp_path, "fast\tantonym\tslow\nbig\tsynonym\tlarge\n")
        assert "antonym" in kb.kinds("slow", "fast")
        assert "synonym" in kb.kinds("large", "big")

    def test_no_duplicates(self, tmp_path):
        kb = kb_from(tmp_path, "fast\tantonym\tslow\nslow\tantonym\tfast\n")
        assert len(kb) == 2

    def test_reflexive_rejected(self, tmp_path):
        with pytest.raises(KBParseError):
            kb_from(tmp_path, "fast\tantonym\tfast\n")

    def test_unknown_kind(self, tmp_path):
        with pytest.raises(UnknownKind) as info:
            kb_from(tmp_path, "# comment\nfast\topposite\tslow\n")
        assert info.value.line == 2

    def test_malformed_line(self, tmp_path):
        with pytest.raises(KBParseError):
            kb_from(tmp_path, "fast antonym slow\n")

    def test_empty_file(self, tmp_path):
        assert len(kb_from(tmp_path, "")) == 0


class TestPairs:
    def test_same_type_pairs(self):
        pairs = candidate_pairs([logical_form("A puppy barked")], logical_form("A dog barked"))
        assert ("puppy", "dog") in [(f.name, g.name) for f, g in pairs]

    def test_type_mismatch_excluded(self):
        pairs = candidate_pairs([logical_form("John ran")], logical_form("Mary is tall"))
        assert pairs == []

    def test_degree_predicates_pair(self):
        pairs = candidate_pairs([logical_form("Ann runs fast")], logical_form("Ann runs slowly"))
        assert ("fast", "slow") in [(f.name, g.name) for f, g in pairs]


class TestSynthesis:
    def kb(self):
        kb = KnowledgeBase()
        for s, k, t in [("puppy", "hyponym", "dog"), ("dog", "hypernym", "puppy"),
                        ("happy", "antonym", "sad"), ("sad", "antonym", "happy"),
                        ("fast", "antonym", "slow"), ("slow", "antonym", "fast"),
                        ("big", "synonym", "large"), ("large", "synonym", "big")]:
            kb.add(LexRelation(s, t, k))
        return kb

    def test_hypernym_direction(self):
        p, d = Const("puppy", ET), Const("dog", ET)
        (ax,) = synthesize_axioms([(p, d)], self.kb())
        assert alpha_equal(ax, axiom("forall x.(puppy(x) -> dog(x))"))

    def test_hyponym_direction(self):
        p, d = Const("puppy", ET), Const("dog", ET)
        (ax,) = synthesize_axioms([(d, p)], self.kb())
        assert alpha_equal(ax, axiom("forall x.(puppy(x) -> dog(x))"))

    def test_unary_antonym(self):
        (ax,) = synthesize_axioms([(Const("happy", ET), Const("sad", ET))], self.kb())
        assert alpha_equal(ax, axiom("forall x.(happy(x) -> -sad(x))"))

    def test_gradable_antonym_is_scale_complement(self):
        ty = Arrow(V, Arrow(D, T))
        (ax,) = synthesize_axioms([(Const("fast", ty), Const("slow", ty))], self.kb())
        assert alpha_equal(ax, axiom("forall e.forall d.(slow(e, d) <-> -fast(e, d))"))

    def test_biconditional_symmetry(self):
        b, l = Const("big", ET), Const("large", ET)
        (one,) = synthesize_axioms([(b, l)], self.kb())
        (two,) = synthesize_axioms([(l, b)], self.kb())
        verdict = decide_entailment([one], two, [], Budget())
        assert verdict.label == "yes"
        assert decide_entailment([two], one, [], Budget()).label == "yes"

    def test_unrelated_pairs_yield_nothing(self):
        assert synthesize_axioms([(Const("cat", ET), Const("dog", ET))], self.kb()) == []

    def test_axioms_are_formulas_over_the_pair(self):
        pairs = [(Const("puppy", ET), Const("dog", ET)), (Const("happy", ET), Const("sad", ET))]
        axioms = synthesize_axioms(pairs, self.kb())
        assert len(axioms) <= len(pairs)
        for ax in axioms:
            assert type_of(ax) == T
