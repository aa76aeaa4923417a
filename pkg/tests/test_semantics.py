import pytest

from ccgnli.ccg import parse_category
from ccgnli.harness import Sentence, derive, logical_form
from ccgnli.logic import (
    Abs,
    And,
    Arrow,
    D,
    E,
    Exists,
    Forall,
    Not,
    T,
    alpha_equal,
    free_vars,
    is_rectified,
    parse_term,
    subterms,
    to_text,
)
from ccgnli.logic.ops import is_beta_normal
from ccgnli.semantics import NoTemplate, TemplateBank, TemplateError, category_to_type, instantiate, lookup_template, negate

ET = Arrow(E, T)


def formula(text):
    return parse_term(text, expected=T)


class TestCategoryTypes:
    @pytest.mark.parametrize("cat, ty", [
        ("NP", E),
        ("S\\NP", ET),
        ("(S\\NP)\\(S\\NP)", Arrow(ET, ET)),
        ("N[down]/N", Arrow(ET, ET)),
    ])
    def test_basic_map(self, cat, ty):
        assert category_to_type(parse_category(cat)) == ty


class TestLookup:
    def body(self, res, cat, lemma, pos):
        t = lookup_template(res.bank, parse_category(cat), lemma, pos)
        return instantiate(t, lemma, res.bank)

    def test_attributive_gradable_adjective(self, res):
        got = self.body(res, "N/N", "tall", "ADJ")
        assert alpha_equal(got, parse_term("\\N:<e,t>.\\x.(N(x) & tall(x, th_tall))"))

    def test_downward_quantifier_carries_negation(self, res):
        got = self.body(res, "N[down]/N", "less-than-5", "DET")
        inner = got.body.body
        assert isinstance(inner, Not)
        assert "many(x, 5)" in to_text(inner)

    def test_gradable_adverb_uses_threshold(self, res):
        got = to_text(self.body(res, "(S\\NP)\\(S\\NP)", "loudly", "ADV"))
        assert "loud(e, th_loud)" in got

    def test_missing_template(self, res):
        with pytest.raises(NoTemplate):
            lookup_template(res.bank, parse_category("(S/S)/PP"), "zork", "VERB")

    def test_ill_typed_template_rejected(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("bad\tS\\NP\t*@VERB\t\\x:e.x\n")
        with pytest.raises(TemplateError):
            TemplateBank.load(path)


class TestCompose:
    def lf(self, text):
        return logical_form(text)

    def test_positive_adjective(self):
        assert self.lf("Chris is tall") == formula("tall(chris, th_tall)")

    def test_a_not_a_comparative(self):
        want = formula("exists d.(tall(chris, d) & -tall(alex, d))")
        assert alpha_equal(self.lf("Chris is taller than Alex"), want)

    def test_measure_phrase(self):
        assert to_text(self.lf("Chris is 5 feet tall")) == "tall(chris, 5#feet)"

    def test_negate_cad157_hypothesis(self):
        got = negate(self.lf("Luis runs fast"))
        want = formula("-exists e.(run(e) & subj(e) = luis & fast(e, th_fastslow))")
        assert alpha_equal(got, want)

    def test_negate_keeps_double_negation(self):
        p = parse_term("-P(c)", {"P": ET, "c": E})
        assert negate(p) == Not(p)

    def test_propositional_coordination(self):
        f = self.lf("John cried or Mary laughed")
        assert to_text(f).count("exists") == 2

    def test_antonyms_share_a_threshold(self):
        assert "th_tall" in to_text(self.lf("John is short"))


def corpus_sentences(corpus):
    for p in corpus:
        yield from p.premises
        yield p.hypothesis


def test_every_corpus_formula_is_closed_normal_rectified(res, corpus):
    for s in corpus_sentences(corpus):
        f = derive(s, res)[1]
        assert not free_vars(f), s.text
        assert is_beta_normal(f) and is_rectified(f), s.text
        assert not any(isinstance(t, Abs) for t in subterms(f)), s.text


def quantifier_class(res, sentence):
    classes = {res.lexicon.monotonicity(t.lemma) for t in sentence.tokens if t.pos == "DET"}
    return classes - {None}


def test_monotone_classes_shape(res, corpus):
    for s in corpus_sentences(corpus):
        cls = quantifier_class(res, s)
        if len(cls) != 1 or any(t.lemma == "not" for t in s.tokens):
            continue
        f = derive(s, res)[1]
        kind = cls.pop()
        if kind == "down":
            assert isinstance(f, Not), s.text
        elif kind == "nm":
            assert isinstance(f, And), s.text
            bounds = [t for t in subterms(f.right) if isinstance(t, Forall) and t.var.type == D]
            assert len(bounds) == 1, s.text
        else:
            assert not any(isinstance(t, Not) for t in subterms(f)), s.text
