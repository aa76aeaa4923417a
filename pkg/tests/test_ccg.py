import pytest

from ccgnli.ccg import (
    NP,
    Leaf,
    Node,
    OutOfVocabulary,
    RuleMismatch,
    SchemaError,
    Token,
    cky_parse,
    ingest_derivation,
    merge_numerals,
    parse_category,
    rewrite_monotonicity_features,
    to_document,
    tree_shape,
    validate_tree,
)
from ccgnli.ccg.category import CategoryParseError
from ccgnli.ccg.tree import combine, walk


def tokens(res, text):
    return merge_numerals(res.tagger.tag(text))


def leaves(tree):
    return [t for _, t in walk(tree) if isinstance(t, Leaf)]


class TestCategories:
    @pytest.mark.parametrize("text", ["NP", "S\\NP", "(S\\NP)/NP", "((S\\NP)\\(S\\NP))/NP", "N[down]/N"])
    def test_round_trip(self, text):
        assert str(parse_category(text)) == text

    def test_bad_category_reports_position(self):
        with pytest.raises(CategoryParseError) as info:
            parse_category("(S\\NP")
        assert info.value.position is not None

    def test_application_and_composition(self):
        vp = parse_category("S\\NP")
        assert combine("ba", NP, vp) == parse_category("S")
        assert combine("fa", parse_category("S/NP"), NP) == parse_category("S")
        assert combine("fc", parse_category("S/S"), parse_category("S/NP")) == parse_category("S/NP")
        assert combine("fa", parse_category("N/N"), NP) is None


class TestDocuments:
    def john_ran_slowly(self):
        return {
            "rule": "ba", "category": "S", "children": [
                {"surface": "John", "lemma": "john", "pos": "PROPN", "category": "NP"},
                {"rule": "ba", "category": "S\\NP", "children": [
                    {"surface": "ran", "lemma": "run", "pos": "VERB", "category": "S\\NP"},
                    {"surface": "slowly", "lemma": "slowly", "pos": "ADV", "category": "(S\\NP)\\(S\\NP)"},
                ]},
            ]}

    def test_hand_built_document(self):
        tree = ingest_derivation(self.john_ran_slowly())
        assert str(tree.category) == "S"
        assert len(leaves(tree)) == 3
        assert validate_tree(tree) == []

    def test_round_trip(self):
        doc = self.john_ran_slowly()
        assert to_document(ingest_derivation(doc)) == doc

    def test_bad_application(self):
        doc = {"rule": "fa", "category": "NP", "children": [
            {"surface": "tall", "lemma": "tall", "pos": "ADJ", "category": "N/N"},
            {"surface": "John", "lemma": "john", "pos": "PROPN", "category": "NP"}]}
        with pytest.raises(RuleMismatch):
            ingest_derivation(doc)

    @pytest.mark.parametrize("doc", [{}, "", None])
    def test_empty(self, doc):
        with pytest.raises(SchemaError):
            ingest_derivation(doc)

    def test_corrupted_node_is_named(self, res):
        tree = cky_parse(tokens(res, "John ran"), res.lexicon)[0]
        broken = Node(tree.rule, parse_category("NP"), tree.left, tree.right)
        problems = validate_tree(broken)
        assert len(problems) == 1 and problems[0].node_id == "0"


class TestParsing:
    def test_two_words(self, res):
        trees = cky_parse(tokens(res, "John ran"), res.lexicon)
        assert len(trees) == 1
        assert trees[0].rule == "ba"

    def test_parser_output_validates(self, res):
        for text in ["Ann studied English very hard", "Few aliens saw birds", "Jim sings better than Mary"]:
            trees = cky_parse(tokens(res, text), res.lexicon)
            assert trees
            assert all(validate_tree(t) == [] for t in trees)

    def test_out_of_vocabulary(self, res):
        with pytest.raises(OutOfVocabulary):
            cky_parse([Token("colorless", "colorless", "ADJ"), Token("ideas", "idea", "NOUN"),
                       Token("xyzzy", "xyzzy", "INTJ")], res.lexicon)

    def test_tagger_rejects_unknown_words(self, res):
        with pytest.raises(OutOfVocabulary):
            res.tagger.tag("John glorped")


class TestRewrites:
    def test_numeral_merging(self, res):
        toks = tokens(res, "Less than five students laughed")
        assert toks[0].lemma == "less-than-5"
        assert [t.lemma for t in tokens(res, "John is 5 feet tall")][2] == "5-feet"

    def feature_of(self, res, text, lemma_prefix):
        tree = cky_parse(tokens(res, text), res.lexicon)[0]
        new = rewrite_monotonicity_features(tree, res.lexicon)
        leaf = next(l for l in leaves(new) if l.lemma.startswith(lemma_prefix))
        return str(leaf.category), tree, new

    def test_downward(self, res):
        cat, _, _ = self.feature_of(res, "Less than five students laughed", "less-than")
        assert cat == "N[down]/N"

    def test_non_monotone(self, res):
        cat, _, _ = self.feature_of(res, "Exactly eleven boys play soccer", "exactly")
        assert cat == "N[nm]/N"

    def test_upward_untouched(self, res):
        _, before, after = self.feature_of(res, "Many people cried", "many")
        assert after == before

    def test_rewrite_keeps_shape_and_validity(self, res):
        _, before, after = self.feature_of(res, "Few aliens saw birds", "few")
        assert tree_shape(before) == tree_shape(after)
        assert validate_tree(after) == []
        assert rewrite_monotonicity_features(after, res.lexicon) == after
