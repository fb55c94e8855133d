import random

import oracles
from morphlex import (
    LexicalSeq,
    PipelineConfig,
    StopwordList,
    TaggedCorpus,
    Token,
    collect_candidates,
    match_sequence,
    sort_candidates,
)


def make_corpus(*sentences):
    return TaggedCorpus(
        "fr",
        [
            [Token(lemma, lemma, pos) for lemma, pos in sentence]
            for sentence in sentences
        ],
    )


def test_match_two_items_over_stopword_gap(toy):
    spans = match_sequence(LexicalSeq(("toxique", "cellule")), toy.corpus, toy.stopwords)
    (span,) = spans
    assert span.matched == (9, 12)
    assert (span.start, span.end) == (9, 12)
    assert span.pairs == (
        ("toxique", "A"),
        ("pour", "PREP"),
        ("le", "DET"),
        ("cellule", "N"),
    )


def test_match_single_item(toy):
    spans = match_sequence(LexicalSeq(("cytotoxicité",)), toy.corpus, toy.stopwords)
    (span,) = spans
    assert span.matched == (1,)
    assert span.pairs == (("cytotoxicité", "N"),)


def test_match_requires_stopword_fillers(toy):
    empty = StopwordList("fr", [])
    assert match_sequence(LexicalSeq(("toxique", "cellule")), toy.corpus, empty) == set()


def test_match_gap_beyond_limit():
    # Four stopwords between a and b: position difference 5 exceeds 3.
    corpus = make_corpus(
        [("a", "N"), ("s", "X"), ("s", "X"), ("s", "X"), ("s", "X"), ("b", "N")]
    )
    stopwords = StopwordList("fr", ["s"])
    assert match_sequence(LexicalSeq(("a", "b")), corpus, stopwords) == set()
    # Two intervening stopwords (difference 3) is the boundary case.
    corpus = make_corpus([("a", "N"), ("s", "X"), ("s", "X"), ("b", "N")])
    spans = match_sequence(LexicalSeq(("a", "b")), corpus, stopwords)
    assert {span.matched for span in spans} == {(0, 3)}


def test_match_does_not_cross_sentence_boundary():
    corpus = make_corpus([("a", "N")], [("b", "N")])
    stopwords = StopwordList("fr", [])
    assert match_sequence(LexicalSeq(("a", "b")), corpus, stopwords) == set()
    same = make_corpus([("a", "N"), ("b", "N")])
    assert len(match_sequence(LexicalSeq(("a", "b")), same, stopwords)) == 1


def test_match_returns_all_occurrences():
    corpus = make_corpus([("a", "N"), ("b", "N"), ("a", "N"), ("b", "N")])
    stopwords = StopwordList("fr", [])
    spans = match_sequence(LexicalSeq(("a", "b")), corpus, stopwords)
    assert {span.matched for span in spans} == {(0, 1), (2, 3)}


def test_match_explores_alternative_continuations():
    # b appears adjacent and after a stopword: both windows are valid.
    corpus = make_corpus([("a", "N"), ("b", "N"), ("s", "X"), ("b", "N")])
    stopwords = StopwordList("fr", ["s", "b"])
    spans = match_sequence(LexicalSeq(("a", "b")), corpus, stopwords)
    assert {span.matched for span in spans} == {(0, 1), (0, 3)}


def test_collect_candidates_toy_run(toy):
    seqs = {
        LexicalSeq(("cytotoxique",)),
        LexicalSeq(("toxiquecyto",)),
        LexicalSeq(("cellule", "toxique")),
        LexicalSeq(("celluletoxique",)),
        LexicalSeq(("toxique", "cellule")),
        LexicalSeq(("toxiquecellule",)),
        LexicalSeq(("cytotoxicité",)),
    }
    candidates = collect_candidates(seqs, toy.corpus, toy.stopwords)
    rendered = {c.render() for c in candidates}
    assert rendered == {"cytotoxicité/N", "toxique/A pour/PREP le/DET cellule/N"}


def test_candidates_group_by_lemma_pos_windows():
    # Two occurrences with different surfaces but equal (lemma, pos).
    corpus = TaggedCorpus(
        "fr",
        [
            [Token("cellules", "cellule", "N")],
            [Token("cellule", "cellule", "N")],
        ],
    )
    stopwords = StopwordList("fr", [])
    candidates = collect_candidates({LexicalSeq(("cellule",))}, corpus, stopwords)
    (candidate,) = candidates
    assert candidate.count == 2
    assert len(candidate.spans) == 2


def test_same_lemma_different_pos_distinct_candidates():
    corpus = make_corpus([("solide", "A")], [("solide", "N")])
    stopwords = StopwordList("fr", [])
    candidates = collect_candidates({LexicalSeq(("solide",))}, corpus, stopwords)
    assert {c.pairs for c in candidates} == {
        (("solide", "A"),),
        (("solide", "N"),),
    }
    assert all(c.count == 1 for c in candidates)


def test_count_conservation():
    corpus = make_corpus(
        [("a", "N"), ("a", "N"), ("b", "N"), ("a", "V")],
    )
    stopwords = StopwordList("fr", [])
    candidates = collect_candidates({LexicalSeq(("a",))}, corpus, stopwords)
    total_spans = set()
    for candidate in candidates:
        assert candidate.count == len(candidate.spans)
        total_spans.update(candidate.spans)
    assert sum(c.count for c in candidates) == len(total_spans) == 3


def test_fertility_flag(toy):
    seqs = {LexicalSeq(("toxique", "cellule")), LexicalSeq(("cytotoxicité",))}
    candidates = collect_candidates(seqs, toy.corpus, toy.stopwords, source_word_count=1)
    by_render = {c.render(): c for c in candidates}
    assert by_render["toxique/A pour/PREP le/DET cellule/N"].fertile is True
    assert by_render["cytotoxicité/N"].fertile is False


def test_sort_candidates_deterministic():
    corpus = make_corpus([("b", "N")], [("a", "N")], [("a", "N")])
    stopwords = StopwordList("fr", [])
    candidates = collect_candidates(
        {LexicalSeq(("a",)), LexicalSeq(("b",))}, corpus, stopwords
    )
    ordered = sort_candidates(candidates)
    assert [c.render() for c in ordered] == ["a/N", "b/N"]


def _random_corpus(rng: random.Random):
    lemmas = ["a", "b", "c", "s", "t", "u"]
    sentences = []
    remaining = rng.randint(10, 200)
    while remaining > 0:
        size = min(remaining, rng.randint(1, 30))
        sentences.append(
            [
                (rng.choice(lemmas), rng.choice(["N", "A"]))
                for _ in range(size)
            ]
        )
        remaining -= size
    stop_count = rng.randint(0, 4)
    stopwords = StopwordList("fr", rng.sample(lemmas, stop_count))
    return make_corpus(*sentences), stopwords


def test_match_sequence_equals_window_scanner_oracle():
    rng = random.Random(424242)
    total_spans = 0
    for _ in range(200):
        corpus, stopwords = _random_corpus(rng)
        config = PipelineConfig()
        n = rng.randint(1, 3)
        items = [rng.choice(["a", "b", "c", "s"]) for _ in range(n)]
        actual = match_sequence(LexicalSeq(tuple(items)), corpus, stopwords, config)
        expected = oracles.match_spans(items, corpus, stopwords, config)
        assert actual == expected
        total_spans += len(expected)
    assert total_spans > 500
