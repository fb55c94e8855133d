import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from morphlex import (
    ComponentInventory,
    ComponentKind,
    LexiconExtractor,
    StopwordList,
    TaggedCorpus,
    TargetForm,
    Token,
    TranslationTable,
)

FREE = ComponentKind.FREE
PREF = ComponentKind.PREFIX


def test_toy_end_to_end(toy):
    candidates = toy.extractor().translate_term("cytotoxic")
    assert [c.render() for c in candidates] == [
        "cytotoxicité/N",
        "toxique/A pour/PREP le/DET cellule/N",
    ]


def test_fertility_switch_drops_multiword(toy):
    candidates = toy.extractor(fertile=False).translate_term("cytotoxic")
    assert [c.render() for c in candidates] == ["cytotoxicité/N"]
    assert all(not c.fertile for c in candidates)


def test_unknown_term_yields_empty(toy):
    assert toy.extractor().translate_term("zzzz") == []


def test_predict_aligns_with_input(toy):
    predictions = toy.extractor().predict(["cytotoxic", "zzzz"])
    assert len(predictions) == 2
    assert [c.render() for c in predictions[0]][:1] == ["cytotoxicité/N"]
    assert predictions[1] == []


def test_extract_lexicon_structure(toy):
    lexicon = toy.extractor().extract(["cytotoxic", "zzzz", "toxic"])
    assert lexicon.terms == ("cytotoxic", "zzzz", "toxic")
    assert lexicon.candidates("zzzz") == ()
    assert lexicon.covered_terms() == {"cytotoxic", "toxic"}
    assert lexicon.stats.total == 3
    # toxic -> toxique is attested as a single word.
    assert [c.render() for c in lexicon.candidates("toxic")] == ["toxique/A"]


def test_stage_counts_monotonic(toy):
    lexicon = toy.extractor().extract(["cytotoxic", "toxic", "zzzz"])
    s = lexicon.stats
    assert s.total >= s.decomposed >= s.translated >= s.recomposed >= s.attested
    assert (s.decomposed, s.attested) == (2, 2)


def test_requires_fit_before_predict(toy):
    extractor = LexiconExtractor(
        source_inventory=toy.source_inventory,
        target_inventory=toy.target_inventory,
        translation=toy.translation,
    )
    with pytest.raises(NotFittedError):
        extractor.translate_term("cytotoxic")


def test_fit_validates_resource_types(toy):
    extractor = LexiconExtractor(source_inventory="not an inventory")
    with pytest.raises(TypeError):
        extractor.fit(toy.corpus)
    extractor = LexiconExtractor(
        source_inventory=toy.source_inventory, target_inventory=toy.target_inventory
    )
    with pytest.raises(TypeError):
        extractor.fit("not a corpus")


def test_sklearn_get_set_params_and_clone(toy):
    extractor = toy.extractor(fertile=False, max_gap=2)
    params = extractor.get_params()
    assert params["fertile"] is False
    assert params["max_gap"] == 2
    cloned = clone(extractor)
    assert cloned.get_params()["max_gap"] == 2
    with pytest.raises(NotFittedError):
        cloned.translate_term("cytotoxic")
    cloned.set_params(max_gap=3).fit(toy.corpus)
    assert cloned.translate_term("toxic")


def test_term_deduplication_keeps_first(toy):
    lexicon = toy.extractor().extract(["toxic", "toxic", "cytotoxic"])
    assert lexicon.terms == ("toxic", "cytotoxic")


def test_whitespace_terms_rejected_upfront(toy):
    with pytest.raises(ValueError):
        toy.extractor().extract(["has space"])


def test_per_term_isolation_records_error(toy, monkeypatch):
    import morphlex.extractor as extractor_module

    def boom(term, **kwargs):
        raise RuntimeError("pathological combinatorics")

    monkeypatch.setattr(extractor_module, "extract_term", boom)
    lexicon = toy.extractor().extract(["cytotoxic", "toxic"])
    assert lexicon.candidates("cytotoxic") == ()
    assert len(lexicon.diagnostics) == 2
    assert "pathological" in lexicon.diagnostics[0].message


def test_sequence_limit_truncates_deterministically(toy):
    limited = toy.extractor(sequence_limit=1)
    full = toy.extractor()
    lexicon = limited.extract(["cytotoxic"])
    assert any("truncated" in d.message for d in lexicon.diagnostics)
    # Truncation keeps the lexicographically first sequences, so results
    # are a subset of the full run and stable across reruns.
    again = limited.extract(["cytotoxic"])
    assert lexicon.to_tsv() == again.to_tsv()
    full_renders = {c.render() for c in full.translate_term("cytotoxic")}
    limited_renders = {c.render() for c in lexicon.candidates("cytotoxic")}
    assert limited_renders <= full_renders


def test_tsv_round_trip_values(toy, tmp_path):
    lexicon = toy.extractor().extract(["cytotoxic", "zzzz"])
    out = tmp_path / "lexicon.tsv"
    lexicon.write_tsv(out)
    lines = [l for l in out.read_text(encoding="utf-8").splitlines() if not l.startswith("#")]
    assert lines == [
        "cytotoxic\tcytotoxicité/N\t1\tfalse",
        "cytotoxic\ttoxique/A pour/PREP le/DET cellule/N\t1\ttrue",
        "zzzz\t\t0\tfalse",
    ]


def test_rerun_is_byte_identical(toy):
    first = toy.extractor().extract(["cytotoxic", "toxic", "zzzz"]).to_tsv()
    second = toy.extractor().extract(["cytotoxic", "toxic", "zzzz"]).to_tsv()
    assert first == second


def test_worker_count_does_not_change_output(toy):
    sequential = toy.extractor(n_jobs=1).extract(["cytotoxic", "toxic", "zzzz"])
    parallel = toy.extractor(n_jobs=2).extract(["cytotoxic", "toxic", "zzzz"])
    assert sequential.to_tsv() == parallel.to_tsv()


def test_prefix_only_mode():
    source_inventory = ComponentInventory(
        "en", [("anti", PREF), ("cancer", FREE), ("anticancer", FREE)]
    )
    target_inventory = ComponentInventory("fr", [("cancer", FREE)])
    translation = TranslationTable(
        {
            "anti": [TargetForm("anti", True)],
            "cancer": [TargetForm("cancer", False)],
            "anticancer": [TargetForm("anticancéreux", False)],
        }
    )
    corpus = TaggedCorpus(
        "fr",
        [
            [Token("anticancer", "anticancer", "A")],
            [Token("canceranti", "canceranti", "A")],
            [Token("anticancéreux", "anticancéreux", "A")],
        ],
    )
    full = LexiconExtractor(
        source_inventory=source_inventory,
        target_inventory=target_inventory,
        translation=translation,
    ).fit(corpus)
    restricted = LexiconExtractor(
        source_inventory=source_inventory,
        target_inventory=target_inventory,
        translation=translation,
        prefix_only=True,
    ).fit(corpus)
    full_renders = {c.render() for c in full.translate_term("anticancer")}
    restricted_renders = {c.render() for c in restricted.translate_term("anticancer")}
    # The restricted mode never reorders components and only uses the
    # prefix+word segmentation, so the reversed concatenation and the
    # whole-word dictionary route disappear.
    assert "canceranti/A" in full_renders
    assert "anticancéreux/A" in full_renders
    assert restricted_renders == {"anticancer/A"}


def test_stopwords_default_to_empty(toy):
    extractor = LexiconExtractor(
        source_inventory=toy.source_inventory,
        target_inventory=toy.target_inventory,
        translation=toy.translation,
        source_variants=toy.source_variants,
    ).fit(toy.corpus)
    candidates = extractor.translate_term("cytotoxic")
    # Without stopwords the gapped match disappears.
    assert [c.render() for c in candidates] == ["cytotoxicité/N"]


def test_language_mismatch_warning(toy, caplog):
    wrong_stop = StopwordList("de", ["und"])
    with caplog.at_level("WARNING", logger="morphlex"):
        toy.extractor(stopwords=wrong_stop)
    assert any("stopword list" in record.message for record in caplog.records)
