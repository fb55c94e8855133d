import pytest

from morphlex import (
    ComponentInventory,
    ComponentKind,
    LexiconExtractor,
    StopwordList,
    TaggedCorpus,
    TargetForm,
    Token,
    TranslationTable,
    VariantTable,
)

TOY_CORPUS_ROWS = [
    ("La", "le", "DET"),
    ("cytotoxicité", "cytotoxicité", "N"),
    ("est", "être", "AUX"),
    ("la", "le", "DET"),
    ("propriété", "propriété", "N"),
    ("de", "de", "PREP"),
    ("ce", "ce", "DET"),
    ("qui", "qui", "PRO"),
    ("est", "être", "AUX"),
    ("toxique", "toxique", "A"),
    ("pour", "pour", "PREP"),
    ("les", "le", "DET"),
    ("cellules", "cellule", "N"),
]


class ToyData:
    """The worked-example dataset, in memory."""

    def __init__(self):
        self.source_inventory = ComponentInventory(
            "en",
            [
                ("cyto", ComponentKind.CONFIX),
                ("cytotoxic", ComponentKind.FREE),
                ("cytotoxicity", ComponentKind.FREE),
                ("toxic", ComponentKind.FREE),
            ],
        )
        self.target_inventory = ComponentInventory(
            "fr",
            [
                ("cyto", ComponentKind.CONFIX),
                ("cellule", ComponentKind.FREE),
                ("toxique", ComponentKind.FREE),
            ],
        )
        # The cytotoxicity entry is the documented reconstruction: without
        # it the single-group route cannot reach cytotoxicité.
        self.translation = TranslationTable(
            {
                "cyto": [TargetForm("cyto", True), TargetForm("cellule", False)],
                "toxic": [TargetForm("toxique", False)],
                "cytotoxicity": [TargetForm("cytotoxicité", False)],
            }
        )
        self.source_variants = VariantTable("en", {"cytotoxic": ["cytotoxicity"]})
        self.target_variants = VariantTable("fr", {})
        self.stopwords = StopwordList("fr", ["pour", "le"])
        self.corpus = TaggedCorpus("fr", [[Token(*row) for row in TOY_CORPUS_ROWS]])

    def extractor(self, **overrides) -> LexiconExtractor:
        params = dict(
            source_inventory=self.source_inventory,
            target_inventory=self.target_inventory,
            translation=self.translation,
            source_variants=self.source_variants,
            target_variants=self.target_variants,
            stopwords=self.stopwords,
        )
        params.update(overrides)
        return LexiconExtractor(**params).fit(self.corpus)


@pytest.fixture(scope="session")
def toy() -> ToyData:
    return ToyData()


def write_toy_files(root):
    """Write the worked-example dataset as resource files; returns paths."""
    paths = {
        "source_inventory": root / "en_inventory.tsv",
        "target_inventory": root / "fr_inventory.tsv",
        "general_dict": root / "general_dict.tsv",
        "morpheme_table": root / "morphemes.tsv",
        "source_morph_variants": root / "var_en.tsv",
        "target_morph_variants": root / "var_fr.tsv",
        "stopwords": root / "stop_fr.txt",
        "corpus": root / "corpus_fr.vert",
        "terms": root / "terms.txt",
        "config": root / "run.cfg",
    }
    paths["source_inventory"].write_text(
        "# toy source inventory\n"
        "-cyto-\tconf\n"
        "cytotoxic\tfree\n"
        "cytotoxicity\tfree\n"
        "toxic\tfree\n",
        encoding="utf-8",
    )
    paths["target_inventory"].write_text(
        "-cyto-\tconf\ncellule\tfree\ntoxique\tfree\n", encoding="utf-8"
    )
    paths["general_dict"].write_text(
        "toxic\ttoxique:free\ncytotoxicity\tcytotoxicité:free\n", encoding="utf-8"
    )
    paths["morpheme_table"].write_text("-cyto-\t-cyto-:bound|cellule:free\n", encoding="utf-8")
    paths["source_morph_variants"].write_text("cytotoxic\tcytotoxicity\n", encoding="utf-8")
    paths["target_morph_variants"].write_text("", encoding="utf-8")
    paths["stopwords"].write_text("pour\nle\n", encoding="utf-8")
    paths["corpus"].write_text(
        "".join(f"{surface}\t{lemma}\t{pos}\n" for surface, lemma, pos in TOY_CORPUS_ROWS),
        encoding="utf-8",
    )
    paths["terms"].write_text("cytotoxic\n", encoding="utf-8")
    paths["config"].write_text(
        "source_language = en\n"
        "target_language = fr\n"
        "preset = BM\n"
        "source_inventory = en_inventory.tsv\n"
        "target_inventory = fr_inventory.tsv\n"
        "general_dict = general_dict.tsv\n"
        "morpheme_table = morphemes.tsv\n"
        "source_morph_variants = var_en.tsv\n"
        "target_morph_variants = var_fr.tsv\n"
        "stopwords = stop_fr.txt\n"
        "corpus = corpus_fr.vert\n",
        encoding="utf-8",
    )
    return paths


@pytest.fixture(scope="session")
def toy_files(tmp_path_factory):
    return write_toy_files(tmp_path_factory.mktemp("toy"))
