"""Bilingual lexicon extraction from comparable corpora.

Morphologically constructed single-word terms are decomposed into morpheme
components, the components are translated through lookup tables, the
translations are recombined into candidate sequences (possibly multi-word),
and candidates are kept only when attested in a POS-tagged target corpus.
"""

__version__ = "0.1.0"

from .decomposition import (
    Decomposition,
    decompose,
    enumerate_groupings,
    minimal_splits,
    prefix_base_splits,
)
from .errors import ConfigurationError, MorphlexError, ResourceFormatError
from .extractor import Lexicon, LexiconExtractor, StageCounts, TermResult, extract_term
from .metrics import (
    AnnotatedLexicon,
    AnnotatedRow,
    AnnotationLabel,
    EvalReport,
    cohen_kappa,
    comparability,
    evaluate,
    translation_coverage,
)
from .morphology import (
    StemFamily,
    build_families,
    filter_test_set,
    harvest_terms,
    stem,
    stem_families,
)
from .porter import porter_stem
from .recomposition import LexicalSeq, filter_bound_only, permute_and_concatenate
from .resources import (
    Component,
    ComponentInventory,
    ComponentKind,
    PipelineConfig,
    StopwordList,
    TaggedCorpus,
    TargetForm,
    Token,
    TranslationTable,
    VariantTable,
    load_corpus,
    load_inventory,
    load_stopwords,
    load_translation_table,
    load_variant_table,
    save_corpus,
    save_inventory,
    save_stopwords,
    save_translation_table,
    save_variant_table,
)
from .runconfig import PRESETS, RunConfig, build_extractor, load_run_config, run_extraction
from .selection import CandidateTranslation, MatchSpan, collect_candidates, match_sequence, sort_candidates
from .translation import Provenance, TranslatedItem, translate_component, translate_decomposition

__all__ = [
    "AnnotatedLexicon",
    "AnnotatedRow",
    "AnnotationLabel",
    "CandidateTranslation",
    "Component",
    "ComponentInventory",
    "ComponentKind",
    "ConfigurationError",
    "Decomposition",
    "EvalReport",
    "Lexicon",
    "LexicalSeq",
    "LexiconExtractor",
    "MatchSpan",
    "MorphlexError",
    "PRESETS",
    "PipelineConfig",
    "Provenance",
    "ResourceFormatError",
    "RunConfig",
    "StageCounts",
    "StemFamily",
    "StopwordList",
    "TaggedCorpus",
    "TargetForm",
    "TermResult",
    "Token",
    "TranslatedItem",
    "TranslationTable",
    "VariantTable",
    "build_extractor",
    "build_families",
    "cohen_kappa",
    "collect_candidates",
    "comparability",
    "decompose",
    "enumerate_groupings",
    "evaluate",
    "extract_term",
    "filter_bound_only",
    "filter_test_set",
    "harvest_terms",
    "load_corpus",
    "load_inventory",
    "load_run_config",
    "load_stopwords",
    "load_translation_table",
    "load_variant_table",
    "match_sequence",
    "minimal_splits",
    "permute_and_concatenate",
    "porter_stem",
    "prefix_base_splits",
    "run_extraction",
    "save_corpus",
    "save_inventory",
    "save_stopwords",
    "save_translation_table",
    "save_variant_table",
    "sort_candidates",
    "stem",
    "stem_families",
    "translate_component",
    "translate_decomposition",
    "translation_coverage",
]
