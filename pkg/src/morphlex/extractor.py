"""The extraction estimator: decompose, translate, recompose, select.

``LexiconExtractor`` follows the scikit-learn estimator protocol: resource
tables and bounds are constructor parameters, ``fit`` binds and validates
them against a target corpus, and ``predict`` maps source terms to their
candidate translations.  ``extract`` returns the richer ``Lexicon`` record
with per-stage statistics and run metadata.

Terms are processed independently: a failure on one term is recorded as a
diagnostic and never aborts the run, and results are merged in input order
so the output is identical regardless of worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from joblib import Parallel, delayed
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .decomposition import Decomposition, decompose, prefix_base_splits
from .recomposition import LexicalSeq, filter_bound_only, permute_and_concatenate
from .resources import (
    ComponentInventory,
    PipelineConfig,
    StopwordList,
    TaggedCorpus,
    TranslationTable,
    VariantTable,
)
from .selection import CandidateTranslation, collect_candidates, sort_candidates
from .translation import translate_decomposition
from .validation import (
    check_term,
    check_terms,
    merge_translation_tables,
    merge_variant_tables,
    require_instance,
    warn_on_language_mismatch,
)


class Diagnostic(NamedTuple):
    severity: str
    message: str
    location: str


@dataclass(frozen=True)
class StageCounts:
    """How many terms survived each pipeline stage."""

    total: int = 0
    decomposed: int = 0
    translated: int = 0
    recomposed: int = 0
    attested: int = 0


@dataclass(frozen=True)
class TermResult:
    term: str
    candidates: tuple[CandidateTranslation, ...]
    decomposed: bool = False
    translated: bool = False
    recomposed: bool = False
    truncated: bool = False
    error: str | None = None


class Lexicon:
    """Extraction output: per-term candidate lists plus run bookkeeping."""

    def __init__(
        self,
        results: Iterable[TermResult],
        metadata: dict[str, str] | None = None,
    ):
        self._results: tuple[TermResult, ...] = tuple(results)
        self._by_term = {r.term: r.candidates for r in self._results}
        self.metadata: dict[str, str] = dict(metadata or {})
        self.diagnostics: tuple[Diagnostic, ...] = tuple(
            Diagnostic("warning", r.error or "sequence limit exceeded; truncated", r.term)
            for r in self._results
            if r.error or r.truncated
        )
        self.stats = StageCounts(
            total=len(self._results),
            decomposed=sum(1 for r in self._results if r.decomposed),
            translated=sum(1 for r in self._results if r.translated),
            recomposed=sum(1 for r in self._results if r.recomposed),
            attested=sum(1 for r in self._results if r.candidates),
        )

    @property
    def terms(self) -> tuple[str, ...]:
        return tuple(r.term for r in self._results)

    def candidates(self, term: str) -> tuple[CandidateTranslation, ...]:
        return self._by_term[term]

    def covered_terms(self) -> frozenset[str]:
        return frozenset(term for term, cands in self._by_term.items() if cands)

    def __len__(self) -> int:
        return len(self._results)

    def __iter__(self):
        return iter((r.term, r.candidates) for r in self._results)

    def to_tsv(self) -> str:
        """Render the lexicon as TSV, metadata in leading comment lines.

        Every attempted term appears; terms without candidates get a row
        with an empty candidate column so coverage stays computable from
        the file alone.  The rendering contains nothing run-dependent, so
        identical inputs produce byte-identical files.
        """
        lines = [f"# {key}={self.metadata[key]}" for key in sorted(self.metadata)]
        for term, candidates in self:
            if not candidates:
                lines.append(f"{term}\t\t0\tfalse")
            for candidate in candidates:
                fertile = "true" if candidate.fertile else "false"
                lines.append(f"{term}\t{candidate.render()}\t{candidate.count}\t{fertile}")
        return "\n".join(lines) + "\n"

    def write_tsv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(self.to_tsv())


def extract_term(
    term: str,
    source_inventory: ComponentInventory,
    target_inventory: ComponentInventory,
    translation: TranslationTable,
    source_variants: VariantTable,
    target_variants: VariantTable,
    stopwords: StopwordList,
    corpus: TaggedCorpus,
    config: PipelineConfig,
    fertile: bool = True,
    prefix_only: bool = False,
    sequence_limit: int = 10000,
) -> TermResult:
    """Run the four pipeline stages for one source term."""
    if prefix_only:
        # Restricted comparison mode: translate the prefix and the base
        # separately; no regrouping, no reordering, no fertile output.
        decompositions = {
            Decomposition(tuple(c.form for c in split), tuple((c,) for c in split))
            for split in prefix_base_splits(term, source_inventory, config)
        }
        fertile = False
    else:
        decompositions = decompose(term, source_inventory, config)
    if not decompositions:
        return TermResult(term, ())

    translated = set()
    for decomposition in decompositions:
        translated |= translate_decomposition(
            decomposition, translation, source_variants, target_variants
        )
    if not translated:
        return TermResult(term, (), decomposed=True)

    seqs: set[LexicalSeq] = set()
    for seq in translated:
        seqs |= permute_and_concatenate(seq, permute=not prefix_only)
    seqs = filter_bound_only(seqs, target_inventory)
    truncated = False
    if len(seqs) > sequence_limit:
        seqs = set(sorted(seqs, key=lambda s: s.items)[:sequence_limit])
        truncated = True
    if not seqs:
        return TermResult(term, (), decomposed=True, translated=True, truncated=truncated)

    candidates = collect_candidates(
        seqs, corpus, stopwords, config, source_word_count=len(term.split())
    )
    if not fertile:
        candidates = {c for c in candidates if not c.fertile}
    return TermResult(
        term,
        tuple(sort_candidates(candidates)),
        decomposed=True,
        translated=True,
        recomposed=True,
        truncated=truncated,
    )


def _safe_extract_term(term: str, **kwargs) -> TermResult:
    try:
        return extract_term(term, **kwargs)
    except Exception as exc:  # per-term isolation: record, never abort the run
        return TermResult(term, (), error=f"{type(exc).__name__}: {exc}")


class LexiconExtractor(BaseEstimator):
    """Translate morphologically constructed terms via their components.

    Parameters
    ----------
    source_inventory, target_inventory : ComponentInventory
        Typed component lists for the source and target languages.
    translation : TranslationTable or iterable of TranslationTable
        Component translation resources; multiple tables are merged.
    source_variants, target_variants : VariantTable or iterable, optional
        Monolingual related-word tables applied at depth one around the
        translation lookup.
    stopwords : StopwordList, optional
        Target-language stopwords that may fill gaps in matched windows.
    min_base_length, max_gap, max_components : int
        Pipeline bounds; see PipelineConfig.
    sequence_limit : int
        Per-term cap on candidate lexical sequences before corpus
        attestation; excess sequences are dropped deterministically.
    fertile : bool
        When false, candidates with more content words than the source
        term are suppressed.
    prefix_only : bool
        Restricted comparison mode: only prefix+word segmentations, no
        reordering, no fertile output.
    n_jobs : int
        Worker count for ``extract``/``predict``; output is identical for
        any value.
    """

    def __init__(
        self,
        source_inventory=None,
        target_inventory=None,
        translation=None,
        source_variants=None,
        target_variants=None,
        stopwords=None,
        min_base_length=5,
        max_gap=3,
        max_components=4,
        sequence_limit=10000,
        fertile=True,
        prefix_only=False,
        n_jobs=1,
    ):
        self.source_inventory = source_inventory
        self.target_inventory = target_inventory
        self.translation = translation
        self.source_variants = source_variants
        self.target_variants = target_variants
        self.stopwords = stopwords
        self.min_base_length = min_base_length
        self.max_gap = max_gap
        self.max_components = max_components
        self.sequence_limit = sequence_limit
        self.fertile = fertile
        self.prefix_only = prefix_only
        self.n_jobs = n_jobs

    def fit(self, corpus: TaggedCorpus, y=None) -> "LexiconExtractor":
        """Bind and validate resources against the target corpus."""
        require_instance(self.source_inventory, ComponentInventory, "source_inventory")
        require_instance(self.target_inventory, ComponentInventory, "target_inventory")
        require_instance(corpus, TaggedCorpus, "corpus")
        target_language = self.target_inventory.language
        self.config_ = PipelineConfig(
            min_base_length=self.min_base_length,
            max_gap=self.max_gap,
            max_components=self.max_components,
        )
        self.translation_ = merge_translation_tables(self.translation)
        self.source_variants_ = merge_variant_tables(
            self.source_variants, self.source_inventory.language
        )
        self.target_variants_ = merge_variant_tables(self.target_variants, target_language)
        if self.stopwords is None:
            self.stopwords_ = StopwordList(target_language)
        else:
            self.stopwords_ = require_instance(self.stopwords, StopwordList, "stopwords")
        self.corpus_ = corpus
        warn_on_language_mismatch(
            self.source_inventory,
            self.target_inventory,
            self.source_variants_,
            self.target_variants_,
            self.stopwords_,
            corpus,
        )
        return self

    def _term_kwargs(self) -> dict:
        return dict(
            source_inventory=self.source_inventory,
            target_inventory=self.target_inventory,
            translation=self.translation_,
            source_variants=self.source_variants_,
            target_variants=self.target_variants_,
            stopwords=self.stopwords_,
            corpus=self.corpus_,
            config=self.config_,
            fertile=self.fertile,
            prefix_only=self.prefix_only,
            sequence_limit=self.sequence_limit,
        )

    def translate_term(self, term: str) -> list[CandidateTranslation]:
        """Candidate translations for one term, best-attested first."""
        check_is_fitted(self, "corpus_")
        return list(extract_term(check_term(term), **self._term_kwargs()).candidates)

    def predict(self, terms: Iterable[str]) -> list[list[CandidateTranslation]]:
        """Per-term candidate lists, aligned with the (deduplicated) input."""
        lexicon = self.extract(terms)
        return [list(candidates) for _, candidates in lexicon]

    def extract(self, terms: Iterable[str]) -> Lexicon:
        """Run the pipeline over a term list and aggregate a lexicon."""
        check_is_fitted(self, "corpus_")
        cleaned = check_terms(terms)
        kwargs = self._term_kwargs()
        results = Parallel(n_jobs=self.n_jobs)(
            delayed(_safe_extract_term)(term, **kwargs) for term in cleaned
        )
        return Lexicon(results, metadata=self._metadata())

    def _metadata(self) -> dict[str, str]:
        # Deliberately excludes anything run-dependent (worker count,
        # timestamps): reruns over identical inputs must serialize
        # byte-identically.
        return {
            "min_base_length": str(self.min_base_length),
            "max_gap": str(self.max_gap),
            "max_components": str(self.max_components),
            "sequence_limit": str(self.sequence_limit),
            "fertile": "true" if self.fertile else "false",
            "prefix_only": "true" if self.prefix_only else "false",
            "source_language": self.source_inventory.language,
            "target_language": self.target_inventory.language,
            "corpus_tokens": str(len(self.corpus_)),
            "translation_entries": str(len(self.translation_)),
        }
