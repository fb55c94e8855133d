"""Quality metrics for extracted lexicons.

Candidate translations are judged against two standards: gold counts only
canonical translations as correct, silver additionally counts recoverable
ones (paraphrastic or morphological variants).  Precision pools candidates
across all source terms; coverage is the fraction of source terms that
received at least one candidate regardless of accuracy; overall quality is
their product, exposing the coverage/precision tradeoff.  Inter-annotator
agreement uses Cohen's kappa over the three label values, and corpus
comparability estimates the expectation of finding, for each dictionary
word of one corpus, an attested translation in the other.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ResourceFormatError
from .resources import TaggedCorpus, TranslationTable

logger = logging.getLogger("morphlex")


class AnnotationLabel(enum.Enum):
    """Annotation values: canonical, recoverable, or wrong."""

    GOLD = "gold"
    SILVER = "silver"
    INCORRECT = "incorrect"


@dataclass(frozen=True)
class AnnotatedRow:
    """One labeled candidate: source term, rendered candidate, judgment."""

    term: str
    candidate: str
    label: AnnotationLabel


class AnnotatedLexicon:
    """Labeled extraction output plus the full attempted source-term set."""

    def __init__(self, rows: Iterable[AnnotatedRow], source_terms: Iterable[str]):
        self.rows: tuple[AnnotatedRow, ...] = tuple(rows)
        self.source_terms: frozenset[str] = frozenset(source_terms)
        seen: set[tuple[str, str]] = set()
        for row in self.rows:
            key = (row.term, row.candidate)
            if key in seen:
                raise ValueError(f"duplicate (term, candidate) pair: {key}")
            seen.add(key)
            if row.term not in self.source_terms:
                raise ValueError(f"annotated term {row.term!r} not in the source-term set")

    @classmethod
    def from_tsv(cls, path: str | Path) -> "AnnotatedLexicon":
        """Parse a lexicon TSV whose candidate rows carry a label column.

        Rows with an empty candidate column record a source term that got
        no candidates (they need no label); rows with a candidate must be
        labeled gold, silver or incorrect, or parsing fails outright.
        """
        path = Path(path)
        rows: list[AnnotatedRow] = []
        terms: set[str] = set()
        with open(path, encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, start=1):
                line = line.rstrip("\n").rstrip("\r")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                columns = line.split("\t")
                if len(columns) < 4:
                    raise ResourceFormatError(
                        path, line_no, f"expected at least 4 columns, got {len(columns)}"
                    )
                term = columns[0].strip()
                candidate = columns[1].strip()
                if not term:
                    raise ResourceFormatError(path, line_no, "empty source term")
                terms.add(term)
                if not candidate:
                    continue
                if len(columns) < 5 or not columns[4].strip():
                    raise ResourceFormatError(
                        path, line_no, f"candidate row for {term!r} has no annotation label"
                    )
                tag = columns[4].strip().lower()
                try:
                    label = AnnotationLabel(tag)
                except ValueError:
                    raise ResourceFormatError(
                        path, line_no, f"unknown annotation label {tag!r}"
                    ) from None
                rows.append(AnnotatedRow(term, candidate, label))
        return cls(rows, terms)


@dataclass(frozen=True)
class EvalReport:
    """Coverage, precision and overall quality under both standards."""

    coverage: float
    precision_gold: float
    precision_silver: float
    quality_gold: float
    quality_silver: float
    n_source_terms: int
    n_candidates: int
    n_correct_gold: int
    n_correct_silver: int
    no_candidates: bool

    def as_pairs(self) -> list[tuple[str, str]]:
        return [
            ("source_terms", str(self.n_source_terms)),
            ("candidates", str(self.n_candidates)),
            ("correct_gold", str(self.n_correct_gold)),
            ("correct_silver", str(self.n_correct_silver)),
            ("coverage", f"{self.coverage:.6f}"),
            ("precision_gold", f"{self.precision_gold:.6f}"),
            ("precision_silver", f"{self.precision_silver:.6f}"),
            ("quality_gold", f"{self.quality_gold:.6f}"),
            ("quality_silver", f"{self.quality_silver:.6f}"),
            ("no_candidates", "true" if self.no_candidates else "false"),
        ]


def evaluate(lexicon: AnnotatedLexicon) -> EvalReport:
    """Compute coverage, precision and overall quality for a labeled run."""
    n_terms = len(lexicon.source_terms)
    if n_terms < 1:
        raise ValueError("an annotated lexicon needs at least one source term")
    covered = len({row.term for row in lexicon.rows})
    coverage = covered / n_terms
    n_candidates = len(lexicon.rows)
    gold = sum(1 for row in lexicon.rows if row.label is AnnotationLabel.GOLD)
    silver = gold + sum(1 for row in lexicon.rows if row.label is AnnotationLabel.SILVER)
    if n_candidates == 0:
        return EvalReport(coverage, 0.0, 0.0, 0.0, 0.0, n_terms, 0, 0, 0, True)
    p_gold = gold / n_candidates
    p_silver = silver / n_candidates
    return EvalReport(
        coverage=coverage,
        precision_gold=p_gold,
        precision_silver=p_silver,
        quality_gold=p_gold * coverage,
        quality_silver=p_silver * coverage,
        n_source_terms=n_terms,
        n_candidates=n_candidates,
        n_correct_gold=gold,
        n_correct_silver=silver,
        no_candidates=False,
    )


def cohen_kappa(labels1: Sequence, labels2: Sequence) -> float:
    """Chance-corrected agreement between two annotators.

    kappa = (P_o - P_e) / (1 - P_e), where P_o is the observed agreement
    rate and P_e the expected rate under the per-annotator label marginals.
    """
    if len(labels1) != len(labels2):
        raise ValueError("annotation sequences differ in length")
    n = len(labels1)
    if n < 1:
        raise ValueError("annotation sequences must be non-empty")
    observed = sum(1 for a, b in zip(labels1, labels2) if a == b) / n
    counts1 = Counter(labels1)
    counts2 = Counter(labels2)
    expected = sum(counts1[label] * counts2[label] for label in counts1) / (n * n)
    if expected == 1.0:
        if observed == 1.0:
            return 1.0
        raise ValueError("degenerate marginals: chance agreement is 1")
    return (observed - expected) / (1.0 - expected)


def translation_coverage(
    vocab_a: frozenset[str], vocab_b: frozenset[str], mapping: dict[str, frozenset[str]]
) -> float:
    """Fraction of dictionary words of A with a translation attested in B."""
    keys = vocab_a & set(mapping)
    if not keys:
        logger.warning("no dictionary word occurs in the corpus; direction scored 0")
        return 0.0
    attested = sum(1 for word in keys if mapping[word] & vocab_b)
    return attested / len(keys)


def comparability(
    source_corpus: TaggedCorpus,
    target_corpus: TaggedCorpus,
    dictionary: TranslationTable,
) -> float:
    """Expectation of finding corpus words' translations in the other corpus.

    The dictionary is read in both directions (the reverse direction by
    inverting its entries); the two directional coverages are averaged.
    """
    forward = {source: frozenset(t.form for t in targets) for source, targets in dictionary.items()}
    backward = dictionary.inverted()
    src_vocab = source_corpus.vocabulary()
    tgt_vocab = target_corpus.vocabulary()
    f_st = translation_coverage(src_vocab, tgt_vocab, forward)
    f_ts = translation_coverage(tgt_vocab, src_vocab, backward)
    return (f_st + f_ts) / 2.0
