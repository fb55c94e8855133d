"""Validate candidate sequences against the target corpus.

A lexical sequence matches the corpus at a strictly increasing sequence of
token positions whose lemmas equal the items in order, where consecutive
matched positions differ by at most the configured gap, every unmatched
token inside the window is a stopword, and the window stays inside one
sentence.  Matched token windows are then grouped into candidate
translations: two windows with the same (lemma, pos) pair sequence count as
the same candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .recomposition import LexicalSeq
from .resources import PipelineConfig, StopwordList, TaggedCorpus

LemmaPos = tuple[str, str]


@dataclass(frozen=True)
class MatchSpan:
    """One attested window: matched positions plus the full window readout."""

    matched: tuple[int, ...]
    start: int
    end: int
    pairs: tuple[LemmaPos, ...]


@dataclass(frozen=True)
class CandidateTranslation:
    """An equivalence class of matched windows keyed by (lemma, pos) pairs."""

    pairs: tuple[LemmaPos, ...]
    count: int
    spans: tuple[MatchSpan, ...]
    sources: tuple[tuple[str, ...], ...]
    fertile: bool

    def render(self) -> str:
        return " ".join(f"{lemma}/{pos}" for lemma, pos in self.pairs)


def match_sequence(
    seq: LexicalSeq,
    corpus: TaggedCorpus,
    stopwords: StopwordList,
    config: PipelineConfig | None = None,
) -> set[MatchSpan]:
    """All corpus windows matching the sequence; empty means unattested."""
    config = config or PipelineConfig()
    items = [item.lower() for item in seq.items]
    spans: set[MatchSpan] = set()

    def extend(positions: list[int]) -> None:
        depth = len(positions)
        if depth == len(items):
            start, end = positions[0], positions[-1]
            spans.add(
                MatchSpan(
                    matched=tuple(positions),
                    start=start,
                    end=end,
                    pairs=tuple(
                        (corpus[k].lemma, corpus[k].pos) for k in range(start, end + 1)
                    ),
                )
            )
            return
        last = positions[-1]
        sentence = corpus.sentence_of(last)
        for nxt in range(last + 1, min(last + config.max_gap, len(corpus) - 1) + 1):
            if corpus.sentence_of(nxt) != sentence:
                break
            if corpus[nxt].lemma == items[depth]:
                extend(positions + [nxt])
            if corpus[nxt].lemma not in stopwords:
                # Tokens between matched positions must all be stopwords, so
                # a non-stopword token that is not the next item blocks any
                # longer gap through it.
                break

    for position in corpus.positions(items[0]):
        extend([position])
    return spans


def _window_word_count(pairs: tuple[LemmaPos, ...], stopwords: StopwordList) -> int:
    return sum(1 for lemma, _ in pairs if lemma not in stopwords)


def collect_candidates(
    seqs: set[LexicalSeq],
    corpus: TaggedCorpus,
    stopwords: StopwordList,
    config: PipelineConfig | None = None,
    source_word_count: int = 1,
) -> set[CandidateTranslation]:
    """Match every sequence and group the spans into candidates.

    The occurrence count of a candidate is the number of distinct matched
    spans across all originating sequences.  A candidate is fertile when
    its window contains more non-stopword items than the source term has
    lexical words.
    """
    grouped: dict[tuple[LemmaPos, ...], set[MatchSpan]] = {}
    origins: dict[tuple[LemmaPos, ...], set[tuple[str, ...]]] = {}
    for seq in seqs:
        for span in match_sequence(seq, corpus, stopwords, config):
            grouped.setdefault(span.pairs, set()).add(span)
            origins.setdefault(span.pairs, set()).add(seq.items)
    out: set[CandidateTranslation] = set()
    for pairs, spans in grouped.items():
        ordered = tuple(sorted(spans, key=lambda s: (s.start, s.matched)))
        out.add(
            CandidateTranslation(
                pairs=pairs,
                count=len(spans),
                spans=ordered,
                sources=tuple(sorted(origins[pairs])),
                fertile=_window_word_count(pairs, stopwords) > source_word_count,
            )
        )
    return out


def sort_candidates(candidates: set[CandidateTranslation]) -> list[CandidateTranslation]:
    """Deterministic output order: occurrence count descending, then pairs."""
    return sorted(candidates, key=lambda c: (-c.count, c.pairs))
