"""Resource-building tools: stemming, variant families, term harvesting.

These utilities produce the same TSV formats the extraction pipeline
consumes, so harvested term lists and stem-derived variant tables feed
straight back into a run.  Harvesting is deliberately mechanical: sorting
out which extracted words really are morphologically constructed is a human
step done on the emitted file.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .errors import ConfigurationError
from .porter import porter_stem
from .resources import TaggedCorpus, TranslationTable, VariantTable, normalize_form

# Conservative single-pass suffix stripping for languages where nothing
# better is configured; longest suffix wins, and the remaining stem must
# keep at least _MIN_STEM_LENGTH characters.
_MIN_STEM_LENGTH = 3

_SUFFIXES: dict[str, tuple[str, ...]] = {
    "fr": (
        "issements", "issement", "atrices", "atrice", "ations", "ateurs",
        "ation", "ateur", "ements", "ement", "euses", "iques", "ismes",
        "istes", "ables", "ibles", "euse", "ique", "isme", "iste", "able",
        "ible", "ance", "ence", "ités", "ives", "elles", "ienne", "eaux",
        "ité", "ive", "ifs", "elle", "ien", "if", "aux", "ales", "ale",
        "als", "al", "ées", "ée", "és", "é", "es", "e", "s",
    ),
    "de": (
        "erinnen", "ungen", "heiten", "keiten", "lichen", "ischen", "erin",
        "ung", "heit", "keit", "liche", "ische", "lich", "isch", "chen",
        "ern", "eln", "en", "er", "el", "e", "n", "s",
    ),
}


def stem(word: str, language: str) -> str:
    """Deterministic stem of a word in the given language.

    English uses the full suffix-stripping algorithm; French and German use
    conservative suffix tables.  Anything else is a configuration error.
    """
    if not word:
        raise ValueError("word must be non-empty")
    word = word.lower()
    if language == "en":
        return porter_stem(word)
    suffixes = _SUFFIXES.get(language)
    if suffixes is None:
        raise ConfigurationError(f"no stemmer configured for language {language!r}")
    for suffix in sorted(suffixes, key=len, reverse=True):
        if word.endswith(suffix) and len(word) - len(suffix) >= _MIN_STEM_LENGTH:
            return word[: len(word) - len(suffix)]
    return word


@dataclass(frozen=True)
class StemFamily:
    """Words sharing a stem; only families of two or more words are kept."""

    stem: str
    members: frozenset[str]


def stem_families(words: Iterable[str], language: str) -> list[StemFamily]:
    """Group case-folded words by stem, keeping families of size >= 2."""
    groups: dict[str, set[str]] = defaultdict(set)
    for word in words:
        word = word.strip().lower()
        if word:
            groups[stem(word, language)].add(word)
    return [
        StemFamily(key, frozenset(members))
        for key, members in sorted(groups.items())
        if len(members) >= 2
    ]


def build_families(wordlists: Iterable[Iterable[str]], language: str) -> VariantTable:
    """Build a variant table from morphological families.

    Every family becomes a full directional clique: each member maps to
    every other member.  Variant lookups downstream are depth one, so the
    family size directly bounds the variant fan-out.
    """
    pooled: set[str] = set()
    for words in wordlists:
        pooled.update(w.strip().lower() for w in words if w.strip())
    entries: dict[str, set[str]] = {}
    for family in stem_families(pooled, language):
        for member in family.members:
            entries.setdefault(member, set()).update(family.members - {member})
    return VariantTable(language, entries)


def harvest_terms(corpus: TaggedCorpus, seeds: Iterable[str]) -> list[str]:
    """Mechanically extract candidate morphologically constructed terms.

    Returns every corpus word (surface form, case-folded) containing a seed
    morpheme as a substring, plus every hyphenated word; sorted and
    deduplicated.  No morphological validation is attempted here.
    """
    cleaned = {normalize_form(seed) for seed in seeds}
    cleaned.discard("")
    if not cleaned:
        raise ValueError("at least one seed morpheme is required")
    found: set[str] = set()
    for token in corpus.tokens:
        surface = token.surface.lower()
        if not any(ch.isalpha() for ch in surface):
            continue
        if "-" in surface or any(seed in surface for seed in cleaned):
            found.add(surface)
    return sorted(found)


def filter_test_set(
    terms: Iterable[str],
    general_dictionary: TranslationTable,
    target_corpus: TaggedCorpus,
) -> set[str]:
    """Drop terms that a plain dictionary lookup would already translate.

    A term is removed only when the dictionary has at least one translation
    for it AND at least one of those translations occurs as a lemma in the
    target corpus; failing either condition keeps the term.
    """
    vocabulary = target_corpus.vocabulary()
    kept: set[str] = set()
    for term in terms:
        translations = general_dictionary.lookup(normalize_form(term))
        if translations and any(t.form in vocabulary for t in translations):
            continue
        kept.add(term)
    return kept
