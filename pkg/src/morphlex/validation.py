"""Input validation helpers for the estimator and command-line surfaces."""

from __future__ import annotations

import logging
from typing import Iterable

from .resources import ComponentInventory, StopwordList, TaggedCorpus, TranslationTable, VariantTable

logger = logging.getLogger("morphlex")


def require_instance(value, cls, name: str):
    if not isinstance(value, cls):
        raise TypeError(f"{name} must be a {cls.__name__}, got {type(value).__name__}")
    return value


def merge_translation_tables(value) -> TranslationTable:
    """Accept one table, an iterable of tables, or None (empty table)."""
    if value is None:
        return TranslationTable({})
    if isinstance(value, TranslationTable):
        return value
    tables = list(value)
    for table in tables:
        require_instance(table, TranslationTable, "translation table")
    return TranslationTable.union(*tables)


def merge_variant_tables(value, language: str) -> VariantTable:
    """Accept one table, an iterable of tables, or None (empty table)."""
    if value is None:
        return VariantTable(language, {})
    if isinstance(value, VariantTable):
        return value
    tables = list(value)
    for table in tables:
        require_instance(table, VariantTable, "variant table")
    return VariantTable.union(language, *tables)


def check_term(term: str) -> str:
    """A source term is one non-empty orthographic word."""
    if not isinstance(term, str):
        raise TypeError(f"term must be a string, got {type(term).__name__}")
    term = term.strip()
    if not term:
        raise ValueError("term must be non-empty")
    if any(ch.isspace() for ch in term):
        raise ValueError(f"term {term!r} contains whitespace; expected a single-word term")
    return term


def check_terms(terms: Iterable[str]) -> list[str]:
    """Validate a term list, dropping duplicates but keeping input order."""
    seen: set[str] = set()
    out: list[str] = []
    for term in terms:
        term = check_term(term)
        if term not in seen:
            seen.add(term)
            out.append(term)
    return out


def warn_on_language_mismatch(
    source_inventory: ComponentInventory,
    target_inventory: ComponentInventory,
    source_variants: VariantTable,
    target_variants: VariantTable,
    stopwords: StopwordList,
    corpus: TaggedCorpus,
) -> None:
    """Flag resources whose declared languages disagree with their role."""
    if source_variants.keys() and source_variants.language != source_inventory.language:
        logger.warning(
            "source variant table is %s but the source inventory is %s",
            source_variants.language, source_inventory.language,
        )
    for name, language in (
        ("target variant table", target_variants.language if target_variants.keys() else None),
        ("stopword list", stopwords.language if len(stopwords) else None),
        ("corpus", corpus.language),
    ):
        if language is not None and language != target_inventory.language:
            logger.warning(
                "%s is %s but the target inventory is %s",
                name, language, target_inventory.language,
            )
