"""Translate decomposed components through translation and variant tables.

Each component group is translated as the union of three routes: a direct
table lookup, lookups of the component's source-language variants, and
target-language variants of the direct translations.  Variants are applied
at depth one only; chaining variant tables drifts too far semantically.

A decomposition translates to the full cross-product of its per-group
translation sets, and fails entirely when any single group has none.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .decomposition import Decomposition
from .resources import TranslationTable, VariantTable


class Provenance(enum.Enum):
    """Which route produced a translated item."""

    DIRECT = "direct"
    SOURCE_VARIANT = "source-variant"
    TARGET_VARIANT = "target-variant"


@dataclass(frozen=True)
class TranslatedItem:
    """A target-language form with its boundness and originating route.

    Provenance is informational: items are deduplicated by (form, bound),
    keeping the first route encountered in the order direct, source
    variant, target variant.
    """

    form: str
    bound: bool
    provenance: Provenance = field(compare=False, default=Provenance.DIRECT)

    def __post_init__(self):
        if not self.form:
            raise ValueError("translated form must be non-empty")


TranslatedSeq = tuple[TranslatedItem, ...]


def translate_component(
    component: str,
    table: TranslationTable,
    source_variants: VariantTable,
    target_variants: VariantTable,
) -> set[TranslatedItem]:
    """All translations of one component string; empty when untranslatable.

    Target-variant items are always free: variant tables hold corpus words
    and dictionary entries, which are autonomous lexical units.
    """
    out: dict[tuple[str, bool], TranslatedItem] = {}

    def add(form: str, bound: bool, provenance: Provenance) -> None:
        key = (form, bound)
        if key not in out:
            out[key] = TranslatedItem(form, bound, provenance)

    direct = sorted(table.lookup(component))
    for form, bound in direct:
        add(form, bound, Provenance.DIRECT)
    for variant in sorted(source_variants.lookup(component)):
        for form, bound in sorted(table.lookup(variant)):
            add(form, bound, Provenance.SOURCE_VARIANT)
    for form, _ in direct:
        for variant in sorted(target_variants.lookup(form)):
            add(variant, False, Provenance.TARGET_VARIANT)
    return set(out.values())


def translate_decomposition(
    decomposition: Decomposition,
    table: TranslationTable,
    source_variants: VariantTable,
    target_variants: VariantTable,
) -> set[TranslatedSeq]:
    """Cross-product of per-group translations, or the empty set.

    If any group has no translation the whole decomposition fails; the
    grouping enumeration upstream supplies coarser decompositions that may
    still succeed.
    """
    per_group: list[list[TranslatedItem]] = []
    for group in decomposition.groups:
        items = translate_component(group, table, source_variants, target_variants)
        if not items:
            return set()
        per_group.append(sorted(items, key=lambda item: (item.form, item.bound)))
    return {tuple(combo) for combo in itertools.product(*per_group)}
