"""Split a single-word term into morpheme components and group them.

Decomposition happens in two passes.  The first pass segments the term into
minimal components drawn from the source-language inventory, following the
grammar ``[prefix?] (confix | free)+ [suffix?]``; only the segmentations
with the highest component count are kept.  The second pass enumerates every
way of concatenating adjacent minimal components back into larger units,
which lets translation succeed on a bigger unit when a smaller one has no
dictionary entry: there are exactly 2^(n-1) groupings of n components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .resources import Component, ComponentInventory, ComponentKind, PipelineConfig

MinimalSplit = tuple[Component, ...]


@dataclass(frozen=True)
class Decomposition:
    """An ordered grouping of a minimal segmentation into component strings.

    Equality and hashing consider only the group strings: two segmentations
    that concatenate to the same sequence are the same decomposition.
    """

    groups: tuple[str, ...]
    elements: tuple[tuple[Component, ...], ...] = field(compare=False, default=())

    def __post_init__(self):
        if not self.groups or any(not g for g in self.groups):
            raise ValueError("decomposition groups must be non-empty strings")

    @property
    def term(self) -> str:
        return "".join(self.groups)

    def render(self) -> str:
        """Join groups with the conventional morpheme-boundary marker."""
        return "+".join(self.groups)


def _normalize_term(term: str) -> tuple[str, frozenset[int]]:
    """Lowercase the term and turn hyphens into forced split positions.

    Returns the hyphen-free string together with the set of offsets at
    which a component boundary must fall (a component never straddles a
    hyphen; the hyphen itself is consumed).
    """
    chunks = [c for c in term.strip().lower().split("-") if c]
    text = "".join(chunks)
    boundaries = set()
    offset = 0
    for chunk in chunks[:-1]:
        offset += len(chunk)
        boundaries.add(offset)
    return text, frozenset(boundaries)


def minimal_splits(
    term: str, inventory: ComponentInventory, config: PipelineConfig | None = None
) -> set[MinimalSplit]:
    """Segment a term into minimal components from the inventory.

    Every returned split satisfies the component grammar, respects the
    prefix length constraint (the base left after stripping a prefix must
    be strictly longer than ``config.min_base_length``), and has the
    maximal number of components among all valid splits; splits exceeding
    ``config.max_components`` are discarded before the maximality filter.
    An empty set means the term cannot be segmented with this inventory.
    """
    if not term or not term.strip():
        raise ValueError("term must be non-empty")
    config = config or PipelineConfig()
    text, forced = _normalize_term(term)
    if not text:
        return set()
    n = len(text)
    language = inventory.language
    max_len = inventory.max_form_length()

    def spans_from(start: int) -> Iterable[tuple[int, str]]:
        # Candidate component spans starting at `start` that do not
        # straddle a forced (hyphen) boundary.
        for end in range(start + 1, min(start + max_len, n) + 1):
            if any(start < b < end for b in forced):
                break
            yield end, text[start:end]

    results: list[MinimalSplit] = []

    def walk(start: int, parts: tuple[Component, ...]) -> None:
        if len(parts) > config.max_components:
            return
        if start == n:
            if any(c.kind in (ComponentKind.CONFIX, ComponentKind.FREE) for c in parts):
                results.append(parts)
            return
        core_seen = any(
            c.kind in (ComponentKind.CONFIX, ComponentKind.FREE) for c in parts
        )
        for end, piece in spans_from(start):
            for kind in (ComponentKind.CONFIX, ComponentKind.FREE):
                if inventory.has(piece, kind):
                    walk(end, parts + (Component(piece, kind, language),))
            if (
                core_seen
                and end == n
                and len(parts) < config.max_components
                and inventory.has(piece, ComponentKind.SUFFIX)
            ):
                results.append(parts + (Component(piece, ComponentKind.SUFFIX, language),))

    for end, piece in spans_from(0):
        if inventory.has(piece, ComponentKind.PREFIX) and n - end > config.min_base_length:
            walk(end, (Component(piece, ComponentKind.PREFIX, language),))
    walk(0, ())

    if not results:
        return set()
    best = max(len(split) for split in results)
    return {split for split in results if len(split) == best}


def prefix_base_splits(
    term: str, inventory: ComponentInventory, config: PipelineConfig | None = None
) -> set[MinimalSplit]:
    """Restricted segmentation: exactly one prefix plus one free base.

    Used by the prefix-translation comparison mode; the maximality filter
    does not apply since every split here has two components.
    """
    if not term or not term.strip():
        raise ValueError("term must be non-empty")
    config = config or PipelineConfig()
    text, forced = _normalize_term(term)
    n = len(text)
    out: set[MinimalSplit] = set()
    for end in range(1, n):
        if any(0 < b < end or end < b < n for b in forced):
            continue
        prefix, base = text[:end], text[end:]
        if (
            inventory.has(prefix, ComponentKind.PREFIX)
            and inventory.has(base, ComponentKind.FREE)
            and n - end > config.min_base_length
        ):
            out.add(
                (
                    Component(prefix, ComponentKind.PREFIX, inventory.language),
                    Component(base, ComponentKind.FREE, inventory.language),
                )
            )
    return out


def enumerate_groupings(split: MinimalSplit) -> set[Decomposition]:
    """Enumerate every concatenation of adjacent components.

    Each of the n-1 interior boundaries is independently kept or merged,
    giving exactly 2^(n-1) decompositions.
    """
    if not split:
        raise ValueError("split must be non-empty")
    n = len(split)
    out: set[Decomposition] = set()
    for mask in range(1 << (n - 1)):
        groups: list[str] = []
        elements: list[tuple[Component, ...]] = []
        current = [split[0]]
        for i in range(1, n):
            if mask & (1 << (i - 1)):
                current.append(split[i])
            else:
                groups.append("".join(c.form for c in current))
                elements.append(tuple(current))
                current = [split[i]]
        groups.append("".join(c.form for c in current))
        elements.append(tuple(current))
        out.add(Decomposition(tuple(groups), tuple(elements)))
    return out


def _split_order(split: MinimalSplit) -> tuple:
    return tuple((c.form, c.kind.value) for c in split)


def decompose(
    term: str, inventory: ComponentInventory, config: PipelineConfig | None = None
) -> set[Decomposition]:
    """All decompositions of a term: groupings over every minimal split.

    Results are deduplicated by their group-string sequence; when splits
    differing only in component kinds produce the same groups, the one
    from the first split in canonical order is kept, so the retained
    element annotations never depend on set iteration order.
    """
    chosen: dict[tuple[str, ...], Decomposition] = {}
    for split in sorted(minimal_splits(term, inventory, config), key=_split_order):
        for decomposition in enumerate_groupings(split):
            chosen.setdefault(decomposition.groups, decomposition)
    return set(chosen.values())
