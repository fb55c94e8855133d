"""Recombine translated components into candidate lexical sequences.

The first pass permutes the translated items (component order commonly
changes between languages) and, for every permutation, enumerates all
concatenations of adjacent items into single lexical units, mirroring the
grouping enumeration used during decomposition: n items yield up to
n! * 2^(n-1) sequences before deduplication.

The second pass discards sequences containing an item whose entire string
is listed in the target inventory only under bound kinds: bound morphemes
must not stand alone as lexical items.  The check applies to the whole item
string, so a unit formed by gluing a bound morpheme onto another component
survives unless that fused string is itself bound-only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .resources import ComponentInventory
from .translation import TranslatedSeq


@dataclass(frozen=True)
class LexicalSeq:
    """A sequence of lexical-item strings to match against corpus lemmas.

    ``fused`` records, per item, whether it was formed by concatenating two
    or more translated components; equality and hashing use the item
    strings alone.
    """

    items: tuple[str, ...]
    fused: tuple[bool, ...] = field(compare=False, default=())

    def __post_init__(self):
        if not self.items or any(not item for item in self.items):
            raise ValueError("lexical sequence items must be non-empty")
        if not self.fused:
            object.__setattr__(self, "fused", (False,) * len(self.items))

    def __len__(self) -> int:
        return len(self.items)


def permute_and_concatenate(seq: TranslatedSeq, permute: bool = True) -> set[LexicalSeq]:
    """Generate candidate lexical sequences from one translated sequence.

    With ``permute`` disabled only the original item order is used (the
    restricted prefix-translation mode); concatenation patterns are still
    enumerated.
    """
    if not seq:
        raise ValueError("translated sequence must be non-empty")
    n = len(seq)
    orders = itertools.permutations(seq) if permute else [tuple(seq)]
    out: set[LexicalSeq] = set()
    for order in orders:
        for mask in range(1 << (n - 1)):
            items: list[str] = []
            fused: list[bool] = []
            size = 1
            current = order[0].form
            for i in range(1, n):
                if mask & (1 << (i - 1)):
                    current += order[i].form
                    size += 1
                else:
                    items.append(current)
                    fused.append(size > 1)
                    current = order[i].form
                    size = 1
            items.append(current)
            fused.append(size > 1)
            out.add(LexicalSeq(tuple(items), tuple(fused)))
    return out


def filter_bound_only(
    seqs: set[LexicalSeq], target_inventory: ComponentInventory
) -> set[LexicalSeq]:
    """Drop sequences containing a standalone bound-only item.

    An item is bound-only when the target inventory lists its full string
    exclusively under prefix, confix or suffix; strings absent from the
    inventory, or listed as free under any kind, pass.
    """
    return {
        seq
        for seq in seqs
        if not any(target_inventory.bound_only(item) for item in seq.items)
    }
