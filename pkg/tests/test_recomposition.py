import pytest

import oracles
from morphlex import (
    ComponentInventory,
    ComponentKind,
    LexicalSeq,
    TranslatedItem,
    filter_bound_only,
    permute_and_concatenate,
)


def items_of(seqs):
    return {seq.items for seq in seqs}


def ts(*forms):
    return tuple(TranslatedItem(form, False) for form in forms)


def test_permute_and_concatenate_two_items():
    out = permute_and_concatenate(ts("cyto", "toxique"))
    assert items_of(out) == {
        ("cyto", "toxique"),
        ("cytotoxique",),
        ("toxique", "cyto"),
        ("toxiquecyto",),
    }


def test_permute_and_concatenate_single_item():
    out = permute_and_concatenate(ts("cytotoxicité"))
    assert items_of(out) == {("cytotoxicité",)}


def test_permute_and_concatenate_three_items_count():
    # 3! permutations x 2^2 concatenation patterns = 24 before dedup.
    raw = oracles.permutation_concatenations(("a", "b", "c"))
    assert len(raw) == 24
    out = permute_and_concatenate(ts("a", "b", "c"))
    assert items_of(out) == set(raw)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_permute_and_concatenate_matches_oracle(n):
    forms = tuple(f"w{i}" for i in range(n))
    out = permute_and_concatenate(ts(*forms))
    raw = oracles.permutation_concatenations(forms)
    assert items_of(out) == set(raw)
    # All items distinct: every (permutation, pattern) pair is unique.
    assert len(out) == len(set(raw)) == len(raw)
    import math

    assert len(raw) == math.factorial(n) * 2 ** (n - 1)


def test_permute_and_concatenate_duplicate_forms_dedup():
    out = permute_and_concatenate(ts("x", "x"))
    assert items_of(out) == {("x", "x"), ("xx",)}


def test_fused_flag_records_concatenation():
    out = permute_and_concatenate(ts("a", "b"))
    by_items = {seq.items: seq.fused for seq in out}
    assert by_items[("ab",)] == (True,)
    assert by_items[("a", "b")] == (False, False)


def test_no_permutation_mode():
    out = permute_and_concatenate(ts("a", "b"), permute=False)
    assert items_of(out) == {("a", "b"), ("ab",)}


def test_filter_drops_standalone_bound_only_items():
    inventory = ComponentInventory(
        "fr",
        [
            ("cyto", ComponentKind.CONFIX),
            ("cellule", ComponentKind.FREE),
            ("toxique", ComponentKind.FREE),
        ],
    )
    generated = set()
    for seq in (ts("cyto", "toxique"), ts("cellule", "toxique"), ts("cytotoxicité",)):
        generated |= permute_and_concatenate(seq)
    kept = filter_bound_only(generated, inventory)
    assert items_of(kept) == {
        ("cytotoxique",),
        ("toxiquecyto",),
        ("cellule", "toxique"),
        ("celluletoxique",),
        ("toxique", "cellule"),
        ("toxiquecellule",),
        ("cytotoxicité",),
    }
    removed = items_of(generated) - items_of(kept)
    assert removed == {("cyto", "toxique"), ("toxique", "cyto")}


def test_filter_keeps_all_free_sequences():
    inventory = ComponentInventory("fr", [("cellule", ComponentKind.FREE)])
    seqs = {LexicalSeq(("cellule", "toxique"))}
    assert filter_bound_only(seqs, inventory) == seqs


def test_filter_keeps_dual_kind_items():
    # "post" is both a prefix and a free word: not bound-only, so kept.
    inventory = ComponentInventory(
        "fr", [("post", ComponentKind.PREFIX), ("post", ComponentKind.FREE)]
    )
    seqs = {LexicalSeq(("post",))}
    assert filter_bound_only(seqs, inventory) == seqs
    bound_inventory = ComponentInventory("fr", [("post", ComponentKind.PREFIX)])
    assert filter_bound_only(seqs, bound_inventory) == set()


def test_filter_output_is_subset():
    inventory = ComponentInventory("fr", [("a", ComponentKind.CONFIX)])
    seqs = permute_and_concatenate(ts("a", "b", "c"))
    kept = filter_bound_only(seqs, inventory)
    assert kept <= seqs
    assert all("a" not in seq.items for seq in kept)


def test_lexical_seq_equality_ignores_fused():
    assert LexicalSeq(("ab",), (True,)) == LexicalSeq(("ab",), (False,))
    assert len({LexicalSeq(("ab",), (True,)), LexicalSeq(("ab",), (False,))}) == 1


def test_lexical_seq_rejects_empty_items():
    with pytest.raises(ValueError):
        LexicalSeq(())
    with pytest.raises(ValueError):
        LexicalSeq(("a", ""))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_count_law_upper_bound_with_duplicates(n):
    import math

    forms = tuple("x" for _ in range(n))
    out = permute_and_concatenate(ts(*forms))
    assert len(out) <= math.factorial(n) * 2 ** (n - 1)
    assert items_of(out) == set(oracles.permutation_concatenations(forms))
