"""English suffix-stripping stemmer (Porter's algorithm, 1980 rules).

Words are treated as alternating consonant/vowel sequences of the form
[C](VC)^m[V]; the measure m gates most rules.  Within a step, the longest
matching suffix selects the rule, and the rule fires only if its condition
holds on the remaining stem; either way the step is finished.  No rule is
attempted on words of one or two letters, which cannot carry a suffix.
"""

from __future__ import annotations

from typing import Callable

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-to-consonant transitions: m in [C](VC)^m[V]."""
    m = 0
    prev_vowel = False
    for i in range(len(stem)):
        vowel = not _is_consonant(stem, i)
        if prev_vowel and not vowel:
            m += 1
        prev_vowel = vowel
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return len(word) >= 2 and word[-1] == word[-2] and _is_consonant(word, len(word) - 1)


def _ends_cvc(word: str) -> bool:
    # Final consonant-vowel-consonant where the last consonant is not w, x
    # or y; used to restore a trailing e on short stems (hop -> hope).
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


Rule = tuple[str, str, Callable[[str], bool] | None]


def _apply_step(word: str, rules: list[Rule]) -> str:
    """Fire the longest-matching rule whose condition holds on the stem."""
    best: Rule | None = None
    for rule in rules:
        suffix = rule[0]
        if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
            best = rule
    if best is None:
        return word
    suffix, replacement, condition = best
    stem = word[: len(word) - len(suffix)]
    if condition is not None and not condition(stem):
        return word
    return stem + replacement


def _positive_measure(stem: str) -> bool:
    return _measure(stem) > 0


def _measure_over_one(stem: str) -> bool:
    return _measure(stem) > 1


_STEP2: list[Rule] = [
    ("ational", "ate", _positive_measure),
    ("tional", "tion", _positive_measure),
    ("enci", "ence", _positive_measure),
    ("anci", "ance", _positive_measure),
    ("izer", "ize", _positive_measure),
    ("abli", "able", _positive_measure),
    ("alli", "al", _positive_measure),
    ("entli", "ent", _positive_measure),
    ("eli", "e", _positive_measure),
    ("ousli", "ous", _positive_measure),
    ("ization", "ize", _positive_measure),
    ("ation", "ate", _positive_measure),
    ("ator", "ate", _positive_measure),
    ("alism", "al", _positive_measure),
    ("iveness", "ive", _positive_measure),
    ("fulness", "ful", _positive_measure),
    ("ousness", "ous", _positive_measure),
    ("aliti", "al", _positive_measure),
    ("iviti", "ive", _positive_measure),
    ("biliti", "ble", _positive_measure),
]

_STEP3: list[Rule] = [
    ("icate", "ic", _positive_measure),
    ("ative", "", _positive_measure),
    ("alize", "al", _positive_measure),
    ("iciti", "ic", _positive_measure),
    ("ical", "ic", _positive_measure),
    ("ful", "", _positive_measure),
    ("ness", "", _positive_measure),
]

_STEP4: list[Rule] = [
    ("al", "", _measure_over_one),
    ("ance", "", _measure_over_one),
    ("ence", "", _measure_over_one),
    ("er", "", _measure_over_one),
    ("ic", "", _measure_over_one),
    ("able", "", _measure_over_one),
    ("ible", "", _measure_over_one),
    ("ant", "", _measure_over_one),
    ("ement", "", _measure_over_one),
    ("ment", "", _measure_over_one),
    ("ent", "", _measure_over_one),
    ("ion", "", lambda stem: _measure_over_one(stem) and stem[-1:] in ("s", "t")),
    ("ou", "", _measure_over_one),
    ("ism", "", _measure_over_one),
    ("ate", "", _measure_over_one),
    ("iti", "", _measure_over_one),
    ("ous", "", _measure_over_one),
    ("ive", "", _measure_over_one),
    ("ize", "", _measure_over_one),
]


def _step1a(word: str) -> str:
    return _apply_step(
        word,
        [("sses", "ss", None), ("ies", "i", None), ("ss", "ss", None), ("s", "", None)],
    )


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        stem = word[:-3]
        return stem + "ee" if _measure(stem) > 0 else word
    stripped = None
    if word.endswith("ed") and _has_vowel(word[:-2]):
        stripped = word[:-2]
    elif word.endswith("ing") and _has_vowel(word[:-3]):
        stripped = word[:-3]
    if stripped is None:
        return word
    if stripped.endswith(("at", "bl", "iz")):
        return stripped + "e"
    if _ends_double_consonant(stripped) and stripped[-1] not in "lsz":
        return stripped[:-1]
    if _measure(stripped) == 1 and _ends_cvc(stripped):
        return stripped + "e"
    return stripped


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def _step5a(word: str) -> str:
    if word.endswith("e"):
        stem = word[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            return stem
    return word


def _step5b(word: str) -> str:
    if word.endswith("ll") and _measure(word) > 1:
        return word[:-1]
    return word


def porter_stem(word: str) -> str:
    """Stem one lowercase English word."""
    word = word.lower()
    if len(word) <= 2:
        return word
    word = _step1a(word)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply_step(word, _STEP2)
    word = _apply_step(word, _STEP3)
    word = _apply_step(word, _STEP4)
    word = _step5a(word)
    word = _step5b(word)
    return word
