"""Linguistic resource types and their on-disk formats.

All resources are immutable after construction and safe to share across
worker threads or processes.  Forms and lemmas are case-folded on load, and
the hyphen notation sometimes used to mark bound morphemes ("cyto-",
"-cyto-") is stripped: the component kind, not the spelling, carries the
positional information.

File formats (UTF-8 throughout, ``#``-prefixed comment lines ignored except
in corpus files):

* inventory:    ``form<TAB>kind`` with kind in {pref, conf, suff, free}
* translations: ``source<TAB>target:boundtag|target:boundtag|...``
                with boundtag in {bound, free}
* variants:     ``form<TAB>related|related|...``
* stopwords:    one lemma per line
* corpus:       ``surface<TAB>lemma<TAB>pos`` one token per line, blank
                line = sentence boundary
"""

from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from .errors import ResourceFormatError

logger = logging.getLogger("morphlex")

_COMMENT = "#"


class ComponentKind(enum.Enum):
    """The four component categories a form can belong to."""

    PREFIX = "pref"
    CONFIX = "conf"
    SUFFIX = "suff"
    FREE = "free"

    @property
    def bound(self) -> bool:
        """Bound components cannot stand alone as lexical items."""
        return self is not ComponentKind.FREE

    @classmethod
    def from_tag(cls, tag: str) -> "ComponentKind":
        try:
            return cls(tag)
        except ValueError:
            raise KeyError(tag) from None


BOUND_KINDS = frozenset(
    {ComponentKind.PREFIX, ComponentKind.CONFIX, ComponentKind.SUFFIX}
)


def normalize_form(form: str) -> str:
    """Case-fold a form and strip hyphen markers.

    Hyphens are a notation for boundness, not part of the form itself, so
    they are removed entirely.
    """
    return form.strip().lower().replace("-", "")


@dataclass(frozen=True)
class Component:
    """A single inventory entry: a form with its kind and language."""

    form: str
    kind: ComponentKind
    language: str

    @property
    def bound(self) -> bool:
        return self.kind.bound


class ComponentInventory:
    """Typed component lists for one language.

    A form may be listed under several kinds at once (e.g. a string that is
    both a free word and a confix); lookups are always by (form, kind).
    """

    def __init__(self, language: str, entries: Iterable[tuple[str, ComponentKind]] = ()):
        self.language = language
        by_kind: dict[ComponentKind, set[str]] = {kind: set() for kind in ComponentKind}
        for form, kind in entries:
            form = normalize_form(form)
            if not form or any(ch.isspace() for ch in form):
                raise ValueError(f"invalid component form: {form!r}")
            by_kind[kind].add(form)
        self._by_kind: dict[ComponentKind, frozenset[str]] = {
            kind: frozenset(forms) for kind, forms in by_kind.items()
        }

    def forms(self, kind: ComponentKind) -> frozenset[str]:
        return self._by_kind[kind]

    def has(self, form: str, kind: ComponentKind) -> bool:
        return form in self._by_kind[kind]

    def kinds_of(self, form: str) -> frozenset[ComponentKind]:
        return frozenset(k for k, forms in self._by_kind.items() if form in forms)

    def bound_only(self, form: str) -> bool:
        """True when the form is listed and every listing is a bound kind."""
        kinds = self.kinds_of(form)
        return bool(kinds) and ComponentKind.FREE not in kinds

    def max_form_length(self) -> int:
        return max((len(f) for forms in self._by_kind.values() for f in forms), default=0)

    def __iter__(self) -> Iterator[Component]:
        for kind in ComponentKind:
            for form in sorted(self._by_kind[kind]):
                yield Component(form, kind, self.language)

    def __len__(self) -> int:
        return sum(len(forms) for forms in self._by_kind.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComponentInventory):
            return NotImplemented
        return self.language == other.language and self._by_kind == other._by_kind

    def __repr__(self) -> str:
        return f"ComponentInventory({self.language!r}, {len(self)} entries)"


class TargetForm(NamedTuple):
    """A translation target: the form plus its boundness in the target language."""

    form: str
    bound: bool


class TranslationTable:
    """Many-to-many mapping from source component forms to target forms.

    Lookups on absent keys return the empty set: an untranslatable
    component must fail softly, not abort a run.
    """

    def __init__(self, entries: Mapping[str, Iterable[TargetForm]] = {}):
        table: dict[str, frozenset[TargetForm]] = {}
        for source, targets in entries.items():
            targets = frozenset(targets)
            if not targets:
                raise ValueError(f"translation entry {source!r} has no targets")
            table[normalize_form(source)] = frozenset(
                TargetForm(normalize_form(t.form), bool(t.bound)) for t in targets
            )
        self._entries = table

    def lookup(self, form: str) -> frozenset[TargetForm]:
        return self._entries.get(form, frozenset())

    def keys(self) -> frozenset[str]:
        return frozenset(self._entries)

    def items(self) -> Iterator[tuple[str, frozenset[TargetForm]]]:
        return iter(self._entries.items())

    def inverted(self) -> dict[str, frozenset[str]]:
        """Target form -> set of source forms that translate to it."""
        out: dict[str, set[str]] = {}
        for source, targets in self._entries.items():
            for target in targets:
                out.setdefault(target.form, set()).add(source)
        return {form: frozenset(sources) for form, sources in out.items()}

    @classmethod
    def union(cls, *tables: "TranslationTable") -> "TranslationTable":
        merged: dict[str, set[TargetForm]] = {}
        for table in tables:
            for source, targets in table.items():
                merged.setdefault(source, set()).update(targets)
        return cls(merged)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TranslationTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"TranslationTable({len(self)} entries)"


class VariantTable:
    """Directional mapping from a form to related forms in the same language.

    Used as stored: no symmetric or transitive closure is taken.  Self
    mappings are rejected on construction.
    """

    def __init__(self, language: str, entries: Mapping[str, Iterable[str]] = {}):
        self.language = language
        table: dict[str, frozenset[str]] = {}
        for source, related in entries.items():
            source = normalize_form(source)
            cleaned = frozenset(normalize_form(r) for r in related) - {source, ""}
            if cleaned:
                table[source] = cleaned
        self._entries = table

    def lookup(self, form: str) -> frozenset[str]:
        return self._entries.get(form, frozenset())

    def keys(self) -> frozenset[str]:
        return frozenset(self._entries)

    def items(self) -> Iterator[tuple[str, frozenset[str]]]:
        return iter(self._entries.items())

    @classmethod
    def union(cls, language: str, *tables: "VariantTable") -> "VariantTable":
        merged: dict[str, set[str]] = {}
        for table in tables:
            for source, related in table.items():
                merged.setdefault(source, set()).update(related)
        return cls(language, merged)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VariantTable):
            return NotImplemented
        return self.language == other.language and self._entries == other._entries

    def __repr__(self) -> str:
        return f"VariantTable({self.language!r}, {len(self)} entries)"


class StopwordList:
    """Case-folded stopword lemmas for one language."""

    def __init__(self, language: str, lemmas: Iterable[str] = ()):
        self.language = language
        cleaned = set()
        for lemma in lemmas:
            lemma = lemma.strip().lower()
            if lemma:
                cleaned.add(lemma)
        self._lemmas = frozenset(cleaned)

    def __contains__(self, lemma: str) -> bool:
        return lemma in self._lemmas

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._lemmas))

    def __len__(self) -> int:
        return len(self._lemmas)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StopwordList):
            return NotImplemented
        return self.language == other.language and self._lemmas == other._lemmas

    def __repr__(self) -> str:
        return f"StopwordList({self.language!r}, {len(self)} lemmas)"


class Token(NamedTuple):
    """One corpus token: surface form, lemma and part-of-speech tag."""

    surface: str
    lemma: str
    pos: str


class TaggedCorpus:
    """A lemmatized, POS-tagged corpus with a lemma-keyed position index.

    Token positions are global and 0-based; each token also belongs to a
    sentence, and the selection stage refuses to match across sentence
    boundaries.
    """

    def __init__(self, language: str, sentences: Iterable[Iterable[Token]] = ()):
        self.language = language
        tokens: list[Token] = []
        sentence_ids: list[int] = []
        index: dict[str, list[int]] = {}
        sid = 0
        for sentence in sentences:
            sentence = list(sentence)
            if not sentence:
                continue
            for token in sentence:
                if not token.lemma or not token.pos:
                    raise ValueError(f"token with empty lemma or pos: {token!r}")
                lemma = token.lemma.lower()
                token = Token(token.surface, lemma, token.pos)
                index.setdefault(lemma, []).append(len(tokens))
                tokens.append(token)
                sentence_ids.append(sid)
            sid += 1
        self._tokens: tuple[Token, ...] = tuple(tokens)
        self._sentence_ids: tuple[int, ...] = tuple(sentence_ids)
        self._index: dict[str, tuple[int, ...]] = {
            lemma: tuple(pos) for lemma, pos in index.items()
        }

    @property
    def tokens(self) -> tuple[Token, ...]:
        return self._tokens

    def positions(self, lemma: str) -> tuple[int, ...]:
        return self._index.get(lemma.lower(), ())

    def sentence_of(self, position: int) -> int:
        return self._sentence_ids[position]

    def sentences(self) -> Iterator[tuple[Token, ...]]:
        start = 0
        for end in range(1, len(self._tokens) + 1):
            if end == len(self._tokens) or self._sentence_ids[end] != self._sentence_ids[start]:
                yield self._tokens[start:end]
                start = end

    def vocabulary(self) -> frozenset[str]:
        return frozenset(self._index)

    def __len__(self) -> int:
        return len(self._tokens)

    def __getitem__(self, position: int) -> Token:
        return self._tokens[position]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TaggedCorpus):
            return NotImplemented
        return (
            self.language == other.language
            and self._tokens == other._tokens
            and self._sentence_ids == other._sentence_ids
        )

    def __repr__(self) -> str:
        return f"TaggedCorpus({self.language!r}, {len(self)} tokens)"


@dataclass(frozen=True)
class PipelineConfig:
    """Tunable bounds for the extraction pipeline.

    min_base_length: a prefix may be stripped only when the remaining base
        is strictly longer than this many characters.
    max_gap: maximum allowed difference between consecutive matched token
        positions during corpus attestation (gap of k means k-1 intervening
        stopwords).
    max_components: segmentations with more than this many minimal
        components are discarded.
    """

    min_base_length: int = 5
    max_gap: int = 3
    max_components: int = 4

    def __post_init__(self):
        for name in ("min_base_length", "max_gap", "max_components"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {value!r}")


# ---------------------------------------------------------------------------
# Loaders


def _data_rows(path: Path, allow_comments: bool = True) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                continue
            if allow_comments and line.lstrip().startswith(_COMMENT):
                continue
            yield line_no, line


def load_inventory(path: str | Path, language: str) -> ComponentInventory:
    """Load a component inventory from a two-column TSV file."""
    path = Path(path)
    entries = []
    for line_no, line in _data_rows(path):
        columns = line.split("\t")
        if len(columns) != 2:
            raise ResourceFormatError(path, line_no, f"expected 2 columns, got {len(columns)}")
        form, tag = columns[0].strip(), columns[1].strip()
        try:
            kind = ComponentKind.from_tag(tag)
        except KeyError:
            raise ResourceFormatError(path, line_no, f"unknown component kind {tag!r}") from None
        if not normalize_form(form):
            raise ResourceFormatError(path, line_no, "empty component form")
        entries.append((form, kind))
    return ComponentInventory(language, entries)


def _parse_target(path: Path, line_no: int, spec: str) -> TargetForm:
    if ":" not in spec:
        raise ResourceFormatError(path, line_no, f"target {spec!r} lacks a boundness tag")
    form, tag = spec.rsplit(":", 1)
    tag = tag.strip()
    if tag not in ("bound", "free"):
        raise ResourceFormatError(path, line_no, f"unknown boundness tag {tag!r}")
    form = normalize_form(form)
    if not form:
        raise ResourceFormatError(path, line_no, "empty target form")
    return TargetForm(form, tag == "bound")


def load_translation_table(
    path: str | Path, target_inventory: ComponentInventory | None = None
) -> TranslationTable:
    """Load a translation table from a TSV file.

    When ``target_inventory`` is given, targets absent from it are reported
    as warnings (never errors): tables routinely contain corpus words that
    no inventory lists.
    """
    path = Path(path)
    entries: dict[str, set[TargetForm]] = {}
    for line_no, line in _data_rows(path):
        columns = line.split("\t")
        if len(columns) != 2:
            raise ResourceFormatError(path, line_no, f"expected 2 columns, got {len(columns)}")
        source = normalize_form(columns[0])
        if not source:
            raise ResourceFormatError(path, line_no, "empty source form")
        specs = [s for s in columns[1].split("|") if s.strip()]
        if not specs:
            raise ResourceFormatError(path, line_no, f"entry {source!r} has no targets")
        targets = {_parse_target(path, line_no, spec) for spec in specs}
        entries.setdefault(source, set()).update(targets)
    if target_inventory is not None:
        for source, targets in entries.items():
            for target in targets:
                if not target_inventory.kinds_of(target.form):
                    logger.warning(
                        "%s: target %r of %r not in the %s inventory",
                        path, target.form, source, target_inventory.language,
                    )
    return TranslationTable(entries)


def load_variant_table(path: str | Path, language: str) -> VariantTable:
    """Load a directional variant table from a TSV file.

    Rows mapping a form to itself are dropped with a warning; the table
    invariant forbids self-mappings.
    """
    path = Path(path)
    entries: dict[str, set[str]] = {}
    for line_no, line in _data_rows(path):
        columns = line.split("\t")
        if len(columns) != 2:
            raise ResourceFormatError(path, line_no, f"expected 2 columns, got {len(columns)}")
        source = normalize_form(columns[0])
        if not source:
            raise ResourceFormatError(path, line_no, "empty source form")
        related = set()
        for spec in columns[1].split("|"):
            form = normalize_form(spec)
            if not form:
                continue
            if form == source:
                logger.warning("%s:%d: dropping self-mapping %r", path, line_no, source)
                continue
            related.add(form)
        if related:
            entries.setdefault(source, set()).update(related)
    return VariantTable(language, entries)


def load_stopwords(path: str | Path, language: str) -> StopwordList:
    """Load a stopword list, one lemma per line."""
    path = Path(path)
    return StopwordList(language, (line for _, line in _data_rows(path)))


def load_corpus(path: str | Path, language: str) -> TaggedCorpus:
    """Load a vertical-format corpus; blank lines separate sentences."""
    path = Path(path)
    sentences: list[list[Token]] = []
    current: list[Token] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip():
                if current:
                    sentences.append(current)
                    current = []
                continue
            columns = line.split("\t")
            if len(columns) != 3:
                raise ResourceFormatError(path, line_no, f"expected 3 columns, got {len(columns)}")
            surface, lemma, pos = (c.strip() for c in columns)
            if not lemma or not pos:
                raise ResourceFormatError(path, line_no, "empty lemma or pos")
            current.append(Token(surface, lemma, pos))
    if current:
        sentences.append(current)
    corpus = TaggedCorpus(language, sentences)
    logger.info("%s: loaded %d tokens", path, len(corpus))
    return corpus


# ---------------------------------------------------------------------------
# Serializers (the morphology tools write resources in these same formats,
# so their outputs feed straight back into the pipeline)


def save_inventory(inventory: ComponentInventory, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for component in inventory:
            handle.write(f"{component.form}\t{component.kind.value}\n")


def save_translation_table(table: TranslationTable, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for source in sorted(table.keys()):
            targets = sorted(table.lookup(source))
            rendered = "|".join(
                f"{form}:{'bound' if bound else 'free'}" for form, bound in targets
            )
            handle.write(f"{source}\t{rendered}\n")


def save_variant_table(table: VariantTable, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for source in sorted(table.keys()):
            handle.write(f"{source}\t{'|'.join(sorted(table.lookup(source)))}\n")


def save_stopwords(stopwords: StopwordList, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for lemma in stopwords:
            handle.write(f"{lemma}\n")


def save_corpus(corpus: TaggedCorpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        first = True
        for sentence in corpus.sentences():
            if not first:
                handle.write("\n")
            first = False
            for token in sentence:
                handle.write(f"{token.surface}\t{token.lemma}\t{token.pos}\n")
