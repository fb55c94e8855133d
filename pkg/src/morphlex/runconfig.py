"""Run configuration: resource paths, presets, and file-based extraction.

A run always has the baseline translation resources (general dictionary
plus the morpheme translation table).  Presets add optional resources on
top: D the domain-specific dictionary, S the synonym variant tables, M the
morphological-family variant tables.  The additive structure guarantees
that growing the preset never removes candidates.  The special ``pref``
preset is the restricted prefix+word comparison mode.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ConfigurationError
from .extractor import Lexicon, LexiconExtractor
from .resources import (
    load_corpus,
    load_inventory,
    load_stopwords,
    load_translation_table,
    load_variant_table,
)

PRESETS: dict[str, frozenset[str]] = {
    "B": frozenset(),
    "BS": frozenset("S"),
    "BM": frozenset("M"),
    "BD": frozenset("D"),
    "BSMD": frozenset("SMD"),
    "PREF": frozenset(),
}

_PATH_KEYS = (
    "source_inventory",
    "target_inventory",
    "general_dict",
    "morpheme_table",
    "domain_dict",
    "source_synonyms",
    "target_synonyms",
    "source_morph_variants",
    "target_morph_variants",
    "stopwords",
    "corpus",
)

_ALWAYS_REQUIRED = (
    "source_inventory",
    "target_inventory",
    "general_dict",
    "morpheme_table",
    "corpus",
)


@dataclass
class RunConfig:
    """Everything a reproducible extraction run needs."""

    source_inventory: Path | None = None
    target_inventory: Path | None = None
    general_dict: Path | None = None
    morpheme_table: Path | None = None
    domain_dict: Path | None = None
    source_synonyms: Path | None = None
    target_synonyms: Path | None = None
    source_morph_variants: Path | None = None
    target_morph_variants: Path | None = None
    stopwords: Path | None = None
    corpus: Path | None = None
    source_language: str = "en"
    target_language: str = "fr"
    preset: str = "BD"
    fertile: bool = True
    min_base_length: int = 5
    max_gap: int = 3
    max_components: int = 4
    sequence_limit: int = 10000
    n_jobs: int = 1

    def __post_init__(self):
        self.preset = self.preset.upper()
        if self.preset not in PRESETS:
            raise ConfigurationError(
                f"unknown preset {self.preset!r}; expected one of {sorted(PRESETS)}"
            )

    def required_paths(self) -> list[str]:
        required = list(_ALWAYS_REQUIRED)
        letters = PRESETS[self.preset]
        if "D" in letters:
            required.append("domain_dict")
        if "S" in letters:
            required += ["source_synonyms", "target_synonyms"]
        if "M" in letters:
            required += ["source_morph_variants", "target_morph_variants"]
        return required

    def validate(self) -> None:
        for key in self.required_paths():
            path = getattr(self, key)
            if path is None:
                raise ConfigurationError(f"preset {self.preset} requires {key}")
            if not Path(path).is_file():
                raise ConfigurationError(f"{key} file not found: {path}")


_BOOL_VALUES = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}

_CONFIG_KEYS = frozenset(f.name for f in fields(RunConfig))


def _coerce(key: str, value: str):
    if key not in _CONFIG_KEYS:
        raise ConfigurationError(f"unknown configuration key {key!r}")
    if key in _PATH_KEYS:
        return Path(value)
    if key == "fertile":
        try:
            return _BOOL_VALUES[value.lower()]
        except KeyError:
            raise ConfigurationError(f"{key} must be a boolean, got {value!r}") from None
    if key in ("min_base_length", "max_gap", "max_components", "sequence_limit", "n_jobs"):
        try:
            return int(value)
        except ValueError:
            raise ConfigurationError(f"{key} must be an integer, got {value!r}") from None
    return value


def load_run_config(path: str | Path, **overrides) -> RunConfig:
    """Parse a flat ``key = value`` configuration file.

    Relative resource paths are resolved against the configuration file's
    directory; keyword overrides win over file values.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"configuration file not found: {path}")
    values: dict[str, object] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigurationError(f"{path}:{line_no}: expected 'key = value'")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            values[key] = _coerce(key, value)
    for key in _PATH_KEYS:
        if key in values and not Path(values[key]).is_absolute():
            values[key] = path.parent / values[key]
    values.update(overrides)
    return RunConfig(**values)


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_extractor(config: RunConfig) -> LexiconExtractor:
    """Load the resources a preset needs and return a fitted extractor."""
    config.validate()
    letters = PRESETS[config.preset]
    source_inventory = load_inventory(config.source_inventory, config.source_language)
    target_inventory = load_inventory(config.target_inventory, config.target_language)
    tables = [
        load_translation_table(config.general_dict),
        load_translation_table(config.morpheme_table, target_inventory),
    ]
    if "D" in letters:
        tables.append(load_translation_table(config.domain_dict))
    source_variants = []
    target_variants = []
    if "S" in letters:
        source_variants.append(load_variant_table(config.source_synonyms, config.source_language))
        target_variants.append(load_variant_table(config.target_synonyms, config.target_language))
    if "M" in letters:
        source_variants.append(
            load_variant_table(config.source_morph_variants, config.source_language)
        )
        target_variants.append(
            load_variant_table(config.target_morph_variants, config.target_language)
        )
    stopwords = None
    if config.stopwords is not None:
        stopwords = load_stopwords(config.stopwords, config.target_language)
    corpus = load_corpus(config.corpus, config.target_language)
    extractor = LexiconExtractor(
        source_inventory=source_inventory,
        target_inventory=target_inventory,
        translation=tables,
        source_variants=source_variants or None,
        target_variants=target_variants or None,
        stopwords=stopwords,
        min_base_length=config.min_base_length,
        max_gap=config.max_gap,
        max_components=config.max_components,
        sequence_limit=config.sequence_limit,
        fertile=config.fertile and config.preset != "PREF",
        prefix_only=config.preset == "PREF",
        n_jobs=config.n_jobs,
    )
    return extractor.fit(corpus)


def run_extraction(terms: list[str], config: RunConfig) -> Lexicon:
    """Extract a lexicon for a term list under a run configuration.

    Any resource loading failure aborts before processing starts.
    """
    extractor = build_extractor(config)
    lexicon = extractor.extract(terms)
    lexicon.metadata["preset"] = config.preset
    hashed = config.required_paths()
    if config.stopwords is not None:
        hashed.append("stopwords")
    for key in hashed:
        lexicon.metadata[f"sha256.{key}"] = _sha256(Path(getattr(config, key)))
    return lexicon


def read_terms(path: str | Path) -> list[str]:
    """Read a term list, one per line; comment lines start with '#'."""
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"terms file not found: {path}")
    terms: list[str] = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line and not line.startswith("#"):
                terms.append(line)
    return terms
