"""Command-line interface.

One executable, subcommand per tool.  Data goes to stdout (or ``--out``),
diagnostics go to stderr, and the exit code is zero exactly when no
error-severity diagnostic was produced.  Report-style subcommands accept
``--machine`` for stable key<TAB>value output.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .decomposition import decompose
from .errors import MorphlexError
from .metrics import AnnotatedLexicon, cohen_kappa, comparability, evaluate
from .morphology import build_families, harvest_terms, filter_test_set
from .resources import (
    PipelineConfig,
    load_corpus,
    load_inventory,
    load_translation_table,
    save_variant_table,
)
from .runconfig import load_run_config, read_terms, run_extraction

CONFIG_ENV_VAR = "MORPHLEX_CONFIG"


@dataclass
class CommandOutcome:
    """What a subcommand did: exit code, main output, diagnostics."""

    exit_code: int = 0
    output_path: str | None = None
    diagnostics: list[tuple[str, str, str]] = field(default_factory=list)

    def error(self, message: str, location: str = "") -> "CommandOutcome":
        self.diagnostics.append(("error", message, location))
        self.exit_code = self.exit_code or 1
        return self


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report(pairs: list[tuple[str, str]], machine: bool, out: str | None) -> None:
    if machine:
        text = "".join(f"{key}\t{value}\n" for key, value in pairs)
    else:
        width = max(len(key) for key, _ in pairs)
        text = "".join(f"{key.ljust(width)}  {value}\n" for key, value in pairs)
    _emit(text, out)


def _cmd_decompose(args) -> CommandOutcome:
    inventory = load_inventory(args.inventory, args.language)
    config = PipelineConfig(
        min_base_length=args.min_base_length, max_components=args.max_components
    )
    decompositions = decompose(args.term, inventory, config)
    rendered = sorted(d.render() for d in decompositions)
    _emit("".join(line + "\n" for line in rendered), args.out)
    return CommandOutcome(output_path=args.out)


def _cmd_extract(args) -> CommandOutcome:
    overrides = {}
    if args.preset:
        overrides["preset"] = args.preset
    if args.no_fertile:
        overrides["fertile"] = False
    if args.workers is not None:
        overrides["n_jobs"] = args.workers
    config = load_run_config(args.config, **overrides)
    terms = read_terms(args.terms)
    lexicon = run_extraction(terms, config)
    lexicon.write_tsv(args.out)
    for severity, message, location in (
        (d.severity, d.message, d.location) for d in lexicon.diagnostics
    ):
        print(f"{severity}: {location}: {message}", file=sys.stderr)
    stats = lexicon.stats
    print(
        f"extracted {stats.total} terms: {stats.decomposed} decomposed, "
        f"{stats.translated} translated, {stats.recomposed} recomposed, "
        f"{stats.attested} attested",
        file=sys.stderr,
    )
    return CommandOutcome(output_path=args.out)


def _cmd_harvest(args) -> CommandOutcome:
    corpus = load_corpus(args.corpus, args.language)
    seeds = read_terms(args.seeds)
    terms = harvest_terms(corpus, seeds)
    _emit("".join(term + "\n" for term in terms), args.out)
    return CommandOutcome(output_path=args.out)


def _cmd_families(args) -> CommandOutcome:
    wordlists = [read_terms(path) for path in args.words]
    table = build_families(wordlists, args.language)
    if args.out:
        save_variant_table(table, args.out)
    else:
        for source in sorted(table.keys()):
            sys.stdout.write(f"{source}\t{'|'.join(sorted(table.lookup(source)))}\n")
    return CommandOutcome(output_path=args.out)


def _cmd_filter_testset(args) -> CommandOutcome:
    terms = read_terms(args.terms)
    dictionary = load_translation_table(args.dict)
    corpus = load_corpus(args.corpus, args.language)
    kept = filter_test_set(terms, dictionary, corpus)
    ordered = [term for term in terms if term in kept]
    _emit("".join(term + "\n" for term in ordered), args.out)
    return CommandOutcome(output_path=args.out)


def _cmd_evaluate(args) -> CommandOutcome:
    lexicon = AnnotatedLexicon.from_tsv(args.annotated)
    report = evaluate(lexicon)
    _report(report.as_pairs(), args.machine, args.out)
    return CommandOutcome(output_path=args.out)


def _cmd_kappa(args) -> CommandOutcome:
    first = AnnotatedLexicon.from_tsv(args.first)
    second = AnnotatedLexicon.from_tsv(args.second)
    keys1 = [(row.term, row.candidate) for row in first.rows]
    keys2 = [(row.term, row.candidate) for row in second.rows]
    if keys1 != keys2:
        return CommandOutcome().error(
            "annotation files do not list the same (term, candidate) pairs in the same order"
        )
    value = cohen_kappa(
        [row.label for row in first.rows], [row.label for row in second.rows]
    )
    _report([("items", str(len(keys1))), ("kappa", f"{value:.6f}")], args.machine, args.out)
    return CommandOutcome(output_path=args.out)


def _cmd_comparability(args) -> CommandOutcome:
    source = load_corpus(args.source_corpus, args.source_language)
    target = load_corpus(args.target_corpus, args.target_language)
    dictionary = load_translation_table(args.dict)
    score = comparability(source, target, dictionary)
    _report([("comparability", f"{score:.6f}")], args.machine, args.out)
    return CommandOutcome(output_path=args.out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morphlex",
        description="Bilingual lexicon extraction by compositional morpheme translation.",
    )
    parser.add_argument("--version", action="version", version=f"morphlex {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("decompose", help="segment a term into component groupings")
    p.add_argument("term")
    p.add_argument("--inventory", required=True, help="source-language inventory TSV")
    p.add_argument("--language", default="en")
    p.add_argument("--min-base-length", type=int, default=5)
    p.add_argument("--max-components", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("extract", help="extract a bilingual lexicon for a term list")
    p.add_argument("--terms", required=True, help="source terms, one per line")
    p.add_argument(
        "--config",
        default=os.environ.get(CONFIG_ENV_VAR),
        help=f"run configuration file (default: ${CONFIG_ENV_VAR})",
    )
    p.add_argument("--preset", help="resource combination (B, BS, BM, BD, BSMD, Pref)")
    p.add_argument("--no-fertile", action="store_true", help="drop fertile candidates")
    p.add_argument("--workers", type=int, help="parallel worker count")
    p.add_argument("--out", required=True, help="lexicon TSV output path")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("harvest", help="extract candidate terms containing seed morphemes")
    p.add_argument("--corpus", required=True, help="vertical corpus file")
    p.add_argument("--seeds", required=True, help="seed morphemes, one per line")
    p.add_argument("--language", default="en")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_harvest)

    p = sub.add_parser("families", help="build a variant table from stem families")
    p.add_argument("--words", required=True, nargs="+", help="word list file(s)")
    p.add_argument("--language", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser(
        "filter-testset", help="drop terms a plain dictionary lookup already covers"
    )
    p.add_argument("--terms", required=True)
    p.add_argument("--dict", required=True, help="general dictionary TSV")
    p.add_argument("--corpus", required=True, help="target-language vertical corpus")
    p.add_argument("--language", default="fr")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_filter_testset)

    p = sub.add_parser("evaluate", help="score an annotated lexicon")
    p.add_argument("annotated", help="lexicon TSV with a label column")
    p.add_argument("--machine", action="store_true", help="key<TAB>value output")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("kappa", help="inter-annotator agreement between two annotations")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--machine", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("comparability", help="corpus comparability under a dictionary")
    p.add_argument("source_corpus")
    p.add_argument("target_corpus")
    p.add_argument("dict")
    p.add_argument("--source-language", default="en")
    p.add_argument("--target-language", default="fr")
    p.add_argument("--machine", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_comparability)

    return parser


def dispatch(argv: list[str] | None = None) -> CommandOutcome:
    """Parse arguments and run one subcommand, capturing the outcome."""
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandOutcome(exit_code=int(exc.code or 0))
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return CommandOutcome(exit_code=2)
    if args.command == "extract" and not args.config:
        message = f"extract needs --config or the {CONFIG_ENV_VAR} environment variable"
        print(f"error: {message}", file=sys.stderr)
        return CommandOutcome().error(message)
    try:
        outcome = args.func(args)
    except (MorphlexError, OSError, ValueError) as exc:
        outcome = CommandOutcome().error(str(exc))
    for severity, message, location in outcome.diagnostics:
        prefix = f"{location}: " if location else ""
        print(f"{severity}: {prefix}{message}", file=sys.stderr)
    return outcome


def main() -> None:
    sys.exit(dispatch().exit_code)


if __name__ == "__main__":
    main()
