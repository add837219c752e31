"""Command-line interface.

Exit codes: 0 success (and, for ``validate``, a valid knot); 1 invalid
knot or failed check; 2 usage or parse errors.  Enumeration output is
plain text by default, with ``--format jsonl`` / ``--format csv`` where
a record stream makes sense.  The environment variable
``TIEKNOT_MAX_WINDINGS`` caps enumeration sizes (default 13 moves).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import catalog, enumeration, genfunc, grammars, validity
from .notation import (
    KnotWord,
    NotationError,
    Region,
    classify_final,
    final_region,
    infer_orientations,
    mirror,
    parse_clr,
    parse_tw,
    render_instructions,
    tw_to_clr,
    clr_to_tw,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def _max_moves_cap() -> int:
    return int(os.environ.get("TIEKNOT_MAX_WINDINGS", "13"))


def _options_from(args) -> validity.ValidityOptions:
    return validity.ValidityOptions(
        require_final_tuck=not args.no_final_tuck,
        allow_final_center_no_tuck=args.allow_final_center,
        allow_hidden_tucks=args.allow_hidden_tucks,
        max_tuck_depth=args.max_tuck_depth,
        max_moves=args.max_moves,
    )


def _parse_knot_argument(args) -> KnotWord:
    if args.clr is not None:
        return clr_to_tw(parse_clr(args.clr))
    return parse_tw(args.tw, Region(args.start))


def _knot_record(knot: KnotWord) -> dict:
    text = knot.serialize()
    record = {
        "tw": text,
        "clr": tw_to_clr(knot).serialize(),
        "start": knot.start.value,
        "windings": knot.winding_count,
        "moves": knot.move_count,
        "tucks": [{"position": p, "depth": d} for p, d in knot.tucks],
        "final_region": final_region(knot).value,
        "symmetry": catalog.symmetry(knot),
        "balance": catalog.balance(knot),
    }
    try:
        name = catalog.name_of(knot)
        record["name"] = str(name)
        record["tuck_bits"] = name.tuck_bits
    except catalog.NamingError:
        record["name"] = None
        record["tuck_bits"] = None
    return record


def cmd_validate(args) -> int:
    opts = _options_from(args)
    try:
        if args.clr is not None:
            report = validity.validate_clr(parse_clr(args.clr), opts)
        else:
            report = validity.validate(parse_tw(args.tw, Region(args.start)), opts)
    except NotationError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        for line in report.lines():
            print(line)
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_convert(args) -> int:
    try:
        if args.annotate:
            word = parse_clr(args.string)
            print(infer_orientations(word).serialize())
        elif args.to_clr:
            knot = parse_tw(args.string, Region(args.start))
            if args.mirror:
                knot = mirror(knot)
            print(tw_to_clr(knot).serialize())
        else:
            knot = clr_to_tw(parse_clr(args.string))
            if args.mirror:
                knot = mirror(knot)
            print(f"start {knot.start.value}: {knot.serialize()}")
    except NotationError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _enumerate_knots(args):
    cap = _max_moves_cap()
    max_moves = min(args.max_windings, cap)
    if args.klass == "fm":
        for text in enumeration.fm_knots(max_moves - 1):
            yield clr_to_tw(parse_clr(text))
    elif args.klass == "single":
        opts = validity.ValidityOptions(
            max_tuck_depth=1, allow_hidden_tucks=args.allow_hidden_tucks
        )
        for knot in enumeration.oracle_enumerate(max_moves - 1, opts):
            yield knot
    elif args.klass == "full":
        opts = validity.ValidityOptions(max_tuck_depth=None)
        for knot in enumeration.oracle_enumerate(max_moves - 1, opts):
            yield knot
    else:  # windings
        patterns = enumeration.winding_patterns(max_moves - 1)
        for region in (Region.LEFT, Region.RIGHT, Region.CENTER):
            for w in sorted(patterns[region], key=lambda s: (len(s), s)):
                yield parse_tw(w)


def cmd_enumerate(args) -> int:
    if args.final is not None:
        wanted = Region(args.final)
    else:
        wanted = None
    if args.klass == "full" and args.allow_hidden_tucks:
        print("error: hidden tucks are only enumerable for the single class", file=sys.stderr)
        return EXIT_USAGE
    count = 0
    bucket = None
    bucket_count = 0
    for knot in _enumerate_knots(args):
        if args.progress and knot.winding_count != bucket:
            if bucket is not None:
                print(f"[{bucket} windings: {bucket_count} knots]", file=sys.stderr)
            bucket, bucket_count = knot.winding_count, 0
        bucket_count += 1
        if wanted is not None and final_region(knot) is not wanted:
            continue
        variants = [knot]
        if args.both_mirrors:
            reflected = mirror(knot)
            if reflected.serialize() != knot.serialize() or reflected.start != knot.start:
                variants.append(reflected)
        for variant in variants:
            count += 1
            if args.count:
                continue
            if args.format == "jsonl":
                print(json.dumps(_knot_record(variant)))
            elif args.format == "csv":
                record = _knot_record(variant)
                print(
                    f"{record['tw']},{record['clr']},{record['start']},"
                    f"{record['windings']},{record['moves']},{record['final_region']}"
                )
            else:
                prefix = f"{variant.start.value} " if args.both_mirrors else ""
                print(prefix + (variant.serialize() or "<empty>"))
    if args.progress and bucket is not None:
        print(f"[{bucket} windings: {bucket_count} knots]", file=sys.stderr)
    if args.count:
        print(count)
    return EXIT_OK


_SERIES = {
    # name -> (series factory, degree meaning)
    "fm": (lambda order: grammars.count_by_size(grammars.fm_grammar(), order), "moves"),
    "single": (
        lambda order: grammars.count_by_size(grammars.single_tuck_tw_grammar(), order),
        "moves",
    ),
    "r-final": (
        lambda order: grammars.count_by_size(
            grammars.single_tuck_clr_grammar(Region.RIGHT), order
        ),
        "moves",
    ),
    "l-final": (
        lambda order: grammars.count_by_size(
            grammars.single_tuck_clr_grammar(Region.LEFT), order
        ),
        "moves",
    ),
    "c-final": (
        lambda order: grammars.count_by_size(
            grammars.single_tuck_clr_grammar(Region.CENTER), order
        ),
        "moves",
    ),
    "full": (
        lambda order: grammars.count_by_size(grammars.full_grammar(), order),
        "windings",
    ),
    "windings-r": (
        lambda order: genfunc.expand(genfunc.parse_rational("z^3/(1-z-2z^2)"), order + 1),
        "moves",
    ),
    "windings-l": (
        lambda order: genfunc.expand(
            genfunc.parse_rational("2z^4/((1-2z)(1+z))"), order + 1
        ),
        "moves",
    ),
    "windings-c": (
        lambda order: genfunc.expand(genfunc.parse_rational("z^3/(1-z-2z^2)"), order + 1),
        "moves",
    ),
}


def cmd_series(args) -> int:
    factory, degree = _SERIES[args.which]
    series = factory(args.order)
    series = series.truncate(args.order + 1)
    print(", ".join(str(c) for c in series))
    if args.verbose:
        print(f"# degree counts {degree}")
    return EXIT_OK


def _resolve_knot(args) -> KnotWord:
    if args.name is not None:
        named = catalog.lookup(args.name)
        if named is not None:
            return named.tw
        return catalog.knot_of(catalog.KnotName.parse(args.name))
    return _parse_knot_argument(args)


def cmd_name(args) -> int:
    try:
        knot = _resolve_knot(args)
        print(catalog.name_of(knot))
    except (NotationError, catalog.NamingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_instructions(args) -> int:
    try:
        knot = _resolve_knot(args)
        print(render_instructions(knot))
    except (NotationError, catalog.NamingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_aesthetics(args) -> int:
    try:
        knot = _resolve_knot(args)
    except (NotationError, catalog.NamingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(f"symmetry {catalog.symmetry(knot)}")
    print(f"balance {catalog.balance(knot)}")
    print(f"final {final_region(knot).value} ({classify_final(knot).value})")
    return EXIT_OK


def cmd_sample(args) -> int:
    max_moves = min(args.max_windings, _max_moves_cap())
    knots = enumeration.oracle_enumerate(
        max_moves - 1, validity.ValidityOptions(max_tuck_depth=1)
    )
    rng = random.Random(args.seed)
    for index in sorted(rng.sample(range(len(knots)), args.count)):
        knot = knots[index]
        if args.format == "jsonl":
            print(json.dumps(_knot_record(knot)))
        else:
            print(f"{catalog.name_of(knot)}  {knot.serialize()}")
    return EXIT_OK


def cmd_census(args) -> int:
    max_moves = min(args.max_windings, _max_moves_cap())
    rows = enumeration.census(max_moves - 1, include_full=not args.no_full)
    if args.format == "csv":
        print(enumeration.CensusRow.CSV_HEADER)
        for row in rows:
            print(row.csv_line())
    elif args.format == "jsonl":
        for row in rows:
            print(json.dumps(row.to_dict()))
    else:
        print(enumeration.CensusRow.CSV_HEADER.replace(",", "\t"))
        for row in rows:
            print(row.csv_line().replace(",", "\t"))
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    report = enumeration.cross_check(args.max_windings, args.full_windings)
    print(report)
    return EXIT_OK if report.ok else EXIT_INVALID


def _add_knot_arguments(parser, with_name=False):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--tw", help="knot in winding notation (T/W/U/')")
    group.add_argument("--clr", help="knot in region notation (L/C/R/U)")
    if with_name:
        group.add_argument("--name", help="knot name (R-1.0) or a registry name (Trinity)")
    parser.add_argument(
        "--start", default="L", choices=["L", "C", "R"], help="start region for --tw"
    )
    if not with_name:
        parser.set_defaults(name=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tieknot", description="Tie-knot notation, validity, enumeration and naming."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a knot against the tie axioms")
    _add_knot_arguments(p)
    p.add_argument("--no-final-tuck", action="store_true")
    p.add_argument("--allow-final-center", action="store_true")
    p.add_argument("--allow-hidden-tucks", action="store_true")
    p.add_argument("--max-tuck-depth", type=int, default=None)
    p.add_argument("--max-moves", type=int, default=13)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert between the notations")
    p.add_argument("string")
    p.add_argument("--to-clr", action="store_true", help="winding text to region text")
    p.add_argument("--annotate", action="store_true", help="add i/o marks to region text")
    p.add_argument("--mirror", action="store_true", help="reflect the knot first")
    p.add_argument("--start", default="L", choices=["L", "C", "R"])
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="list all knots of a language")
    p.add_argument("--class", dest="klass", default="single",
                   choices=["fm", "single", "full", "windings"])
    p.add_argument("--max-windings", type=int, default=13,
                   help="largest winding length (region symbol count)")
    p.add_argument("--final", choices=["L", "C", "R"], default=None)
    p.add_argument("--format", choices=["plain", "jsonl", "csv"], default="plain")
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--both-mirrors", action="store_true",
                   help="emit the mirror image of each knot as well")
    p.add_argument("--allow-hidden-tucks", action="store_true")
    p.add_argument("--progress", action="store_true",
                   help="report bucket completion on stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", help="print a counting series")
    p.add_argument("which", choices=sorted(_SERIES))
    p.add_argument("order", type=int)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("name", help="name a knot")
    _add_knot_arguments(p, with_name=True)
    p.set_defaults(func=cmd_name)

    p = sub.add_parser("instructions", help="print tying steps")
    _add_knot_arguments(p, with_name=True)
    p.set_defaults(func=cmd_instructions)

    p = sub.add_parser("aesthetics", help="symmetry and balance of a knot")
    _add_knot_arguments(p, with_name=True)
    p.set_defaults(func=cmd_aesthetics)

    p = sub.add_parser("sample", help="draw random single-tuck knots")
    p.add_argument("count", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-windings", type=int, default=13)
    p.add_argument("--format", choices=["plain", "jsonl"], default="plain")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("census", help="the knot census table")
    p.add_argument("--max-windings", type=int, default=13)
    p.add_argument("--format", choices=["plain", "jsonl", "csv"], default="plain")
    p.add_argument("--no-full", action="store_true",
                   help="skip the arbitrary-depth total column")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("crosscheck", help="compare enumerators against grammars")
    p.add_argument("--max-windings", type=int, default=13,
                   help="winding-length bound for the single-tuck checks")
    p.add_argument("--full-windings", type=int, default=12,
                   help="winding-count bound for the arbitrary-depth check")
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
