"""Command-line interface.

Subcommands mirror the library: ``roots`` enumerates root classes,
``de-roots``/``de-root-genera`` print integer lists in the classic GAP
transcript shape (``[ 45476, 45477 ]``, empty ``[  ]``), ``figure1``
exports the (genus, degree) pair table as CSV, and the rest are direct
queries.  Exit codes: 0 success, 2 usage problems, 3 class cap exceeded,
4 output I/O failure.  The environment variable DEHN_ROOTS_CLASS_CAP
overrides the enumeration cap.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import enumeration, fractional, special_roots
from .dataset import (
    ParseError,
    RangeExceeded,
    format_dataset,
    parse_dataset,
    validate,
)
from .enumeration import ClassCapExceeded, class_cap_from_env
from .numtheory import PreconditionViolated, bezout_avoiding_primes

__all__ = ["PairRow", "pair_table", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_IO = 4


@dataclass(frozen=True)
class PairRow:
    """One populated cell of the (genus, degree) table behind the pair plot."""

    genus: int
    degree: int
    class_count: int
    tags: tuple  # one tag per class, sorted


def pair_table(g_max, n_max, class_cap=None):
    """Rows (g, n, #classes, tags) for every pair with a root, g <= g_max, n <= n_max."""
    rows = []
    for g in range(g_max + 1):
        for n in range(3, min(n_max, 2 * g + 1) + 1, 2):
            classes = enumeration.datasets(g, n, class_cap)
            if classes:
                tags = sorted(str(special_roots.classify(ds).tag) for ds in classes)
                rows.append(PairRow(g, n, len(classes), tuple(tags)))
    return rows


def _gap_list(values):
    if not values:
        return "[  ]"
    return "[ " + ", ".join(str(v) for v in values) + " ]"


def _dataset_json(ds, tag=None):
    doc = {
        "degree": ds.degree,
        "g0": ds.quotient_genus,
        "a": ds.a,
        "b": ds.b,
        "cones": [[c, order] for c, order in ds.cones],
        "genus": ds.genus,
        "tag": None if tag is None else str(tag),
    }
    return doc


def _emit_datasets(classes, fmt):
    if fmt == "json":
        docs = [_dataset_json(ds, special_roots.classify(ds).tag) for ds in classes]
        print(json.dumps(docs, indent=2))
    else:
        for ds in classes:
            print(format_dataset(ds))


def _emit_int_list(values, fmt):
    if fmt == "json":
        print(json.dumps(list(values)))
    else:
        print(_gap_list(values))


def _cmd_roots(args):
    cap = class_cap_from_env()
    if args.degree is not None:
        classes = enumeration.datasets(args.genus, args.degree, cap)
    else:
        classes = []
        for n in enumeration.root_degrees(args.genus):
            classes.extend(enumeration.datasets(args.genus, n, cap))
    _emit_datasets(classes, args.format)
    return EXIT_OK


def _cmd_de_roots(args):
    _emit_int_list(special_roots.de_roots(args.genus), args.format)
    return EXIT_OK


def _cmd_de_root_genera(args):
    _emit_int_list(special_roots.de_root_genera(args.degree), args.format)
    return EXIT_OK


def _cmd_figure1(args):
    rows = pair_table(args.max_genus, args.max_degree, class_cap_from_env())
    try:
        with open(args.output, "w", newline="") as handle:
            handle.write("g,n,classes,tags\n")
            for row in rows:
                handle.write(
                    "%d,%d,%d,%s\n"
                    % (row.genus, row.degree, row.class_count, "+".join(row.tags))
                )
    except OSError as exc:
        print("cannot write %s: %s" % (args.output, exc), file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_t_set(args):
    _emit_int_list(special_roots.t_set(args.degree).members, args.format)
    return EXIT_OK


def _cmd_genus_set(args):
    _emit_int_list(enumeration.genus_set(args.degree, args.max_genus), args.format)
    return EXIT_OK


def _cmd_root_set(args):
    _emit_int_list(enumeration.root_degrees(args.genus), args.format)
    return EXIT_OK


def _cmd_ms_roots(args):
    _emit_datasets(special_roots.ms_roots(args.genus), args.format)
    return EXIT_OK


def _cmd_ms_count(args):
    count = special_roots.ms_count(args.degree)
    print(json.dumps(count) if args.format == "json" else count)
    return EXIT_OK


def _cmd_de_construct(args):
    ds = special_roots.de_construct(args.d, args.e)
    if args.format == "json":
        print(json.dumps(_dataset_json(ds, special_roots.classify(ds).tag), indent=2))
    else:
        print(format_dataset(ds))
    return EXIT_OK


def _cmd_fractional(args):
    candidates = fractional.fractional_datasets(args.genus, args.degree, args.power)
    if args.format == "json":
        docs = []
        for ds in candidates:
            doc = _dataset_json(ds)
            del doc["tag"]  # candidates are not classified
            doc["power"] = ds.power
            doc["power_shares_factor"] = ds.power_shares_factor
            docs.append(doc)
        print(json.dumps(docs, indent=2))
    else:
        for ds in candidates:
            caveat = "yes" if ds.power_shares_factor else "no"
            print("%s\tpower=%d\tgcd_caveat=%s" % (format_dataset(ds), ds.power, caveat))
    return EXIT_OK


def _cmd_bezout_avoid(args):
    primes = set()
    if args.primes:
        primes = {int(chunk) for chunk in args.primes.split(",") if chunk.strip()}
    witness = bezout_avoiding_primes(args.d1, args.d2, primes)
    if args.format == "json":
        print(
            json.dumps(
                {"c1": witness.c1, "c2": witness.c2, "d1": witness.d1, "d2": witness.d2}
            )
        )
    else:
        print("c1 = %d, c2 = %d" % (witness.c1, witness.c2))
    return EXIT_OK


def _cmd_validate(args):
    ds = parse_dataset(args.dataset)
    report = validate(ds)
    if args.format == "json":
        doc = {
            "valid": report.valid,
            "violations": [
                {"condition": v.condition, "detail": v.detail} for v in report.violations
            ],
        }
        if report.valid:
            doc["genus"] = ds.genus
            doc["degree"] = ds.degree
        print(json.dumps(doc, indent=2))
    elif report.valid:
        print("valid; genus %d; degree %d" % (ds.genus, ds.degree))
    else:
        details = "; ".join("%s: %s" % (v.condition, v.detail) for v in report.violations)
        print("invalid; " + details)
    return EXIT_OK


def _add_format(parser, choices=("text", "json")):
    parser.add_argument("--format", choices=choices, default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dehn-roots",
        description="Roots of Dehn twists about nonseparating curves: "
        "enumerate and classify root classes by genus and degree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="root classes for a genus (and optional degree)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("de-roots", help="degrees of (d,e)-roots for a genus")
    p.add_argument("genus", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_de_roots)

    p = sub.add_parser("de-root-genera", help="genera with a (d,e)-root of this degree")
    p.add_argument("degree", type=int)
    _add_format(p)
    p.set_defaults(func=_cmd_de_root_genera)

    p = sub.add_parser("figure1", help="export the populated (g, n) table as CSV")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_figure1)

    p = sub.add_parser("t-set", help="genera excluded from primary-root existence")
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_t_set)

    p = sub.add_parser("genus-set", help="genera with a root of the given degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_genus_set)

    p = sub.add_parser("root-set", help="degrees of roots for a genus")
    p.add_argument("--genus", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_root_set)

    p = sub.add_parser("ms-roots", help="maximal-degree root classes for a genus")
    p.add_argument("--genus", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_ms_roots)

    p = sub.add_parser("ms-count", help="count maximal-degree roots of a degree")
    p.add_argument("--degree", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_ms_count)

    p = sub.add_parser("de-construct", help="build a (d,e)-root data set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_de_construct)

    p = sub.add_parser("fractional", help="candidates for roots of twist powers")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--power", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_fractional)

    p = sub.add_parser("bezout-avoid", help="Bezout coefficients avoiding primes")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--primes", default="")
    _add_format(p)
    p.set_defaults(func=_cmd_bezout_avoid)

    p = sub.add_parser("validate", help="validate a data set in text form")
    p.add_argument("dataset")
    _add_format(p)
    p.set_defaults(func=_cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ClassCapExceeded as exc:
        print("class cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except (ParseError, RangeExceeded, PreconditionViolated, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print("I/O error: %s" % exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
