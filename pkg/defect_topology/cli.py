"""Command line interface: defect-topology {classify,conjugacy,spherical,retract,selftest}

Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 selftest failure, 2 spec parse error, 3 unsupported or inconsistent input.
"""
import argparse
import json
import logging
import sys

from . import __version__
from .classifier import classify, textures
from .exceptions import DefectTopologyError, InvariantViolation, SpecParseError
from .external.related.fields import to_int_rows
from .homotopy import Defect, SpaceSpec, h1, retract, sup
from .semidirect import (LATTICES, PointGroup2D, brute_force_classes, closed_form_partition,
                         f_classes, rep_key)
from .selftest import run_selftest
from .specfile import OUTPUT_FORMATS, SpecFile
from .spherical import KINDS, build_group, conjugacy_classes, table2_row
from .utils import to_jsonable

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_UNSUPPORTED = 3

DEFAULT_WINDOW = 5


def dump_json(obj):
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


def make_report(command, echo, result, tables):
    return {"command": command,
            "input": echo,
            "result": result,
            "provenance": {"tool": "defect-topology", "tool_version": __version__,
                           "tables": tables}}


def _h1_text(rank):
    if rank == 0:
        return "0"
    return u"ℤ" if rank == 1 else u"ℤ" + sup(rank)


# --------------------------------------------
# classify

def _classes_text(d):
    lines = [u"    classes: {0}".format(d)]
    if getattr(d, "source", None) == "semidirect":
        for cs in d.family:
            lines.append(u"      F_{{n₃≡{0}}} = {1}".format(cs.n3, cs.table_notation()))
    elif getattr(d, "source", None) == "binary":
        lines.append(u"      {0} classes: {1}".format(
            d.count, ", ".join("{size}@{angle}".format(**c) for c in d.family)))
    return lines


def classify_text(report):
    space = report.space
    lines = [u"M = {0} (dim {1}), X = {2}".format(space.manifold, space.dim,
                                                   json.dumps(space.defect.to_dict(), sort_keys=True))]
    lines.append(u"target: {0}, π₁ = {1}".format(report.target.kind, report.target.pi1_name))
    for i, (t, d) in enumerate(report.per_component, 1):
        lines.append(u"component {0}: {1}   H¹ = {2}".format(i, t, _h1_text(h1(t))))
        lines.extend(_classes_text(d))
    lines.append(u"π₀(G)/p(G_v): {0}".format(", ".join(report.chirality_factor.cosets)))
    lines.append(u"vacua: {0}".format(report.vacua_count))
    lines.append(u"|Def_M(X)| = {0}".format(report.cardinality))
    return "\n".join(lines)


def cmd_classify(args):
    spec = SpecFile.load(args.spec_path)
    opts = spec.get_options()
    output = args.output or opts.output
    window = args.window or opts.window
    system = spec.to_system()
    if args.compactify:
        report = textures(system, compactify=True)
    else:
        report = classify(system)
    if output == "text":
        return EXIT_OK, classify_text(report)
    return EXIT_OK, dump_json(make_report("classify", spec.get_config(), report.to_dict(window),
                                          ["Table 1", "Table 2", "Table 3"]))


# --------------------------------------------
# conjugacy

def _parse_matrix(text, option="matrix"):
    try:
        m = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError("--{0}: {1}".format(option, e.msg), line=e.lineno, column=e.colno,
                             field=option)
    try:
        return to_int_rows(m)
    except SpecParseError as e:
        raise SpecParseError("--{0} must be a list of integer rows, e.g. [[0,1],[-1,0]]: {1}".
                             format(option, e), field=option)


def cmd_conjugacy(args):
    if args.lattice == "custom":
        if args.matrix is None:
            raise SpecParseError("lattice 'custom' needs --matrix", field="matrix")
        pg = PointGroup2D.custom(_parse_matrix(args.matrix), has_reflection=args.reflection)
    else:
        pg = PointGroup2D.named(args.lattice)
    cs = f_classes(pg, args.n3)
    result = {"lattice": pg.name, "matrix": pg.m.to_list(), "order": pg.order_n,
              "has_reflection": pg.has_reflection,
              "classes": cs.to_dict(args.window or DEFAULT_WINDOW)}
    if args.window:
        oracle = brute_force_classes(pg, args.n3, args.window)
        agree = oracle == closed_form_partition(pg, args.n3, args.window)
        result["oracle"] = {"window": args.window,
                            "class_count": len(oracle),
                            "representatives": sorted(list(min(c, key=rep_key)) for c in oracle),
                            "verdict": "AGREE" if agree else "DIFFER"}
    if args.output == "text":
        lines = [u"{0} lattice, M = {1}, N = {2}".format(pg.name, pg.m, pg.order_n),
                 u"F_{{n₃={0}}} = {1}".format(args.n3, cs.table_notation())]
        if "oracle" in result:
            o = result["oracle"]
            lines.append(u"oracle (window {0}): {1} classes, {2}".format(
                o["window"], o["class_count"], o["verdict"]))
        return EXIT_OK, "\n".join(lines)
    echo = {"lattice": args.lattice, "n3": args.n3, "matrix": args.matrix, "window": args.window}
    return EXIT_OK, dump_json(make_report("conjugacy", echo, result, ["Table 1"]))


# --------------------------------------------
# spherical

def cmd_spherical(args):
    g = build_group(args.kind, args.n)
    row = table2_row(g)
    row["classes"] = [sorted(str(q) for q in c) for c in conjugacy_classes(g)]
    if args.output == "text":
        lines = [u"{group} ({ade}): order {order}, field Q(√{field_d})".format(**row),
                 u"conjugacy classes: computed {class_count}, printed {printed_class_count}, "
                 u"{status}".format(**row),
                 u"class sizes: {0}".format(row["class_sizes"]),
                 u"angles: {0}".format(", ".join(row["angles"]))]
        return EXIT_OK, "\n".join(lines)
    echo = {"kind": args.kind, "n": args.n}
    return EXIT_OK, dump_json(make_report("spherical", echo, row, ["Table 2"]))


# --------------------------------------------
# retract

def _defect_from_args(args):
    if args.circle:
        return Defect(kind="circle")
    if args.hyperplanes is not None or args.k is not None:
        k = _parse_matrix(args.k, option="k") if args.k is not None else None
        return Defect(kind="arrangement", hyperplanes=args.hyperplanes or 0, k=k)
    if args.points is not None:
        return Defect(kind="points", count=args.points)
    return Defect()


def cmd_retract(args):
    space = SpaceSpec(manifold=args.manifold, dim=args.dim, defect=_defect_from_args(args))
    components = retract(space)
    result = {"space": space.to_dict(),
              "components": [{"homotopy_type": t.to_dict(), "text": str(t), "h1_rank": h1(t)}
                             for t in components],
              "h1_rank": sum(h1(t) for t in components)}
    if args.output == "text":
        lines = [u"component {0}: {1}   H¹ = {2}".format(i, t, _h1_text(h1(t)))
                 for i, t in enumerate(components, 1)]
        return EXIT_OK, "\n".join(lines)
    return EXIT_OK, dump_json(make_report("retract", space.to_dict(), result, ["Table 3"]))


# --------------------------------------------
# selftest

def cmd_selftest(args):
    result = run_selftest(fixtures=args.fixtures, window=args.window)
    code = EXIT_OK if result.passed else EXIT_SELFTEST_FAILED
    for cell in result.failed:
        logger.error("selftest failed: {0}".format(cell))
    if args.output == "text":
        return code, result.to_text()
    echo = {"fixtures": args.fixtures or "builtin", "window": args.window}
    return code, dump_json(make_report("selftest", echo, result.to_dict(),
                                       ["Table 1", "Table 2", "Table 3"]))


# --------------------------------------------
# parser

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got '{0}'".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1, got {0}".format(value))
    return value


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--output", choices=OUTPUT_FORMATS, default=default,
                        help="Report format (default: json)")
    parser.add_argument("--window", type=_positive_int, default=default,
                        help="Window half-width B for oracle runs and examples")
    parser.add_argument("-v", "--verbose", action="count",
                        default=argparse.SUPPRESS if suppress else 0,
                        help="-v for info, -vv for debug logging on stderr")


def get_parser():
    parser = argparse.ArgumentParser(prog="defect-topology",
                                     description="Topological classification of crystal defects")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("classify", parents=[common], help="Classify the system in a JSON spec file")
    p.add_argument("spec_path")
    p.add_argument("--compactify", action="store_true",
                   help="Textures on the one point compactification (empty defect set only)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conjugacy", parents=[common],
                       help="Conjugacy classes F_{n3} of Z^2 x|_M Z")
    p.add_argument("lattice", choices=sorted(LATTICES) + ["custom"])
    p.add_argument("n3", type=int)
    p.add_argument("--matrix", help="Point group generator for 'custom', e.g. '[[0,1],[-1,0]]'")
    p.add_argument("--reflection", action="store_true",
                   help="Custom lattice has a reflection symmetry")
    p.set_defaults(func=cmd_conjugacy)

    p = sub.add_parser("spherical", parents=[common], help="Binary polyhedral group summary")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("retract", parents=[common], help="Homotopy type of M minus X")
    p.add_argument("--manifold", required=True)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--hyperplanes", type=int, default=None)
    p.add_argument("--k", default=None, help="Arrangement matrix k_ij as JSON rows")
    p.add_argument("--circle", action="store_true", help="Remove a circle from R^3")
    p.set_defaults(func=cmd_retract)

    p = sub.add_parser("selftest", parents=[common], help="Run the table regression suite")
    p.add_argument("--fixtures", default=None, help="Fixture yaml (default: shipped tables)")
    p.set_defaults(func=cmd_selftest)
    return parser


def _setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose and verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s [%(name)s] %(message)s")


def main(argv=None):
    args = get_parser().parse_args(argv)
    _setup_logging(args.verbose)
    try:
        code, text = args.func(args)
    except SpecParseError as e:
        print("error: {0}".format(e), file=sys.stderr)
        return EXIT_PARSE_ERROR
    except DefectTopologyError as e:
        field = " (field: {0})".format(e.field) if e.field else ""
        print("error: {0}{1}".format(e, field), file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvariantViolation as e:
        print("internal error: {0}".format(e), file=sys.stderr)
        return EXIT_UNSUPPORTED
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
