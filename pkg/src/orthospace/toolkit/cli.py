"""Command line interface.

Exit codes: 0 success; 1 a checked property came out false (``check
--expect``) or a search found nothing; 2 usage errors; 3 internal errors.
``-`` means stdin wherever a file is expected.  Sampling commands take
``--seed`` and are deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from ..classify import classify
from ..core import OrthoSpace
from ..errors import OrthoError, ParseError
from ..lattice import build_lattice, is_orthomodular
from ..measures import count_measures, find_two_valued_measure
from ..morphisms import automorphisms, enumerate_homs
from ..scalars import parse_field
from .census import census, census_summary
from .formats import export_dot_lattice, export_dot_space, parse_osp, report_to_dict, serialize_osp
from .generators import dspace, nset
from .search import PREDICATES, search_fixture

USAGE_ERROR = 2
PROPERTY_FALSE = 1
INTERNAL_ERROR = 3


def _read_space(path: str) -> OrthoSpace:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return parse_osp(text)


def _cmd_check(args) -> int:
    space = _read_space(args.file)
    report = classify(space)
    if args.json:
        print(json.dumps(report_to_dict(report, space.labels), indent=2, sort_keys=True, default=list))
    else:
        for key, value in report.flags().items():
            print(f"{key}: {'true' if value else 'false'}")
        print(f"lattice_size: {report.lattice_size}")
        for key, witness in sorted(report.witnesses.items()):
            print(f"witness[{key}]: {witness}")
    status = 0
    for clause in args.expect or ():
        key, _, want = clause.partition("=")
        flags = report.flags()
        if key not in flags:
            print(f"unknown flag {key!r}", file=sys.stderr)
            return USAGE_ERROR
        if flags[key] != (want.lower() in ("1", "true", "yes")):
            print(f"expectation failed: {key} is {flags[key]}", file=sys.stderr)
            status = PROPERTY_FALSE
    return status


def _cmd_lattice(args) -> int:
    space = _read_space(args.file)
    lattice = build_lattice(space)
    omod = is_orthomodular(lattice)
    print(f"elements: {lattice.size}")
    print(f"atoms: {len(lattice.atoms())}")
    print(f"orthomodular: {'true' if omod.ok else 'false'}")
    if args.dot:
        text = export_dot_lattice(lattice)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(text)
    return 0


def _cmd_homs(args) -> int:
    src = _read_space(args.src)
    dst = _read_space(args.dst)
    result = enumerate_homs(src, dst, normal_only=args.normal, cap=args.cap)
    for m in result:
        print(json.dumps(m.to_json()["table"]))
    print(f"# {len(result)} maps{' (truncated)' if result.truncated else ''}", file=sys.stderr)
    return 0


def _cmd_auts(args) -> int:
    space = _read_space(args.file)
    group = automorphisms(space)
    for m in group:
        print(" ".join(space.labels[t] for t in m.table))
    print(f"# group order {len(group)}", file=sys.stderr)
    return 0


def _cmd_measure(args) -> int:
    if args.rays:
        field = parse_field(args.rays)
        from ..hermitian import HermitianSpace, make_projective_fragment, parse_vector

        text = sys.stdin.read() if args.file == "-" else open(args.file, "r", encoding="utf-8").read()
        vectors = [parse_vector(field, line) for line in text.splitlines()
                   if line.strip() and not line.lstrip().startswith("#")]
        dim = len(vectors[0])
        H = HermitianSpace.standard(field, dim, positive_definite=field.ordered)
        space = make_projective_fragment(H, vectors)
    else:
        space = _read_space(args.file)
    if args.count:
        print(count_measures(space, cap=args.cap))
        return 0
    measure = find_two_valued_measure(space)
    if measure is None:
        print("none exists (exhaustive search)")
        return PROPERTY_FALSE
    print(json.dumps(measure.to_json()))
    print("# ones: " + " ".join(measure.ones()), file=sys.stderr)
    return 0


def _cmd_census(args) -> int:
    records = census(args.n, workers=args.workers,
                     progress=lambda msg: print(msg, file=sys.stderr))
    rows = census_summary(records)
    print(f"{'n':>3} {'spaces':>7} {'normal':>7} {'dacey':>6} {'linear':>7}")
    for row in rows:
        print(f"{row['n']:>3} {row['spaces']:>7} {row['normal']:>7} {row['dacey']:>6} {row['linear']:>7}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["certificate", "n", "edge_mask", "normal", "dacey", "linear",
                             "irredundant", "strongly_irredundant", "irreducible", "lattice_size"])
            for r in records:
                flags = r.report.flags()
                writer.writerow([r.certificate, r.n, r.edge_mask] +
                                [int(flags[k]) for k in ("normal", "dacey", "linear", "irredundant",
                                                         "strongly_irredundant", "irreducible")] +
                                [r.report.lattice_size])
    print("# all universal checks passed", file=sys.stderr)
    return 0


def _cmd_gen(args) -> int:
    space = nset(args.n) if args.family == "nset" else dspace(args.n)
    sys.stdout.write(serialize_osp(space, name=f"{args.family} {args.n}"))
    return 0


def _cmd_search(args) -> int:
    try:
        space = search_fixture(args.predicate, max_n=args.max_n)
    except OrthoError as exc:
        print(str(exc), file=sys.stderr)
        return PROPERTY_FALSE
    sys.stdout.write(serialize_osp(space, name=args.predicate))
    return 0


def _cmd_herm_demo(args) -> int:
    from ..hermitian import (
        SemiunitaryCertificate,
        check_lineation,
        check_nondegeneracy,
        check_representative_independence,
        padic_reduction_map,
        ratfunc_reduction_map,
        semiunitary_check,
    )

    if args.place == "ratfunc":
        m = ratfunc_reduction_map()
    else:
        m = padic_reduction_map(args.prime)
    lineation = check_lineation(m, samples=args.samples, seed=args.seed)
    mismatches = check_representative_independence(m, samples=args.samples, seed=args.seed + 1)
    nondeg = check_nondegeneracy(m, samples=20, seed=args.seed + 2)
    cert = SemiunitaryCertificate(m.source.field.one, m.target.field.one)
    unitary = semiunitary_check(m, cert, samples=args.samples, seed=args.seed + 3)
    report = {
        "map": f"{m.source.field}^ {m.source.dim} -> {m.target.field} ^ {m.target.dim}",
        "lineation_samples": lineation.samples,
        "lineation_violations": len(lineation.violations),
        "lineation_degenerate": lineation.degenerate,
        "representative_mismatches": mismatches,
        "l3": nondeg.l3,
        "l2_evidence": nondeg.l2_evidence,
        "semiunitary_identity": unitary,
    }
    print(json.dumps(report, indent=2))
    ok = lineation.ok and mismatches == 0 and nondeg.l3 and nondeg.l2_evidence and unitary
    return 0 if ok else PROPERTY_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthospace",
                                     description="exact computation on finite orthogonality spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a space from an .osp file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", action="append", metavar="FLAG=BOOL")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("lattice", help="build the ortholattice of a space")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("homs", help="enumerate homomorphisms between two spaces")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_homs)

    p = sub.add_parser("auts", help="list the automorphism group")
    p.add_argument("file")
    p.set_defaults(func=_cmd_auts)

    p = sub.add_parser("measure", help="search for a two-valued measure")
    p.add_argument("file")
    p.add_argument("--count", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--rays", metavar="FIELD",
                   help="treat the file as one vector per line over FIELD")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("census", help="classify all isomorphism classes up to n")
    p.add_argument("n", type=int)
    p.add_argument("--out", metavar="CSV")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("gen", help="emit a generated space as .osp")
    p.add_argument("family", choices=("nset", "dspace"))
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("search", help="find a space with a given classification pattern")
    p.add_argument("predicate", choices=PREDICATES)
    p.add_argument("--max-n", type=int, default=12, dest="max_n")
    p.set_defaults(func=_cmd_search)

    herm = sub.add_parser("herm", help="Hermitian-space demos")
    hsub = herm.add_subparsers(dest="herm_command", required=True)
    p = hsub.add_parser("demo", help="run a reduction-map demo and report the checks")
    p.add_argument("--place", choices=("ratfunc", "padic"), required=True)
    p.add_argument("--prime", type=int, default=5,
                   help="prime for the padic place (default 5)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_herm_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OrthoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
