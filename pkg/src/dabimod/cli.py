"""Command-line front end.

Verbs map one-to-one onto library operations; no mathematical logic
lives here.  Exit status: 0 on success/verified, 1 on verification
failure, 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio, latexout
from .algebra import enumerate_basis, intrinsic_degree, render_monomial
from .boxtensor import secondary_product
from .corpus import CORPUS_IDS, build, schema_cells_equal, symmetry_transform
from .engine import ConcreteTerm, check_da_relations, infer_bidegrees, scan_bidegrees
from .verify import report_to_json_text, run_reproduction, verify_one_morphism


class UsageError(Exception):
    pass


def _load(name: str):
    if name in CORPUS_IDS:
        return build(name)
    if name.endswith(".json"):
        with open(name) as fh:
            return jsonio.bimodule_from_json(json.load(fh))
    raise UsageError(f"unknown bimodule {name!r}: expected one of "
                     f"{', '.join(CORPUS_IDS)} or a .json file")


def _parse_summand(text: str) -> int:
    # accept both "1" and "2,1" (strand count, weight)
    part = text.split(",")[-1].strip()
    try:
        return int(part)
    except ValueError:
        raise UsageError(f"cannot parse summand {text!r}")


def cmd_basis(args) -> int:
    summand = _parse_summand(args.summand)
    if not 0 <= summand <= 3:
        raise UsageError("summand must be between 0 and 3")
    basis = enumerate_basis(summand, args.max_exp)
    if args.emit == "json":
        payload = [m.to_json() for m in basis]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for m in basis:
            print(f"{render_monomial(m)}  (degree {intrinsic_degree(m)})")
        print(f"{len(basis)} basis monomials in B(2,{summand}) "
              f"with exponents <= {args.max_exp}")
    return 0


def cmd_check(args) -> int:
    bim = _load(args.bimodule)
    report = check_da_relations(bim, args.bound)
    if args.emit == "json":
        print(json.dumps({
            "name": report.name,
            "bound": report.bound,
            "passed": report.ok,
            "failures": [
                {"row": f.row, "col": f.col, "term": str(f.term)}
                for f in report.failures
            ],
        }, indent=2, sort_keys=True))
    else:
        print(report)
    return 0 if report.ok else 1


def cmd_tensor(args) -> int:
    X, Y = _load(args.left), _load(args.right)
    prod = secondary_product(X, Y, args.bound)
    if args.emit == "latex":
        text = latexout.latex_bimodule(prod)
    elif args.emit == "json":
        text = jsonio.dumps(jsonio.concrete_to_json(prod))
    else:
        lines = [f"{prod.name} at bound {args.bound}: "
                 f"{len(prod.generators)} generators"]
        for g in prod.generators:
            lines.append(f"  {g.name}: ({g.left}, {g.right})")
        order = {g.name: i for i, g in enumerate(prod.generators)}
        for (r, c) in sorted(prod.cells, key=lambda rc: (order[rc[0]], order[rc[1]])):
            lines.append(f"  cell [{r}, {c}]:")
            for t in sorted(prod.cells[(r, c)], key=ConcreteTerm.sort_key):
                lines.append(f"    {t}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


def cmd_iso(args) -> int:
    report = verify_one_morphism(args.crossing, args.action, args.bound)
    print("\n".join(report.lines()))
    return 0 if report.verified else 1


def cmd_symmetry(args) -> int:
    bim = _load(args.bimodule)
    if args.bimodule not in ("P", "N"):
        raise UsageError("symmetry applies to P and N")
    other = build("N" if args.bimodule == "P" else "P")
    diffs = schema_cells_equal(symmetry_transform(bim), other)
    invol = schema_cells_equal(symmetry_transform(symmetry_transform(bim)), bim)
    print(f"transform({args.bimodule}) == {other.name}: "
          f"{'yes' if not diffs else 'NO'}")
    for d in diffs:
        print(f"  {d}")
    print(f"involution on {args.bimodule}: {'yes' if not invol else 'NO'}")
    return 0 if not diffs and not invol else 1


def cmd_grade(args) -> int:
    bim = _load(args.bimodule)
    res = infer_bidegrees(bim)
    if not res.ok:
        print(f"no consistent bidegree assignment: {res.witness}")
        return 1
    bad = scan_bidegrees(bim, res.assignment, args.bound)
    if args.emit == "json":
        print(json.dumps({
            "name": bim.name,
            "assignment": {g: list(v) for g, v in sorted(res.assignment.items())},
            "preserving_up_to": args.bound,
            "violations": bad,
        }, indent=2, sort_keys=True))
    else:
        for g in bim.generators:
            di, dh = res.assignment[g.name]
            print(f"  {g.name}: intrinsic {di:+d}, homological {dh:+d}")
        print(f"bidegree-preserving up to degree {args.bound}: "
              f"{'yes' if not bad else 'NO'}")
    return 0 if not bad else 1


def cmd_reproduce(args) -> int:
    report = run_reproduction(args.bound)
    print(report.summary())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report_to_json_text(report))
        print(f"json report written to {args.out}")
    if not report.ok:
        return 1
    if args.strict_typos:
        print("strict mode: failing because documented display corrections "
              "are in effect")
        return 1
    return 0


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dabimod",
        description="Exact DA-bimodule calculus over the two-strand "
        "bordered algebra B(2)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("basis", help="list basis monomials of one summand")
    p.add_argument("--summand", required=True,
                   help="summand weight 0..3; '2,1' is accepted for B(2,1)")
    p.add_argument("--max-exp", type=int, default=0)
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("check", help="verify the DA bimodule relations")
    p.add_argument("bimodule", help="P, N, E1, E2 or a bimodule .json file")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("tensor", help="box tensor product of two bimodules")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--emit", choices=("text", "json", "latex"), default="text")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("iso", help="verify a crossing commutes with a 2-action")
    p.add_argument("crossing", choices=("P", "N"))
    p.add_argument("action", choices=("E1", "E2"))
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("symmetry", help="check the P <-> N transpose symmetry")
    p.add_argument("bimodule", choices=("P", "N"))
    p.set_defaults(fn=cmd_symmetry)

    p = sub.add_parser("grade", help="infer and verify generator bidegrees")
    p.add_argument("bimodule")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_grade)

    p = sub.add_parser("reproduce", help="run the full verification pipeline")
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--strict-typos", action="store_true",
                   help="exit 1 when results rely on documented corrections "
                   "to the bundled reference tables")
    p.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
