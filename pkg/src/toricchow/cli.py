"""fanctl: command-line front end.

Exit codes: 0 success, 2 invalid input or fan, 3 unsupported regime,
4 no generic displacement found within the retry budget.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import corpus
from .chow import chow_group
from .engine import cohomology, duality_failure_demo
from .errors import GenericityFailure, NotAffine, ParseError, ToricError, ValidationError, FanNotComplete
from .fanfile import emit_report, parse_fan
from .minkowski import MAX_RETRIES, duality_report, structure_constants, weight_group
from .polyhedra import split_affine

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_GENERICITY = 0, 2, 3, 4


class _Out:
    def __init__(self, data, text):
        self.data, self.text = data, text

    def to_dict(self):
        return self.data

    def to_text(self):
        return self.text


def _emit(args, data, text):
    print(emit_report(_Out(data, text), args.format))


def cmd_validate(args):
    fan = parse_fan(args.file)
    data = {
        "name": fan.name,
        "lattice_rank": fan.dim,
        "rays": [list(r) for r in fan.rays],
        "cones": [list(c) for c in fan.cones],
        "is_complete": fan.is_complete,
        "is_affine": fan.is_affine,
        "is_smooth": fan.is_smooth,
    }
    text = (
        f"valid fan in Z^{fan.dim}: {len(fan.rays)} rays, {len(fan.cones)} cones; "
        f"complete={fan.is_complete} affine={fan.is_affine} smooth={fan.is_smooth}"
    )
    _emit(args, data, text)
    return EXIT_OK


def cmd_chow(args):
    fan = parse_fan(args.file)
    k = fan.dim - args.k if args.codim else args.k
    g = chow_group(fan, k)
    data = dict(k=k, group=str(g), **g.to_dict())
    _emit(args, data, f"A_{k} = {g}")
    return EXIT_OK


def cmd_cohomology(args):
    fan = parse_fan(args.file)
    report = cohomology(fan, seed=args.seed, max_retries=args.max_retries)
    print(emit_report(report, args.format))
    return EXIT_UNSUPPORTED if report.unsupported else EXIT_OK


def cmd_cup(args):
    fan = parse_fan(args.file)
    if not fan.is_complete:
        print("cup products need a complete fan", file=sys.stderr)
        return EXIT_UNSUPPORTED
    consts = structure_constants(fan, args.k, args.l, args.seed, args.max_retries)
    bases = {d: [list(w.values) for w in weight_group(fan, d)] for d in {args.k, args.l, args.k + args.l}}
    data = {
        "k": args.k,
        "l": args.l,
        "bases": {str(d): b for d, b in sorted(bases.items())},
        "constants": {f"{i},{j}": list(c) for (i, j), c in sorted(consts.items())},
    }
    lines = [f"codim {d} basis: {b}" for d, b in sorted(bases.items())]
    lines += [f"e{i} ∪ f{j} = {list(c)}" for (i, j), c in sorted(consts.items())]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_split(args):
    fan = parse_fan(args.file)
    if not fan.is_affine:
        print("split needs an affine fan (a single maximal cone)", file=sys.stderr)
        return EXIT_UNSUPPORTED
    (top,) = fan.maximal_cones()
    split = split_affine(fan.cone(top))
    text = (
        f"X(sigma) = X(sigma_bar) x T_0 with torus rank {split.torus_rank}\n"
        f"sigma_bar in Z^{split.reduced_cone.lattice.rank}: rays {[list(r) for r in split.reduced_cone.rays]}\n"
        f"change of basis:\n{split.change_of_basis}"
    )
    _emit(args, split.to_dict(), text)
    return EXIT_OK


def cmd_duality(args):
    fan = parse_fan(args.file)
    ks = [args.k] if args.k is not None else list(range(fan.dim + 1))
    if fan.is_affine:
        rows = [duality_failure_demo(fan, k) for k in ks]
    elif fan.is_complete:
        rows = [duality_report(fan, k) for k in ks]
    else:
        print("duality needs an affine or a complete fan", file=sys.stderr)
        return EXIT_UNSUPPORTED
    data = {"regime": "affine" if fan.is_affine else "complete", "degrees": [r.to_dict() for r in rows]}
    if fan.is_affine:
        text = "\n".join(r.to_text() for r in rows)
    else:
        text = "\n".join(
            f"A^{r.k}_op: {r.weight_rank} weights; Hom(A_{r.k}, Z) = {r.hom}; "
            f"pairing factors {list(r.pairing_factors)}; {'agree' if r.agrees else 'DISAGREE'}"
            for r in rows
        )
    _emit(args, data, text)
    return EXIT_OK


def cmd_demo_paper(args):
    cone = corpus.square_cone_fan()
    line = corpus.affine_line()
    a2 = chow_group(cone, 2)
    demo2 = duality_failure_demo(cone, 2)
    rep = cohomology(cone)
    a1_chow = chow_group(line, 0)
    a1_rep = cohomology(line)
    checks = {
        "A_2(square cone) = Z/2 + Z": str(a2) == "Z/2 ⊕ Z",
        "Hom(A_2, Z) = Z but A^2_op = 0": str(demo2.hom) == "Z" and demo2.operational.is_trivial,
        "A^k_op(square cone) = 0 for k > 0": all(e.group.is_trivial for e in rep.entries[1:]),
        "A_0(A1) = 0": a1_chow.is_trivial,
        "A^0_op(A1) = Z": str(a1_rep.entries[0].group) == "Z",
    }
    data = {
        "square_cone": {
            "chow": {str(k): str(chow_group(cone, k)) for k in range(4)},
            "duality_k2": demo2.to_dict(),
            "cohomology": rep.to_dict(),
        },
        "affine_line": {"A_0": str(a1_chow), "cohomology": a1_rep.to_dict()},
        "checks": checks,
    }
    text = "\n".join(
        [
            "cone generated by (1,0,1), (0,-1,1), (-1,0,1), (0,1,1):",
            *(f"  A_{k} = {chow_group(cone, k)}" for k in range(4)),
            "  " + demo2.to_text(),
            *("  " + s for s in rep.to_text().splitlines()),
            "affine line:",
            f"  A_0 = {a1_chow}  but  A^0_op = {a1_rep.entries[0].group}",
            *("  " + s for s in a1_rep.to_text().splitlines()),
            "checks:",
            *(f"  [{'ok' if v else 'FAIL'}] {name}" for name, v in checks.items()),
        ]
    )
    _emit(args, data, text)
    return EXIT_OK if all(checks.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanctl", description="Chow groups and operational Chow cohomology of toric varieties.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a fan file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("chow", parents=[common], help="Chow group A_k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True, help="cycle dimension (codimension with --codim)")
    p.add_argument("--codim", action="store_true")
    p.set_defaults(func=cmd_chow)

    p = sub.add_parser("cohomology", parents=[common], help="operational Chow cohomology report")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=MAX_RETRIES)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("cup", parents=[common], help="cup-product structure constants on weight bases")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=MAX_RETRIES)
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("split", parents=[common], help="split an affine cone as X(sigma_bar) x torus")
    p.add_argument("file")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("duality", parents=[common], help="compare Hom(A_k, Z) with A^k_op")
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("demo-paper", parents=[common], help="run the worked affine examples end to end")
    p.set_defaults(func=cmd_demo_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        warnings.showwarning = lambda message, *rest, **kw: print(f"warning: {message}", file=sys.stderr)
        try:
            return args.func(args)
        except (ParseError, ValidationError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        except (NotAffine, FanNotComplete) as exc:
            print(f"unsupported: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        except GenericityFailure as exc:
            print(f"genericity failure: {exc}", file=sys.stderr)
            return EXIT_GENERICITY
        except ToricError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
