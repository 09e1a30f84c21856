"""Command-line interface: ``parastrophe <command> [flags]``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import format_catalog, records_from, write_catalog
from .classify import ClassKind, autoparatopism_group, classify
from .conjugate import ConjugateTag, conjugate, conjugate_via_oa
from .enumeration import enumerate_reduced
from .errors import LatinError
from .latin import Isotopism, LatinSquare
from .oa import OrthogonalArray, from_oa, to_oa
from .paratopism import (
    Paratopism,
    apply_isotopism,
    apply_paratopism,
    compose_paratopisms,
    swap_conjugate_isotopism,
)


def read_square(path: str) -> LatinSquare:
    """Read a grid file, or a three-line orthogonal-array file."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if len(lines) == 3 and all(len(ln) != 3 for ln in lines):
        return from_oa(OrthogonalArray.parse(text))
    return LatinSquare.parse(text)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _on_off(v: str) -> bool:
    if v not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return v == "on"


def _square_text(sq: LatinSquare, fmt: str) -> str:
    return str(to_oa(sq) if fmt == "oa" else sq) + "\n"


def cmd_conjugate(args):
    y = read_square(args.inp)
    tag = ConjugateTag.parse(args.eta)
    z = conjugate_via_oa(y, tag) if args.via_oa else conjugate(y, tag)
    _emit(_square_text(z, args.format), args.out)


def cmd_apply(args):
    y = read_square(args.inp)
    if args.para:
        z = apply_paratopism(Paratopism.parse(args.para), y)
    else:
        z = apply_isotopism(Isotopism.parse(args.iso), y)
    _emit(_square_text(z, args.format), args.out)


def cmd_compose(args):
    p, q = Paratopism.parse(args.p), Paratopism.parse(args.q)
    print(compose_paratopisms(p, q))


def cmd_swap(args):
    tag = ConjugateTag.parse(args.eta)
    print(swap_conjugate_isotopism(tag, Isotopism.parse(args.iso), args.side))


def cmd_enumerate(args):
    n = args.order
    if args.out:
        with open(args.out, "w") as fh:
            count = enumerate_reduced(
                n, args.pruning, lambda y: fh.write(" ".join(str(v) for r in y.rows for v in r) + "\n"),
                allow_order_7=args.allow_order_7)
        total = count if not args.pruning else enumerate_reduced(
            n, allow_order_7=args.allow_order_7, workers=args.workers)
    else:
        total = enumerate_reduced(n, allow_order_7=args.allow_order_7, workers=args.workers)
        count = enumerate_reduced(n, True, allow_order_7=args.allow_order_7,
                                  workers=args.workers) if args.pruning else total
    print(f"reduced: {total}")
    if args.pruning:
        print(f"candidates: {count}")
        print(f"rejected_fraction: {1 - count / total:.6f}")


def cmd_classify(args):
    kind = ClassKind.parse(args.kind)
    res = classify(args.order, kind, pruning=args.pruning, allow_order_7=args.allow_order_7,
                   workers=args.workers)
    records = records_from(res)
    if args.out:
        write_catalog(args.out, records)
    else:
        sys.stdout.write(format_catalog(records))
    print(f"# order={res.order} kind={kind.label} classes={res.class_count} reduced={res.total}",
          file=sys.stderr if not args.out else sys.stdout)
    if args.figure:
        from .report import plot_class_sizes

        plot_class_sizes(res, args.figure)


def cmd_stabilizer(args):
    y = read_square(args.inp)
    grp = autoparatopism_group(y)
    print(f"order: {grp.size}")
    if args.list:
        for p in sorted(grp.elements, key=str):
            print(p)


def cmd_verify(args):
    from .verify import run_verify

    ok = True
    for name, passed in run_verify(args.seed, args.trials):
        print(f"{'PASS' if passed else 'FAIL'}\t{name}")
        ok &= passed
    return 0 if ok else 1


def cmd_bench(args):
    from .bench import format_rows, run_bench

    rows = run_bench(args.seed, args.squares)
    _emit(format_rows(rows), args.out)
    if args.figure:
        from .report import plot_bench

        plot_bench(rows, args.figure)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parastrophe",
                                 description="Conjugates, paratopisms and classes of Latin squares.")
    sub = ap.add_subparsers(dest="command", required=True)

    def io(p, need_in=True):
        if need_in:
            p.add_argument("--in", dest="inp", required=True, help="grid or OA file ('-' for stdin)")
        p.add_argument("--out", help="write here instead of stdout")

    def search(p):
        p.add_argument("--order", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--allow-order-7", action="store_true")

    p = sub.add_parser("conjugate", help="conjugate a square")
    p.add_argument("--eta", required=True, help="tag, e.g. '(2 3)', 'rec' or '[r,e,c]'")
    p.add_argument("--via-oa", action="store_true", help="use the orthogonal-array route")
    p.add_argument("--format", choices=("grid", "oa"), default="grid")
    io(p)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("apply", help="apply an isotopism or paratopism")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--iso", help="'alpha; beta; gamma'")
    g.add_argument("--para", help="'alpha; beta; gamma; eta'")
    p.add_argument("--format", choices=("grid", "oa"), default="grid")
    io(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("compose", help="compose two paratopisms, P∘Q")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("swap", help="move a conjugate past an isotopism")
    p.add_argument("--eta", required=True)
    p.add_argument("--iso", required=True)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("enumerate", help="count reduced squares")
    search(p)
    p.add_argument("--pruning", type=_on_off, default=False)
    io(p, need_in=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="class representatives as a catalog")
    search(p)
    p.add_argument("--kind", default="main-class",
                   choices=("isotopy", "type", "inverse-type", "main-class"))
    p.add_argument("--pruning", type=_on_off, default=True)
    p.add_argument("--figure", help="also write a class-size bar chart (PNG)")
    io(p, need_in=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stabilizer", help="autoparatopism group order")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--list", action="store_true", help="print every element")
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("verify", help="run the randomised self-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--squares", type=int, default=200)
    p.add_argument("--figure", help="also write a timing chart (PNG)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except LatinError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        code = "ParseError" if isinstance(exc, ValueError) else "IOError"
        print(f"error: {code}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
