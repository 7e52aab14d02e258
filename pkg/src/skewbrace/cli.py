"""Command-line surface.

Exit codes: 0 success, 2 parse or validation error, 3 internal inconsistency.
Open-problem verdicts never change the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .brace import opposite_brace, trivial_brace, verify_identities
from .commutator import smith_commutator
from .constructions import (
    bilinear_brace,
    extract_cocycles,
    heisenberg_brace,
    product_form,
    rebuild_from_cocycles,
)
from .corpus import (
    analyze,
    format_table,
    load_brace,
    load_group,
    load_table,
    run_conjecture_suite,
    save_brace,
    series_dict,
    write_corpus,
)
from .enumeration import classify_up_to_iso, enumerate_braces_on
from .errors import InternalInconsistency, SkewBraceError
from .groups import FiniteGroup, builtin_group
from .series import series
from .substructures import ideal_closure
from .ybe import canonical_solution, check_nondegenerate_involutive, check_ybe

SERIES_KINDS = {
    "zeta": "upper_zeta",
    "gamma": "lower_gamma",
    "left": "left_star",
    "right": "right_star",
    "mixed": "mixed_star",
}


class UsageError(Exception):
    pass


def resolve_group(ref: str) -> FiniteGroup:
    """A group file path, or a builtin name such as ``Z4``, ``Z2xZ2``, ``S3``, ``Q8``."""
    if Path(ref).is_file():
        return load_group(ref)
    try:
        return builtin_group(ref)
    except KeyError as exc:
        raise UsageError(f"{ref!r} is neither a group file nor a known group name") from exc


def _elements(text: str, n: int) -> list[int]:
    try:
        out = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad element list {text!r}") from None
    bad = [v for v in out if not 0 <= v < n]
    if bad:
        raise UsageError(f"elements {bad} are outside 0..{n - 1}")
    return out


def _form(ref: str | None, rows: int, cols: int, m: int) -> np.ndarray:
    if ref is None or ref == "product":
        return product_form(rows, cols, m)
    if ref == "zero":
        return np.zeros((rows, cols), dtype=np.int64)
    return load_table(ref)


def cmd_verify(args) -> int:
    B = load_brace(args.file)
    rep = verify_identities(B)
    for k, ok in rep.checks.items():
        line = f"{k}: {'ok' if ok else 'FAIL'}"
        if not ok:
            line += f" witness {rep.witnesses.get(k)}"
        print(line)
    if not rep.all_passed:
        raise InternalInconsistency("a validated brace failed a derived identity")
    print(f"{B.name}: valid skew brace of order {B.order}")
    return 0


def cmd_analyze(args) -> int:
    rep = analyze(load_brace(args.file))
    sys.stdout.write(rep.to_json() + "\n" if args.format == "struct" else rep.to_text())
    return 0


def cmd_series(args) -> int:
    B = load_brace(args.file)
    s = series(B, SERIES_KINDS[args.kind])
    d = series_dict(s)
    for i, st in enumerate(d["stages"]):
        print(f"{s.offset + i}: {st}")
    print(f"class: {d['class_index']}")
    return 0


def cmd_commutator(args) -> int:
    B = load_brace(args.file)
    I = ideal_closure(B, _elements(args.left, B.order))
    J = ideal_closure(B, _elements(args.right, B.order))
    C = smith_commutator(B, I, J)
    print(f"I = {list(I.members)}")
    print(f"J = {list(J.members)}")
    print(f"[I, J] = {list(C.members)}")
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "trivial":
        B = trivial_brace(resolve_group(args.group), name=args.name)
    elif kind == "opposite":
        B = opposite_brace(resolve_group(args.group), name=args.name)
    elif kind == "bilinear":
        if args.base:
            H = load_brace(args.base)
        else:
            H = trivial_brace(resolve_group(args.group))
        K = resolve_group(args.kernel)
        B = bilinear_brace(H, K, _form(args.form, H.order, H.order, K.order), name=args.name)
    elif kind == "heisenberg":
        if args.p:
            E = F = A = builtin_group(f"Z{args.p}")
        else:
            if not (args.E and args.F and args.A):
                raise UsageError("heisenberg needs --p or all of --E --F --A")
            E, F, A = resolve_group(args.E), resolve_group(args.F), resolve_group(args.A)
        B = heisenberg_brace(E, F, A, _form(args.form, E.order, F.order, A.order), name=args.name)
    elif kind == "rebuild":
        if args.source:
            c = extract_cocycles(load_brace(args.source))
            B = rebuild_from_cocycles(c.quotient, c.kernel, c)
        else:
            if not (args.quotient and args.kernel and args.theta and args.phi):
                raise UsageError("rebuild needs --from, or --quotient --kernel --theta --phi")
            Q = load_brace(args.quotient)
            B = rebuild_from_cocycles(Q, resolve_group(args.kernel),
                                      (load_table(args.theta), load_table(args.phi)))
        B.name = args.name
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    save_brace(B, args.output, name=args.name or kind, metadata={"construction": kind})
    print(f"wrote {args.output} (order {B.order})")
    return 0


def cmd_cocycles(args) -> int:
    c = extract_cocycles(load_brace(args.file))
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    save_brace(c.quotient, out / "quotient.brace", name="quotient")
    (out / "theta.txt").write_text("\n".join(format_table(c.theta)) + "\n")
    (out / "phi.txt").write_text("\n".join(format_table(c.phi)) + "\n")
    (out / "kernel.txt").write_text("\n".join(format_table(c.kernel.op)) + "\n")
    print(f"center of order {c.kernel_order}, quotient of order {c.quotient_order}; wrote {out}")
    return 0


def cmd_ybe(args) -> int:
    B = load_brace(args.file)
    s = canonical_solution(B)
    res = check_ybe(s)
    nondeg, invol = check_nondegenerate_involutive(s)
    print(f"YBE: {'holds' if res else 'fails at ' + str(res.witness)}")
    print(f"non-degenerate: {nondeg}")
    print(f"involutive: {invol}")
    if args.emit:
        for x in range(s.size):
            print(" ".join(f"{a},{b}" for a, b in zip(s.first[x], s.second[x])))
    return 0


def cmd_enumerate(args) -> int:
    G = resolve_group(args.group)
    fam = enumerate_braces_on(G, max_order=args.max_order)
    braces = fam.braces
    if args.up_to_iso:
        fam = classify_up_to_iso(fam)
        braces = fam.representatives()
    stem = Path(args.group).stem if Path(args.group).is_file() else args.group
    for k, B in enumerate(braces):
        B.name = f"{stem}#{k}"
    if args.output:
        write_corpus(braces, args.output)
    what = "isomorphism classes" if args.up_to_iso else "braces"
    print(f"{len(braces)} {what} with additive group {stem}")
    return 0


def cmd_conjectures(args) -> int:
    summary = run_conjecture_suite(args.directory, jobs=args.jobs)
    if args.format == "struct":
        print(json.dumps(summary.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(summary.to_text())
    return summary.exit_code()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewbrace", description="Finite skew brace toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="load and validate a brace document")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("analyze", help="full analysis report")
    s.add_argument("file")
    s.add_argument("--format", choices=["text", "struct"], default="text")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("series", help="print one series")
    s.add_argument("file")
    s.add_argument("--kind", choices=sorted(SERIES_KINDS), default="zeta")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("commutator", help="commutator of the ideals generated by two element lists")
    s.add_argument("file")
    s.add_argument("--left", required=True, help="comma-separated generators")
    s.add_argument("--right", required=True, help="comma-separated generators")
    s.set_defaults(func=cmd_commutator)

    s = sub.add_parser("construct", help="build a brace and write it to a file")
    s.add_argument("kind", choices=["trivial", "opposite", "bilinear", "heisenberg", "rebuild"])
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--name")
    s.add_argument("--group", help="group file or name (trivial, opposite, bilinear over a trivial base)")
    s.add_argument("--base", help="brace file H for bilinear")
    s.add_argument("--kernel", help="abelian group K (bilinear, rebuild)")
    s.add_argument("--form", help="'product', 'zero', or a table file")
    s.add_argument("--p", type=int, help="Heisenberg over Z_p")
    s.add_argument("--E")
    s.add_argument("--F")
    s.add_argument("--A")
    s.add_argument("--from", dest="source", help="rebuild: extract cocycles from this brace")
    s.add_argument("--quotient", help="rebuild: quotient brace file")
    s.add_argument("--theta", help="rebuild: theta table file")
    s.add_argument("--phi", help="rebuild: phi table file")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("cocycles", help="split a brace over its center into cocycle files")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_cocycles)

    s = sub.add_parser("ybe", help="canonical Yang-Baxter solution")
    s.add_argument("file")
    s.add_argument("--emit", action="store_true", help="print r(x, y) row by row")
    s.set_defaults(func=cmd_ybe)

    s = sub.add_parser("enumerate", help="all braces with a given additive group")
    s.add_argument("--group", required=True)
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--max-order", type=int, default=8)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("conjectures", help="open-problem scan over a directory of brace files")
    s.add_argument("directory")
    s.add_argument("--format", choices=["text", "struct"], default="text")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_conjectures)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness}", file=sys.stderr)
        return 3
    except (SkewBraceError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"witness: {witness}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
