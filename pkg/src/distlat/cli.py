"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input (parse error, cycle,
not a lattice, not distributive), 3 a proved theorem failed.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from .core import DEFAULT_MAX_ELEMENTS, birkhoff_poset, ideal_lattice
from .errors import LatticeError, SizeLimitExceeded, TheoremViolation
from .fileformat import document_of, lattice_of, parse_input, poset_of, render_document
from .hibi import complete_intersection_verdict, ideal_generators, render_ideal_document
from .invariants import bounds_report
from .scan import DEFAULT_POSET_CAP, conjecture_scan, render_scan, render_tsv
from .structure import classify_ci_shape, decompose_thick, maximal_join_irreducibles, prune

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_THEOREM = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _bool(x) -> str:
    return "true" if x else "false"


def render_keys(pairs: dict) -> str:
    return "".join(f"{k} = {pairs[k]}\n" for k in sorted(pairs))


def _load(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_input(text)


def _redundant(order, pairs: dict):
    if order.redundant_covers:
        nm = order.names
        pairs["warning.redundant_covers"] = " ".join(
            f"{nm[a]}>{nm[b]}" for a, b in order.redundant_covers
        )


def cmd_check(args) -> str:
    doc = _load(args.file)
    p = poset_of(doc)
    out = {"kind": doc.kind, "size": p.size, "covers": len(p.covers)}
    if doc.kind == "lattice":
        L = lattice_of(doc, args.max_elements)
        out["distributive"] = "true"
        out["j_size"] = len(L.J)
    _redundant(p, out)
    out["status"] = "ok"
    return render_keys(out)


def cmd_analyze(args) -> str:
    doc = _load(args.file)
    L = lattice_of(doc, args.max_elements)
    rec = bounds_report(L)
    ci = complete_intersection_verdict(L)
    _, kinds = classify_ci_shape(L)
    if not rec.thick:
        conj = "not-applicable"
    else:
        conj = "holds" if rec.n >= rec.conjecture_rhs else "violated"
    out = {
        "size": rec.size,
        "j_size": rec.j_size,
        "join_irreducibles": " ".join(L.name(j) for j in L.J),
        "bottom": L.name(L.bottom),
        "top": L.name(L.top),
        "n": rec.n,
        "e": rec.e,
        "f_vector": " ".join(f"{L.name(i)}:{f}" for i, f in enumerate(rec.f_vector)),
        "f_sum": rec.f_sum,
        "lower_rank": rec.lower_rank,
        "lower_edge": rec.lower_edge,
        "upper": rec.upper,
        "conjecture_rhs": rec.conjecture_rhs,
        "conjecture": conj,
        "thick": _bool(rec.thick),
        "factor_classes": " ".join(kinds) or "none",
        "ambient_dim": ci.ambient_dim,
        "variety_dim": ci.variety_dim,
        "variety_dim_without_bottom": ci.variety_dim - 1,
        "codim": ci.codim,
        "generator_count": ci.generator_count,
        "complete_intersection": _bool(ci.is_complete_intersection),
    }
    _redundant(L.order, out)
    return render_keys(out)


def cmd_decompose(args) -> str:
    L = lattice_of(_load(args.file), args.max_elements)
    dec = decompose_thick(L)
    shape, kinds = classify_ci_shape(L)
    if L.size == 1:
        kinds = ["trivial"]
    width = len(str(len(dec.factors) - 1))
    out = {
        "factor_count": len(dec.factors),
        "cut_elements": " ".join(L.name(c) for c in dec.cut_elements) or "none",
        "is_equality_case": _bool(shape),
    }
    for k, (ids, kind) in enumerate(zip(dec.embeddings, kinds)):
        key = f"factor.{k:0{width}d}"
        out[key + ".class"] = kind
        out[key + ".size"] = len(ids)
        out[key + ".elements"] = " ".join(L.name(i) for i in ids)
    return render_keys(out)


def cmd_prune(args) -> str:
    L = lattice_of(_load(args.file), args.max_elements)
    if args.at is not None:
        if args.at not in L.names:
            raise LatticeError(f"no element named {args.at}")
        alpha = L.index(args.at)
    else:
        candidates = maximal_join_irreducibles(L)
        if not candidates:
            raise LatticeError("lattice has no nonzero join irreducible to prune at")
        alpha = min(candidates)
    P = prune(L, alpha)
    return render_document(document_of("lattice", P.order))


def cmd_ideal(args) -> str:
    L = lattice_of(_load(args.file), args.max_elements)
    text = render_ideal_document(L)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return render_keys({"generators": len(ideal_generators(L)), "wrote": args.output})
    return text


def cmd_birkhoff(args) -> str:
    doc = _load(args.file)
    if doc.kind == "lattice":
        L = lattice_of(doc, args.max_elements)
        return render_document(document_of("poset", birkhoff_poset(L)))
    L = ideal_lattice(poset_of(doc), args.max_elements)
    return render_document(document_of("lattice", L.order))


def cmd_enumerate(args):
    rep = conjecture_scan(args.max, workers=args.jobs, cap=args.poset_cap)
    if args.tsv:
        Path(args.tsv).write_text(render_tsv(rep), encoding="utf-8")
    code = EXIT_THEOREM if rep.failures else EXIT_OK
    return code, render_scan(rep)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-elements",
        type=int,
        default=DEFAULT_MAX_ELEMENTS,
        help="cap on lattice size when building down-set lattices",
    )
    parser = argparse.ArgumentParser(prog="distlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "validate a lattice or poset file").add_argument("file")
    add("analyze", cmd_analyze, "invariants, bounds and CI verdict").add_argument("file")
    add("decompose", cmd_decompose, "split into thick factors").add_argument("file")
    sp = add("prune", cmd_prune, "remove everything above a maximal join irreducible")
    sp.add_argument("file")
    sp.add_argument("--at", metavar="NAME")
    sp = add("ideal", cmd_ideal, "diamond binomial generators of I(L)")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", metavar="OUT")
    add("birkhoff", cmd_birkhoff, "lattice <-> poset of join irreducibles").add_argument("file")
    sp = add("enumerate", cmd_enumerate, "theorem suite over all small lattices")
    sp.add_argument("--max", type=int, required=True, metavar="N")
    sp.add_argument("--jobs", type=int, default=1, metavar="K")
    sp.add_argument("--tsv", metavar="OUT")
    sp.add_argument("--poset-cap", type=int, default=DEFAULT_POSET_CAP, metavar="N")
    return parser


def run_command(argv) -> tuple[int, str]:
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_USAGE), buf.getvalue()
    try:
        result = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"error = {exc}\n"
    except SizeLimitExceeded as exc:
        return EXIT_USAGE, f"error = {exc}\n"
    except LatticeError as exc:
        return EXIT_INVALID, f"error = {exc}\n"
    except TheoremViolation as exc:
        return EXIT_THEOREM, f"error = theorem violated: {exc}\n"
    if isinstance(result, tuple):
        return result
    return EXIT_OK, result


def main(argv=None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
