"""
Batch command line front end.

Subcommands: coeff (structure constants), puzzles (enumerate / render),
trace (annotated degeneration tree), rank (interval-rank utilities),
verify (invariant sweeps).  Exit codes: 0 success, 1 bad input,
2 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .board import ascii_render, svg_render
from .filling import Branch, Theory, branch_weight, count_puzzles, \
    enumerate_puzzles, structure_constants, trace
from .intervalrank import DotSet, covers, envelope, essential_conditions, \
    essential_set, fixed_point_in, format_dots, parse_dots, rank_from_dots
from .oracle import _SUITES, verify_suite
from .poly import coefficients_to_json, render
from .words import Word, WordError, all_words, parse_word


class InputError(ValueError):
    pass


def _pair(mu_s: str, nu_s: str) -> tuple[Word, Word]:
    mu = parse_word(mu_s)
    nu = parse_word(nu_s, n=mu.n, k=mu.k)
    return mu, nu


def _set_threads(threads: int | None):
    if threads is not None:
        if threads < 1:
            raise InputError("--threads must be positive")
        os.environ["PUZZLE_THREADS"] = str(threads)


def cmd_coeff(args) -> int:
    mu, nu = _pair(args.mu, args.nu)
    _set_threads(args.threads)
    theory = Theory(args.theory)
    coeffs = structure_constants(theory, mu, nu)
    if args.json:
        doc = {
            "n": mu.n,
            "k": mu.k,
            "mu": str(mu),
            "nu": str(nu),
            "theory": theory.value,
            "coefficients": coefficients_to_json(coeffs),
            "puzzle_count": count_puzzles(theory, mu, nu),
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        for lam in sorted(coeffs):
            print(f"{lam}: {render(coeffs[lam])}")
    return 0


def cmd_puzzles(args) -> int:
    mu, nu = _pair(args.mu, args.nu)
    lam = parse_word(args.lam, n=mu.n, k=mu.k) if args.lam else None
    _set_threads(args.threads)
    pzs = enumerate_puzzles(mu, nu, lam=lam)
    print(f"{len(pzs)} puzzles")
    if args.render is None:
        return 0
    stem = f"puzzle-{mu}-{nu}" + (f"-{lam}" if lam else "")
    if args.render == "ascii" and args.out is None:
        for pz in pzs:
            print()
            print(ascii_render(pz))
        return 0
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    ext = "svg" if args.render == "svg" else "txt"
    draw = svg_render if args.render == "svg" else ascii_render
    for idx, pz in enumerate(pzs):
        path = os.path.join(outdir, f"{stem}-{idx:03d}.{ext}")
        with open(path, "w") as fh:
            fh.write(draw(pz))
            fh.write("\n")
    print(f"wrote {len(pzs)} {ext} files to {outdir}")
    return 0


_INTERESTING_KINDS = ("equivariant", "shift0", "shift1", "topk")


def _trace_lines(node, parent_pos, depth, out):
    pad = "  " * depth
    head = node.branch or "root"
    conds = essential_conditions(node.dots)
    cond_s = ", ".join(f"({i},{j}) r<={b}" for i, j, b in conds) or "none"
    line = f"{pad}{head} @ {node.pos}  codim={node.codim}  essential: {cond_s}"
    if node.branch in _INTERESTING_KINDS:
        n = node.path.n
        br = Branch(node.branch, parent_pos, ())
        ws = ", ".join(f"{t.value}={render(branch_weight(t, br, n))}"
                       for t in Theory)
        line += f"  weight: {ws}"
    out.append(line)
    for child in node.children:
        _trace_lines(child, node.pos, depth + 1, out)


def _trace_json(node, parent_pos):
    doc = {
        "branch": node.branch,
        "position": str(node.pos),
        "dots": format_dots(node.dots),
        "codim": node.codim,
        "essential": [[i, j, b] for i, j, b in essential_conditions(node.dots)],
        "children": [_trace_json(c, node.pos) for c in node.children],
    }
    if node.branch in _INTERESTING_KINDS:
        n = node.path.n
        br = Branch(node.branch, parent_pos, ())
        doc["weight"] = {t.value: render(branch_weight(t, br, n))
                        for t in Theory}
    return doc


def cmd_trace(args) -> int:
    mu, nu = _pair(args.mu, args.nu)
    try:
        root = trace(mu, nu)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        doc = {"n": mu.n, "k": mu.k, "mu": str(mu), "nu": str(nu),
               "tree": _trace_json(root, None)}
        print(json.dumps(doc, sort_keys=True))
    else:
        lines: list[str] = []
        _trace_lines(root, None, 0, lines)
        print("\n".join(lines))
    return 0


def cmd_rank(args) -> int:
    try:
        d = parse_dots(args.dots, args.n) if args.dots else DotSet(args.n, frozenset())
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    op = args.op
    if op == "dots":
        print(rank_from_dots(d))
    elif op == "essential":
        r = rank_from_dots(d)
        cells = sorted(essential_set(d), key=lambda c: (c[1], c[0]))
        print("; ".join(f"({i},{j}) r<={r.entry(i, j)}" for i, j in cells))
    elif op == "covers":
        for c in sorted(covers(d), key=format_dots):
            print(format_dots(c))
    elif op == "envelope":
        lam, mu = envelope(d)
        print(f"lambda={lam} mu={mu}")
    elif op == "fixed-points":
        k = d.n - len(d.dots)
        if args.word:
            w = parse_word(args.word, n=d.n, k=k)
            print(f"{w}: {'in' if fixed_point_in(d, w) else 'out'}")
        else:
            for w in all_words(d.n, k):
                if fixed_point_in(d, w):
                    print(w)
    return 0


def cmd_verify(args) -> int:
    suites = args.suite or None
    if suites:
        unknown = [s for s in suites if s not in _SUITES]
        if unknown:
            raise InputError(f"unknown suite(s): {', '.join(unknown)}")
    rep = verify_suite(args.max_n, seed=args.seed, suites=suites)
    if args.json:
        print(json.dumps(rep.to_json(), sort_keys=True))
    else:
        print(rep)
    return 0 if rep.ok else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="puzzlecalc",
        description="Exact Schubert structure constants via puzzle paths.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("coeff", help="structure constants for one pair")
    p.add_argument("--theory", required=True, choices=[t.value for t in Theory])
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_coeff)

    p = sub.add_parser("puzzles", help="enumerate and render puzzles")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--render", choices=["ascii", "svg"], default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(fn=cmd_puzzles)

    p = sub.add_parser("trace", help="annotated degeneration tree")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_trace)

    p = sub.add_parser("rank", help="interval-rank utilities")
    p.add_argument("op", choices=["dots", "essential", "covers",
                                  "envelope", "fixed-points"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dots", default="")
    p.add_argument("--word", default=None)
    p.set_defaults(fn=cmd_rank)

    p = sub.add_parser("verify", help="run invariant sweeps")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--suite", action="append", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (WordError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
