"""
The degeneration engine: grow a puzzle piece by piece behind a moving path.

Each state is a lattice path across the board.  The next piece always sits
at the kink; away from the single interesting configuration (kink 1 over a
SW 0) the continuation is forced, while the interesting configuration
branches four ways.  Multiplying the branch weights of a complete run gives
that puzzle's contribution to a structure constant, in any of four theories:
ordinary or torus-equivariant cohomology, and ordinary or torus-equivariant
K-theory.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .board import (FillPos, Puzzle, PuzzlePath, RhombusPlacement, Step,
                    TrianglePlacement, final_path_word, initial_path, is_valid,
                    next_fill_position, validate_path)
from .intervalrank import DotSet, IntervalRankMatrix
from .poly import LPoly, Poly
from .words import Word, inversions


class Theory(str, Enum):
    H = "h"
    HT = "ht"
    K = "k"
    KT = "kt"

    @property
    def equivariant(self) -> bool:
        return self in (Theory.HT, Theory.KT)

    @property
    def k_theory(self) -> bool:
        return self in (Theory.K, Theory.KT)


# forced rhombus continuations, keyed by (kink label, following SW label):
# value is (new upper SW label, new kink label)
BORING = {
    ("1", "1"): ("1", "1"),
    ("0", "0"): ("0", "0"),
    ("0", "1"): ("1", "0"),
    ("1", "R"): ("R", "1"),
    ("R", "0"): ("0", "R"),
    ("0", "R"): ("0", "1"),
    ("R", "1"): ("0", "1"),
    ("K", "0"): ("0", "K"),
    ("K", "1"): ("R", "0"),
}

# horizontal mid edge of the two-triangle rhombi; single pieces have none
BORING_MID = {
    ("1", "1"): "1",
    ("0", "0"): "0",
    ("0", "1"): "R",
    ("1", "R"): "0",
    ("R", "0"): "1",
    ("0", "R"): "0",
    ("R", "1"): "1",
}

# bottom triangles, keyed by (kink label, bottom label) -> new SW label
TRIANGLE = {
    ("1", "1"): "1",
    ("0", "0"): "0",
    ("R", "1"): "0",
    ("1", "0"): "R",
}

# the four continuations of the interesting configuration (kink 1, SW 0)
INTERESTING = (
    ("equivariant", ("0", "1"), None),
    ("shift0", ("R", "0"), "0"),
    ("shift1", ("1", "R"), "1"),
    ("topk", ("1", "K"), None),
)


@dataclass(frozen=True)
class Branch:
    kind: str                 # "triangle", "boring", or an interesting kind
    pos: FillPos
    new_labels: tuple[str, ...]


def _apply_rhombus(p: PuzzlePath, kink: int, upper: str, lower: str) -> PuzzlePath:
    steps = list(p.steps)
    steps[kink] = Step("SW", upper)
    steps[kink + 1] = Step("SE", lower)
    return PuzzlePath(p.n, tuple(steps))


def _apply_triangle(p: PuzzlePath, kink: int, left: str) -> PuzzlePath:
    steps = list(p.steps)
    steps[kink:kink + 2] = [Step("SW", left)]
    return PuzzlePath(p.n, tuple(steps))


def legal_branches(p: PuzzlePath) -> list[tuple[Branch, PuzzlePath]]:
    """
    The continuations of a valid, non-final path, in deterministic order:
    the forced one, or (interesting case) equivariant, shift0, shift1, topk.
    """
    pos = next_fill_position(p)
    if pos.kind == "done":
        return []
    kink = p.kink_index()
    klabel = p.steps[kink].label
    if pos.kind == "bottom":
        blabel = p.steps[kink + 1].label
        key = (klabel, blabel)
        if key not in TRIANGLE:
            raise ValueError(f"unfillable bottom triangle {key} at {pos}")
        q = _apply_triangle(p, kink, TRIANGLE[key])
        assert is_valid(q), f"forced triangle at {pos} broke the path: {validate_path(q)}"
        return [(Branch("triangle", pos, (TRIANGLE[key],)), q)]

    slabel = p.steps[kink + 1].label
    key = (klabel, slabel)
    if key in BORING:
        upper, lower = BORING[key]
        q = _apply_rhombus(p, kink, upper, lower)
        assert is_valid(q), f"forced rhombus at {pos} broke the path: {validate_path(q)}"
        return [(Branch("boring", pos, (upper, lower)), q)]
    if key != ("1", "0"):
        raise ValueError(f"unfillable rhombus {key} at {pos}")

    out = []
    for kind, (upper, lower), _mid in INTERESTING:
        q = _apply_rhombus(p, kink, upper, lower)
        if kind == "equivariant":
            assert is_valid(q), \
                f"equivariant continuation at {pos} broke the path: {validate_path(q)}"
            out.append((Branch(kind, pos, (upper, lower)), q))
        elif is_valid(q):
            out.append((Branch(kind, pos, (upper, lower)), q))
    kinds = {b.kind for b, _ in out}
    assert kinds & {"shift0", "shift1"}, f"no shift continuation at {pos}"
    assert (("topk" in kinds) == ({"shift0", "shift1"} <= kinds)), \
        f"topk legality out of step with the shifts at {pos}"
    return out


def branch_weight(theory: Theory, branch: Branch, n: int):
    """
    Weight of one branch at rhombus window (i, j), as a Poly (cohomology)
    or LPoly (K-theory).  Forced pieces weigh 1 in every theory.
    """
    coh = not theory.k_theory
    one = Poly.const(n, 1) if coh else LPoly.const(n, 1)
    if branch.kind in ("triangle", "boring"):
        return one
    i, j = branch.pos.i, branch.pos.j

    def e_ij(coef=1):
        exp = [0] * n
        exp[i - 1] += 1
        exp[j - 1] -= 1
        return LPoly.exp(n, exp, coef)

    if branch.kind == "equivariant":
        if theory == Theory.H:
            return Poly.zero(n)
        if theory == Theory.HT:
            return Poly.y(n, j) - Poly.y(n, i)
        if theory == Theory.K:
            return LPoly.zero(n)
        return LPoly.const(n, 1) - e_ij()
    if branch.kind in ("shift0", "shift1"):
        return e_ij() if theory == Theory.KT else one
    if branch.kind == "topk":
        if theory == Theory.H or theory == Theory.HT:
            return Poly.zero(n) if coh else LPoly.zero(n)
        if theory == Theory.K:
            return LPoly.const(n, -1)
        return e_ij(-1)
    raise ValueError(branch.kind)


_PRUNED = {
    Theory.H: {"equivariant", "topk"},
    Theory.HT: {"topk"},
    Theory.K: {"equivariant"},
    Theory.KT: set(),
}


def _run(p: PuzzlePath, prune: set[str]):
    """Yield (branch list, final path) for every completed run below p."""
    stack = [(p, [])]
    while stack:
        path, taken = stack.pop()
        branches = legal_branches(path)
        if not branches:
            yield taken, path
            continue
        for br, q in reversed(branches):
            if br.kind in prune:
                continue
            stack.append((q, taken + [br]))


def structure_constants(theory: Theory, mu: Word, nu: Word) -> dict:
    """
    All nonzero coefficients of the product expansion for the pair (mu, nu),
    keyed by the boundary word read off each complete run.  An unreachable
    boundary pair yields the empty dict.
    """
    p = initial_path(mu, nu)
    if not is_valid(p):
        return {}
    n = mu.n
    zero = Poly.zero(n) if not theory.k_theory else LPoly.zero(n)
    out: dict[str, object] = {}
    threads = _thread_count()
    if threads > 1:
        chunks = _parallel_runs(p, _PRUNED[theory], threads)
    else:
        chunks = [_run(p, _PRUNED[theory])]
    for runs in chunks:
        for taken, final in runs:
            w = zero + (Poly.const(n, 1) if not theory.k_theory else LPoly.const(n, 1))
            for br in taken:
                w = w * branch_weight(theory, br, n)
            lam = str(final_path_word(final))
            out[lam] = out.get(lam, zero) + w
    return {lam: v for lam, v in out.items() if not v.is_zero()}


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("PUZZLE_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_runs(p: PuzzlePath, prune: set[str], threads: int):
    """Split the search at the root's first branch point, preserving order."""
    tops = [(q, [br]) for br, q in legal_branches(p) if br.kind not in prune]

    def expand(item):
        q, taken = item
        return [(taken + t, f) for t, f in _run(q, prune)]

    if not tops:
        return []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(expand, tops))


def count_puzzles(theory: Theory, mu: Word, nu: Word, lam: Word | None = None) -> int:
    return len(enumerate_puzzles(mu, nu, lam=lam, theory=theory))


def _puzzle_from_run(mu: Word, nu: Word, taken, final: PuzzlePath) -> Puzzle:
    n = mu.n
    rhombi = []
    bottoms = []
    # replay the run to recover the right-side labels each piece replaced
    p = initial_path(mu, nu)
    for br in taken:
        kink = p.kink_index()
        klabel = p.steps[kink].label
        if br.kind == "triangle":
            blabel = p.steps[kink + 1].label
            bottoms.append((br.pos.c, TrianglePlacement(klabel, blabel, br.new_labels[0])))
            p = _apply_triangle(p, kink, br.new_labels[0])
        else:
            slabel = p.steps[kink + 1].label
            upper, lower = br.new_labels
            if br.kind == "boring":
                mid = BORING_MID.get((klabel, slabel))
            else:
                mid = dict((k, m) for k, _l, m in INTERESTING)[br.kind]
            rhombi.append(((br.pos.i, br.pos.j),
                           RhombusPlacement(br.kind, (klabel, slabel), (upper, lower), mid)))
            p = _apply_rhombus(p, kink, upper, lower)
    return Puzzle(n, final_path_word(final), mu, nu,
                  tuple(sorted(rhombi)), tuple(sorted(bottoms)))


def enumerate_puzzles(mu: Word, nu: Word, lam: Word | None = None,
                      theory: Theory | None = None) -> list[Puzzle]:
    """
    Every completed puzzle for (mu, nu), optionally restricted to a given
    boundary word lam, pruned to branches of nonzero weight when a theory
    is given.
    """
    p = initial_path(mu, nu)
    if not is_valid(p):
        return []
    prune = _PRUNED[theory] if theory is not None else set()
    out = []
    for taken, final in _run(p, prune):
        pz = _puzzle_from_run(mu, nu, taken, final)
        if lam is None or pz.lam == lam:
            out.append(pz)
    return out


def puzzle_degree_balance(pz: Puzzle) -> tuple[int, int]:
    """
    Both sides of the degree bookkeeping identity
    |nu| + #equivariant = |lam| + |mu| + #topk.
    """
    lhs = inversions(pz.nu) + pz.count("equivariant")
    rhs = inversions(pz.lam) + inversions(pz.mu) + pz.count("topk")
    return lhs, rhs


# -- degeneration traces ---------------------------------------------------

@dataclass
class TraceNode:
    path: PuzzlePath
    pos: FillPos
    branch: str | None          # branch taken to arrive here (None at root)
    dots: DotSet
    rank: IntervalRankMatrix
    essential: tuple[tuple[int, int], ...]
    codim: int
    children: list["TraceNode"] = field(default_factory=list)

    def leaves(self):
        if not self.children:
            yield self
        else:
            for c in self.children:
                yield from c.leaves()


def trace(mu: Word, nu: Word) -> TraceNode:
    """The full degeneration tree for (mu, nu), annotated geometrically."""
    from .intervalrank import essential_set
    from .pinkdots import path_codim, path_to_rank

    p = initial_path(mu, nu)
    bad = validate_path(p)
    if bad:
        raise ValueError(f"no runs for this boundary pair: {bad}")

    def node(path, branch):
        d, r = path_to_rank(path)
        return TraceNode(path, next_fill_position(path), branch, d, r,
                         tuple(sorted(essential_set(d))), path_codim(path))

    root = node(p, None)
    stack = [(root, p)]
    while stack:
        tn, path = stack.pop()
        for br, q in legal_branches(path):
            child = node(q, br.kind)
            tn.children.append(child)
            stack.append((child, q))
    return root
