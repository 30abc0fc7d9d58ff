"""
The triangular board, lattice paths across it, and completed puzzles.

Vertices v(a, b) with 0 <= b <= a <= n sit in row a; the apex is v(0, 0).
A path runs from the apex to the bottom-left corner v(n, 0) using three step
kinds: SE (an edge written \\), SW (written /), and W along the bottom row
(written --).  Edge coordinates: the horizontal edge at v(a, b-1)-v(a, b)
carries the window (i, j) = (b, b + n - a); a \\ step ending at v(a, b)
preserves the NE/SW coordinate i = b; a / step starting at v(a, b) preserves
the NW/SE coordinate j = b + n - a; bottom edge c joins v(n, c-1)-v(n, c).

Labels are "0", "1", "R", "K".  The kink is the last SE step; boundary edges
carry only 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word

Label = str


@dataclass(frozen=True)
class Step:
    dir: str  # "SE", "SW", "W"
    label: Label

    def __post_init__(self):
        if self.dir not in ("SE", "SW", "W"):
            raise ValueError(f"bad direction {self.dir!r}")
        if self.label not in ("0", "1", "R", "K"):
            raise ValueError(f"bad label {self.label!r}")


@dataclass(frozen=True)
class PuzzlePath:
    n: int
    steps: tuple[Step, ...]

    def vertices(self) -> list[tuple[int, int]]:
        """Start vertex of each step, plus the final vertex."""
        out = [(0, 0)]
        a, b = 0, 0
        for s in self.steps:
            if s.dir == "SE":
                a, b = a + 1, b + 1
            elif s.dir == "SW":
                a, b = a + 1, b
            else:
                if a != self.n or b < 1:
                    raise ValueError("west step off the bottom row")
                b -= 1
            out.append((a, b))
        if (a, b) != (self.n, 0):
            raise ValueError(f"path ends at v({a},{b}), not v({self.n},0)")
        return out

    def kink_index(self) -> int | None:
        """Index of the last SE step, None once the path is final."""
        for idx in range(len(self.steps) - 1, -1, -1):
            if self.steps[idx].dir == "SE":
                return idx
        return None

    def is_final(self) -> bool:
        return self.kink_index() is None


def initial_path(mu: Word, nu: Word) -> PuzzlePath:
    """Down the NE boundary reading mu, then west along the bottom against nu."""
    if mu.n != nu.n:
        raise ValueError("word lengths differ")
    if mu.k != nu.k:
        raise ValueError("words have different numbers of 1s")
    steps = [Step("SE", str(b)) for b in mu.bits]
    steps += [Step("W", str(b)) for b in reversed(nu.bits)]
    return PuzzlePath(mu.n, tuple(steps))


def final_path_word(p: PuzzlePath) -> Word:
    """
    Read the NW boundary word off a final path: position q of the word is
    the label at depth n + 1 - q, i.e. the path is read from the bottom up.
    """
    if not p.is_final():
        raise ValueError("path still has SE steps")
    return Word(tuple(int(s.label) for s in reversed(p.steps)))


def validate_path(p: PuzzlePath) -> list[str]:
    """
    All violations of the path well-formedness conditions (empty if valid).

    1. boundary edges carry only 0/1;
    2. K appears only on the kink;
    3. among the first t (all-SE) steps there are at least as many 0s as
       among the last t (bottom) steps;
    4. #(SE 0) equals #(SW R) plus #(bottom 0);
    5. after a kink R or K, some SW 1 or bottom 1 occurs before any SW R or
       bottom 0 (and such a step must exist);
    6. after a kink 0 or K, some SW R or bottom 0 occurs before any bottom 1
       (and such a step must exist);
    7. after a kink K, a SW 1 comes before any SW R or bottom 0, which in
       turn comes before any bottom 1.
    """
    bad = []
    try:
        verts = p.vertices()
    except ValueError as e:
        return [f"geometry: {e}"]
    kink = p.kink_index()

    for idx, s in enumerate(p.steps):
        a, b = verts[idx]
        on_boundary = (s.dir == "SE" and a == b) or (s.dir == "SW" and b == 0) or s.dir == "W"
        if on_boundary and s.label not in ("0", "1"):
            bad.append(f"1: boundary step {idx} carries {s.label}")
        if s.label == "K" and idx != kink:
            bad.append(f"2: K on non-kink step {idx}")

    lead = 0
    while lead < len(p.steps) and p.steps[lead].dir == "SE":
        lead += 1
    for t in range(1, lead + 1):
        head_zeros = sum(1 for s in p.steps[:t] if s.label == "0")
        tail = p.steps[len(p.steps) - t:]
        tail_zeros = sum(1 for s in tail if s.dir == "W" and s.label == "0")
        if head_zeros < tail_zeros:
            bad.append(f"3: first {t} SE steps have {head_zeros} 0s "
                       f"but the last {t} steps have {tail_zeros} bottom 0s")
            break

    se0 = sum(1 for s in p.steps if s.dir == "SE" and s.label == "0")
    swr = sum(1 for s in p.steps if s.dir == "SW" and s.label == "R")
    w0 = sum(1 for s in p.steps if s.dir == "W" and s.label == "0")
    if se0 != swr + w0:
        bad.append(f"4: #SE0={se0} but #SWR+#W0={swr + w0}")

    if kink is not None:
        klabel = p.steps[kink].label
        after = p.steps[kink + 1:]

        def first_index(pred):
            for i, s in enumerate(after):
                if pred(s):
                    return i
            return None

        one = first_index(lambda s: s.label == "1")  # SW 1 or bottom 1
        ray = first_index(lambda s: (s.dir == "SW" and s.label == "R")
                          or (s.dir == "W" and s.label == "0"))
        sw1 = first_index(lambda s: s.dir == "SW" and s.label == "1")
        w1 = first_index(lambda s: s.dir == "W" and s.label == "1")

        if klabel in ("R", "K"):
            if one is None or (ray is not None and ray < one):
                bad.append("5: no 1 after the kink before an R or bottom 0")
        if klabel in ("0", "K"):
            if ray is None or (w1 is not None and w1 < ray):
                bad.append("6: no R or bottom 0 after the kink before a bottom 1")
        if klabel == "K":
            if sw1 is None or ray is None or not (sw1 < ray):
                bad.append("7: kink K needs a SW 1 strictly before an R or bottom 0")
            elif w1 is not None and w1 < ray:
                bad.append("7: kink K needs its R or bottom 0 before any bottom 1")
    return bad


def is_valid(p: PuzzlePath) -> bool:
    return not validate_path(p)


# -- where the next piece goes --------------------------------------------

@dataclass(frozen=True)
class FillPos:
    kind: str  # "rhombus", "bottom", "done"
    i: int = 0
    j: int = 0
    c: int = 0

    def __str__(self):
        if self.kind == "rhombus":
            return f"rhombus({self.i},{self.j})"
        if self.kind == "bottom":
            return f"bottom({self.c})"
        return "done"


def next_fill_position(p: PuzzlePath) -> FillPos:
    """
    The unique position the next piece occupies: the rhombus or bottom
    triangle just left of the kink.
    """
    kink = p.kink_index()
    if kink is None:
        return FillPos("done")
    verts = p.vertices()
    a, b = verts[kink + 1]  # end of the kink edge
    if kink + 1 >= len(p.steps):
        raise ValueError("kink has no following step")
    nxt = p.steps[kink + 1]
    if nxt.dir == "W":
        return FillPos("bottom", c=b)
    if nxt.dir == "SW":
        return FillPos("rhombus", i=b, j=b + p.n - a)
    raise ValueError("two consecutive SE steps cannot both be the kink")


# -- completed puzzles -----------------------------------------------------

@dataclass(frozen=True)
class RhombusPlacement:
    kind: str        # "boring", "equivariant", "shift0", "shift1", "topk"
    right: tuple[Label, Label]  # (upper \\, lower /) before the piece
    left: tuple[Label, Label]   # (upper /, lower \\) after the piece
    mid: Label | None           # horizontal edge when the piece splits in two


@dataclass(frozen=True)
class TrianglePlacement:
    diag: Label   # the \\ edge (old kink)
    base: Label   # the bottom edge
    left: Label   # the new / edge


@dataclass(frozen=True)
class Puzzle:
    n: int
    lam: Word
    mu: Word
    nu: Word
    rhombi: tuple[tuple[tuple[int, int], RhombusPlacement], ...]
    bottoms: tuple[tuple[int, TrianglePlacement], ...]

    def rhombus_at(self, i: int, j: int) -> RhombusPlacement:
        return dict(self.rhombi)[(i, j)]

    def count(self, kind: str) -> int:
        return sum(1 for _, r in self.rhombi if r.kind == kind)


def read_boundary(pz: Puzzle) -> tuple[Word, Word, Word]:
    """(lambda, mu, nu) of a completed puzzle; errors if positions are missing."""
    n = pz.n
    want_rhombi = {(i, j) for i in range(1, n) for j in range(i + 1, n + 1)}
    if {pos for pos, _ in pz.rhombi} != want_rhombi:
        raise ValueError("incomplete puzzle: missing rhombus placements")
    if {c for c, _ in pz.bottoms} != set(range(1, n + 1)):
        raise ValueError("incomplete puzzle: missing bottom triangles")
    return pz.lam, pz.mu, pz.nu


def _edge_labels(pz: Puzzle) -> dict:
    """
    Label of every edge in the board, reconstructed from the boundary and
    the placements.  Keys: ("H", a, b), ("SE", a, b), ("SW", a, b) where
    (a, b) is the upper vertex of the edge.
    """
    n = pz.n
    edges = {}
    for d in range(1, n + 1):
        edges[("SE", d - 1, d - 1)] = str(pz.mu[d])
    for a in range(n):
        edges[("SW", a, 0)] = str(pz.lam[n - a])
    for c in range(1, n + 1):
        edges[("H", n, c)] = str(pz.nu[c])
    rh = dict(pz.rhombi)
    bt = dict(pz.bottoms)
    for (i, j), r in rh.items():
        # the rhombus occupying window (i, j): upper vertex row a with
        # j = i + n - a, columns b = i - 1 (left side) and b = i (right side)
        a = i + n - j
        edges[("SW", a - 1, i - 1)] = r.left[0]
        edges[("SE", a, i - 1)] = r.left[1]
        edges[("SE", a - 1, i - 1)] = r.right[0]
        edges[("SW", a, i)] = r.right[1]
        if r.mid is not None:
            edges[("H", a, i)] = r.mid
    for c, t in bt.items():
        edges[("SW", n - 1, c - 1)] = t.left
        edges[("SE", n - 1, c - 1)] = t.diag
    return edges


def ascii_render(pz: Puzzle) -> str:
    """
    One text row per board row: the zigzag of / and \\ edge labels, then the
    horizontal edge labels underneath (blank where there is no edge).
    """
    n = pz.n
    edges = _edge_labels(pz)
    lines = []
    for a in range(1, n + 1):
        indent = "  " * (n - a)
        zig = []
        for b in range(a):
            zig.append("/" + edges[("SW", a - 1, b)])
            zig.append("\\" + edges[("SE", a - 1, b)])
        lines.append(indent + " ".join(zig))
        horiz = []
        for b in range(1, a + 1):
            lab = edges.get(("H", a, b))
            horiz.append("--" if lab is None else f"-{lab}")
        lines.append(indent + "  " + "    ".join(horiz))
    return "\n".join(lines)


_PIECE_FILL = {"equivariant": "#fbb", "topk": "#bbf", "boring": None,
               "shift0": None, "shift1": None}


def svg_render(pz: Puzzle) -> str:
    """A simple SVG picture: the triangular grid with edge labels, shaded
    equivariant and K pieces."""
    n = pz.n
    s = 60.0
    h = s * 3 ** 0.5 / 2

    def xy(a, b):
        # v(a, b): row a down from apex, b steps SE of the NW boundary
        x = (n - a) * s / 2 + b * s
        y = a * h
        return x + 10, y + 10

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{n * s + 20:.0f}" '
             f'height="{n * h + 20:.0f}" font-size="12" text-anchor="middle">']
    rh = dict(pz.rhombi)
    for (i, j), r in sorted(rh.items()):
        fill = _PIECE_FILL.get(r.kind)
        if fill:
            a = i + n - j
            pts = [xy(a - 1, i - 1), xy(a, i), xy(a + 1, i), xy(a, i - 1)]
            poly = " ".join(f"{x:.1f},{y:.1f}" for x, y in pts)
            parts.append(f'<polygon points="{poly}" fill="{fill}" stroke="none"/>')
    edges = _edge_labels(pz)
    for (kind, a, b), lab in sorted(edges.items()):
        if kind == "H":
            p1, p2 = xy(a, b - 1), xy(a, b)
        elif kind == "SE":
            p1, p2 = xy(a, b), xy(a + 1, b + 1)
        else:
            p1, p2 = xy(a, b), xy(a + 1, b)
        parts.append(f'<line x1="{p1[0]:.1f}" y1="{p1[1]:.1f}" '
                     f'x2="{p2[0]:.1f}" y2="{p2[1]:.1f}" stroke="#444"/>')
        mx, my = (p1[0] + p2[0]) / 2, (p1[1] + p2[1]) / 2
        parts.append(f'<text x="{mx:.1f}" y="{my - 2:.1f}">{lab}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
