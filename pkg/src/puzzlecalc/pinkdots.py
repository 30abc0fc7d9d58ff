"""
Pink rays and dots: reading an interval rank matrix off a lattice path.

Rays shoot out of certain path edges; pairing a SW-pointing ray of NE/SW
coordinate i with a NW-pointing ray of NW/SE coordinate j marks a dot on
the horizontal edge (i, j), and likewise NE with SE rays on the right of
the path.  The resulting DotSet determines the interval rank matrix of the
stratum the path tracks through the degeneration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import PuzzlePath, validate_path
from .intervalrank import DotSet, IntervalRankMatrix, rank_from_dots


@dataclass(frozen=True)
class Ray:
    direction: str   # "SW", "NW", "SE", "NE"
    coord: int       # i for SW/NE rays, j for NW/SE rays
    source: int      # step index, or -1 for an off-path bottom edge


def place_rays(p: PuzzlePath) -> list[Ray]:
    """
    All rays of a valid path.

    Left of the path: every SE 0 sends a ray SW (coordinate i); every SW R
    and bottom 0 sends a ray NW (coordinate j); a kink R or K additionally
    puts a NW ray on the first SW 1 (or bottom 1) after it.  Right of the
    path: every SW 0 sends a ray SE; a kink 1 with a SW 0 above it sends a
    ray NE; off-path bottom edges just right of the path supply the
    remaining NE rays.
    """
    n = p.n
    verts = p.vertices()
    kink = p.kink_index()
    rays = []
    for idx, s in enumerate(p.steps):
        a0, b0 = verts[idx]
        a1, b1 = verts[idx + 1]
        if s.dir == "SE" and s.label == "0":
            rays.append(Ray("SW", b1, idx))
        elif s.dir == "SW":
            j = b0 + n - a0
            if s.label == "R":
                rays.append(Ray("NW", j, idx))
            elif s.label == "0":
                rays.append(Ray("SE", j, idx))
        elif s.dir == "W" and s.label == "0":
            rays.append(Ray("NW", b0, idx))

    if kink is not None:
        klabel = p.steps[kink].label
        _, kb = verts[kink + 1]
        if klabel in ("R", "K"):
            rays.append(Ray("SW", kb, kink))
            for idx in range(kink + 1, len(p.steps)):
                s = p.steps[idx]
                if s.label == "1":
                    a0, b0 = verts[idx]
                    j = b0 + n - a0 if s.dir == "SW" else b0
                    rays.append(Ray("NW", j, idx))
                    break
            else:
                raise ValueError("kink R/K with no 1 below it")
        elif klabel == "1":
            if any(s.dir == "SW" and s.label == "0" for s in p.steps[:kink]):
                rays.append(Ray("NE", kb, kink))

    n_se = sum(1 for r in rays if r.direction == "SE")
    n_ne = sum(1 for r in rays if r.direction == "NE")
    west = [verts[idx][1] for idx, s in enumerate(p.steps) if s.dir == "W"]
    c_max = max(west) if west else 0
    for c in range(c_max + 1, c_max + 1 + (n_se - n_ne)):
        rays.append(Ray("NE", c, -1))
    return rays


def pair_dots(p: PuzzlePath, rays: list[Ray]) -> DotSet:
    """
    The unique non-crossing pairing of the rays.

    The kink's ray is resolved first: a kink 0 or R pairs with the first NW
    ray strictly below it along the path; a kink K skips that ray and takes
    the second; a kink 1 pairs its NE ray with the SE ray of the nearest
    SW 0 above it.  Everything remaining is paired off by sorting both sides
    of each left/right family by their coordinate.
    """
    kink = p.kink_index()
    klabel = p.steps[kink].label if kink is not None else None
    sw = [r for r in rays if r.direction == "SW"]
    nw = [r for r in rays if r.direction == "NW"]
    ne = [r for r in rays if r.direction == "NE"]
    se = [r for r in rays if r.direction == "SE"]
    dots = []

    if kink is not None and klabel in ("0", "R", "K"):
        kray = next(r for r in sw if r.source == kink)
        below = sorted((r for r in nw if r.source > kink), key=lambda r: r.source)
        want = 2 if klabel == "K" else 1
        if len(below) < want:
            raise ValueError(f"kink {klabel} lacks a NW ray partner below")
        partner = below[want - 1]
        dots.append((kray.coord, partner.coord))
        sw.remove(kray)
        nw.remove(partner)
    elif kink is not None and klabel == "1":
        kray = [r for r in ne if r.source == kink]
        if kray:
            above = sorted((r for r in se if r.source < kink), key=lambda r: r.source)
            if not above:
                raise ValueError("kink 1 has a NE ray but no SE ray above")
            partner = above[-1]
            dots.append((kray[0].coord, partner.coord))
            ne.remove(kray[0])
            se.remove(partner)

    for left, right in ((sw, nw), (ne, se)):
        if len(left) != len(right):
            raise ValueError(
                f"unbalanced rays: {len(left)} vs {len(right)} on one side")
        for a, b in zip(sorted(r.coord for r in left),
                        sorted(r.coord for r in right)):
            dots.append((a, b))

    for (i, j) in dots:
        if i > j:
            raise ValueError(f"dot ({i},{j}) below the diagonal")
    return DotSet(p.n, frozenset(dots))


def path_to_rank(p: PuzzlePath) -> tuple[DotSet, IntervalRankMatrix]:
    bad = validate_path(p)
    if bad:
        raise ValueError(f"invalid path: {bad}")
    d = pair_dots(p, place_rays(p))
    return d, rank_from_dots(d)


def path_codim(p: PuzzlePath) -> int:
    """
    Codimension of the path's stratum inside its Richardson envelope,
    computed purely from label counts along the path.

    Base: pairs of a SW R occurring before a SW 0.  Kink corrections:
      kink 1 with a SW 0 above: SW 0s below the kink (the last SW 0 above
        is consumed by the kink's own dot, so its base pairs drop out);
      kink 1 without: nothing added;
      kink 0: SW Rs above the kink, plus SW 0s below the first bottom 0
        below the kink when that precedes any SW R (a SW R cut is consumed
        by the kink's dot and its base pairs cancel);
      kink R: SW Rs above the kink, plus SW 0s below the first 1 below it;
      kink K: as for R, plus one for the crossing at the skipped ray.
    """
    steps = p.steps
    kink = p.kink_index()

    base = 0
    rs = 0
    for s in steps:
        if s.dir == "SW":
            if s.label == "R":
                rs += 1
            elif s.label == "0":
                base += rs
    if kink is None:
        return base

    klabel = steps[kink].label
    above = steps[:kink]
    below = steps[kink + 1:]
    r_above = sum(1 for s in above if s.dir == "SW" and s.label == "R")
    extra = 0
    if klabel == "1":
        last_zero = None
        for idx, s in enumerate(above):
            if s.dir == "SW" and s.label == "0":
                last_zero = idx
        if last_zero is not None:
            extra += sum(1 for s in below if s.dir == "SW" and s.label == "0")
    elif klabel == "0":
        extra += r_above
        cut = None
        cut_is_bottom = False
        for idx, s in enumerate(below):
            if s.dir == "SW" and s.label == "R":
                cut = idx
                break
            if s.dir == "W" and s.label == "0":
                cut, cut_is_bottom = idx, True
                break
        if cut is not None and cut_is_bottom:
            extra += sum(1 for s in below[cut + 1:] if s.dir == "SW" and s.label == "0")
    elif klabel in ("R", "K"):
        extra += r_above
        cut = None
        for idx, s in enumerate(below):
            if s.label == "1":
                cut = idx
                break
        if cut is not None:
            extra += sum(1 for s in below[cut + 1:] if s.dir == "SW" and s.label == "0")
        if klabel == "K":
            extra += 1
    return base + extra
