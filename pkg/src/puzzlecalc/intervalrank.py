"""
Interval rank matrices and their dot-set avatars.

A DotSet is a partial permutation: dots (i, j) with i <= j, at most one per
row and per column.  Its interval rank matrix records, for every window
[i, j], the generic rank (j - i + 1) minus the number of dots inside.  These
matrices index the strata cut out by bounding ranks of consecutive column
spans of a k x n matrix, and the closure order is entrywise comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .words import Word


@dataclass(frozen=True)
class DotSet:
    n: int
    dots: frozenset[tuple[int, int]]

    def __post_init__(self):
        rows = set()
        cols = set()
        for (i, j) in self.dots:
            if not (1 <= i <= j <= self.n):
                raise ValueError(f"dot ({i},{j}) outside upper triangle of size {self.n}")
            if i in rows:
                raise ValueError(f"two dots in row {i}")
            if j in cols:
                raise ValueError(f"two dots in column {j}")
            rows.add(i)
            cols.add(j)

    def sorted_dots(self) -> list[tuple[int, int]]:
        return sorted(self.dots)

    def dot_count_in(self, i: int, j: int) -> int:
        """Dots (a, b) with i <= a <= b <= j; zero for an empty window."""
        if i > j:
            return 0
        return sum(1 for (a, b) in self.dots if i <= a and b <= j)

    def __str__(self) -> str:
        return format_dots(self)


def parse_dots(s: str, n: int) -> DotSet:
    """Parse 'i1,j1;i2,j2;...' (empty string allowed) into a DotSet."""
    dots = set()
    s = s.strip()
    if s:
        for chunk in s.split(";"):
            parts = chunk.split(",")
            if len(parts) != 2:
                raise ValueError(f"bad dot {chunk!r}; expected 'i,j'")
            dots.add((int(parts[0]), int(parts[1])))
    return DotSet(n, frozenset(dots))


def format_dots(d: DotSet) -> str:
    return ";".join(f"{i},{j}" for i, j in d.sorted_dots())


@dataclass(frozen=True)
class IntervalRankMatrix:
    """Entries r_ij for 1 <= i <= j <= n, stored as rows of the upper triangle."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count mismatch")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != self.n - i + 1:
                raise ValueError(f"row {i} has wrong length")

    def entry(self, i: int, j: int) -> int:
        """r_[i,j]; empty windows (j < i) have rank 0."""
        if j < i:
            return 0
        if not (1 <= i and j <= self.n):
            raise IndexError((i, j))
        return self.rows[i - 1][j - i]

    def entries(self):
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield i, j, self.entry(i, j)

    def leq(self, other: "IntervalRankMatrix") -> bool:
        return all(v <= other.entry(i, j) for i, j, v in self.entries())

    def __str__(self) -> str:
        width = max(len(str(v)) for _, _, v in self.entries())
        lines = []
        for i in range(1, self.n + 1):
            pad = " " * ((width + 1) * (i - 1))
            lines.append(pad + " ".join(
                str(self.entry(i, j)).rjust(width) for j in range(i, self.n + 1)))
        return "\n".join(lines)


def rank_from_dots(d: DotSet) -> IntervalRankMatrix:
    rows = []
    for i in range(1, d.n + 1):
        rows.append(tuple((j - i + 1) - d.dot_count_in(i, j) for j in range(i, d.n + 1)))
    return IntervalRankMatrix(d.n, tuple(rows))


def dots_from_rank(r: IntervalRankMatrix) -> DotSet:
    """
    Invert rank_from_dots.

    Works with the dot-count form D(i,j) = (j-i+1) - r_ij (zero on empty
    windows): there is a dot at (i,j) exactly when D jumps by one against
    the three neighbouring windows [i,j-1], [i+1,j], [i+1,j-1].
    """
    n = r.n

    def dcount(i, j):
        if i > j:
            return 0
        return (j - i + 1) - r.entry(i, j)

    dots = set()
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if (dcount(i, j) == dcount(i, j - 1) + 1
                    and dcount(i, j) == dcount(i + 1, j) + 1
                    and dcount(i, j) == dcount(i + 1, j - 1) + 1):
                dots.add((i, j))
    return DotSet(n, frozenset(dots))


def is_valid_rank_matrix(r: IntervalRankMatrix) -> bool:
    try:
        d = dots_from_rank(r)
    except ValueError:
        return False
    return rank_from_dots(d) == r


def irm_min(r1: IntervalRankMatrix, r2: IntervalRankMatrix) -> IntervalRankMatrix:
    """Entrywise min; raises if the result is not itself a rank matrix."""
    if r1.n != r2.n:
        raise ValueError("size mismatch")
    rows = tuple(
        tuple(min(a, b) for a, b in zip(row1, row2))
        for row1, row2 in zip(r1.rows, r2.rows))
    out = IntervalRankMatrix(r1.n, rows)
    if not is_valid_rank_matrix(out):
        raise ValueError("entrywise min is not an interval rank matrix")
    return out


# -- essential set ---------------------------------------------------------

def essential_set(d: DotSet) -> frozenset[tuple[int, int]]:
    """
    Cells whose rank bounds imply all the others.

    Cross out everything strictly south or strictly west of each dot, then
    every cell in a dotless row or column; among surviving upper-triangular
    cells keep those with nothing surviving immediately north or east.
    """
    n = d.n
    dot_rows = {i for i, _ in d.dots}
    dot_cols = {j for _, j in d.dots}

    def survives(i, j):
        if not (1 <= i <= j <= n):
            return False
        if i not in dot_rows or j not in dot_cols:
            return False
        for (a, b) in d.dots:
            if b == j and a < i:  # strictly south of dot (a, j)
                return False
            if a == i and b > j:  # strictly west of dot (i, b)
                return False
        return True

    cells = set()
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if survives(i, j) and not survives(i - 1, j) and not survives(i, j + 1):
                cells.add((i, j))
    return frozenset(cells)


def essential_conditions(d: DotSet) -> list[tuple[int, int, int]]:
    """
    Essential cells with their rank bounds, dropping bounds no k x n matrix
    can violate (those with bound >= min(k, window length), k = n - #dots).
    """
    k = d.n - len(d.dots)
    r = rank_from_dots(d)
    out = []
    for (i, j) in sorted(essential_set(d)):
        bound = r.entry(i, j)
        if bound < min(k, j - i + 1):
            out.append((i, j, bound))
    return out


# -- closure order ---------------------------------------------------------

def embed_permutation(d: DotSet) -> tuple[int, ...]:
    """
    The dots completed to a permutation of n + k letters: dotless columns
    become the first k values, dotless rows receive the last k values, both
    filled in NW/SE order so no spurious inversions appear.
    """
    n = d.n
    k = n - len(d.dots)
    by_row = {i: j for i, j in d.dots}
    empty_cols = [c for c in range(1, n + 1) if c not in {j for _, j in d.dots}]
    empty_rows = [r for r in range(1, n + 1) if r not in by_row]
    w = [0] * (n + k)
    for idx, c in enumerate(empty_cols):
        w[idx] = c
    for r in range(1, n + 1):
        w[k + r - 1] = by_row[r] if r in by_row else 0
    for idx, r in enumerate(empty_rows):
        w[k + r - 1] = n + 1 + idx
    return tuple(w)


def _unembed(w: tuple[int, ...], n: int, k: int) -> DotSet | None:
    """Inverse of embed_permutation, or None if w is not of that shape."""
    head = w[:k]
    if list(head) != sorted(head) or any(v > n for v in head):
        return None
    dots = set()
    tail_rows = []
    for r in range(1, n + 1):
        v = w[k + r - 1]
        if v <= n:
            if v < r:
                return None  # below the diagonal
            dots.add((r, v))
        else:
            tail_rows.append(v)
    if tail_rows != sorted(tail_rows):
        return None
    if sorted({j for _, j in dots} | set(head)) != list(range(1, n + 1)):
        return None
    return DotSet(n, frozenset(dots))


def covers(d: DotSet) -> frozenset[DotSet]:
    """
    Dot sets one step up in the closure order (rank matrix covers r(d)):
    the Bruhat covers of the embedded permutation that remain embeddable.
    Seen on the dots themselves these are rectangle uncrossings and east or
    north slides, possibly jumping occupied rows or columns.
    """
    n = d.n
    k = n - len(d.dots)
    w = embed_permutation(d)
    m = n + k
    out = set()
    for i in range(m):
        for j in range(i + 1, m):
            if w[i] <= w[j]:
                continue
            if any(w[j] < w[l] < w[i] for l in range(i + 1, j)):
                continue
            v = list(w)
            v[i], v[j] = v[j], v[i]
            e = _unembed(tuple(v), n, k)
            if e is not None:
                out.add(e)
    return frozenset(out)


def bruhat_leq(d1: DotSet, d2: DotSet) -> bool:
    return rank_from_dots(d1).leq(rank_from_dots(d2))


# -- coordinate fixed points ----------------------------------------------

def fixed_point_in(d: DotSet, w: Word) -> bool:
    """Whether the coordinate k-plane of w satisfies every window rank bound."""
    if w.n != d.n:
        raise ValueError("size mismatch")
    r = rank_from_dots(d)
    ones = [0]
    for b in w.bits:
        ones.append(ones[-1] + b)
    return all(ones[j] - ones[i - 1] <= v for i, j, v in r.entries())


def matching_exists(d: DotSet, w: Word) -> bool:
    """
    Whether the dots can be matched bijectively to 0s of w, each dot (i, j)
    to a 0 in position i..j.  Augmenting-path bipartite matching.
    """
    if w.n != d.n:
        raise ValueError("size mismatch")
    zeros = [p for p in range(1, w.n + 1) if w[p] == 0]
    dots = d.sorted_dots()
    if len(dots) != len(zeros):
        return False
    adj = [[p for p in zeros if i <= p <= j] for (i, j) in dots]
    match = {}  # zero position -> dot index

    def augment(di, seen):
        for p in adj[di]:
            if p in seen:
                continue
            seen.add(p)
            if p not in match or augment(match[p], seen):
                match[p] = di
                return True
        return False

    return all(augment(di, set()) for di in range(len(dots)))


# -- Richardson envelope ---------------------------------------------------

def envelope(d: DotSet) -> tuple[Word, Word]:
    """The pair (lambda, mu): 1s of lambda in dotless rows, of mu in dotless columns."""
    dot_rows = {i for i, _ in d.dots}
    dot_cols = {j for _, j in d.dots}
    lam = Word(tuple(0 if p in dot_rows else 1 for p in range(1, d.n + 1)))
    mu = Word(tuple(0 if p in dot_cols else 1 for p in range(1, d.n + 1)))
    return lam, mu


def envelope_codim(d: DotSet) -> int:
    """Codimension inside the envelope: the number of NE/SW dot pairs."""
    return sum(1 for (a, b), (a2, b2) in combinations(sorted(d.dots), 2)
               if a < a2 and b > b2)


def shift_basic(s: frozenset[int], i: int, j: int) -> frozenset[int]:
    """Replace j by i in the set unless i is present or j is absent."""
    if i in s or j not in s:
        return s
    return (s - {j}) | {i}


# -- exact matrix rank -----------------------------------------------------

def rank_of_matrix(m, p: int | None = None) -> int:
    """Rank of an integer matrix, over Q (p None) or over GF(p)."""
    rows = [[Fraction(x) if p is None else x % p for x in row] for row in m]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = (1 / rows[rank][col]) if p is None else pow(int(rows[rank][col]), -1, p)
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(col, ncols):
                    val = rows[r][c] - factor * rows[rank][c]
                    rows[r][c] = val if p is None else val % p
        rank += 1
    return rank


def all_dotsets(n: int, size: int) -> list[DotSet]:
    """Every DotSet of the given cardinality, deterministically ordered."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out = []
    for combo in combinations(cells, size):
        rows = [i for i, _ in combo]
        cols = [j for _, j in combo]
        if len(set(rows)) == size and len(set(cols)) == size:
            out.append(DotSet(n, frozenset(combo)))
    return out
