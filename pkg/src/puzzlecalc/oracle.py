"""
Independent cross-checks for the degeneration engine.

The centrepiece is a classical Littlewood-Richardson counter: structure
constants in ordinary cohomology must equal the number of column-strict
skew tableaux with lattice reading word.  It shares no code with the
puzzle engine, so agreement is meaningful.  verify_suite bundles this with
the geometric and combinatorial invariant sweeps used by the test suite
and the CLI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import filling, intervalrank as ir, pinkdots
from .board import PuzzlePath, Step, initial_path, is_valid
from .poly import LPoly, Poly, eval_at_one, lowest_form, y_to_zero
from .words import Word, all_words, inversions, word_to_partition


def lr_count(outer, inner, content) -> int:
    """
    Number of Littlewood-Richardson tableaux of shape outer/inner with the
    given content: rows weakly increase, columns strictly increase, and the
    right-to-left, top-to-bottom reading word is a lattice word.
    """
    outer = list(outer)
    inner = list(inner) + [0] * (len(outer) - len(inner))
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    nrows = len(outer)
    nvals = len(content)
    remaining = list(content)
    # grid[r][c] for inner[r] <= c < outer[r]
    grid = [[0] * outer[r] for r in range(nrows)]
    total = 0

    # rows are filled right to left, so the lattice condition can be checked
    # in reading order as each cell is placed
    def fill(r: int, c: int, counts_prefix):
        nonlocal total
        if r == nrows:
            total += 1
            return
        if c < inner[r]:  # row finished, start at the right end of the next
            fill(r + 1, (outer[r + 1] - 1) if r + 1 < nrows else -1, counts_prefix)
            return
        lo = 1
        if r > 0 and inner[r - 1] <= c:
            lo = max(lo, grid[r - 1][c] + 1)  # strict increase down columns
        hi = nvals
        if c + 1 < outer[r]:
            hi = min(hi, grid[r][c + 1])  # weak increase along the row
        for v in range(hi, lo - 1, -1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts_prefix[v - 1] >= counts_prefix[v - 2]:
                continue  # lattice: never more v's than (v-1)'s so far
            grid[r][c] = v
            remaining[v - 1] -= 1
            counts_prefix[v - 1] += 1
            fill(r, c - 1, counts_prefix)
            counts_prefix[v - 1] -= 1
            remaining[v - 1] += 1
            grid[r][c] = 0

    if nrows == 0:
        return 1
    fill(0, outer[0] - 1, [0] * nvals)
    return total


def lr_oracle(lam: Word, mu: Word, nu: Word) -> int:
    """The classical count matching the triangle-only puzzle count."""
    if not (lam.n == mu.n == nu.n and lam.k == mu.k == nu.k):
        raise ValueError("words must share n and k")
    if inversions(lam) + inversions(mu) != inversions(nu):
        return 0
    return lr_count(word_to_partition(nu), word_to_partition(lam),
                    word_to_partition(mu))


# -- invariant sweeps ------------------------------------------------------

@dataclass
class Report:
    results: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, suite: str, ok: bool, detail: str = ""):
        self.results.append((suite, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.results)

    def to_json(self):
        return {"ok": self.ok,
                "suites": [{"suite": s, "ok": ok, "detail": d}
                           for s, ok, d in self.results]}

    def __str__(self):
        lines = [f"{'PASS' if ok else 'FAIL'} {s}" + (f": {d}" if d else "")
                 for s, ok, d in self.results]
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _word_pairs(n):
    for k in range(n + 1):
        ws = all_words(n, k)
        for mu in ws:
            for nu in ws:
                yield mu, nu


def _final_path(lam: Word) -> PuzzlePath:
    return PuzzlePath(lam.n, tuple(Step("SW", str(b)) for b in reversed(lam.bits)))


def _suite_pinkdots(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for mu, nu in _word_pairs(n):
            p = initial_path(mu, nu)
            if not is_valid(p):
                continue
            stack = [p]
            while stack:
                path = stack.pop()
                d, _ = pinkdots.path_to_rank(path)
                if len(d.dots) != n - mu.k:
                    bad.append(f"{mu}/{nu}: {len(d.dots)} dots, expected {n - mu.k}")
                for br, q in filling.legal_branches(path):
                    if br.kind in ("triangle", "boring"):
                        d2, _ = pinkdots.path_to_rank(q)
                        if d2 != d:
                            bad.append(f"{mu}/{nu}: forced step at {br.pos} moved the dots")
                    stack.append(q)
    report.record("pinkdots", not bad, "; ".join(bad[:3]))


def _suite_dictionary(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for mu, nu in _word_pairs(n):
            p = initial_path(mu, nu)
            if not is_valid(p):
                continue
            stack = [p]
            while stack:
                path = stack.pop()
                d, r = pinkdots.path_to_rank(path)
                if pinkdots.path_codim(path) != ir.envelope_codim(d):
                    bad.append(f"{mu}/{nu}: codim mismatch on {path.steps}")
                branches = filling.legal_branches(path)
                kinds = {br.kind: q for br, q in branches}
                if "equivariant" in kinds:
                    dsw, rsw = pinkdots.path_to_rank(kinds["equivariant"])
                    for kind in ("shift0", "shift1"):
                        if kind in kinds:
                            dch, _ = pinkdots.path_to_rank(kinds[kind])
                            if dsw not in ir.covers(dch):
                                bad.append(
                                    f"{mu}/{nu}: sweep does not cover the {kind} child")
                    if "topk" in kinds:
                        d0, r0 = pinkdots.path_to_rank(kinds["shift0"])
                        d1, r1 = pinkdots.path_to_rank(kinds["shift1"])
                        dk, rk = pinkdots.path_to_rank(kinds["topk"])
                        if ir.irm_min(r0, r1) != rk:
                            bad.append(f"{mu}/{nu}: irm_min of shifts is not the K child")
                for _, q in branches:
                    stack.append(q)
    report.record("dictionary", not bad, "; ".join(bad[:3]))


def _suite_inversion(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for mu, nu in _word_pairs(n):
            for pz in filling.enumerate_puzzles(mu, nu):
                lhs, rhs = filling.puzzle_degree_balance(pz)
                if lhs != rhs:
                    bad.append(f"{pz.lam}/{pz.mu}/{pz.nu}: {lhs} != {rhs}")
    report.record("inversion", not bad, "; ".join(bad[:3]))


def _suite_hall(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for size in range(n + 1):
            for d in ir.all_dotsets(n, size):
                for w in all_words(n, n - size):
                    if ir.fixed_point_in(d, w) != ir.matching_exists(d, w):
                        bad.append(f"n={n} {d} {w}")
    report.record("hall", not bad, "; ".join(bad[:3]))


def _suite_essential(max_n: int, seed: int, report: Report, samples: int = 1000):
    """Random matrices over a small prime: the essential rank bounds imply
    all window rank bounds."""
    p = 5
    rng = random.Random(seed)
    bad = []
    for n in range(1, max_n + 1):
        for size in range(n + 1):
            k = n - size
            for d in ir.all_dotsets(n, size):
                r = ir.rank_from_dots(d)
                ess = sorted(ir.essential_set(d))
                for _ in range(samples):
                    m = [[rng.randrange(p) for _ in range(n)] for _ in range(k)]
                    ranks = {
                        (i, j): ir.rank_of_matrix([row[i - 1:j] for row in m], p)
                        for i in range(1, n + 1) for j in range(i, n + 1)}
                    full = all(ranks[i, j] <= r.entry(i, j)
                               for i in range(1, n + 1) for j in range(i, n + 1))
                    essential = all(ranks[i, j] <= r.entry(i, j) for (i, j) in ess)
                    if full != essential:
                        bad.append(f"n={n} {d} matrix {m}")
                        break
    report.record("essential", not bad, "; ".join(bad[:2]))


def _suite_specialize(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for mu, nu in _word_pairs(n):
            kt = filling.structure_constants(filling.Theory.KT, mu, nu)
            k = filling.structure_constants(filling.Theory.K, mu, nu)
            ht = filling.structure_constants(filling.Theory.HT, mu, nu)
            h = filling.structure_constants(filling.Theory.H, mu, nu)
            lams = set(kt) | set(k) | set(ht) | set(h)
            for lam_s in lams:
                lam = Word(tuple(int(c) for c in lam_s))
                ktc = kt.get(lam_s, LPoly.zero(n))
                kc = k.get(lam_s, LPoly.zero(n))
                htc = ht.get(lam_s, Poly.zero(n))
                hc = h.get(lam_s, Poly.zero(n))
                if eval_at_one(ktc) != eval_at_one(kc):
                    bad.append(f"{mu}/{nu}/{lam_s}: KT->K")
                d = inversions(lam) + inversions(mu) - inversions(nu)
                if d >= 0:
                    try:
                        low = lowest_form(ktc, d)
                    except ValueError:
                        bad.append(f"{mu}/{nu}/{lam_s}: KT not vanishing to order {d}")
                        continue
                    if low != htc:
                        bad.append(f"{mu}/{nu}/{lam_s}: KT->HT")
                elif htc != Poly.zero(n):
                    # below-degree terms have no ordinary cohomology limit,
                    # so the equivariant coefficient must simply be absent
                    bad.append(f"{mu}/{nu}/{lam_s}: HT coeff below degree bound")
                if Poly.const(n, y_to_zero(htc)) != hc:
                    bad.append(f"{mu}/{nu}/{lam_s}: HT->H")
    report.record("specialize", not bad, "; ".join(bad[:3]))


def _suite_commute(max_n: int, report: Report):
    bad = []
    for t in (filling.Theory.H, filling.Theory.HT, filling.Theory.K):
        for n in range(1, max_n + 1):
            table = {(str(mu), str(nu)): filling.structure_constants(t, mu, nu)
                     for mu, nu in _word_pairs(n)}
            for (mu_s, nu_s), coeffs in table.items():
                for lam_s, c in coeffs.items():
                    other = table[lam_s, nu_s].get(mu_s)
                    if other != c:
                        bad.append(f"{t.value} {lam_s},{mu_s}->{nu_s}: {c} vs {other}")
    report.record("commute", not bad, "; ".join(bad[:3]))


def _suite_lr(max_n: int, report: Report, max_k: int | None = None):
    bad = []
    for n in range(1, max_n + 1):
        for k in range(0, n + 1):
            if max_k is not None and k > max_k:
                continue
            ws = all_words(n, k)
            for mu in ws:
                for nu in ws:
                    h = filling.structure_constants(filling.Theory.H, mu, nu)
                    for lam in ws:
                        want = lr_oracle(lam, mu, nu)
                        got = h.get(str(lam), Poly.zero(n)).constant_term()
                        if want != got:
                            bad.append(f"{lam}/{mu}/{nu}: puzzle {got} vs LR {want}")
    report.record("lr", not bad, "; ".join(bad[:3]))


def _suite_boundary(max_n: int, report: Report):
    bad = []
    for n in range(1, max_n + 1):
        for mu, nu in _word_pairs(n):
            p = initial_path(mu, nu)
            if not is_valid(p):
                continue
            d, _ = pinkdots.path_to_rank(p)
            env = ir.envelope(d)
            if env != (mu, nu) or ir.envelope_codim(d) != 0:
                bad.append(f"initial {mu}/{nu}: envelope {env[0]}/{env[1]}")
        for k in range(n + 1):
            for lam in all_words(n, k):
                d, _ = pinkdots.path_to_rank(_final_path(lam))
                zeros = [pp for pp in range(1, n + 1) if lam[pp] == 0]
                want = frozenset((t + 1, z) for t, z in enumerate(zeros))
                if d.dots != want:
                    bad.append(f"final {lam}: dots {sorted(d.dots)}")
                if any(i != 1 for (i, j, _b) in ir.essential_conditions(d)):
                    bad.append(f"final {lam}: non-first-row essential condition")
    report.record("boundary", not bad, "; ".join(bad[:3]))


def _suite_covers(max_n: int, report: Report):
    """Move-generated covers match brute-force covers of the entrywise order."""
    bad = []
    for n in range(1, min(max_n, 4) + 1):
        for size in range(n + 1):
            ds = ir.all_dotsets(n, size)
            for d in ds:
                above = [e for e in ds
                         if e != d and ir.bruhat_leq(d, e)]
                brute = {e for e in above
                         if not any(f != e and f != d and ir.bruhat_leq(d, f)
                                    and ir.bruhat_leq(f, e) for f in above)}
                if ir.covers(d) != frozenset(brute):
                    bad.append(f"n={n} {d}")
    report.record("covers", not bad, "; ".join(bad[:3]))


_SUITES = {
    "pinkdots": lambda n, seed, rep: _suite_pinkdots(n, rep),
    "dictionary": lambda n, seed, rep: _suite_dictionary(n, rep),
    "inversion": lambda n, seed, rep: _suite_inversion(n, rep),
    "hall": lambda n, seed, rep: _suite_hall(n, rep),
    "essential": lambda n, seed, rep: _suite_essential(n, seed, rep),
    "specialize": lambda n, seed, rep: _suite_specialize(n, rep),
    "commute": lambda n, seed, rep: _suite_commute(n, rep),
    "lr": lambda n, seed, rep: _suite_lr(n, rep),
    "boundary": lambda n, seed, rep: _suite_boundary(n, rep),
    "covers": lambda n, seed, rep: _suite_covers(n, rep),
}


def verify_suite(max_n: int, seed: int = 0, suites=None) -> Report:
    """Run the named invariant sweeps (all by default) up to size max_n."""
    report = Report()
    names = list(_SUITES) if suites is None else list(suites)
    for name in names:
        if name not in _SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(_SUITES)}")
        _SUITES[name](max_n, seed, report)
    return report
