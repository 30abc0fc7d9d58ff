import os

from puzzlecalc.board import initial_path, is_valid
from puzzlecalc.filling import (Theory, count_puzzles, enumerate_puzzles,
                                legal_branches, puzzle_degree_balance,
                                structure_constants, trace)
from puzzlecalc.poly import LPoly, Poly, eval_at_one
from puzzlecalc.words import all_words, parse_word


MU = parse_word("0101")
NU = parse_word("1010")


def test_h_constants():
    h = structure_constants(Theory.H, MU, NU)
    assert h == {"0110": Poly.const(4, 1), "1001": Poly.const(4, 1)}


def test_ht_constants():
    ht = structure_constants(Theory.HT, MU, NU)
    assert ht == {"0110": Poly.const(4, 1), "1001": Poly.const(4, 1),
                  "1010": Poly.y(4, 4) - Poly.y(4, 1)}


def test_k_constants():
    k = structure_constants(Theory.K, MU, NU)
    assert k == {"0110": LPoly.const(4, 1), "1001": LPoly.const(4, 1),
                 "0101": LPoly.const(4, -1)}


def test_kt_specializes_to_both():
    kt = structure_constants(Theory.KT, MU, NU)
    k = structure_constants(Theory.K, MU, NU)
    ht = structure_constants(Theory.HT, MU, NU)
    assert {lam for lam in kt} >= set(k) | set(ht)
    for lam, c in kt.items():
        assert eval_at_one(c) == eval_at_one(k.get(lam, LPoly.zero(4)))
    assert kt["0101"] == LPoly.exp(4, (1, 0, 0, -1), -1)


def test_identity_product():
    w = parse_word("0011")
    h = structure_constants(Theory.H, w, w)
    assert h == {"0011": Poly.const(4, 1)}


def test_unreachable_pair_is_empty():
    # nu strictly below mu leaves nothing to expand
    mu = parse_word("1100")
    nu = parse_word("0011")
    assert structure_constants(Theory.H, mu, nu) == {}


def test_puzzle_counts():
    assert count_puzzles(Theory.KT, MU, NU) == 6
    assert count_puzzles(Theory.H, MU, NU) == 2
    by_lam = {}
    for pz in enumerate_puzzles(MU, NU):
        by_lam[pz.lam] = by_lam.get(pz.lam, 0) + 1
    assert {str(l): c for l, c in by_lam.items()} == \
        {"1010": 2, "1001": 2, "0110": 1, "0101": 1}


def test_branch_order_is_deterministic():
    # at an interesting position: equivariant, shift0, shift1, topk
    root = trace(parse_word("010"), parse_word("100"))
    kinds = [c.branch for c in root.children[0].children]
    assert kinds[0] == "equivariant"
    assert all(k in ("equivariant", "shift0", "shift1", "topk") for k in kinds)
    assert kinds == sorted(kinds, key=["equivariant", "shift0",
                                       "shift1", "topk"].index)


def test_topk_requires_both_shifts():
    for n in range(1, 5):
        for k in range(n + 1):
            for mu in all_words(n, k):
                for nu in all_words(n, k):
                    p = initial_path(mu, nu)
                    if not is_valid(p):
                        continue
                    stack = [p]
                    while stack:
                        q = stack.pop()
                        brs = legal_branches(q)
                        kinds = {b.kind for b, _ in brs}
                        if "topk" in kinds:
                            assert {"shift0", "shift1"} <= kinds
                        if "equivariant" in kinds:
                            assert kinds & {"shift0", "shift1"}
                        stack.extend(child for _, child in brs)


def test_degree_balance_on_small_puzzles():
    for n in range(1, 5):
        for k in range(n + 1):
            for mu in all_words(n, k):
                for nu in all_words(n, k):
                    for pz in enumerate_puzzles(mu, nu):
                        lhs, rhs = puzzle_degree_balance(pz)
                        assert lhs == rhs


def test_threading_does_not_change_output():
    single = structure_constants(Theory.KT, MU, NU)
    os.environ["PUZZLE_THREADS"] = "4"
    try:
        multi = structure_constants(Theory.KT, MU, NU)
    finally:
        del os.environ["PUZZLE_THREADS"]
    assert single == multi


def test_enumerate_with_lambda_filter():
    assert len(enumerate_puzzles(MU, NU, lam=parse_word("1001"))) == 2
    one_triangle_only = [pz for pz in enumerate_puzzles(MU, NU, lam=parse_word("1001"))
                         if pz.count("equivariant") == 0 and pz.count("topk") == 0]
    assert len(one_triangle_only) == 1
