import random

import pytest
from hypothesis import given, settings, strategies as st

from puzzlecalc.intervalrank import (DotSet, all_dotsets, bruhat_leq, covers,
                                     dots_from_rank, envelope, envelope_codim,
                                     essential_conditions, essential_set,
                                     fixed_point_in, format_dots, irm_min,
                                     is_valid_rank_matrix, matching_exists,
                                     parse_dots, rank_from_dots,
                                     rank_of_matrix)
from puzzlecalc.words import all_words


def random_dotset(rng, n):
    size = rng.randrange(n + 1)
    rows = rng.sample(range(1, n + 1), size)
    dots = set()
    cols = set()
    for i in sorted(rows, reverse=True):
        free = [j for j in range(i, n + 1) if j not in cols]
        if not free:
            continue
        j = rng.choice(free)
        cols.add(j)
        dots.add((i, j))
    return DotSet(n, frozenset(dots))


dotsets = st.tuples(st.integers(1, 6), st.integers(0, 10 ** 6)).map(
    lambda t: random_dotset(random.Random(t[1]), t[0]))


def test_dotset_rejects_below_diagonal():
    with pytest.raises(ValueError):
        DotSet(3, frozenset({(3, 1)}))


def test_dotset_rejects_repeated_row():
    with pytest.raises(ValueError):
        DotSet(3, frozenset({(1, 2), (1, 3)}))


def test_parse_format_round_trip():
    d = parse_dots("1,5;3,3", 5)
    assert d.dots == frozenset({(1, 5), (3, 3)})
    assert parse_dots(format_dots(d), 5) == d


@given(dotsets)
def test_rank_dots_round_trip(d):
    r = rank_from_dots(d)
    assert is_valid_rank_matrix(r)
    assert dots_from_rank(r) == d


@given(dotsets)
def test_rank_entries_bounds(d):
    r = rank_from_dots(d)
    k = d.n - len(d.dots)
    for i in range(1, d.n + 1):
        for j in range(i, d.n + 1):
            assert 0 <= r.entry(i, j) <= min(k, j - i + 1)


def test_essential_worked_example():
    d = parse_dots("1,5;3,3", 5)
    assert essential_set(d) == frozenset({(3, 3), (1, 5)})


def test_essential_diagonal_pair():
    d = parse_dots("1,2;3,4", 4)
    assert essential_set(d) == frozenset({(1, 2), (1, 4), (3, 4)})


def test_essential_conditions_filters_vacuous():
    d = parse_dots("1,2;2,4", 4)
    assert essential_conditions(d) == [(1, 2, 1)]


@given(dotsets)
def test_essential_subset_of_cells(d):
    n = d.n
    for (i, j) in essential_set(d):
        assert 1 <= i <= j <= n


@given(dotsets)
def test_hall_equivalence(d):
    k = d.n - len(d.dots)
    for w in all_words(d.n, k):
        assert fixed_point_in(d, w) == matching_exists(d, w)


def test_envelope_worked_example():
    lam, mu = envelope(parse_dots("1,5;3,3", 5))
    assert str(lam) == "01011"
    assert str(mu) == "11010"


@given(dotsets)
def test_envelope_words_have_matching_weight(d):
    k = d.n - len(d.dots)
    lam, mu = envelope(d)
    assert lam.k == mu.k == k
    assert envelope_codim(d) >= 0


@given(dotsets)
def test_covers_are_strictly_above(d):
    for c in covers(d):
        assert len(c.dots) == len(d.dots)
        assert c != d
        assert bruhat_leq(d, c)
        r, rc = rank_from_dots(d), rank_from_dots(c)
        assert r.leq(rc)


def test_covers_includes_east_slide_past_column():
    d = DotSet(4, frozenset({(1, 1), (2, 2)}))
    assert DotSet(4, frozenset({(1, 3), (2, 2)})) in covers(d)


def test_irm_min_of_comparable_is_lower():
    d = parse_dots("1,2;3,4", 4)
    c = sorted(covers(d), key=format_dots)[0]
    r, rc = rank_from_dots(d), rank_from_dots(c)
    assert irm_min(r, rc) == r


def test_rank_of_matrix_prime_field():
    assert rank_of_matrix([[1, 2], [2, 4]]) == 1
    assert rank_of_matrix([[1, 2], [2, 4]], p=5) == 1
    assert rank_of_matrix([[5, 0], [0, 1]], p=5) == 1
    assert rank_of_matrix([[5, 0], [0, 1]]) == 2


def test_all_dotsets_counts():
    # total dotsets over all sizes follow the Bell-like count of partial
    # upper-triangular matchings: 2, 5, 15, 52 for n = 1..4
    for n, want in [(1, 2), (2, 5), (3, 15), (4, 52)]:
        assert sum(len(all_dotsets(n, s)) for s in range(n + 1)) == want


@settings(max_examples=25)
@given(dotsets)
def test_fixed_points_monotone_under_covers(d):
    # moving one step up the closure order can only gain fixed points
    k = d.n - len(d.dots)
    members = {w for w in all_words(d.n, k) if fixed_point_in(d, w)}
    for c in covers(d):
        sup = {w for w in all_words(d.n, k) if fixed_point_in(c, w)}
        assert members <= sup
