from puzzlecalc.board import initial_path, is_valid
from puzzlecalc.filling import trace
from puzzlecalc.intervalrank import envelope, envelope_codim, rank_from_dots
from puzzlecalc.pinkdots import path_codim, path_to_rank, place_rays
from puzzlecalc.words import all_words


def _valid_pairs(n):
    for k in range(n + 1):
        for mu in all_words(n, k):
            for nu in all_words(n, k):
                if is_valid(initial_path(mu, nu)):
                    yield mu, nu


def _all_paths(mu, nu):
    root = trace(mu, nu)
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(node.children)


def test_dot_count_is_n_minus_k():
    for n in range(1, 5):
        for mu, nu in _valid_pairs(n):
            for node in _all_paths(mu, nu):
                assert len(node.dots.dots) == n - mu.k


def test_rays_balance():
    # every dot consumes one ray from each of two families
    for n in range(1, 5):
        for mu, nu in _valid_pairs(n):
            p = initial_path(mu, nu)
            rays = place_rays(p)
            d, _ = path_to_rank(p)
            assert len(rays) >= len(d.dots)


def test_boring_steps_preserve_dots():
    for n in range(1, 5):
        for mu, nu in _valid_pairs(n):
            for node in _all_paths(mu, nu):
                for child in node.children:
                    if child.branch in ("boring", "triangle"):
                        assert child.dots == node.dots


def test_codim_formula_matches_dot_geometry():
    for n in range(1, 6):
        for mu, nu in _valid_pairs(n):
            for node in _all_paths(mu, nu):
                assert path_codim(node.path) == envelope_codim(node.dots)


def test_initial_path_envelope_is_boundary_pair():
    for n in range(1, 5):
        for mu, nu in _valid_pairs(n):
            d, _ = path_to_rank(initial_path(mu, nu))
            env = envelope(d)
            assert env == (mu, nu)
            assert envelope_codim(d) == 0


def test_rank_consistency():
    for n in range(1, 5):
        for mu, nu in _valid_pairs(n):
            for node in _all_paths(mu, nu):
                assert node.rank == rank_from_dots(node.dots)
