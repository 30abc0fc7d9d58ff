"""
Exact structure constants for Grassmannian Schubert calculus, in four
theories (ordinary and torus-equivariant cohomology and K-theory), computed
by degenerating Richardson varieties one puzzle piece at a time.
"""

from .board import (Puzzle, PuzzlePath, Step, ascii_render, final_path_word,
                    initial_path, is_valid, next_fill_position, svg_render,
                    validate_path)
from .filling import (Theory, branch_weight, enumerate_puzzles, legal_branches,
                      structure_constants, trace)
from .intervalrank import (DotSet, IntervalRankMatrix, covers, dots_from_rank,
                           envelope, envelope_codim, essential_conditions,
                           essential_set, fixed_point_in, format_dots, irm_min,
                           matching_exists, parse_dots, rank_from_dots,
                           rank_of_matrix, shift_basic)
from .oracle import Report, lr_oracle, verify_suite
from .pinkdots import path_codim, path_to_rank, place_rays
from .poly import (LPoly, Poly, eval_at_one, lowest_form, parse, render,
                   y_to_zero)
from .words import Word, all_words, inversions, parse_word, reverse, word_to_partition

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
