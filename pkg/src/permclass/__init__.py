"""Exact structure and enumeration of the permutation class Av(2143, 4231)."""

from .perm import (Decomposition, Permutation, PermutationError, apply_symmetry, avoids_all,
                   complement, contains, decompose, direct_sum, inflate, inverse,
                   is_simple, is_skew_decomposable, is_sum_decomposable, nontrivial_intervals,
                   parse_permutation, perm, reverse, skew_sum)
from .grid import (CellType, Gridding, GriddingMatrix, find_gridding, in_grid_class,
                   parse_matrix, validate_gridding)
from .structure import (BlockClass, CountReport, SimpleType, check_inflation, classify_simple,
                        count_words, decode_word, encode_D, enumerate_class, inflation_profile,
                        is_member, is_member_structural, simple_members, valid_simple_word)
from .genfunc import IntPolynomial, RationalGF, compose, equal, named, pipeline_f, series

__version__ = "0.1.0"
