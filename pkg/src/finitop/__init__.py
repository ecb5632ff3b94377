"""Finite topological spaces as specialization preorders.

Decision procedures for normality-type properties, constructions (products,
sums, cubes, retractions, T0 quotients, shrinkings), exhaustive enumeration
with counterexample search, and an exact symbolic layer for a few countable
spaces.
"""

from .core import (FinSpace, canonical_code, canonical_form, canonical_labeling, e_space,
                   is_homeomorphic, lambda_space, relabel, sierpinski, t0_classes, v_space)
from .construct import (chain_lower, chain_upper, cube, divisor_space, normal_t0_decomposition,
                        power, product, star_extension, subspace, sum_)
from .covers import Cover, is_refinement, is_shrinking, shrink
from .dsl import evaluate, parse
from .maps import PointMap, check_1_5_1, is_continuous, is_very_open, t0_quotient
from .props import (PropertyReport, is_irreducible, is_normal, is_t0, is_t1_discrete,
                    is_trivially_compact, is_vacuously_normal)
from .search import count, enumerate_spaces, find_counterexample
from .suites import run_suite

__version__ = "0.1.0"
