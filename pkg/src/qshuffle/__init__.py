"""Exact computations with dual canonical bases of U_q(n) in the quantum shuffle algebra."""
from .laurent import LaurentPoly, RationalFunction, kl_solve, band_test
from .roots import CartanDatum, ConvexOrder, cartan, build_convex_order, is_convex, kostant_partitions
from .shuffle import ShuffleElement, shuffle, mul
from .pbw import LyndonTable, build_lyndon_table
from .dcb import DCBEngine, DCBRecord, sigma, theta


def engine(type_: str, reduced_word=None, cache_dir=None) -> DCBEngine:
    """Engine for a Cartan type with its default (or the given) reduced word."""
    return DCBEngine(build_lyndon_table(build_convex_order(type_, reduced_word=reduced_word)),
                     cache_dir=cache_dir)


__version__ = "0.1.0"
