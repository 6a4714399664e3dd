"""Exact computation of Seshadri constants and related invariants.

Submodules:
    exactnum   exact rationals, n-th roots, Pell equations, SeshadriValue
    toric      lattice polytopes and toric Seshadri constants
    surfcalc   closed-form values and bounds on surfaces
    zarislope  Zariski decomposition and slope stability
    linsys     plane linear systems through fat points
    p2cert     certified multi-point lower bounds on P^2
    symbpow    symbolic powers of squarefree monomial ideals, star configurations
    cli        command-line frontend
"""

from .exactnum import (DomainError, InconsistencyError, Ordering, PellSolution, SeshadriValue,
                       compare_root, floor_root, pell_fundamental)

__all__ = ["DomainError", "InconsistencyError", "Ordering", "PellSolution", "SeshadriValue",
           "compare_root", "floor_root", "pell_fundamental"]
__version__ = "0.1.0"
