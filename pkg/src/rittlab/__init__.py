"""ritt-lab: exact verification of the dictionary between functional
decompositions and subgroup chains, on concrete permutation groups,
polynomials, additive polynomials, Laurent branches and rational maps."""

from . import (additive, chains, fields, fixtures, formats, laurent,
               permgroup, polyfield, ratfunc, smallgroups)
from .errors import RittLabError

__version__ = "0.1.0"

__all__ = [
    "additive", "chains", "fields", "fixtures", "formats", "laurent",
    "permgroup", "polyfield", "ratfunc", "smallgroups", "RittLabError",
    "__version__",
]
