"""Exact Hilbert series of monomial algebras in noncommuting variables."""

import json

from ._core import Error, normal_words, run, schur_polynomial
from ._core import compute_json as _compute_json

__all__ = ["Error", "compute", "normal_words", "run", "schur_polynomial"]


def compute(text, *, multigraded=False, truncate=None, degree_bound=None, affine=False,
            schur=False, oracle=None, max_orbit=10000):
    """Hilbert series of the algebra described by `text` (input file syntax).

    Returns the JSON report of the command line tool as a dict.
    """
    return json.loads(_compute_json(text, multigraded, truncate, degree_bound, affine,
                                    schur, oracle, max_orbit))
