"""Classification engine for real Bott manifolds encoded as acyclic digraphs.

The compiled core exposes the matrix type, the three class operations
(relabel, local_complement, slide), canonical forms, exhaustive
classification, invariants, decomposition into indecomposable factors and
the Z/2 cohomology helpers. This wrapper adds dict-returning conveniences
on top of the JSON emitters.
"""

import json as _json

from bott._core import *  # noqa: F401,F403
from bott import _core as _core


def fingerprint(matrix):
    """Invariant fingerprint as a dict (odd_height is an int or 'inf')."""
    return _json.loads(_core.fingerprint_json(matrix))


def decompose(matrix):
    """Decomposition as a dict: isolated count, factor hex forms, witness."""
    return _json.loads(_core.decompose_json(matrix))
