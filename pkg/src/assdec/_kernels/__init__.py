"""Exact rank kernels over GF(p).

The compiled Cython kernel is used when it has been built; otherwise the
numpy implementation is used.  Setting ``ASSDEC_PURE_PYTHON=1`` forces the
fallback.
"""
import os

from ._rank_py import rank_mod_p as py_rank_mod_p
from ._rank_py import sparse_rank_mod_p

cy_rank_mod_p = None
if not os.environ.get("ASSDEC_PURE_PYTHON"):
    try:
        from ._rank_cy import rank_mod_p as cy_rank_mod_p
    except ImportError:  # extension not built
        cy_rank_mod_p = None

if cy_rank_mod_p is not None:
    rank_mod_p = cy_rank_mod_p
    BACKEND = "cython"
else:
    rank_mod_p = py_rank_mod_p
    BACKEND = "python"

__all__ = ["BACKEND", "rank_mod_p", "py_rank_mod_p", "cy_rank_mod_p", "sparse_rank_mod_p"]
