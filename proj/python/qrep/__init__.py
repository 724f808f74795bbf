"""Finite-dimensional quiver representations."""

import json

from ._qrep import (
    NumericalError,
    Representation,
    SizeLimitError,
    ValidationError,
    analyze as _analyze,
    are_isomorphic,
    build_model,
    commutant_dim,
    decompose,
    direct_sum,
    end_dim,
    hom,
    hrr_max_admissible_n,
    is_indecomposable,
    is_irreducible,
    is_simple,
    is_strongly_irreducible,
    is_transitive,
    jordan_block,
    model_names,
    remove_loops,
    shift,
    sweep_csv,
    system_end_dim_of_operator,
    system_end_dim_of_rep,
)



def analyze(rep, seed=0, tol_scale=1.0):
    """Analysis report of ``rep`` as a dict."""
    return json.loads(_analyze(rep, seed, tol_scale))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
