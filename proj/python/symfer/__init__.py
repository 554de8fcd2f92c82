"""Exact rational computations in the even symplectic fermion vertex algebra.

Thin Python surface over the C++ core: graded dimension counts, the
finite-dimensional quotient algebra and its invariants, and structural
consistency checks.  All arithmetic is exact (GMP rationals); nothing here
is numerical.
"""

try:
    from . import _symfer as _core
except ImportError:  # dev tree: extension lives on sys.path, not in-package
    import _symfer as _core

AlgebraConfig = _core.AlgebraConfig
basis_count = _core.basis_count
c2_quotient_dims = _core.c2_quotient_dims
center_dim = _core.center_dim
graded_dim_series = _core.graded_dim_series
lambda_bracket_ok = _core.lambda_bracket_ok
n_d = _core.n_d
nilpotency_degree = _core.nilpotency_degree
omega_min_poly = _core.omega_min_poly
zhu_algebra_dim = _core.zhu_algebra_dim

__all__ = [
    "AlgebraConfig",
    "basis_count",
    "c2_quotient_dims",
    "center_dim",
    "graded_dim_series",
    "lambda_bracket_ok",
    "n_d",
    "nilpotency_degree",
    "omega_min_poly",
    "zhu_algebra_dim",
]

__version__ = "1.0.0"
