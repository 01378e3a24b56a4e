"""Exact Hodge diamonds, Betti numbers and Chern numbers of
irreducible holomorphic symplectic manifolds.

The package provides four layers:

* :mod:`ihshodge.diamond`: bigraded integer tables with the table
  algebra plus the Salamon and Euler constraints,
* :mod:`ihshodge.equivariant`: the same tables refined by the
  eigenspaces of an involution,
* :mod:`ihshodge.goettsche`: Hodge numbers of Hilbert schemes of points
  on surfaces via Goettsche's product formula,
* :mod:`ihshodge.pipeline`: the derivation of the OG6 Hodge diamond
  through a traced chain of blow-up and quotient corrections.
"""

from .diamond import (
    BettiVector,
    CheckReport,
    ConsistencyError,
    HodgeDiamond,
    betti,
    check_diamond,
    chi_p,
    complete_by_duality,
    direct_sum,
    euler_characteristic,
    ext_power,
    make_diamond,
    salamon_residual,
    solve_betti_dim6,
    sym_power,
    tate_twist,
    tensor,
    weight_sums,
)
from .equivariant import (
    EquivariantDiamond,
    anti_invariant_part,
    eq_ext_power,
    eq_sum,
    eq_sym_power,
    eq_tate_twist,
    eq_tensor,
    forget,
    invariant_part,
    split_from_invariant,
)
from .goettsche import (
    DEFAULT_MAX_N,
    TruncatedSeries3,
    abelian_fourfold_diamond,
    factor_power,
    hilbert_scheme_diamond,
    series_mul,
    surface_diamond,
)
from .pipeline import (
    DEFAULT_CONSTANTS,
    ChernReport,
    NamedConstants,
    PipelineResult,
    PipelineTrace,
    STAGE_ORDER,
    TraceStep,
    blowup_diamond,
    chern_numbers,
    delta_bar_diamond,
    derive_invariant_h2,
    incidence_swap_invariants,
    khat_diamond,
    markman_assembly,
    markman_equivariant,
    og6_diamond,
    og6_via_dual_degrees,
    quadric3_diamond,
    run_full_pipeline,
    ybar_invariants,
    yhat_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "CheckReport",
    "ChernReport",
    "ConsistencyError",
    "DEFAULT_CONSTANTS",
    "DEFAULT_MAX_N",
    "EquivariantDiamond",
    "HodgeDiamond",
    "NamedConstants",
    "PipelineResult",
    "PipelineTrace",
    "STAGE_ORDER",
    "TraceStep",
    "TruncatedSeries3",
    "abelian_fourfold_diamond",
    "anti_invariant_part",
    "betti",
    "blowup_diamond",
    "check_diamond",
    "chern_numbers",
    "chi_p",
    "complete_by_duality",
    "delta_bar_diamond",
    "derive_invariant_h2",
    "direct_sum",
    "eq_ext_power",
    "eq_sum",
    "eq_sym_power",
    "eq_tate_twist",
    "eq_tensor",
    "euler_characteristic",
    "ext_power",
    "factor_power",
    "forget",
    "hilbert_scheme_diamond",
    "incidence_swap_invariants",
    "invariant_part",
    "khat_diamond",
    "make_diamond",
    "markman_assembly",
    "markman_equivariant",
    "og6_diamond",
    "og6_via_dual_degrees",
    "quadric3_diamond",
    "run_full_pipeline",
    "salamon_residual",
    "series_mul",
    "solve_betti_dim6",
    "split_from_invariant",
    "surface_diamond",
    "sym_power",
    "tate_twist",
    "tensor",
    "weight_sums",
    "ybar_invariants",
    "yhat_invariants",
]
