"""Exact rational invariants of boundary pairs and hypersurface germs."""

from .acc import (
    AccumulationChain,
    FnElement,
    GnChain,
    GnElement,
    accumulation_witness,
    delta_prime_candidate,
    enumerate_Fn_above,
    gn_increasing_chain,
    max_Fn_below_one,
    sylvester_sequence,
)
from .bfun import (
    BPolyRoots,
    SpectrumPoly,
    candidate_roots,
    check_lct_relation,
    largest_root_full,
    reduced_bpoly,
    yano_spectrum,
)
from .bounds import (
    BoundReport,
    MajorantCheck,
    fujita_type_bounds,
    verify_condition_58,
    verify_condition_59,
)
from .errors import (
    ChainConditionError,
    DomainError,
    ExactnessError,
    InfiniteEnumerationError,
    LPError,
    LPInfeasibleError,
    LPUnboundedError,
    PairlabError,
    PolyParseError,
    UnitAtOriginError,
    ZeroPolynomialError,
)
from .lct import (
    BoundInterval,
    Method,
    ThresholdResult,
    check_combination_inequalities,
    lct_direct_sum,
    lct_monomial_sum,
    lct_plane_branch,
    lct_power,
    lct_product_form,
    lct_resolution,
    lct_tangent_cone_bounds,
    lct_weighted_homogeneous,
    quasiadjunction_psi,
    truncation_bound,
)
from .newton import (
    EXACT_IF_NONDEGENERATE,
    UPPER_BOUND_ONLY,
    LPResult,
    NewtonBound,
    WeightLP,
    lct_newton_bound,
    lp_minimize,
    vertex_enum_oracle,
    weight_lp_from_poly,
)
from .pairs import (
    ResolutionData,
    ResolutionEntry,
    SingClass,
    SncPairConfig,
    classify,
    cyclic_cover_transform,
    discrep_snc,
    lct_from_resolution,
    monomial_valuation_discrepancy,
    totaldiscrep_snc,
)
from .poly import SparsePoly, multiplicity, parse_poly, truncate, weighted_multiplicity
from .rational import BACKEND, NEG_INF, POS_INF, Rat, fmt, fmt_extended, is_finite, rat

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
