"""Categorical entropy, Serre dimensions, and stability conditions for
acyclic quivers and smooth projective curves.

The package computes with the bounded derived category of an acyclic
quiver through its finite hom/ext calculus: an exact catalog of
indecomposables drives entropy and Serre dimension estimates, Gepner-point
constructions, global dimension of stability conditions, mass growth, and
full exceptional collection extraction.  A separate numeric module covers
slope stability on smooth projective curves.
"""

from .curves import (
    CurveStability,
    NumericalClass,
    curve_charge,
    curve_gldim,
    curve_gldim_bounds,
    curve_inf_scan,
    genus0_pair_sup,
    genus1_pair_sup,
    shift_gap_grid,
)
from .derived import (
    DerivedObject,
    hom_poincare,
    serre_apply,
    standard_generator,
)
from .entropy import (
    DEFAULT_BUDGET,
    EntropyProfile,
    EntropySeries,
    SerreDims,
    entropy_estimate,
    entropy_profile,
    entropy_series,
    sdim_estimate,
    volume,
)
from .errors import (
    BudgetExceeded,
    CatalogIncomplete,
    CatalogMiss,
    ConfigError,
    CyclicQuiver,
    DimensionMismatch,
    DisconnectedQuiver,
    EmptyGrid,
    GenusTooSmall,
    GldimTooLarge,
    HeartEscape,
    HeartMismatch,
    NotAllSemistable,
    NotARoot,
    NotAStabilityFunction,
    NotConnectedSubset,
    NotDynkin,
    NotIndecomposable,
    ParseError,
    QuiverMismatch,
    SdlabError,
    ZeroClass,
    ZeroObject,
)
from .quivers import (
    DynkinClass,
    EulerData,
    Quiver,
    classify_dynkin,
    coxeter_matrix,
    coxeter_order,
    euler_form,
    euler_matrix,
    parse_quiver,
    positive_roots,
    symmetrized_form,
    tits_form,
)
from .reps import (
    IndecCatalog,
    Representation,
    ar_translate,
    catalog_for,
    exists_mono,
    ext1_dim,
    hom_dim,
    hom_space,
    indecomposable_from_root,
    injective_rep,
    load_catalog,
    projective_rep,
    save_catalog,
    simple_rep,
    zero_rep,
)
from .stability import (
    GepnerReport,
    MassGrowth,
    Record,
    StabilityCondition,
    act,
    extract_exceptional_collection,
    gepner_check,
    gepner_construct,
    gldim,
    make_stability,
    mass,
    mass_growth,
    restrict_to_subquiver,
    sample_stability,
    semistable_indecomposables,
    sigma_from_json,
)
from .verify import CheckResult, VerifySummary, run_all

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BudgetExceeded", "CatalogIncomplete", "CatalogMiss", "ConfigError",
    "CyclicQuiver", "DimensionMismatch", "DisconnectedQuiver", "EmptyGrid",
    "GenusTooSmall", "GldimTooLarge", "HeartEscape", "HeartMismatch",
    "NotAllSemistable", "NotARoot", "NotAStabilityFunction",
    "NotConnectedSubset", "NotDynkin", "NotIndecomposable", "ParseError",
    "QuiverMismatch", "SdlabError", "ZeroClass", "ZeroObject",
    "Quiver", "EulerData", "DynkinClass", "parse_quiver", "euler_matrix",
    "euler_form", "symmetrized_form", "tits_form", "coxeter_matrix",
    "coxeter_order", "classify_dynkin", "positive_roots",
    "Representation", "IndecCatalog", "zero_rep", "simple_rep",
    "projective_rep", "injective_rep", "hom_space", "hom_dim", "ext1_dim",
    "ar_translate", "exists_mono", "catalog_for", "save_catalog",
    "load_catalog", "indecomposable_from_root",
    "DerivedObject", "standard_generator", "serre_apply", "hom_poincare",
    "DEFAULT_BUDGET", "EntropySeries", "EntropyProfile", "SerreDims",
    "entropy_series", "entropy_estimate", "sdim_estimate", "volume",
    "entropy_profile",
    "Record", "StabilityCondition", "GepnerReport", "MassGrowth",
    "make_stability", "semistable_indecomposables", "gldim", "mass",
    "mass_growth", "act", "gepner_check", "gepner_construct",
    "sample_stability", "extract_exceptional_collection",
    "restrict_to_subquiver", "sigma_from_json",
    "NumericalClass", "CurveStability", "curve_charge", "curve_gldim",
    "curve_gldim_bounds", "curve_inf_scan", "shift_gap_grid",
    "genus0_pair_sup", "genus1_pair_sup",
    "CheckResult", "VerifySummary", "run_all",
]
