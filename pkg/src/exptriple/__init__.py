"""Count and classify solutions of a^x + b^y = c^z for bases sharing a factor.

The layers build on each other: arith supplies integer routines, triple
fixes a base triple and its shared primes, solve enumerates solutions
and groups them into classes, classify tags solutions at each shared
prime, families covers the four infinite two-solution families and the
anomaly verdict, catalog lists the known anomalous nine-tuples, and
search hunts for new ones.  The cli module exposes all of it as the
exptriple command.
"""

from .arith import (
    Factored,
    as_power_of,
    factorize,
    introot,
    is_prime,
    least_index,
    lte_odd,
    power_representations,
    prime_set,
    prime_support_subset,
    radical,
    same_prime_set_scan,
    two_adic,
    two_adic_profile,
    valuation,
)
from .catalog import KNOWN_ANOMALOUS, SEARCHED_RADICAL_BOUND, is_known_anomalous
from .classify import (
    DominanceViolation,
    PrimeType,
    TypeAData,
    TypeCData,
    TypeProfile,
    dominance_screen,
    type_a_data,
    type_c_data,
    type_o_census,
    type_profile,
)
from .config import OUTPUT_FORMATS, RunConfig, SearchBounds, load_config
from .errors import (
    FamilyConstraintError,
    InputDataError,
    InternalInvariantError,
    ProportionalityError,
    UsageError,
)
from .families import (
    FAMILY_TAGS,
    Classification,
    FamilyWitness,
    NineTuple,
    canonical_nine,
    classify_nine,
    gen_family,
    in_F,
    in_family,
    make_nine_tuple,
)
from .search import (
    EquationRecord,
    IngestReport,
    PipelineOutcome,
    ReconstructionResult,
    Shape53,
    Shape54,
    SolvedSystem,
    decompose,
    direct_search,
    generate_equations,
    ingest_equations,
    make_equation,
    pair_and_solve,
    reconstruct_and_verify,
    run_pipeline,
)
from .solve import (
    SolutionSet,
    Solution,
    SpecialShape,
    correspond,
    count_N,
    detect_special_case,
    enumerate_solutions,
    make_solution,
    power_of_two_solutions,
    term_multiset,
)
from .triple import GDecomposition, Triple, build_triple, g_decomposition, maximal_proportional_classes

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DominanceViolation",
    "EquationRecord",
    "FAMILY_TAGS",
    "Factored",
    "FamilyConstraintError",
    "FamilyWitness",
    "GDecomposition",
    "IngestReport",
    "InputDataError",
    "InternalInvariantError",
    "KNOWN_ANOMALOUS",
    "NineTuple",
    "OUTPUT_FORMATS",
    "PipelineOutcome",
    "PrimeType",
    "ProportionalityError",
    "ReconstructionResult",
    "RunConfig",
    "SEARCHED_RADICAL_BOUND",
    "SearchBounds",
    "Shape53",
    "Shape54",
    "Solution",
    "SolutionSet",
    "SolvedSystem",
    "SpecialShape",
    "Triple",
    "TypeAData",
    "TypeCData",
    "TypeProfile",
    "UsageError",
    "as_power_of",
    "build_triple",
    "canonical_nine",
    "classify_nine",
    "correspond",
    "count_N",
    "decompose",
    "detect_special_case",
    "direct_search",
    "dominance_screen",
    "enumerate_solutions",
    "factorize",
    "g_decomposition",
    "gen_family",
    "generate_equations",
    "in_F",
    "in_family",
    "ingest_equations",
    "introot",
    "is_known_anomalous",
    "is_prime",
    "least_index",
    "load_config",
    "lte_odd",
    "make_equation",
    "make_nine_tuple",
    "make_solution",
    "maximal_proportional_classes",
    "pair_and_solve",
    "power_of_two_solutions",
    "power_representations",
    "prime_set",
    "prime_support_subset",
    "radical",
    "reconstruct_and_verify",
    "run_pipeline",
    "same_prime_set_scan",
    "term_multiset",
    "two_adic",
    "two_adic_profile",
    "type_a_data",
    "type_c_data",
    "type_o_census",
    "type_profile",
    "valuation",
]
