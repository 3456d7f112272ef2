"""Prime vertex labelings: graph families, closed-form labelings, verification and search."""

__version__ = "0.1.0"

from .errors import InvalidParameter, NotApplicable, PrimeLabelError, UnsupportedScheme
from .families import (
    FamilyInstance,
    FamilyParams,
    build,
    build_book,
    build_cycle_chain,
    build_cycle_pendant_star,
    build_fibonacci_chain,
    build_prism,
)
from .graph import (
    Graph,
    Labeling,
    VerificationReport,
    cartesian_product,
    cycle,
    path,
    star,
    verify_labeling,
)
from .labelings import (
    label_book,
    label_chain4,
    label_chain6,
    label_chain8,
    label_chain_mersenne,
    label_cps,
    label_fibonacci_chain,
    label_instance,
    label_prism,
    row_permutation,
)
from .numtheory import gcd
from .search import (
    SearchBudget,
    SearchOutcome,
    Status,
    backtracking_search,
    brute_force_search,
    pillai_witness,
)

__all__ = [
    "FamilyInstance", "FamilyParams", "Graph", "InvalidParameter", "Labeling", "NotApplicable",
    "PrimeLabelError", "SearchBudget", "SearchOutcome", "Status", "UnsupportedScheme",
    "VerificationReport", "backtracking_search", "brute_force_search", "build", "build_book",
    "build_cycle_chain", "build_cycle_pendant_star", "build_fibonacci_chain", "build_prism",
    "cartesian_product", "cycle", "gcd", "label_book", "label_chain4", "label_chain6",
    "label_chain8", "label_chain_mersenne", "label_cps", "label_fibonacci_chain",
    "label_instance", "label_prism", "path", "pillai_witness", "row_permutation", "star",
    "verify_labeling",
]
