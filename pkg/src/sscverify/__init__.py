"""Linear-time verification of strong structural controllability."""

from ._backend import BACKEND
from .errors import (
    BudgetExceeded,
    DuplicateEntry,
    ExhaustionBoundExceeded,
    GenerationFailed,
    IndexOutOfRange,
    NoSolutionWithin,
    PatternFormatError,
    SscError,
)
from .index_sets import MembershipFlags, SparseIndexSet
from .sparse_core import (
    CcsPattern,
    LinkedPattern,
    PatternTriplets,
    build_ccs,
    build_linked,
    transpose,
    validate_links,
)
from .verifier import Mode, SscReport, VerifyOutcome, is_ssc, remove_active, run, verify_mode

__version__ = "0.1.0"
