"""Tools for minimal subshifts of sublinear factor complexity.

The package builds exact factor tables for substitution and Sturmian
sources, measures complexity and special factors, certifies branch
points, estimates return-word recurrence constants, and enumerates
sliding-block endomorphisms of bounded radius.
"""

__version__ = "0.1.0"

from .blockcodes import (
    SlidingBlockCode,
    apply,
    compose,
    enumerate_endomorphisms,
    equals,
    find_inverse,
    find_root_relation,
    make_code,
    morse_mirror_system,
    shift_power,
    verify_endomorphism,
)
from .branching import (
    AsymptoticCensus,
    BranchCensus,
    CommonSuffixLimitCertificate,
    LeftSpecialTree,
    PeriodicFixedPointCertificate,
    asymptotic_upper_bound,
    aut_upper_bound,
    branch_census,
    certify_branch_periodic,
    certify_branch_suffix,
    left_special_tree,
    substitution_root_bound,
)
from .errors import (
    BudgetError,
    DomainError,
    MinshiftError,
    RuleParseError,
    StabilizationError,
    ValidationError,
)
from .kernels import BACKEND
from .language import (
    CassaigneProbe,
    LanguageTable,
    build_language,
    build_language_from_sequence,
    cassaigne_K,
    complexity,
    complexity_diff,
    dump_table,
    left_extensions,
    load_table,
    right_extensions,
    special_words,
)
from .recurrence import (
    RecurrenceEstimate,
    cassaigne_s_bound,
    lr_aut_bound,
    recurrence_constant,
    return_word_index,
    return_words,
)
from .sturmian import characteristic_word, sturmian_language
from .words import (
    FIBONACCI,
    THUE_MORSE,
    Substitution,
    is_primitive,
    iterate,
    parse_rules,
    substitute,
)

__all__ = [name for name in dir() if not name.startswith("_")]
