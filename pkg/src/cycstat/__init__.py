"""Exact moment polynomials of regular permutation statistics by
conjugacy class, with asymptotic mean/variance limits and a brute-force
verification oracle."""

from .asymptotics import GradedDecomposition, alpha_limit, decompose, variance_limit
from .dsl import parse_statistic
from .errors import (
    CycstatError,
    DegenerateEvaluationError,
    DivergenceError,
    InternalConsistencyError,
    MalformedInputError,
    ParseError,
    ResourceLimitError,
    SizeMismatchError,
)
from .expectation import RationalExpectation, limit_ratio
from .indicator import (
    IndicatorMomentResult,
    c_poly,
    configure_disk_cache,
    indicator_expectation,
    indicator_moment,
)
from .partial import CyclePathType, PartialPermutation, relabel
from .patterns import (
    BivincularPattern,
    builtin,
    compile_bivincular,
    cyc2,
    des,
    exc,
    fix,
    inv,
    maj,
    pattern_count,
)
from .poly import Poly
from .setpartitions import SetPartition, bell_number, set_partitions
from .translates import ConstrainedTranslate, RegularStatistic, translate_product

__all__ = [
    "BivincularPattern",
    "ConstrainedTranslate",
    "CyclePathType",
    "CycstatError",
    "DegenerateEvaluationError",
    "DivergenceError",
    "GradedDecomposition",
    "IndicatorMomentResult",
    "InternalConsistencyError",
    "MalformedInputError",
    "ParseError",
    "PartialPermutation",
    "Poly",
    "RationalExpectation",
    "RegularStatistic",
    "ResourceLimitError",
    "SetPartition",
    "SizeMismatchError",
    "alpha_limit",
    "bell_number",
    "builtin",
    "c_poly",
    "compile_bivincular",
    "configure_disk_cache",
    "cyc2",
    "decompose",
    "des",
    "exc",
    "fix",
    "indicator_expectation",
    "indicator_moment",
    "inv",
    "limit_ratio",
    "maj",
    "parse_statistic",
    "pattern_count",
    "relabel",
    "set_partitions",
    "translate_product",
    "variance_limit",
]

__version__ = "0.1.0"
