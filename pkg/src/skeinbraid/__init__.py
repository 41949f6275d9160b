"""skeinbraid - exact HOMFLYPT skein computations for links in S1 x S2."""

from .braidword import MixedBraidWord, bbm, parse
from .elimination import SolvedSystem, eliminate
from .errors import (
    BraidSyntaxError,
    BudgetExhaustedError,
    ConfigFileError,
    ConfigurationError,
    SkeinError,
    SMonomialSyntaxError,
    StrandMismatchError,
)
from .hecke import AlgebraElement, NormalWord, multiply, reduce, to_algebra
from .scalar import Scalar
from .skein import (
    Equation,
    LambdaMonomial,
    LevelSystem,
    build_system,
    cmp_lambda,
    cmp_s,
    enumerate_lambda_aug,
    max_of_level,
    min_of_level,
)
from .trace import SMonomial, TraceValue, invariant_X, markov_trace, trace_word

__version__ = "0.3.0"

__all__ = [
    "AlgebraElement",
    "BraidSyntaxError",
    "BudgetExhaustedError",
    "ConfigFileError",
    "ConfigurationError",
    "Equation",
    "LambdaMonomial",
    "LevelSystem",
    "MixedBraidWord",
    "NormalWord",
    "SMonomial",
    "SMonomialSyntaxError",
    "Scalar",
    "SkeinError",
    "SolvedSystem",
    "StrandMismatchError",
    "TraceValue",
    "bbm",
    "build_system",
    "cmp_lambda",
    "cmp_s",
    "eliminate",
    "enumerate_lambda_aug",
    "invariant_X",
    "markov_trace",
    "max_of_level",
    "min_of_level",
    "multiply",
    "parse",
    "reduce",
    "to_algebra",
    "trace_word",
]
