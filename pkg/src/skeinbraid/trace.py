"""The Markov trace on H_{1,n}(q) and the invariant X.

Trace rules:

1. tr(ab) = tr(ba)
2. tr(1) = 1
3. tr(a g_n) = z tr(a)
4. tr(a t'_n^k) = s_k tr(a)

for a in H_{1,n}. The trace is evaluated on normal words by removing the top
strand and recursing.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from typing import Any, Iterable, Iterator, Mapping

from pyparsing import Literal, OneOrMore, ParseBaseException, Regex, StringEnd

from .braidword import MixedBraidWord, exponent_sum
from .errors import SMonomialSyntaxError
from .hecke import AlgebraElement, NormalWord, prime_loop_letters, to_algebra, word_times_letters
from .scalar import FIELD, RatFunc, Scalar, ScalarLike, Z, delta, sqrt_lambda_pow

_logger = logging.getLogger(__name__)


class SMonomial:
    """Product of trace parameters s_k, stored as a multiset of nonzero indices.

    The empty multiset is the monomial 1, which is also s_0.
    """

    __slots__ = ("factors",)

    factors: tuple[tuple[int, int], ...]

    def __init__(self, indices: Iterable[int] = ()):
        counts = Counter(k for k in indices if k != 0)
        object.__setattr__(self, "factors", tuple(sorted(counts.items())))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SMonomial is immutable")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> SMonomial:
        return cls(k for k, mult in counts.items() for _ in range(mult))

    @classmethod
    def parse(cls, text: str) -> SMonomial:
        """Parse "s-5 s1 s1 s3" or "s1^2 s3"; "1" and "" are the unit."""
        if text.strip() in ("", "1"):
            return cls()
        try:
            tokens = _SMONO_GRAMMAR.parse_string(text, parse_all=True)
        except ParseBaseException as exc:
            raise SMonomialSyntaxError(text, exc.msg) from exc
        indices: list[int] = []
        for index, mult in tokens:
            if index == 0:
                raise SMonomialSyntaxError(text, "s0 is the unit and cannot be a factor")
            indices.extend([index] * mult)
        return cls(indices)

    def indices(self) -> list[int]:
        """Indices with multiplicity, ascending."""
        return [k for k, mult in self.factors for _ in range(mult)]

    @property
    def level(self) -> int:
        return sum(k * mult for k, mult in self.factors)

    @property
    def degree(self) -> int:
        return sum(mult for _, mult in self.factors)

    def is_one(self) -> bool:
        return not self.factors

    def __mul__(self, other: SMonomial) -> SMonomial:
        return SMonomial(self.indices() + other.indices())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SMonomial):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"s{k}" if mult == 1 else f"s{k}^{mult}" for k, mult in self.factors)

    def to_json(self) -> list[list[int]]:
        return [[k, mult] for k, mult in self.factors]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SMonomial({self.render()})"


def s(*indices: int) -> SMonomial:
    return SMonomial(indices)


def _build_smono_grammar():
    factor = Regex(r"s(?P<index>[+-]?\d+)") + (Literal("^").suppress() + Regex(r"\d+")).leave_whitespace()[0, 1]
    factor.set_parse_action(lambda toks: (int(toks[0][1:]), int(toks[1]) if len(toks) > 1 else 1))
    return OneOrMore(factor.set_name("s-factor")) + StringEnd()


_SMONO_GRAMMAR = _build_smono_grammar()


def _group(text: str) -> str:
    return text if " " not in text else f"({text})"


class TraceValue:
    """Finite linear combination of s-monomials over the scalars."""

    __slots__ = ("_terms",)

    _terms: dict[SMonomial, Scalar]

    def __init__(self, terms: Mapping[SMonomial, ScalarLike] | None = None):
        cleaned: dict[SMonomial, Scalar] = {}
        for mono, coef in (terms or {}).items():
            value = Scalar.coerce(coef)
            if value:
                cleaned[mono] = value
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TraceValue is immutable")

    @classmethod
    def of(cls, mono: SMonomial, coef: ScalarLike = 1) -> TraceValue:
        return cls({mono: coef})

    @classmethod
    def one(cls) -> TraceValue:
        return cls({SMonomial(): 1})

    def items(self) -> Iterator[tuple[SMonomial, Scalar]]:
        return iter(sorted(self._terms.items(), key=lambda item: item[0].factors))

    def monomials(self) -> list[SMonomial]:
        return [mono for mono, _ in self.items()]

    def coefficient(self, mono: SMonomial) -> Scalar:
        return self._terms.get(mono, Scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: TraceValue) -> TraceValue:
        acc = dict(self._terms)
        for mono, coef in other._terms.items():
            acc[mono] = acc[mono] + coef if mono in acc else coef
        return TraceValue(acc)

    def __neg__(self) -> TraceValue:
        return TraceValue({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: TraceValue) -> TraceValue:
        return self + (-other)

    def scale(self, factor: ScalarLike) -> TraceValue:
        f = Scalar.coerce(factor)
        return TraceValue({m: c * f for m, c in self._terms.items()})

    def times_monomial(self, mono: SMonomial) -> TraceValue:
        return TraceValue({m * mono: c for m, c in self._terms.items()})

    def __mul__(self, other: ScalarLike) -> TraceValue:
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TraceValue):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coef in self.items():
            if mono.is_one():
                parts.append(_group(coef.render()))
            elif coef == 1:
                parts.append(mono.render())
            else:
                parts.append(f"{_group(coef.render())} * {mono.render()}")
        return " + ".join(parts)

    def to_json(self) -> list[dict[str, Any]]:
        return [{"monomial": mono.to_json(), "coeff": coef.to_json()} for mono, coef in self.items()]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TraceValue({self.render()})"


# --- the trace ---

_WordTrace = tuple[tuple[RatFunc, SMonomial], ...]


@lru_cache(maxsize=None)
def _word_trace(word: NormalWord) -> _WordTrace:
    loops, tail = word
    n = len(loops)
    if n == 1:
        return ((FIELD(1), SMonomial(loops)),)
    m, low = loops[-1], tail[-1]
    lower = NormalWord(loops[:-1], tail[:-1])
    if low == 0:
        base = _word_trace(lower)
        if m == 0:
            return base
        factor = SMonomial((m,))
        return tuple((c, mono * factor) for c, mono in base)
    # a t'_{n-1}^m g_{n-1} R = a g_{n-1} t'_{n-2}^m R, then rules (1) and (3)
    letters = list(prime_loop_letters(n - 2, m)) if m else []
    letters.extend(("g", j) for j in range(n - 2, low - 1, -1))
    acc: dict[SMonomial, RatFunc] = {}
    for coef, w in word_times_letters(lower, letters):
        for c2, mono in _word_trace(w):
            value = coef * c2 * Z
            acc[mono] = acc[mono] + value if mono in acc else value
    return tuple((c, mono) for mono, c in acc.items() if c)


def markov_trace(x: AlgebraElement) -> TraceValue:
    acc: dict[SMonomial, Scalar] = {}
    for word, coef in x.items():
        for c, mono in _word_trace(word):
            value = coef * c
            acc[mono] = acc[mono] + value if mono in acc else value
    return TraceValue(acc)


def trace_word(wd: MixedBraidWord) -> TraceValue:
    return markov_trace(to_algebra(wd))


def x_factor(n: int, e: int) -> Scalar:
    """Delta^(n-1) (sqrt lambda)^e."""
    return delta() ** (n - 1) * sqrt_lambda_pow(e)


def invariant_X(wd: MixedBraidWord) -> TraceValue:
    e = exponent_sum(wd)
    _logger.debug("X of %s: n=%d e=%d", wd, wd.n, e)
    return trace_word(wd).scale(x_factor(wd.n, e))


def clear_caches() -> None:
    _word_trace.cache_clear()
