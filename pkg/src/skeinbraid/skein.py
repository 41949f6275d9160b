"""Basis monomials, their orderings and the level-k systems X(tau) = X(bbm(tau)).

A level system collects, for every gap-free monomial tau of exponent sum k
and both band move signs, the linear relation

    X(tau) - X(bbm(tau, sign)) = 0

among s-monomials. Every s-monomial that occurs has level k.
"""

from __future__ import annotations

import logging
from typing import Any, Iterator, NamedTuple, Sequence

from .braidword import TP, TL, MixedBraidWord, bbm
from .errors import BudgetExhaustedError, SkeinError
from .trace import SMonomial, TraceValue, invariant_X

_logger = logging.getLogger(__name__)


class LevelConfinementError(SkeinError, ArithmeticError):
    """An equation produced an s-monomial outside its level."""

    def __init__(self, level: int, monomial: SMonomial, tau: str) -> None:
        self.level = level
        self.monomial = monomial
        self.tau = tau
        super().__init__(
            f"Equation for tau={tau} at level {level} contains {monomial.render()} "
            f"of level {monomial.level}"
        )


class LambdaMonomial(NamedTuple):
    """t^{k_0} t_1^{k_1} ... t_m^{k_m}, or the primed t'_i version."""

    exponents: tuple[int, ...]
    primed: bool = False

    @property
    def index(self) -> int:
        """Highest loop index; 0 for the empty monomial."""
        return max(len(self.exponents) - 1, 0)

    @property
    def level(self) -> int:
        return sum(self.exponents)

    def is_empty(self) -> bool:
        return not self.exponents

    def in_lambda(self) -> bool:
        return all(a >= b for a, b in zip(self.exponents, self.exponents[1:]))

    def in_lambda_aug(self) -> bool:
        return all(self.exponents)

    def word(self) -> MixedBraidWord:
        make = TP if self.primed else TL
        return MixedBraidWord(
            [make(i, k) for i, k in enumerate(self.exponents)], len(self.exponents) or 1
        )

    def trace_image(self) -> SMonomial:
        """s_{k_0} s_{k_1} ...; the trace itself when primed."""
        return SMonomial(self.exponents)

    def render(self) -> str:
        if not self.exponents:
            return "1"
        return " ".join(letter.render() for letter in self.word())

    def __str__(self) -> str:
        return self.render()


def lambda_key(mono: LambdaMonomial) -> tuple:
    """Sort key realising the basis ordering: sum, index, then exponents from the top."""
    exps = mono.exponents
    indices = range(len(exps))
    return (
        mono.level,
        mono.index,
        tuple(-i for i in indices),
        tuple((abs(k), -k) for k in reversed(exps)),
    )


def cmp_lambda(a: LambdaMonomial, b: LambdaMonomial) -> int:
    if a.primed != b.primed:
        raise ValueError("Cannot compare a primed monomial with an unprimed one")
    ka, kb = lambda_key(a), lambda_key(b)
    return (ka > kb) - (ka < kb)


def s_key(u: SMonomial) -> tuple:
    """Sort key for s-monomials: level, degree, max |index|, then maxima removed one at a time."""
    indices = sorted(u.indices(), reverse=True)
    return (
        u.level,
        u.degree,
        max((abs(k) for k in indices), default=0),
        tuple(-k for k in indices),
    )


def cmp_s(u: SMonomial, v: SMonomial) -> int:
    ku, kv = s_key(u), s_key(v)
    return (ku > kv) - (ku < kv)


def min_of_level(k: int) -> SMonomial:
    return SMonomial((k,))


def max_of_level(k: int) -> SMonomial:
    if k < 1:
        raise ValueError(f"max_of_level needs a positive level, got {k}")
    return SMonomial((1,) * k)


def _compositions(total: int, parts: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``parts`` nonzero integers in [-bound, bound] summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    rest = parts - 1
    for v in range(-bound, bound + 1):
        if v == 0 or abs(total - v) > bound * rest:
            continue
        for tail in _compositions(total - v, rest, bound):
            yield (v,) + tail


def enumerate_lambda_aug(k: int, max_strands: int, max_exp: int) -> list[LambdaMonomial]:
    """Every nonempty gap-free monomial of level k with index <= M and |k_i| <= E."""
    if max_strands < 0:
        raise ValueError(f"max_strands must be >= 0, got {max_strands}")
    if max_exp < 1:
        raise ValueError(f"max_exp must be >= 1, got {max_exp}")
    found = [
        LambdaMonomial(exps)
        for m in range(max_strands + 1)
        for exps in _compositions(k, m + 1, max_exp)
    ]
    return sorted(found, key=lambda_key)


# --- systems ---


class Equation(NamedTuple):
    """lhs = 0, produced by the band move of ``tau`` with ``sign``."""

    lhs: TraceValue
    tau: LambdaMonomial
    sign: int

    @property
    def degenerate(self) -> bool:
        return self.lhs.is_zero()

    @property
    def provenance(self) -> str:
        return f"tau={self.tau.render()} sign={'+' if self.sign > 0 else '-'}"

    def render(self) -> str:
        return f"[{self.provenance}] {self.lhs.render()} = 0"

    def to_json(self) -> dict[str, Any]:
        return {
            "tau": self.tau.render(),
            "exponents": list(self.tau.exponents),
            "sign": self.sign,
            "degenerate": self.degenerate,
            "terms": self.lhs.to_json(),
        }


class LevelSystem(NamedTuple):
    level: int
    max_strands: int
    max_exp: int
    equations: tuple[Equation, ...]
    unknowns: tuple[SMonomial, ...]

    def render(self) -> str:
        lines = [
            f"level {self.level} (max strands {self.max_strands}, max exponent {self.max_exp}): "
            f"{len(self.equations)} equations, {len(self.unknowns)} unknowns",
            "unknowns: " + (", ".join(u.render() for u in self.unknowns) or "none"),
        ]
        lines.extend(eq.render() for eq in self.equations)
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "level": self.level,
            "bounds": {"max_strands": self.max_strands, "max_exp": self.max_exp},
            "unknowns": [u.to_json() for u in self.unknowns],
            "equations": [eq.to_json() for eq in self.equations],
        }


def band_move_equation(tau: LambdaMonomial, sign: int) -> Equation:
    wd = tau.word()
    return Equation(invariant_X(wd) - invariant_X(bbm(wd, sign)), tau, sign)


def build_system(
    k: int, max_strands: int, max_exp: int, signs: Sequence[int] = (1, -1)
) -> LevelSystem:
    taus = enumerate_lambda_aug(k, max_strands, max_exp)
    if k == 0:
        taus.insert(0, LambdaMonomial(()))
    _logger.info(
        "Building level %d system: %d monomials, signs %s", k, len(taus), list(signs)
    )

    equations: list[Equation] = []
    unknowns: set[SMonomial] = set()
    for count, tau in enumerate(taus, start=1):
        for sign in signs:
            try:
                eq = band_move_equation(tau, sign)
            except BudgetExhaustedError as exc:
                raise exc.with_context(f"tau={tau.render()}") from exc
            for mono in eq.lhs.monomials():
                if mono.level != k:
                    raise LevelConfinementError(k, mono, tau.render())
            unknowns.update(eq.lhs.monomials())
            equations.append(eq)
        _logger.debug("[%d/%d] tau=%s done", count, len(taus), tau)

    return LevelSystem(
        level=k,
        max_strands=max_strands,
        max_exp=max_exp,
        equations=tuple(equations),
        unknowns=tuple(sorted(unknowns, key=s_key, reverse=True)),
    )
