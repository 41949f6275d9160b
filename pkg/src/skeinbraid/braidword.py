"""Mixed braid words on one fixed strand and n moving strands.

Grammar of the text form::

    word := term*
    term := base ("^" int)?
    base := "t" | "t" nat | "t" nat "'" | "s" nat

``t`` is the loop generator, ``t3`` the looping element t_3,
``t3'`` the primed looping element t'_3 and ``s2`` the braid generator sigma_2.
"""

from __future__ import annotations

import random
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from pyparsing import (
    Group,
    Literal,
    Optional,
    ParseBaseException,
    ParseFatalException,
    ParseResults,
    Regex,
    StringEnd,
    ZeroOrMore,
)

from .errors import BraidSyntaxError


class LetterKind(Enum):
    T = "t"
    SIGMA = "s"
    TLOOP = "tloop"
    TLOOP_PRIME = "tloop'"


class Letter(NamedTuple):
    kind: LetterKind
    index: int
    exponent: int

    @property
    def key(self) -> tuple[LetterKind, int]:
        return (self.kind, self.index)

    def inverse(self) -> Letter:
        return Letter(self.kind, self.index, -self.exponent)

    def render(self) -> str:
        if self.kind is LetterKind.T:
            base = "t"
        elif self.kind is LetterKind.SIGMA:
            base = f"s{self.index}"
        elif self.kind is LetterKind.TLOOP:
            base = f"t{self.index}"
        else:
            base = f"t{self.index}'"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"

    def strands_needed(self) -> int:
        return self.index + 1


def T(exponent: int = 1) -> Letter:
    return Letter(LetterKind.T, 0, exponent)


def S(index: int, exponent: int = 1) -> Letter:
    return Letter(LetterKind.SIGMA, index, exponent)


def TL(index: int, exponent: int = 1) -> Letter:
    """t_index; index 0 is plain t."""
    if index == 0:
        return T(exponent)
    return Letter(LetterKind.TLOOP, index, exponent)


def TP(index: int, exponent: int = 1) -> Letter:
    """t'_index; index 0 is plain t."""
    if index == 0:
        return T(exponent)
    return Letter(LetterKind.TLOOP_PRIME, index, exponent)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if letter.exponent == 0:
            continue
        if stack and stack[-1].key == letter.key:
            merged = stack[-1].exponent + letter.exponent
            stack.pop()
            if merged:
                stack.append(Letter(letter.kind, letter.index, merged))
        else:
            stack.append(letter)
    return tuple(stack)


class MixedBraidWord:
    """Immutable, free-reduced word on ``n`` moving strands."""

    __slots__ = ("n", "letters")

    n: int
    letters: tuple[Letter, ...]

    def __init__(self, letters: Iterable[Letter] = (), n: int | None = None):
        reduced = _free_reduce(letters)
        needed = max((letter.strands_needed() for letter in reduced), default=1)
        if n is None:
            n = needed
        elif n < needed:
            raise ValueError(f"Word needs {needed} moving strands, got n={n}")
        object.__setattr__(self, "letters", reduced)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MixedBraidWord is immutable")

    @classmethod
    def identity(cls, n: int = 1) -> MixedBraidWord:
        return cls((), n)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: MixedBraidWord) -> MixedBraidWord:
        return MixedBraidWord(self.letters + other.letters, max(self.n, other.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedBraidWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def inverse(self) -> MixedBraidWord:
        return MixedBraidWord((letter.inverse() for letter in reversed(self.letters)), self.n)

    def with_strands(self, n: int) -> MixedBraidWord:
        return MixedBraidWord(self.letters, n)

    def is_identity(self) -> bool:
        return not self.letters

    def render(self) -> str:
        return " ".join(letter.render() for letter in self.letters)

    def __str__(self) -> str:
        return self.render() or "1"

    def __repr__(self) -> str:
        return f"MixedBraidWord({self.render()!r}, n={self.n})"


# --- parsing ---


def _build_grammar():
    base = Regex(r"(?P<kind>[ts])(?P<index>\d+)?(?P<prime>')?")
    caret = (Literal("^").suppress() + Regex(r"[+-]?\d+")("exponent")).leave_whitespace()
    term = Group(base + Optional(caret))

    def check_term(text: str, loc: int, toks: ParseResults):
        tok = toks[0]
        kind, index, prime = tok.get("kind"), tok.get("index"), tok.get("prime")
        exponent = int(tok.get("exponent", "1"))
        if exponent == 0:
            raise ParseFatalException(text, loc, "zero exponent")
        if kind == "s":
            if prime:
                raise ParseFatalException(text, loc, "braid generators take no prime")
            if index is None or int(index) < 1:
                raise ParseFatalException(text, loc, "braid generator needs an index >= 1")
            return (S(int(index), exponent), loc)
        if index is None:
            if prime:
                raise ParseFatalException(text, loc, "prime needs a loop index")
            return (T(exponent), loc)
        if int(index) < 1:
            raise ParseFatalException(text, loc, "loop index must be >= 1")
        if prime:
            return (Letter(LetterKind.TLOOP_PRIME, int(index), exponent), loc)
        return (Letter(LetterKind.TLOOP, int(index), exponent), loc)

    term.set_parse_action(check_term)
    return ZeroOrMore(term) + StringEnd()


_GRAMMAR = _build_grammar()


def parse(text: str, strands: int | None = None) -> MixedBraidWord:
    """Parse the braid grammar.

    The strand count is the largest referenced index plus one unless
    ``strands`` is given, in which case larger indices are rejected.
    """
    try:
        located: Sequence[tuple[Letter, int]] = list(_GRAMMAR.parse_string(text, parse_all=True))
    except ParseBaseException as exc:
        raise BraidSyntaxError(text, exc.loc, exc.msg) from exc
    if strands is not None:
        if strands < 1:
            raise BraidSyntaxError(text, 0, f"strand count must be >= 1, got {strands}")
        for letter, loc in located:
            if letter.strands_needed() > strands:
                raise BraidSyntaxError(
                    text, loc, f"index {letter.index} exceeds declared n={strands}"
                )
    return MixedBraidWord((letter for letter, _ in located), strands)


def render(wd: MixedBraidWord) -> str:
    return wd.render()


# --- loop expansion ---


def _descending(i: int, exponent: int) -> list[Letter]:
    return [S(j, exponent) for j in range(i, 0, -1)]


def _ascending(i: int, exponent: int) -> list[Letter]:
    return [S(j, exponent) for j in range(1, i + 1)]


def expand_letter(letter: Letter) -> list[Letter]:
    if letter.kind is LetterKind.TLOOP:
        i, k = letter.index, letter.exponent
        if k > 0:
            one = _descending(i, 1) + [T(1)] + _ascending(i, 1)
        else:
            one = _descending(i, -1) + [T(-1)] + _ascending(i, -1)
        return one * abs(k)
    if letter.kind is LetterKind.TLOOP_PRIME:
        i = letter.index
        return _descending(i, 1) + [T(letter.exponent)] + _ascending(i, -1)
    return [letter]


def expand_loops(wd: MixedBraidWord) -> MixedBraidWord:
    """Rewrite t_i and t'_i through t and the sigma_j."""
    return MixedBraidWord((x for letter in wd for x in expand_letter(letter)), wd.n)


def exponent_sum(wd: MixedBraidWord) -> int:
    return sum(
        letter.exponent for letter in expand_loops(wd) if letter.kind is LetterKind.SIGMA
    )


# --- moves ---


def _shift_letter(letter: Letter) -> list[Letter]:
    """Image of a letter when the first moving strand is doubled."""
    if letter.kind is LetterKind.T:
        return [TL(1, letter.exponent)]
    if letter.kind in (LetterKind.SIGMA, LetterKind.TLOOP):
        return [Letter(letter.kind, letter.index + 1, letter.exponent)]
    # t'_i is not a shifted t': shift its expansion instead
    return [
        S(x.index + 1, x.exponent) if x.kind is LetterKind.SIGMA else TL(1, x.exponent)
        for x in expand_letter(letter)
    ]


def bbm(wd: MixedBraidWord, sign: int) -> MixedBraidWord:
    """Braid band move on the first moving strand.

    Every index rises by one (t becomes t_1) and sigma_1^sign is appended.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    letters = [x for letter in wd for x in _shift_letter(letter)]
    letters.append(S(1, sign))
    return MixedBraidWord(letters, wd.n + 1)


def conjugate(wd: MixedBraidWord, g: MixedBraidWord) -> MixedBraidWord:
    """g^-1 wd g."""
    n = max(wd.n, g.n)
    return MixedBraidWord(g.inverse().letters + wd.letters + g.letters, n)


def stabilize(wd: MixedBraidWord, sign: int) -> MixedBraidWord:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return MixedBraidWord(wd.letters + (S(wd.n, sign),), wd.n + 1)


def loop_conjugate(wd: MixedBraidWord, sign: int) -> MixedBraidWord:
    """t^sign wd t^-sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return MixedBraidWord((T(sign),) + wd.letters + (T(-sign),), wd.n)


def random_word(rng: random.Random, n: int, length: int, *, loops: bool = True) -> MixedBraidWord:
    """Seeded random word on ``n`` strands, for property checks."""
    letters: list[Letter] = []
    for _ in range(length):
        exponent = rng.choice((-2, -1, 1, 2)) if rng.random() < 0.3 else rng.choice((-1, 1))
        roll = rng.random()
        if n > 1 and roll < 0.55:
            letters.append(S(rng.randint(1, n - 1), exponent))
        elif loops and n > 1 and roll < 0.75:
            index = rng.randint(1, n - 1)
            maker = TL if rng.random() < 0.5 else TP
            letters.append(maker(index, exponent))
        else:
            letters.append(T(exponent))
    return MixedBraidWord(letters, n)
