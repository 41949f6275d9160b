"""The Hecke algebra H_{1,n}(q) of type B and its normal forms.

An element is a linear combination of normal words

    t^{k_0} t'_1^{k_1} ... t'_{n-1}^{k_{n-1}} * (type A tail)

where the tail is a product of descending runs g_l g_{l-1} ... g_j with
increasing heads l. Words are stored densely: ``loops`` holds one exponent per
loop generator (0 when absent) and ``tail`` holds, for each level l = 1..n-1,
the lowest index j of the run headed by g_l, or 0 when that level has no run.

Products are computed by right multiplication with single generators:

* g_i only touches the tail;
* t^{+-1} is pushed through the top strand using a table for t'_{n-1}^m t^eps,
  computed once on two strands and conjugated up by g_{n-1} ... g_2.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from . import budget
from .braidword import LetterKind, MixedBraidWord, expand_loops
from .errors import StrandMismatchError
from .scalar import FIELD, ONE, Q, RatFunc, Scalar, ScalarLike

_logger = logging.getLogger(__name__)

Tail = tuple[int, ...]
Loops = tuple[int, ...]
TailTerms = tuple[tuple[RatFunc, Tail], ...]

_ONE = FIELD(1)
_ZERO = FIELD(0)
_QINV = 1 / Q


class NormalWord(NamedTuple):
    loops: Loops
    tail: Tail

    @property
    def n(self) -> int:
        return len(self.loops)

    @classmethod
    def identity(cls, n: int) -> NormalWord:
        return cls((0,) * n, (0,) * (n - 1))

    @classmethod
    def build(
        cls,
        n: int,
        loops: Iterable[tuple[int, int]] = (),
        runs: Iterable[tuple[int, int]] = (),
    ) -> NormalWord:
        """Build from sparse ``(index, exponent)`` loops and ``(head, low)`` runs."""
        dense_loops = [0] * n
        for index, exponent in loops:
            if not 0 <= index < n:
                raise ValueError(f"Loop index {index} out of range for n={n}")
            dense_loops[index] = exponent
        dense_tail = [0] * (n - 1)
        for head, low in runs:
            if not 1 <= low <= head <= n - 1:
                raise ValueError(f"Run g_{head}..g_{low} out of range for n={n}")
            dense_tail[head - 1] = low
        return cls(tuple(dense_loops), tuple(dense_tail))

    def loop_items(self) -> list[tuple[int, int]]:
        return [(i, k) for i, k in enumerate(self.loops) if k]

    def runs(self) -> list[tuple[int, int]]:
        return [(level, low) for level, low in enumerate(self.tail, start=1) if low]

    def embed(self, n: int) -> NormalWord:
        if n < self.n:
            raise ValueError(f"Cannot embed {self.n} strands into {n}")
        pad = n - self.n
        return NormalWord(self.loops + (0,) * pad, self.tail + (0,) * pad)

    def generator_letters(self) -> list[tuple[str, int]]:
        """The word as generators: ("t", k) for t^k, ("g", +-i) for g_i^{+-1}."""
        letters: list[tuple[str, int]] = []
        for index, exponent in self.loop_items():
            letters.extend(prime_loop_letters(index, exponent))
        letters.extend(("g", j) for j in tail_letters(self.tail))
        return letters

    def render(self) -> str:
        parts: list[str] = []
        for index, exponent in self.loop_items():
            base = "t" if index == 0 else f"t{index}'"
            parts.append(base if exponent == 1 else f"{base}^{exponent}")
        parts.extend(f"s{j}" for j in tail_letters(self.tail))
        return " ".join(parts) or "1"

    def __str__(self) -> str:
        return self.render()


# --- type A tails ---


def run_letters(level: int, low: int) -> tuple[int, ...]:
    if low == 0:
        return ()
    return tuple(range(level, low - 1, -1))


@lru_cache(maxsize=None)
def tail_letters(tail: Tail) -> tuple[int, ...]:
    return tuple(j for level, low in enumerate(tail, start=1) for j in run_letters(level, low))


@lru_cache(maxsize=None)
def tail_times_g(tail: Tail, i: int) -> TailTerms:
    """tail * g_i in Jones normal form."""
    top = len(tail)
    low = tail[-1]
    lower = tail[:-1]
    if low == 0:
        if i < top:
            return tuple((c, t + (0,)) for c, t in tail_times_g(lower, i))
        return ((_ONE, lower + (top,)),)
    if i < low - 1:
        return tuple((c, t + (low,)) for c, t in tail_times_g(lower, i))
    if i == low - 1:
        return ((_ONE, lower + (low - 1,)),)
    if i == low:
        shorter = low + 1 if low < top else 0
        return ((Q - 1, tail), (Q, lower + (shorter,)))
    # the run absorbs g_i as g_{i-1} on its left
    return tuple((c, t + (low,)) for c, t in tail_times_g(lower, i - 1))


def _tail_times_generator(tail: Tail, letter: int) -> TailTerms:
    if letter > 0:
        return tail_times_g(tail, letter)
    # g^-1 = q^-1 g + (q^-1 - 1)
    terms = [(c * _QINV, t) for c, t in tail_times_g(tail, -letter)]
    terms.append((_QINV - 1, tail))
    return tuple(terms)


def _collect(pairs: Iterable[tuple[RatFunc, object]]) -> dict:
    acc: dict = defaultdict(lambda: _ZERO)
    for coef, key in pairs:
        acc[key] += coef
    return {key: coef for key, coef in acc.items() if coef}


@lru_cache(maxsize=None)
def tail_times_letters(tail: Tail, letters: tuple[int, ...]) -> TailTerms:
    """tail * g_{l_1}^{+-1} ... ; negative letters are inverses."""
    current: dict[Tail, RatFunc] = {tail: _ONE}
    for letter in letters:
        current = _collect(
            (c * c2, t2) for t, c in current.items() for c2, t2 in _tail_times_generator(t, letter)
        )
    return tuple((c, t) for t, c in sorted(current.items()))


# --- the two-strand table ---
#
# In H_{1,2} the basis x^i y^j g^d with x = t, y = t_1 = g x g is commutative in
# x, y. The primed basis x^i Y^j g^d with Y = t'_1 = g x g^-1 is reached by a
# triangular change of basis, descending in |j|.

_S2 = dict[tuple[int, int, int], RatFunc]


def _s2_times_g(elem: _S2) -> _S2:
    def terms():
        for (i, j, d), c in elem.items():
            if d == 0:
                yield c, (i, j, 1)
            else:
                yield c * (Q - 1), (i, j, 1)
                yield c * Q, (i, j, 0)

    return _collect(terms())


def _s2_times_ginv(elem: _S2) -> _S2:
    def terms():
        for key, c in _s2_times_g(elem).items():
            yield c * _QINV, key
        for key, c in elem.items():
            yield c * (_QINV - 1), key

    return _collect(terms())


def _s2_times_x(elem: _S2, eps: int) -> _S2:
    def terms():
        for (i, j, d), c in elem.items():
            if d == 0:
                yield c, (i + eps, j, 0)
            elif eps > 0:
                # g x = q^-1 y g + (q^-1 - 1) y
                yield c * _QINV, (i, j + 1, 1)
                yield c * (_QINV - 1), (i, j + 1, 0)
            else:
                # g x^-1 = q y^-1 g + (q - 1) x^-1
                yield c * Q, (i, j - 1, 1)
                yield c * (Q - 1), (i - 1, j, 0)

    return _collect(terms())


@lru_cache(maxsize=None)
def _s2_prime_power(b: int) -> tuple[tuple[tuple[int, int, int], RatFunc], ...]:
    """t'_1^b = g x^b g^-1 in the commutative basis."""
    elem: _S2 = _s2_times_g({(0, 0, 0): _ONE})
    eps = 1 if b > 0 else -1
    for _ in range(abs(b)):
        elem = _s2_times_x(elem, eps)
    elem = _s2_times_ginv(elem)
    return tuple(sorted(elem.items()))


def _h2_mul(x: tuple[RatFunc, RatFunc], y: tuple[RatFunc, RatFunc]) -> tuple[RatFunc, RatFunc]:
    a0, a1 = x
    b0, b1 = y
    return (a0 * b0 + Q * a1 * b1, a0 * b1 + a1 * b0 + (Q - 1) * a1 * b1)


def _h2_inverse(h: tuple[RatFunc, RatFunc]) -> tuple[RatFunc, RatFunc]:
    h0, h1 = h
    norm = h0**2 + (Q - 1) * h0 * h1 - Q * h1**2
    if not norm:
        raise ZeroDivisionError(f"Leading block {h} is not invertible in H_2")
    return ((h0 + (Q - 1) * h1) / norm, -h1 / norm)


@lru_cache(maxsize=None)
def _two_strand_table(m: int, eps: int) -> tuple[tuple[RatFunc, int, int, int], ...]:
    """t'_1^m t^eps = sum coef * t^a t'_1^b g_1^d, as (coef, a, b, d)."""
    elem = _s2_times_x(dict(_s2_prime_power(m)) if m else {(0, 0, 0): _ONE}, eps)
    primed: dict[tuple[int, int, int], RatFunc] = defaultdict(lambda: _ZERO)
    while elem:
        i, j, _ = max(elem, key=lambda key: (abs(key[1]), key[1], key[0], key[2]))
        if j == 0:
            for key, c in elem.items():
                primed[key] += c
            break
        block = (elem.get((i, j, 0), _ZERO), elem.get((i, j, 1), _ZERO))
        power = dict(_s2_prime_power(j))
        lead = (power.get((0, j, 0), _ZERO), power.get((0, j, 1), _ZERO))
        u0, u1 = _h2_mul(_h2_inverse(lead), block)
        primed[(i, j, 0)] += u0
        primed[(i, j, 1)] += u1
        # subtract x^i Y^j (u0 + u1 g)
        shifted = _collect(
            [(c * u0, key) for key, c in power.items()]
            + [(c * u1, key) for key, c in _s2_times_g(power).items()]
        )
        update = list(elem.items()) + [((a + i, b, d), -c) for (a, b, d), c in shifted.items()]
        elem = _collect((c, key) for key, c in update)
        if (i, j, 0) in elem or (i, j, 1) in elem:
            raise ArithmeticError(f"Change of basis failed to clear block x^{i} y^{j}")
    table = tuple((c, a, b, d) for (a, b, d), c in sorted(primed.items()) if c)
    _logger.debug("two-strand table t'_1^%d t^%d has %d terms", m, eps, len(table))
    return table


@lru_cache(maxsize=None)
def _conjugated_g1(n: int) -> TailTerms:
    """(g_{n-1} ... g_2) g_1 (g_{n-1} ... g_2)^-1 as type A tails."""
    gamma = tuple(range(n - 1, 1, -1))
    letters = gamma + (1,) + tuple(-j for j in range(2, n))
    return tail_times_letters((0,) * (n - 1), letters)


@lru_cache(maxsize=None)
def _loop_table(n: int, m: int, eps: int) -> tuple[tuple[RatFunc, int, int, Tail], ...]:
    """t'_{n-1}^m t^eps = sum coef * t^a t'_{n-1}^b * h, with h a type A tail."""
    zero = (0,) * (n - 1)
    if m == 0:
        return ((_ONE, eps, 0, zero),)
    entries: list[tuple[RatFunc, int, int, Tail]] = []
    for coef, a, b, d in _two_strand_table(m, eps):
        if d == 0:
            entries.append((coef, a, b, zero))
            continue
        for c2, h in _conjugated_g1(n):
            entries.append((coef * c2, a, b, h))
    return tuple(entries)


# --- normal words times generators ---

WordTerms = tuple[tuple[RatFunc, NormalWord], ...]


@lru_cache(maxsize=None)
def word_times_g(word: NormalWord, letter: int) -> WordTerms:
    """word * g_i (letter i > 0) or word * g_i^-1 (letter -i)."""
    return tuple(
        (c, NormalWord(word.loops, t)) for c, t in _tail_times_generator(word.tail, letter)
    )


@lru_cache(maxsize=None)
def word_times_t(word: NormalWord, eps: int) -> WordTerms:
    """word * t^eps for eps = +-1."""
    loops, tail = word
    n = len(loops)
    if n == 1:
        return ((_ONE, NormalWord((loops[0] + eps,), ())),)
    low = tail[-1]
    if low == 1:
        # g_{n-1} ... g_1 t = t'_{n-1} g_{n-1} ... g_1
        return ((_ONE, NormalWord(loops[:-1] + (loops[-1] + eps,), tail)),)
    lower = NormalWord(loops[:-1], tail[:-1])
    run = run_letters(n - 1, low)

    def terms():
        for coef, a, b, h in _loop_table(n, loops[-1], eps):
            for c1, (ll, lt) in word_times_t_power(lower, a):
                for c2, full in tail_times_letters(h, run):
                    for c3, lt2 in tail_times_letters(lt, tail_letters(full[:-1])):
                        yield coef * c1 * c2 * c3, NormalWord(ll + (b,), lt2 + (full[-1],))

    return tuple((c, w) for w, c in sorted(_collect(terms()).items()))


@lru_cache(maxsize=None)
def word_times_t_power(word: NormalWord, a: int) -> WordTerms:
    current: dict[NormalWord, RatFunc] = {word: _ONE}
    eps = 1 if a > 0 else -1
    for _ in range(abs(a)):
        current = _collect(
            (c * c2, w2) for w, c in current.items() for c2, w2 in word_times_t(w, eps)
        )
    return tuple((c, w) for w, c in sorted(current.items()))


def prime_loop_letters(index: int, exponent: int) -> tuple[tuple[str, int], ...]:
    """t'_index^exponent as generator letters."""
    if index == 0:
        return (("t", exponent),)
    return (
        tuple(("g", j) for j in range(index, 0, -1))
        + (("t", exponent),)
        + tuple(("g", -j) for j in range(1, index + 1))
    )


def word_times_letters(word: NormalWord, letters: Sequence[tuple[str, int]]) -> WordTerms:
    """Right multiply a single normal word by generator letters, charging the budget."""
    current: dict[NormalWord, RatFunc] = {word: _ONE}
    for kind, value in letters:
        if kind == "t":
            pairs = [(c * c2, w2) for w, c in current.items() for c2, w2 in word_times_t_power(w, value)]
        else:
            pairs = [(c * c2, w2) for w, c in current.items() for c2, w2 in word_times_g(w, value)]
        budget.charge(len(pairs))
        current = _collect(pairs)
    return tuple((c, w) for w, c in sorted(current.items()))


# --- algebra elements ---


class AlgebraElement:
    """Finite linear combination of normal words over the scalars."""

    __slots__ = ("n", "_terms")

    n: int
    _terms: dict[NormalWord, Scalar]

    def __init__(self, terms: Mapping[NormalWord, ScalarLike], n: int):
        cleaned: dict[NormalWord, Scalar] = {}
        for word, coef in terms.items():
            if word.n != n:
                raise StrandMismatchError(n, word.n)
            value = Scalar.coerce(coef)
            if value:
                cleaned[word] = value
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls, n: int) -> AlgebraElement:
        return cls({}, n)

    @classmethod
    def one(cls, n: int) -> AlgebraElement:
        return cls({NormalWord.identity(n): ONE}, n)

    @classmethod
    def of_word(cls, word: NormalWord, coef: ScalarLike = 1) -> AlgebraElement:
        return cls({word: coef}, word.n)

    def items(self) -> Iterator[tuple[NormalWord, Scalar]]:
        return iter(sorted(self._terms.items()))

    def words(self) -> list[NormalWord]:
        return sorted(self._terms)

    def coefficient(self, word: NormalWord) -> Scalar:
        return self._terms.get(word, Scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def embed(self, n: int) -> AlgebraElement:
        return AlgebraElement({w.embed(n): c for w, c in self._terms.items()}, n)

    def _check(self, other: AlgebraElement) -> None:
        if other.n != self.n:
            raise StrandMismatchError(self.n, other.n)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Scalar(0)) + c
        return AlgebraElement(acc, self.n)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement({w: -c for w, c in self._terms.items()}, self.n)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, factor: ScalarLike) -> AlgebraElement:
        f = Scalar.coerce(factor)
        return AlgebraElement({w: c * f for w, c in self._terms.items()}, self.n)

    def __mul__(self, other: AlgebraElement | ScalarLike) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> AlgebraElement:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c.render()}) * {w.render()}" for w, c in self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, terms={len(self._terms)})"


def _apply(
    terms: Mapping[NormalWord, Scalar],
    step,
) -> dict[NormalWord, Scalar]:
    acc: dict[NormalWord, Scalar] = {}
    for word, coef in terms.items():
        products = step(word)
        budget.charge(len(products))
        for c, w in products:
            value = coef * c
            acc[w] = acc[w] + value if w in acc else value
    return {w: c for w, c in acc.items() if c}


def times_generators(
    x: AlgebraElement, letters: Sequence[tuple[str, int]]
) -> AlgebraElement:
    """Right multiply by ("t", k) = t^k and ("g", +-i) = g_i^{+-1} in order."""
    terms = dict(x._terms)  # pyright: ignore[reportPrivateUsage]
    for kind, value in letters:
        if kind == "t":
            terms = _apply(terms, lambda w, a=value: word_times_t_power(w, a))
        else:
            if abs(value) >= x.n:
                raise StrandMismatchError(x.n, abs(value) + 1)
            terms = _apply(terms, lambda w, g=value: word_times_g(w, g))
    return AlgebraElement(terms, x.n)


def to_algebra(wd: MixedBraidWord) -> AlgebraElement:
    """Image of a braid word under t -> t, sigma_i -> g_i, in normal form."""
    letters: list[tuple[str, int]] = []
    for letter in expand_loops(wd):
        if letter.kind is LetterKind.T:
            letters.append(("t", letter.exponent))
        else:
            sign = 1 if letter.exponent > 0 else -1
            letters.extend(("g", sign * letter.index) for _ in range(abs(letter.exponent)))
    return times_generators(AlgebraElement.one(wd.n), letters)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.n != y.n:
        raise StrandMismatchError(x.n, y.n)
    result = AlgebraElement.zero(x.n)
    for word, coef in y.items():
        result = result + times_generators(x, word.generator_letters()).scale(coef)
    return result


def reduce(
    terms: Iterable[tuple[ScalarLike, MixedBraidWord]], n: int | None = None
) -> AlgebraElement:
    """Normal form of a linear combination of braid words."""
    pairs = list(terms)
    if n is None:
        n = max((wd.n for _, wd in pairs), default=1)
    result = AlgebraElement.zero(n)
    for coef, wd in pairs:
        result = result + to_algebra(wd.with_strands(n)).scale(coef)
    return result


def clear_caches() -> None:
    for cached in (
        tail_letters,
        tail_times_g,
        tail_times_letters,
        _s2_prime_power,
        _two_strand_table,
        _conjugated_g1,
        _loop_table,
        word_times_g,
        word_times_t,
        word_times_t_power,
    ):
        cached.cache_clear()
