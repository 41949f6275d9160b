"""Gap-closing rewrites for t-monomials, valid up to conjugation.

A monomial t_{i_1}^{k_1} ... t_{i_r}^{k_r} has a gap when some index i is
present while i - 1 is not. One step rewrites the loop t_i^{eps k} in front
of a word ``a``:

    t_i^{eps k} a  ~  q^{eps(k-1)} t_{i-1}^{eps k} s_i^eps a s_i^eps
                      + sum_{u=1}^{k-1} q^{eps(u-1)} (q^eps - 1) t_{i-1}^{eps u} t_i^{eps(k-u)} a s_i^eps

where ``~`` is equality after conjugation. The results are therefore only
meaningful under the trace and must never be fed back into multiplication.
"""

from __future__ import annotations

import logging
from typing import Iterable, NamedTuple

from .braidword import S, TL, MixedBraidWord
from .hecke import AlgebraElement, to_algebra
from .scalar import FIELD, Q, RatFunc

_logger = logging.getLogger(__name__)


class LoopTerm(NamedTuple):
    coef: RatFunc
    loops: tuple[tuple[int, int], ...]
    tail: MixedBraidWord

    def word(self, n: int) -> MixedBraidWord:
        return monomial_word(self.loops, self.tail, n)


def monomial_word(
    loops: Iterable[tuple[int, int]], tail: MixedBraidWord, n: int
) -> MixedBraidWord:
    """t_{i_1}^{k_1} ... followed by ``tail``, on ``n`` strands."""
    letters = [TL(i, k) for i, k in sorted(loops)]
    return MixedBraidWord(letters + list(tail.letters), max(n, tail.n))


def _split(exponent: int) -> tuple[int, int]:
    if exponent == 0:
        raise ValueError("Loop exponent must be nonzero")
    return (1 if exponent > 0 else -1), abs(exponent)


def gap_rewrite_terms(
    index: int, exponent: int, rest: MixedBraidWord
) -> list[tuple[RatFunc, MixedBraidWord]]:
    """One gap-reduction step for t_index^exponent * rest."""
    if index < 1:
        raise ValueError(f"Gap rewriting needs a loop index >= 1, got {index}")
    eps, k = _split(exponent)
    n = max(rest.n, index + 1)
    sigma = S(index, eps)
    body = list(rest.letters)
    terms = [
        (Q ** (eps * (k - 1)), MixedBraidWord([TL(index - 1, eps * k), sigma, *body, sigma], n))
    ]
    for u in range(1, k):
        coef = Q ** (eps * (u - 1)) * (Q**eps - 1)
        word = MixedBraidWord([TL(index - 1, eps * u), TL(index, eps * (k - u)), *body, sigma], n)
        terms.append((coef, word))
    return terms


def gap_rewrite(index: int, exponent: int, rest: MixedBraidWord) -> AlgebraElement:
    """The step as an algebra element; equal to the input only up to conjugation."""
    terms = gap_rewrite_terms(index, exponent, rest)
    n = max(w.n for _, w in terms)
    result = AlgebraElement.zero(n)
    for coef, word in terms:
        result = result + to_algebra(word.with_strands(n)).scale(coef)
    return result


def first_gap(loops: Iterable[tuple[int, int]]) -> int | None:
    """Smallest present index whose predecessor is absent."""
    present = {i for i, k in loops if k}
    for i in sorted(present):
        if i >= 1 and i - 1 not in present:
            return i
    return None


def close_gaps(
    loops: Iterable[tuple[int, int]], tail: MixedBraidWord | None = None, n: int | None = None
) -> list[LoopTerm]:
    """Rewrite P t_i^{eps k} L T until every monomial is gap free.

    P (indices below i) commutes with s_i and the rotations, and L (indices
    above i) commutes with s_i, so each step keeps the loops sorted:

        P t_{i-1}^{eps k} L s_i^eps T s_i^eps
        P t_{i-1}^{eps u} t_i^{eps(k-u)} L T s_i^eps
    """
    start = tuple(sorted((i, k) for i, k in loops if k))
    tail = tail if tail is not None else MixedBraidWord.identity()
    if n is None:
        n = max([tail.n] + [i + 1 for i, _ in start])
    work: list[LoopTerm] = [LoopTerm(FIELD(1), start, tail.with_strands(max(n, tail.n)))]
    done: list[LoopTerm] = []
    while work:
        term = work.pop()
        i = first_gap(term.loops)
        if i is None:
            done.append(term)
            continue
        exps = dict(term.loops)
        eps, k = _split(exps.pop(i))
        sigma = MixedBraidWord([S(i, eps)], term.tail.n)
        wrapped = sigma * term.tail * sigma
        work.append(
            LoopTerm(
                term.coef * Q ** (eps * (k - 1)),
                tuple(sorted({**exps, i - 1: eps * k}.items())),
                wrapped,
            )
        )
        for u in range(1, k):
            work.append(
                LoopTerm(
                    term.coef * Q ** (eps * (u - 1)) * (Q**eps - 1),
                    tuple(sorted({**exps, i - 1: eps * u, i: eps * (k - u)}.items())),
                    term.tail * sigma,
                )
            )
    _logger.debug("closed gaps of %s into %d terms", start, len(done))
    return done
