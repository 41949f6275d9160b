"""Closed-form recursions for traces of t^p t_1^k (g_1^{+-1}).

These never touch the normal form engine, so agreeing with ``markov_trace``
is a real cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .scalar import Q, Z
from .trace import SMonomial, TraceValue


@lru_cache(maxsize=None)
def oracle_tr_tp_t1k(p: int, k: int) -> TraceValue:
    """tr(t^p t_1^k) = q^k s_k s_p - sum_{j=1}^{k} q^j (q^-1 - 1) tr(t^{p+j-1} t_1^{k+1-j} g_1^-1)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return TraceValue.of(SMonomial((p,)))
    total = TraceValue.of(SMonomial((k, p)), Q**k)
    for j in range(1, k + 1):
        total = total - oracle_tr_tp_t1k_g1(p + j - 1, k + 1 - j, -1).scale(Q**j * (1 / Q - 1))
    return total


@lru_cache(maxsize=None)
def oracle_tr_tp_t1k_g1(p: int, k: int, sign: int) -> TraceValue:
    """tr(t^p t_1^k g_1^sign).

    sign = +1: q^k z s_{p+k} + sum_{j=0}^{k-1} q^j (q-1) tr(t^{p+j} t_1^{k-j})
    sign = -1: q^{k-1} z s_{p+k} + sum_{j=0}^{k-2} q^j (q-1) tr(t^{p+1+j} t_1^{k-1-j})
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if sign == 1:
        total = TraceValue.of(SMonomial((p + k,)), Q**k * Z)
        for j in range(k):
            total = total + oracle_tr_tp_t1k(p + j, k - j).scale(Q**j * (Q - 1))
        return total
    if sign == -1:
        # t_1^k g_1^-1 = t_1^{k-1} g_1 t
        total = TraceValue.of(SMonomial((p + k,)), Q ** (k - 1) * Z)
        for j in range(k - 1):
            total = total + oracle_tr_tp_t1k(p + 1 + j, k - 1 - j).scale(Q**j * (Q - 1))
        return total
    raise ValueError(f"sign must be +1 or -1, got {sign}")


@lru_cache(maxsize=None)
def oracle_tr_tp_t1k_g1_stepdown(p: int, k: int) -> TraceValue:
    """tr(t^p t_1^k g_1) by lowering the t_1 exponent one step at a time.

    (q^2 - q + 1) tr(t^{p+1} t_1^{k-1} g_1) + q^k (q-1) s_k s_p
    + sum_{j=2}^{k} q^{j-1} (q-1)^2 tr(t^{p+j} t_1^{k-j} g_1),  with tr(t^p g_1) = z s_p.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return TraceValue.of(SMonomial((p,)), Z)
    total = oracle_tr_tp_t1k_g1_stepdown(p + 1, k - 1).scale(Q**2 - Q + 1)
    total = total + TraceValue.of(SMonomial((k, p)), Q**k * (Q - 1))
    for j in range(2, k + 1):
        # the t exponent grows while the t_1 exponent shrinks
        total = total + oracle_tr_tp_t1k_g1_stepdown(p + j, k - j).scale(Q ** (j - 1) * (Q - 1) ** 2)
    return total
