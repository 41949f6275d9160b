import itertools
import random

import pytest

from skeinbraid.braidword import TL, TP, MixedBraidWord
from skeinbraid.elimination import eliminate
from skeinbraid.scalar import LAMBDA, Q, Z
from skeinbraid.skein import (
    LambdaMonomial,
    band_move_equation,
    build_system,
    cmp_lambda,
    cmp_s,
    enumerate_lambda_aug,
    lambda_key,
    max_of_level,
    min_of_level,
    s_key,
)
from skeinbraid.trace import SMonomial, TraceValue, s, trace_word


def L(*exps: int) -> LambdaMonomial:
    return LambdaMonomial(exps)


def LP(*exps: int) -> LambdaMonomial:
    return LambdaMonomial(exps, primed=True)


def _random_smonomial(rng: random.Random) -> SMonomial:
    return SMonomial(rng.randint(-6, 6) for _ in range(rng.randint(0, 5)))


# --- LambdaMonomial ---


def test_lambda_monomial_properties():
    mono = L(2, -1, 3)
    assert mono.index == 2
    assert mono.level == 4
    assert mono.in_lambda_aug()
    assert not mono.in_lambda()
    assert L(3, 1, 1).in_lambda()
    assert mono.trace_image() == s(-1, 2, 3)


def test_lambda_monomial_words():
    assert L(2, -1).word() == MixedBraidWord([TL(0, 2), TL(1, -1)], 2)
    assert LP(1, 2).word() == MixedBraidWord([TL(0, 1), TP(1, 2)], 2)
    assert L().word() == MixedBraidWord.identity()
    assert L(1, -1).render() == "t t1^-1"
    assert LP(2, 1).render() == "t^2 t1'"
    assert L().render() == "1"


def test_primed_words_trace_to_their_image():
    for mono in (LP(1), LP(2, 1), LP(-1, 3), LP(3, 1, -2)):
        assert trace_word(mono.word()) == TraceValue.of(mono.trace_image())


# --- Ordering on basis monomials ---


def test_cmp_lambda_by_sum():
    assert cmp_lambda(L(1), L(2)) == -1


def test_cmp_lambda_by_index():
    assert cmp_lambda(LP(2), LP(1, 1)) == -1
    assert cmp_lambda(LP(1, 1), LP(2)) == 1


def test_cmp_lambda_by_exponents_from_the_top():
    # |2| > |-1| on the last loop decides
    assert cmp_lambda(LP(-1, 2), LP(2, -1)) == 1
    # equal absolute values: the positive exponent is the smaller monomial
    assert cmp_lambda(LP(3, -1), LP(1, 1)) == 1
    assert cmp_lambda(LP(-1, 1), LP(1, -1)) == -1


def test_cmp_lambda_equal():
    assert cmp_lambda(L(2, -1), L(2, -1)) == 0


def test_cmp_lambda_rejects_mixed_primes():
    with pytest.raises(ValueError, match="primed"):
        cmp_lambda(L(1), LP(1))


# --- Ordering on s-monomials ---


@pytest.mark.parametrize(
    "smaller, larger",
    [
        ("s1 s3^2", "s2^2 s3 s4"),
        ("s2^2", "s1^2 s2"),
        ("s1^2 s2", "s1^4"),
        ("s2^2", "s1 s3"),
        ("s-5 s1 s4 s5", "s-5 s3^2 s4"),
        ("s-5 s1 s4 s5", "s-5 s2 s3 s5"),
    ],
)
def test_cmp_s_examples(smaller, larger):
    u, v = SMonomial.parse(smaller), SMonomial.parse(larger)
    assert cmp_s(u, v) == -1
    assert cmp_s(v, u) == 1


def test_cmp_s_is_a_total_order():
    rng = random.Random(31337)
    for _ in range(10_000):
        a, b, c = (_random_smonomial(rng) for _ in range(3))
        ab, ba = cmp_s(a, b), cmp_s(b, a)
        assert ab == -ba
        assert (ab == 0) == (a == b)
        if ab <= 0 and cmp_s(b, c) <= 0:
            assert cmp_s(a, c) <= 0


def test_s_k_is_the_minimum_of_its_level():
    rng = random.Random(8)
    by_level: dict[int, list[SMonomial]] = {}
    for _ in range(5_000):
        mono = _random_smonomial(rng)
        by_level.setdefault(mono.level, []).append(mono)
    for k in range(-5, 6):
        smallest = min_of_level(k)
        assert smallest == (s(k) if k else SMonomial())
        for mono in by_level.get(k, []):
            assert cmp_s(smallest, mono) <= 0


def test_min_and_max_of_level():
    assert min_of_level(3) == s(3)
    assert max_of_level(3) == s(1, 1, 1)
    assert min_of_level(-2) == s(-2)
    assert min_of_level(1) == max_of_level(1) == s(1)
    with pytest.raises(ValueError, match="positive level"):
        max_of_level(0)


def test_trace_images_respect_the_order_across_sums_and_indices():
    primed = [
        LP(*exps)
        for m in range(3)
        for exps in itertools.product([-2, -1, 1, 2, 3], repeat=m + 1)
        if LP(*exps).in_lambda()
    ]
    for a, b in itertools.combinations(primed, 2):
        if a.level == b.level and a.index == b.index:
            continue
        expected = cmp_lambda(a, b)
        assert cmp_s(a.trace_image(), b.trace_image()) == expected


def test_trace_images_can_reverse_the_order_at_equal_sum_and_index():
    a, b = LP(3, 1), LP(2, 2)
    assert cmp_lambda(a, b) == -1
    assert cmp_s(a.trace_image(), b.trace_image()) == 1


def test_different_monomials_can_share_a_trace():
    assert trace_word(LP(2, 1).word()) == trace_word(LP(1, 2).word()) == TraceValue.of(s(1, 2))


@pytest.mark.parametrize("exps", [(1,), (3,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_trace_of_a_positive_monomial_carries_its_image(exps):
    mono = L(*exps)
    weight = sum(i * k for i, k in enumerate(exps))
    assert trace_word(mono.word()).coefficient(mono.trace_image()) == Q**weight


def test_trace_of_a_monomial_can_contain_lower_terms():
    # tr(t t1) = q s1^2 + (q-1) z s2, and s2 sits below s1^2
    value = trace_word(L(1, 1).word())
    assert value.coefficient(s(2)) == (Q - 1) * Z
    assert cmp_s(s(2), s(1, 1)) == -1


# --- Enumeration ---


def test_enumerate_single_loop():
    assert enumerate_lambda_aug(1, 0, 1) == [L(1)]


def test_enumerate_level_zero_two_loops():
    assert enumerate_lambda_aug(0, 1, 1) == [L(-1, 1), L(1, -1)]


def test_enumerate_matches_brute_force():
    found = enumerate_lambda_aug(2, 1, 2)
    expected = [
        L(*exps)
        for m in range(2)
        for exps in itertools.product([-2, -1, 1, 2], repeat=m + 1)
        if sum(exps) == 2
    ]
    assert sorted(found, key=lambda_key) == found
    assert set(found) == set(expected)
    assert len(found) == len(expected)
    assert found[0] == L(2)


def test_enumerate_excludes_the_empty_monomial():
    assert L() not in enumerate_lambda_aug(0, 2, 2)


def test_enumerate_rejects_bad_bounds():
    with pytest.raises(ValueError, match="max_exp"):
        enumerate_lambda_aug(1, 0, 0)
    with pytest.raises(ValueError, match="max_strands"):
        enumerate_lambda_aug(1, -1, 1)


# --- Level systems ---


def test_k1_equation():
    eq = band_move_equation(L(1), 1)
    assert eq.lhs.monomials() == [s(1)]
    expected = 1 - LAMBDA / Z * (Q * (Q - 1) + (Q**2 - Q + 1) * Z)
    assert eq.lhs.coefficient(s(1)) == expected


def test_k1_system():
    system = build_system(1, 0, 1)
    assert [(eq.tau, eq.sign) for eq in system.equations] == [(L(1), 1), (L(1), -1)]
    assert system.unknowns == (s(1),)
    assert not system.equations[0].degenerate
    assert system.equations[1].degenerate


def test_k2_equations_match_closed_forms():
    lam = LAMBDA
    plus = lam**2 * (Q * (Q - 1) ** 3 + Q**2 * (Q - 1)) / (
        Z - lam**2 * ((Q - 1) ** 4 * Z + 3 * Q * (Q - 1) ** 2 * Z + Q**2 * (Q - 1) + Q**2 * Z)
    )
    minus = lam * Q * (Q - 1) / (Z * (1 - lam * (Q**2 - Q + 1)))
    for sign, closed in ((1, plus), (-1, minus)):
        eq = band_move_equation(L(2), sign)
        assert set(eq.lhs.monomials()) <= {s(2), s(1, 1)}
        a, b = eq.lhs.coefficient(s(1, 1)), eq.lhs.coefficient(s(2))
        assert b != 0
        # s2 = closed * s1^2
        assert a + b * closed == 0


def test_k0_equation_matches_closed_form():
    eq = band_move_equation(L(-1, 1), 1)
    assert set(eq.lhs.monomials()) <= {s(-1, 1), SMonomial()}
    a, b = eq.lhs.coefficient(s(-1, 1)), eq.lhs.coefficient(SMonomial())
    assert a != 0
    # s-1 s1 = z (z + 1 - q) / q
    assert a * (Z * (Z + 1 - Q) / Q) + b == 0


def test_k0_negative_band_move_relates_s_minus1_s1_to_one():
    eq = band_move_equation(L(-1, 1), -1)
    assert set(eq.lhs.monomials()) <= {s(-1, 1), SMonomial()}
    a, b = eq.lhs.coefficient(s(-1, 1)), eq.lhs.coefficient(SMonomial())
    assert a != 0
    # same value as the positive band move
    assert a * (Z * (Z + 1 - Q) / Q) + b == 0


def test_unknot_gives_degenerate_equations():
    system = build_system(0, 0, 1)
    assert [eq.tau for eq in system.equations] == [L(), L()]
    assert all(eq.degenerate for eq in system.equations)
    assert system.unknowns == ()


@pytest.mark.parametrize("k", range(-2, 4))
def test_level_confinement(k):
    system = build_system(k, 2, 2)
    assert system.equations
    assert all(u.level == k for u in system.unknowns)


@pytest.mark.parametrize("k", range(1, 4))
def test_single_loop_systems_express_s_k_through_pairs(k):
    system = build_system(k, 0, k)
    allowed = {s(k)} | {s(i, k - i) for i in range(1, k)}
    assert set(system.unknowns) <= allowed
    assert any(eq.lhs.coefficient(s(k)) != 0 for eq in system.equations)


@pytest.mark.parametrize("k", range(2, 5))
def test_band_move_of_t_power_involves_only_pairs_and_s_k(k):
    eq = band_move_equation(L(k), 1)
    pairs = {s(i, k - i) for i in range(1, k)}
    assert set(eq.lhs.monomials()) <= pairs | {s(k)}
    assert eq.lhs.coefficient(s(k)) != 0
    assert any(eq.lhs.coefficient(p) != 0 for p in pairs)


@pytest.mark.parametrize("k", [2, 3])
def test_elimination_expresses_s1_s_k_minus_1_through_s_k(k):
    solved = eliminate(build_system(k, 0, k, signs=(1,)))
    relation = solved.relation(s(1, k - 1))
    assert relation is not None
    assert relation.determined
    assert relation.coefficient != 0
    assert solved.minimal == s(k)


def test_system_json_and_render():
    system = build_system(1, 0, 1)
    data = system.to_json()
    assert data["level"] == 1
    assert data["bounds"] == {"max_strands": 0, "max_exp": 1}
    assert data["unknowns"] == [[[1, 1]]]
    assert data["equations"][1]["degenerate"] is True
    assert "tau=t sign=+" in system.render()


def test_unknowns_are_sorted_highest_first():
    system = build_system(2, 1, 2)
    keys = [s_key(u) for u in system.unknowns]
    assert keys == sorted(keys, reverse=True)
