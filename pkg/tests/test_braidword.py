import random

import pytest

from skeinbraid.braidword import (
    S,
    T,
    TL,
    TP,
    LetterKind,
    MixedBraidWord,
    bbm,
    conjugate,
    expand_loops,
    exponent_sum,
    loop_conjugate,
    parse,
    random_word,
    stabilize,
)
from skeinbraid.errors import BraidSyntaxError

# --- Parsing ---


def test_parse_mixed_word():
    wd = parse("t1 s1^-1 t1'^2")
    assert wd.letters == (TL(1), S(1, -1), TP(1, 2))
    assert wd.n == 2


def test_parse_plain_loop_and_exponents():
    assert parse("t^3 t^-1").letters == (T(2),)
    assert parse("t2^-2").letters == (TL(2, -2),)


def test_parse_empty_is_identity():
    wd = parse("")
    assert wd.is_identity()
    assert wd.n == 1
    assert str(wd) == "1"


def test_parse_infers_strands_from_highest_index():
    assert parse("s2").n == 3
    assert parse("t3'").n == 4


def test_parse_with_declared_strands():
    assert parse("s1", strands=4).n == 4


def test_parse_rejects_index_beyond_declared_strands():
    with pytest.raises(BraidSyntaxError, match="exceeds declared n=2") as exc_info:
        parse("t s2", strands=2)
    assert exc_info.value.position == 2


@pytest.mark.parametrize(
    "text, position",
    [
        ("t s0", 2),
        ("s1'", 0),
        ("t'", 0),
        ("s1^0", 0),
        ("s", 0),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(BraidSyntaxError) as exc_info:
        parse(text)
    assert exc_info.value.position == position
    assert exc_info.value.text == text


def test_parse_rejects_unknown_letters():
    with pytest.raises(BraidSyntaxError):
        parse("t x1")


def test_braid_syntax_error_is_value_error():
    with pytest.raises(ValueError):
        parse("s0")


def test_render_roundtrip():
    text = "t^2 t1 s2^-1 t2'^-3"
    assert parse(text).render() == text


# --- Words ---


def test_free_reduction():
    assert parse("s1 s1^-1 t t^-1").is_identity()
    assert parse("s1 s2 s2^-1 s1").letters == (S(1, 2),)


def test_inverse():
    wd = parse("t1 s2^-1 t2'^2 s1")
    assert (wd * wd.inverse()).is_identity()


def test_word_needs_enough_strands():
    with pytest.raises(ValueError, match="needs 3 moving strands"):
        MixedBraidWord([S(2)], 2)


def test_word_is_immutable():
    with pytest.raises(AttributeError):
        parse("t").n = 3


# --- Loop expansion and exponent sums ---


def test_expand_loops_uses_sigma_words():
    assert expand_loops(parse("t1")).letters == (S(1), T(1), S(1))
    assert expand_loops(parse("t1'^2")).letters == (S(1), T(2), S(1, -1))
    assert expand_loops(parse("t2^-1")).letters == (
        S(2, -1), S(1, -1), T(-1), S(1, -1), S(2, -1)
    )


def test_exponent_sum():
    assert exponent_sum(parse("t1")) == 2
    assert exponent_sum(parse("t1'^3")) == 0
    assert exponent_sum(parse("s1^3 s2^-1")) == 2
    assert exponent_sum(parse("t2^-1 s1")) == -3


def _loop_word(exps: list[int]) -> MixedBraidWord:
    letters = [T(exps[0])] + [TL(i, k) for i, k in enumerate(exps[1:], start=1)]
    return MixedBraidWord(letters, len(exps))


def test_exponent_sum_of_loop_monomials_and_their_band_moves():
    rng = random.Random(11)
    for _ in range(100):
        exps = [rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(rng.randint(1, 4))]
        wd = _loop_word(exps)
        weight = sum(2 * i * k for i, k in enumerate(exps))
        assert exponent_sum(wd) == weight
        for sign in (1, -1):
            shifted = sum(2 * (i + 1) * k for i, k in enumerate(exps))
            assert exponent_sum(bbm(wd, sign)) == shifted + sign


def test_expand_loops_is_multiplicative():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(1, 4)
        u = random_word(rng, n, rng.randint(0, 8))
        v = random_word(rng, n, rng.randint(0, 8))
        assert expand_loops(u * v) == expand_loops(u) * expand_loops(v)


# --- Moves ---


def test_bbm_shifts_t_to_t1():
    moved = bbm(parse("t"), 1)
    assert moved.letters == (TL(1), S(1))
    assert moved.n == 2


def test_bbm_shifts_sigma_and_loops():
    moved = bbm(parse("t2^-1 s1", strands=3), -1)
    assert moved.letters == (TL(3, -1), S(2), S(1, -1))
    assert moved.n == 4


def test_bbm_rewrites_primed_loops_through_their_expansion():
    moved = bbm(parse("t1'"), 1)
    assert moved.letters == (S(2), TL(1), S(2, -1), S(1))


def test_bbm_of_identity_is_a_single_crossing():
    assert bbm(MixedBraidWord.identity(), -1).letters == (S(1, -1),)


def test_bbm_rejects_bad_sign():
    with pytest.raises(ValueError, match="sign"):
        bbm(parse("t"), 0)


def test_stabilize_adds_a_strand():
    wd = stabilize(parse("t s1"), -1)
    assert wd.n == 3
    assert wd.letters[-1] == S(2, -1)


def test_conjugate_and_loop_conjugate():
    wd = parse("t s1")
    g = parse("s1^-1")
    assert conjugate(wd, g).letters == (S(1), T(1))
    assert loop_conjugate(wd, 1).letters == (T(2), S(1), T(-1))


def test_random_word_is_reproducible():
    a = random_word(random.Random(7), 3, 10)
    b = random_word(random.Random(7), 3, 10)
    assert a == b
    assert a.n == 3
    assert all(letter.kind in LetterKind for letter in a)
