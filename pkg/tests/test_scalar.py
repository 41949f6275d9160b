import random
from fractions import Fraction

import pytest

from skeinbraid.scalar import (
    LAMBDA,
    ONE,
    Q,
    W,
    Z,
    ZERO,
    Scalar,
    as_ratfunc,
    delta,
    inv,
    sqrt_lambda_pow,
)


def _random_scalar(rng: random.Random) -> Scalar:
    a = rng.randint(-3, 3) * Q ** rng.randint(0, 2) + rng.randint(-2, 2) * Z + rng.randint(-1, 1)
    b = rng.randint(-2, 2) + rng.randint(0, 1) * Q * Z
    return Scalar(a, b)


# --- Construction and coercion ---


def test_int_and_fraction_coercion():
    assert Scalar(Fraction(1, 2)) * 2 == 1
    assert as_ratfunc(3) == 3 * ONE.a


def test_as_ratfunc_rejects_float():
    with pytest.raises(TypeError, match="float"):
        as_ratfunc(0.5)


def test_equality_with_plain_numbers():
    assert Scalar(3) == 3
    assert W != 0
    assert ZERO == 0


def test_has_w():
    assert W.has_w
    assert not Scalar(Q).has_w


def test_scalar_is_immutable():
    x = Scalar(1)
    with pytest.raises(AttributeError, match="immutable"):
        x._a = Q


# --- Field operations ---


def test_w_squares_to_lambda():
    assert W * W == Scalar(LAMBDA)


def test_delta_times_w_is_one_over_z():
    assert delta() * W == Scalar(1 / Z)


def test_inverse_roundtrip():
    x = Scalar(Q + 1, Z)
    assert x * x.inverse() == ONE
    assert inv(x) == x.inverse()


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_division_by_scalar():
    x = Scalar(Q, 2)
    assert (x / x) == 1
    assert 1 / W == W / Scalar(LAMBDA)


@pytest.mark.parametrize("e", range(-3, 5))
def test_sqrt_lambda_pow_matches_power_of_w(e):
    assert sqrt_lambda_pow(e) == W**e


def test_negative_lambda_powers_are_normalised():
    for e in (-1, -2, -3, -4):
        assert sqrt_lambda_pow(e) == W**e
        assert hash(sqrt_lambda_pow(e)) == hash(W**e)
    # sympy leaves the sign of a raw negative power unnormalised
    raw = LAMBDA**-1
    assert as_ratfunc(raw).denom.LC > 0
    assert Scalar(raw) == Scalar(1 / LAMBDA)
    assert hash(Scalar(raw)) == hash(Scalar(1 / LAMBDA))


def test_ring_laws_on_random_scalars():
    rng = random.Random(20240611)
    for _ in range(30):
        x, y, z = (_random_scalar(rng) for _ in range(3))
        assert (x + y) * z == x * z + y * z
        assert x * (y * z) == (x * y) * z
        assert x * y == y * x
        assert x - x == 0


# --- Rendering ---


def test_render_integer_and_w():
    assert ONE.render() == "1"
    assert W.render() == "w"


def test_render_fraction():
    assert Scalar(1 / Q).render() == "(1)/(q)"


def test_to_json():
    assert Scalar(1 / Q).to_json() == {"num": "1", "den": "q", "has_w": False}
    assert W.to_json()["has_w"] is True
