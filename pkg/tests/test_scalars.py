"""Tests for exact algebraic scalar arithmetic."""

import math
import random
from fractions import Fraction

import pytest

from groupcoh import scalars
from groupcoh.errors import (
    AmbiguousRoot,
    DivisionByZero,
    FieldMismatch,
    FieldTooSmall,
    NoSignChange,
    NotSquarefree,
    UnsupportedOrder,
)
from groupcoh.scalars import AlgebraicScalar, cos_pi_over, field_create, scalar_sign, to_float

F = Fraction


def sqrt2_plus_sqrt5_field():
    return field_create([9, 0, -14, 0, 1], (3, 4))


def sqrt2_field():
    return field_create([-2, 0, 1], (1, 2))


# -- independent oracle for the quartic field ------------------------------
# Elements of Q(sqrt10) as pairs (p, q) meaning p + q*sqrt10.  theta =
# sqrt2 + sqrt5 satisfies theta^2 = 7 + 2*sqrt10, and powers of theta stay
# in the module spanned by {1, sqrt10} (even powers) so the quartic
# relation can be checked without any machinery from the package.

def q10_mul(a, b):
    return (a[0] * b[0] + 10 * a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def test_quartic_minimal_polynomial_oracle():
    theta_sq = (F(7), F(2))  # theta^2 = 7 + 2 sqrt10
    theta_4 = q10_mul(theta_sq, theta_sq)
    assert theta_4 == (F(89), F(28))
    # theta^4 - 14 theta^2 + 9 = 0
    value = (theta_4[0] - 14 * theta_sq[0] + 9, theta_4[1] - 14 * theta_sq[1])
    assert value == (0, 0)


def test_quartic_inverse_oracle():
    # 1/theta = theta*(14 - theta^2)/9 = theta*(7 - 2 sqrt10)/9; check
    # theta * that equals (7+2sqrt10)(7-2sqrt10)/9 = (49-40)/9 = 1.
    prod = q10_mul((F(7), F(2)), (F(7), F(-2)))
    assert prod == (9, 0)


# -- field creation ---------------------------------------------------------

def test_field_create_sqrt2():
    k = sqrt2_field()
    assert k.degree == 2
    assert abs(k.gen().to_float(6) - 1.41421) < 1e-5


def test_field_create_degree_one():
    k = field_create([-1, 1], (0, 2))  # x - 1
    assert k.degree == 1
    assert k.scalar(F(2, 3)) + k.scalar(F(1, 3)) == 1


def test_field_create_quartic():
    k = sqrt2_plus_sqrt5_field()
    theta = k.gen()
    assert (theta ** 4 - 14 * theta ** 2 + 9).is_zero()
    assert abs(theta.to_float(10) - (math.sqrt(2) + math.sqrt(5))) < 1e-9


def test_field_create_not_squarefree():
    with pytest.raises(NotSquarefree):
        field_create([1, -2, 1], (0, 2))  # (x-1)^2


def test_field_create_no_sign_change():
    with pytest.raises(NoSignChange):
        field_create([-2, 0, 1], (2, 3))
    with pytest.raises(NoSignChange):
        field_create([-2, 0, 1], (-2, 2))  # both roots: even count, no change


def test_field_create_ambiguous_root():
    # x^3 - 3x has roots -sqrt3, 0, sqrt3; (-2, 2) has a sign change but 3 roots
    with pytest.raises(AmbiguousRoot):
        field_create([0, -3, 0, 1], (-2, 2))


# -- arithmetic -------------------------------------------------------------

def test_sqrt2_squares_to_two():
    k = sqrt2_field()
    assert k.gen() * k.gen() == 2


def test_rational_arithmetic_in_field():
    k = sqrt2_field()
    assert k.scalar(F(1, 3)) + k.scalar(F(1, 6)) == F(1, 2)


def test_quartic_inverse():
    k = sqrt2_plus_sqrt5_field()
    theta = k.gen()
    expected = (14 * theta - theta ** 3) / 9
    assert theta.inverse() == expected
    assert theta * expected == 1


def test_division_by_zero():
    k = sqrt2_field()
    with pytest.raises(DivisionByZero):
        k.one() / k.zero()


def test_field_mismatch():
    a = sqrt2_field().gen()
    b = field_create([-3, 0, 1], (1, 2)).gen()
    with pytest.raises(FieldMismatch):
        a + b


def test_compatible_distinct_field_objects():
    a = sqrt2_field().gen()
    b = field_create([-2, 0, 1], (F(5, 4), F(3, 2))).gen()
    assert a == b


# -- sign -------------------------------------------------------------------

def test_sign_zero():
    assert scalar_sign(sqrt2_field().zero()) == 0


def test_sign_theta_minus_one():
    k = sqrt2_field()
    assert (k.gen() - 1).sign() == 1


def test_sign_three_minus_two_theta():
    # 3 - 2 sqrt2 > 0 because 9 > 8
    k = sqrt2_field()
    assert (3 - 2 * k.gen()).sign() == 1
    assert (2 * k.gen() - 3).sign() == -1


def test_sign_value_zero_in_reducible_modulus():
    # (x^2-2)(x^2-3) is squarefree but reducible; theta = sqrt2, and the
    # nonzero residue theta^2 - 2 evaluates to zero at theta.
    k = field_create([6, 0, -5, 0, 1], (F(13, 10), F(3, 2)))
    s = k.gen() ** 2 - 2
    assert not s.is_zero()
    assert s.sign() == 0


# -- to_float ---------------------------------------------------------------

def test_to_float_sqrt2():
    assert abs(to_float(sqrt2_field().gen(), 6) - 1.414214) < 2e-6


def test_to_float_rational():
    k = sqrt2_field()
    assert abs(to_float(k.scalar(F(1, 3)), 6) - 0.333333) < 2e-6


def test_to_float_plain_numbers():
    assert to_float(F(1, 2)) == 0.5
    assert to_float(3) == 3.0


# -- cosine table -----------------------------------------------------------

def test_cos_table_rational():
    k = sqrt2_field()
    assert cos_pi_over(2, k) == 0
    assert cos_pi_over(3, k) == F(1, 2)


def test_cos_quarter_in_sqrt2():
    k = sqrt2_field()
    assert cos_pi_over(4, k) == k.gen() / 2


def test_cos_fifth():
    k = sqrt2_plus_sqrt5_field()
    c = cos_pi_over(5, k)
    assert abs(c.to_float(6) - 0.809017) < 2e-6
    # (1 + sqrt5)/4 with sqrt5 = (17 theta - theta^3)/6
    theta = k.gen()
    sqrt5 = (17 * theta - theta ** 3) / 6
    assert c == (1 + sqrt5) / 4


def test_cos_defining_relations():
    k45 = sqrt2_plus_sqrt5_field()
    c4 = 2 * cos_pi_over(4, k45)
    c5 = 2 * cos_pi_over(5, k45)
    assert c4 * c4 == 2
    assert c5 * c5 - c5 - 1 == 0
    k6 = field_create([-3, 0, 1], (1, 2))
    c6 = 2 * cos_pi_over(6, k6)
    assert c6 * c6 == 3


def test_cos_seventh():
    k = field_create([1, -4, -4, 8], (F(1, 2), 1))
    c = cos_pi_over(7, k)
    assert c == k.gen()
    assert abs(c.to_float(8) - math.cos(math.pi / 7)) < 1e-7


def test_cos_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        cos_pi_over(8, sqrt2_field())


def test_cos_field_too_small():
    k3 = field_create([-3, 0, 1], (1, 2))
    with pytest.raises(FieldTooSmall):
        cos_pi_over(4, k3)
    krat = field_create([-1, 1], (0, 2))
    with pytest.raises(FieldTooSmall):
        cos_pi_over(5, krat)


# -- properties -------------------------------------------------------------

def random_scalar(k, rng):
    return k.scalar(tuple(F(rng.randint(-9, 9), rng.randint(1, 9))
                          for _ in range(k.degree)))


def test_field_axioms_random():
    k = sqrt2_plus_sqrt5_field()
    rng = random.Random(20240817)
    for _ in range(200):
        a, b, c = (random_scalar(k, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_sign_consistent_with_float():
    k = sqrt2_plus_sqrt5_field()
    rng = random.Random(7)
    for _ in range(100):
        a = random_scalar(k, rng)
        approx = a.to_float(8)
        if abs(approx) > 10 * 1e-8:
            assert scalar_sign(a) == (1 if approx > 0 else -1)


def test_serialization_round_trip():
    k = sqrt2_plus_sqrt5_field()
    d = k.to_dict()
    k2 = scalars.NumberField.from_dict(d)
    assert k2.min_poly == k.min_poly
    a = cos_pi_over(5, k)
    b = k2.scalar([scalars.parse_fraction(c) for c in a.to_list()])
    assert b == k.scalar([scalars.parse_fraction(c) for c in a.to_list()])
