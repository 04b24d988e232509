import itertools

import pytest
from hypothesis import given, strategies as st

from egqldpc.field import (
    FieldError,
    build_field,
    fe_arith,
    is_primitive,
    prime_power,
    subfield_elements,
)

from oracles import SlowField

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2), (7, 1), (2, 6)]


def test_f4_antilog_by_hand():
    # x^0 = 1, x^1 = x, x^2 = x + 1 modulo x^2 + x + 1
    f = build_field(2, 2, [1, 1, 1])
    assert f.antilog == (1, 2, 3)


def test_f2_prime_field():
    f = build_field(2, 1)
    assert f.antilog == (1,)


def test_f9_alpha4_is_minus_one():
    f = build_field(3, 2)
    orders = {a: SlowField(3, 2, f.spec.modulus).order_of(a) for a in range(1, 9)}
    assert orders[2] == 2
    assert f.alpha_pow(8) == 1
    assert f.alpha_pow(4) == 2


def test_default_modulus_is_smallest_primitive():
    assert build_field(2, 2).spec.modulus == (1, 1, 1)
    assert build_field(2, 3).spec.modulus == (1, 1, 0, 1)
    assert build_field(2, 4).spec.modulus == (1, 1, 0, 0, 1)
    # x^2 + 1 and x^2 + x + 2 are not primitive over F_3; x^2 + 2x + 2 ... is
    f9 = build_field(3, 2)
    for code in range(9, 9 + 9):
        coeffs = [code % 3, code // 3 % 3, 1]
        if tuple(coeffs) == f9.spec.modulus:
            break
        assert not is_primitive(coeffs, 3)


@pytest.mark.parametrize("p,t", SMALL_FIELDS)
def test_tables_against_slow_field(p, t):
    f = build_field(p, t)
    slow = SlowField(p, t, f.spec.modulus)
    assert len(set(f.antilog)) == p**t - 1
    assert f.antilog[0] == 1
    for i, a in enumerate(f.antilog):
        assert f.log[a] == i
    alpha = f.antilog[1] if p**t > 2 else 1
    assert slow.order_of(alpha) == p**t - 1
    for a, b in itertools.product(range(p**t), repeat=2):
        assert f.mul(a, b) == slow.mul(a, b)
        assert f.add(a, b) == slow.add(a, b)


@pytest.mark.parametrize("p,t", SMALL_FIELDS)
def test_log_homomorphism(p, t):
    f = build_field(p, t)
    for a, b in itertools.product(range(1, p**t), repeat=2):
        assert f.log[f.mul(a, b)] == (f.log[a] + f.log[b]) % (p**t - 1)


def test_primitivity_no_smaller_power():
    f = build_field(2, 5)
    x = 1
    for k in range(1, 31):
        x = f.mul(x, f.antilog[1])
        assert (x == 1) == (k == 31)


def test_fe_arith_examples():
    f4 = build_field(2, 2)
    x, x1 = f4.element(2), f4.element(3)
    assert fe_arith(x, x, "add").rep == 0
    assert fe_arith(x, x1, "mul").rep == 1
    f9 = build_field(3, 2)
    two = f9.element(2)
    assert fe_arith(two, two, "mul").rep == 1
    assert fe_arith(two, None, "inv").rep == 2


def test_fe_arith_errors():
    f4 = build_field(2, 2)
    f8 = build_field(2, 3)
    with pytest.raises(FieldError):
        f4.element(0).inverse()
    with pytest.raises(FieldError):
        f4.element(1) + f8.element(1)
    with pytest.raises(FieldError):
        f4.element(4)


def test_build_field_errors():
    with pytest.raises(FieldError):
        build_field(4, 2)
    with pytest.raises(FieldError):
        build_field(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2
    with pytest.raises(FieldError):
        build_field(2, 21)
    with pytest.raises(FieldError):
        build_field(2, 2, [1, 1])


def test_subfield_examples():
    f16 = build_field(2, 4)
    assert subfield_elements(f16, 4) == [0, 1, f16.alpha_pow(5), f16.alpha_pow(10)]
    assert subfield_elements(build_field(2, 2), 2) == [0, 1]
    f9 = build_field(3, 2)
    sub = subfield_elements(f9, 3)
    assert sorted(sub) == [0, 1, 2] and sub[2] == f9.alpha_pow(4) == 2
    with pytest.raises(FieldError):
        subfield_elements(f16, 8)
    with pytest.raises(FieldError):
        subfield_elements(f16, 3)


@pytest.mark.parametrize("p,t,q", [(2, 4, 4), (2, 6, 4), (2, 6, 8), (3, 2, 3), (3, 4, 9), (2, 4, 2)])
def test_subfield_closed_and_matches_frobenius(p, t, q):
    f = build_field(p, t)
    sub = subfield_elements(f, q)
    assert sorted(sub) == SlowField(p, t, f.spec.modulus).subfield(q)
    s = set(sub)
    for a, b in itertools.product(sub, repeat=2):
        assert f.add(a, b) in s
        assert f.mul(a, b) in s


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(FieldError):
        prime_power(6)


@given(st.integers(1, 255), st.integers(1, 255), st.integers(1, 255))
def test_f256_distributive(a, b, c):
    f = build_field(2, 8)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(a, f.inv(a)) == 1
