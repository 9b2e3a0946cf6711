"""Ring arithmetic, canonical units, gcds and element factorization."""

import random

import pytest

from schinzelpoly.errors import RingMismatchError, ZeroInputError
from schinzelpoly.rings import (
    GF,
    QQ,
    ZZ,
    PolyRing,
    RingElement,
    factor_int,
    parse_ring,
    ring_factor,
    ring_gcd,
    ring_is_unit,
)

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)
F5 = GF(5)
R2u = PolyRing(F2)
R3u = PolyRing(F3)


def el(ring, v):
    return RingElement(ring, v)


def test_gcd_integers():
    assert ring_gcd(el(ZZ, 12), el(ZZ, 18)).value == 6
    assert ring_gcd(el(ZZ, -12), el(ZZ, 18)).value == 6
    assert ring_gcd(el(ZZ, 0), el(ZZ, 0)).value == 0


def test_gcd_prime_field_is_one():
    for a in range(1, 5):
        for b in range(1, 5):
            assert ring_gcd(el(F5, a), el(F5, b)).value == 1


def test_gcd_f2u():
    # u^2+u = u(u+1), u^2+1 = (u+1)^2: gcd is u+1
    a = el(R2u, (0, 1, 1))
    b = el(R2u, (1, 0, 1))
    assert ring_gcd(a, b).value == (1, 1)


def test_gcd_ring_mismatch():
    with pytest.raises(RingMismatchError):
        ring_gcd(el(ZZ, 1), el(F5, 1))


def test_units():
    assert ring_is_unit(el(ZZ, -1))
    assert ring_is_unit(el(ZZ, 1))
    assert not ring_is_unit(el(ZZ, 2))
    assert ring_is_unit(el(R3u, (2,)))       # constants of k[u] are units
    assert not ring_is_unit(el(R3u, (0, 1)))  # u is not


def test_factor_integer():
    unit, factors = ring_factor(el(ZZ, -12))
    assert unit.value == -1
    assert [(f.value, m) for f, m in factors] == [(2, 2), (3, 1)]


def test_factor_f2u():
    unit, factors = ring_factor(el(R2u, (0, 1, 1)))  # u^2+u
    assert unit.value == (1,)
    assert [(f.value, m) for f, m in factors] == [((0, 1), 1), ((1, 1), 1)]


def test_factor_field_element():
    from fractions import Fraction

    unit, factors = ring_factor(el(QQ, Fraction(7, 3)))
    assert unit.value == Fraction(7, 3)
    assert factors == []


def test_factor_zero_raises():
    with pytest.raises(ZeroInputError):
        ring_factor(el(ZZ, 0))


def test_factor_recomposition_random():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randrange(-500, 500)
        if n == 0:
            continue
        unit, factors = ring_factor(el(ZZ, n))
        acc = unit.value
        for f, m in factors:
            acc *= f.value ** m
        assert acc == n


def test_gcd_scaling_invariant():
    # gcd(ab, ac) == a * gcd(b, c) up to the canonical unit
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = (rng.randrange(-20, 21) for _ in range(3))
        if a == 0:
            continue
        lhs = ZZ.gcd(a * b, a * c)
        rhs = abs(a) * ZZ.gcd(b, c)
        assert lhs == rhs
    def rnd_u():
        coeffs = [rng.randrange(2) for _ in range(rng.randrange(1, 4))]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    for _ in range(60):
        a, b, c = rnd_u(), rnd_u(), rnd_u()
        if not a:
            continue
        lhs = R2u.gcd(R2u.mul(a, b), R2u.mul(a, c))
        rhs = R2u.mul(R2u.canonical_split(a)[1], R2u.gcd(b, c))
        assert lhs == rhs


def test_frobenius_fixed_points():
    # t^q == t for every element of small GF(q)
    for K in (F4, GF(2, 3), GF(3, 2)):
        for a in K.all_elements():
            assert K.pow(a, K.order) == a


def test_default_extension_moduli():
    # lexicographically smallest monic irreducible, coefficient vectors
    # compared low-to-high
    assert F4.modulus == [1, 1, 1]            # t^2 + t + 1
    assert GF(2, 3).modulus == [1, 0, 1, 1]   # t^3 + t^2 + 1 beats t^3 + t + 1
    assert GF(3, 2).modulus == [1, 0, 1]      # t^2 + 1 over GF(3)


def test_extension_field_inverse():
    K = GF(2, 3)
    for a in K.all_elements():
        if a:
            assert K.mul(a, K.inv(a)) == K.one


def test_parse_ring():
    assert parse_ring("Z") is ZZ
    assert parse_ring("Q") is QQ
    assert parse_ring("GF(5)") == F5
    assert parse_ring("GF(2^2)") == F4
    assert parse_ring("GF(2)[u]") == R2u
    assert parse_ring("Q[u]") == PolyRing(QQ)
    assert parse_ring(" GF( 7 ) [ u ] ") == PolyRing(GF(7))


def test_parse_ring_errors():
    from schinzelpoly.errors import ParseError

    with pytest.raises(ParseError):
        parse_ring("GF(6)")  # 6 not prime -> ValueError inside
    with pytest.raises(ParseError):
        parse_ring("Z[u]")
    with pytest.raises(ParseError):
        parse_ring("banana")


def test_factor_int_pollard():
    n = 1000003 * 1000033
    assert factor_int(n) == [(1000003, 1), (1000033, 1)]


def test_element_boxes_deterministic():
    assert ZZ.element_box(coeff_bound=2) == [0, 1, -1, 2, -2]
    assert F3.element_box() == [0, 1, 2]
    box = R2u.element_box(deg_bound=1)
    assert box == [(), (1,), (0, 1), (1, 1)]
    assert len(F4.element_box()) == 4


def test_poly_ring_canonical_split():
    unit, monic = R3u.canonical_split((1, 2))  # 2u + 1
    assert unit == (2,)
    assert monic == (2, 1)  # u + 2, monic
    assert R3u.mul(unit, monic) == (1, 2)
