"""Factorization, Kronecker substitution, irreducibility, Capelli checks."""

import itertools
import random

import pytest

from schinzelpoly.errors import BudgetExceededError, ZeroInputError
from schinzelpoly.factor import (
    KroneckerMap,
    brute_force_factor,
    brute_force_irreducible,
    capelli_check,
    factor_multivariate,
    factor_univariate_finite_field,
    factor_univariate_integers,
    gf2_is_irreducible,
    is_irreducible,
    kronecker_fold,
    kronecker_unfold,
)
from schinzelpoly.multipoly import MultiPoly, VarSet
from schinzelpoly.rings import GF, QQ, ZZ, PolyRing
from schinzelpoly.textform import parse_poly

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)
F5 = GF(5)
R2u = PolyRing(F2)

V1 = VarSet(("x",))
V2 = VarSet(("x1", "x2"))


def fstrs(fac):
    return [(str(g), m) for g, m in fac.factors]


# ---------------------------------------------------------------------------
# Kronecker substitution
# ---------------------------------------------------------------------------

def test_kronecker_fold_examples():
    f = parse_poly("x1 + x2", QQ, V2)
    assert str(kronecker_fold(f, 3)) == "x^3 + x"
    g = parse_poly("x1^2*x2 + 1", QQ, V2)
    assert str(kronecker_fold(g, 3)) == "x^5 + 1"


def test_kronecker_unfold_examples():
    g = parse_poly("x^3 + x", QQ, V1)
    assert kronecker_unfold(g, 3, 2, V2) == parse_poly("x1 + x2", QQ, V2)
    h = parse_poly("x^5 + 1", QQ, V1)
    assert kronecker_unfold(h, 3, 2, V2) == parse_poly("x1^2*x2 + 1", QQ, V2)
    z = MultiPoly.zero(QQ, V1)
    assert kronecker_unfold(z, 3, 2, V2).is_zero()


def test_kronecker_roundtrip_random():
    rng = random.Random(0)
    D = 4
    for _ in range(200):
        terms = {}
        for e in itertools.product(range(D), repeat=2):
            c = rng.randrange(-2, 3)
            if c:
                terms[e] = c
        f = MultiPoly.from_terms(ZZ, V2, terms)
        assert kronecker_unfold(kronecker_fold(f, D), D, 2, V2) == f


def test_kronecker_multiplicative():
    rng = random.Random(1)
    for _ in range(60):
        def rnd():
            terms = {}
            for e in itertools.product(range(2), repeat=2):
                c = rng.randrange(-2, 3)
                if c:
                    terms[e] = c
            return MultiPoly.from_terms(ZZ, V2, terms)

        f, g = rnd(), rnd()
        prod = f * g
        D = 1 + max(prod.degree_vector() or (0,))
        D = max(D, 2)
        assert kronecker_fold(prod, D) == kronecker_fold(f, D) * kronecker_fold(g, D)


def test_kronecker_bound_errors():
    f = parse_poly("x1^3", QQ, V2)
    with pytest.raises(ValueError):
        kronecker_fold(f, 3)
    g = parse_poly("x^9", QQ, V1)
    with pytest.raises(ValueError):
        kronecker_unfold(g, 3, 2, V2)


def test_kronecker_map_record():
    m = KroneckerMap(D=3, n=2, source=("x1", "x2"))
    f = parse_poly("x1*x2", QQ, V2)
    assert m.unfold(m.fold(f), V2) == f


# ---------------------------------------------------------------------------
# Univariate over finite fields
# ---------------------------------------------------------------------------

def test_ff_irreducible_quadratic():
    assert is_irreducible(parse_poly("x^2+x+1", F2, V1))


def test_ff_swan_polynomial():
    f = parse_poly("x^8 + x^3", F2, V1)
    fac = factor_univariate_finite_field(f)
    assert fstrs(fac) == [("x", 3), ("x + 1", 1), ("x^4 + x^3 + x^2 + x + 1", 1)]
    assert fac.recompose_over(V1) == f


def test_ff_square():
    fac = factor_univariate_finite_field(parse_poly("x^2", F3, V1))
    assert fstrs(fac) == [("x", 2)]


def test_ff_pth_power_descent():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2): derivative vanishes
    f = parse_poly("x^4 + x^2 + 1", F2, V1)
    fac = factor_univariate_finite_field(f)
    assert fstrs(fac) == [("x^2 + x + 1", 2)]


def test_ff_f4_splits_frobenius_orbit():
    f = parse_poly("x^4 + x", F4, V1)
    fac = factor_univariate_finite_field(f)
    assert len(fac.factors) == 4
    assert all(m == 1 for _, m in fac.factors)
    assert fac.recompose_over(V1) == f


def test_gf2_bit_kernel_agrees():
    # bit-packed test vs generic dense test on every poly of degree <= 8
    from schinzelpoly.rings import u_is_irreducible

    for bits in range(2, 1 << 9):
        dense = [(bits >> i) & 1 for i in range(bits.bit_length())]
        assert gf2_is_irreducible(bits) == u_is_irreducible(dense, F2)


def test_ff_random_recomposition():
    rng = random.Random(2)
    for K in (F2, F3, F5, F4):
        box = K.element_box()
        for _ in range(40):
            coeffs = [box[rng.randrange(len(box))] for _ in range(rng.randrange(2, 7))]
            terms = {(i,): c for i, c in enumerate(coeffs) if not K.is_zero(c)}
            f = MultiPoly(K, V1, terms)
            if f.is_zero() or f.is_constant():
                continue
            fac = factor_univariate_finite_field(f, seed=7)
            assert fac.recompose_over(V1) == f
            for g, _ in fac.factors:
                assert is_irreducible(g)


# ---------------------------------------------------------------------------
# Univariate over Z and Q
# ---------------------------------------------------------------------------

def test_z_difference_of_squares():
    fac = factor_univariate_integers(parse_poly("x^2 - 1", ZZ, V1))
    assert fstrs(fac) == [("x - 1", 1), ("x + 1", 1)]


def test_z_irreducible_quadratic():
    assert is_irreducible(parse_poly("x^2 + 1", ZZ, V1))
    assert is_irreducible(parse_poly("x^2 + x + 3", ZZ, V1))


def test_z_content_split():
    fac = factor_univariate_integers(parse_poly("2*x + 4", ZZ, V1))
    assert fstrs(fac) == [("2", 1), ("x + 2", 1)]
    assert str(fac.unit) == "1"


def test_z_multiplicities():
    f = parse_poly("x^4 + 2*x^3 + x^2", ZZ, V1)  # x^2 (x+1)^2
    fac = factor_univariate_integers(f)
    assert fstrs(fac) == [("x", 2), ("x + 1", 2)]


def test_z_needs_recombination():
    # (x^2+x+1)(x^2+1) stays irreducible mod small primes in pieces
    f = parse_poly("x^4 + x^3 + 2*x^2 + x + 1", ZZ, V1)
    fac = factor_univariate_integers(f)
    assert fstrs(fac) == [("x^2 + 1", 1), ("x^2 + x + 1", 1)]


def test_q_monic_normalization():
    f = parse_poly("2*x^2 - 2", QQ, V1)
    fac = factor_univariate_integers(f)
    assert str(fac.unit) == "2"
    assert fstrs(fac) == [("x - 1", 1), ("x + 1", 1)]


def test_z_random_products_vs_construction():
    rng = random.Random(3)
    for _ in range(40):
        parts = []
        for _ in range(rng.randrange(1, 4)):
            deg = rng.randrange(1, 4)
            coeffs = [rng.randrange(-5, 6) for _ in range(deg)] + [rng.choice([1, 1, 2, -1])]
            g = MultiPoly.from_terms(ZZ, V1, {(i,): c for i, c in enumerate(coeffs) if c})
            if g.total_degree() >= 1:
                parts.append(g)
        if not parts:
            continue
        f = parts[0]
        for g in parts[1:]:
            f = f * g
        fac = factor_univariate_integers(f)
        assert fac.recompose_over(V1) == f
        for g, _ in fac.factors:
            if not g.is_constant():
                assert is_irreducible(g), (str(f), str(g))


# ---------------------------------------------------------------------------
# Multivariate
# ---------------------------------------------------------------------------

def test_multivariate_q():
    f = parse_poly("x1^2 - x2^2", QQ, V2)
    fac = factor_multivariate(f)
    assert fstrs(fac) == [("x1 - x2", 1), ("x1 + x2", 1)]


def test_multivariate_consistency_with_univariate():
    f = parse_poly("x^8 + x^3", F2, V1)
    assert fstrs(factor_multivariate(f)) == fstrs(factor_univariate_finite_field(f))


def test_sum_of_squares_by_characteristic():
    assert is_irreducible(parse_poly("x1^2 + x2^2", QQ, V2), method="kronecker")
    fac = factor_multivariate(parse_poly("x1^2 + x2^2", F2, V2))
    assert fstrs(fac) == [("x1 + x2", 2)]


def test_multivariate_z_content_and_factors():
    f = parse_poly("2*x1^2*x2 - 2*x2", ZZ, V2)
    fac = factor_multivariate(f)
    assert fstrs(fac) == [("2", 1), ("x2", 1), ("x1 - 1", 1), ("x1 + 1", 1)]
    assert fac.recompose_over(V2) == f


def test_multivariate_three_vars():
    V3 = VarSet(("x1", "x2", "x3"))
    f = parse_poly("x1*x2 + x1*x3 + x2^2 + x2*x3", QQ, V3)  # (x1+x2)(x2+x3)
    fac = factor_multivariate(f)
    assert sorted(fstrs(fac)) == [("x1 + x2", 1), ("x2 + x3", 1)]
    assert fac.recompose_over(V3) == f


def test_polyring_coefficients():
    Vx1 = VarSet(("x1",))
    f = parse_poly("(u^2+u)*x1^2 + (u)*x1 + u^2+u", R2u, Vx1)
    fac = factor_multivariate(f)
    assert fac.recompose_over(Vx1) == f
    # content u splits off, the rest is irreducible over GF(2)[u]
    assert fstrs(fac)[0] == ("(u)", 1)
    for g, _ in fac.factors:
        if not g.is_constant():
            assert is_irreducible(g)


def test_factor_zero_raises():
    with pytest.raises(ZeroInputError):
        factor_multivariate(MultiPoly.zero(ZZ, V1))


# ---------------------------------------------------------------------------
# is_irreducible certificates
# ---------------------------------------------------------------------------

def test_irreducible_linear_primitive():
    assert is_irreducible(parse_poly("x1 + 2", ZZ, VarSet(("x1",))))


def test_reducible_by_content():
    cert = is_irreducible(parse_poly("2*x1 + 4", ZZ, VarSet(("x1",))), need_witness=True)
    assert not cert
    assert cert.reason == "content"
    assert str(cert.witness) == "2"


def test_unit_constant_reported():
    cert = is_irreducible(parse_poly("5", ZZ, V1))
    assert not cert and cert.reason == "unit/constant"
    with pytest.raises(ZeroInputError):
        is_irreducible(MultiPoly.zero(ZZ, V1))


def test_irreducible_over_z_implies_unit_content():
    rng = random.Random(4)
    for _ in range(60):
        terms = {(i,): rng.randrange(-4, 5) for i in range(4)}
        f = MultiPoly.from_terms(ZZ, V1, {e: c for e, c in terms.items() if c})
        if f.is_zero() or f.is_constant():
            continue
        if is_irreducible(f):
            assert ZZ.is_unit(f.content_value())


def test_witness_factor_divides():
    f = parse_poly("x^4 + x^3 + x + 1", ZZ, V1)  # (x+1)^2 (x^2-x+1)
    cert = is_irreducible(f, need_witness=True)
    assert not cert
    assert f.try_divexact(cert.witness) is not None


# ---------------------------------------------------------------------------
# Brute force oracle
# ---------------------------------------------------------------------------

def test_brute_force_examples():
    assert brute_force_irreducible(parse_poly("x1*x2 + 1", F2, V2))
    assert not brute_force_irreducible(parse_poly("x1*x2 + x1", F2, V2))


def test_brute_force_budget():
    f = parse_poly("x1^2*x2^2 + x1 + 1", F5, V2)
    with pytest.raises(BudgetExceededError):
        brute_force_irreducible(f, budget=100)


def test_oracle_equivalence_f3_sample():
    rng = random.Random(5)
    monos = sorted(itertools.product(range(3), repeat=2))
    for _ in range(120):
        terms = {}
        for e in monos:
            c = rng.randrange(3)
            if c:
                terms[e] = c
        f = MultiPoly(F3, V2, terms)
        if f.is_zero():
            continue
        assert bool(is_irreducible(f, method="kronecker")) == brute_force_irreducible(f)


def test_factor_count_matches_brute_force():
    rng = random.Random(6)
    for _ in range(40):
        terms = {}
        for e in itertools.product(range(3), repeat=2):
            if rng.random() < 0.4:
                terms[e] = 1
        f = MultiPoly(F2, V2, terms)
        if f.is_zero() or f.is_constant():
            continue
        a = sorted((str(g), m) for g, m in factor_multivariate(f).factors)
        b = sorted((str(g), m) for g, m in brute_force_factor(f).factors)
        assert a == b, str(f)


# ---------------------------------------------------------------------------
# Capelli condition
# ---------------------------------------------------------------------------

def test_capelli_examples():
    Vx = VarSet(("x1",))
    a = parse_poly("x1", QQ, Vx)
    one = parse_poly("1", QQ, Vx)
    assert capelli_check(a, one, 2)          # x1 is not a square
    neg = parse_poly("-x1^2", QQ, Vx)
    assert not capelli_check(neg, one, 2)    # -a/b = x1^2 is a square
    assert capelli_check(a, one, 1)          # rho = 1: nothing to check


def test_capelli_matches_direct_irreducibility():
    # For small cases, b*y^rho + a irreducible over Q(x) iff the test passes.
    Vx = VarSet(("x1",))
    Vxy = VarSet(("x1", "y"))
    cases = [
        ("x1", "1", 2), ("x1", "1", 3), ("x1^2", "1", 2), ("-x1^2", "1", 2),
        ("x1^3", "1", 3), ("x1 + 1", "x1", 2), ("4*x1^2", "1", 2),
        ("x1^2 + 1", "1", 2),
    ]
    for at, bt, rho in cases:
        a = parse_poly(at, QQ, Vx)
        b = parse_poly(bt, QQ, Vx)
        P = parse_poly(bt, QQ, Vxy) * parse_poly("y", QQ, Vxy) ** rho + \
            parse_poly(at, QQ, Vxy)
        got = capelli_check(a, b, rho)
        # direct check over Q[x1, y]; a, b coprime makes P primitive in y
        want = bool(is_irreducible(P))
        assert got == want, (at, bt, rho)


def test_capelli_minus4_fourth_power_clause():
    # y^4 - 4 x1^4 = (y^2 - 2x1^2)(y^2 + 2x1^2): the -4 K^4 clause catches it
    Vx = VarSet(("x1",))
    a = parse_poly("-4*x1^4", QQ, Vx)
    one = parse_poly("1", QQ, Vx)
    assert not capelli_check(a, one, 4)


def test_capelli_requires_coprime():
    Vx = VarSet(("x1",))
    with pytest.raises(ValueError):
        capelli_check(parse_poly("x1", QQ, Vx), parse_poly("x1", QQ, Vx), 2)


def test_capelli_over_gf5_constants():
    # y^2 + 2 over GF(5): -2 = 3 is not a square mod 5 -> irreducible
    # y^2 + 1: -1 = 4 = 2^2 is a square -> reducible
    Vx = VarSet(("x1",))
    two = parse_poly("2", F5, Vx)
    one = parse_poly("1", F5, Vx)
    assert capelli_check(two, one, 2)
    assert not capelli_check(one, one, 2)
    Vxy = VarSet(("x1", "y"))
    f = parse_poly("y^2 + 1", F5, Vxy)
    assert not is_irreducible(f.partial_eval({"x1": 0}))


def test_capelli_over_rational_function_field():
    # y^2 + u over GF(2)(u): u is no square (odd exponent), so irreducible
    Vx = VarSet(("x1",))
    a = parse_poly("u", R2u, Vx)
    one = parse_poly("1", R2u, Vx)
    assert capelli_check(a, one, 2)
    # y^2 + u^2 = (y + u)^2 in characteristic 2: u^2 is a square -> False
    a2 = parse_poly("u^2", R2u, Vx)
    assert not capelli_check(a2, one, 2)


# ---------------------------------------------------------------------------
# Factorization container invariants
# ---------------------------------------------------------------------------

def test_factors_sorted_and_merged():
    f = parse_poly("x^2 - 2*x + 1", ZZ, V1)  # (x-1)^2
    fac = factor_univariate_integers(f)
    assert fstrs(fac) == [("x - 1", 2)]
    degs = [g.total_degree() for g, _ in factor_multivariate(
        parse_poly("x^8 + x^3", F2, V1)).factors]
    assert degs == sorted(degs)
