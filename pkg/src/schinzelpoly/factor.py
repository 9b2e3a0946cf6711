"""Irreducibility testing and factorization.

Univariate over GF(q): squarefree decomposition (with p-th-root descent),
distinct-degree, then seeded equal-degree splitting.  Univariate over Z/Q:
Yun squarefree decomposition, factorization mod a good prime, quadratic
Hensel lifting to a Landau-Mignotte-style bound, naive subset
recombination (subset size capped at 6, reported when exceeded).
Multivariate: Kronecker substitution x_i -> x^(D^(i-1)) with
D = 1 + max partial degree, univariate factorization of the image, and
subset recombination of unfolded factors (2^20 subsets cap, reported).

k[u] coefficients are handled by folding u in as one more variable over
the base field; content over k[u] is split off first, so no u-only factor
can survive into the recombination.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import BudgetExceededError, UnsupportedRingError, ZeroInputError
from .multipoly import MultiPoly, VarSet, poly_gcd
from .rings import (
    ExtField,
    IntegerRing,
    PolyRing,
    PrimeField,
    RationalField,
    RingElement,
    factor_int,
    is_perfect_power,
    u_add,
    u_deg,
    u_deriv,
    u_divmod,
    u_gcd,
    u_is_irreducible,
    u_monic,
    u_mul,
    u_powmod,
    u_rem,
    u_sub,
    u_trim,
    u_xgcd,
)

RECOMBINATION_SUBSET_CAP = 1 << 20
ZX_SUBSET_SIZE_CAP = 6


# ---------------------------------------------------------------------------
# Factorization container.
# ---------------------------------------------------------------------------

def _factor_sort_key(f: MultiPoly):
    return (f.total_degree(), f.sorted_terms())


@dataclass
class Factorization:
    """unit * prod(factor^multiplicity) == the factored polynomial, exactly.

    Factors are canonical-unit-normalized and sorted by (total degree,
    term order).  Constant factors appear when the content of the input
    is a nonunit (its irreducible ring elements, one per prime).
    """

    unit: RingElement
    factors: list

    @classmethod
    def build(cls, ring, vars, unit_value, pairs):
        merged = {}
        order = []
        for f, m in pairs:
            k = f.key()
            if k in merged:
                merged[k] = (merged[k][0], merged[k][1] + m)
            else:
                merged[k] = (f, m)
        items = sorted(merged.values(), key=lambda fm: _factor_sort_key(fm[0]))
        return cls(RingElement(ring, unit_value), list(items))

    def recompose(self) -> MultiPoly:
        acc = None
        for f, m in self.factors:
            p = f ** m
            acc = p if acc is None else acc * p
        if acc is None:
            raise ValueError("no factors; use recompose_over with an explicit variable set")
        return acc.scale(self.unit.value)

    def recompose_over(self, vars: VarSet) -> MultiPoly:
        ring = self.unit.ring
        acc = MultiPoly.constant(ring, vars, self.unit.value)
        for f, m in self.factors:
            acc = acc * (f ** m)
        return acc

    def is_single_irreducible(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def nonconstant_factors(self):
        return [(f, m) for f, m in self.factors if not f.is_constant()]


# ---------------------------------------------------------------------------
# Kronecker substitution.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KroneckerMap:
    """The fold x_i -> x^(D^(i-1)), injective on partial degrees < D."""

    D: int
    n: int
    source: tuple
    target: str = "x"

    def fold(self, f: MultiPoly) -> MultiPoly:
        return kronecker_fold(f, self.D, target=self.target)

    def unfold(self, g: MultiPoly, vars: VarSet) -> MultiPoly:
        return kronecker_unfold(g, self.D, len(vars), vars)


def kronecker_fold(f: MultiPoly, D: int, target: str = "x") -> MultiPoly:
    """Fold a multivariate polynomial to one variable; needs D > all partial degrees."""
    degs = f.degree_vector()
    if any(d >= D for d in degs):
        raise ValueError(f"Kronecker bound D={D} is not above the partial degrees {degs}")
    tvars = VarSet((target,))
    out = {}
    for e, v in f.terms.items():
        E = 0
        for i, ei in enumerate(e):
            E += ei * D ** i
        out[(E,)] = v
    return MultiPoly(f.ring, tvars, out)


def kronecker_unfold(g: MultiPoly, D: int, n: int, vars: VarSet) -> MultiPoly:
    """Inverse of the fold on images of the bounded-degree box."""
    if len(vars) != n:
        raise ValueError("variable count mismatch")
    if g.vars.names and len(g.vars) != 1:
        raise ValueError("unfold expects a univariate polynomial")
    if not g.is_zero() and g.total_degree() >= D ** n:
        raise ValueError(f"degree {g.total_degree()} too large for a D={D}, n={n} unfold")
    out = {}
    for e, v in g.terms.items():
        E = e[0]
        digits = []
        for _ in range(n):
            digits.append(E % D)
            E //= D
        out[tuple(digits)] = v
    return MultiPoly(g.ring, vars, out)


# ---------------------------------------------------------------------------
# GF(2) univariate fast path: polynomials as int bit masks.
# ---------------------------------------------------------------------------

def _gf2_from_dense(c):
    v = 0
    for i, x in enumerate(c):
        if x:
            v |= 1 << i
    return v


def _gf2_mod(a, m):
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _gf2_gcd(a, b):
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_sq(a):
    return int(bin(a)[2:], 4) if a else 0


def gf2_is_irreducible(a: int) -> bool:
    """Irreducibility of an F_2[x] polynomial packed as an int bit mask."""
    n = a.bit_length() - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    m = (n + 1) // 2
    even_mask = ((1 << (2 * m)) - 1) // 3
    deriv = (a >> 1) & even_mask
    if deriv == 0:
        return False
    if _gf2_gcd(a, deriv) != 1:
        return False
    h = 2  # the polynomial x
    for _ in range(n // 2):
        h = _gf2_mod(_gf2_sq(h), a)
        if _gf2_gcd(h ^ 2, a) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Univariate factorization over GF(q) (dense kernels from the rings module).
# ---------------------------------------------------------------------------

def _ff_ext_degree(K):
    return K.k if isinstance(K, ExtField) else 1


def _ff_pth_root(f, K):
    """Inverse Frobenius on a polynomial of the form g(x^p)."""
    p = K.characteristic
    e = p ** (_ff_ext_degree(K) - 1)
    out = []
    for i in range(0, u_deg(f) + 1, p):
        out.append(K.pow(f[i], e))
    return u_trim(out, K)


def _ff_sff(f, K):
    """Squarefree decomposition of a monic polynomial: [(monic part, mult)]."""
    p = K.characteristic
    out = []
    fp = u_deriv(f, K)
    if not fp:
        for g, m in _ff_sff(_ff_pth_root(f, K), K):
            out.append((g, m * p))
        return out
    c = u_gcd(f, fp, K)
    w = u_divmod(f, c, K)[0]
    i = 1
    while u_deg(w) > 0:
        y = u_gcd(w, c, K)
        z = u_divmod(w, y, K)[0]
        if u_deg(z) > 0:
            out.append((z, i))
        w = y
        c = u_divmod(c, y, K)[0]
        i += 1
    if u_deg(c) > 0:
        for g, m in _ff_sff(_ff_pth_root(c, K), K):
            out.append((g, m * p))
    return out


def _ff_ddf(f, K):
    """Distinct-degree split of a monic squarefree polynomial: [(product, d)]."""
    q = K.order
    res = []
    x = [K.zero, K.one]
    h = list(x)
    d = 0
    while u_deg(f) > 0:
        d += 1
        if 2 * d > u_deg(f):
            res.append((f, u_deg(f)))
            return res
        h = u_powmod(h, q, f, K)
        g = u_gcd(u_sub(h, x, K), f, K)
        if u_deg(g) > 0:
            res.append((g, d))
            f = u_divmod(f, g, K)[0]
            h = u_rem(h, f, K)
    return res


def _ff_random_poly(deg, K, rng):
    if isinstance(K, PrimeField):
        coeffs = [rng.randrange(K.p) for _ in range(deg)]
    else:
        coeffs = []
        for _ in range(deg):
            idx = rng.randrange(K.order)
            digits = []
            while idx:
                digits.append(idx % K.p)
                idx //= K.p
            coeffs.append(tuple(u_trim(digits, K.base)))
    return u_trim(coeffs, K)


def _ff_edf(g, d, K, rng):
    """Split a monic product of degree-d irreducibles (Cantor-Zassenhaus)."""
    if u_deg(g) == d:
        return [g]
    q = K.order
    p = K.characteristic
    k = _ff_ext_degree(K)
    while True:
        a = _ff_random_poly(u_deg(g), K, rng)
        if u_deg(a) < 1:
            continue
        if p == 2:
            t = list(a)
            acc = list(a)
            for _ in range(k * d - 1):
                t = u_powmod(t, 2, g, K)
                acc = u_rem(u_add(acc, t, K), g, K)
            h = u_gcd(acc, g, K)
        else:
            b = u_powmod(a, (q ** d - 1) // 2, g, K)
            h = u_gcd(u_sub(b, [K.one], K), g, K)
        if 0 < u_deg(h) < u_deg(g):
            rest = u_divmod(g, h, K)[0]
            return _ff_edf(h, d, K, rng) + _ff_edf(rest, d, K, rng)


def _ff_factor_monic_squarefree(f, K, rng):
    out = []
    for prod, d in _ff_ddf(f, K):
        out.extend(_ff_edf(prod, d, K, rng))
    return out


def _ff_factor_dense(f, K, seed=0):
    """Full factorization over GF(q): (lc, [(monic dense factor, mult)])."""
    lc, monic = u_monic(f, K)
    if u_deg(monic) == 0:
        return lc, []
    rng = random.Random(seed)
    out = []
    for part, mult in _ff_sff(monic, K):
        for fac in _ff_factor_monic_squarefree(part, K, rng):
            out.append((fac, mult))
    return lc, out


# ---------------------------------------------------------------------------
# Dense integer polynomial helpers (index = degree).
# ---------------------------------------------------------------------------

def _zx_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zx_deg(c):
    return len(c) - 1


def _zx_add(a, b):
    n = max(len(a), len(b))
    return _zx_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _zx_sub(a, b):
    n = max(len(a), len(b))
    return _zx_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _zx_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _zx_trim(out)


def _zx_trunc(a, M):
    """Coefficients reduced into the symmetric range (-M/2, M/2]."""
    half = M // 2
    out = []
    for c in a:
        c %= M
        if c > half:
            c -= M
        out.append(c)
    return _zx_trim(out)


def _zx_divmod_monic(a, b):
    """Division by a monic divisor over Z."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while r and len(r) >= len(b):
        c = r[-1]
        k = len(r) - len(b)
        q[k] = c
        for i in range(len(b)):
            r[k + i] -= c * b[i]
        _zx_trim(r)
    return _zx_trim(q), r


def _zx_try_div(a, b):
    """Exact division over Z, or None when b does not divide a."""
    if not b:
        return None
    if not a:
        return []
    if len(b) > len(a):
        return None
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while r and len(r) >= len(b):
        if r[-1] % b[-1]:
            return None
        c = r[-1] // b[-1]
        k = len(r) - len(b)
        q[k] = c
        for i in range(len(b)):
            r[k + i] -= c * b[i]
        _zx_trim(r)
    return q if not r else None


def _zx_content(a):
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
        if g == 1:
            break
    return g


def _zx_primitive(a):
    g = _zx_content(a)
    if g == 0:
        return 0, []
    return g, [c // g for c in a]


def _odd_primes():
    n = 3
    while True:
        if _is_small_prime(n):
            yield n
        n += 2


def _is_small_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, recursive halves) and Zassenhaus recombination.
# ---------------------------------------------------------------------------

def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to the same mod m^2."""
    M = m * m
    e = _zx_trunc(_zx_sub(f, _zx_mul(g, h)), M)
    q, r = _zx_divmod_monic(_zx_mul(s, e), h)
    q, r = _zx_trunc(q, M), _zx_trunc(r, M)
    u = _zx_add(_zx_mul(t, e), _zx_mul(q, g))
    G = _zx_trunc(_zx_add(g, u), M)
    H = _zx_trunc(_zx_add(h, r), M)
    u = _zx_add(_zx_mul(s, G), _zx_mul(t, H))
    b = _zx_trunc(_zx_sub(u, [1]), M)
    c, d = _zx_divmod_monic(_zx_mul(s, b), H)
    c, d = _zx_trunc(c, M), _zx_trunc(d, M)
    u = _zx_add(_zx_mul(t, b), _zx_mul(c, G))
    S = _zx_trunc(_zx_sub(s, d), M)
    T = _zx_trunc(_zx_sub(t, u), M)
    return G, H, S, T


def _hensel_lift(p, f, f_list, l):
    """Lift monic factors of f/lc mod p to monic factors mod p^l.

    Postcondition: f = lc(f) * prod(result) (mod p^l).
    """
    r = len(f_list)
    lc = f[-1]
    if r == 1:
        inv = pow(lc, -1, p ** l)
        return [_zx_trunc([c * inv for c in f], p ** l)]
    m = p
    k = r // 2
    d = math.ceil(math.log2(l)) if l > 1 else 0
    K = PrimeField(p)
    g = [lc % p]
    for fi in f_list[:k]:
        g = u_mul(g, fi, K)
    h = list(f_list[k])
    for fi in f_list[k + 1:]:
        h = u_mul(h, fi, K)
    gg, s, t = u_xgcd(g, h, K)
    if u_deg(gg) != 0:
        raise ArithmeticError("Hensel start: halves are not coprime mod p")
    g = _zx_trunc(list(g), p)
    h = _zx_trunc(list(h), p)
    s = _zx_trunc(list(s), p)
    t = _zx_trunc(list(t), p)
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, f_list[:k], l) + _hensel_lift(p, h, f_list[k:], l)


def _zx_factor_squarefree(f):
    """Irreducible factors of a primitive squarefree f with lc > 0, deg >= 1."""
    n = _zx_deg(f)
    if n == 1:
        return [list(f)]
    lc = f[-1]
    for p in _odd_primes():
        if lc % p == 0:
            continue
        K = PrimeField(p)
        fbar = u_trim([c % p for c in f], K)
        if u_deg(fbar) != n:
            continue
        if u_deg(u_gcd(fbar, u_deriv(fbar, K), K)) != 0:
            continue
        break
    _, fmonic = u_monic(fbar, K)
    rng = random.Random(0)
    modular = sorted(_ff_factor_monic_squarefree(fmonic, K, rng))
    if len(modular) == 1:
        return [list(f)]
    maxnorm = max(abs(c) for c in f)
    B = (math.isqrt(n + 1) + 1) * (1 << n) * maxnorm * abs(lc)
    l = 1
    while p ** l <= 2 * B:
        l += 1
    lifted = _hensel_lift(p, list(f), modular, l)
    P = p ** l

    result = []
    g = list(f)
    items = [_zx_trunc(list(it), P) for it in lifted]
    s = 1
    while items and 2 * s <= len(items):
        if s > ZX_SUBSET_SIZE_CAP:
            raise BudgetExceededError(
                f"integer recombination needs subsets larger than {ZX_SUBSET_SIZE_CAP}")
        found = False
        for combo in itertools.combinations(range(len(items)), s):
            prod = [g[-1] % P]
            for i in combo:
                prod = _zx_trunc(_zx_mul(prod, items[i]), P)
            cand = _zx_primitive(prod)[1]
            if cand and cand[-1] < 0:
                cand = [-c for c in cand]
            if not cand or _zx_deg(cand) < 1:
                continue
            q = _zx_try_div(g, cand)
            if q is not None:
                result.append(cand)
                g = q
                chosen = set(combo)
                items = [it for j, it in enumerate(items) if j not in chosen]
                found = True
                break
        if not found:
            s += 1
    if _zx_deg(g) >= 1:
        result.append(g)
    return result


# ---------------------------------------------------------------------------
# Conversions between MultiPoly and dense lists in one variable.
# ---------------------------------------------------------------------------

def _dense_in_var(f: MultiPoly, var):
    i = f.vars.index(var)
    d = f.degree_in(var)
    d = 0 if d == float("-inf") else int(d)
    out = [f.ring.zero] * (d + 1)
    for e, v in f.terms.items():
        out[e[i]] = v
    return u_trim(out, f.ring)


def _poly_from_dense(ring, vars: VarSet, var, dense):
    i = vars.index(var)
    zero = (0,) * len(vars)
    terms = {}
    for power, v in enumerate(dense):
        if ring.is_zero(v):
            continue
        e = list(zero)
        e[i] = power
        terms[tuple(e)] = v
    return MultiPoly(ring, vars, terms)


# ---------------------------------------------------------------------------
# The main factorization dispatch.
# ---------------------------------------------------------------------------

def factor_multivariate(f: MultiPoly, seed: int = 0) -> Factorization:
    """Complete factorization in R[vars] for R in {Z, Q, GF(q), k[u]}."""
    ring, vars = f.ring, f.vars
    if f.is_zero():
        raise ZeroInputError("cannot factor the zero polynomial")
    if isinstance(ring, PolyRing):
        return _factor_over_polyring(f, seed)
    if not isinstance(ring, (IntegerRing, RationalField, PrimeField, ExtField)):
        raise UnsupportedRingError(f"factorization over {ring} is not supported")

    pairs = []
    if ring.is_field:
        unit_value, pp = f.monic_normalize()
    else:
        c = f.content_value()
        pp = f.div_scalar(c)
        cunit, cfactors = ring.factor_value(c)
        for value, mult in cfactors:
            pairs.append((MultiPoly.constant(ring, vars, value), mult))
        sign, pp = pp.monic_normalize()
        unit_value = ring.mul(cunit, sign)

    if not pp.is_constant():
        pairs.extend(_factor_primitive(pp, seed))
    return Factorization.build(ring, vars, unit_value, pairs)


def _factor_primitive(pp: MultiPoly, seed):
    """Factor a canonical primitive nonconstant polynomial over Z/Q/GF(q)."""
    ring = pp.ring
    effective = [n for n in pp.vars.names if pp.degree_in(n) > 0]
    if len(effective) == 1:
        var = effective[0]
        if isinstance(ring, (PrimeField, ExtField)):
            return _factor_univariate_ff(pp, var, seed)
        if isinstance(ring, IntegerRing):
            return _factor_univariate_int(pp, var)
        return _factor_univariate_q(pp, var)
    return _factor_kronecker(pp, effective, seed)


def _factor_univariate_ff(pp, var, seed):
    K = pp.ring
    dense = _dense_in_var(pp, var)
    _, facs = _ff_factor_dense(dense, K, seed=seed)
    return [(_poly_from_dense(K, pp.vars, var, fac), m) for fac, m in facs]


def _yun_squarefree(f: MultiPoly, var):
    """Yun decomposition over a characteristic-0 ring: [(primitive part, mult)]."""
    d1 = f.derivative(var)
    g = poly_gcd(f, d1)
    if g.is_constant():
        return [(f, 1)]
    out = []
    b = f.try_divexact(g)
    c = d1.try_divexact(g)
    d = c - b.derivative(var)
    i = 1
    while True:
        if b.is_constant():
            break
        a = poly_gcd(b, d)
        if not a.is_constant():
            out.append((a, i))
        b = b.try_divexact(a)
        c = d.try_divexact(a)
        d = c - b.derivative(var)
        i += 1
    return out


def _factor_univariate_int(pp, var):
    out = []
    for part, mult in _yun_squarefree(pp, var):
        dense = [int(v) for v in _dense_in_var(part, var)]
        for fac in _zx_factor_squarefree(dense):
            out.append((_poly_from_dense(pp.ring, pp.vars, var, fac), mult))
    return out


def _factor_univariate_q(pp, var):
    from fractions import Fraction

    ring = pp.ring
    dense = _dense_in_var(pp, var)
    lcm = 1
    for v in dense:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in dense]
    _, prim = _zx_primitive(ints)
    zz = IntegerRing()
    zpoly = _poly_from_dense(zz, pp.vars, var, prim)
    out = []
    for zfac, mult in _factor_univariate_int(zpoly, var):
        qdense = [Fraction(int(c)) for c in _dense_in_var(zfac, var)]
        lc = qdense[-1]
        qdense = [c / lc for c in qdense]
        out.append((_poly_from_dense(ring, pp.vars, var, qdense), mult))
    return out


def _normalize_candidate(cand: MultiPoly):
    ring = cand.ring
    if not ring.is_field:
        cand = cand.primitive_part()
    return cand.monic_normalize()[1]


def _factor_kronecker(pp: MultiPoly, effective, seed):
    """Fold to one variable, factor, and recombine subsets of unfolded factors."""
    ring, vars = pp.ring, pp.vars
    sub_vars = VarSet(tuple(effective))
    collapsed = pp.embed(vars) if vars.names == sub_vars.names else _restrict(pp, sub_vars)
    D = 1 + max(collapsed.degree_in(v) for v in sub_vars.names)
    folded = kronecker_fold(collapsed, D, target=sub_vars.names[0])
    uni_pairs = _factor_primitive(_normalize_candidate(folded), seed)
    items = []
    for fac, mult in uni_pairs:
        items.extend([fac] * mult)
    items.sort(key=_factor_sort_key)

    # A proper factor of pp folds to a sub-multiset of at most half the
    # items, so searching sizes up to len//2 is complete.
    explored = 0
    for size in range(1, len(items) // 2 + 1):
        for combo in itertools.combinations(range(len(items)), size):
            explored += 1
            if explored > RECOMBINATION_SUBSET_CAP:
                raise BudgetExceededError(
                    f"Kronecker recombination exceeded {RECOMBINATION_SUBSET_CAP} subsets",
                    tested=explored)
            prod = items[combo[0]]
            for i in combo[1:]:
                prod = prod * items[i]
            cand = _normalize_candidate(kronecker_unfold(prod, D, len(sub_vars), sub_vars))
            if cand.is_constant():
                continue
            quotient = collapsed.try_divexact(cand)
            if quotient is None:
                continue
            mult = 1
            while True:
                nxt = quotient.try_divexact(cand)
                if nxt is None:
                    break
                quotient = nxt
                mult += 1
            out = [(_expand(cand, vars), mult)]
            if not quotient.is_constant():
                rest = _normalize_candidate(quotient)
                out.extend(_factor_primitive(_expand(rest, vars), seed))
            return out
    # No proper subset divides: pp is irreducible.
    return [(pp, 1)]


def _restrict(f: MultiPoly, sub_vars: VarSet):
    idx = [f.vars.index(n) for n in sub_vars.names]
    return MultiPoly(f.ring, sub_vars,
                     {tuple(e[i] for i in idx): v for e, v in f.terms.items()})


def _expand(f: MultiPoly, vars: VarSet):
    return f if f.vars == vars else f.embed(vars)


# ---------------------------------------------------------------------------
# k[u] coefficients: fold u in with the x variables over the base field.
# ---------------------------------------------------------------------------

def _lift_u(f: MultiPoly):
    ring: PolyRing = f.ring
    base = ring.base
    lifted_vars = VarSet(f.vars.names + ("u",))
    terms = {}
    for e, uval in f.terms.items():
        for j, c in enumerate(uval):
            if base.is_zero(c):
                continue
            terms[e + (j,)] = c
    return MultiPoly(base, lifted_vars, terms)


def _unlift_u(g: MultiPoly, ring: PolyRing, vars: VarSet):
    base = ring.base
    buckets = {}
    for e, c in g.terms.items():
        xe, j = e[:-1], e[-1]
        buckets.setdefault(xe, {})[j] = c
    terms = {}
    for xe, coeffs in buckets.items():
        d = max(coeffs)
        uval = tuple(coeffs.get(i, base.zero) for i in range(d + 1))
        terms[xe] = tuple(u_trim(list(uval), base))
    return MultiPoly(ring, vars, terms)


def _factor_over_polyring(f: MultiPoly, seed):
    ring: PolyRing = f.ring
    vars = f.vars
    pairs = []
    c = f.content_value()  # monic u-polynomial
    pp = f.div_scalar(c)
    cunit, cfactors = ring.factor_value(c, seed=seed)
    for value, mult in cfactors:
        pairs.append((MultiPoly.constant(ring, vars, value), mult))
    sign, pp = pp.monic_normalize()
    unit_value = ring.mul(cunit, sign)

    if not pp.is_constant():
        lifted = _lift_u(pp)
        base_fac = factor_multivariate(lifted, seed=seed)
        uval = base_fac.unit.value
        unit_value = ring.mul(unit_value, (uval,) if not ring.base.is_zero(uval) else ring.zero)
        for g, mult in base_fac.factors:
            back = _unlift_u(g, ring, vars)
            if back.is_constant():
                raise ArithmeticError("u-only factor survived content splitting")
            u2, back = back.monic_normalize()
            unit_value = ring.mul(unit_value, ring.pow(u2, mult))
            pairs.append((back, mult))
    return Factorization.build(ring, vars, unit_value, pairs)


def factor_poly_ring_value(ring: PolyRing, a, seed=0):
    """Factor a k[u] ring element; returns (unit value, [(value, mult)])."""
    base = ring.base
    V = VarSet(("u",))
    f = MultiPoly.from_terms(base, V, {(i,): c for i, c in enumerate(a)})
    if f.is_zero():
        raise ZeroInputError("cannot factor 0")
    fac = factor_multivariate(f, seed=seed)
    unit = (fac.unit.value,)
    out = []
    for g, m in fac.factors:
        d = int(g.degree_in("u"))
        coeffs = [base.zero] * (d + 1)
        for e, v in g.terms.items():
            coeffs[e[0]] = v
        out.append((tuple(coeffs), m))
    return unit, out


# ---------------------------------------------------------------------------
# Public univariate entry points.
# ---------------------------------------------------------------------------

def factor_univariate_finite_field(f: MultiPoly, seed: int = 0) -> Factorization:
    """Complete univariate factorization over GF(q)."""
    if not isinstance(f.ring, (PrimeField, ExtField)):
        raise UnsupportedRingError(f"{f.ring} is not a finite field")
    return factor_multivariate(f, seed=seed)


def factor_univariate_integers(f: MultiPoly) -> Factorization:
    """Complete univariate factorization over Z or Q (content split off)."""
    if not isinstance(f.ring, (IntegerRing, RationalField)):
        raise UnsupportedRingError(f"{f.ring} is not Z or Q")
    return factor_multivariate(f)


# ---------------------------------------------------------------------------
# Irreducibility with certificates.
# ---------------------------------------------------------------------------

@dataclass
class IrreducibilityCertificate:
    irreducible: bool
    reason: str          # "irreducible" | "unit/constant" | "content" | "reducible"
    witness: MultiPoly | None = None
    method: str = ""

    def __bool__(self):
        return self.irreducible


_SPECIALIZE_ATTEMPTS = 8


def _first_witness(f, seed):
    fac = factor_multivariate(f, seed=seed)
    for g, _ in fac.factors:
        return g
    return None


def is_irreducible(f: MultiPoly, method: str = "auto", seed: int = 0,
                   need_witness: bool = False) -> IrreducibilityCertificate:
    """Decide irreducibility in R[vars]; over a UFD this includes primitivity.

    method="kronecker" forces the fold-factor-recombine route for
    multivariate inputs (used by the oracle-equivalence sweeps);
    method="auto" adds sound shortcuts in front of it.
    """
    if f.is_zero():
        raise ZeroInputError("irreducibility of the zero polynomial is undefined")
    ring = f.ring
    if f.is_constant():
        return IrreducibilityCertificate(False, "unit/constant", None, "degree")
    if not ring.is_field:
        c = f.content_value()
        if not ring.is_unit(c):
            witness = MultiPoly.constant(ring, f.vars, c)
            return IrreducibilityCertificate(False, "content", witness, "content")

    if method == "kronecker":
        return _is_irreducible_via_factor(f, seed)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    effective = [n for n in f.vars.names if f.degree_in(n) > 0]

    # Degree-1-in-a-variable rule: exact, both directions.
    for v in effective:
        if f.degree_in(v) == 1:
            coeffs = f.coeffs_in(v)
            g = poly_gcd(coeffs[0], coeffs[1])
            if g.is_constant() and ring.is_unit(g.constant_value()):
                return IrreducibilityCertificate(True, "irreducible", None, "linear-variable")
            return IrreducibilityCertificate(False, "reducible",
                                             g if need_witness else None, "linear-variable")

    if len(effective) == 1:
        var = effective[0]
        if isinstance(ring, (PrimeField, ExtField)):
            if isinstance(ring, PrimeField) and ring.p == 2:
                ok = gf2_is_irreducible(_gf2_from_dense([int(v) for v in _dense_in_var(f, var)]))
            else:
                ok = u_is_irreducible(_dense_in_var(f, var), ring)
            if ok:
                return IrreducibilityCertificate(True, "irreducible", None, "univariate-ff")
            witness = _first_witness(f, seed) if need_witness else None
            return IrreducibilityCertificate(False, "reducible", witness, "univariate-ff")
        if isinstance(ring, (IntegerRing, RationalField)):
            return _is_irreducible_via_factor(f, seed)

    if isinstance(ring, (IntegerRing, RationalField, PrimeField, ExtField)):
        cert = _try_specialization_certificate(f, effective, seed)
        if cert is not None:
            return cert
    return _is_irreducible_via_factor(f, seed)


def _is_irreducible_via_factor(f, seed):
    fac = factor_multivariate(f, seed=seed)
    nontrivial = fac.factors
    if len(nontrivial) == 1 and nontrivial[0][1] == 1 and not nontrivial[0][0].is_constant():
        return IrreducibilityCertificate(True, "irreducible", None, "kronecker")
    witness = nontrivial[0][0] if nontrivial else None
    return IrreducibilityCertificate(False, "reducible", witness, "kronecker")


def _try_specialization_certificate(f, effective, seed):
    """Sound one-sided test: specialize all but one variable at points that
    preserve the main degree; an irreducible, degree-preserving univariate
    image of a polynomial with unit content w.r.t. the main variable proves
    irreducibility over the fraction field."""
    ring = f.ring
    main = max(effective, key=lambda v: f.degree_in(v))
    others = [v for v in effective if v != main]
    if not others:
        return None
    coeffs = f.coeffs_in(main)
    acc = None
    for c in coeffs:
        if c.is_zero():
            continue
        acc = c if acc is None else poly_gcd(acc, c)
        if acc.is_constant() and ring.is_unit(acc.constant_value()):
            break
    if not (acc.is_constant() and ring.is_unit(acc.constant_value())):
        return None
    if ring.is_finite:
        pool = ring.element_box()
    else:
        pool = [ring.from_int(n) for n in (1, -1, 2, -2, 3, 0, -3, 4)]
    deg_main = f.degree_in(main)
    attempts = 0
    for point in itertools.product(pool, repeat=len(others)):
        if attempts >= _SPECIALIZE_ATTEMPTS:
            break
        attempts += 1
        g = f.partial_eval(dict(zip(others, point)))
        if g.degree_in(main) != deg_main:
            continue
        if not ring.is_field:
            g = g.primitive_part()
        sub = is_irreducible(g, method="auto", seed=seed)
        if sub.irreducible:
            return IrreducibilityCertificate(True, "irreducible", None, "specialization")
    return None


# ---------------------------------------------------------------------------
# Brute-force oracle over small finite fields.
# ---------------------------------------------------------------------------

def _brute_candidates(f: MultiPoly, budget):
    """All canonical (monic-leading) nonconstant polynomials in f's degree box."""
    ring = f.ring
    if not ring.is_finite:
        raise UnsupportedRingError("brute force needs a finite field")
    degs = f.degree_vector()
    monomials = sorted(itertools.product(*[range(d + 1) for d in degs]))
    count = ring.order ** len(monomials)
    if count > budget:
        raise BudgetExceededError(
            f"brute-force box has {count} candidates, budget {budget}")
    box = ring.element_box()
    total_f = f.total_degree()
    out = []
    for assignment in itertools.product(box, repeat=len(monomials)):
        terms = {}
        for e, v in zip(monomials, assignment):
            if not ring.is_zero(v):
                terms[e] = v
        if not terms:
            continue
        g = MultiPoly(ring, f.vars, terms)
        td = g.total_degree()
        if td < 1 or td >= total_f:
            continue
        if g.leading_term()[1] != ring.one:
            continue
        out.append(g)
    out.sort(key=_factor_sort_key)
    return out


def brute_force_irreducible(f: MultiPoly, budget: int = 1 << 20) -> bool:
    """Ground truth by trial division over the whole smaller-degree box."""
    if f.is_zero():
        raise ZeroInputError("irreducibility of the zero polynomial is undefined")
    if f.is_constant():
        return False
    for g in _brute_candidates(f, budget):
        if f.try_divexact(g) is not None:
            return False
    return True


def brute_force_factor(f: MultiPoly, budget: int = 1 << 20) -> Factorization:
    """Full factorization over GF(q) by exhaustive trial division."""
    ring, vars = f.ring, f.vars
    if f.is_zero():
        raise ZeroInputError("cannot factor the zero polynomial")
    unit, rest = f.monic_normalize()
    pairs = []
    while not rest.is_constant():
        hit = None
        for g in _brute_candidates(rest, budget):
            if rest.try_divexact(g) is not None:
                hit = g
                break
        if hit is None:
            pairs.append((rest, 1))
            break
        mult = 0
        while True:
            q = rest.try_divexact(hit)
            if q is None:
                break
            rest = q
            mult += 1
        u2, rest = rest.monic_normalize()
        unit = ring.mul(unit, u2)
        pairs.append((hit, mult))
    return Factorization.build(ring, vars, unit, pairs)


# ---------------------------------------------------------------------------
# Capelli condition for b*y^rho + a.
# ---------------------------------------------------------------------------

def _fraction_field_profile(a: MultiPoly, b: MultiPoly, seed):
    """Factor -a/b in K(vars): returns (num, den, {factor key: exponent}).

    num/den are ring values collecting the constant (unit-in-K) part;
    the map carries exponents of the canonical nonconstant irreducibles.
    """
    ring = a.ring
    exps = {}

    def absorb(f, sign):
        fac = factor_multivariate(f, seed=seed)
        const = fac.unit.value
        for g, m in fac.factors:
            if g.is_constant():
                const = ring.mul(const, ring.pow(g.constant_value(), m))
            else:
                k = g.key()
                exps[k] = exps.get(k, 0) + sign * m
        return const

    num = absorb(a, +1)
    den = absorb(b, -1)
    return num, den, exps


def _constant_is_power(num, den, ring, ell):
    """Is num/den an ell-th power in the fraction field of the constants?"""
    if isinstance(ring, IntegerRing) or isinstance(ring, RationalField):
        from fractions import Fraction

        x = Fraction(num) / Fraction(den)
        if x == 0:
            return False
        if x < 0:
            if ell % 2 == 0:
                return False
            x = -x
        return is_perfect_power(x.numerator, ell) and is_perfect_power(x.denominator, ell)
    if isinstance(ring, (PrimeField, ExtField)):
        c = ring.mul(num, ring.inv(den))
        q = ring.order
        g = math.gcd(ell, q - 1)
        return ring.pow(c, (q - 1) // g) == ring.one
    if isinstance(ring, PolyRing):
        nu, nf = ring.factor_value(num)
        du, df = ring.factor_value(den)
        table = {}
        for v, m in nf:
            table[v] = table.get(v, 0) + m
        for v, m in df:
            table[v] = table.get(v, 0) - m
        if any(m % ell for m in table.values()):
            return False
        return _constant_is_power(nu[0] if nu else ring.base.zero,
                                  du[0], ring.base, ell)
    raise UnsupportedRingError(f"power test over {ring} not supported")


def capelli_check(a: MultiPoly, b: MultiPoly, rho: int, seed: int = 0) -> bool:
    """True iff b*y^rho + a is irreducible over K(vars) by the Capelli test:
    -a/b is no ell-th power for any prime ell dividing rho, and
    -a/b is not in -4*K(vars)^4 when 4 divides rho."""
    if a.is_zero() or b.is_zero():
        raise ZeroInputError("Capelli test needs nonzero a and b")
    if rho < 1:
        raise ValueError("rho must be a positive integer")
    g = poly_gcd(a, b)
    if not (g.is_constant() and a.ring.is_unit(g.constant_value())):
        raise ValueError("a and b must be relatively prime")
    if rho == 1:
        return True
    ring = a.ring
    num, den, exps = _fraction_field_profile(a, b, seed)
    neg_num = ring.neg(num)  # the constant part of -a/b
    for ell, _ in factor_int(rho):
        if all(m % ell == 0 for m in exps.values()):
            if _constant_is_power(neg_num, den, ring, ell):
                return False
    if rho % 4 == 0 and ring.characteristic != 2:
        # -a/b in -4K^4  <=>  a/(4b) is a fourth power
        den4 = ring.mul(den, ring.from_int(4))
        if all(m % 4 == 0 for m in exps.values()):
            if _constant_is_power(num, den4, ring, 4):
                return False
    return True
