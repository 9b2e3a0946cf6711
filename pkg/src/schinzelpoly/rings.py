"""Coefficient rings: Z, Q, GF(p), GF(p^k), and k[u] over such a field.

Every ring exposes one raw-value protocol (add/mul/gcd/units/canonical
normalization/factorization) so the polynomial layers above never have to
know which ring they are working over.  Values are plain hashable Python
objects:

    Z       -> int
    Q       -> fractions.Fraction
    GF(p)   -> int in [0, p)
    GF(p^k) -> tuple of ints (coefficients of t, low to high, stripped)
    k[u]    -> tuple of base-field values (coefficients of u, stripped)

Canonical units: over Z the canonical representative of an associate class
is nonnegative, over fields it is 1, over k[u] it is monic.  All gcds are
returned canonically normalized, so factorization outputs compare exactly.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, RingMismatchError, ZeroInputError


# ---------------------------------------------------------------------------
# Dense univariate arithmetic over a field ring.
#
# Polynomials are lists of raw field values, index = degree, no trailing
# zeros ([] is the zero polynomial).  These kernels serve double duty: they
# implement GF(p^k) and k[u] element arithmetic here, and the factor module
# builds its finite-field factorization on top of them.
# ---------------------------------------------------------------------------

def u_trim(c, K):
    while c and K.is_zero(c[-1]):
        c.pop()
    return c


def u_deg(c):
    return len(c) - 1  # -1 for the zero polynomial


def u_add(a, b, K):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.add(x, y))
    return u_trim(out, K)


def u_sub(a, b, K):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.sub(x, y))
    return u_trim(out, K)


def u_neg(a, K):
    return [K.neg(x) for x in a]


def u_scale(a, s, K):
    if K.is_zero(s):
        return []
    return u_trim([K.mul(x, s) for x in a], K)


def u_mul(a, b, K):
    if not a or not b:
        return []
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return u_trim(out, K)


def u_divmod(a, b, K):
    """Euclidean division in K[x], K a field.  Returns (q, r)."""
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    r = list(a)
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    inv_lc = K.inv(b[-1])
    db = len(b) - 1
    while len(r) >= len(b):
        c = K.mul(r[-1], inv_lc)
        d = len(r) - 1 - db
        q[d] = c
        for i in range(len(b)):
            r[d + i] = K.sub(r[d + i], K.mul(c, b[i]))
        u_trim(r, K)
        if not r:
            break
    return u_trim(q, K), r


def u_rem(a, b, K):
    return u_divmod(a, b, K)[1]


def u_monic(a, K):
    """Scale to leading coefficient 1.  Returns (lc, monic)."""
    if not a:
        return K.one, []
    lc = a[-1]
    if lc == K.one:
        return lc, list(a)
    return lc, u_scale(a, K.inv(lc), K)


def u_gcd(a, b, K):
    """Monic gcd in K[x] (zero for gcd(0,0))."""
    a, b = list(a), list(b)
    while b:
        a, b = b, u_rem(a, b, K)
    return u_monic(a, K)[1]


def u_xgcd(a, b, K):
    """Extended Euclid: returns (g, s, t) with g monic and s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = u_divmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, u_sub(s0, u_mul(q, s1, K), K)
        t0, t1 = t1, u_sub(t0, u_mul(q, t1, K), K)
    if not r0:
        return [], s0, t0
    lc = r0[-1]
    inv = K.inv(lc)
    return u_scale(r0, inv, K), u_scale(s0, inv, K), u_scale(t0, inv, K)


def u_powmod(a, e, m, K):
    """a^e mod m by square and multiply."""
    result = [K.one]
    base = u_rem(a, m, K)
    while e > 0:
        if e & 1:
            result = u_rem(u_mul(result, base, K), m, K)
        base = u_rem(u_mul(base, base, K), m, K)
        e >>= 1
    return result


def u_deriv(a, K):
    out = []
    for i in range(1, len(a)):
        out.append(K.mul(a[i], K.from_int(i)))
    return u_trim(out, K)


def u_eval(a, x, K):
    acc = K.zero
    for c in reversed(a):
        acc = K.add(K.mul(acc, x), c)
    return acc


def u_is_irreducible(f, K):
    """Irreducibility test in GF(q)[x] via x^(q^d) fixed-point gcds.

    Early exit on the first small-degree factor found, which makes
    reducible inputs cheap.
    """
    n = u_deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    q = K.order
    fp = u_deriv(f, K)
    if not fp:
        return False  # p-th power
    if u_deg(u_gcd(f, fp, K)) > 0:
        return False
    x = [K.zero, K.one]
    h = list(x)
    for _ in range(n // 2):
        h = u_powmod(h, q, f, K)
        if u_deg(u_gcd(u_sub(h, x, K), f, K)) > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Integer primality and factorization (trial division, then Pollard rho).
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
_TRIAL_LIMIT = 1 << 20


def is_prime(n):
    """Deterministic Miller-Rabin for the sizes this package meets."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = _int_gcd(abs(x - y), n)
        if d != n:
            return d


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def factor_int(n):
    """Prime factorization of a positive integer as a sorted list of (p, e)."""
    if n <= 0:
        raise ZeroInputError("factor_int needs a positive integer")
    out = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.append(d)
            stack.append(m // d)
    return sorted(out.items())


def _int_nth_root(n, k):
    """Floor k-th root of a nonnegative integer."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / k))) + 1
    while x ** k > n:
        x -= 1
    return x


def is_perfect_power(n, k):
    """True iff the nonnegative integer n is a perfect k-th power."""
    r = _int_nth_root(n, k)
    return r ** k == n


def _spiral(bound=None):
    """0, 1, -1, 2, -2, ...  (capped at |bound| when given)."""
    yield 0
    n = 1
    while bound is None or n <= bound:
        yield n
        yield -n
        n += 1


# ---------------------------------------------------------------------------
# Ring classes.
# ---------------------------------------------------------------------------

class Ring:
    """Base class for coefficient rings.  Values are raw Python objects."""

    is_field = False
    is_finite = False
    characteristic = 0
    generator_symbol = None  # 'u' for k[u], 't' for GF(p^k)

    # -- identity ----------------------------------------------------------
    def spec_string(self):
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()

    def __eq__(self, other):
        return isinstance(other, Ring) and self.spec_string() == other.spec_string()

    def __hash__(self):
        return hash(self.spec_string())

    # -- basic arithmetic ---------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def pow(self, a, e):
        result = self.one
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- division / gcd ------------------------------------------------------
    def try_divexact(self, a, b):
        """a/b if b divides a exactly, else None."""
        raise NotImplementedError

    def divexact(self, a, b):
        q = self.try_divexact(a, b)
        if q is None:
            raise ArithmeticError(f"{self.format(b)} does not divide {self.format(a)} in {self}")
        return q

    def divides(self, a, b):
        """True iff a divides b."""
        return self.try_divexact(b, a) is not None

    def canonical_split(self, a):
        """Return (unit, c) with a = unit * c and c the canonical associate."""
        raise NotImplementedError

    def gcd(self, a, b):
        raise NotImplementedError

    def is_unit(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    # -- misc ----------------------------------------------------------------
    def from_int(self, n):
        raise NotImplementedError

    def format(self, a):
        raise NotImplementedError

    def format_needs_parens(self, a):
        """Whether format(a) must be parenthesized when juxtaposed with '*'."""
        return any(ch in self.format(a) for ch in "+*^")

    def factor_value(self, a):
        """Return (unit, [(irreducible value, multiplicity), ...])."""
        raise NotImplementedError

    def element_box(self, coeff_bound=None, deg_bound=None):
        """Finite, deterministically ordered list of candidate values."""
        raise NotImplementedError

    def element_stream(self, coeff_bound=None):
        """Deterministic enumeration of ring elements (finite rings: the box)."""
        for v in self.element_box(coeff_bound=coeff_bound, deg_bound=None):
            yield v

    def random_element(self, rng, coeff_bound=None, deg_bound=None):
        box = self.element_box(coeff_bound=coeff_bound, deg_bound=deg_bound)
        return box[rng.randrange(len(box))]


class IntegerRing(Ring):
    """The rational integers."""

    def __init__(self):
        self.zero = 0
        self.one = 1

    def spec_string(self):
        return "Z"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_divexact(self, a, b):
        if b == 0:
            return None
        q, r = divmod(a, b)
        return q if r == 0 else None

    def canonical_split(self, a):
        if a < 0:
            return -1, -a
        return 1, a

    def gcd(self, a, b):
        return _int_gcd(abs(a), abs(b))

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise ArithmeticError(f"{a} is not a unit in Z")
        return a

    def from_int(self, n):
        return n

    def format(self, a):
        return str(a)

    def format_needs_parens(self, a):
        return False

    def factor_value(self, a):
        if a == 0:
            raise ZeroInputError("cannot factor 0")
        unit, n = self.canonical_split(a)
        return unit, (factor_int(n) if n > 1 else [])

    def element_box(self, coeff_bound=None, deg_bound=None):
        if coeff_bound is None:
            raise ValueError("Z needs a coefficient bound to define a finite box")
        return list(_spiral(coeff_bound))

    def element_stream(self, coeff_bound=None):
        return _spiral(coeff_bound)


class RationalField(Ring):
    """The rational numbers."""

    is_field = True

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def spec_string(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def try_divexact(self, a, b):
        if b == 0:
            return None
        return a / b

    def canonical_split(self, a):
        if a == 0:
            return Fraction(1), Fraction(0)
        return a, Fraction(1)

    def gcd(self, a, b):
        if a == 0 and b == 0:
            return Fraction(0)
        return Fraction(1)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def format(self, a):
        return str(a)

    def format_needs_parens(self, a):
        return "/" in str(a)

    def factor_value(self, a):
        if a == 0:
            raise ZeroInputError("cannot factor 0")
        return a, []

    def element_box(self, coeff_bound=None, deg_bound=None):
        if coeff_bound is None:
            raise ValueError("Q needs a coefficient bound to define a finite box")
        return [Fraction(n) for n in _spiral(coeff_bound)]

    def element_stream(self, coeff_bound=None):
        return (Fraction(n) for n in _spiral(coeff_bound))


class PrimeField(Ring):
    """GF(p), residues stored in [0, p)."""

    is_field = True
    is_finite = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.order = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def spec_string(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def try_divexact(self, a, b):
        if b == 0:
            return None
        return a * pow(b, -1, self.p) % self.p

    def canonical_split(self, a):
        if a == 0:
            return 1 % self.p, 0
        return a, 1 % self.p

    def gcd(self, a, b):
        if a == 0 and b == 0:
            return 0
        return 1 % self.p

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def format(self, a):
        return str(a)

    def format_needs_parens(self, a):
        return False

    def factor_value(self, a):
        if a == 0:
            raise ZeroInputError("cannot factor 0")
        return a, []

    def element_box(self, coeff_bound=None, deg_bound=None):
        return list(range(self.p))

    def all_elements(self):
        return list(range(self.p))


class ExtField(Ring):
    """GF(p^k) as GF(p)[t] / (modulus), k >= 2.

    Elements are tuples of residues (coefficients of t, low to high,
    trailing zeros stripped).  The default modulus is the lexicographically
    smallest monic irreducible of degree k, coefficient vectors compared
    low to high, which pins the field down without Conway tables.
    """

    is_field = True
    is_finite = True
    generator_symbol = "t"

    def __init__(self, p, k, modulus=None):
        if k < 2:
            raise ValueError("extension degree must be >= 2; use PrimeField for k=1")
        self.p = p
        self.k = k
        self.base = PrimeField(p)
        self.order = p ** k
        self.characteristic = p
        if modulus is None:
            modulus = self._default_modulus(self.base, k)
        else:
            modulus = list(modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not u_is_irreducible(modulus, self.base):
                raise ValueError("modulus is reducible over GF(p)")
        self.modulus = modulus
        self.zero = ()
        self.one = (1,)

    @staticmethod
    def _default_modulus(base, k):
        for coeffs in itertools.product(range(base.p), repeat=k):
            cand = list(coeffs) + [1]
            if u_is_irreducible(cand, base):
                return cand
        raise RuntimeError("unreachable: irreducible polynomials of every degree exist")

    def spec_string(self):
        return f"GF({self.p}^{self.k})"

    def _reduce(self, coeffs):
        r = u_rem(coeffs, self.modulus, self.base)
        return tuple(r)

    def add(self, a, b):
        return tuple(u_add(list(a), list(b), self.base))

    def neg(self, a):
        return tuple(u_neg(list(a), self.base))

    def mul(self, a, b):
        return self._reduce(u_mul(list(a), list(b), self.base))

    def try_divexact(self, a, b):
        if not b:
            return None
        return self.mul(a, self.inv(b))

    def canonical_split(self, a):
        if not a:
            return self.one, self.zero
        return a, self.one

    def gcd(self, a, b):
        if not a and not b:
            return self.zero
        return self.one

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("0 is not invertible")
        g, s, _ = u_xgcd(list(a), self.modulus, self.base)
        if u_deg(g) != 0:
            raise ArithmeticError("modulus is not irreducible")
        return self._reduce(s)

    def from_int(self, n):
        v = n % self.p
        return (v,) if v else ()

    def generator(self):
        return self._reduce([0, 1])

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                parts.append(tpow if c == 1 else f"{c}*{tpow}")
        return " + ".join(parts)

    def format_needs_parens(self, a):
        s = self.format(a)
        return any(ch in s for ch in "+-*^ ") or s == "t"

    def factor_value(self, a):
        if not a:
            raise ZeroInputError("cannot factor 0")
        return a, []

    def element_box(self, coeff_bound=None, deg_bound=None):
        out = []
        for i in range(self.order):
            digits = []
            m = i
            while m:
                digits.append(m % self.p)
                m //= self.p
            out.append(tuple(u_trim(digits, self.base)))
        return out

    def all_elements(self):
        return self.element_box()


class PolyRing(Ring):
    """k[u] for a field k: Q, GF(p) or GF(p^k).

    Elements are tuples of base-field values (coefficients of u, low to
    high, stripped).  This is a UFD whose units are the nonzero constants;
    the canonical associate is monic.
    """

    generator_symbol = "u"

    def __init__(self, base):
        if not base.is_field:
            raise ValueError("PolyRing base must be a field")
        if isinstance(base, PolyRing):
            raise ValueError("nested polynomial coefficient rings are not supported")
        self.base = base
        self.characteristic = base.characteristic
        self.zero = ()
        self.one = (base.one,)

    def spec_string(self):
        return f"{self.base.spec_string()}[u]"

    def add(self, a, b):
        return tuple(u_add(list(a), list(b), self.base))

    def neg(self, a):
        return tuple(u_neg(list(a), self.base))

    def mul(self, a, b):
        return tuple(u_mul(list(a), list(b), self.base))

    def try_divexact(self, a, b):
        if not b:
            return None
        q, r = u_divmod(list(a), list(b), self.base)
        if r:
            return None
        return tuple(q)

    def canonical_split(self, a):
        if not a:
            return self.one, self.zero
        lc, monic = u_monic(list(a), self.base)
        return (lc,), tuple(monic)

    def gcd(self, a, b):
        return tuple(u_gcd(list(a), list(b), self.base))

    def is_unit(self, a):
        return len(a) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise ArithmeticError(f"{self.format(a)} is not a unit in {self}")
        return (self.base.inv(a[0]),)

    def from_int(self, n):
        v = self.base.from_int(n)
        return (v,) if not self.base.is_zero(v) else ()

    def generator(self):
        return (self.base.zero, self.base.one)

    def deg_u(self, a):
        return u_deg(list(a))

    def format(self, a):
        if not a:
            return "0"
        parts = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            negative = cs.startswith("-")
            if negative:
                cs = cs[1:]
            if i == 0:
                body = f"({cs})" if self.base.format_needs_parens(c) else cs
            else:
                upow = "u" if i == 1 else f"u^{i}"
                if cs == "1":
                    body = upow
                elif not negative and self.base.format_needs_parens(c):
                    body = f"({cs})*{upow}"
                else:
                    body = f"{cs}*{upow}"
            parts.append(("-" if negative else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def format_needs_parens(self, a):
        s = self.format(a)
        return any(ch in s for ch in "+-*^() ") or s == "u"

    def factor_value(self, a, seed=0):
        if not a:
            raise ZeroInputError("cannot factor 0")
        from . import factor as _factor  # deferred; factor builds on this module

        return _factor.factor_poly_ring_value(self, a, seed=seed)

    def element_box(self, coeff_bound=None, deg_bound=None):
        if deg_bound is None:
            raise ValueError(f"{self} needs a degree-in-u bound to define a finite box")
        base_box = self.base.element_box(coeff_bound=coeff_bound)
        nonzero = [v for v in base_box if not self.base.is_zero(v)]
        out = [()]
        for d in range(deg_bound + 1):
            for lead in nonzero:
                for lower in itertools.product(base_box, repeat=d):
                    out.append(tuple(lower) + (lead,))
        return out

    def element_stream(self, coeff_bound=None):
        base_box = self.base.element_box(coeff_bound=coeff_bound)
        nonzero = [v for v in base_box if not self.base.is_zero(v)]
        yield ()
        d = 0
        while True:
            for lead in nonzero:
                for lower in itertools.product(base_box, repeat=d):
                    yield tuple(lower) + (lead,)
            d += 1


ZZ = IntegerRing()
QQ = RationalField()


def GF(p, k=1):
    """GF(p) for k=1, GF(p^k) otherwise."""
    return PrimeField(p) if k == 1 else ExtField(p, k)


_RING_RE = re.compile(r"^\s*(Z|Q|GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\))\s*(\[\s*u\s*\])?\s*$")


def parse_ring(text):
    """Parse a ring-spec string: Z, Q, GF(p), GF(p^k), GF(p)[u], GF(p^k)[u], Q[u]."""
    m = _RING_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse ring spec {text!r}")
    head, p, k, poly = m.group(1), m.group(2), m.group(3), m.group(4)
    if head == "Z":
        base = ZZ
    elif head == "Q":
        base = QQ
    else:
        try:
            base = GF(int(p), int(k) if k else 1)
        except ValueError as e:
            raise ParseError(f"bad ring spec {text!r}: {e}") from None
    if poly:
        if base is ZZ:
            raise ParseError("Z[u] is not supported; the coefficient base of k[u] must be a field")
        return PolyRing(base)
    return base


# ---------------------------------------------------------------------------
# RingElement: the public wrapper used at module boundaries.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RingElement:
    """A raw value tagged with its ring."""

    ring: Ring
    value: object

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"elements of {self.ring} and {other.ring} do not mix")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def is_zero(self):
        return self.ring.is_zero(self.value)

    def is_unit(self):
        return self.ring.is_unit(self.value)

    def __str__(self):
        return self.ring.format(self.value)


def ring_gcd(a: RingElement, b: RingElement) -> RingElement:
    """Canonical-unit-normalized gcd; gcd(0, 0) = 0."""
    if a.ring != b.ring:
        raise RingMismatchError(f"gcd across {a.ring} and {b.ring}")
    return RingElement(a.ring, a.ring.gcd(a.value, b.value))


def ring_is_unit(a: RingElement) -> bool:
    return a.ring.is_unit(a.value)


def ring_factor(a: RingElement):
    """Factor a ring element: (unit, [(irreducible, multiplicity), ...]).

    Over fields the element is its own unit and the list is empty.
    """
    unit, factors = a.ring.factor_value(a.value)
    return (RingElement(a.ring, unit),
            [(RingElement(a.ring, v), m) for v, m in factors])
