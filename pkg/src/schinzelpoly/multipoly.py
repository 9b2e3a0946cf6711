"""Sparse multivariate polynomials over any coefficient ring.

Terms are stored in a dict mapping exponent vectors (one nonnegative int
per variable) to nonzero raw coefficient values.  Graded-lexicographic
order (total degree first, then exponent vector) fixes iteration and
printing, so equal polynomials print identically.

The degree of the zero polynomial is the distinguished marker NEG_INF,
never -1, so sentinel arithmetic cannot slip through silently.
"""

from __future__ import annotations

from .errors import (
    RingMismatchError,
    VariableMismatchError,
    ZeroInputError,
)
from .rings import Ring, RingElement

NEG_INF = float("-inf")


class VarSet:
    """An ordered set of distinct variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise VariableMismatchError(f"unknown variable {name!r} (have {self.names})") from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet{self.names}"

    def without(self, name):
        return VarSet(tuple(n for n in self.names if n != name))


def xvars(n):
    """The conventional variable set x1..xn."""
    return VarSet(tuple(f"x{i}" for i in range(1, n + 1)))


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """A sparse multivariate polynomial; immutable by convention."""

    __slots__ = ("ring", "vars", "terms")

    def __init__(self, ring: Ring, vars: VarSet, terms: dict):
        self.ring = ring
        self.vars = vars
        self.terms = terms  # exponent tuple -> nonzero raw value

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_terms(cls, ring, vars, terms):
        n = len(vars)
        clean = {}
        for exps, value in terms.items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise VariableMismatchError(f"exponent vector {exps} does not fit {vars}")
            if ring.is_zero(value):
                continue
            if exps in clean:
                value = ring.add(clean[exps], value)
                if ring.is_zero(value):
                    del clean[exps]
                    continue
            clean[exps] = value
        return cls(ring, vars, clean)

    @classmethod
    def zero(cls, ring, vars):
        return cls(ring, vars, {})

    @classmethod
    def constant(cls, ring, vars, value):
        if ring.is_zero(value):
            return cls.zero(ring, vars)
        return cls(ring, vars, {(0,) * len(vars): value})

    @classmethod
    def one(cls, ring, vars):
        return cls.constant(ring, vars, ring.one)

    @classmethod
    def monomial(cls, ring, vars, exps, coeff=None):
        coeff = ring.one if coeff is None else coeff
        if ring.is_zero(coeff):
            return cls.zero(ring, vars)
        return cls(ring, vars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, ring, vars, name):
        exps = [0] * len(vars)
        exps[vars.index(name)] = 1
        return cls.monomial(ring, vars, exps)

    # -- structure -----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"polynomials over {self.ring} and {other.ring} do not mix")
        if self.vars != other.vars:
            raise VariableMismatchError(f"variable sets {self.vars} and {other.vars} differ")

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.vars), self.ring.zero)

    def coefficient(self, exps) -> RingElement:
        return RingElement(self.ring, self.terms.get(tuple(exps), self.ring.zero))

    def num_terms(self):
        return len(self.terms)

    def sorted_terms(self):
        """Terms in graded-lex descending order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroInputError("the zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def key(self):
        """Hashable canonical identity (ring, vars, sorted terms)."""
        return (self.ring.spec_string(), self.vars.names, tuple(self.sorted_terms()))

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.ring == other.ring
                and self.vars == other.vars and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return f"MultiPoly({self.ring}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- degrees ---------------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        i = self.vars.index(name)
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def degree_vector(self):
        """Per-variable max exponents; all zeros for the zero polynomial."""
        n = len(self.vars)
        vec = [0] * n
        for e in self.terms:
            for i in range(n):
                if e[i] > vec[i]:
                    vec[i] = e[i]
        return tuple(vec)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        ring = self.ring
        out = dict(self.terms)
        for e, v in other.terms.items():
            if e in out:
                s = ring.add(out[e], v)
                if ring.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = v
        return MultiPoly(ring, self.vars, out)

    def __neg__(self):
        ring = self.ring
        return MultiPoly(ring, self.vars, {e: ring.neg(v) for e, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        ring = self.ring
        out = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = ring.mul(v1, v2)
                if e in out:
                    v = ring.add(out[e], v)
                    if ring.is_zero(v):
                        del out[e]
                        continue
                if not ring.is_zero(v):
                    out[e] = v
        return MultiPoly(ring, self.vars, out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.one(self.ring, self.vars)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value):
        ring = self.ring
        if ring.is_zero(value):
            return MultiPoly.zero(ring, self.vars)
        return MultiPoly(ring, self.vars,
                         {e: ring.mul(v, value) for e, v in self.terms.items()})

    def mul_monomial(self, exps, coeff=None):
        ring = self.ring
        coeff = ring.one if coeff is None else coeff
        if ring.is_zero(coeff):
            return MultiPoly.zero(ring, self.vars)
        exps = tuple(exps)
        return MultiPoly(ring, self.vars,
                         {tuple(a + b for a, b in zip(e, exps)): ring.mul(v, coeff)
                          for e, v in self.terms.items()})

    # -- variable plumbing ---------------------------------------------------------

    def embed(self, new_vars: VarSet):
        """Reinterpret over a superset of variables (by name)."""
        mapping = [new_vars.index(n) for n in self.vars.names]
        n = len(new_vars)
        out = {}
        for e, v in self.terms.items():
            ee = [0] * n
            for i, x in enumerate(e):
                ee[mapping[i]] = x
            out[tuple(ee)] = v
        return MultiPoly(self.ring, new_vars, out)

    def drop_var(self, name):
        """Remove a variable the polynomial does not actually use."""
        i = self.vars.index(name)
        if self.terms and any(e[i] for e in self.terms):
            raise VariableMismatchError(f"polynomial still involves {name}")
        new_vars = self.vars.without(name)
        return MultiPoly(self.ring, new_vars,
                         {e[:i] + e[i + 1:]: v for e, v in self.terms.items()})

    def coeffs_in(self, name):
        """Dense coefficient list w.r.t. one variable (entries share self.vars)."""
        i = self.vars.index(name)
        d = 0 if not self.terms else max(e[i] for e in self.terms)
        buckets = [dict() for _ in range(d + 1)]
        for e, v in self.terms.items():
            ee = e[:i] + (0,) + e[i + 1:]
            buckets[e[i]][ee] = v
        return [MultiPoly(self.ring, self.vars, b) for b in buckets]

    @staticmethod
    def from_coeffs_in(name, coeffs):
        """Inverse of coeffs_in."""
        if not coeffs:
            raise ValueError("empty coefficient list")
        ring, vars = coeffs[0].ring, coeffs[0].vars
        i = vars.index(name)
        out = {}
        for power, c in enumerate(coeffs):
            for e, v in c.terms.items():
                if e[i]:
                    raise VariableMismatchError(f"coefficient {power} involves {name}")
                out[e[:i] + (power,) + e[i + 1:]] = v
        return MultiPoly(ring, vars, out)

    def substitute(self, name, value_poly):
        """Substitute a polynomial for one variable; the variable disappears."""
        i = self.vars.index(name)
        new_vars = self.vars.without(name)
        if value_poly.ring != self.ring:
            raise RingMismatchError("substitution value lives in a different ring")
        g = value_poly if value_poly.vars == new_vars else value_poly.embed(new_vars)
        coeffs = []
        for c in self.coeffs_in(name):
            coeffs.append(MultiPoly(self.ring, new_vars,
                                    {e[:i] + e[i + 1:]: v for e, v in c.terms.items()}))
        acc = MultiPoly.zero(self.ring, new_vars)
        for c in reversed(coeffs):
            acc = acc * g + c
        return acc

    def partial_eval(self, assignment):
        """Evaluate some variables at ring values; returns a poly in the rest."""
        ring = self.ring
        keep = [n for n in self.vars.names if n not in assignment]
        new_vars = VarSet(keep)
        keep_idx = [self.vars.index(n) for n in keep]
        out = {}
        for e, v in self.terms.items():
            val = v
            for n, x in assignment.items():
                p = e[self.vars.index(n)]
                if p:
                    val = ring.mul(val, ring.pow(x, p))
            ee = tuple(e[i] for i in keep_idx)
            if ee in out:
                s = ring.add(out[ee], val)
                if ring.is_zero(s):
                    del out[ee]
                    continue
                out[ee] = s
            elif not ring.is_zero(val):
                out[ee] = val
        return MultiPoly(ring, new_vars, out)

    def evaluate(self, assignment):
        """Full evaluation at ring values; returns a raw ring value."""
        res = self.partial_eval({n: assignment[n] for n in self.vars.names})
        return res.constant_value()

    def derivative(self, name):
        i = self.vars.index(name)
        ring = self.ring
        out = {}
        for e, v in self.terms.items():
            if e[i] == 0:
                continue
            c = ring.mul(v, ring.from_int(e[i]))
            if ring.is_zero(c):
                continue
            ee = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[ee] = ring.add(out[ee], c) if ee in out else c
            if ring.is_zero(out[ee]):
                del out[ee]
        return MultiPoly(ring, self.vars, out)

    # -- content / normalization ---------------------------------------------------

    def content_value(self):
        """Ring content: gcd of the coefficients (0 for the zero polynomial).

        Over a field this is 1 for any nonzero polynomial.
        """
        ring = self.ring
        if not self.terms:
            return ring.zero
        if ring.is_field:
            return ring.one
        acc = None
        for _, v in self.sorted_terms():
            acc = v if acc is None else ring.gcd(acc, v)
            if ring.is_unit(acc) and acc == ring.one:
                break
        return ring.canonical_split(acc)[1]

    def primitive_part(self):
        c = self.content_value()
        if self.ring.is_zero(c):
            return self
        return self.div_scalar(c)

    def div_scalar(self, value):
        ring = self.ring
        out = {}
        for e, v in self.terms.items():
            q = ring.try_divexact(v, value)
            if q is None:
                raise ArithmeticError(f"coefficient {ring.format(v)} not divisible by {ring.format(value)}")
            out[e] = q
        return MultiPoly(ring, self.vars, out)

    def monic_normalize(self):
        """Canonical associate: returns (unit value, normalized poly).

        unit * normalized == self.  Fields: monic leading coefficient;
        Z: positive leading coefficient; k[u]: monic-in-u leading coefficient.
        """
        if not self.terms:
            return self.ring.one, self
        _, lc = self.leading_term()
        unit, _ = self.ring.canonical_split(lc)
        if unit == self.ring.one:
            return unit, self
        if self.ring.is_field:
            return unit, self.scale(self.ring.inv(unit))
        return unit, self.div_scalar(unit)

    # -- division ---------------------------------------------------------------------

    def divmod_single(self, g):
        """Multivariate division by a single divisor in graded-lex order.

        Returns (q, r) with self = q*g + r and no term of r divisible by
        the leading term of g (including coefficient divisibility over a
        non-field ring).
        """
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        g_exps, g_lc = g.leading_term()
        q = {}
        r = {}
        work = dict(self.terms)
        while work:
            exps = max(work, key=grlex_key)
            v = work.pop(exps)
            diff = tuple(a - b for a, b in zip(exps, g_exps))
            c = ring.try_divexact(v, g_lc) if all(d >= 0 for d in diff) else None
            if c is None:
                r[exps] = v
                continue
            if diff in q:
                s = ring.add(q[diff], c)
                if ring.is_zero(s):
                    del q[diff]
                else:
                    q[diff] = s
            else:
                q[diff] = c
            for e2, v2 in g.terms.items():
                if e2 == g_exps:
                    continue  # leading term cancels exactly
                ee = tuple(a + b for a, b in zip(diff, e2))
                s = ring.sub(work.get(ee, ring.zero), ring.mul(c, v2))
                if ring.is_zero(s):
                    work.pop(ee, None)
                else:
                    work[ee] = s
        return (MultiPoly(ring, self.vars, q), MultiPoly(ring, self.vars, r))

    def try_divexact(self, g):
        """self / g when g divides exactly in R[vars], else None."""
        self._check(g)
        if g.is_zero():
            return None
        if self.is_zero():
            return self
        ring = self.ring
        g_exps, g_lc = g.leading_term()
        rem = self
        q = {}
        while not rem.is_zero():
            exps, v = rem.leading_term()
            diff = tuple(a - b for a, b in zip(exps, g_exps))
            if any(d < 0 for d in diff):
                return None
            c = ring.try_divexact(v, g_lc)
            if c is None:
                return None
            q[diff] = c
            rem = rem - g.mul_monomial(diff, c)
        return MultiPoly(ring, self.vars, q)

    def divides(self, other):
        return other.try_divexact(self) is not None


# ---------------------------------------------------------------------------
# Spec-level operation names.
# ---------------------------------------------------------------------------

def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def poly_neg(f):
    return -f


def substitute_y(P, M, yname="y"):
    """P(x, M(x)): substitute M for the designated y variable of P."""
    return P.substitute(yname, M)


def content(f) -> RingElement:
    return RingElement(f.ring, f.content_value())


def primitive_part(f):
    return f.primitive_part()


def total_degree(f):
    return f.total_degree()


def degree_in(f, name):
    return f.degree_in(name)


def degree_vector(f):
    return f.degree_vector()


# ---------------------------------------------------------------------------
# Multivariate gcd: primitive PRS in a main variable, recursing on the
# coefficients, with the ring gcd at the bottom.
# ---------------------------------------------------------------------------

def _list_content(polys):
    acc = None
    for c in polys:
        if c.is_zero():
            continue
        acc = c if acc is None else poly_gcd(acc, c)
        if acc.is_constant() and acc.ring.is_unit(acc.constant_value()):
            break
    return acc


def _prem(F, G):
    """Pseudo-remainder of dense coefficient lists (entries are MultiPoly).

    Returns some nonzero multiple of (F mod G); the caller strips content
    afterwards, so the exact lc power does not matter.
    """
    dG = len(G) - 1
    lc_g = G[-1]
    R = list(F)
    while R and len(R) - 1 >= dG:
        lc_r = R[-1]
        shift = len(R) - 1 - dG
        R = [lc_g * c for c in R]
        for i, gc in enumerate(G):
            R[shift + i] = R[shift + i] - lc_r * gc
        while R and R[-1].is_zero():
            R.pop()
    return R


def poly_gcd(f, g):
    """A gcd in R[vars], canonical-unit-normalized (errors when both zero)."""
    f._check(g)
    ring = f.ring
    if f.is_zero() and g.is_zero():
        raise ZeroInputError("gcd(0, 0) is undefined for polynomials")
    if f.is_zero():
        return g.monic_normalize()[1]
    if g.is_zero():
        return f.monic_normalize()[1]
    if f.is_constant() and g.is_constant():
        return MultiPoly.constant(ring, f.vars,
                                  ring.gcd(f.constant_value(), g.constant_value()))
    # constants against polynomials: gcd of the constant with the content
    if f.is_constant() or g.is_constant():
        c, h = (f, g) if f.is_constant() else (g, f)
        value = ring.gcd(c.constant_value(), h.content_value())
        return MultiPoly.constant(ring, f.vars, ring.canonical_split(value)[1])
    main = next(n for n in f.vars.names
                if f.degree_in(n) > 0 or g.degree_in(n) > 0)
    F = f.coeffs_in(main)
    G = g.coeffs_in(main)
    cont_f = _list_content(F)
    cont_g = _list_content(G)
    cont = poly_gcd(cont_f, cont_g)
    Fp = [c.try_divexact(cont_f) for c in F]
    Gp = [c.try_divexact(cont_g) for c in G]
    if len(Fp) < len(Gp):
        Fp, Gp = Gp, Fp
    while True:
        R = _prem(Fp, Gp)
        if not R:
            h = Gp
            break
        if len(R) == 1:
            h = None  # coprime up to content
            break
        rc = _list_content(R)
        R = [c.try_divexact(rc) for c in R]
        Fp, Gp = Gp, R
    if h is None:
        result = cont
    else:
        hc = _list_content(h)
        h = [c.try_divexact(hc) for c in h]
        result = cont * MultiPoly.from_coeffs_in(main, h)
    return result.monic_normalize()[1]


# ---------------------------------------------------------------------------
# Canonical text form (grammar shared with the CLI and golden files).
# ---------------------------------------------------------------------------

def format_poly(f: MultiPoly) -> str:
    """Canonical printing: graded-lex descending, '+'/'-' separators."""
    if f.is_zero():
        return "0"
    ring = f.ring
    parts = []
    for exps, value in f.sorted_terms():
        mono = "*".join(
            (name if e == 1 else f"{name}^{e}")
            for name, e in zip(f.vars.names, exps) if e > 0
        )
        cs = ring.format(value)
        # fold the sign into the separator only for atomic formats like
        # -3 or -1/2; composite strings such as -2*u + 1 stay intact
        negative = cs.startswith("-") and not any(ch in cs[1:] for ch in "+-*^ ")
        if negative:
            cs = cs[1:]
        if not mono:
            body = f"({cs})" if not negative and ring.format_needs_parens(value) else cs
        elif cs == "1":
            body = mono
        elif not negative and ring.format_needs_parens(value):
            body = f"({cs})*{mono}"
        else:
            body = f"{cs}*{mono}"
        parts.append(("-" if negative else "+", body))
    sign, body = parts[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
