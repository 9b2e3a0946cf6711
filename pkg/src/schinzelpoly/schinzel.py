"""Witness search: polynomials M making every P_i(x, M(x)) irreducible.

A SchinzelProblem fixes the coefficient ring, the x variables, one or more
y variables, the polynomials P_i and a degree box for M.  The search
enumerates (or samples) candidates M from the box, verifies irreducibility
of every P_i(x, M), and reports witnesses together with an exact
accounting of rejections.  Exhaustive runs over finite boxes are complete:
an empty witness list is a proof of non-existence inside the box.

Enumeration order over Z boxes follows a balanced spiral per coefficient
(0, 1, -1, 2, -2, ...) graded by max-norm, so small witnesses surface
first and reruns are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import UnsupportedRingError, ZeroInputError
from .factor import is_irreducible
from .multipoly import MultiPoly, VarSet, poly_gcd
from .rings import IntegerRing, PolyRing, RationalField, Ring

_BATCH = 64


# ---------------------------------------------------------------------------
# Problem data.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchConstraints:
    """Knobs for the candidate box and the search strategy."""

    strategy: str = "exhaustive"          # "exhaustive" | "random"
    seed: int = 0
    budget: int = 100_000
    coeff_bound: int | None = None        # B: integer coefficients in [-B, B]
    deg_u_bound: int | None = None        # delta: degree-in-u bound for k[u]
    exact_degrees: bool = False           # require deg_{x_j}(M) == d_j
    deg_u_target: int | None = None       # Theorem-1.2-style exact deg_u(M)
    paper_mode: bool = False              # monomial support + coprimality of
                                          # the two top coefficients
    support: tuple | None = None          # restrict M to these monomials
                                          # (exponent tuples; must contain 1)
    max_witnesses: int | None = None
    threads: int = 1

    def __post_init__(self):
        if self.strategy not in ("exhaustive", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")
        if self.support is not None:
            object.__setattr__(self, "support",
                               tuple(tuple(e) for e in self.support))


def support_monomials(d, paper_mode=False):
    """Exponent vectors of the box deg_{x_i} <= d_i.

    Default: graded-lex descending.  Paper mode puts the constant monomial
    first, then the monomials of degree d_1+...+d_n and d_1+...+d_n - 1
    whose coefficients carry the coprimality side constraint.
    """
    exps = sorted(itertools.product(*[range(di + 1) for di in d]),
                  key=lambda e: (sum(e), e), reverse=True)
    if not paper_mode:
        return exps
    top = tuple(d)
    second = max((e for e in exps if sum(e) == sum(d) - 1), default=None)
    ordered = [(0,) * len(d)]
    for e in (top, second):
        if e is not None and e not in ordered:
            ordered.append(e)
    for e in exps:
        if e not in ordered:
            ordered.append(e)
    return ordered


@dataclass
class SchinzelProblem:
    """The data of a witness search; construction validates the standing
    hypotheses (each P_i irreducible with positive y-degree)."""

    ring: Ring
    xvars: VarSet
    yvars: VarSet
    P: list
    d: tuple
    constraints: SearchConstraints = field(default_factory=SearchConstraints)
    degree_bound_warning: bool = False

    def __post_init__(self):
        self.d = tuple(self.d)
        if len(self.d) != len(self.xvars):
            raise ValueError("degree tuple length must match the x variables")
        if any(di < 0 for di in self.d):
            raise ValueError("degrees must be nonnegative")
        if len(self.yvars) < 1:
            raise ValueError("at least one y variable is required")
        full = VarSet(self.xvars.names + self.yvars.names)
        for P in self.P:
            if P.vars != full:
                raise ValueError(f"P = {P} is not over {full.names}")
            ydeg = max(P.degree_in(y) for y in self.yvars.names)
            if not (isinstance(ydeg, int) and ydeg >= 1):
                raise ValueError(f"P = {P} has y-degree 0")
            cert = is_irreducible(P)
            if not cert:
                raise ValueError(f"P = {P} is not irreducible over {self.ring}[x,y] "
                                 f"({cert.reason})")
        if self.constraints.support is not None:
            n = len(self.xvars)
            zero = (0,) * n
            for e in self.constraints.support:
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"support monomial {e} does not fit {n} variables")
                if any(x > dj for x, dj in zip(e, self.d)):
                    raise ValueError(f"support monomial {e} leaves the degree box {self.d}")
            if zero not in self.constraints.support:
                raise ValueError("the support restriction must contain the constant monomial")
        bound = max(self._xdeg(P) for P in self.P) + 2
        if sum(self.d) < bound:
            self.degree_bound_warning = True
            warnings.warn(
                f"sum of degrees {sum(self.d)} is below the guaranteed bound "
                f"max deg_x(P_i) + 2 = {bound}; witnesses may not exist",
                UserWarning, stacklevel=2)

    def _xdeg(self, P):
        idx = [P.vars.index(n) for n in self.xvars.names]
        if P.is_zero():
            return 0
        return max(sum(e[i] for i in idx) for e in P.terms)

    @property
    def support(self):
        cons = self.constraints
        if cons.support is not None:
            zero = (0,) * len(self.xvars)
            ordered = [zero] + [e for e in cons.support if e != zero]
            return ordered
        return support_monomials(self.d, paper_mode=cons.paper_mode)


# ---------------------------------------------------------------------------
# Candidate enumeration.
# ---------------------------------------------------------------------------

def coefficient_box(ring: Ring, constraints: SearchConstraints):
    return ring.element_box(coeff_bound=constraints.coeff_bound,
                            deg_bound=constraints.deg_u_bound)


def _int_like(ring):
    return isinstance(ring, (IntegerRing, RationalField))


def _iter_tuples_exhaustive(ring, box, N, constraints):
    if _int_like(ring):
        B = constraints.coeff_bound
        for r in range(B + 1):
            vals = [ring.from_int(0)]
            for k in range(1, r + 1):
                vals.append(ring.from_int(k))
                vals.append(ring.from_int(-k))
            for tup in itertools.product(vals, repeat=N):
                if max(abs(v) for v in tup) == r:
                    yield tup
    else:
        for tup in itertools.product(box, repeat=N):
            yield tup


def _iter_tuples_random(ring, box, N, constraints):
    rng = random.Random(constraints.seed)
    for _ in range(constraints.budget):
        yield tuple(box[rng.randrange(len(box))] for _ in range(N))


def iter_candidates(ring, xvars, support, constraints):
    """Yield candidate polynomials M over (ring, xvars) from the box."""
    box = coefficient_box(ring, constraints)
    N = len(support)
    if constraints.strategy == "exhaustive":
        tuples = _iter_tuples_exhaustive(ring, box, N, constraints)
    else:
        tuples = _iter_tuples_random(ring, box, N, constraints)
    for tup in tuples:
        terms = {}
        for exps, value in zip(support, tup):
            if not ring.is_zero(value):
                terms[exps] = value
        yield MultiPoly(ring, xvars, terms), tup


def box_size(ring, support, constraints):
    n = len(coefficient_box(ring, constraints))
    return n ** len(support)


# ---------------------------------------------------------------------------
# Verification of one candidate.
# ---------------------------------------------------------------------------

REASON_DEGREE = "degree_shortfall"
REASON_COPRIME = "coprimality"
REASON_CONTENT = "content_nonunit"
REASON_REDUCIBLE = "reducible_over_K"
REASON_CONSTANT = "unit_or_constant"


def _deg_u_of(M: MultiPoly):
    ring = M.ring
    best = -1
    for v in M.terms.values():
        best = max(best, ring.deg_u(v))
    return best


def _reason_of(cert):
    if cert.reason == "content":
        return REASON_CONTENT
    if cert.reason == "unit/constant":
        return REASON_CONSTANT
    return REASON_REDUCIBLE


def _check_side_constraints(problem, M, tup):
    cons = problem.constraints
    if cons.exact_degrees:
        for name, dj in zip(problem.xvars.names, problem.d):
            if M.degree_in(name) != dj:
                return REASON_DEGREE
    if cons.deg_u_target is not None:
        if not isinstance(problem.ring, PolyRing):
            raise UnsupportedRingError("deg_u target needs a k[u] coefficient ring")
        p = problem.ring.characteristic
        target = cons.deg_u_target if p == 0 else p * cons.deg_u_target
        if _deg_u_of(M) != target:
            return REASON_DEGREE
    if cons.paper_mode and len(tup) >= 3:
        lam1, lam2 = tup[1], tup[2]
        g = problem.ring.gcd(lam1, lam2)
        if not problem.ring.is_unit(g):
            return REASON_COPRIME
    return None


def verify_candidate(problem: SchinzelProblem, M: MultiPoly, tup=()):
    """Return (is_witness, reason, certificates)."""
    side = _check_side_constraints(problem, M, tup)
    if side is not None:
        return False, side, []
    yname = problem.yvars.names[0]
    certs = []
    for P in problem.P:
        Fi = P.substitute(yname, M)
        if Fi.is_zero():
            return False, REASON_CONSTANT, []
        cert = is_irreducible(Fi)
        if not cert:
            return False, _reason_of(cert), []
        certs.append(cert.method)
    return True, "witness", certs


# ---------------------------------------------------------------------------
# Reports.
# ---------------------------------------------------------------------------

@dataclass
class Witness:
    M: MultiPoly
    certificates: list

    def __iter__(self):
        yield self.M


@dataclass
class SearchReport:
    witnesses: list
    tested: int
    rejected: dict
    budget: int
    budget_consumed: int
    seed: int
    strategy: str
    complete: bool            # the whole box was enumerated
    box_size: int | None
    degree_bound_warning: bool = False

    @property
    def found(self):
        return len(self.witnesses) > 0

    def status(self):
        if self.found:
            return "found"
        if self.complete:
            return "exhausted-none"
        return "budget-exhausted"


def _reverify(problem, witnesses):
    """Certificates are re-checked at report time, never trusted."""
    for w in witnesses:
        ok, reason, certs = verify_candidate(problem, w.M,
                                             _tuple_of(problem, w.M))
        if not ok:
            raise RuntimeError(f"stale witness {w.M}: {reason}")
        w.certificates = certs


def _tuple_of(problem, M):
    return tuple(M.terms.get(e, problem.ring.zero) for e in problem.support)


# ---------------------------------------------------------------------------
# The searches.
# ---------------------------------------------------------------------------

def _batched(iterable, size):
    batch = []
    for item in iterable:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def schinzel_search(problem: SchinzelProblem) -> SearchReport:
    """Single-y witness search over the problem's box."""
    if len(problem.yvars) != 1:
        raise ValueError("schinzel_search handles one y variable; "
                         "use schinzel_search_multi for more")
    cons = problem.constraints
    support = problem.support
    candidates = iter_candidates(problem.ring, problem.xvars, support, cons)
    total = box_size(problem.ring, support, cons) if cons.strategy == "exhaustive" else None

    witnesses = []
    rejected = {}
    tested = 0
    exhausted = True
    budget_left = cons.budget

    executor = ThreadPoolExecutor(max_workers=cons.threads) if cons.threads > 1 else None
    try:
        for batch in _batched(candidates, _BATCH):
            if budget_left <= 0:
                exhausted = False
                break
            if len(batch) > budget_left:
                batch = batch[:budget_left]
                exhausted = False
            if executor is None:
                results = [verify_candidate(problem, M, tup) for M, tup in batch]
            else:
                results = list(executor.map(
                    lambda mt: verify_candidate(problem, mt[0], mt[1]), batch))
            stop = False
            for (M, tup), (ok, reason, certs) in zip(batch, results):
                tested += 1
                budget_left -= 1
                if ok:
                    witnesses.append(Witness(M, certs))
                    if cons.max_witnesses and len(witnesses) >= cons.max_witnesses:
                        stop = True
                        break
                else:
                    rejected[reason] = rejected.get(reason, 0) + 1
            if stop:
                exhausted = tested == total
                break
        else:
            pass
    finally:
        if executor is not None:
            executor.shutdown(wait=True)

    if cons.strategy == "random":
        exhausted = False
    complete = exhausted and cons.strategy == "exhaustive"
    _reverify(problem, witnesses)
    return SearchReport(
        witnesses=witnesses,
        tested=tested,
        rejected=dict(sorted(rejected.items())),
        budget=cons.budget,
        budget_consumed=tested,
        seed=cons.seed,
        strategy=cons.strategy,
        complete=complete,
        box_size=total,
        degree_bound_warning=problem.degree_bound_warning,
    )


REASON_INTERMEDIATE_DEGREE = "intermediate_y_degree_zero"
REASON_INTERMEDIATE_REDUCIBLE = "intermediate_reducible"


def schinzel_search_multi(problem: SchinzelProblem) -> SearchReport:
    """Sequential specialization of y_1, ..., y_m.

    Each y_j is replaced in turn by a candidate from the box; intermediate
    polynomials must keep positive degree in the remaining y variables and
    stay irreducible (the standing hypotheses), otherwise the whole
    subtree is rejected and accounted for.
    """
    cons = problem.constraints
    ynames = problem.yvars.names
    m = len(ynames)
    if m == 1:
        return schinzel_search(problem)
    support = problem.support
    per_level = box_size(problem.ring, support, cons) if cons.strategy == "exhaustive" else None
    total = per_level ** m if per_level is not None else None

    witnesses = []
    rejected = {}
    state = {"tested": 0, "stop": False}
    budget = cons.budget

    def reject(reason, depth):
        weight = per_level ** (m - depth) if per_level is not None else 1
        rejected[reason] = rejected.get(reason, 0) + weight

    def rec(polys, chosen, depth):
        for M, tup in iter_candidates(problem.ring, problem.xvars, support, cons):
            if state["stop"]:
                return
            if state["tested"] >= budget:
                state["stop"] = True
                return
            state["tested"] += 1
            side = _check_side_constraints(problem, M, tup)
            if side is not None:
                reject(side, depth)
                continue
            yname = ynames[depth - 1]
            nxt = [P.substitute(yname, M) for P in polys]
            if depth == m:
                bad = None
                for Fi in nxt:
                    if Fi.is_zero():
                        bad = REASON_CONSTANT
                        break
                    cert = is_irreducible(Fi)
                    if not cert:
                        bad = _reason_of(cert)
                        break
                if bad is None:
                    witnesses.append(tuple(chosen + [M]))
                    if cons.max_witnesses and len(witnesses) >= cons.max_witnesses:
                        state["stop"] = True
                        return
                else:
                    reject(bad, depth)
                continue
            rest = ynames[depth:]
            ok = True
            for Fi in nxt:
                ydeg = max((Fi.degree_in(y) for y in rest), default=0)
                if not (isinstance(ydeg, int) and ydeg >= 1):
                    reject(REASON_INTERMEDIATE_DEGREE, depth)
                    ok = False
                    break
                cert = is_irreducible(Fi)
                if not cert:
                    reject(REASON_INTERMEDIATE_REDUCIBLE, depth)
                    ok = False
                    break
            if ok:
                rec(nxt, chosen + [M], depth + 1)

    rec(list(problem.P), [], 1)
    complete = (cons.strategy == "exhaustive" and not state["stop"])

    # Soundness: re-verify every reported tuple from scratch.
    for tup in witnesses:
        final = problem.P
        for yname, M in zip(ynames, tup):
            final = [P.substitute(yname, M) for P in final]
        for Fi in final:
            if Fi.is_zero() or not is_irreducible(Fi):
                raise RuntimeError(f"stale multi-witness {[str(M) for M in tup]}")

    return SearchReport(
        witnesses=[Witness(tup, []) for tup in witnesses],
        tested=state["tested"],
        rejected=dict(sorted(rejected.items())),
        budget=cons.budget,
        budget_consumed=state["tested"],
        seed=cons.seed,
        strategy=cons.strategy,
        complete=complete,
        box_size=total,
        degree_bound_warning=problem.degree_bound_warning,
    )


# ---------------------------------------------------------------------------
# Fixed divisors and density probes.
# ---------------------------------------------------------------------------

@dataclass
class FixedDivisorReport:
    divisor: MultiPoly | None
    exhaustive: bool
    tested: int


def check_fixed_divisor(ring, xvars, yvars, P_list, d,
                        constraints: SearchConstraints | None = None) -> FixedDivisorReport:
    """gcd of Pi(x, M) products over the box; a nonunit gcd over an
    exhaustive finite box exhibits a fixed divisor."""
    cons = constraints or SearchConstraints()
    full = VarSet(xvars.names + yvars.names)
    Pi = None
    for P in P_list:
        Pi = P if Pi is None else Pi * P
    if Pi is None:
        raise ZeroInputError("empty polynomial set")
    support = support_monomials(tuple(d))
    yname = yvars.names[0]
    acc = None
    tested = 0
    exhausted = True
    for M, _ in iter_candidates(ring, xvars, support, cons):
        if tested >= cons.budget:
            exhausted = False
            break
        tested += 1
        val = Pi.substitute(yname, M)
        if val.is_zero():
            continue
        acc = val if acc is None else poly_gcd(acc, val)
        if acc.is_constant() and ring.is_unit(acc.constant_value()):
            return FixedDivisorReport(None, True, tested)
    exhaustive = exhausted and cons.strategy == "exhaustive"
    if acc is not None and acc.is_constant() and ring.is_unit(acc.constant_value()):
        return FixedDivisorReport(None, exhaustive, tested)
    if acc is None:
        return FixedDivisorReport(None, exhaustive, tested)
    return FixedDivisorReport(acc.monic_normalize()[1], exhaustive, tested)


_Z95 = 1.959963984540054


@dataclass
class DensityReport:
    fraction: float
    ci_low: float
    ci_high: float
    samples: int
    witnesses: int
    seed: int


def density_probe(problem: SchinzelProblem, samples: int) -> DensityReport:
    """Witness fraction of random samples with a Wilson 95% interval."""
    cons = problem.constraints
    probe_cons = SearchConstraints(
        strategy="random", seed=cons.seed, budget=samples,
        coeff_bound=cons.coeff_bound, deg_u_bound=cons.deg_u_bound,
        exact_degrees=cons.exact_degrees, deg_u_target=cons.deg_u_target,
        paper_mode=cons.paper_mode, threads=cons.threads)
    hits = 0
    for M, tup in iter_candidates(problem.ring, problem.xvars,
                                  problem.support, probe_cons):
        ok, _, _ = verify_candidate(problem, M, tup)
        if ok:
            hits += 1
    p = hits / samples
    z2 = _Z95 * _Z95
    denom = 1 + z2 / samples
    center = (p + z2 / (2 * samples)) / denom
    half = _Z95 * math.sqrt(p * (1 - p) / samples + z2 / (4 * samples * samples)) / denom
    return DensityReport(p, max(0.0, center - half), min(1.0, center + half),
                         samples, hits, cons.seed)
