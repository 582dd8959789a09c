"""Parameter feasibility for strongly regular configurations.

A symmetric v_k configuration with strongly regular point graph forces the
graph parameters (v, k(k-1), lam, mu).  This module runs the standard
necessary-condition battery on such parameter sets with exact arithmetic
throughout: the counting identity, integral nonnegative eigenvalue
multiplicities, the Krein conditions, the absolute bound, a perfect-square
determinant condition on the incidence matrix, and a line-clique condition
whose equality case pins down partial geometries.

Known nonexistent strongly regular graphs are handled by a small packaged
exclusion list (data/srg_nonexistent.txt); those nonexistence proofs are
published results and are not re-derived here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .graphs import SrgParams
from .incidence import SrcParams


class IdentityViolated(ValueError):
    pass


class NonIntegralMultiplicity(ValueError):
    pass


class NonIntegralPointCount(ValueError):
    pass


# -- exact arithmetic in Q(sqrt(D)) --------------------------------------------

@dataclass(frozen=True)
class Quad:
    """Exact number a + b*sqrt(D) with rational a, b and fixed nonsquare D > 0."""
    a: Fraction
    b: Fraction
    D: int

    @staticmethod
    def of(a, b, D) -> "Quad":
        return Quad(Fraction(a), Fraction(b), D)

    def __add__(self, other):
        o = self._coerce(other)
        return Quad(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Quad(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Quad(self.a * o.a + self.b * o.b * self.D,
                    self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def _coerce(self, other) -> "Quad":
        if isinstance(other, Quad):
            if other.D != self.D:
                raise ValueError("mixed radicands")
            return other
        return Quad(Fraction(other), Fraction(0), self.D)

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # a and b of opposite sign: compare a^2 with b^2 * D
        lhs = a * a
        rhs = b * b * self.D
        if a > 0:  # b < 0: positive iff a^2 > b^2 D
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0


# -- eigenvalue data -------------------------------------------------------------

@dataclass(frozen=True)
class Eigendata:
    """Restricted eigenvalues and multiplicities of a putative srg.

    In the integral case r > s are ints with multiplicities f, g.  When the
    discriminant is not a perfect square the eigenvalues are the conjugate
    surds (lam - mu +- sqrt(disc))/2; then conjugate=True, r and s are None
    and f = g = (v-1)/2.
    """
    r: int | None
    s: int | None
    f: int
    g: int
    disc: int
    conjugate: bool = False


def eigendata(p: SrgParams) -> Eigendata:
    """Exact eigenvalue data, or NonIntegralMultiplicity when impossible."""
    v, d, lam, mu = p.v, p.d, p.lam, p.mu
    disc = (lam - mu) ** 2 + 4 * (d - mu)
    if disc <= 0:
        raise NonIntegralMultiplicity(f"nonpositive discriminant {disc}")
    root = math.isqrt(disc)
    if root * root != disc:
        # conjugate pair: multiplicities equal, so (lam-mu)(v-1) + 2d = 0
        if (lam - mu) * (v - 1) + 2 * d != 0 or (v - 1) % 2:
            raise NonIntegralMultiplicity(
                f"irrational eigenvalues with unequal multiplicities for {p}")
        half = (v - 1) // 2
        return Eigendata(r=None, s=None, f=half, g=half, disc=disc, conjugate=True)
    r = (lam - mu + root) // 2
    s = (lam - mu - root) // 2
    num = (r + s) * (v - 1) + 2 * d
    if num % (r - s):
        raise NonIntegralMultiplicity(f"multiplicities not integral for {p}")
    diff = num // (r - s)
    f2 = v - 1 - diff
    g2 = v - 1 + diff
    if f2 < 0 or g2 < 0 or f2 % 2 or g2 % 2:
        raise NonIntegralMultiplicity(f"negative or half-integral multiplicity for {p}")
    return Eigendata(r=r, s=s, f=f2 // 2, g=g2 // 2, disc=disc)


def _krein_ok(p: SrgParams, e: Eigendata) -> bool:
    d = p.d
    if not e.conjugate:
        r, s = e.r, e.s
        return ((r + 1) * (d + r + 2 * r * s) <= (d + r) * (s + 1) ** 2
                and (s + 1) * (d + s + 2 * r * s) <= (d + s) * (r + 1) ** 2)
    half = Fraction(p.lam - p.mu, 2)
    r = Quad(half, Fraction(1, 2), e.disc)
    s = Quad(half, Fraction(-1, 2), e.disc)
    k1 = ((r + 1) * (d + r + 2 * r * s) - (d + r) * (s + 1) * (s + 1)).sign() <= 0
    k2 = ((s + 1) * (d + s + 2 * r * s) - (d + s) * (r + 1) * (r + 1)).sign() <= 0
    return k1 and k2


def srg_param_feasible(p: SrgParams) -> tuple[bool, str | None]:
    """Necessary-condition battery for a primitive srg parameter set.

    Checks, in order: parameter ranges, the counting identity
    (v-1-d)mu = d(d-1-lam), integral nonnegative multiplicities, the two
    Krein conditions and the absolute bound.  Returns (True, None) or
    (False, reason).
    """
    v, d, lam, mu = p.v, p.d, p.lam, p.mu
    if not (0 < d < v - 1 and 0 <= lam < d and 0 < mu <= d):
        return False, "parameter_range"
    if (v - 1 - d) * mu != d * (d - 1 - lam):
        return False, "identity"
    if v * d % 2:
        return False, "handshake"
    try:
        e = eigendata(p)
    except NonIntegralMultiplicity:
        return False, "multiplicity"
    if not _krein_ok(p, e):
        return False, "krein"
    if v > e.f * (e.f + 3) // 2 or v > e.g * (e.g + 3) // 2:
        return False, "absolute_bound"
    return True, None


# -- determinant square condition -------------------------------------------------

@dataclass(frozen=True)
class SquareCheck:
    """Outcome of the incidence determinant condition.

    The Gram matrix of a (v_k; lam, mu) configuration has determinant
    k^2 (r+k)^f (s+k)^g, which must be a perfect square.  On failure the
    witness prime has odd exponent in the factorization."""
    passed: bool
    witness_prime: int | None = None
    witness_exponent: int | None = None


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    n = abs(n)
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def square_condition(p: SrcParams) -> SquareCheck:
    """Check that k^2 (r+k)^f (s+k)^g is a perfect square."""
    e = eigendata(p.graph_params())
    k = p.k
    if e.conjugate:
        # (r+k)(s+k) is rational: rs + k(r+s) + k^2
        base = (p.mu - p.d) + k * (p.lam - p.mu) + k * k
        factors = {q: e.f * m for q, m in _factorize(base).items()}
        negative = base < 0 and e.f % 2
    else:
        t1, t2 = e.r + k, e.s + k
        if t1 == 0 or t2 == 0:
            return SquareCheck(True)  # determinant 0
        factors: dict[int, int] = {}
        for base, mult in ((t1, e.f), (t2, e.g)):
            for q, m in _factorize(base).items():
                factors[q] = factors.get(q, 0) + m * mult
        negative = (t1 < 0 and e.f % 2) != (t2 < 0 and e.g % 2)
    if negative:
        return SquareCheck(False, witness_prime=-1, witness_exponent=None)
    for q in sorted(factors):
        if factors[q] % 2:
            return SquareCheck(False, witness_prime=q, witness_exponent=factors[q])
    return SquareCheck(True)


def square_condition_determinant(p: SrcParams) -> int:
    """The exact Gram determinant k^2 (r+k)^f (s+k)^g as a big integer.

    Slower than square_condition but independent of the factoring route;
    kept as a cross-check."""
    e = eigendata(p.graph_params())
    k = p.k
    if e.conjugate:
        base = (p.mu - p.d) + k * (p.lam - p.mu) + k * k
        return k * k * base ** e.f
    return k * k * (e.r + k) ** e.f * (e.s + k) ** e.g


# -- clique condition and rook exclusion ------------------------------------------

def clique_condition(p: SrcParams) -> str:
    """Compare (v-k)(lam+1) with k(k-1)^3.

    Lines are k-cliques of the point graph; counting edges between a line
    and the rest gives (v-k)(lam+1) >= k(k-1)^3, with equality exactly for
    partial geometries.  Returns 'fail', 'equality_pg' or 'strict_pass'.
    """
    lhs = (p.v - p.k) * (p.lam + 1)
    rhs = p.k * (p.k - 1) ** 3
    if lhs < rhs:
        return "fail"
    if lhs == rhs:
        return "equality_pg"
    return "strict_pass"


def rook_excluded(p: SrcParams) -> bool:
    """True when the rook graph with these parameters carries no configuration.

    For k > 3 the n x n rook graph with n = k(k-1)/2 + 1 has the right
    parameters but admits no strongly regular configuration; pseudo rook
    graphs with the same parameters are untouched, so this is an annotation
    on the parameter set, not an infeasibility.
    """
    if p.k <= 3:
        return False
    n = p.k * (p.k - 1) // 2 + 1
    return (p.v, p.lam, p.mu) == (n * n, n - 2, 2)


def primitivity(p: SrcParams) -> str:
    """'union_of_planes' (mu = 0), 'elliptic_semiplane' (mu = k(k-1)) or 'primitive'."""
    if p.mu == 0:
        return "union_of_planes"
    if p.mu == p.d:
        return "elliptic_semiplane"
    return "primitive"


# -- external exclusion list -------------------------------------------------------

_DATA_FILE = Path(__file__).parent / "data" / "srg_nonexistent.txt"


def load_exclusions(path=None) -> dict[tuple[int, int, int, int], str]:
    """Parse the nonexistent-srg list: lines `v d lam mu  # citation-tag`."""
    text = Path(path or _DATA_FILE).read_text()
    out = {}
    for raw in text.splitlines():
        line, _, comment = raw.partition("#")
        line = line.strip()
        if not line:
            continue
        v, d, lam, mu = (int(t) for t in line.split())
        out[(v, d, lam, mu)] = comment.strip()
    return out


# -- full verdicts ------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityVerdict:
    params: SrcParams
    identity_ok: bool
    srg_feasible: bool
    srg_reason: str | None
    externally_excluded: bool
    clique: str
    square: SquareCheck
    rook_excluded: bool
    primitivity: str
    overall: str            # feasible | partial_geometry_only | infeasible
    reason: str | None = None


def assess(p: SrcParams, exclusions=None) -> FeasibilityVerdict:
    """Run the whole pipeline on one parameter set."""
    if exclusions is None:
        exclusions = load_exclusions()
    gp = p.graph_params()
    identity_ok = (p.v - 1 - p.d) * p.mu == p.d * (p.d - 1 - p.lam)
    ok, reason = srg_param_feasible(gp)
    excluded = gp.astuple() in exclusions
    clique = clique_condition(p)
    square = square_condition(p) if ok else SquareCheck(False)
    rook = rook_excluded(p)
    prim = primitivity(p)
    if not identity_ok:
        overall, why = "infeasible", "identity"
    elif not ok:
        overall, why = "infeasible", reason
    elif excluded:
        overall, why = "infeasible", "known_nonexistent_srg"
    elif clique == "fail":
        overall, why = "infeasible", "clique_condition"
    elif clique == "equality_pg":
        overall, why = "partial_geometry_only", None
    elif not square.passed:
        overall, why = "infeasible", "square_condition"
    else:
        overall, why = "feasible", None
    return FeasibilityVerdict(p, identity_ok, ok, reason, excluded, clique, square,
                              rook, prim, overall, why)


def enumerate_candidates(v_max: int, k_min: int = 3) -> list[SrcParams]:
    """All primitive parameter sets with v <= v_max passing the srg battery.

    The counting identity makes mu a function of (v, k, lam), so the scan
    is over lam for each (v, k) with k(k-1) < v - 1.
    """
    out = []
    for v in range(7, v_max + 1):
        k = k_min
        while k * (k - 1) < v - 1:
            d = k * (k - 1)
            for lam in range(d):
                num = d * (d - 1 - lam)
                den = v - 1 - d
                if num % den:
                    continue
                mu = num // den
                if not 0 < mu < d:
                    continue
                p = SrcParams(v, k, lam, mu)
                if srg_param_feasible(p.graph_params())[0]:
                    out.append(p)
            k += 1
    out.sort(key=lambda p: (p.v, p.k, p.lam, p.mu))
    return out


def enumerate_feasible(v_max: int, exclusions=None) -> list[FeasibilityVerdict]:
    """Verdicts for every battery-passing candidate up to v_max, sorted by (v, k).

    Candidates eliminated only by the external exclusion list stay in the
    output, flagged externally_excluded."""
    if exclusions is None:
        exclusions = load_exclusions()
    return [assess(p, exclusions) for p in enumerate_candidates(v_max)]


@dataclass(frozen=True)
class FeasibleTable:
    verdicts: tuple[FeasibilityVerdict, ...]
    counts: dict

    def feasible_rows(self) -> list[FeasibilityVerdict]:
        return [w for w in self.verdicts if w.overall == "feasible"]


def feasible_table(v_max: int = 200, exclusions=None) -> FeasibleTable:
    """The feasibility table with its bookkeeping counts."""
    verdicts = enumerate_feasible(v_max, exclusions)
    alive = [w for w in verdicts if not w.externally_excluded]
    counts = {
        "battery_passing": len(verdicts),
        "excluded_known_nonexistent": sum(w.externally_excluded for w in verdicts),
        "candidates": len(alive),
        "clique_fail": sum(w.reason == "clique_condition" for w in alive),
        "equality_pg": sum(w.overall == "partial_geometry_only" for w in alive),
        "square_fail": sum(w.reason == "square_condition" for w in alive),
        "feasible": sum(w.overall == "feasible" for w in alive),
    }
    return FeasibleTable(tuple(verdicts), counts)


def render_table(table: FeasibleTable, only_feasible: bool = True) -> str:
    """Fixed-width text rendering of the table."""
    hdr = f"{'v':>4} {'k':>3} {'lam':>4} {'mu':>4} {'r':>4} {'s':>4} {'f':>4} {'g':>4}  {'verdict':<24} notes"
    rows = [hdr, "-" * len(hdr)]
    for w in table.verdicts:
        if only_feasible and w.overall != "feasible":
            continue
        p = w.params
        e = eigendata(p.graph_params())
        r = "conj" if e.conjugate else str(e.r)
        s = "conj" if e.conjugate else str(e.s)
        verdict = w.overall if w.reason is None else f"{w.overall}:{w.reason}"
        notes = []
        if w.rook_excluded:
            notes.append("rook-excluded")
        if w.externally_excluded:
            notes.append("known-nonexistent-srg")
        rows.append(f"{p.v:>4} {p.k:>3} {p.lam:>4} {p.mu:>4} {r:>4} {s:>4} "
                    f"{e.f:>4} {e.g:>4}  {verdict:<24} {' '.join(notes)}".rstrip())
    counts = table.counts
    rows.append("-" * len(hdr))
    rows.append(f"candidates {counts['candidates']}  clique-fail {counts['clique_fail']}  "
                f"equality {counts['equality_pg']}  square-fail {counts['square_fail']}  "
                f"feasible {counts['feasible']}")
    return "\n".join(rows)


# -- partial geometry parameter helper ----------------------------------------------

@dataclass(frozen=True)
class PgParams:
    """Partial geometry pg(s, t, alpha): lines have s+1 points, points lie on
    t+1 lines, and each antiflag sees alpha collinear points on the line."""
    s: int
    t: int
    alpha: int


def pg_graph_params(p: PgParams, side: str = "point") -> SrgParams:
    """srg parameters of the point (or line) graph of a pg(s, t, alpha)."""
    s, t, alpha = (p.s, p.t, p.alpha) if side == "point" else (p.t, p.s, p.alpha)
    if side not in ("point", "line"):
        raise ValueError("side must be 'point' or 'line'")
    if alpha < 1 or alpha > min(s + 1, t + 1):
        raise ValueError(f"alpha out of range for pg({p.s},{p.t},{p.alpha})")
    num = (s + 1) * (s * t + alpha)
    if num % alpha:
        raise NonIntegralPointCount(f"pg({p.s},{p.t},{p.alpha}) has {num}/{alpha} points")
    v = num // alpha
    return SrgParams(v, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1))
