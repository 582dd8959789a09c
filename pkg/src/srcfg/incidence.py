"""Symmetric point/line configurations and their associated graphs.

A Configuration stores v points (indices 0..v-1) and v lines of k points
each.  Validity means: every line has k distinct points in range, every
point lies on exactly k lines and no pair of points is covered twice.
Constructors in this package emit lines sorted lexicographically; dual()
deliberately does not re-sort, because keeping line i of the dual attached
to point i of the original is what makes dual(dual(c)) == c exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .graphs import Graph, SrgParams, srg_check


class InvalidConfiguration(ValueError):
    pass


class TheoremViolation(AssertionError):
    """Point graph strongly regular but line graph disagrees: impossible for
    a valid configuration, so raising this means a bug upstream."""


@dataclass(frozen=True)
class Violation:
    kind: str          # line_size | point_range | duplicate_point | point_degree | pair_covered_twice | line_count
    where: tuple
    detail: str = ""


@dataclass(frozen=True)
class Configuration:
    v: int
    k: int
    lines: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_lines(v: int, k: int, lines) -> "Configuration":
        """Normalize: sort points within each line; line order is kept."""
        return Configuration(v, k, tuple(tuple(sorted(l)) for l in lines))

    def sorted_lines(self) -> "Configuration":
        return Configuration(self.v, self.k, tuple(sorted(self.lines)))

    def incidence_rows(self) -> list[int]:
        """Bitmask per point of the lines through it."""
        rows = [0] * self.v
        for j, line in enumerate(self.lines):
            for p in line:
                rows[p] |= 1 << j
        return rows

    def __str__(self):
        return f"configuration ({self.v}_{self.k})"


def validate(c: Configuration) -> list[Violation]:
    """All defects of c, empty when c is a symmetric v_k configuration."""
    out = []
    if len(c.lines) != c.v:
        out.append(Violation("line_count", (len(c.lines),),
                             f"expected {c.v} lines, got {len(c.lines)}"))
    degree = [0] * c.v
    seen_pairs = {}
    for j, line in enumerate(c.lines):
        if len(line) != c.k:
            out.append(Violation("line_size", (j,), f"line {j} has {len(line)} points"))
        if len(set(line)) != len(line):
            out.append(Violation("duplicate_point", (j,), f"line {j} repeats a point"))
        for p in line:
            if not 0 <= p < c.v:
                out.append(Violation("point_range", (j, p), f"point {p} out of range on line {j}"))
            else:
                degree[p] += 1
        pts = sorted(set(x for x in line if 0 <= x < c.v))
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                pair = (pts[a], pts[b])
                if pair in seen_pairs:
                    out.append(Violation("pair_covered_twice", (*pair, seen_pairs[pair], j),
                                         f"points {pair} on lines {seen_pairs[pair]} and {j}"))
                else:
                    seen_pairs[pair] = j
    for p, deg in enumerate(degree):
        if deg != c.k:
            out.append(Violation("point_degree", (p,), f"point {p} lies on {deg} lines"))
    return out


def is_valid(c: Configuration) -> bool:
    return not validate(c)


def require_valid(c: Configuration) -> None:
    bad = validate(c)
    if bad:
        raise InvalidConfiguration(f"{len(bad)} violations, first: {bad[0]}")


def dual(c: Configuration) -> Configuration:
    """Transpose: point i of the dual is line i of c and vice versa.

    No re-sorting of lines, so dual is an exact involution."""
    new_lines = [[] for _ in range(c.v)]
    for j, line in enumerate(c.lines):
        for p in line:
            new_lines[p].append(j)
    return Configuration(c.v, c.k, tuple(tuple(sorted(l)) for l in new_lines))


def point_graph(c: Configuration) -> Graph:
    """Collinearity graph on points."""
    edges = set()
    for line in c.lines:
        for a in range(len(line)):
            for b in range(a + 1, len(line)):
                edges.add((line[a], line[b]))
    return Graph(c.v, edges)


def line_graph(c: Configuration) -> Graph:
    """Concurrence graph on lines: two lines adjacent iff they share a point."""
    return point_graph(dual(c))


def associated_graph(c: Configuration, side: str = "point") -> Graph:
    if side == "point":
        return point_graph(c)
    if side == "line":
        return line_graph(c)
    raise ValueError(f"side must be 'point' or 'line', not {side!r}")


@dataclass(frozen=True)
class SrcParams:
    """Parameters (v_k; lam, mu) of a strongly regular configuration."""
    v: int
    k: int
    lam: int
    mu: int

    @property
    def d(self) -> int:
        return self.k * (self.k - 1)

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def graph_params(self) -> SrgParams:
        return SrgParams(self.v, self.d, self.lam, self.mu)

    def __str__(self):
        return f"({self.v}_{self.k};{self.lam},{self.mu})"


def src_check(c: Configuration) -> SrcParams | None:
    """(v_k; lam, mu) if the point graph of c is strongly regular, else None.

    For a valid configuration the line graph must then be strongly regular
    with the same parameters; if it is not, TheoremViolation is raised since
    that combination cannot occur.
    """
    require_valid(c)
    pp = srg_check(point_graph(c))
    if pp is None:
        return None
    lp = srg_check(line_graph(c))
    if lp != pp:
        raise TheoremViolation(f"point graph {pp} but line graph {lp}")
    if pp.d != c.k * (c.k - 1):
        raise TheoremViolation(f"point graph degree {pp.d} != k(k-1)")
    return SrcParams(c.v, c.k, pp.lam, pp.mu)


# -- antiflag spectrum and geometry classes ------------------------------------

@dataclass(frozen=True)
class GeometryClass:
    """Classification of a configuration by its antiflag incidence numbers.

    For a point P not on a line L, alpha(P, L) counts the points of L
    collinear with P.  kind is one of:
      partial_geometry       every antiflag has the same alpha >= 1
      semipartial_geometry   alpha in {0, a} and noncollinear pairs have a
                             constant number mu of common neighbours
      alpha_beta             alpha takes exactly two values
      general                anything else
    """
    kind: str
    alpha: int | None = None
    beta: int | None = None
    mu: int | None = None
    spectrum: tuple[tuple[int, int], ...] = ()


def antiflag_spectrum(c: Configuration) -> dict[int, int]:
    """Histogram of alpha(P, L) over all antiflags of c."""
    require_valid(c)
    g = point_graph(c)
    line_masks = [sum(1 << p for p in line) for line in c.lines]
    hist: dict[int, int] = {}
    for j, line in enumerate(c.lines):
        mask = line_masks[j]
        on_line = set(line)
        for p in range(c.v):
            if p in on_line:
                continue
            a = (g.rows[p] & mask).bit_count()
            hist[a] = hist.get(a, 0) + 1
    return dict(sorted(hist.items()))


def alpha_spectrum(c: Configuration) -> GeometryClass:
    """Classify c by its antiflag spectrum; the strictest class wins."""
    hist = antiflag_spectrum(c)
    spectrum = tuple(sorted(hist.items()))
    values = sorted(hist)
    if len(values) == 1:
        return GeometryClass("partial_geometry", alpha=values[0], spectrum=spectrum)
    if len(values) == 2 and values[0] == 0:
        mu = _constant_noncollinear_mu(c)
        if mu is not None:
            return GeometryClass("semipartial_geometry", alpha=values[1], mu=mu,
                                 spectrum=spectrum)
    if len(values) == 2:
        return GeometryClass("alpha_beta", alpha=values[0], beta=values[1],
                             spectrum=spectrum)
    return GeometryClass("general", spectrum=spectrum)


def _constant_noncollinear_mu(c: Configuration) -> int | None:
    g = point_graph(c)
    mu = None
    for u in range(c.v):
        ru = g.rows[u]
        for v in range(u + 1, c.v):
            if ru >> v & 1:
                continue
            m = (ru & g.rows[v]).bit_count()
            if mu is None:
                mu = m
            elif m != mu:
                return None
    return mu


# -- properness (incidence matrix rank) -----------------------------------------

def _modular_rank(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over Z_p by vectorized elimination."""
    a = (mat % p).astype(np.int64)
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        pivot = None
        nz = np.nonzero(a[rank:, col])[0]
        if len(nz) == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = a[rank] * inv % p
        mask = np.nonzero(a[:, col])[0]
        mask = mask[mask != rank]
        if len(mask):
            a[mask] = (a[mask] - np.outer(a[mask, col], a[rank])) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


def _bareiss_nonsingular(mat: list[list[int]]) -> bool:
    """Exact nonsingularity test by fraction-free Bareiss elimination."""
    a = [row[:] for row in mat]
    n = len(a)
    prev = 1
    for i in range(n):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, n) if a[r][i] != 0), None)
            if swap is None:
                return False
            a[i], a[swap] = a[swap], a[i]
        for r in range(i + 1, n):
            for ccol in range(i + 1, n):
                a[r][ccol] = (a[r][ccol] * a[i][i] - a[r][i] * a[i][ccol]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return True


def _primes_above(n: int, count: int) -> list[int]:
    out = []
    cand = max(n, 2) + 1
    while len(out) < count:
        if all(cand % p for p in range(2, int(cand ** 0.5) + 1)):
            out.append(cand)
        cand += 1
    return out


def is_proper(c: Configuration) -> bool:
    """True iff the v x v point-line incidence matrix is nonsingular over Q.

    Full rank modulo either of two primes > v settles it immediately; only
    when both modular ranks are deficient does the exact integer elimination
    run.
    """
    require_valid(c)
    mat = np.zeros((c.v, c.v), dtype=np.int64)
    for j, line in enumerate(c.lines):
        for p in line:
            mat[p, j] = 1
    for prime in _primes_above(c.v, 2):
        if _modular_rank(mat, prime) == c.v:
            return True
    return _bareiss_nonsingular(mat.tolist())


# -- file formats ----------------------------------------------------------------

def write_configuration(c: Configuration, path) -> None:
    """Text format: first line `v k`, then one line of k point indices per line."""
    rows = [f"{c.v} {c.k}"]
    for line in c.lines:
        rows.append(" ".join(str(p) for p in line))
    Path(path).write_text("\n".join(rows) + "\n")


def read_configuration(path) -> Configuration:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return configuration_from_json(text)
    lines = []
    header = None
    for raw in text.splitlines():
        raw = raw.split("#", 1)[0].strip()
        if not raw:
            continue
        if header is None:
            header = [int(t) for t in raw.split()]
            if len(header) != 2:
                raise InvalidConfiguration(f"{path}: header must be 'v k'")
            continue
        lines.append(tuple(int(t) for t in raw.split()))
    if header is None:
        raise InvalidConfiguration(f"{path}: empty file")
    v, k = header
    return Configuration.from_lines(v, k, lines)


def configuration_to_json(c: Configuration) -> str:
    return json.dumps({"v": c.v, "k": c.k, "lines": [list(l) for l in c.lines]})


def configuration_from_json(text: str) -> Configuration:
    obj = json.loads(text)
    return Configuration.from_lines(int(obj["v"]), int(obj["k"]), obj["lines"])
