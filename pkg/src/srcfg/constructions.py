"""Construction families for strongly regular configurations.

Four families live here: neighbourhood geometries of Moore graphs, triangle
removal from projective planes, the line/plane incidence structure of
PG(4, q) with optional symplectic polarity modifications, and developments
of difference sets in finite groups.
"""

from __future__ import annotations

import itertools

from .algebra import FiniteField, Group, Subspace, pg_subspaces, rref, span, subspace_contains
from .graphs import Graph, srg_check
from .incidence import Configuration, InvalidConfiguration, require_valid, validate


class NotMooreGraph(ValueError):
    pass


class CollinearTriple(ValueError):
    pass


class OrderTooSmall(ValueError):
    pass


class NotDeficient(ValueError):
    pass


# -- projective planes ------------------------------------------------------------

def projective_plane(q: int) -> Configuration:
    """PG(2, q) as a configuration ((q^2+q+1)_(q+1)); lines sorted."""
    points = pg_subspaces(2, q, 0)
    plines = pg_subspaces(2, q, 1)
    lines = []
    for L in plines:
        lines.append(tuple(i for i, pt in enumerate(points) if subspace_contains(L, pt)))
    lines.sort()
    cfg = Configuration(q * q + q + 1, q + 1, tuple(lines))
    require_valid(cfg)
    return cfg


def _is_projective_plane(c: Configuration) -> int | None:
    """Order n if c is a projective plane ((n^2+n+1)_(n+1)), else None."""
    n = c.k - 1
    if n < 2 or c.v != n * n + n + 1 or validate(c):
        return None
    # symmetric config + any two lines meet <=> projective plane
    masks = [sum(1 << p for p in line) for line in c.lines]
    for a, b in itertools.combinations(masks, 2):
        if not a & b:
            return None
    return n


def triangle_removal(plane: Configuration, triangle: tuple[int, int, int] | None = None) -> Configuration:
    """Remove a triangle from a projective plane of order n >= 5.

    Deletes the three chosen points, every further point on one of their
    three joining lines, every line through a chosen point, and trims the
    rest, leaving an ((n-1)^2_(n-2)) configuration.  With triangle=None the
    lexicographically first non-collinear point triple is used.
    """
    n = _is_projective_plane(plane)
    if n is None:
        raise InvalidConfiguration("triangle_removal needs a projective plane")
    if n < 5:
        raise OrderTooSmall(f"plane order {n} < 5")
    line_sets = [frozenset(l) for l in plane.lines]
    if triangle is None:
        a, b = 0, 1
        joined = next(s for s in line_sets if a in s and b in s)
        c = next(p for p in range(plane.v) if p not in joined)
        triangle = (a, b, c)
    a, b, c = triangle
    sides = [s for s in line_sets
             if len({a, b, c} & s) == 2]
    if len({a, b, c}) < 3 or any({a, b, c} <= s for s in line_sets):
        raise CollinearTriple(f"points {triangle} are collinear")
    assert len(sides) == 3
    dead_points = frozenset().union(*sides)
    dead_lines = {i for i, s in enumerate(line_sets) if {a, b, c} & s}
    keep_points = sorted(set(range(plane.v)) - dead_points)
    renum = {p: i for i, p in enumerate(keep_points)}
    lines = []
    for i, line in enumerate(plane.lines):
        if i in dead_lines:
            continue
        lines.append(tuple(sorted(renum[p] for p in line if p in renum)))
    lines.sort()
    cfg = Configuration((n - 1) ** 2, n - 2, tuple(lines))
    require_valid(cfg)
    return cfg


# -- Moore graph neighbourhood geometries --------------------------------------------

def moore_configuration(g: Graph) -> Configuration:
    """Neighbourhood geometry of a Moore graph of diameter 2.

    g must be srg(k^2+1, k, 0, 1) with k >= 3; line i is the neighbourhood
    of vertex i, giving a self-polar (k^2+1)_k configuration whose point
    graph is the complement of g.
    """
    p = srg_check(g)
    if p is None or p.lam != 0 or p.mu != 1 or p.v != p.d * p.d + 1 or p.d < 3:
        raise NotMooreGraph(f"expected srg(k^2+1,k,0,1), k >= 3, got {p}")
    lines = tuple(tuple(g.neighbors(i)) for i in range(g.n))
    cfg = Configuration(g.n, p.d, lines)
    require_valid(cfg)
    return cfg


# -- PG(4, q) line/plane geometry with polarity twists --------------------------------

def _mat_mul(field: FiniteField, a, b):
    """Matrix product over the field; a is r x m, b is m x c."""
    rows = []
    for arow in a:
        row = []
        for j in range(len(b[0])):
            acc = 0
            for t, coef in enumerate(arow):
                if coef:
                    acc = field.add(acc, field.mul(coef, b[t][j]))
            row.append(acc)
        rows.append(row)
    return rows


def _nullspace(field: FiniteField, mat) -> list[list[int]]:
    """Basis of the right nullspace of mat over the field."""
    ncols = len(mat[0])
    reduced, pivots = rref(field, [list(r) for r in mat])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        vec = [0] * ncols
        vec[j] = 1
        for row, pc in zip(reduced, pivots):
            vec[pc] = field.neg(row[j])
        basis.append(vec)
    return basis


# Gram matrix of the symplectic form x0 y1 - x1 y0 + x2 y3 - x3 y2 on GF(q)^4
def _symplectic_gram(field: FiniteField):
    m1 = field.neg(1)
    return [[0, 1, 0, 0], [m1, 0, 0, 0], [0, 0, 0, 1], [0, 0, m1, 0]]


def _symplectic_perp(field: FiniteField, rows4) -> list[list[int]]:
    return _nullspace(field, _mat_mul(field, rows4, _symplectic_gram(field)))


def lp4(q: int, *, hyperplane_polarity: bool = False, point_polarity: bool = False) -> Configuration:
    """Lines versus planes of PG(4, q); both classes have (q^5-1)...(q^2+1)
    elements, giving a symmetric configuration with k = q^2 + q + 1.

    Base incidence is inclusion.  With hyperplane_polarity, pairs lying in
    the hyperplane x4 = 0 instead use a symplectic polarity pi of that
    PG(3, q): line L is incident with plane p iff pi(L) is contained in p.
    With point_polarity, pairs through the point (0:0:0:0:1) use the induced
    polarity of the quotient PG(3, q).  The two modified zones are disjoint,
    so the flags compose freely; all four variants are valid configurations
    and the point graph does not depend on hyperplane_polarity (nor the line
    graph on point_polarity).
    """
    field = FiniteField(q)
    lines = pg_subspaces(4, q, 1)   # configuration points
    planes = pg_subspaces(4, q, 2)  # configuration lines
    line_idx = {L: i for i, L in enumerate(lines)}
    local = [s.basis for s in pg_subspaces(2, q, 1)]  # RREF 2x3 matrices

    incident: list[set[int]] = []
    for p in planes:
        members = set()
        for loc in local:
            amb = _mat_mul(field, loc, [list(r) for r in p.basis])
            members.add(line_idx[span(field, 4, amb)])
        incident.append(members)

    in_h0 = lambda s: all(row[4] == 0 for row in s.basis)
    e4 = Subspace(n=4, q=q, basis=((0, 0, 0, 0, 1),))
    through_p0 = lambda s: subspace_contains(s, e4)

    if hyperplane_polarity:
        h_lines = [i for i, L in enumerate(lines) if in_h0(L)]
        h_planes = [j for j, p in enumerate(planes) if in_h0(p)]
        # polarity image of each H0-line, as a set of H0-line row tuples
        pol = {}
        for i in h_lines:
            rows4 = [list(r[:4]) for r in lines[i].basis]
            pol[i] = _symplectic_perp(field, rows4)
        for j in h_planes:
            plane4 = span(field, 3, [r[:4] for r in planes[j].basis])
            new = set(x for x in incident[j] if x not in pol)
            for i in h_lines:
                img = span(field, 3, pol[i])
                if subspace_contains(plane4, img):
                    new.add(i)
            incident[j] = new

    if point_polarity:
        p_lines = [i for i, L in enumerate(lines) if through_p0(L)]
        p_planes = [j for j, p in enumerate(planes) if through_p0(p)]
        if hyperplane_polarity:
            assert not (set(p_lines) & {i for i in range(len(lines)) if in_h0(lines[i])})

        def quotient(s: Subspace) -> list[list[int]]:
            # s contains e4; RREF has one row equal to e4, the others 0 there
            return [list(r[:4]) for r in s.basis if r[4] == 0]

        quot_line = {i: span(field, 3, quotient(lines[i])) for i in p_lines}
        for j in p_planes:
            perp = span(field, 3, _symplectic_perp(field, quotient(planes[j])))
            new = set(x for x in incident[j] if x not in quot_line)
            for i in p_lines:
                if subspace_contains(perp, quot_line[i]):
                    new.add(i)
            incident[j] = new

    k = q * q + q + 1
    cfg = Configuration(len(lines), k, tuple(tuple(sorted(m)) for m in incident))
    require_valid(cfg)
    return cfg


# -- difference set developments -------------------------------------------------------

def development(group: Group, diff_set) -> Configuration:
    """Configuration whose lines are the left translates g*D of a deficient
    difference set D (indices into the group).

    Raises NotDeficient when D has a repeated left difference, which is
    exactly when the translates would cover some pair twice.
    """
    D = sorted(set(diff_set))
    k = len(D)
    seen = set()
    for a, b in itertools.permutations(D, 2):
        delta = group.mul(group.inv(a), b)
        if delta in seen:
            raise NotDeficient(f"repeated difference {delta}")
        seen.add(delta)
    lines = []
    for g in range(group.n):
        lines.append(tuple(sorted(group.mul(g, d) for d in D)))
    lines.sort()
    cfg = Configuration(group.n, k, tuple(lines))
    require_valid(cfg)
    return cfg
