"""Simple graphs with bitmask adjacency, SRG checking, generators, graph6 io.

Adjacency rows are Python ints used as bitsets, so common-neighbour counts
are single popcounts.  Everything here is deliberately dependency-free; the
graphs involved are small (v <= a few hundred) and exact integer arithmetic
matters more than speed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import FiniteField, Group


class MalformedGraph6(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SrgParams:
    v: int
    d: int
    lam: int
    mu: int

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.d, self.lam, self.mu)

    def __str__(self):
        return f"srg({self.v},{self.d},{self.lam},{self.mu})"


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges=None, rows=None):
        self.n = n
        if rows is not None:
            self.rows = tuple(rows)
        else:
            adj = [0] * n
            for u, v in edges or []:
                if u == v:
                    raise ValueError(f"loop at {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u},{v}) out of range")
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            self.rows = tuple(adj)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return _bits(self.rows[u])

    def common_count(self, u: int, v: int) -> int:
        return (self.rows[u] & self.rows[v]).bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(m):
                out.append((u, v))
        return out

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, rows=[(full & ~r) & ~(1 << u) for u, r in enumerate(self.rows)])

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex u renamed perm[u]."""
        rows = [0] * self.n
        for u, r in enumerate(self.rows):
            m = 0
            for v in _bits(r):
                m |= 1 << perm[v]
            rows[perm[u]] = m
        return Graph(self.n, rows=rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def srg_check(g: Graph) -> SrgParams | None:
    """Parameters (v, d, lam, mu) if g is strongly regular, else None.

    Complete and empty graphs are rejected (no mu, resp. no lam); so are
    graphs on fewer than 2 vertices.
    """
    n = g.n
    if n < 2:
        return None
    d = g.degree(0)
    if any(g.degree(u) != d for u in range(1, n)):
        return None
    if d == 0 or d == n - 1:
        return None
    lam = mu = None
    for u in range(n):
        ru = g.rows[u]
        for v in range(u + 1, n):
            c = (ru & g.rows[v]).bit_count()
            if ru >> v & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    return None
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return None
    if lam is None or mu is None:
        return None
    return SrgParams(n, d, lam, mu)


def k_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques, each an ascending tuple; output is in lexicographic order."""
    if k < 1:
        return []
    out = []
    rows = g.rows

    def extend(clique: list[int], cand: int):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        if cand.bit_count() < k - len(clique):
            return
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            clique.append(v)
            # only candidates above v keep the enumeration lexicographic
            extend(clique, m & rows[v])
            clique.pop()

    extend([], (1 << g.n) - 1)
    return out


# -- generators ----------------------------------------------------------------

def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent iff disjoint."""
    verts = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2)
             if not set(verts[i]) & set(verts[j])]
    return Graph(10, edges)


def paley(q: int) -> Graph:
    """Paley graph on GF(q), q = 1 mod 4: x ~ y iff x - y is a nonzero square."""
    if q % 4 != 1:
        raise ValueError("paley(q) needs q = 1 mod 4")
    field = FiniteField(q)
    sq = field.squares()
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)
             if field.sub(a, b) in sq]
    return Graph(q, edges)


def rook(n: int) -> Graph:
    """n x n rook's graph: cells (r,c), adjacent iff same row or column."""
    edges = []
    for r1, c1 in itertools.product(range(n), repeat=2):
        for r2, c2 in itertools.product(range(n), repeat=2):
            if (r1, c1) < (r2, c2) and (r1 == r2) != (c1 == c2):
                edges.append((r1 * n + c1, r2 * n + c2))
    return Graph(n * n, edges)


def latin_square_graph(square) -> Graph:
    """Graph on the n^2 cells of a Latin square: adjacent iff same row,
    same column or same symbol.  Cell (r,c) gets index r*n + c."""
    n = len(square)
    symbols = sorted(square[0])
    for row in square:
        if sorted(row) != symbols:
            raise ValueError("not a Latin square: bad row")
    for c in range(n):
        if sorted(row[c] for row in square) != symbols:
            raise ValueError("not a Latin square: bad column")
    edges = []
    cells = [(r, c) for r in range(n) for c in range(n)]
    for i, (r1, c1) in enumerate(cells):
        for j in range(i + 1, n * n):
            r2, c2 = cells[j]
            if r1 == r2 or c1 == c2 or square[r1][c1] == square[r2][c2]:
                edges.append((i, j))
    return Graph(n * n, edges)


def shrikhande() -> Graph:
    """The Shrikhande graph: complement of the Latin-square graph of Z_4.

    srg(16,6,2,2), not isomorphic to rook(4).
    """
    table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    return latin_square_graph(table).complement()


def hoffman_singleton() -> Graph:
    """The Hoffman-Singleton graph, srg(50,7,0,1).

    Robertson's pentagon/pentagram model: pentagons P_0..P_4 (i,j ~ i,j+-1),
    pentagrams Q_0..Q_4 (i,j ~ i,j+-2), and P_i,j ~ Q_k,l iff l = i*k + j
    mod 5.
    """
    def P(i, j):
        return 5 * i + j

    def Q(k, l):
        return 25 + 5 * k + l

    edges = []
    for i in range(5):
        for j in range(5):
            edges.append((P(i, j), P(i, (j + 1) % 5)))
            edges.append((Q(i, j), Q(i, (j + 2) % 5)))
    for i in range(5):
        for j in range(5):
            for k in range(5):
                edges.append((P(i, j), Q(k, (i * k + j) % 5)))
    return Graph(50, set(tuple(sorted(e)) for e in edges))


def cayley_graph(group: Group, connection: list[int]) -> Graph:
    """Cayley graph of a group for a symmetric, identity-free connection set."""
    conn = set(connection)
    if group.identity in conn:
        raise ValueError("connection set contains the identity")
    if any(group.inv(c) not in conn for c in conn):
        raise ValueError("connection set is not symmetric")
    edges = [(a, group.mul(a, c)) for a in range(group.n) for c in conn]
    return Graph(group.n, set(tuple(sorted(e)) for e in edges))


# -- graph6 --------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise MalformedGraph6("graph too large for this graph6 writer")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise MalformedGraph6("character out of graph6 range")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field")
        if data[1] == 63:
            raise MalformedGraph6("graph too large for this graph6 reader")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data characters, got {len(body)}")
    bits = []
    for x in body:
        for s6 in range(5, -1, -1):
            bits.append(x >> s6 & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    """Read a file with one graph6 string per line."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(from_graph6(line))
    return out


# -- string specs ----------------------------------------------------------------

def make_graph(spec: str) -> Graph:
    """Build a graph from a spec string.

    Supported: petersen, hoffman_singleton, shrikhande, paley(q), rook(n),
    latin_square_cyclic(n) (Latin-square graph of Z_n), complement(spec),
    graph6(path) / graph6(path:i) for line i of a graph6 file.
    """
    spec = spec.strip()
    if "(" not in spec:
        name, args = spec, []
    else:
        if not spec.endswith(")"):
            raise ValueError(f"bad graph spec: {spec!r}")
        name, _, rest = spec.partition("(")
        args = [rest[:-1]]
    name = name.strip().replace("-", "_")
    if name == "petersen":
        return petersen()
    if name == "hoffman_singleton":
        return hoffman_singleton()
    if name == "shrikhande":
        return shrikhande()
    if name == "paley":
        return paley(int(args[0]))
    if name == "rook":
        return rook(int(args[0]))
    if name == "latin_square_cyclic":
        n = int(args[0])
        return latin_square_graph([[(i + j) % n for j in range(n)] for i in range(n)])
    if name == "complement":
        return make_graph(args[0]).complement()
    if name == "graph6":
        arg = args[0]
        if ":" in arg:
            path, _, idx = arg.rpartition(":")
            return read_graph6_file(path)[int(idx)]
        return read_graph6_file(arg)[0]
    raise ValueError(f"unknown graph spec: {spec!r}")
