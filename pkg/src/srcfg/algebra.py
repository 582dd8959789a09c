"""Finite fields, projective subspaces and finite groups given by Cayley tables.

Field elements are plain ints in [0, q).  For q = p^e the int encodes the
coefficient vector of a polynomial over Z_p in base p, i.e. the element
sum(c_i x^i) is stored as sum(c_i p^i).  The modulus is the monic irreducible
polynomial of degree e whose code (in the same encoding, leading coefficient
included) is smallest; reading coefficients from x^(e-1) down to x^0 this is
the lexicographically least choice.  For GF(4) that is x^2+x+1, for GF(8)
x^3+x+1, for GF(9) x^2+1.

Groups are index-based: elements are 0..n-1 and the whole structure is one
n x n Cayley table.  Construction verifies the table (exhaustively, including
associativity, for n <= 200).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class NotPrimePower(ValueError):
    pass


class DimensionOutOfRange(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class InvalidCayleyTable(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e and p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = q
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# -- polynomial helpers over Z_p (coefficient lists, low degree first) --------

def _poly_from_code(code: int, p: int) -> list[int]:
    coeffs = []
    while code:
        coeffs.append(code % p)
        code //= p
    return coeffs


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a mod b over Z_p; b must be monic-normalizable."""
    a = a[:]
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    e = len(poly) - 1
    for d in range(1, e // 2 + 1):
        for code in range(p ** d, 2 * p ** d):
            div = _poly_from_code(code, p)
            if not _poly_mod(poly, div, p):
                return False
    return True


class FiniteField:
    """GF(q) with int-coded elements; full add/mul tables for small q."""

    _TABLE_LIMIT = 512

    def __init__(self, q: int):
        p, e = prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            self.modulus_code = None
        else:
            for code in range(p ** e, 2 * p ** e):
                poly = _poly_from_code(code, p)
                if _is_irreducible(poly, p):
                    self.modulus_code = code
                    break
            self._modulus = _poly_from_code(self.modulus_code, p)
        self._add = None
        self._mul = None
        self._inv = None
        if q <= self._TABLE_LIMIT:
            self._build_tables()

    def _add_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return a * b % p
        pa = _poly_from_code(a, p)
        pb = _poly_from_code(b, p)
        prod = [0] * (len(pa) + len(pb) - 1) if pa and pb else []
        for i, ca in enumerate(pa):
            for j, cb in enumerate(pb):
                prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_mod(prod, self._modulus, p)
        code = 0
        for c in reversed(rem):
            code = code * p + c
        return code

    def _build_tables(self):
        q = self.q
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_raw(a, b)

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_raw(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        digits = _poly_from_code(a, self.p)
        code = 0
        for c in reversed(digits):
            code = code * self.p + (-c) % self.p
        return code

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in finite field")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, m: int) -> int:
        m %= self.q - 1 if a != 0 else 1
        out = 1
        base = a
        while m:
            if m & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            m >>= 1
        return out

    def squares(self) -> frozenset[int]:
        """Nonzero squares of the field."""
        return frozenset(self.mul(a, a) for a in range(1, self.q))

    def __repr__(self):
        return f"FiniteField({self.q})"


# -- projective subspaces -----------------------------------------------------

@dataclass(frozen=True, order=True)
class Subspace:
    """Subspace of PG(n, q), stored as the RREF basis of its vector space.

    `basis` has dim+1 rows of n+1 field elements each; RREF makes the
    representation canonical, so equality and ordering are structural.
    """

    n: int
    q: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis) - 1

    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis:
            for j, c in enumerate(row):
                if c:
                    out.append(j)
                    break
        return tuple(out)


def rref(field: FiniteField, rows: list[list[int]]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form over `field`; returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(inv, c) for c in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [field.sub(c, field.mul(f, d)) for c, d in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    reduced = tuple(tuple(row) for row in mat[:r])
    return reduced, tuple(pivots)


def span(field: FiniteField, n: int, vectors) -> Subspace:
    """Subspace of PG(n, q) spanned by the given (n+1)-vectors."""
    reduced, _ = rref(field, [list(v) for v in vectors])
    return Subspace(n=n, q=field.q, basis=reduced)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional vector subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def pg_subspaces(n: int, q: int, dim: int) -> list[Subspace]:
    """All dim-dimensional subspaces of PG(n, q), sorted by basis matrix.

    Enumerates RREF matrices directly: one per choice of pivot columns and
    free entries, so no dedup pass is needed.
    """
    if dim < 0 or dim > n:
        raise DimensionOutOfRange(f"dim {dim} not in [0, {n}]")
    field = FiniteField(q)
    nrows = dim + 1
    ncols = n + 1
    out = []
    for pivots in itertools.combinations(range(ncols), nrows):
        free = []
        for i in range(nrows):
            for j in range(pivots[i] + 1, ncols):
                if j not in pivots:
                    free.append((i, j))
        for values in itertools.product(range(q), repeat=len(free)):
            mat = [[0] * ncols for _ in range(nrows)]
            for i, pc in enumerate(pivots):
                mat[i][pc] = 1
            for (i, j), val in zip(free, values):
                mat[i][j] = val
            out.append(Subspace(n=n, q=q, basis=tuple(tuple(r) for r in mat)))
    out.sort()
    expected = gaussian_binomial(n + 1, dim + 1, q)
    assert len(out) == expected, (len(out), expected)
    return out


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff b is contained in a (as subspaces of the same PG(n, q))."""
    if (a.n, a.q) != (b.n, b.q):
        raise AmbientMismatch(f"PG({a.n},{a.q}) vs PG({b.n},{b.q})")
    if b.dim > a.dim:
        return False
    field = FiniteField(a.q)
    apivots = a.pivots()
    for row in b.basis:
        vec = list(row)
        for arow, pc in zip(a.basis, apivots):
            if vec[pc]:
                f = vec[pc]
                vec = [field.sub(c, field.mul(f, d)) for c, d in zip(vec, arow)]
        if any(vec):
            return False
    return True


# -- finite groups ------------------------------------------------------------

class Group:
    """Finite group on indices 0..n-1 defined by a Cayley table.

    table[a][b] is the product a*b.  `elements` may carry raw labels
    (permutation tuples, pairs, ...) and `names` display strings; both
    default to the indices themselves.  For n <= 200 construction checks
    the axioms exhaustively, associativity included; for larger tables only
    the Latin-square, identity and inverse properties are verified.
    """

    def __init__(self, table, *, elements=None, names=None, check=True):
        self.table = np.ascontiguousarray(table, dtype=np.int32)
        if self.table.ndim != 2 or self.table.shape[0] != self.table.shape[1]:
            raise InvalidCayleyTable("table must be square")
        n = int(self.table.shape[0])
        self.n = n
        if check:
            self._verify()
        ident = None
        rng = np.arange(n, dtype=np.int32)
        for i in range(n):
            if np.array_equal(self.table[i], rng) and np.array_equal(self.table[:, i], rng):
                ident = i
                break
        if ident is None:
            raise InvalidCayleyTable("no identity element")
        self.identity = ident
        inverses = np.full(n, -1, dtype=np.int32)
        for a in range(n):
            hits = np.nonzero(self.table[a] == ident)[0]
            if len(hits) != 1 or self.table[hits[0], a] != ident:
                raise InvalidCayleyTable(f"element {a} has no two-sided inverse")
            inverses[a] = hits[0]
        self.inverses = inverses
        self.elements = list(elements) if elements is not None else list(range(n))
        if len(self.elements) != n:
            raise InvalidCayleyTable("wrong number of element labels")
        self.names = list(names) if names is not None else [str(e) for e in self.elements]
        self._index = {el: i for i, el in enumerate(self.elements)}

    def _verify(self):
        T = self.table
        n = self.n
        if T.min() < 0 or T.max() >= n:
            raise InvalidCayleyTable("entries out of range")
        rng = np.arange(n, dtype=np.int32)
        if not (np.array_equal(np.sort(T, axis=1), np.tile(rng, (n, 1)))
                and np.array_equal(np.sort(T, axis=0), np.tile(rng[:, None], (1, n)))):
            raise InvalidCayleyTable("table is not a Latin square")
        if n <= 200:
            for a in range(n):
                # (a*b)*c vs a*(b*c) for all b, c at once
                if not np.array_equal(T[T[a]], T[a][T]):
                    raise InvalidCayleyTable(f"associativity fails at element {a}")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def index(self, element) -> int:
        """Index of a raw element label."""
        return self._index[element]

    def subset_indices(self, elements) -> tuple[int, ...]:
        return tuple(self._index[e] for e in elements)

    def element_order(self, a: int) -> int:
        k = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Group(n={self.n})"


# -- permutation helpers (composition is "left then right") -------------------

def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Composition p followed by q: (p*q)(x) = q(p(x))."""
    return tuple(q[x] for x in p)


def perm_from_cycles(n: int, *cycles) -> tuple[int, ...]:
    """Permutation of 0..n-1 from cycles given in 1-based notation."""
    img = list(range(n))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            img[a - 1] = b - 1
    return tuple(img)


def cyclic(n: int) -> Group:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(table, names=[str(i) for i in range(n)])


def symmetric(n: int) -> Group:
    """Symmetric group on n letters; elements are image tuples, sorted.

    Products compose left-to-right: (p*q)(x) = q(p(x)).
    """
    if not 1 <= n <= 7:
        raise ValueError("symmetric(n) supported for 1 <= n <= 7")
    elems = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[perm_compose(p, q)] for q in elems] for p in elems]
    return Group(table, elements=elems, names=[str(p) for p in elems])


_QUAT_AXIS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
}


def quaternion8() -> Group:
    """Quaternion group {+-1, +-i, +-j, +-k} with ij = k."""
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, a1 in elems:
        row = []
        for s2, a2 in elems:
            s, a = _QUAT_AXIS[(a1, a2)]
            row.append(index[(s * s1 * s2, a)])
        table.append(row)
    names = [("" if s > 0 else "-") + a for s, a in elems]
    return Group(table, elements=elems, names=names)


def direct_product(a: Group, b: Group) -> Group:
    na, nb = a.n, b.n
    Ta = a.table.astype(np.int64)
    Tb = b.table.astype(np.int64)
    T = (Ta[:, None, :, None] * nb + Tb[None, :, None, :]).reshape(na * nb, na * nb)
    elems = [(x, y) for x in a.elements for y in b.elements]
    names = [f"({a.names[i]},{b.names[j]})" for i in range(na) for j in range(nb)]
    return Group(T, elements=elems, names=names)


def frobenius_31_5() -> Group:
    """Frobenius group of order 155: maps x -> a*x + b on Z_31, a in <2>.

    Elements are pairs (a, b); composition left-to-right, so
    (a1,b1)*(a2,b2) = (a2*a1, a2*b1 + b2) mod 31.
    """
    mults = sorted(pow(2, i, 31) for i in range(5))
    elems = [(a, b) for a in mults for b in range(31)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for a1, b1 in elems:
        row = []
        for a2, b2 in elems:
            row.append(index[(a2 * a1 % 31, (a2 * b1 + b2) % 31)])
        table.append(row)
    names = [f"x->{a}x+{b}" for a, b in elems]
    return Group(table, elements=elems, names=names)


def save_cayley_file(group: Group, path) -> None:
    """Write a group in the plain text Cayley table format."""
    lines = [str(group.n)]
    for row in group.table:
        lines.append(" ".join(str(int(x)) for x in row))
    for i, name in enumerate(group.names):
        lines.append(f"# {i} {name}")
    Path(path).write_text("\n".join(lines) + "\n")


def group_from_cayley_file(path) -> Group:
    """Read a Cayley table file: first line n, then n rows of n indices.

    Optional trailing lines `# i name` attach display names to elements.
    """
    text = Path(path).read_text()
    rows = []
    names = {}
    n = None
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 1)
            if len(parts) == 2 and parts[0].isdigit():
                names[int(parts[0])] = parts[1]
            continue
        if n is None:
            n = int(line)
            continue
        rows.append([int(tok) for tok in line.split()])
    if n is None or len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidCayleyTable(f"{path}: expected {n} rows of {n} entries")
    name_list = [names.get(i, str(i)) for i in range(n)]
    return Group(rows, names=name_list)


def _split_args(s: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            cur.append(ch)
    if cur:
        parts.append("".join(cur).strip())
    return parts


def make_group(spec: str) -> Group:
    """Build a group from a spec string.

    Supported: cyclic(n), symmetric(n), quaternion8, frobenius_31_5,
    direct_product(spec, spec), cayley_file(path).
    """
    spec = spec.strip()
    if "(" not in spec:
        name, args = spec, []
    else:
        if not spec.endswith(")"):
            raise ValueError(f"bad group spec: {spec!r}")
        name, _, rest = spec.partition("(")
        args = _split_args(rest[:-1])
    name = name.strip()
    if name == "cyclic":
        return cyclic(int(args[0]))
    if name == "symmetric":
        return symmetric(int(args[0]))
    if name == "quaternion8":
        return quaternion8()
    if name == "frobenius_31_5":
        return frobenius_31_5()
    if name == "direct_product":
        if len(args) != 2:
            raise ValueError("direct_product takes two group specs")
        return direct_product(make_group(args[0]), make_group(args[1]))
    if name == "cayley_file":
        return group_from_cayley_file(args[0])
    raise ValueError(f"unknown group spec: {spec!r}")
