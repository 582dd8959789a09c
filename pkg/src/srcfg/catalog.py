"""Catalog of known strong deficient difference sets.

Each entry packages a concrete group, the subset (as element indices), the
parameters of its development, and the expected automorphism group order
and self-duality of the development.  These are frozen reference values;
the test suite recomputes all of them from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (FiniteField, Group, cyclic, direct_product,
                      frobenius_31_5, perm_from_cycles, quaternion8,
                      symmetric)
from .incidence import SrcParams


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group_name: str
    group: Group
    subset: tuple[int, ...]
    params: SrcParams
    aut_order: int
    self_dual: bool


def z13_entry() -> CatalogEntry:
    """The unique cyclic example: {7, 8, 11} in Z13, fixed by the
    multiplier 3."""
    g = cyclic(13)
    return CatalogEntry(
        name="z13",
        group_name="cyclic(13)",
        group=g,
        subset=g.subset_indices([7, 8, 11]),
        params=SrcParams(13, 3, 2, 3),
        aut_order=39,
        self_dual=True,
    )


def z4_s4_entry() -> CatalogEntry:
    """A (96_5;4,4) example in Z4 x S4; the development is self-dual with
    automorphism group of order 11520."""
    g = direct_product(cyclic(4), symmetric(4))
    cyc = lambda *cycles: perm_from_cycles(4, *cycles)
    subset = g.subset_indices([
        (0, cyc()),
        (1, cyc((1, 4), (2, 3))),
        (1, cyc((1, 3, 4, 2))),
        (1, cyc((1, 4, 3))),
        (2, cyc((1, 2, 4))),
    ])
    return CatalogEntry(
        name="z4_s4",
        group_name="direct_product(cyclic(4),symmetric(4))",
        group=g,
        subset=subset,
        params=SrcParams(96, 5, 4, 4),
        aut_order=11520,
        self_dual=True,
    )


def s5_entry() -> CatalogEntry:
    """A (120_8;28,24) example in S5; the development is self-dual with
    automorphism group A8 of order 20160."""
    g = symmetric(5)
    cyc = lambda *cycles: perm_from_cycles(5, *cycles)
    subset = g.subset_indices([
        cyc(),
        cyc((1, 2, 5, 3, 4)),
        cyc((1, 3, 4, 2, 5)),
        cyc((1, 5, 3, 2, 4)),
        cyc((1, 4), (2, 3, 5)),
        cyc((1, 4, 5, 2)),
        cyc((1, 2, 4)),
        cyc((1, 2, 5)),
    ])
    return CatalogEntry(
        name="s5",
        group_name="symmetric(5)",
        group=g,
        subset=subset,
        params=SrcParams(120, 8, 28, 24),
        aut_order=20160,
        self_dual=True,
    )


def frobenius155_entry() -> CatalogEntry:
    """A (155_7;17,9) example in the Frobenius group Z31:Z5 generated by
    f: x -> x+1 and g: x -> 2x.  The subset is given by the words
    {id, f^12 g^4, f^15 g, f^18, f^20 g^2, f^26 g^3, f^30}, multiplied out
    left to right.  The development realizes the semipartial geometry of
    lines versus planes of the projective 4-space over GF(2)."""
    g = frobenius_31_5()
    f_idx = g.index((1, 1))
    g_idx = g.index((2, 0))

    def word(i: int, j: int) -> int:
        x = g.identity
        for _ in range(i):
            x = g.mul(x, f_idx)
        for _ in range(j):
            x = g.mul(x, g_idx)
        return x

    subset = tuple(sorted(word(i, j) for i, j in
                          [(0, 0), (12, 4), (15, 1), (18, 0),
                           (20, 2), (26, 3), (30, 0)]))
    return CatalogEntry(
        name="frobenius155",
        group_name="frobenius_31_5",
        group=g,
        subset=subset,
        params=SrcParams(155, 7, 17, 9),
        aut_order=9999360,
        self_dual=True,
    )


def _q8_pair(group: Group, a: str, b: str) -> tuple:
    def parse(s: str):
        if s.startswith("-"):
            return (-1, s[1:])
        return (1, s)
    return (parse(a), parse(b))


def _q8q8_entry(name: str, labels: list[tuple[str, str]]) -> CatalogEntry:
    g = direct_product(quaternion8(), quaternion8())
    subset = g.subset_indices([_q8_pair(g, a, b) for a, b in labels])
    return CatalogEntry(
        name=name,
        group_name="direct_product(quaternion8,quaternion8)",
        group=g,
        subset=subset,
        params=SrcParams(64, 7, 26, 30),
        aut_order=768,
        self_dual=False,
    )


def q8q8_hall_entry() -> CatalogEntry:
    """A (64_7;26,30) example in Q8 x Q8 whose development is the triangle
    removal configuration of the Hall plane of order 9."""
    return _q8q8_entry("q8q8_hall", [
        ("1", "1"), ("i", "-k"), ("j", "k"), ("k", "-j"),
        ("-i", "j"), ("-j", "i"), ("-k", "-i"),
    ])


def q8q8_hall_dual_entry() -> CatalogEntry:
    """The companion (64_7;26,30) example in Q8 x Q8; its development is
    the dual of the Hall plane configuration."""
    return _q8q8_entry("q8q8_hall_dual", [
        ("1", "1"), ("i", "-k"), ("j", "j"), ("k", "-j"),
        ("-i", "-i"), ("-j", "i"), ("-k", "k"),
    ])


def published_entries() -> list[CatalogEntry]:
    """All cataloged examples, smallest development first."""
    return [
        z13_entry(),
        q8q8_hall_entry(),
        q8q8_hall_dual_entry(),
        z4_s4_entry(),
        s5_entry(),
        frobenius155_entry(),
    ]


def entry_by_name(name: str) -> CatalogEntry:
    for e in published_entries():
        if e.name == name:
            return e
    raise KeyError(name)


def grid_sdds(q: int) -> tuple[Group, tuple[int, ...], SrcParams]:
    """The SDDS {(x, x+1) : x in F_q^*, x != -1} in F_q^* x F_q^*.

    Its development is the triangle removal configuration of the classical
    projective plane of order q with two removed points on a common line
    and parameters ((q-1)^2_(q-2); (q-4)^2+1, (q-3)(q-4)).  Requires q >= 5.
    """
    field = FiniteField(q)
    gen = None
    for a in range(2, q):
        x, order = a, 1
        while x != 1:
            x = field.mul(x, a)
            order += 1
        if order == q - 1:
            gen = a
            break
    if gen is None:
        raise ValueError(f"no multiplicative generator found for q={q}")
    log = {}
    x, e = 1, 0
    while e < q - 1:
        log[x] = e
        x = field.mul(x, gen)
        e += 1
    group = direct_product(cyclic(q - 1), cyclic(q - 1))
    subset = []
    minus_one = field.neg(1)
    for t in range(1, q):
        if t == minus_one:
            continue
        tp1 = field.add(t, 1)
        subset.append(group.index((log[t], log[tp1])))
    params = SrcParams((q - 1) ** 2, q - 2, (q - 4) ** 2 + 1, (q - 3) * (q - 4))
    return group, tuple(sorted(subset)), params
