"""Deficient difference sets with strongly regular developments.

A subset D of a finite group is deficient when all nonidentity left
differences a^-1 b (a, b in D distinct) are pairwise distinct.  Writing
Delta(D) for the difference set and n(x) = |Delta ∩ x Delta|, D is a strong
deficient difference set (SDDS) for (v_k; lam, mu) when n is constantly lam
on Delta and constantly mu off Delta.  The development {gD : g in G} is then
a strongly regular configuration with those parameters and the point graph
is the Cayley graph of Delta.

Elements are group indices throughout (see algebra.Group).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import Group

__all__ = ["DifferenceProfile", "difference_profile", "sdds_check",
           "sdds_search"]


@dataclass(frozen=True)
class DifferenceProfile:
    """Difference structure of a subset: Delta, repetition flag, and the
    overlap counts n(x) indexed by group element (n at the identity is the
    degenerate value |Delta| and is ignored by the SDDS conditions)."""
    delta: frozenset[int]
    repeated: bool
    n: tuple[int, ...]


def difference_profile(group: Group, subset) -> DifferenceProfile:
    D = sorted(set(subset))
    T = group.table
    inv = group.inverses
    delta = set()
    repeated = False
    for a in D:
        ia = inv[a]
        for b in D:
            if a == b:
                continue
            d = int(T[ia, b])
            if d in delta:
                repeated = True
            delta.add(d)
    n = [0] * group.n
    for x in delta:
        ix = inv[x]
        for y in delta:
            n[int(T[y, ix])] += 1
    return DifferenceProfile(frozenset(delta), repeated, tuple(n))


def sdds_check(group: Group, subset) -> tuple[int, int] | None:
    """(lam, mu) if subset is an SDDS in group, else None."""
    D = sorted(set(subset))
    if len(D) < 2:
        return None
    prof = difference_profile(group, D)
    if prof.repeated:
        return None
    e = group.identity
    lam = mu = None
    for x in range(group.n):
        if x == e:
            continue
        if x in prof.delta:
            if lam is None:
                lam = prof.n[x]
            elif prof.n[x] != lam:
                return None
        else:
            if mu is None:
                mu = prof.n[x]
            elif prof.n[x] != mu:
                return None
    if lam is None or mu is None:
        return None
    return (lam, mu)


def _canonical_translate(group: Group, D: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least translate gD that contains the identity."""
    T = group.table
    inv = group.inverses
    best = None
    for t in D:
        it = inv[t]
        cand = tuple(sorted(int(T[it, d]) for d in D))
        if best is None or cand < best:
            best = cand
    return best


class _Backtracker:
    """Incremental SDDS search state for one worker.

    Elements are added in ascending index order.  The partial difference
    set and the overlap counts n(x) are maintained incrementally; a branch
    dies the moment a difference repeats or some n(x) exceeds its cap
    (lam if x is currently a difference, max(lam, mu) otherwise, since a
    non-difference may still join Delta later).
    """

    def __init__(self, group: Group, k: int, lam: int, mu: int,
                 need_identity: bool):
        self.group = group
        self.k = k
        self.lam = lam
        self.cap = max(lam, mu)
        self.mu = mu
        self.need_identity = need_identity
        self.v = group.n
        self.e = group.identity
        self.T = group.table
        self.inv = group.inverses
        self.in_delta = bytearray(self.v)
        self.nval = [0] * self.v
        self.delta: list[int] = []
        self.D: list[int] = []
        self.results: list[tuple[int, ...]] = []

    def try_add(self, x: int):
        """Extend D by x; return an undo log, or None on conflict."""
        T, inv, in_delta, nval = self.T, self.inv, self.in_delta, self.nval
        new = []
        ix = inv[x]
        for d in self.D:
            a = int(T[inv[d], x])
            b = int(T[ix, d])
            # a == b is an involution difference arising from both ordered
            # pairs (d, x) and (x, d): a repeat just like a collision.
            if in_delta[a] or in_delta[b] or a == b:
                for t in new:
                    in_delta[t] = 0
                return None
            new.append(a)
            new.append(b)
            in_delta[a] = in_delta[b] = 1
        bumped = []
        lam, cap = self.lam, self.cap

        def bump(y: int) -> bool:
            nval[y] += 1
            bumped.append(y)
            return nval[y] <= (lam if in_delta[y] else cap)

        ok = True
        for a in new:
            ia = inv[a]
            for b_ in self.delta:
                if not bump(int(T[a, inv[b_]])) or not bump(int(T[b_, ia])):
                    ok = False
                    break
            if not ok:
                break
            for b_ in new:
                if b_ != a and not bump(int(T[a, inv[b_]])):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            # joining Delta may tighten an existing count
            for a in new:
                if nval[a] > lam:
                    ok = False
                    break
        if not ok:
            for y in bumped:
                nval[y] -= 1
            for d in new:
                in_delta[d] = 0
            return None
        self.delta.extend(new)
        self.D.append(x)
        return (new, bumped)

    def undo(self, log):
        new, bumped = log
        self.D.pop()
        del self.delta[len(self.delta) - len(new):]
        for y in bumped:
            self.nval[y] -= 1
        for d in new:
            self.in_delta[d] = 0

    def _final_ok(self) -> bool:
        for x in range(self.v):
            if x == self.e:
                continue
            want = self.lam if self.in_delta[x] else self.mu
            if self.nval[x] != want:
                return False
        return True

    def candidate_range(self, start: int):
        """Valid next indices, honoring ascending order and, when the
        identity is required but not yet placed, stopping past it."""
        hi = self.v - (self.k - len(self.D)) + 1
        for x in range(start, hi):
            if self.need_identity and self.e not in self.D and x > self.e:
                return
            yield x

    def extend(self, start: int):
        if len(self.D) == self.k:
            if self._final_ok():
                self.results.append(tuple(self.D))
            return
        for x in self.candidate_range(start):
            log = self.try_add(x)
            if log is None:
                continue
            self.extend(x + 1)
            self.undo(log)

    def run_from(self, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
        for x in prefix:
            if self.try_add(x) is None:
                return []
        self.extend((prefix[-1] + 1) if prefix else 0)
        return self.results


def sdds_search(group: Group, k: int, lam: int, mu: int,
                normalization: str = "contains_identity",
                threads: int = 1) -> list[tuple[int, ...]]:
    """All SDDS of size k for (lam, mu) in the group.

    With normalization='contains_identity' (default) one representative per
    left-translate class is returned: the lexicographically least translate
    containing the identity.  With 'none' every SDDS subset is listed.
    Inconsistent (k, lam, mu) for the group order simply yield [].

    threads > 1 partitions the search forest over the first two chosen
    elements; workers keep private state and the merged output is sorted,
    so results are identical for every worker count.
    """
    if normalization not in ("contains_identity", "none"):
        raise ValueError(f"unknown normalization {normalization!r}")
    v = group.n
    K = k * (k - 1)
    if k < 2 or K > v - 1:
        return []
    if (v - 1 - K) * mu != K * (K - 1 - lam):
        return []
    need_identity = normalization == "contains_identity"

    def fresh() -> _Backtracker:
        return _Backtracker(group, k, lam, mu, need_identity)

    if threads <= 1 or k < 3:
        results = fresh().run_from(())
    else:
        prefixes = []
        probe = fresh()
        for x1 in probe.candidate_range(0):
            log1 = probe.try_add(x1)
            if log1 is None:
                continue
            for x2 in probe.candidate_range(x1 + 1):
                log2 = probe.try_add(x2)
                if log2 is None:
                    continue
                prefixes.append((x1, x2))
                probe.undo(log2)
            probe.undo(log1)

        def work(prefix):
            return fresh().run_from(prefix)

        results = []
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(work, prefixes):
                results.extend(part)
        results.sort()
    if need_identity:
        e = group.identity
        canon = sorted(set(_canonical_translate(group, r) for r in results
                           if e in r))
        return canon
    return sorted(results)
