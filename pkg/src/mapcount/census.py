"""
Brute-force map counts by enumerating every perfect matching of darts.

Darts are numbered from 0.  Vertex ``v`` owns darts ``2 nu v .. 2 nu v + 2 nu - 1``
in counter-clockwise order; for the two-legged family the last two darts are
the legs.  Faces are the cycles of ``phi = sigma o alpha``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coefficients import Family

DEFAULT_MAX_DARTS = 16
# 17!! ~ 3.4e7 matchings, several minutes in pure Python
HARD_MAX_DARTS = 18


class InvalidMatchingError(ValueError):
    pass


class CensusLimitError(ValueError):
    pass


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class DartSystem:
    nu: int
    j: int
    family: Family
    rotation: tuple[int, ...]
    vertex_of: tuple[int, ...]

    @classmethod
    def build(cls, nu: int, j: int, family: Family | str,
              order: Sequence[int] | None = None) -> "DartSystem":
        """Standard labelling; ``order`` puts vertex ``k``'s darts in block ``order[k]``."""
        family = Family.parse(family) if isinstance(family, str) else family
        if nu < 1 or j < 0:
            raise ValueError("need nu >= 1 and j >= 0")
        if family is Family.REGULAR and j == 0:
            raise ValueError("regular family needs at least one vertex")
        order = list(range(j)) if order is None else list(order)
        if sorted(order) != list(range(j)):
            raise ValueError("order must be a permutation of the vertices")
        val = 2 * nu
        n = val * j + (2 if family is Family.TWO_LEGGED else 0)
        rotation = list(range(n))
        vertex_of = [0] * n
        for v in range(j):
            start = val * order[v]
            for k in range(val):
                d = start + k
                rotation[d] = start + (k + 1) % val
                vertex_of[d] = v
        if family is Family.TWO_LEGGED:
            vertex_of[n - 2], vertex_of[n - 1] = j, j + 1
        return cls(nu, j, family, tuple(rotation), tuple(vertex_of))

    @property
    def dart_count(self) -> int:
        return len(self.rotation)

    @property
    def vertex_count(self) -> int:
        return self.j + (2 if self.family is Family.TWO_LEGGED else 0)

    @property
    def matching_count(self) -> int:
        return double_factorial(self.dart_count - 1)


@dataclass(frozen=True)
class MatchingCensus:
    by_genus: dict[int, int]
    disconnected: int
    total: int = field(default=0)

    def __add__(self, other: "MatchingCensus") -> "MatchingCensus":
        merged = dict(self.by_genus)
        for g, k in other.by_genus.items():
            merged[g] = merged.get(g, 0) + k
        return MatchingCensus(dict(sorted(merged.items())), self.disconnected + other.disconnected,
                              self.total + other.total)


def involution(pairs: Iterable[tuple[int, int]], n: int) -> list[int]:
    alpha = [-1] * n
    for a, b in pairs:
        for x in (a, b):
            if not 0 <= x < n or alpha[x] != -1:
                raise InvalidMatchingError(f"dart {x} out of range or paired twice")
        alpha[a], alpha[b] = b, a
    return alpha


def genus_of(system: DartSystem, alpha: Sequence[int]) -> tuple[int, bool]:
    """Genus and connectivity of the map glued by ``alpha``.

    For a disconnected gluing the returned genus is the sum over components.
    """
    n = system.dart_count
    if len(alpha) != n:
        raise InvalidMatchingError(f"matching has {len(alpha)} entries for {n} darts")
    for d, e in enumerate(alpha):
        if not 0 <= e < n or e == d or alpha[e] != d:
            raise InvalidMatchingError(f"not a fixed-point-free involution at dart {d}")
    sigma = system.rotation
    seen = [False] * n
    faces = 0
    for d in range(n):
        if not seen[d]:
            faces += 1
            x = d
            while not seen[x]:
                seen[x] = True
                x = sigma[alpha[x]]
    parent = list(range(system.vertex_count))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    vert = system.vertex_of
    for d in range(n):
        parent[find(vert[d])] = find(vert[alpha[d]])
    components = sum(1 for v in range(len(parent)) if find(v) == v)
    chi = system.vertex_count - n // 2 + faces
    return (2 * components - chi) // 2, components == 1


def _sweep(system: DartSystem, first_partner: int | None = None) -> MatchingCensus:
    # phi = sigma o alpha is written as pairs are chosen; vertex components are
    # carried down the recursion as a label list, copied only on merges.
    n = system.dart_count
    sigma = system.rotation
    vert = system.vertex_of
    nv = system.vertex_count
    half = n // 2
    phi = [0] * n
    faces_tally = [0] * (n + 1)
    disconnected = 0
    darts = range(n)

    def rec(free, comp):
        nonlocal disconnected
        a = free[0]
        sa = sigma[a]
        va = vert[a]
        if len(free) == 2:
            b = free[1]
            phi[a] = sigma[b]
            phi[b] = sa
            ca, cb = comp[va], comp[vert[b]]
            if ca != cb:
                comp = [ca if c == cb else c for c in comp]
            if comp.count(comp[0]) != nv:
                disconnected += 1
                return
            seen = [False] * n
            f = 0
            for d in darts:
                if not seen[d]:
                    f += 1
                    x = d
                    while not seen[x]:
                        seen[x] = True
                        x = phi[x]
            faces_tally[f] += 1
            return
        choices = range(1, len(free)) if first_partner is None or len(free) != n \
            else [free.index(first_partner)]
        for i in choices:
            b = free[i]
            phi[a] = sigma[b]
            phi[b] = sa
            ca, cb = comp[va], comp[vert[b]]
            rec(free[1:i] + free[i + 1:], comp if ca == cb else [ca if c == cb else c for c in comp])

    if n:
        rec(list(darts), list(range(nv)))
    by_genus = {}
    for f, k in enumerate(faces_tally):
        if k:
            g, r = divmod(2 - nv + half - f, 2)
            if r or g < 0:
                raise ArithmeticError(f"Euler characteristic inconsistent with {f} faces")
            by_genus[g] = k
    total = sum(faces_tally) + disconnected
    return MatchingCensus(dict(sorted(by_genus.items())), disconnected, total)


def census_system(system: DartSystem, max_darts: int = DEFAULT_MAX_DARTS,
                  workers: int = 1) -> MatchingCensus:
    n = system.dart_count
    if max_darts > HARD_MAX_DARTS:
        raise CensusLimitError(f"max_darts {max_darts} exceeds hard cap {HARD_MAX_DARTS}")
    if n > max_darts:
        raise CensusLimitError(
            f"{n} darts exceeds limit {max_darts}: would enumerate {n - 1}!! = "
            f"{system.matching_count} matchings")
    if workers <= 1 or n < 4:
        result = _sweep(system)
    else:
        partners = range(1, n)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep, [system] * len(partners), partners))
        result = MatchingCensus({}, 0, 0)
        for part in parts:
            result = result + part
    if result.total != system.matching_count:
        raise ArithmeticError(f"enumerated {result.total} matchings, expected {system.matching_count}")
    return result


def census(nu: int, j: int, family: Family | str, max_darts: int = DEFAULT_MAX_DARTS,
           workers: int = 1) -> MatchingCensus:
    return census_system(DartSystem.build(nu, j, family), max_darts, workers)
