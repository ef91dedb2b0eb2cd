"""Regular numbers, the maximal poset and local centralizer data.

Everything here is a function of a :class:`~milnorchi.groups.DegreeProfile`.
A number ``d`` is regular when as many degrees as codegrees are divisible
by ``d`` (the zero codegree counts as divisible by everything).
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache, reduce

from .groups import (
    DegreeProfile,
    Exceptional,
    GroupId,
    Infinite,
    ReducibleGroupError,
    classify,
    degree_profile,
    exceptional_table,
)


class NotRegularError(ValueError):
    pass


class IncomparableError(KeyError):
    pass


def _divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _count_divisible(values, d):
    return sum(1 for v in values if v % d == 0)


def regular_numbers(profile: DegreeProfile) -> frozenset:
    candidates = set()
    for deg in profile.degrees:
        candidates.update(_divisors(deg))
    return frozenset(
        d
        for d in candidates
        if _count_divisible(profile.degrees, d) == _count_divisible(profile.codegrees, d)
    )


@dataclass(frozen=True)
class LocalData:
    d: int
    sub_degrees: tuple
    sub_codegrees: tuple
    a: int
    i: int
    u: int

    @property
    def profile(self):
        return DegreeProfile(self.sub_degrees, self.sub_codegrees)


def local_data(profile: DegreeProfile, d: int) -> LocalData:
    if d not in regular_numbers(profile):
        raise NotRegularError(f"{d} is not a regular number of {profile}")
    subd = tuple(x for x in profile.degrees if x % d == 0)
    subc = tuple(c for c in profile.codegrees if c % d == 0)
    u = math.prod(-c for c in subc if c != 0)
    return LocalData(d, subd, subc, len(subd), math.prod(subd), u)


def roundup(profile: DegreeProfile, d: int) -> int:
    """Least multiple of ``d`` in the maximal poset."""
    return reduce(math.gcd, local_data(profile, d).sub_degrees)


def maximal_poset(profile: DegreeProfile) -> frozenset:
    return frozenset(roundup(profile, d) for d in regular_numbers(profile))


class PosetMobius(Mapping):
    """Mobius function of a finite set of integers ordered by divisibility.

    Indexed by pairs ``(d, k)`` with ``d | k``; incomparable pairs raise
    :class:`IncomparableError`.
    """

    def __init__(self, elements):
        self.elements = tuple(sorted(elements))
        self._mu = {}
        for d in self.elements:
            above = [k for k in self.elements if k % d == 0]
            for k in above:
                if k == d:
                    self._mu[d, k] = 1
                else:
                    self._mu[d, k] = -sum(
                        self._mu[d, j] for j in above if j != k and k % j == 0
                    )

    def __getitem__(self, pair):
        try:
            return self._mu[pair]
        except KeyError:
            d, k = pair
            raise IncomparableError(f"{d} and {k} are not comparable in the poset") from None

    def __iter__(self):
        return iter(self._mu)

    def __len__(self):
        return len(self._mu)


def poset_mobius(elements) -> PosetMobius:
    return PosetMobius(elements)


def hasse_edges(elements):
    """Covering pairs ``(d, k)``, ``d | k``, with nothing strictly between."""
    elems = sorted(elements)
    edges = []
    for d in elems:
        for k in elems:
            if k == d or k % d:
                continue
            if not any(j not in (d, k) and j % d == 0 and k % j == 0 for j in elems):
                edges.append((d, k))
    return edges


@dataclass(frozen=True)
class RegularData:
    profile: DegreeProfile
    R: frozenset
    D: frozenset
    roundup: dict = field(repr=False)
    i: dict = field(repr=False)
    u: dict = field(repr=False)
    a: dict = field(repr=False)
    mu: PosetMobius = field(repr=False)


@lru_cache(maxsize=4096)
def regular_data(profile: DegreeProfile) -> RegularData:
    R = regular_numbers(profile)
    loc = {d: local_data(profile, d) for d in R}
    up = {d: reduce(math.gcd, loc[d].sub_degrees) for d in R}
    D = frozenset(up.values())
    return RegularData(
        profile=profile,
        R=R,
        D=D,
        roundup=up,
        i={d: loc[d].i for d in D},
        u={d: loc[d].u for d in D},
        a={d: loc[d].a for d in R},
        mu=PosetMobius(D),
    )


# --- centralizer identification ---------------------------------------------


@dataclass(frozen=True)
class Centralizer:
    """The reflection group G(d) for ``d`` in the maximal poset.

    ``group`` is ``None`` when the profile matches no classification entry
    or several non-identical ones; ``candidates`` then lists the matches.
    """

    d: int
    profile: DegreeProfile
    group: GroupId | None
    candidates: tuple = ()

    @property
    def identified(self):
        return self.group is not None


def _infinite_centralizer(g: Infinite, d: int) -> Infinite:
    r, p, l, q = g.r, g.p, g.l, g.q
    if q > 1:
        t = math.gcd(p, l)
        k = d // q
        return Infinite(k * r // t, p, l * t // k)
    z = math.gcd(r, l)
    if (l - 1) * r % d == 0 and d % r == 0 and d != z:
        k = d // r
        return Infinite(k * r, 1, (l - 1) // k)
    return Infinite(d * r // z, r, l * z // d)


def profile_candidates(profile: DegreeProfile):
    """Classification entries whose (degrees, codegrees) equal ``profile``."""
    if profile.rank == 1:
        # every rank-1 reflection group is cyclic of order = its degree
        return (Infinite(profile.degrees[0], 1, 1),)
    found = [Exceptional(n) for n, prof in sorted(exceptional_table().items()) if prof == profile]
    top = max(profile.degrees)
    for r in range(1, top + 1):
        for p in (x for x in range(1, r + 1) if r % x == 0):
            cand = Infinite(r, p, profile.rank + 1 if r == 1 else profile.rank)
            if classify(cand)["irreducible"] and degree_profile(cand) == profile:
                found.append(cand)
    return tuple(found)


def identify_centralizer(g: GroupId, d: int) -> Centralizer:
    prof = degree_profile(g)
    data = regular_data(prof)
    if d not in data.D:
        raise NotRegularError(f"{d} is not in the maximal poset of {g}")
    sub = local_data(prof, d).profile
    if isinstance(g, Infinite):
        h = _infinite_centralizer(g, d)
        if degree_profile(h) != sub:
            raise AssertionError(f"centralizer {h} of {g} at {d} has wrong profile")
        return Centralizer(d, sub, h, (h,))
    cands = profile_candidates(sub)
    return Centralizer(d, sub, cands[0] if len(cands) == 1 else None, cands)


__all__ = [
    "Centralizer",
    "IncomparableError",
    "LocalData",
    "NotRegularError",
    "PosetMobius",
    "ReducibleGroupError",
    "RegularData",
    "hasse_edges",
    "identify_centralizer",
    "local_data",
    "maximal_poset",
    "poset_mobius",
    "profile_candidates",
    "regular_data",
    "regular_numbers",
    "roundup",
]
