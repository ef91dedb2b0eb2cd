"""Exact monomial matrices for G(r,p,l) and their eigenspaces.

An element maps ``e_j`` to ``zeta_r**exps[j] * e_{perm[j]}``. Eigenvalues
and eigenvector entries are roots of unity, kept as fractions mod 1, so
every regularity decision is an equality test between fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

DEFAULT_CAP = 20000


class CapExceeded(ValueError):
    pass


class NotAnEigenvalue(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """``exp(2 pi i * value)`` with ``value`` a reduced fraction in [0, 1)."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    @classmethod
    def of(cls, a, n=1):
        return cls(Fraction(a, n))

    @property
    def order(self):
        return self.value.denominator

    def __mul__(self, other):
        return RootOfUnity(self.value + other.value)

    def __truediv__(self, other):
        return RootOfUnity(self.value - other.value)

    def __pow__(self, k):
        return RootOfUnity(self.value * k)

    def inverse(self):
        return RootOfUnity(-self.value)

    def __repr__(self):
        return f"RootOfUnity({self.value})"


ONE = RootOfUnity(Fraction(0))


@dataclass(frozen=True)
class MonomialElement:
    perm: tuple
    exps: tuple
    r: int

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"not a permutation: {self.perm}")
        object.__setattr__(self, "exps", tuple(e % self.r for e in self.exps))

    @classmethod
    def identity(cls, l, r):
        return cls(tuple(range(l)), (0,) * l, r)

    @property
    def rank(self):
        return len(self.perm)

    def __mul__(self, other):
        """Composition: ``(self * other)(v) = self(other(v))``."""
        if self.r != other.r or self.rank != other.rank:
            raise ValueError("elements of different groups")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.rank))
        exps = tuple(other.exps[j] + self.exps[other.perm[j]] for j in range(self.rank))
        return MonomialElement(perm, exps, self.r)

    def inverse(self):
        l = self.rank
        perm = [0] * l
        exps = [0] * l
        for j in range(l):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = -self.exps[j]
        return MonomialElement(tuple(perm), tuple(exps), self.r)

    def __pow__(self, k):
        result = MonomialElement.identity(self.rank, self.r)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate_by(self, h):
        return h * self * h.inverse()

    def order(self):
        # lcm over cycles of cycle length times order of the cycle's phase
        out = 1
        for cyc in cycles(self.perm):
            s = sum(self.exps[j] for j in cyc) % self.r
            out = math.lcm(out, len(cyc) * (self.r // math.gcd(self.r, s)))
        return out

    def in_group(self, p):
        return sum(self.exps) % p == 0

    def apply(self, v):
        """Image of a vector given as a dict ``coord -> RootOfUnity``."""
        zeta = RootOfUnity.of(1, self.r)
        return {self.perm[j]: x * zeta ** self.exps[j] for j, x in v.items()}


def cycles(perm):
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class EigenspaceDescriptor:
    """Basis of V(g, eigenvalue): one vector per cycle carrying it.

    Each vector is ``(support, entries)`` with ``entries[k]`` the
    coordinate at ``support[k]``.
    """

    eigenvalue: RootOfUnity
    cycle_vectors: tuple

    @property
    def dimension(self):
        return len(self.cycle_vectors)

    def vectors(self):
        return [dict(zip(sup, ent)) for sup, ent in self.cycle_vectors]


def eigen_spectrum(g: MonomialElement) -> dict:
    """Map each eigenvalue of ``g`` on C^l to its eigenspace.

    Dimensions sum to the rank.
    """
    zeta = RootOfUnity.of(1, g.r)
    found = {}
    for cyc in cycles(g.perm):
        c = len(cyc)
        s = sum(g.exps[j] for j in cyc)
        for t in range(c):
            lam = RootOfUnity((Fraction(s, g.r) + t) / c)
            # v_{perm(j)} = zeta^{exps[j]} v_j / lam, starting from v = 1
            entries = [ONE]
            for j in cyc[:-1]:
                entries.append(entries[-1] * zeta ** g.exps[j] / lam)
            found.setdefault(lam, []).append((cyc, tuple(entries)))
    return {lam: EigenspaceDescriptor(lam, tuple(vecs)) for lam, vecs in sorted(found.items())}


def eigenvalue_multiset(g: MonomialElement) -> dict:
    return {lam: desc.dimension for lam, desc in eigen_spectrum(g).items()}


# --- reflecting hyperplanes -------------------------------------------------


@dataclass(frozen=True)
class Hyperplane:
    """Kernel of ``x_i`` (``j is None``) or of ``x_i - zeta * x_j``."""

    i: int
    j: int | None = None
    zeta: RootOfUnity = ONE

    def vanishes_on(self, v: dict) -> bool:
        xi = v.get(self.i)
        if self.j is None:
            return xi is None
        xj = v.get(self.j)
        if xi is None or xj is None:
            return xi is None and xj is None
        return xi == self.zeta * xj


def hyperplanes(r: int, p: int, l: int):
    out = []
    if p < r:
        out.extend(Hyperplane(i) for i in range(l))
    for i in range(l):
        for j in range(i + 1, l):
            out.extend(Hyperplane(i, j, RootOfUnity.of(k, r)) for k in range(r))
    return out


def is_regular_pair(g: MonomialElement, lam: RootOfUnity, p: int) -> bool:
    """Whether V(g, lam) lies in no reflecting hyperplane of G(r,p,l)."""
    spectrum = eigen_spectrum(g)
    if lam not in spectrum:
        raise NotAnEigenvalue(f"{lam} is not an eigenvalue of {g}")
    basis = spectrum[lam].vectors()
    for H in hyperplanes(g.r, p, g.rank):
        if all(H.vanishes_on(v) for v in basis):
            return False
    return True


def group_order(r, p, l):
    return r**l * math.factorial(l) // p


def enumerate_group(r: int, p: int, l: int, cap: int = DEFAULT_CAP):
    """All elements of G(r,p,l) as :class:`MonomialElement`."""
    if r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    order = group_order(r, p, l)
    if order > cap:
        raise CapExceeded(f"|G({r},{p},{l})| = {order} exceeds cap {cap}")
    phases = [e for e in product(range(r), repeat=l) if sum(e) % p == 0]
    return [MonomialElement(perm, e, r) for perm in permutations(range(l)) for e in phases]
