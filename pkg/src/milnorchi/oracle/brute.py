"""Brute-force Springer theory for G(r,p,l) by explicit enumeration.

Nothing here reads degrees or codegrees: regular numbers, centralizer
orders, centers and induced characters are all counted over the group's
elements. The hot loops are in :mod:`milnorchi.oracle.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import numpy as np

from ..euler import NONREGULAR, RegularClass
from ..groups import Infinite, classify
from . import kernels
from .monomial import DEFAULT_CAP, CapExceeded, MonomialElement, RootOfUnity, group_order


class OracleMismatch(AssertionError):
    """A brute-force count disagrees with a closed form it must match."""


class ReducibleParameters(ValueError):
    pass


class MonomialGroup:
    """All elements of G(r,p,l) as parallel integer arrays.

    Row ``k`` of ``P``/``E`` is one element; ``keys`` encodes rows as
    integers and is sorted so ``index_of`` is a binary search.
    """

    def __init__(self, r: int, p: int, l: int, cap: int = DEFAULT_CAP):
        if r % p:
            raise ValueError(f"p={p} does not divide r={r}")
        order = group_order(r, p, l)
        if order > cap:
            raise CapExceeded(f"|G({r},{p},{l})| = {order} exceeds cap {cap}")
        if l**l * r**l >= 2**62:
            raise CapExceeded(f"G({r},{p},{l}) too large to key")
        self.r, self.p, self.l = r, p, l
        phases = np.array(np.meshgrid(*[np.arange(r)] * l, indexing="ij")).reshape(l, -1).T
        phases = phases[phases.sum(axis=1) % p == 0]
        perms = np.array(list(permutations(range(l))), dtype=np.int64).reshape(-1, l)
        P = np.repeat(perms, len(phases), axis=0)
        E = np.tile(phases, (len(perms), 1)).astype(np.int64)
        keys = kernels.encode(P, E, r)
        order_idx = np.argsort(keys, kind="stable")
        self.P = np.ascontiguousarray(P[order_idx])
        self.E = np.ascontiguousarray(E[order_idx])
        self.keys = keys[order_idx]
        if len(self.keys) != order or np.any(np.diff(self.keys) == 0):
            raise AssertionError(f"enumeration of G({r},{p},{l}) produced a bad element list")
        self.identity = self.index_of_keys(kernels.encode(np.arange(l)[None, :], np.zeros((1, l)), r))[0]

    @property
    def order(self):
        return len(self.keys)

    @property
    def coordinate_hyperplanes(self):
        return self.p < self.r

    @property
    def eigen_denominator(self):
        return self.r * math.lcm(*range(1, self.l + 1))

    def __len__(self):
        return self.order

    def element(self, k) -> MonomialElement:
        return MonomialElement(tuple(int(x) for x in self.P[k]), tuple(int(x) for x in self.E[k]), self.r)

    def index_of_keys(self, keys):
        keys = np.asarray(keys, dtype=np.int64)
        idx = np.searchsorted(self.keys, keys)
        idx = np.minimum(idx, len(self.keys) - 1)
        if not np.all(self.keys[idx] == keys):
            raise AssertionError("product left the group")
        return idx

    def index_of(self, g: MonomialElement) -> int:
        key = kernels.encode(np.array([g.perm]), np.array([g.exps]), self.r)
        return int(self.index_of_keys(key)[0])

    def mul(self, a, b) -> int:
        """Index of ``P[a] * P[b]``."""
        key = kernels.multiply_keys(self.P[a : a + 1], self.E[a : a + 1], self.r, self.P[b], self.E[b])
        return int(self.index_of_keys(key)[0])

    def power(self, a, k) -> int:
        g = self.element(a) ** k
        return self.index_of(g)

    def conjugates(self, h) -> np.ndarray:
        """Indices of ``k h k^-1`` for every ``k`` in element order."""
        return self.index_of_keys(kernels.conjugate_keys(self.P, self.E, self.r, self.P[h], self.E[h]))

    def centralizer_mask(self, h) -> np.ndarray:
        return kernels.commutes(self.P, self.E, self.r, self.P[h], self.E[h]).astype(bool)

    def closure(self, gens) -> np.ndarray:
        """Indices of the subgroup generated by ``gens`` (sorted)."""
        members = np.array([self.identity], dtype=np.int64)
        frontier = members
        while len(frontier):
            new = [
                self.index_of_keys(
                    kernels.multiply_keys(self.P[frontier], self.E[frontier], self.r, self.P[g], self.E[g])
                )
                for g in gens
            ]
            cand = np.unique(np.concatenate(new))
            frontier = np.setdiff1d(cand, members, assume_unique=True)
            members = np.union1d(members, frontier)
        return members

    def generators_of(self, subset) -> list:
        """A small generating set for the subgroup whose indices are ``subset``."""
        gens = []
        span = np.array([self.identity], dtype=np.int64)
        target = len(subset)
        for k in subset:
            if len(span) == target:
                break
            if np.searchsorted(span, k) < len(span) and span[np.searchsorted(span, k)] == k:
                continue
            gens.append(int(k))
            span = self.closure(gens)
        if len(span) != target:
            raise AssertionError("subset is not a subgroup")
        return gens

    def center_of(self, subset) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[subset] = True
        for g in self.generators_of(subset):
            mask &= self.centralizer_mask(g)
        return np.flatnonzero(mask)

    @lru_cache(maxsize=None)
    def spectra(self):
        vals, dims, reg, counts = kernels.regular_spectra(
            self.P, self.E, self.r, self.coordinate_hyperplanes, self.eigen_denominator
        )
        if self.r == 1:
            # drop the trivial summand of the permutation representation
            dims = dims - (vals == 0) * (np.arange(self.l)[None, :] < counts[:, None])
        return vals, dims, reg.astype(bool), counts

    def element_orders(self) -> np.ndarray:
        return np.array([self.element(k).order() for k in range(self.order)], dtype=np.int64)

    @lru_cache(maxsize=None)
    def regular_pairs(self):
        """List of ``(element index, eigenvalue numerator over D, dim)``."""
        vals, dims, reg, counts = self.spectra()
        out = []
        for k in range(self.order):
            for a in range(counts[k]):
                if reg[k, a]:
                    out.append((k, int(vals[k, a]), int(dims[k, a])))
        return out

    def eigen_order(self, val) -> int:
        D = self.eigen_denominator
        return D // math.gcd(D, val)

    @lru_cache(maxsize=None)
    def classes(self) -> np.ndarray:
        """Conjugacy class label of every element."""
        label = np.full(self.order, -1, dtype=np.int64)
        cur = 0
        for k in range(self.order):
            if label[k] >= 0:
                continue
            label[np.unique(self.conjugates(k))] = cur
            cur += 1
        return label


@lru_cache(maxsize=64)
def build_group(r, p, l, cap=DEFAULT_CAP) -> MonomialGroup:
    return MonomialGroup(r, p, l, cap)


def _check_irreducible(r, p, l):
    if not classify(Infinite(r, p, l))["irreducible"]:
        raise ReducibleParameters(f"G({r},{p},{l}) is reducible")


@dataclass
class BruteStructure:
    R: frozenset
    D: frozenset
    i: dict
    a: dict
    roundup: dict = field(default_factory=dict)


def brute_regular_structure(r, p, l, cap=DEFAULT_CAP) -> BruteStructure:
    _check_irreducible(r, p, l)
    G = build_group(r, p, l, cap)
    orders = G.element_orders()
    labels = G.classes()
    a, i_of, center_of_class = {}, {}, {}
    for k, val, dim in G.regular_pairs():
        d = G.eigen_order(val)
        if orders[k] != d:
            raise OracleMismatch(f"regular pair at element {k}: eigenvalue order {d} != element order {orders[k]}")
        if a.setdefault(d, dim) != dim:
            raise OracleMismatch(f"regular pairs of order {d} with eigenspace dims {a[d]} and {dim}")
        cls = int(labels[k])
        if cls not in center_of_class:
            cent = np.flatnonzero(G.centralizer_mask(k))
            center_of_class[cls] = (len(cent), len(G.center_of(cent)))
        size, zsize = center_of_class[cls]
        if i_of.setdefault(d, size) != size:
            raise OracleMismatch(f"centralizers of order-{d} regular elements differ: {i_of[d]} vs {size}")
    D = frozenset(z for _, z in center_of_class.values())
    R = frozenset(a)
    up = {d: min((k for k in D if k % d == 0), default=None) for d in R}
    return BruteStructure(R=R, D=D, i=i_of, a=a, roundup=up)


def _regular_rep(G: MonomialGroup, d: int, which: int = 0):
    """Element index whose eigenvalue exp(2 pi i/d) is regular."""
    want = (G.eigen_denominator // d) % G.eigen_denominator
    reps = sorted({k for k, val, _ in G.regular_pairs() if val == want})
    if not reps:
        raise ValueError(f"{d} is not a regular number of G({G.r},{G.p},{G.l})")
    return reps[which % len(reps)]


def brute_conjugacy_check(r, p, l, d: int, m: int, cap=DEFAULT_CAP) -> dict:
    """Are all cyclic subgroups of G x C_m generated by regular d-pairs
    conjugate, and what is the normalizer order of one of them?"""
    if m % d:
        raise ValueError(f"{d} does not divide m={m}")
    G = build_group(r, p, l, cap)
    Dn = G.eigen_denominator
    pairs = [(k, val) for k, val, _ in G.regular_pairs() if G.eigen_order(val) == d]
    if not pairs:
        raise ValueError(f"{d} is not a regular number of G({r},{p},{l})")
    # canonical generator of <(g, xi)>: the power whose C_m part is exp(2 pi i/d)
    canon = set()
    for k, val in pairs:
        t = val // (Dn // d)
        canon.add(G.power(k, pow(t, -1, d)) if d > 1 else k)
    rep = min(canon)
    orbit = set(np.unique(G.conjugates(rep)).tolist())
    conjugate = orbit == canon
    # N_Gamma(<(g, zeta)>): (h, beta) normalizes iff (h g h^-1, zeta) lies in the subgroup
    K = {(G.power(rep, j), j * (m // d) % m) for j in range(d)}
    if len(K) != d:
        raise OracleMismatch(f"regular pair of order {d} generates a subgroup of order {len(K)}")
    conj = G.conjugates(rep)
    count = sum(1 for x in conj.tolist() if (x, m // d % m) in K)
    return {"conjugate": conjugate, "normalizer_order": count * m}


def _pair_for_class(G: MonomialGroup, c, m: int, which: int = 0):
    """A representative ``(element index, C_m exponent)`` of a class."""
    Dn = G.eigen_denominator
    if c == NONREGULAR:
        regular = {(k, val) for k, val, _ in G.regular_pairs()}
        for k in range(G.order):
            for t in range(m):
                val = Fraction(t, m) * Dn
                if val.denominator != 1 or (k, int(val)) not in regular:
                    return k, t
        raise ValueError("every pair is regular")
    if isinstance(c, int):
        c = RegularClass(c)
    dp = c.d_prime
    if m % dp:
        raise ValueError(f"{dp} does not divide m={m}")
    reps = sorted((k, val) for k, val, _ in G.regular_pairs() if G.eigen_order(val) == dp)
    if not reps:
        raise ValueError(f"{dp} is not a regular number")
    k, val = reps[which % len(reps)]
    # eigenvalue val/Dn as an m-th root of unity
    return k, Fraction(val, Dn) * m


def brute_induced_character(r, p, l, d: int, m: int, c, cap=DEFAULT_CAP, which: int = 0) -> int:
    """Value of the permutation character induced from a regular d-pair's
    cyclic subgroup, by summing over all of G x C_m."""
    if m % d:
        raise ValueError(f"{d} does not divide m={m}")
    G = build_group(r, p, l, cap)
    g = _regular_rep(G, d)
    K = {(G.power(g, j), j * (m // d) % m) for j in range(d)}
    h, t = _pair_for_class(G, c, m, which)
    t = int(t)
    # y = (k, beta): y x y^-1 = (k h k^-1, xi); beta ranges freely over C_m
    hits = sum(1 for x in G.conjugates(h).tolist() if (x, t) in K)
    total = Fraction(hits * m, len(K))
    if total.denominator != 1:
        raise OracleMismatch(f"induced character value {total} is not an integer")
    value = int(total)
    if c == NONREGULAR:
        expected = 0
    else:
        dp = c.d_prime if isinstance(c, RegularClass) else int(c)
        expected = (m // d) * int(G.centralizer_mask(h).sum()) if d % dp == 0 else 0
    if value != expected:
        raise OracleMismatch(f"I_{d} at class {c}: brute sum {value} != closed form {expected}")
    return value
