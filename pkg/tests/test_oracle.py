import importlib
import math
import os
import subprocess
import sys
import random
from fractions import Fraction

import numpy as np
import pytest

from milnorchi.euler import NONREGULAR, RegularClass
from milnorchi.groups import Infinite
from milnorchi.oracle import _kernels_py, kernels
from milnorchi.oracle.brute import (
    ReducibleParameters,
    brute_conjugacy_check,
    brute_induced_character,
    brute_regular_structure,
    build_group,
)
from milnorchi.oracle.monomial import (
    ONE,
    CapExceeded,
    MonomialElement,
    NotAnEigenvalue,
    RootOfUnity,
    eigen_spectrum,
    enumerate_group,
    hyperplanes,
    is_regular_pair,
)
from milnorchi.oracle.verify import oracle_groups, report_json, report_text, verify_group

SMALL = [(1, 1, 4), (2, 1, 3), (3, 1, 2), (3, 3, 3), (4, 2, 3), (4, 4, 2), (6, 3, 2), (2, 2, 4), (5, 1, 1)]


def test_root_of_unity():
    z = RootOfUnity.of(1, 6)
    assert z**6 == ONE and z.order == 6
    assert z * z.inverse() == ONE
    assert RootOfUnity.of(7, 6) == z
    assert (RootOfUnity.of(1, 3) / RootOfUnity.of(1, 2)).value == Fraction(5, 6)


def test_enumerate_and_axioms():
    assert len(enumerate_group(3, 1, 2)) == 18
    els = enumerate_group(2, 2, 4)
    assert len(els) == 192
    members = set(els)
    rng = random.Random(0)
    for _ in range(200):
        x, y = rng.choice(els), rng.choice(els)
        assert x * y in members
        assert x * x.inverse() == MonomialElement.identity(4, 2)
        assert (x * y).inverse() == y.inverse() * x.inverse()
    with pytest.raises(CapExceeded):
        enumerate_group(12, 1, 8)


def test_eigen_spectrum_examples():
    e = MonomialElement.identity(3, 4)
    assert {k: v.dimension for k, v in eigen_spectrum(e).items()} == {ONE: 3}
    swap = MonomialElement((1, 0), (0, 0), 2)
    assert {lam.value for lam in eigen_spectrum(swap)} == {0, Fraction(1, 2)}
    g = MonomialElement((1, 0), (1, 0), 3)
    assert {lam.value for lam in eigen_spectrum(g)} == {Fraction(1, 6), Fraction(2, 3)}


def test_eigenvectors_are_eigenvectors():
    for g in enumerate_group(4, 2, 3):
        spec = eigen_spectrum(g)
        assert sum(d.dimension for d in spec.values()) == 3
        for lam, desc in spec.items():
            for v in desc.vectors():
                assert g.apply(v) == {j: x * lam for j, x in v.items()}


def test_is_regular_pair_examples():
    assert is_regular_pair(MonomialElement.identity(2, 3), ONE, 1)
    diag = MonomialElement((0, 1), (1, 0), 3)
    assert not is_regular_pair(diag, RootOfUnity.of(1, 3), 1)
    g = MonomialElement((1, 0), (1, 0), 3)
    assert is_regular_pair(g, RootOfUnity.of(1, 6), 1)
    with pytest.raises(NotAnEigenvalue):
        is_regular_pair(g, RootOfUnity.of(1, 5), 1)


def test_hyperplane_counts():
    assert len(hyperplanes(3, 1, 2)) == 2 + 3
    assert len(hyperplanes(3, 3, 2)) == 3
    assert len(hyperplanes(1, 1, 4)) == 6


@pytest.mark.parametrize("r,p,l", SMALL)
def test_kernel_regularity_matches_literal_check(r, p, l):
    G = build_group(r, p, l)
    vals, _, reg, counts = G.spectra()
    D = G.eigen_denominator
    for k in range(G.order):
        g = G.element(k)
        literal = {lam.value: is_regular_pair(g, lam, p) for lam in eigen_spectrum(g)}
        fast = {Fraction(int(vals[k, a]), D): bool(reg[k, a]) for a in range(counts[k])}
        assert literal == fast, g


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")
@pytest.mark.parametrize("r,p,l", SMALL)
def test_backends_agree(r, p, l):
    ext = importlib.import_module("milnorchi.oracle._kernels")
    G = build_group(r, p, l)
    P, E, D = G.P, G.E, G.eigen_denominator
    assert np.array_equal(ext.encode(P, E, r), _kernels_py.encode(P, E, r))
    for h in range(0, G.order, max(1, G.order // 7)):
        for fn in ("conjugate_keys", "commutes", "multiply_keys"):
            a = getattr(ext, fn)(P, E, r, P[h], E[h])
            b = getattr(_kernels_py, fn)(P, E, r, P[h], E[h])
            assert np.array_equal(a, b), fn
    for a, b in zip(ext.regular_spectra(P, E, r, p < r, D), _kernels_py.regular_spectra(P, E, r, p < r, D)):
        assert np.array_equal(a, b)


def test_kernel_products_match_elements():
    G = build_group(4, 2, 3)
    rng = random.Random(1)
    for _ in range(50):
        a, b = rng.randrange(G.order), rng.randrange(G.order)
        assert G.element(G.mul(a, b)) == G.element(a) * G.element(b)
        conj = G.conjugates(b)
        assert all(G.element(int(conj[k])) == G.element(b).conjugate_by(G.element(k)) for k in range(0, G.order, 17))


def test_brute_structure_examples():
    s = brute_regular_structure(3, 1, 2)
    assert s.R == {1, 2, 3, 6} and s.D == {3, 6}
    assert s.i[3] == 18 and s.i[6] == 6
    assert brute_regular_structure(4, 4, 2).D == {2, 4}
    with pytest.raises(ReducibleParameters):
        brute_regular_structure(2, 2, 2)


def test_conjugacy_examples():
    assert brute_conjugacy_check(3, 1, 2, 6, 12) == {"conjugate": True, "normalizer_order": 72}
    assert brute_conjugacy_check(3, 1, 2, 1, 12) == {"conjugate": True, "normalizer_order": 216}
    assert brute_conjugacy_check(4, 4, 2, 4, 8)["conjugate"]


def test_induced_examples():
    assert brute_induced_character(3, 1, 2, 6, 12, RegularClass(6)) == 12
    assert brute_induced_character(3, 1, 2, 6, 12, NONREGULAR) == 0
    assert brute_induced_character(3, 1, 2, 6, 12, RegularClass(1)) == 36


def test_verify_group_and_reports():
    checks = verify_group(3, 1, 2)
    assert checks and all(c.passed for c in checks)
    assert any(c.identity == "R" and c.computed == [1, 2, 3, 6] for c in checks)
    text = report_text(checks)
    assert text.endswith(f"summary: {len(checks)} checks over 1 groups, 0 failed\n")
    assert '"failed": 0' in report_json(checks)


def test_oracle_groups_respect_cap():
    assert oracle_groups(12, 8, 1) == []
    assert Infinite(3, 3, 2) in oracle_groups(12, 8, 10)
    assert all(g.r ** g.l * math.factorial(g.l) // g.p <= 500 for g in oracle_groups(12, 8, 500))


def test_pure_backend_selected_by_env():
    env = dict(os.environ, MILNORCHI_PURE="1")
    code = "from milnorchi.oracle import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
