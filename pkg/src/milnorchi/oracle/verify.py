"""Run every oracle identity over the infinite family and collect a report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from ..euler import NONREGULAR, RegularClass, chi_character, evaluate_character
from ..groups import Infinite, degree_profile, infinite_family
from ..springer import regular_data
from .brute import OracleMismatch, brute_conjugacy_check, brute_induced_character, brute_regular_structure, build_group
from .monomial import DEFAULT_CAP, group_order, hyperplanes


@dataclass
class Check:
    identity: str
    group: str
    params: str
    expected: object
    computed: object
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.group:<12} {self.identity:<22} {self.params:<18} expected={self.expected} computed={self.computed}"


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in sorted(x.items())}
    return x


def verify_group(r, p, l, cap=DEFAULT_CAP):
    g = Infinite(r, p, l)
    name = str(g)
    prof = degree_profile(g)
    data = regular_data(prof)
    m = prof.discriminant_degree
    checks = []

    def add(identity, params, expected, computed):
        checks.append(Check(identity, name, params, _jsonable(expected), _jsonable(computed), expected == computed))

    G = build_group(r, p, l, cap)
    add("order", "", group_order(r, p, l), G.order)
    add("order=prod(degrees)", "", prof.order, G.order)
    add("hyperplane_count", "", sum(c + 1 for c in prof.codegrees), len(hyperplanes(r, p, l)))

    try:
        brute = brute_regular_structure(r, p, l, cap)
    except OracleMismatch as exc:
        add("regular_structure", "", "consistent", str(exc))
        return checks
    add("R", "", set(data.R), set(brute.R))
    add("D", "", set(data.D), set(brute.D))
    add("roundup", "", {d: data.roundup[d] for d in data.R}, brute.roundup)
    add("i(d)", "", {d: data.i[data.roundup[d]] for d in data.R}, brute.i)
    add("a(d)", "", {d: sum(1 for x in prof.degrees if x % d == 0) for d in data.R}, brute.a)

    # eigenvalue multisets are class functions
    vals, dims, _, counts = G.spectra()
    labels = G.classes()
    sig = {}
    bad = 0
    for k in range(G.order):
        s = tuple(zip(vals[k, : counts[k]].tolist(), dims[k, : counts[k]].tolist()))
        if sum(x for _, x in s) != (l - 1 if r == 1 else l):
            bad += 1
        if sig.setdefault(int(labels[k]), s) != s:
            bad += 1
    add("spectrum_class_invariant", "", 0, bad)

    for d in sorted(data.R):
        res = brute_conjugacy_check(r, p, l, d, m, cap)
        add("regular_pairs_conjugate", f"d={d} m={m}", True, res["conjugate"])
        add("normalizer_order", f"d={d} m={m}", data.i[data.roundup[d]] * m, res["normalizer_order"])

    chi = chi_character(g)
    classes = [RegularClass(dp) for dp in sorted(data.R)] + [NONREGULAR]
    table = {}
    for d in sorted(data.D):
        for c in classes:
            label = c if c == NONREGULAR else c.d_prime
            try:
                v = brute_induced_character(r, p, l, d, m, c, cap)
                v2 = brute_induced_character(r, p, l, d, m, c, cap, which=1)
            except OracleMismatch as exc:
                add("induced_closed_form", f"d={d} class={label}", "match", str(exc))
                continue
            table[d, label] = v
            expected = 0 if c == NONREGULAR or d % c.d_prime else (m // d) * data.i[data.roundup[c.d_prime]]
            add("induced_closed_form", f"d={d} class={label}", expected, v)
            add("induced_class_constant", f"d={d} class={label}", v, v2)
    for c in classes:
        label = c if c == NONREGULAR else c.d_prime
        if not all((d, label) in table for d in data.D):
            continue
        summed = sum(a * table[d, label] for d, a in chi.coeffs.items())
        add("chi_end_to_end", f"class={label}", evaluate_character(chi, c), summed)
    return checks


def oracle_groups(rmax, lmax, cap=DEFAULT_CAP):
    return [g for g in infinite_family(rmax, lmax) if group_order(g.r, g.p, g.l) <= cap]


def verify_family(rmax=12, lmax=8, cap=DEFAULT_CAP):
    checks = []
    for g in oracle_groups(rmax, lmax, cap):
        checks.extend(verify_group(g.r, g.p, g.l, cap))
    return checks


def report_text(checks, failures_only=False) -> str:
    lines = [c.line() for c in checks if not (failures_only and c.passed)]
    failed = sum(not c.passed for c in checks)
    groups = len({c.group for c in checks})
    lines.append(f"summary: {len(checks)} checks over {groups} groups, {failed} failed")
    return "\n".join(lines) + "\n"


def report_json(checks) -> str:
    failed = sum(not c.passed for c in checks)
    doc = {
        "checks": [asdict(c) for c in checks],
        "failed": failed,
        "groups": len({c.group for c in checks}),
        "total": len(checks),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
