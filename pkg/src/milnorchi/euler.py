"""Virtual characters sum a_d I_d and the Euler numbers derived from them.

Coefficients are computed by Mobius inversion over the maximal poset in
exact rational arithmetic; a non-integral coefficient is treated as a data
error, never rounded.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import mobius as _nt_mobius
from sympy import totient

from .groups import (
    DegreeProfile,
    Exceptional,
    GroupId,
    Infinite,
    classify,
    degree_profile,
)
from .springer import (
    NotRegularError,
    identify_centralizer,
    regular_data,
)


class CoefficientError(ArithmeticError):
    """A coefficient came out non-integral: the classification data is corrupt."""


class AmbientOrderError(ValueError):
    def __init__(self, m, offending):
        super().__init__(f"m={m} is not divisible by regular number {offending}")
        self.m = m
        self.offending = offending


class EvaluationMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class RegularClass:
    """Class of regular pairs of order ``d_prime``."""

    d_prime: int


NONREGULAR = "nonregular"


@dataclass(frozen=True)
class VirtualCharacter:
    m: int
    coeffs: dict = field(hash=False)
    group: GroupId | None = None
    profile: DegreeProfile | None = None
    reducible: bool = False

    def terms(self):
        """Nonzero ``(d, a_d)`` pairs in descending ``d``."""
        return [(d, a) for d, a in sorted(self.coeffs.items(), reverse=True) if a]

    def render(self):
        return render_terms(self.terms())

    def __str__(self):
        return self.render()


def render_terms(terms) -> str:
    out = []
    for d, a in sorted(terms, reverse=True):
        if a == 0:
            continue
        sign = "-" if a < 0 else ("+" if out else "")
        mag = "" if abs(a) == 1 else str(abs(a))
        out.append(f"{sign}{mag}I{d}")
    return "".join(out) or "0"


_TERM_RE = re.compile(r"([+-]?)(\d*)I(\d+)")


def parse_rendering(text: str) -> dict:
    """Inverse of :func:`render_terms`."""
    if text == "0":
        return {}
    pos, out = 0, {}
    for m in _TERM_RE.finditer(text):
        if m.start() != pos:
            break
        sign, mag, d = m.groups()
        out[int(d)] = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
        pos = m.end()
    if pos != len(text) or not out:
        raise ValueError(f"not a character rendering: {text!r}")
    return out


def _as_profile(g) -> DegreeProfile:
    return g if isinstance(g, DegreeProfile) else degree_profile(g)


@lru_cache(maxsize=4096)
def _coefficients(profile: DegreeProfile):
    data = regular_data(profile)
    out = {}
    for d in data.D:
        total = sum(
            (data.mu[d, k] * Fraction(data.u[k], data.i[k]) for k in data.D if k % d == 0),
            Fraction(0),
        )
        a = d * total
        if a.denominator != 1:
            raise CoefficientError(f"a_{d} = {a} is not an integer for {profile}")
        out[d] = int(a)
    return tuple(sorted(out.items()))


def coefficients(g) -> dict:
    """Map each ``d`` of the maximal poset to its coefficient ``a_d``.

    ``g`` may be a group identifier or a bare :class:`DegreeProfile`.
    """
    return dict(_coefficients(_as_profile(g)))


def _reducible_m(g):
    if isinstance(g, Infinite):
        r, l, q = g.r, g.l, g.q
        pairs = l * (l - 1) // 2
        reflections = r * pairs + l * (q - 1)
        hyperplanes = r * pairs + (l if q > 1 else 0)
        return reflections + hyperplanes
    return 0


def chi_character(g, m: int | None = None) -> VirtualCharacter:
    if isinstance(g, DegreeProfile):
        group, profile = None, g
    else:
        group = g
        if not classify(g)["irreducible"]:
            return VirtualCharacter(m if m is not None else _reducible_m(g), {}, g, None, True)
        profile = degree_profile(g)
    data = regular_data(profile)
    if m is None:
        m = profile.discriminant_degree
    elif m < 1:
        raise AmbientOrderError(m, min(data.R))
    for d in sorted(data.R):
        if m % d:
            raise AmbientOrderError(m, d)
    return VirtualCharacter(m, coefficients(profile), group, profile)


def _require_profile(chi: VirtualCharacter):
    if chi.profile is None:
        raise ValueError("character carries no degree profile")
    return chi.profile


def evaluate_character(chi: VirtualCharacter, c) -> int:
    """Value of ``chi`` on a class of regular pairs of a given order, or on
    ``NONREGULAR`` pairs."""
    if c == NONREGULAR or chi.reducible:
        return 0
    if isinstance(c, int):
        c = RegularClass(c)
    data = regular_data(_require_profile(chi))
    dp = c.d_prime
    if dp not in data.R:
        raise NotRegularError(f"{dp} is not a regular number")
    top = data.roundup[dp]
    induced = sum(
        a * Fraction(chi.m, d) * data.i[top] for d, a in chi.coeffs.items() if d % dp == 0
    )
    direct = chi.m * data.u[top]
    if induced != direct:
        raise EvaluationMismatch(f"order {dp}: induced sum {induced} != m*u = {direct}")
    return int(direct)


def s_helper(m: int, k: int) -> Fraction:
    """(1/m) * sum over d | m of mobius(d) * (-1)^(k*m/d - 1)."""
    total = sum(
        int(_nt_mobius(d)) * (-1) ** ((k * (m // d) - 1) % 2)
        for d in range(1, m + 1)
        if m % d == 0
    )
    value = Fraction(total, m)
    closed = (-1) ** ((k * m - 1) % 2) if m == 1 or (m == 2 and k % 2) else 0
    if value != closed:
        raise AssertionError(f"S({m},{k}) = {value}, expected {closed}")
    return value


def closed_form_infinite(r: int, p: int, l: int) -> VirtualCharacter:
    g = Infinite(r, p, l)
    if not classify(g)["irreducible"]:
        raise ValueError(f"{g} is not irreducible")
    q = r // p
    terms = Counter()
    if q > 1:
        if l % 2:
            terms[l * q] += 1
        elif p % 2 == 0:
            terms[l * q] -= 1
        else:
            terms[l * q] += 1
            terms[q * l // 2] -= 1
    else:
        top = (l - 1) * r
        terms[top] += 1
        if l % 2:
            terms[r * (l - 1) // 2] -= 1
            terms[l] += 1
        elif r % 2 == 0:
            terms[l] -= 1
        else:
            terms[l] += 1
            terms[l // 2] -= 1
    coeffs = {d: a for d, a in terms.items() if a}
    return VirtualCharacter(degree_profile(g).discriminant_degree, coeffs, g, degree_profile(g))


def c_classifier(g: GroupId) -> int:
    """Euler characteristic of the eigenspace-arrangement complement mod G."""
    n = classify(g)["rank"]
    sign = (-1) ** (n - 1)
    if n <= 2:
        return sign
    if isinstance(g, Exceptional):
        return sign if g.n in (29, 34) else 0
    r, p, l = g.r, g.p, g.l
    if r == 1:
        return 0
    if p % l == 0 and (r, p, l) != (3, 3, 3):
        return sign
    if l % 2 == 0 and p % 2 and p % (l // 2) == 0:
        return sign
    return 0


QUOTIENT_MODES = ("orbifold_F", "ordinary_quotient", "orbifold_quotient", "U_mod_G")


def quotient_euler(chi: VirtualCharacter, mode: str) -> int:
    if mode not in QUOTIENT_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {QUOTIENT_MODES}")
    if mode in ("U_mod_G", "ordinary_quotient"):
        return sum(chi.coeffs.values())
    weighted = sum(d * a for d, a in chi.coeffs.items())
    if chi.profile is not None and not chi.reducible:
        via_totient = totient_sum(chi)
        if via_totient != weighted:
            raise EvaluationMismatch(
                f"totient sum {via_totient} != weighted sum {weighted}"
            )
    return weighted


def totient_sum(chi: VirtualCharacter) -> int:
    """Sum over regular d of phi(d) times the coefficients above roundup(d).

    Equals the weighted sum of d * a_d, since every k in the poset splits as
    the sum of phi(d) over regular d rounding up into a divisor of k."""
    data = regular_data(chi.profile)
    return sum(
        int(totient(d)) * sum(a for k, a in chi.coeffs.items() if k % data.roundup[d] == 0)
        for d in data.R
    )


def literal_totient_sum(chi: VirtualCharacter) -> int:
    """Sum over regular d of phi(d) * a_{roundup(d)}, one coefficient each."""
    data = regular_data(chi.profile)
    return sum(int(totient(d)) * chi.coeffs[data.roundup[d]] for d in data.R)


def restriction_check(g: GroupId, e: int) -> bool:
    """Coefficients of the centralizer G(e) agree with those of ``g`` on
    multiples of ``e``."""
    prof = degree_profile(g)
    cent = identify_centralizer(g, e)
    sub = degree_profile(cent.group) if cent.identified else cent.profile
    mine = coefficients(prof)
    theirs = coefficients(sub)
    index = {d for d in mine if d % e == 0}
    if set(theirs) != index:
        return False
    return all(theirs[d] == mine[d] for d in index)
