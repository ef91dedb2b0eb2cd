"""Classification data for irreducible complex reflection groups.

Degrees and codegrees of the infinite family G(r,p,l) come from closed
formulas; the 34 exceptional groups G4..G37 are read from an embedded
plain-text table (``data/exceptional.txt``).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from importlib import resources
from pathlib import Path
from typing import Mapping, Union


class GroupSpecError(ValueError):
    """Raised for text that does not name a valid reflection group."""


class ReducibleGroupError(ValueError):
    """Raised when invariants are requested for a reducible or trivial group."""

    def __init__(self, group, reason):
        super().__init__(f"{group} is reducible/trivial: {reason}")
        self.group = group
        self.reason = reason


@dataclass(frozen=True, order=True)
class Infinite:
    r: int
    p: int
    l: int

    def __post_init__(self):
        if self.r < 1 or self.p < 1 or self.l < 1:
            raise GroupSpecError(f"parameters must be positive: {self.r},{self.p},{self.l}")
        if self.r % self.p:
            raise GroupSpecError(f"p={self.p} does not divide r={self.r}")

    @property
    def q(self):
        return self.r // self.p

    def __str__(self):
        return f"G({self.r},{self.p},{self.l})"


@dataclass(frozen=True, order=True)
class Exceptional:
    n: int

    def __post_init__(self):
        if not 4 <= self.n <= 37:
            raise GroupSpecError(f"exceptional index {self.n} outside 4..37")

    def __str__(self):
        return f"G{self.n}"


GroupId = Union[Infinite, Exceptional]


@dataclass(frozen=True)
class DegreeProfile:
    """Sorted degrees and codegrees of a reflection group."""

    degrees: tuple
    codegrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        object.__setattr__(self, "codegrees", tuple(sorted(self.codegrees)))
        if len(self.degrees) != len(self.codegrees):
            raise ValueError("degrees and codegrees differ in length")
        if any(d < 1 for d in self.degrees) or any(c < 0 for c in self.codegrees):
            raise ValueError("degrees must be positive and codegrees non-negative")

    @property
    def rank(self):
        return len(self.degrees)

    @property
    def order(self):
        return math.prod(self.degrees)

    @property
    def center(self):
        return reduce(math.gcd, self.degrees)

    @property
    def discriminant_degree(self):
        return sum(self.degrees) + sum(self.codegrees)


_INFINITE_RE = re.compile(r"^G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_EXCEPTIONAL_RE = re.compile(r"^G_?(\d+)$")


def parse_group(spec: str) -> GroupId:
    """Parse ``"G(r,p,l)"`` or ``"Gn"`` into a group identifier."""
    text = spec.strip()
    m = _INFINITE_RE.match(text)
    if m:
        r, p, l = (int(x) for x in m.groups())
        return Infinite(r, p, l)
    m = _EXCEPTIONAL_RE.match(text)
    if m:
        return Exceptional(int(m.group(1)))
    raise GroupSpecError(f"cannot parse group spec {spec!r}; expected 'G(r,p,l)' or 'Gn'")


def render_group(g: GroupId) -> str:
    return str(g)


# --- exceptional table -------------------------------------------------------


def parse_table(text: str) -> dict:
    """Parse ``n;rank;d1,d2,...;c1,c2,...`` records; ``#`` starts a comment."""
    table = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(";")
        if len(fields) != 4:
            raise ValueError(f"line {lineno}: expected 4 ';'-separated fields, got {len(fields)}")
        n, rank = int(fields[0]), int(fields[1])
        degrees = tuple(int(x) for x in fields[2].split(","))
        codegrees = tuple(int(x) for x in fields[3].split(","))
        if len(degrees) != rank or len(codegrees) != rank:
            raise ValueError(f"line {lineno}: G{n} has rank {rank} but {len(degrees)} degrees")
        if n in table:
            raise ValueError(f"line {lineno}: duplicate entry for G{n}")
        table[n] = DegreeProfile(degrees, codegrees)
    return table


@lru_cache(maxsize=None)
def _builtin_table():
    text = resources.files("milnorchi").joinpath("data/exceptional.txt").read_text()
    return parse_table(text)


_override: dict | None = None


def exceptional_table() -> Mapping[int, DegreeProfile]:
    return _override if _override is not None else _builtin_table()


def load_table_override(path) -> dict:
    """Replace the built-in exceptional table with the one in ``path``.

    Pass ``None`` to restore the built-in table. Returns the active table.
    """
    global _override
    if path is None:
        _override = None
        return dict(_builtin_table())
    _override = parse_table(Path(path).read_text())
    return dict(_override)


# --- classification ----------------------------------------------------------


def classify(g: GroupId) -> dict:
    if isinstance(g, Exceptional):
        return {"irreducible": True, "rank": exceptional_table()[g.n].rank}
    r, p, l = g.r, g.p, g.l
    if r == 1:
        # S_l on its (l-1)-dimensional reflection representation
        return {"irreducible": l >= 2, "rank": l - 1}
    if p == r and l == 1:
        # trivial group
        return {"irreducible": False, "rank": 1}
    return {"irreducible": (r, p, l) != (2, 2, 2), "rank": l}


def _reducible_reason(g):
    if isinstance(g, Infinite):
        if g.r == 1 and g.l == 1:
            return "trivial group G(1,1,1)"
        if g.p == g.r and g.l == 1:
            return f"trivial group {g}"
        if (g.r, g.p, g.l) == (2, 2, 2):
            return "G(2,2,2) is a product of two rank-1 groups"
    return "reducible"


def degree_profile(g: GroupId) -> DegreeProfile:
    if not classify(g)["irreducible"]:
        raise ReducibleGroupError(g, _reducible_reason(g))
    if isinstance(g, Exceptional):
        return exceptional_table()[g.n]
    r, p, l, q = g.r, g.p, g.l, g.q
    if r == 1:
        return DegreeProfile(range(2, l + 1), range(0, l - 1))
    degrees = [k * r for k in range(1, l)] + [l * q]
    if p < r:
        codegrees = [k * r for k in range(l)]
    else:
        codegrees = [k * r for k in range(l - 1)] + [(l - 1) * r - l]
    return DegreeProfile(degrees, codegrees)


def order_and_center(g: GroupId) -> dict:
    prof = degree_profile(g)
    order = prof.order
    if isinstance(g, Infinite) and g.r > 1:
        closed = g.r**g.l * math.factorial(g.l) // g.p
        if closed != order:
            raise AssertionError(f"{g}: product of degrees {order} != r^l l!/p = {closed}")
    return {"order": order, "center": prof.center}


def discriminant_degree(g: GroupId) -> int:
    """Degree m of the discriminant: #reflections + #hyperplanes."""
    return degree_profile(g).discriminant_degree


def infinite_family(rmax: int, lmax: int):
    """Irreducible G(r,p,l) with r <= rmax, l <= lmax in label order.

    Includes the symmetric groups G(1,1,l), l >= 2.
    """
    out = []
    for r in range(1, rmax + 1):
        for p in (d for d in range(1, r + 1) if r % d == 0):
            for l in range(1, lmax + 1):
                g = Infinite(r, p, l)
                if classify(g)["irreducible"]:
                    out.append(g)
    return out


def exceptionals():
    return [Exceptional(n) for n in sorted(exceptional_table())]
