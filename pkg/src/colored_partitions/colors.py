"""Primary and secondary colors and their total order.

With n primary colors a1 < a2 < ... < an, a secondary color is a
product a_i a_j with i < j.  All colors are totally ordered by

    a1a2 < a1a3 < ... < a1an < a1 < a2a3 < ... < a2an < a2 < ... < an

which is the lexicographic order on (i, j) once a primary color a_i is
given the second coordinate "infinity".  That key does not depend on n,
so two colors can be compared without knowing the palette size.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import InputError

#: palettes larger than this are rejected; the order key packs j in 6 bits
MAX_COLORS = 62
_INF = 63


@dataclass(frozen=True, slots=True)
class Color:
    """A primary color a_i (j == 0) or a secondary color a_i a_j (i < j)."""

    i: int
    j: int = 0
    key: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (1 <= self.i <= MAX_COLORS):
            raise InputError(f"color index {self.i} out of range")
        if self.j and not (self.i < self.j <= MAX_COLORS):
            raise InputError(f"secondary color needs i < j, got a{self.i}a{self.j}")
        object.__setattr__(self, "key", self.i * 64 + (self.j or _INF))

    @property
    def is_primary(self) -> bool:
        return self.j == 0

    @property
    def is_secondary(self) -> bool:
        return self.j != 0

    def __lt__(self, other: "Color") -> bool:
        return self.key < other.key

    def __le__(self, other: "Color") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Color") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Color") -> bool:
        return self.key >= other.key

    def __str__(self):
        return canonical_name(self)


@lru_cache(maxsize=None)
def _interned(i: int, j: int) -> Color:
    return Color(i, j)


def color(i: int, j: int = 0) -> Color:
    """Interned color constructor; prefer this over ``Color(...)``."""
    return _interned(i, j)


def primary(i: int) -> Color:
    return color(i)


def secondary(i: int, j: int) -> Color:
    if not i < j:
        raise InputError(f"secondary color needs i < j, got ({i}, {j})")
    return color(i, j)


def product(p: Color, q: Color) -> Color:
    """The secondary color a_i a_j built from two distinct primaries."""
    if not (p.is_primary and q.is_primary) or p.i == q.i:
        raise InputError(f"cannot multiply {p} and {q}")
    return color(min(p.i, q.i), max(p.i, q.i))


def check_palette(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not (1 <= n <= MAX_COLORS):
        raise InputError(f"number of primary colors must be in 1..{MAX_COLORS}, got {n!r}")
    return n


def in_palette(c: Color, n: int) -> bool:
    return (c.j or c.i) <= n


def primaries(n: int) -> list[Color]:
    check_palette(n)
    return [color(i) for i in range(1, n + 1)]


def secondaries(n: int) -> list[Color]:
    check_palette(n)
    return [color(i, j) for i, j in combinations(range(1, n + 1), 2)]


def all_colors(n: int) -> list[Color]:
    """Every color of the palette, in increasing order."""
    return sorted(primaries(n) + secondaries(n), key=lambda c: c.key)


def color_le(p: Color, q: Color) -> bool:
    return p.key <= q.key


def chi(flag: bool) -> int:
    """Indicator: 1 if the flag holds, else 0."""
    return 1 if flag else 0


def rank(c: Color, n: int) -> int:
    """Zero-based position of ``c`` in the chain of all colors of an n-palette.

    Closed form: everything with a smaller first index comes first, and the
    block of first index t holds n - t + 1 colors.
    """
    check_palette(n)
    if not in_palette(c, n):
        raise InputError(f"{c} is not in the {n}-color palette")
    before = sum(n - t + 1 for t in range(1, c.i))
    return before + ((c.j - c.i - 1) if c.j else (n - c.i))


def is_special_pair(p: Color, q: Color) -> bool:
    """(a_k a_l, a_i a_j) with i < j < k < l or k < i < j < l."""
    if p.is_primary or q.is_primary:
        return False
    k, l, i, j = p.i, p.j, q.i, q.j
    return (i < j < k < l) or (k < i < j < l)


def delta(p: Color, q: Color) -> int:
    """Minimal size gap between consecutive secondary parts colored p then q.

    For p = a_r a_s and q = a_x a_y this is chi(r <= y) + chi(r <= x) chi(s <= y).
    """
    if p.is_primary or q.is_primary:
        raise InputError("delta is defined on secondary colors only")
    r, s, x, y = p.i, p.j, q.i, q.j
    return chi(r <= y) + chi(r <= x) * chi(s <= y)


# -- names -----------------------------------------------------------------

def canonical_name(c: Color) -> str:
    return f"a{c.i}a{c.j}" if c.j else f"a{c.i}"


def pretty_name(c: Color) -> str:
    """Letter form (a, b, ..., ad, ...); only meaningful for up to 26 colors."""
    if (c.j or c.i) > 26:
        return canonical_name(c)
    letter = lambda t: chr(ord("a") + t - 1)
    return letter(c.i) + (letter(c.j) if c.j else "")


_CANON = re.compile(r"a(\d+)(?:a(\d+))?")
_PRETTY = re.compile(r"[a-z]{1,2}")


def parse_color(text: str, n: int) -> Color:
    """Parse ``a1``/``a1a3`` or, when n <= 26, the letter forms ``a``/``ac``."""
    check_palette(n)
    if not isinstance(text, str):
        raise InputError(f"color must be a string, got {text!r}")
    m = _CANON.fullmatch(text)
    if m:
        i = int(m.group(1))
        j = int(m.group(2)) if m.group(2) else 0
    elif n <= 26 and _PRETTY.fullmatch(text):
        i = ord(text[0]) - ord("a") + 1
        j = ord(text[1]) - ord("a") + 1 if len(text) == 2 else 0
    else:
        raise InputError(f"unparseable color {text!r}")
    if i < 1 or (j and j <= i):
        raise InputError(f"malformed color {text!r}")
    c = color(i, j)
    if not in_palette(c, n):
        raise InputError(f"color {text!r} is outside the {n}-color palette")
    return c
