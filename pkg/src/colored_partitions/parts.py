"""Colored parts, their halves and the order relations between them.

A part is a (size, color) pair.  ``Part`` itself does not police sizes
because comparisons routinely involve shifted copies such as ``x + 3`` or
the zero-size sentinel; use :func:`make_part` wherever a value is meant to
be a genuine part of a partition (size >= 1, and >= 2 when secondary).

Relations, all on parts x = k_p and y = l_q:

* ``succ``     x > y        iff  k - l >= chi(p <= q)
* ``succeq``   x >= y       iff  x > y or x == y
* ``tri``      x |> y       iff  x >= y + 1 when a primary part is involved,
                                 x > y + 1 when both are secondary
* ``gg``       x >> y       like ``tri``, except on special pairs where it is ``succ``
"""
from __future__ import annotations

from typing import NamedTuple

from .colors import Color, color, is_special_pair, parse_color, pretty_name, canonical_name
from .errors import InputError


class Part(NamedTuple):
    size: int
    color: Color

    def __add__(self, k):  # type: ignore[override]
        # x + k shifts the size, keeping the color
        if isinstance(k, int):
            return Part(self.size + k, self.color)
        return NotImplemented

    def __sub__(self, k):
        if isinstance(k, int):
            return Part(self.size - k, self.color)
        return NotImplemented

    @property
    def is_primary(self) -> bool:
        return self.color.j == 0

    @property
    def is_secondary(self) -> bool:
        return self.color.j != 0

    def __str__(self):
        return format_part(self)


def is_valid_part(x: Part) -> bool:
    return x.size >= (2 if x.color.j else 1)


def make_part(size: int, c: Color) -> Part:
    if not isinstance(size, int) or isinstance(size, bool):
        raise InputError(f"part size must be an integer, got {size!r}")
    x = Part(size, c)
    if not is_valid_part(x):
        raise InputError(f"invalid part {size}_{canonical_name(c)}: "
                         "sizes start at 1 (primary) or 2 (secondary)")
    return x


def format_part(x: Part, pretty: bool = True) -> str:
    name = pretty_name(x.color) if pretty else canonical_name(x.color)
    return f"{x.size}[{name}]"


def parse_part(text: str, n: int) -> Part:
    """Parse the text form ``3[ad]`` / ``3[a1a4]``."""
    if not isinstance(text, str) or not text.endswith("]") or "[" not in text:
        raise InputError(f"unparseable part {text!r}")
    size, _, name = text[:-1].partition("[")
    try:
        k = int(size)
    except ValueError:
        raise InputError(f"unparseable part size in {text!r}") from None
    return make_part(k, parse_color(name, n))


# -- halves ----------------------------------------------------------------

def alpha(x: Part) -> Part:
    """Upper half of a secondary part: 2k -> k_{a_j}, 2k+1 -> (k+1)_{a_i}."""
    c = x.color
    if not c.j:
        raise InputError("alpha needs a secondary part")
    k, odd = divmod(x.size, 2)
    return Part(k + 1, color(c.i)) if odd else Part(k, color(c.j))


def beta(x: Part) -> Part:
    """Lower half of a secondary part: 2k -> k_{a_i}, 2k+1 -> k_{a_j}."""
    c = x.color
    if not c.j:
        raise InputError("beta needs a secondary part")
    k, odd = divmod(x.size, 2)
    return Part(k, color(c.j)) if odd else Part(k, color(c.i))


def halves(x: Part) -> tuple[Part, Part]:
    return alpha(x), beta(x)


def merge(x: Part, y: Part) -> Part:
    """The secondary part whose halves are (x, y)."""
    if not (x.color.j == 0 and y.color.j == 0) or x.color.i == y.color.i:
        raise InputError(f"cannot merge {x} and {y}")
    i, j = sorted((x.color.i, y.color.i))
    z = Part(x.size + y.size, color(i, j))
    if alpha(z) != x or beta(z) != y:
        raise InputError(f"{x}, {y} are not the halves of any secondary part")
    return z


# -- order relations ---------------------------------------------------------

def succ(x: Part, y: Part) -> bool:
    d = x.size - y.size
    return d >= 1 if x.color.key <= y.color.key else d >= 0


def succeq(x: Part, y: Part) -> bool:
    return x == y or succ(x, y)


def tri(x: Part, y: Part) -> bool:
    """The relation |> ."""
    y1 = Part(y.size + 1, y.color)
    if x.color.j and y.color.j:
        return succ(x, y1)
    return x == y1 or succ(x, y1)


def gg(x: Part, y: Part) -> bool:
    """The relation >> ."""
    if is_special_pair(x.color, y.color):
        return succ(x, y)
    return tri(x, y)


def is_troublesome(x: Part, y: Part) -> bool:
    return succ(x, y) and not gg(x, y)


def class_gt(x: Part, y: Part) -> bool:
    """Order on secondary parts that forgets the second color index."""
    return x.size > y.size or (x.size == y.size and x.color.i > y.color.i)
