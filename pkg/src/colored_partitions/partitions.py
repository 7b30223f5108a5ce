"""Partition sets O, E and E2, color products and exhaustive enumerators.

A partition is a tuple of :class:`Part` listed from largest to smallest.

* O  -- primary parts only, strictly decreasing for ``succ``
* E  -- primary and secondary parts, consecutive parts related by ``gg``
* E2 -- E restricted to secondary parts, used for pattern searches

Enumerators yield partitions of one exact size, in reverse lexicographic
order of the part sequence (largest first part first).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .colors import Color, check_palette, in_palette, primaries, secondaries
from .errors import InputError
from .parts import Part, gg, is_valid_part, succ

GROUNDS = ("O", "E", "E2")


def _chain_ok(parts: Sequence[Part], rel) -> bool:
    return all(rel(parts[t], parts[t + 1]) for t in range(len(parts) - 1))


def _parts_ok(parts: Sequence[Part], n: int) -> bool:
    return all(is_valid_part(x) and in_palette(x.color, n) for x in parts)


def in_O(parts: Sequence[Part], n: int) -> bool:
    return (_parts_ok(parts, n) and all(x.color.j == 0 for x in parts)
            and _chain_ok(parts, succ))


def in_E(parts: Sequence[Part], n: int) -> bool:
    return _parts_ok(parts, n) and _chain_ok(parts, gg)


def in_E2(parts: Sequence[Part], n: int) -> bool:
    return in_E(parts, n) and all(x.color.j for x in parts)


def membership(parts: Sequence[Part], n: int, ground: str) -> bool:
    try:
        test = {"O": in_O, "E": in_E, "E2": in_E2}[ground]
    except KeyError:
        raise InputError(f"unknown ground set {ground!r}") from None
    return test(parts, n)


def total(parts: Sequence[Part]) -> int:
    return sum(x.size for x in parts)


def color_product(parts: Sequence[Part], n: int) -> tuple[int, ...]:
    """Exponent vector (c_1..c_n) of the monomial a_1^c_1 ... a_n^c_n."""
    e = [0] * n
    for x in parts:
        c = x.color
        if (c.j or c.i) > n:
            raise InputError(f"{x} lies outside the {n}-color palette")
        e[c.i - 1] += 1
        if c.j:
            e[c.j - 1] += 1
    return tuple(e)


@dataclass(frozen=True)
class Partition:
    """A part sequence tagged with the set it is claimed to belong to."""

    parts: tuple
    n: int
    ground: str = "E"

    def __post_init__(self):
        check_palette(self.n)
        object.__setattr__(self, "parts", tuple(self.parts))
        if not membership(self.parts, self.n, self.ground):
            raise InputError(f"sequence is not in {self.ground} for n={self.n}")

    @property
    def size(self) -> int:
        return total(self.parts)

    @property
    def color_product(self) -> tuple[int, ...]:
        return color_product(self.parts, self.n)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=32)
def _universe(n: int, max_size: int, ground: str):
    """Candidate parts sorted largest first, plus successor lists per part."""
    cols: list[Color] = []
    if ground in ("O", "E"):
        cols += primaries(n)
    if ground in ("E", "E2"):
        cols += secondaries(n)
    pool = [Part(k, c) for c in cols for k in range(1, max_size + 1)
            if is_valid_part(Part(k, c))]
    # (size, color key) descending is a linear extension of succ
    pool.sort(key=lambda x: (x.size, x.color.key), reverse=True)
    rel = succ if ground == "O" else gg
    nxt = tuple(tuple(y for y in pool if rel(x, y)) for x in pool)
    index = {x: t for t, x in enumerate(pool)}
    return tuple(pool), nxt, index


def _check(n, m, ground):
    check_palette(n)
    if ground not in GROUNDS:
        raise InputError(f"unknown ground set {ground!r}")
    if not isinstance(m, int) or m < 0:
        raise InputError(f"size must be a non-negative integer, got {m!r}")


def enumerate_set(n: int, m: int, ground: str = "E",
                  color_product_filter: tuple | None = None) -> Iterator[tuple]:
    """All partitions of size exactly m in the given ground set."""
    _check(n, m, ground)
    if m == 0:
        if color_product_filter is None or not any(color_product_filter):
            yield ()
        return
    pool, nxt, index = _universe(n, m, ground)
    out: list[Part] = []

    def walk(cands, rest):
        for y in cands:
            s = y.size
            if s > rest:
                continue
            out.append(y)
            if s == rest:
                yield tuple(out)
            else:
                yield from walk(nxt[index[y]], rest - s)
            out.pop()

    gen = walk(pool, m)
    if color_product_filter is None:
        yield from gen
    else:
        want = tuple(color_product_filter)
        if len(want) != n:
            raise InputError("color product must have one exponent per primary color")
        for lam in gen:
            if color_product(lam, n) == want:
                yield lam


def enumerate_upto(n: int, max_size: int, ground: str = "E") -> Iterator[tuple]:
    """All non-empty partitions of size at most max_size (any order)."""
    _check(n, max_size, ground)
    if max_size == 0:
        return
    pool, nxt, index = _universe(n, max_size, ground)
    out: list[Part] = []

    def walk(cands, rest):
        for y in cands:
            s = y.size
            if s > rest:
                continue
            out.append(y)
            yield tuple(out)
            yield from walk(nxt[index[y]], rest - s)
            out.pop()

    yield from walk(pool, max_size)


def enumerate_O(n: int, m: int, color_product_filter=None):
    return enumerate_set(n, m, "O", color_product_filter)


def enumerate_E(n: int, m: int, color_product_filter=None):
    return enumerate_set(n, m, "E", color_product_filter)


def enumerate_E2(n: int, m: int, color_product_filter=None):
    return enumerate_set(n, m, "E2", color_product_filter)


def tally(parts_iter, n: int) -> Counter:
    """Count partitions by (color product, size)."""
    c: Counter = Counter()
    for lam in parts_iter:
        c[(color_product(lam, n), total(lam))] += 1
    return c


def part_universe(n: int, max_size: int, ground: str = "E") -> tuple:
    """Candidate parts used by the enumerators, largest first."""
    _check(n, max_size, ground)
    return _universe(n, max_size, ground)[0]
