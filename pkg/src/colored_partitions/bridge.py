"""Bridges of secondary parts and the membership test for the image of phi.

Write a partition of E with p primary and s secondary parts as the
half-expanded sequence nu_1 .. nu_{p+2s}: every secondary part contributes
its upper half followed by its lower half.  ``upper`` collects the indices
of upper halves, ``prim`` those of primary parts; index p+2s+1 is a
sentinel holding 0_{a_n}.

For an upper index i, let j be the first primary (or sentinel) index after i.
The bridge Br(i) is j when every upper index i' in [i, j) satisfies

    nu_{i'+1}  is not above  nu_j + (j - i')/2 - 1,

and otherwise the largest upper index u in (i, j) satisfying the same
condition for every upper i' in [i, u), falling back to i itself.

Three independent routes decide whether nu is an image of phi:
``cond2`` and ``cond3`` are inequality checks built on bridges, and
``roundtrip`` runs psi then phi.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .colors import color
from .errors import InputError, InternalError
from .parts import Part, alpha, beta, gg, succ, tri
from .partitions import in_E, in_O


@dataclass(frozen=True)
class IndexedPartition:
    parts: tuple
    n: int
    halves: tuple      # halves[x] for x = 1 .. p+2s+1; halves[0] unused
    upper: tuple       # indices of upper halves
    prim: tuple        # indices of primary parts
    owner: tuple       # owner[x] = position in ``parts`` of the part giving index x

    @property
    def width(self) -> int:
        """p + 2s, the number of real indices."""
        return len(self.halves) - 2

    @property
    def sentinel(self) -> int:
        return len(self.halves) - 1

    def secondary(self, i: int) -> Part:
        """The secondary part nu_i + nu_{i+1} for an upper index i."""
        return self.parts[self.owner[i]]

    def left_of(self, i: int):
        """The part just before the one owning index i, or None."""
        k = self.owner[i]
        return self.parts[k - 1] if k else None

    def next_part(self, i: int):
        """The part just after the one owning index i, or None."""
        k = self.owner[i] + 1
        return self.parts[k] if k < len(self.parts) else None


def index_split(nu: Sequence[Part], n: int, check: bool = True) -> IndexedPartition:
    nu = tuple(nu)
    if check and not in_E(nu, n):
        raise InputError("expected a partition in E")
    halves: list = [None]
    upper, prim, owner = [], [], [None]
    for k, z in enumerate(nu):
        if z.color.j:
            upper.append(len(halves))
            halves += [alpha(z), beta(z)]
            owner += [k, k]
        else:
            prim.append(len(halves))
            halves.append(z)
            owner.append(k)
    halves.append(Part(0, color(n)))
    owner.append(len(nu))
    return IndexedPartition(nu, n, tuple(halves), tuple(upper), tuple(prim), tuple(owner))


def _next_stop(ip: IndexedPartition, i: int) -> int:
    for j in ip.prim:
        if j > i:
            return j
    return ip.sentinel


def _blocked(ip: IndexedPartition, i2: int, target: int) -> bool:
    """True when nu_{i2+1} is not above nu_target + (target - i2)/2 - 1."""
    h = ip.halves
    return not succ(h[i2 + 1], h[target] + ((target - i2) // 2 - 1))


def bridge_direct(ip: IndexedPartition) -> dict:
    """Br(i) for every upper index, straight from the definition."""
    out = {}
    for i in ip.upper:
        j = _next_stop(ip, i)
        run = [u for u in ip.upper if i <= u < j]
        if all(_blocked(ip, u, j) for u in run):
            out[i] = j
            continue
        best = i
        for u in run[1:]:
            if all(_blocked(ip, v, u) for v in run if v < u):
                best = u
        out[i] = best
    return out


def bridge_recursive(ip: IndexedPartition) -> dict:
    """Br(i) by locating fixed points run by run, from the right.

    Inside a run of secondary parts closed by a primary part (or the end),
    the rightmost lower half that sits above the closing part plus its
    distance is the first fixed point.  Every upper index to its right
    bridges to the closing part.  The search then restarts to the left of
    the fixed point, measuring against that fixed point's upper half.
    """
    out = {}
    h = ip.halves
    ups = ip.upper
    k = len(ups) - 1
    while k >= 0:
        j = _next_stop(ip, ups[k])
        lo = k
        while lo > 0 and ups[lo - 1] + 2 == ups[lo]:
            lo -= 1
        run = ups[lo:k + 1]
        target, t = j, len(run) - 1
        while t >= 0:
            i = run[t]
            if succ(h[i + 1], h[target] + ((target - i) // 2 - 1)):
                out[i] = i
                target = i
            else:
                out[i] = target
            t -= 1
        k = lo - 1
    return out


def fixed_points(br: dict) -> list[int]:
    return sorted(i for i, b in br.items() if b == i)


def trouble_set(ip: IndexedPartition) -> list[int]:
    """Upper indices i whose part is |>-below its left neighbour (or is first)
    but is not |>-above the next part, which must then be secondary."""
    out = []
    for i in ip.upper:
        z = ip.secondary(i)
        nxt = ip.next_part(i)
        if nxt is None or not nxt.color.j:
            continue
        left = ip.left_of(i)
        if (left is None or tri(left, z)) and not tri(z, nxt):
            out.append(i)
    return out


def shifted_bridge(ip: IndexedPartition, i: int, b: int) -> Part:
    """nu_{Br(i)} + (Br(i) - i)/2."""
    return ip.halves[b] + (b - i) // 2


def cond2(ip: IndexedPartition, br: dict | None = None) -> bool:
    """For every upper i with Br(i) > i: the left neighbour is >>-above the
    shifted bridge part, and the shifted bridge part is not above nu_i + nu_{i+1}."""
    br = bridge_direct(ip) if br is None else br
    for i in ip.upper:
        b = br[i]
        if b == i:
            continue
        x = shifted_bridge(ip, i, b)
        left = ip.left_of(i)
        if left is not None and not gg(left, x):
            return False
        if succ(x, ip.secondary(i)):
            return False
    return True


def cond3(ip: IndexedPartition, br: dict | None = None) -> bool:
    """For every i in the trouble set with Br(i) > i: nu_i + nu_{i+1} is above
    the shifted bridge part."""
    br = bridge_direct(ip) if br is None else br
    for i in trouble_set(ip):
        b = br[i]
        if b > i and not succ(ip.secondary(i), shifted_bridge(ip, i, b)):
            return False
    return True


def roundtrip(nu: Sequence[Part], n: int) -> bool:
    from .machines import phi_trace, psi_trace
    lam = psi_trace(nu, n, check=False).result
    return in_O(lam, n) and phi_trace(lam, n, check=False).result == tuple(nu)


ROUTES = ("cond2", "cond3", "roundtrip", "all")


def in_E1(nu: Sequence[Part], n: int, route: str = "cond3", check: bool = True) -> bool:
    """Is nu in the image of phi?  ``route="all"`` runs the three routes and
    raises ``InternalError`` if they disagree."""
    nu = tuple(nu)
    if check and not in_E(nu, n):
        raise InputError("expected a partition in E")
    if route == "roundtrip":
        return roundtrip(nu, n)
    ip = index_split(nu, n, check=False)
    br = bridge_direct(ip)
    if route == "cond2":
        return cond2(ip, br)
    if route == "cond3":
        return cond3(ip, br)
    if route != "all":
        raise InputError(f"unknown route {route!r}")
    verdicts = {"cond2": cond2(ip, br), "cond3": cond3(ip, br), "roundtrip": roundtrip(nu, n)}
    if len(set(verdicts.values())) != 1:
        raise InternalError(f"membership routes disagree on {nu}: {verdicts}")
    return verdicts["cond3"]


def in_E1_routes(nu: Sequence[Part], n: int) -> dict:
    """The three verdicts side by side, without the agreement check."""
    ip = index_split(nu, n)
    br = bridge_direct(ip)
    return {"cond2": cond2(ip, br), "cond3": cond3(ip, br), "roundtrip": roundtrip(nu, n)}


def monotone_ok(ip: IndexedPartition, br: dict) -> bool:
    """Bridges never decrease along the upper indices (and i <= Br(i))."""
    prev = 0
    for i in ip.upper:
        b = br[i]
        if b < i or b < prev:
            return False
        prev = b
    return True


def bridge_report(nu: Sequence[Part], n: int) -> dict:
    ip = index_split(nu, n)
    br = bridge_direct(ip)
    return {
        "I": list(ip.upper),
        "J": list(ip.prim),
        "TS": trouble_set(ip),
        "Br": {str(i): br[i] for i in ip.upper},
        "fixed_points": fixed_points(br),
        "in_E1": in_E1_routes(nu, n),
    }
