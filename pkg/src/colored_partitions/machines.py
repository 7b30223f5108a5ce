"""The merging machine ``phi`` (O -> E) and the splitting machine ``psi`` (E -> O).

phi
    Step 1: merge the first troublesome pair of consecutive primary parts
            into a secondary part, then go to Step 2.  Stop when there is none.
    Step 2: while some adjacent (primary, secondary) pair is not ordered by
            ``gg``, take the leftmost one and cross it:
            (x, z) -> (z + 1, x - 1).  Then return to Step 1.

psi
    Step 1: look at the rightmost secondary part z.  If the next part y is
            primary and beta(z) is not above y, cross: (z, y) -> (y + 1, z - 1),
            and repeat.  Otherwise go to Step 2.
    Step 2: split z into its halves and return to Step 1.  Stop when no
            secondary part is left.

Both machines record an event trace and the triplet decomposition of the
working sequence at the documented checkpoints.  ``psi`` also tags every
primary part and every half with its index in the half-expanded sequence so
that final positions (``theta``) can be read off.

Indices in traces are 1-based positions in the working sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .errors import InputError, InternalError
from .parts import Part, alpha, beta, gg, is_troublesome, merge, succ
from .partitions import in_E, in_O


class Event(NamedTuple):
    kind: str          # "merge" | "cross" | "split"
    index: int         # 1-based position of the left element involved
    detail: tuple = ()


class Triplet(NamedTuple):
    head: tuple    # ends with the last secondary part, or is empty
    middle: tuple
    tail: tuple


@dataclass
class MachineTrace:
    machine: str
    source: tuple
    result: tuple = ()
    events: list = field(default_factory=list)
    triplets: list = field(default_factory=list)
    theta: tuple = ()          # psi only; theta[x] for x = 0 .. p+2s+1

    def counts(self) -> dict:
        out = {"merge": 0, "cross": 0, "split": 0}
        for e in self.events:
            out[e.kind] += 1
        return out


def _last_secondary(seq) -> int:
    for t in range(len(seq) - 1, -1, -1):
        if seq[t].color.j:
            return t
    return -1


def _triplet(seq, cut: int | None) -> Triplet:
    """head = through the last secondary part; middle ends at ``cut``."""
    h = _last_secondary(seq) + 1
    if cut is None:
        return Triplet(tuple(seq[:h]), tuple(seq[h:]), ())
    if cut < h:
        raise InternalError("troublesome pair found inside the head of a triplet")
    return Triplet(tuple(seq[:h]), tuple(seq[h:cut + 1]), tuple(seq[cut + 1:]))


def _first_troublesome(seq) -> int:
    for t in range(len(seq) - 1):
        x, y = seq[t], seq[t + 1]
        if not x.color.j and not y.color.j and is_troublesome(x, y):
            return t
    return -1


def _first_bad_crossing(seq) -> int:
    for t in range(len(seq) - 1):
        x, y = seq[t], seq[t + 1]
        if not x.color.j and y.color.j and not gg(x, y):
            return t
    return -1


def phi_trace(lam: Sequence[Part], n: int, check: bool = True) -> MachineTrace:
    lam = tuple(lam)
    if check and not in_O(lam, n):
        raise InputError("phi expects a partition in O")
    seq = list(lam)
    tr = MachineTrace("phi", lam)
    budget = len(seq) ** 2 + len(seq) + 1
    while True:
        t = _first_troublesome(seq)
        tr.triplets.append(_triplet(seq, t if t >= 0 else None))
        if t < 0:
            break
        seq[t:t + 2] = [merge(seq[t], seq[t + 1])]
        tr.events.append(Event("merge", t + 1))
        while True:
            c = _first_bad_crossing(seq)
            if c < 0:
                break
            x, z = seq[c], seq[c + 1]
            seq[c], seq[c + 1] = Part(z.size + 1, z.color), Part(x.size - 1, x.color)
            tr.events.append(Event("cross", c + 1))
            budget -= 1
            if budget < 0:
                raise InternalError("phi did not terminate within its step bound")
    tr.result = tuple(seq)
    return tr


def phi(lam: Sequence[Part], n: int) -> tuple:
    """Image of a partition of O under the merging machine."""
    return phi_trace(lam, n).result


def initial_tags(nu: Sequence[Part]) -> list[int]:
    """Index of every part in the half-expanded sequence (upper half for secondaries)."""
    tags, x = [], 1
    for z in nu:
        tags.append(x)
        x += 2 if z.color.j else 1
    return tags


def psi_trace(nu: Sequence[Part], n: int, check: bool = True) -> MachineTrace:
    nu = tuple(nu)
    if check and not in_E(nu, n):
        raise InputError("psi expects a partition in E")
    seq = list(nu)
    tags = initial_tags(seq)
    width = tags[-1] + (2 if seq and seq[-1].color.j else 1) if seq else 1
    tr = MachineTrace("psi", nu)
    i = _last_secondary(seq)
    tr.triplets.append(_triplet(seq, None))
    budget = len(seq) * (len(seq) + 2) + 1
    while i >= 0:
        z = seq[i]
        if i + 1 < len(seq):
            y = seq[i + 1]
            if not y.color.j and not succ(beta(z), y):
                seq[i], seq[i + 1] = Part(y.size + 1, y.color), Part(z.size - 1, z.color)
                tags[i], tags[i + 1] = tags[i + 1], tags[i]
                tr.events.append(Event("cross", i + 1, (tags[i + 1], tags[i])))
                i += 1
                budget -= 1
                if budget < 0:
                    raise InternalError("psi did not terminate within its step bound")
                continue
        a, b = alpha(z), beta(z)
        if a.size < 1 or b.size < 1:
            raise InternalError(f"psi produced an empty half from {z}")
        seq[i:i + 1] = [a, b]
        tg = tags[i]
        tags[i:i + 1] = [tg, tg + 1]
        tr.events.append(Event("split", i + 1, (tg,)))
        tr.triplets.append(_triplet(seq, i))
        i = _last_secondary(seq[:i])
    tr.result = tuple(seq)
    theta = [0] * (width + 1)
    for pos, tg in enumerate(tags, start=1):
        theta[tg] = pos
    theta[width] = width
    tr.theta = tuple(theta)
    return tr


def psi(nu: Sequence[Part], n: int) -> tuple:
    """Image of a partition of E under the splitting machine."""
    return psi_trace(nu, n).result


def phi_triplets(lam, n) -> list[Triplet]:
    """Triplet before each pass through Step 1 of phi (the last one ends phi)."""
    return phi_trace(lam, n).triplets


def psi_triplets(nu, n) -> list[Triplet]:
    """Triplet before the first pass and after every split of psi."""
    return psi_trace(nu, n).triplets


def check_triplets(trips: list[Triplet], n: int, machine: str = "phi") -> None:
    """Raise ``InternalError`` if the triplet sequence breaks its invariants.

    Every head lies in E and ends on a secondary part, every middle lies in
    O and E, every tail lies in O, the head is ordered above the middle,
    and from one checkpoint to the next the head grows while the tail
    shrinks (for phi; psi runs the same sequence backwards).
    """
    seq = trips if machine == "phi" else trips[::-1]
    for u, (d, g, m) in enumerate(seq):
        if not in_E(d, n) or (d and not d[-1].color.j):
            raise InternalError(f"bad head at checkpoint {u + 1}")
        if sum(1 for x in d if x.color.j) != u:
            raise InternalError(f"head at checkpoint {u + 1} has the wrong number of secondary parts")
        if not (in_O(g, n) and in_E(g, n)) or not in_O(m, n):
            raise InternalError(f"bad middle or tail at checkpoint {u + 1}")
        if d and g and not gg(d[-1], g[0]):
            raise InternalError(f"head not above middle at checkpoint {u + 1}")
        if u + 1 < len(seq):
            d2, _, m2 = seq[u + 1]
            if d2[:len(d)] != d or len(d2) <= len(d):
                raise InternalError("heads do not grow")
            if m and (len(m2) >= len(m) or m[len(m) - len(m2):] != m2):
                raise InternalError("tails do not shrink")
    if seq and seq[-1].tail:
        raise InternalError("last checkpoint must have an empty tail")
