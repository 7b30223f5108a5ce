"""Counting functions and the identity / inequality verifiers.

For a color product C (an exponent vector) and a size m:

* U(C, m) -- partitions in O
* V(C, m) -- partitions in E
* W(C, m) -- partitions in E that are images of phi

The identity says U = W = [a^C q^m] prod_i prod_k (1 + a_i q^k); the
inequality says U <= V, strictly somewhere once n >= 4.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import _kernels
from .bridge import in_E1
from .colors import check_palette
from .errors import InputError
from .parts import Part
from .partitions import color_product, enumerate_set, in_E, in_O, total


# -- series ------------------------------------------------------------------

@dataclass
class TruncatedSeries:
    """Sparse multivariate series: {(exponents, q-degree): coefficient}."""

    n: int
    order: int
    coeffs: dict

    def coefficient(self, C: Sequence[int], m: int) -> int:
        return self.coeffs.get((tuple(C), m), 0)

    def degree_totals(self) -> list[int]:
        out = [0] * (self.order + 1)
        for (_, m), c in self.coeffs.items():
            out[m] += c
        return out


def _series_exact(n: int, M: int) -> dict:
    cur = {((0,) * n, 0): 1}
    for i in range(n):
        for k in range(1, M + 1):
            nxt = dict(cur)
            for (e, m), c in cur.items():
                if m + k <= M:
                    e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                    nxt[(e2, m + k)] = nxt.get((e2, m + k), 0) + c
            cur = nxt
    return cur


def _univariate_bound(n: int, M: int) -> int:
    """Largest coefficient of prod_k (1 + q^k)^n up to q^M, exactly."""
    poly = [1] + [0] * M
    for _ in range(n):
        for k in range(1, M + 1):
            for m in range(M, k - 1, -1):
                poly[m] += poly[m - k]
    return max(poly)


_DENSE_CELLS = 5_000_000


def product_series(n: int, M: int, exact: bool = False, backend: str | None = None) -> TruncatedSeries:
    """Truncation of prod_i prod_k (1 + a_i q^k) at q^M.

    Uses the dense int64 kernel when the array is small and every
    coefficient provably fits; otherwise expands with Python integers.
    """
    check_palette(n)
    if not isinstance(M, int) or M < 0:
        raise InputError("truncation order must be a non-negative integer")
    E = _kernels.max_distinct(M)
    dense_ok = (not exact and (E + 1) ** n * (M + 1) <= _DENSE_CELLS
                and _univariate_bound(n, M) < 2 ** 62)
    if not dense_ok:
        return TruncatedSeries(n, M, _series_exact(n, M))
    arr = _kernels.product_coefficients(n, M, backend)
    coeffs = {}
    for idx in zip(*arr.nonzero()):
        coeffs[(tuple(int(v) for v in idx[:-1]), int(idx[-1]))] = int(arr[idx])
    return TruncatedSeries(n, M, coeffs)


# -- counts ------------------------------------------------------------------

def chain_totals(n: int, M: int, ground: str = "E", backend: str | None = None) -> list[int]:
    """Number of partitions of each size 0..M in a ground set, by dynamic
    programming over the successor relation instead of enumeration."""
    import numpy as np
    from .parts import gg, succ
    from .partitions import part_universe

    pool = part_universe(n, M, ground)
    rel_fn = succ if ground == "O" else gg
    rel = np.array([[rel_fn(x, y) for y in pool] for x in pool], dtype=np.bool_)
    sizes = np.array([x.size for x in pool], dtype=np.int64)
    out = [int(v) for v in _kernels.chain_counts(rel, sizes, M, backend)]
    out[0] = 1
    return out


def _tally(n, m, ground, route=None, color_filter=None) -> Counter:
    c: Counter = Counter()
    for lam in enumerate_set(n, m, ground, color_filter):
        if route is not None and not in_E1(lam, n, route, check=False):
            continue
        c[color_product(lam, n)] += 1
    return c


def count_U(n: int, C: Sequence[int], m: int) -> int:
    return _tally(n, m, "O", color_filter=tuple(C))[tuple(C)]


def count_V(n: int, C: Sequence[int], m: int) -> int:
    return _tally(n, m, "E", color_filter=tuple(C))[tuple(C)]


def count_W(n: int, C: Sequence[int], m: int, route: str = "cond3") -> int:
    return _tally(n, m, "E", route=route, color_filter=tuple(C))[tuple(C)]


def _stratum(args):
    n, m, route = args
    return m, _tally(n, m, "O"), _tally(n, m, "E"), _tally(n, m, "E", route=route)


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def _strata(n, M, route, jobs):
    tasks = [(n, m, route) for m in range(M + 1)]
    jobs = jobs or default_jobs()
    if jobs <= 1:
        return [_stratum(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return sorted(ex.map(_stratum, tasks), key=lambda r: r[0])


@dataclass
class CountReport:
    n: int
    max_q: int
    kind: str
    route: str
    rows: list = field(default_factory=list)        # one dict per (C, m)
    failures: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "colors": self.n, "max_q": self.max_q, "route": self.route,
            "ok": self.ok, "checked": len(self.rows), "failures": self.failures,
            "witness": self.witness, "rows": self.rows,
        }


def verify_identity(n: int, M: int, route: str = "all", jobs: int | None = None) -> CountReport:
    """Check U = W = series coefficient for every color product and m <= M."""
    check_palette(n)
    series = product_series(n, M)
    rep = CountReport(n, M, "identity", route)
    for m, U, V, W in _strata(n, M, route, jobs):
        keys = set(U) | set(W) | {C for (C, mm) in series.coeffs if mm == m}
        for C in sorted(keys):
            row = {"C": list(C), "m": m, "U": U[C], "V": V[C], "W": W[C],
                   "series": series.coefficient(C, m)}
            rep.rows.append(row)
            if not (row["U"] == row["W"] == row["series"]):
                rep.failures.append(row)
    return rep


def verify_inequality(n: int, M: int, jobs: int | None = None) -> CountReport:
    """Check U <= V everywhere and report the first strict case with a witness."""
    check_palette(n)
    rep = CountReport(n, M, "inequality", "cond3")
    for m, U, V, W in _strata(n, M, "cond3", jobs):
        for C in sorted(set(U) | set(V)):
            row = {"C": list(C), "m": m, "U": U[C], "V": V[C], "W": W[C]}
            rep.rows.append(row)
            if U[C] > V[C]:
                rep.failures.append(row)
            elif U[C] < V[C] and rep.witness is None:
                nu = next(x for x in enumerate_set(n, m, "E", C)
                          if not in_E1(x, n, "cond3", check=False))
                rep.witness = {"C": list(C), "m": m, "U": U[C], "V": V[C],
                               "outside_image": [{"size": p.size, "color": str(p.color)} for p in nu]}
    return rep


# -- the mod 12 specialisation (four colors) ---------------------------------

WEIGHTS_12 = (8, 4, 2, 1)


def specialize_12(parts: Sequence[Part]) -> tuple[int, ...]:
    """Send k_{a_i} to 12k - w_i and k_{a_i a_j} to 12k - w_i - w_j, w = (8, 4, 2, 1)."""
    out = []
    for x in parts:
        c = x.color
        if (c.j or c.i) > 4:
            raise InputError("the mod 12 specialisation needs four colors")
        w = WEIGHTS_12[c.i - 1] + (WEIGHTS_12[c.j - 1] if c.j else 0)
        out.append(12 * x.size - w)
    return tuple(sorted(out, reverse=True))


def _size_bound_12(N: int) -> int:
    # every specialised part v = 12k - w has v >= 4 and k <= (v + 12) / 12
    return (N + 12 * (N // 4)) // 12


def corollary12(N: int) -> dict:
    """Ordinary partitions of N on both sides of the mod 12 identity."""
    if not isinstance(N, int) or N < 0:
        raise InputError("size must be a non-negative integer")
    top = _size_bound_12(N)
    odd_side, gap_side = [], []
    for m in range(top + 1):
        for lam in enumerate_set(4, m, "O"):
            if sum(specialize_12(lam)) == N:
                odd_side.append(specialize_12(lam))
        for nu in enumerate_set(4, m, "E"):
            v = specialize_12(nu)
            if sum(v) == N and in_E1(nu, 4, "cond3", check=False):
                gap_side.append(v)
    return {"size": N, "O": sorted(odd_side, reverse=True), "E1": sorted(gap_side, reverse=True)}


def gap_conditions_hold(parts: Sequence[int]) -> bool:
    """Congruence and difference conditions describing the image side.

    Parts avoid residues 1, 5 mod 12 and the values 2, 3, 6, 7, 9.  Adjacent
    parts differ by more than 12, except a difference of 9 between parts
    congruent to +-3 mod 12 whose part two places down is at least 24 smaller
    (waived for the tail 27, 18, 4), or a difference of exactly 12 from a
    part congruent to -8, -4, -2 or -1 mod 12.
    """
    p = list(parts)
    if any(x % 12 in (1, 5) or x in (2, 3, 6, 7, 9) or x <= 0 for x in p):
        return False
    for t in range(len(p) - 1):
        d = p[t] - p[t + 1]
        if d > 12:
            continue
        if d == 12 and p[t] % 12 in (4, 8, 10, 11):
            continue
        if d == 9 and p[t] % 12 in (3, 9):
            if t + 2 >= len(p) or p[t] - p[t + 2] >= 24 or p[t:t + 3] == [27, 18, 4]:
                continue
        return False
    return True


def ordinary_partitions(N: int, largest: int | None = None):
    """Plain integer partitions of N, parts weakly decreasing."""
    largest = N if largest is None else largest
    if N == 0:
        yield ()
        return
    for k in range(min(N, largest), 0, -1):
        for rest in ordinary_partitions(N - k, k):
            yield (k,) + rest
