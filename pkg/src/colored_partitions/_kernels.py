"""Array kernels for the counting side: product expansion and chain counting.

Each kernel exists twice, as a numba-compiled loop and as a vectorised
numpy routine.  The numpy path is used when numba is missing or when the
environment variable ``COLORED_PARTITIONS_NO_JIT`` is set to a non-empty
value other than ``0``.  Both paths must give identical integer arrays.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import InputError

_DISABLED = os.environ.get("COLORED_PARTITIONS_NO_JIT", "") not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def max_distinct(m: int) -> int:
    """Largest e with 1 + 2 + ... + e <= m (max number of distinct sizes)."""
    e = 0
    while (e + 1) * (e + 2) // 2 <= m:
        e += 1
    return e


# -- product expansion -------------------------------------------------------
#
# coef[e_1, ..., e_n, m] is the coefficient of a_1^e_1 ... a_n^e_n q^m in
#   prod_{i=1..n} prod_{k>=1} (1 + a_i q^k)
# truncated at q^M.  The array is stored flat; color i has stride
# ``strides[i]`` and the q-degree has stride 1.

def _product_numpy(n: int, M: int) -> np.ndarray:
    E = max_distinct(M)
    coef = np.zeros((E + 1,) * n + (M + 1,), dtype=np.int64)
    coef[(0,) * n + (0,)] = 1
    for i in range(n):
        for k in range(1, M + 1):
            src = [slice(None)] * n + [slice(0, M + 1 - k)]
            dst = [slice(None)] * n + [slice(k, M + 1)]
            src[i] = slice(0, E)
            dst[i] = slice(1, E + 1)
            coef[tuple(dst)] += coef[tuple(src)]
    return coef


def _product_loop(flat, E, M, n, strides):
    size = flat.shape[0]
    for i in range(n):
        si = strides[i]
        for k in range(1, M + 1):
            for idx in range(size - 1, -1, -1):
                v = flat[idx]
                if v == 0:
                    continue
                m = idx % (M + 1)
                e = (idx // si) % (E + 1)
                if e < E and m + k <= M:
                    flat[idx + si + k] += v
    return flat


def _product_jit(n: int, M: int) -> np.ndarray:
    E = max_distinct(M)
    shape = (E + 1,) * n + (M + 1,)
    flat = np.zeros(int(np.prod(shape)), dtype=np.int64)
    flat[0] = 1
    strides = np.array([(M + 1) * (E + 1) ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    _product_loop_c(flat, E, M, n, strides)
    return flat.reshape(shape)


# -- chain counting ------------------------------------------------------------
#
# Given parts 0..X-1 with sizes and a 0/1 matrix rel[x, y] saying y may
# follow x, f[x, r] counts chains that start with x and have total size r:
#   f[x, r] = [size_x == r] + sum_y rel[x, y] f[y, r - size_x]

def _chains_numpy(rel: np.ndarray, sizes: np.ndarray, M: int) -> np.ndarray:
    X = len(sizes)
    f = np.zeros((X, M + 1), dtype=np.int64)
    relm = rel.astype(np.int64)
    for r in range(1, M + 1):
        back = r - sizes
        ok = back >= 0
        g = np.zeros(X, dtype=np.int64)
        if ok.any():
            sub = f[:, np.where(ok, back, 0)]           # sub[y, x] = f[y, r - size_x]
            g = np.where(ok, np.einsum("xy,yx->x", relm, sub), 0)
        f[:, r] = g + (sizes == r)
    return f.sum(axis=0)


def _chains_loop(rel, sizes, M):
    X = sizes.shape[0]
    f = np.zeros((X, M + 1), dtype=np.int64)
    for r in range(1, M + 1):
        for x in range(X):
            b = r - sizes[x]
            if b < 0:
                continue
            acc = 1 if b == 0 else 0
            if b > 0:
                for y in range(X):
                    if rel[x, y]:
                        acc += f[y, b]
            f[x, r] = acc
    out = np.zeros(M + 1, dtype=np.int64)
    for x in range(X):
        for r in range(M + 1):
            out[r] += f[x, r]
    return out


if HAVE_NUMBA:
    _product_loop_c = njit(cache=False)(_product_loop)
    _chains_loop_c = njit(cache=False)(_chains_loop)
else:  # pragma: no cover
    _product_loop_c = _product_loop
    _chains_loop_c = _chains_loop


def _pick(backend):
    backend = backend or BACKEND
    if backend not in ("numba", "numpy"):
        raise InputError(f"unknown backend {backend!r}")
    return backend


def product_coefficients(n: int, M: int, backend: str | None = None) -> np.ndarray:
    backend = _pick(backend)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise InputError("numba backend requested but unavailable")
        return _product_jit(n, M)
    return _product_numpy(n, M)


def chain_counts(rel: np.ndarray, sizes: np.ndarray, M: int, backend: str | None = None) -> np.ndarray:
    """Number of chains of each total size 0..M (entry 0 is left at 0)."""
    backend = _pick(backend)
    rel = np.ascontiguousarray(rel, dtype=np.bool_)
    sizes = np.ascontiguousarray(sizes, dtype=np.int64)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise InputError("numba backend requested but unavailable")
        return _chains_loop_c(rel, sizes, M)
    return _chains_numpy(rel, sizes, M)
