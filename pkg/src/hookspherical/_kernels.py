"""Class histogram of ``g * h`` over a Young subgroup.

This is the only hot loop in the package: the brute-force spherical average
visits every h in G_n (up to 10! elements). Both backends return the same
``{cycle_type: count}`` dict with exact integer counts.

Backend selection: numba when importable, unless the environment variable
``HOOKSPHERICAL_DISABLE_NUMBA`` is set to a non-empty value other than ``0``.
"""
from __future__ import annotations

import os
from collections import Counter
from math import factorial

import numpy as np

from .permgroup import BlockStructure, Permutation, block_permutation_tables, partitions

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_DISABLED = os.environ.get("HOOKSPHERICAL_DISABLE_NUMBA", "") not in ("", "0")

NUMBA_AVAILABLE = numba is not None
DEFAULT_BACKEND = "numba" if NUMBA_AVAILABLE and not _DISABLED else "numpy"

# (N+1)**N must fit in int64 for the packed cycle-type key
_NUMBA_MAX_N = 15
_CHUNK = 1 << 16


def _flat_tables(blocks: BlockStructure):
    tables = [np.asarray(t, dtype=np.int64).reshape(len(t), s)
              for t, s in zip(block_permutation_tables(blocks), blocks.sizes)]
    offsets = np.zeros(len(tables), dtype=np.int64)
    acc = 0
    for j, t in enumerate(tables):
        offsets[j] = acc
        acc += t.size
    flat = np.concatenate([t.ravel() for t in tables]) if tables else np.zeros(0, np.int64)
    return tables, flat, offsets


def _radices(blocks: BlockStructure) -> np.ndarray:
    return np.array([factorial(s) for s in blocks.sizes], dtype=np.int64)


def _packed_key(ct, n: int) -> int:
    key = 0
    for length in ct:
        key += (n + 1) ** (length - 1)
    return key


if numba is not None:

    @numba.njit(cache=True)
    def _histogram_kernel(g, starts, sizes, flat, offsets, radices, powers, keys, order):
        n = g.shape[0]
        p = sizes.shape[0]
        counts = np.zeros(keys.shape[0], dtype=np.int64)
        h = np.empty(n, dtype=np.int64)
        w = np.empty(n, dtype=np.int64)
        seen = np.empty(n, dtype=np.bool_)
        for idx in range(order):
            rem = idx
            for j in range(p - 1, -1, -1):
                digit = rem % radices[j]
                rem //= radices[j]
                s = sizes[j]
                base = offsets[j] + digit * s
                for t in range(s):
                    h[starts[j] + t] = starts[j] + flat[base + t]
            for i in range(n):
                w[i] = g[h[i]]
                seen[i] = False
            key = 0
            for i in range(n):
                if not seen[i]:
                    length = 0
                    k = i
                    while not seen[k]:
                        seen[k] = True
                        k = w[k]
                        length += 1
                    key += powers[length - 1]
            pos = np.searchsorted(keys, key)
            if pos >= keys.shape[0] or keys[pos] != key:
                raise ValueError("cycle type key not found")
            counts[pos] += 1
        return counts


def _histogram_numba(g: Permutation, blocks: BlockStructure) -> dict[tuple[int, ...], int]:
    n = blocks.N
    cts = list(partitions(n))
    keyed = sorted((_packed_key(ct, n), ct) for ct in cts)
    keys = np.array([k for k, _ in keyed], dtype=np.int64)
    powers = np.array([(n + 1) ** i for i in range(n)], dtype=np.int64)
    _, flat, offsets = _flat_tables(blocks)
    counts = _histogram_kernel(
        np.asarray(g.images, dtype=np.int64),
        np.asarray(blocks.starts, dtype=np.int64),
        np.asarray(blocks.sizes, dtype=np.int64),
        flat, offsets, _radices(blocks), powers, keys, blocks.order,
    )
    return {ct: int(c) for (_, ct), c in zip(keyed, counts) if c}


def _cycle_length_counts(w: np.ndarray) -> np.ndarray:
    """Rows of ``w`` are permutations; returns per-row counts of cycles of each length."""
    m, n = w.shape
    rows = np.arange(m)[:, None]
    ident = np.arange(n)[None, :]
    length = np.zeros((m, n), dtype=np.int64)
    cur = w.copy()
    for t in range(1, n + 1):
        hit = (cur == ident) & (length == 0)
        length[hit] = t
        if t < n:
            cur = w[rows, cur]
    out = np.zeros((m, n + 1), dtype=np.int64)
    for L in range(1, n + 1):
        out[:, L] = (length == L).sum(axis=1) // L
    return out


def _histogram_numpy(g: Permutation, blocks: BlockStructure) -> dict[tuple[int, ...], int]:
    n = blocks.N
    tables, _, _ = _flat_tables(blocks)
    radices = _radices(blocks)
    gi = np.asarray(g.images, dtype=np.int64)
    total: Counter = Counter()
    order = blocks.order
    for lo in range(0, order, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, order), dtype=np.int64)
        h = np.empty((idx.size, n), dtype=np.int64)
        rem = idx.copy()
        for j in range(blocks.p - 1, -1, -1):
            digit = rem % radices[j]
            rem //= radices[j]
            start, size = blocks.starts[j], blocks.sizes[j]
            h[:, start:start + size] = start + tables[j][digit]
        w = gi[h]
        counts = _cycle_length_counts(w)
        uniq, mult = np.unique(counts, axis=0, return_counts=True)
        for row, c in zip(uniq, mult):
            ct = []
            for L in range(n, 0, -1):
                ct.extend([L] * int(row[L]))
            total[tuple(ct)] += int(c)
    return dict(total)


def class_histogram(g: Permutation, blocks: BlockStructure,
                    backend: str | None = None) -> dict[tuple[int, ...], int]:
    """Map each cycle type to the number of h in G_n with ``g * h`` of that type."""
    if len(g) != blocks.N:
        raise ValueError(f"size mismatch: g acts on {len(g)} points, blocks sum to {blocks.N}")
    backend = backend or DEFAULT_BACKEND
    if backend == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not importable")
        if blocks.N <= _NUMBA_MAX_N:
            return _histogram_numba(g, blocks)
        return _histogram_numpy(g, blocks)
    if backend == "numpy":
        return _histogram_numpy(g, blocks)
    raise ValueError(f"unknown backend {backend!r}")
