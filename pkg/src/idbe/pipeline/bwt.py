"""Burrows-Wheeler transform over cyclic rotations of a block."""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np


@dataclass(frozen=True)
class BwtBlock:
    data: bytes
    primary_index: int


def rotation_order(block) -> np.ndarray:
    """Indices of the cyclic rotations of ``block`` in sorted order.

    Prefix doubling: after the pass with shift ``k`` every rotation is ranked by
    its first ``2k`` bytes. Equal rotations (periodic blocks) keep tied ranks
    and are ordered by start position.
    """
    s = np.frombuffer(bytes(block), dtype=np.uint8)
    n = len(s)
    idx = np.arange(n, dtype=np.int64)
    rank = s.astype(np.int64)
    order = np.argsort(rank, kind="stable")
    n_ranks = int(rank.max()) + 1 if n else 0
    k = 1
    while k < n:
        key = rank * n_ranks + rank[(idx + k) % n]
        order = np.argsort(key, kind="stable")
        sorted_key = key[order]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order[0]] = 0
        new_rank[order[1:]] = np.cumsum(sorted_key[1:] != sorted_key[:-1])
        rank = new_rank
        n_ranks = int(rank[order[-1]]) + 1
        if n_ranks == n:
            break
        k *= 2
    return order


def bwt_forward(block) -> BwtBlock:
    """Last column of the sorted rotation matrix plus the row of the block itself.

    >>> bwt_forward(b"banana")
    BwtBlock(data=b'nnbaaa', primary_index=3)
    """
    block = bytes(block)
    if not block:
        raise ValueError("cannot transform an empty block")
    order = rotation_order(block)
    s = np.frombuffer(block, dtype=np.uint8)
    last = s[(order - 1) % len(s)]
    primary = int(np.flatnonzero(order == 0)[0])
    return BwtBlock(last.tobytes(), primary)


@numba.njit(cache=True)
def _walk(last, succ, primary):
    n = len(last)
    out = np.empty(n, dtype=np.uint8)
    j = succ[primary]
    for p in range(n):
        out[p] = last[j]
        j = succ[j]
    return out


def bwt_inverse(b: BwtBlock) -> bytes:
    last = np.frombuffer(bytes(b.data), dtype=np.uint8)
    n = len(last)
    if n == 0:
        if b.primary_index != 0:
            raise ValueError("primary index out of range for empty block")
        return b""
    if not 0 <= b.primary_index < n:
        raise ValueError(f"primary index {b.primary_index} out of range for {n} bytes")
    # stable sort of the last column maps first-column rows back to last-column rows
    succ = np.argsort(last, kind="stable").astype(np.int64)
    return _walk(last, succ, b.primary_index).tobytes()


def bwt_bruteforce(block: bytes) -> BwtBlock:
    """Reference transform that materializes and sorts every rotation."""
    n = len(block)
    rotations = sorted(range(n), key=lambda i: (block[i:] + block[:i], i))
    return BwtBlock(bytes(block[i - 1] for i in rotations), rotations.index(0))
