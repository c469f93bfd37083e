"""Differential and boomerang spectra of power functions x -> x^d over GF(2^n).

Both spectra of a power function are determined by the row a = 1 of the
corresponding table, so only that row is ever computed.  The BCT row is
obtained from the pair system

    F(x + a) + F(y + a) = b,   F(x) + F(y) = b

which needs no compositional inverse.  With a = 1 it holds iff
Delta(x) = Delta(y) and b = F(x) + F(y), where Delta(x) = F(x+1) + F(x); so
grouping x by Delta(x) ("fibers") and histogramming F(x) + F(y) over pairs
inside each fiber gives the whole row in sum(|fiber|^2) work.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .field import FieldCtx, MAX_TABLE_N

NAIVE_MAX_N = 12
_CHUNK_ELEMS = 1 << 22


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class PowerFunction:
    ctx: FieldCtx
    d: int

    def __post_init__(self):
        q1 = self.ctx.order - 1
        if self.d < 1:
            raise SpectrumError(f"exponent must be positive, got {self.d}")
        if self.d % q1 == 0:
            raise SpectrumError(f"exponent {self.d} is a multiple of 2^n - 1: x^d is constant on nonzero x")
        if self.ctx.n > MAX_TABLE_N:
            raise SpectrumError(f"spectra need n <= {MAX_TABLE_N}, got {self.ctx.n}")
        object.__setattr__(self, "d", self.d % q1)

    @cached_property
    def table(self) -> np.ndarray:
        return self.ctx.pow_table(self.d)

    @cached_property
    def delta_values(self) -> np.ndarray:
        """Delta(x) = F(x+1) + F(x) for every x."""
        idx = np.arange(self.ctx.order, dtype=np.uint32)
        return self.table ^ self.table[idx ^ 1]

    def __call__(self, x: int) -> int:
        return int(self.table[x])


def _histogram(values: np.ndarray) -> dict[int, int]:
    vals, counts = np.unique(values, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


@dataclass(frozen=True)
class DiffSpectrum:
    omega: dict[int, int]
    delta: int = field(init=False)

    def __post_init__(self):
        omega = {int(i): int(c) for i, c in sorted(self.omega.items()) if c}
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "delta", max((i for i in omega if i > 0), default=0))

    @classmethod
    def from_row(cls, row: np.ndarray) -> DiffSpectrum:
        return cls(_histogram(row))

    def identities_hold(self, n: int) -> bool:
        q = 1 << n
        return sum(self.omega.values()) == q and sum(i * c for i, c in self.omega.items()) == q

    def pairs(self) -> list[list[int]]:
        return [[i, c] for i, c in self.omega.items()]

    @classmethod
    def from_pairs(cls, pairs) -> DiffSpectrum:
        return cls({int(i): int(c) for i, c in pairs})


@dataclass(frozen=True)
class BoomSpectrum:
    nu: dict[int, int]
    beta: int = field(init=False)

    def __post_init__(self):
        nu = {int(i): int(c) for i, c in sorted(self.nu.items()) if c}
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "beta", max((i for i in nu if i > 0), default=0))

    @classmethod
    def from_row(cls, row: np.ndarray) -> BoomSpectrum:
        # b ranges over nonzero elements only
        return cls(_histogram(row[1:]))

    def total(self) -> int:
        return sum(self.nu.values())

    def pairs(self) -> list[list[int]]:
        return [[i, c] for i, c in self.nu.items()]

    @classmethod
    def from_pairs(cls, pairs) -> BoomSpectrum:
        return cls({int(i): int(c) for i, c in pairs})


def ddt_row(F: PowerFunction) -> np.ndarray:
    """entry[b] = #{x : F(x) + F(x+1) = b}."""
    return np.bincount(F.delta_values, minlength=F.ctx.order).astype(np.int64)


def diff_spectrum(F: PowerFunction) -> DiffSpectrum:
    return DiffSpectrum.from_row(ddt_row(F))


def is_locally_apn(F: PowerFunction) -> bool:
    row = ddt_row(F)
    return int(row[2:].max()) == 2


# -- boomerang ---------------------------------------------------------------


def _scalar_table(F: PowerFunction) -> np.ndarray:
    ctx = F.ctx
    return np.array([ctx.pow(x, F.d) for x in range(ctx.order)], dtype=np.int64)


def bct_naive_row(F: PowerFunction, a: int = 1) -> np.ndarray:
    """BCT_F(a, b) for every b by enumerating all 2^(2n) pairs (x, y).

    Evaluates F by scalar square-and-multiply, independently of the table route
    used by ``bct_fiber``.  Entry 0 is meaningless and left as counted.
    """
    ctx = F.ctx
    if ctx.n > NAIVE_MAX_N:
        raise SpectrumError(f"bct_naive is limited to n <= {NAIVE_MAX_N}; use bct_fiber")
    if not 0 < a < ctx.order:
        raise SpectrumError("a must be a nonzero field element")
    T = _scalar_table(F)
    Ta = T[np.arange(ctx.order) ^ a]
    out = np.zeros(ctx.order, dtype=np.int64)
    rows = max(1, _CHUNK_ELEMS // ctx.order)
    for start in range(0, ctx.order, rows):
        stop = min(start + rows, ctx.order)
        lhs = Ta[start:stop, None] ^ Ta[None, :]
        rhs = T[start:stop, None] ^ T[None, :]
        out += np.bincount(rhs[lhs == rhs], minlength=ctx.order)
    return out


def bct_naive(F: PowerFunction, a: int, b: int) -> int:
    if a == 0 or b == 0:
        raise SpectrumError("bct_naive needs a != 0 and b != 0")
    return int(bct_naive_row(F, a)[b])


def fibers(F: PowerFunction) -> dict[int, np.ndarray]:
    """Map c -> sorted array of x with Delta(x) = c (nonempty fibers only)."""
    dv = F.delta_values
    order = np.argsort(dv, kind="stable")
    keys, starts = np.unique(dv[order], return_index=True)
    bounds = list(starts) + [len(order)]
    return {int(c): np.sort(order[bounds[i]: bounds[i + 1]]) for i, c in enumerate(keys)}


def _fiber_tasks(F: PowerFunction):
    dv = F.delta_values
    order = np.argsort(dv, kind="stable")
    _, starts, sizes = np.unique(dv[order], return_index=True, return_counts=True)
    tasks = []
    for size in np.unique(sizes):
        size = int(size)
        if size < 2:
            continue
        group = starts[sizes == size]
        per_chunk = max(1, _CHUNK_ELEMS // (size * size))
        if size * size <= _CHUNK_ELEMS:
            for i in range(0, len(group), per_chunk):
                tasks.append((group[i: i + per_chunk], size, None))
        else:
            rows = max(1, _CHUNK_ELEMS // size)
            for st in group:
                for r in range(0, size, rows):
                    tasks.append((np.array([st]), size, (r, min(r + rows, size))))
    return order, tasks


def _run_task(T: np.ndarray, order: np.ndarray, q: int, task) -> np.ndarray:
    group, size, rows = task
    members = order[group[:, None] + np.arange(size)]
    vals = T[members]
    if rows is None:
        prod = vals[:, :, None] ^ vals[:, None, :]
    else:
        prod = vals[:, rows[0]: rows[1], None] ^ vals[:, None, :]
    return np.bincount(prod.ravel(), minlength=q)


def bct_fiber(F: PowerFunction, jobs: int = 1) -> np.ndarray:
    """BCT_F(1, b) for every b via the fiber decomposition; entry 0 is zeroed."""
    q = F.ctx.order
    T = F.table
    order, tasks = _fiber_tasks(F)
    out = np.zeros(q, dtype=np.int64)
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(lambda t: _run_task(T, order, q, t), tasks):
                out += part
    else:
        for t in tasks:
            out += _run_task(T, order, q, t)
    out[0] = 0
    return out


def boom_spectrum(F: PowerFunction, jobs: int = 1) -> BoomSpectrum:
    return BoomSpectrum.from_row(bct_fiber(F, jobs=jobs))


def is_permutation(F: PowerFunction) -> bool:
    return len(np.unique(F.table)) == F.ctx.order


def bct_inverse_row(F: PowerFunction, a: int = 1) -> np.ndarray:
    """Classical BCT_F(a, b) through the compositional inverse; permutations only."""
    q = F.ctx.order
    T = F.table.astype(np.int64)
    if not is_permutation(F):
        raise SpectrumError("the inverse-based BCT needs a permutation")
    Tinv = np.empty(q, dtype=np.int64)
    Tinv[T] = np.arange(q)
    x = np.arange(q)
    out = np.zeros(q, dtype=np.int64)
    for b in range(1, q):
        out[b] = np.count_nonzero((Tinv[T ^ b] ^ Tinv[T[x ^ a] ^ b]) == a)
    return out
