"""Exact arithmetic in GF(2^n) with elements packed as ints in the polynomial basis.

For even ``n = 2m`` the context also exposes the subfield GF(2^m), the
conjugation ``a -> a^(2^m)``, the unit circle ``{v : v * conj(v) = 1}`` and the
polar decomposition ``a = u * v`` with ``u`` in the subfield and ``v`` on the
unit circle.

Scalar operations work on plain ints and cover every n in [2, 30].  The
vectorised helpers (``pow_table``, ``vmul``, ...) run on numpy arrays through
exp/log tables built on first use, which caps them at ``MAX_TABLE_N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import gf2poly
from ._moduli import DEFAULT_MODULI

MIN_N = 2
MAX_N = 30
MAX_TABLE_N = 24


class DomainError(ValueError):
    """An argument lies outside the domain of a field operation."""


def _prime_factors(k: int) -> list[int]:
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def _parity(arr: np.ndarray) -> np.ndarray:
    x = arr.astype(np.uint64)
    for shift in (32, 16, 8, 4, 2, 1):
        x ^= x >> np.uint64(shift)
    return (x & np.uint64(1)).astype(np.uint8)


@dataclass(frozen=True)
class FieldCtx:
    n: int
    modulus: int

    def __post_init__(self):
        if not MIN_N <= self.n <= MAX_N:
            raise DomainError(f"n must lie in [{MIN_N}, {MAX_N}], got {self.n}")
        if gf2poly.degree(self.modulus) != self.n:
            raise DomainError(
                f"modulus 0x{self.modulus:x} has degree {gf2poly.degree(self.modulus)}, expected {self.n}"
            )
        factor = gf2poly.smallest_factor_degree(self.modulus)
        if factor is not None:
            raise DomainError(
                f"modulus 0x{self.modulus:x} is reducible: it has an irreducible factor of degree {factor}"
            )

    # -- basic shape -------------------------------------------------------

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def m(self) -> int | None:
        return self.n // 2 if self.n % 2 == 0 else None

    def _need_even(self) -> int:
        if self.n % 2:
            raise DomainError(f"operation needs an even extension degree, got n = {self.n}")
        return self.n // 2

    def elements(self) -> range:
        return range(self.order)

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise DomainError(f"{a} is not an element of GF(2^{self.n})")
        return a

    # -- scalar arithmetic -------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return gf2poly.polymod(gf2poly.clmul(a, b), self.modulus)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DomainError("negative power of zero")
            return 1 if e == 0 else 0
        e %= self.order - 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, i: int) -> int:
        """a^(2^i)."""
        for _ in range(i % self.n):
            a = self.mul(a, a)
        return a

    def trace_abs(self, a: int) -> int:
        acc = 0
        t = a
        for _ in range(self.n):
            acc ^= t
            t = self.mul(t, t)
        if acc not in (0, 1):
            raise AssertionError(f"trace landed outside GF(2): {acc}")
        return acc

    # -- even-degree structure ---------------------------------------------

    def conjugate(self, a: int) -> int:
        return self.frobenius(a, self._need_even())

    def in_subfield(self, a: int) -> bool:
        return self.conjugate(a) == a

    def subfield_trace(self, a: int) -> int:
        m = self._need_even()
        if not self.in_subfield(a):
            raise DomainError(f"{a} is not in the subfield GF(2^{m})")
        acc = 0
        t = a
        for _ in range(m):
            acc ^= t
            t = self.mul(t, t)
        if acc not in (0, 1):
            raise AssertionError(f"subfield trace landed outside GF(2): {acc}")
        return acc

    def in_unit_circle(self, v: int) -> bool:
        if v == 0:
            return False
        return self.mul(v, self.conjugate(v)) == 1

    def subfield_sqrt(self, y: int) -> int:
        m = self._need_even()
        return self.frobenius(y, m - 1)

    def polar_decompose(self, a: int) -> tuple[int, int]:
        """Split nonzero ``a`` as ``u * v`` with ``u`` in GF(2^m)* and ``v`` on the unit circle."""
        self._need_even()
        if a == 0:
            raise DomainError("zero has no polar decomposition")
        u = self.subfield_sqrt(self.mul(a, self.conjugate(a)))
        v = self.mul(a, self.inv(u))
        return u, v

    # -- tables and vectorised helpers ---------------------------------------

    @cached_property
    def generator(self) -> int:
        """Smallest (as an int) primitive element."""
        q1 = self.order - 1
        exps = [q1 // p for p in _prime_factors(q1)]
        for g in range(2, self.order):
            if all(self.pow(g, e) != 1 for e in exps):
                return g
        raise AssertionError("no primitive element found")

    def vmul_const(self, arr: np.ndarray, c: int) -> np.ndarray:
        """Table-free product of every entry of ``arr`` with the constant ``c``."""
        a = np.asarray(arr, dtype=np.uint64)
        r = np.zeros_like(a)
        i = 0
        while c:
            if c & 1:
                r ^= a << np.uint64(i)
            c >>= 1
            i += 1
        for pos in range(2 * self.n - 2, self.n - 1, -1):
            bit = (r >> np.uint64(pos)) & np.uint64(1)
            r ^= bit * np.uint64(self.modulus << (pos - self.n))
        return r

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        if self.n > MAX_TABLE_N:
            raise DomainError(f"exp/log tables are limited to n <= {MAX_TABLE_N}")
        q1 = self.order - 1
        g = self.generator
        block = min(q1, 1 << 12)
        head = np.empty(block, dtype=np.uint64)
        t = 1
        for i in range(block):
            head[i] = t
            t = self.mul(t, g)
        exp = np.empty(q1, dtype=np.uint32)
        step = self.pow(g, block)
        cur = head
        for start in range(0, q1, block):
            stop = min(start + block, q1)
            exp[start:stop] = cur[: stop - start]
            cur = self.vmul_const(cur, step)
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(q1, dtype=np.int64)
        if exp[0] != 1 or len(np.unique(exp)) != q1:
            raise AssertionError("generator search produced a non-primitive element")
        return exp, log

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    def pow_table(self, d: int) -> np.ndarray:
        """``x^d`` for every field element x (with 0^d = 0 for d > 0), as uint32."""
        exp, log = self._tables
        q1 = self.order - 1
        out = np.zeros(self.order, dtype=np.uint32)
        if d == 0:
            out[:] = 1
            return out
        out[1:] = exp[(log[1:] * (d % q1)) % q1]
        return out

    def vmul(self, a, b) -> np.ndarray:
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = exp[(log[a] + log[b]) % (self.order - 1)].astype(np.int64)
        return np.where((a == 0) | (b == 0), 0, prod)

    def vinv(self, a) -> np.ndarray:
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DomainError("zero has no multiplicative inverse")
        q1 = self.order - 1
        return exp[(q1 - log[a]) % q1].astype(np.int64)

    def vpow(self, a, e: int) -> np.ndarray:
        exp, log = self._tables
        a = np.asarray(a, dtype=np.int64)
        q1 = self.order - 1
        if e == 0:
            return np.ones_like(a)
        res = exp[(log[a] * (e % q1)) % q1].astype(np.int64)
        return np.where(a == 0, 0, res)

    @cached_property
    def trace_mask(self) -> int:
        """Bit i set iff Tr(x^i) = 1; the trace is then a masked parity."""
        return sum(self.trace_abs(1 << i) << i for i in range(self.n))

    def vtrace(self, a) -> np.ndarray:
        return _parity(np.asarray(a, dtype=np.uint64) & np.uint64(self.trace_mask))

    @cached_property
    def _conj_basis(self) -> np.ndarray:
        m = self._need_even()
        return np.array([self.frobenius(1 << i, m) for i in range(self.n)], dtype=np.int64)

    def vconjugate(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros_like(a)
        for i, img in enumerate(self._conj_basis):
            out ^= np.where((a >> i) & 1, img, 0)
        return out

    def subfield_elements(self) -> np.ndarray:
        """GF(2^m) inside GF(2^(2m)), sorted."""
        m = self._need_even()
        step = (1 << m) + 1
        nz = self.exp_table[np.arange(0, self.order - 1, step)].astype(np.int64)
        return np.sort(np.concatenate([[0], nz]))

    def unit_circle(self) -> np.ndarray:
        """The 2^m + 1 elements v with v^(2^m + 1) = 1, sorted."""
        m = self._need_even()
        step = (1 << m) - 1
        return np.sort(self.exp_table[np.arange(0, self.order - 1, step)].astype(np.int64))

    def __repr__(self) -> str:
        return f"GF(2^{self.n}) mod {gf2poly.to_str(self.modulus)}"


@lru_cache(maxsize=None)
def make_field(n: int, modulus: int | None = None) -> FieldCtx:
    """Field context for GF(2^n); the default modulus is the lexicographically smallest irreducible."""
    if not MIN_N <= n <= MAX_N:
        raise DomainError(f"n must lie in [{MIN_N}, {MAX_N}], got {n}")
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    return FieldCtx(n, modulus)
