"""Parameters of the Niho family x^(s(2^m-1)+1) with s = (2^k+1)^(-1) mod 2^m+1."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class ParameterError(ValueError):
    pass


def inv_mod(a: int, modulus: int) -> int:
    """Inverse of ``a`` modulo ``modulus`` by the extended Euclidean algorithm."""
    if modulus < 2:
        raise ParameterError(f"modulus must be >= 2, got {modulus}")
    old_r, r = a % modulus, modulus
    old_x, x = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
    if old_r != 1:
        raise ParameterError(f"{a} is not invertible modulo {modulus}: gcd = {old_r}")
    return old_x % modulus


def gcd_criterion(m: int, k: int) -> bool:
    """gcd(2^k+1, 2^m+1) == 1, decided by the parity of m/g and k/g with g = gcd(k, m)."""
    g = gcd(k, m)
    return (m // g) % 2 == 0 or (k // g) % 2 == 0


@dataclass(frozen=True)
class NihoParams:
    m: int
    k: int
    s: int
    d: int

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def k_canonical(self) -> int:
        # 2^k mod 2^m+1 has period 2m in k
        return self.k % (2 * self.m) or 2 * self.m


def build_niho(m: int, k: int) -> NihoParams:
    if m < 2:
        raise ParameterError(f"m must be >= 2, got {m}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if gcd(k, m) != 1:
        raise ParameterError(f"gcd(k, m) = gcd({k}, {m}) = {gcd(k, m)} != 1")
    g = gcd(2**k + 1, 2**m + 1)
    if g != 1:
        raise ParameterError(f"gcd(2^k+1, 2^m+1) = gcd({2**k + 1}, {2**m + 1}) = {g} != 1")
    s = inv_mod(2**k + 1, 2**m + 1)
    return NihoParams(m=m, k=k, s=s, d=niho_exponent(m, s))


def niho_exponent(m: int, s: int) -> int:
    return s * (2**m - 1) + 1


def exponent_orbit(s: int, m: int) -> set[int]:
    """Values of s related by conjugation and, when it exists, inversion of the exponent.

    Returns {s, 1-s} mod 2^m+1, plus {s/(2s-1), (s-1)/(2s-1)} when 2s-1 is a
    unit modulo 2^m+1.  Representatives are taken in [1, 2^m].
    """
    q = 2**m + 1
    out = {s % q, (1 - s) % q}
    if gcd(2 * s - 1, q) == 1:
        t = inv_mod(2 * s - 1, q)
        out |= {s * t % q, (s - 1) * t % q}
    return out


def is_permutation_exponent(params: NihoParams) -> bool:
    return gcd(2 * params.s - 1, 2**params.m + 1) == 1


def valid_ks(m: int) -> list[int]:
    """k in [1, 2m] satisfying both gcd hypotheses, one per distinct s."""
    seen = set()
    out = []
    for k in range(1, 2 * m + 1):
        if gcd(k, m) == 1 and gcd(2**k + 1, 2**m + 1) == 1:
            s = inv_mod(2**k + 1, 2**m + 1)
            if s not in seen:
                seen.add(s)
                out.append(k)
    return out
