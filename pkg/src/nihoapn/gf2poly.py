"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of x^i)."""

from __future__ import annotations


def degree(p: int) -> int:
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carryless product of two GF(2)[x] polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a: int, m: int) -> int:
    dm = degree(m)
    da = degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = degree(a)
    return a


def polydivmod(a: int, m: int) -> tuple[int, int]:
    dm = degree(m)
    q = 0
    da = degree(a)
    while da >= dm:
        q |= 1 << (da - dm)
        a ^= m << (da - dm)
        da = degree(a)
    return q, a


def polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, polymod(a, b)
    return a


def mulmod(a: int, b: int, m: int) -> int:
    return polymod(clmul(a, b), m)


def smallest_factor_degree(f: int) -> int | None:
    """Ben-Or test.

    Returns the degree of the smallest irreducible factor of ``f`` when ``f``
    is reducible, and None when ``f`` is irreducible.  Deterministic.
    """
    n = degree(f)
    if n < 1:
        raise ValueError("constant polynomial")
    if n == 1:
        return None
    if not f & 1:
        return 1  # divisible by x
    h = 0b10  # x
    for i in range(1, n // 2 + 1):
        h = mulmod(h, h, f)  # x^(2^i) mod f
        if degree(polygcd(f, h ^ 0b10)) > 0:
            return i
    return None


def is_irreducible(f: int) -> bool:
    return smallest_factor_degree(f) is None


def is_irreducible_trial(f: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)/2 (slow oracle)."""
    n = degree(f)
    if n < 1:
        return False
    for g in range(2, 1 << (n // 2 + 1)):
        if polymod(f, g) == 0:
            return False
    return True


def lex_smallest_irreducible(n: int) -> int:
    for f in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {n}")


def to_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)
