from math import gcd

import numpy as np
import pytest

from nihoapn.field import make_field
from nihoapn.niho import (
    ParameterError,
    build_niho,
    exponent_orbit,
    gcd_criterion,
    inv_mod,
    is_permutation_exponent,
    niho_exponent,
    valid_ks,
)
from nihoapn.spectra import PowerFunction, diff_spectrum, is_permutation


@pytest.mark.parametrize("a, mod, want", [(5, 9, 2), (1, 7, 1), (1, 33, 1), (3, 17, 6)])
def test_inv_mod_examples(a, mod, want):
    assert inv_mod(a, mod) == want


def test_inv_mod_reports_gcd():
    with pytest.raises(ParameterError, match="gcd = 3"):
        inv_mod(3, 9)


def test_inv_mod_brute():
    for mod in range(2, 60):
        for a in range(mod):
            if gcd(a, mod) == 1:
                assert a * inv_mod(a, mod) % mod == 1


@pytest.mark.parametrize("m, k, s, d", [(2, 1, 2, 7), (3, 2, 2, 15), (4, 1, 6, 91)])
def test_build_niho_examples(m, k, s, d):
    p = build_niho(m, k)
    assert (p.s, p.d) == (s, d)
    assert p.n == 2 * m


def test_build_niho_names_failed_condition():
    with pytest.raises(ParameterError, match=r"gcd\(2\^k\+1, 2\^m\+1\).*= 3"):
        build_niho(3, 1)
    with pytest.raises(ParameterError, match=r"gcd\(k, m\)"):
        build_niho(4, 2)


def test_build_niho_invariants():
    for m in range(2, 13):
        for k in range(1, 4 * m):
            if gcd(k, m) != 1 or gcd(2**k + 1, 2**m + 1) != 1:
                with pytest.raises(ParameterError):
                    build_niho(m, k)
                continue
            p = build_niho(m, k)
            assert 1 <= p.s <= 2**m
            assert p.s * (2**k + 1) % (2**m + 1) == 1
            assert p.d % (2**m - 1) == 1
            # 2^k mod 2^m+1 has period 2m
            assert build_niho(m, p.k_canonical).s == p.s


@pytest.mark.parametrize("m, k, want", [(3, 2, True), (3, 1, False), (4, 2, True)])
def test_gcd_criterion_examples(m, k, want):
    assert gcd_criterion(m, k) is want


def test_gcd_criterion_matches_integer_gcd():
    for m in range(1, 25):
        for k in range(1, 25):
            assert gcd_criterion(m, k) == (gcd(2**k + 1, 2**m + 1) == 1), (m, k)


def test_gcd_parity_rule_when_coprime():
    for m in range(1, 25):
        for k in range(1, 25):
            if gcd(k, m) == 1:
                assert gcd_criterion(m, k) == ((m - k) % 2 == 1), (m, k)


@pytest.mark.parametrize("s, m, want", [(2, 2, {2, 4}), (6, 4, {6, 12, 16, 2}), (2, 3, {2, 8})])
def test_orbit_examples(s, m, want):
    assert exponent_orbit(s, m) == want


@pytest.mark.parametrize("m", range(2, 7))
def test_orbit_members_share_spectrum(m):
    ctx = make_field(2 * m)
    spec = {s: diff_spectrum(PowerFunction(ctx, niho_exponent(m, s))) for s in range(1, 2**m + 1)}
    spec[0] = diff_spectrum(PowerFunction(ctx, niho_exponent(m, 2**m + 1)))
    for s in range(2, 2**m + 1):
        for t in exponent_orbit(s, m):
            assert spec[t] == spec[s], (m, s, t)


@pytest.mark.parametrize("m", range(2, 13))
def test_k_equal_m_minus_one_gives_s2(m):
    assert build_niho(m, m - 1).s == 2


@pytest.mark.parametrize("m, k, want", [(2, 1, True), (3, 2, False), (4, 1, True)])
def test_permutation_examples(m, k, want):
    assert is_permutation_exponent(build_niho(m, k)) is want


@pytest.mark.parametrize("m", range(2, 9))
def test_permutation_criterion_matches_bijectivity(m):
    ctx = make_field(2 * m)
    for k in valid_ks(m):
        p = build_niho(m, k)
        assert is_permutation_exponent(p) == is_permutation(PowerFunction(ctx, p.d))
        assert len(np.unique(ctx.pow_table(p.d))) == ctx.order or not is_permutation_exponent(p)


def test_valid_ks_dedup():
    for m in range(2, 11):
        ks = valid_ks(m)
        ss = [build_niho(m, k).s for k in ks]
        assert len(set(ss)) == len(ss)
        assert m - 1 in ks
        assert all(1 <= k <= 2 * m for k in ks)
