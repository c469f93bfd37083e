import numpy as np
import pytest

from nihoapn.closed_forms import (
    bct_case_prediction,
    ddt2_trace_criterion,
    omega2_in_subfield_count,
    predicted_boom_spectrum,
    predicted_diff_spectrum,
    verify_theorems,
)
from nihoapn.field import DomainError, make_field
from nihoapn.niho import build_niho, valid_ks
from nihoapn.spectra import PowerFunction, bct_fiber, ddt_row


@pytest.mark.parametrize("m, omega", [
    (2, {0: 9, 2: 6, 4: 1}),
    (3, {0: 35, 2: 28, 8: 1}),
    (5, {0: 527, 2: 496, 32: 1}),
])
def test_predicted_diff_examples(m, omega):
    assert predicted_diff_spectrum(m).omega == omega


@pytest.mark.parametrize("m, nu", [
    (2, {0: 8, 2: 4, 4: 1, 6: 2}),
    (3, {0: 32, 2: 24, 8: 4, 10: 3}),
    (4, {0: 128, 2: 112, 16: 7, 18: 8}),
])
def test_predicted_boom_examples(m, nu):
    assert predicted_boom_spectrum(m).nu == nu


@pytest.mark.parametrize("m", range(2, 16))
def test_prediction_identities(m):
    ds = predicted_diff_spectrum(m)
    assert ds.identities_hold(2 * m)
    assert predicted_boom_spectrum(m).total() == 2 ** (2 * m) - 1
    assert predicted_boom_spectrum(m).beta == 2**m + 2


def test_ddt2_criterion_gf16():
    ctx = make_field(4)
    w, w2 = (int(b) for b in ctx.subfield_elements()[2:])
    assert ddt2_trace_criterion(ctx, w) and ddt2_trace_criterion(ctx, w2)
    row = ddt_row(PowerFunction(ctx, 7))
    assert row[w] == row[w2] == 2


def test_ddt2_criterion_errors():
    ctx = make_field(4)
    for b in (0, 1, 2):
        with pytest.raises(DomainError):
            ddt2_trace_criterion(ctx, b)
    with pytest.raises(DomainError):
        ddt2_trace_criterion(make_field(5), 3)


@pytest.mark.parametrize("m", range(2, 8))
def test_ddt2_criterion_matches_brute_force(m):
    ctx = make_field(2 * m)
    sub = [int(b) for b in ctx.subfield_elements() if b > 1]
    for k in valid_ks(m):
        row = ddt_row(PowerFunction(ctx, build_niho(m, k).d))
        crit = [ddt2_trace_criterion(ctx, b) for b in sub]
        assert crit == [row[b] == 2 for b in sub]
        assert sum(crit) == omega2_in_subfield_count(m)


@pytest.mark.parametrize("m", range(2, 8))
def test_bct_classification(m):
    ctx = make_field(2 * m)
    for k in valid_ks(m):
        F = PowerFunction(ctx, build_niho(m, k).d)
        row = ddt_row(F)
        assert np.flatnonzero(row == 2**m).tolist() == [1]
        bct = bct_fiber(F)
        assert set(bct[1:].tolist()) <= {0, 2, 2**m, 2**m + 2}
        assert np.array_equal(bct, bct_case_prediction(ctx, row))


@pytest.mark.parametrize("m, k", [(2, 1), (3, 2), (5, 2)])
def test_verify_theorems_examples(m, k):
    r = verify_theorems(m, k)
    assert r.match_ds and r.match_bs
    assert r.params == build_niho(m, k)


def test_verify_theorems_propagates_parameter_errors():
    from nihoapn.niho import ParameterError
    with pytest.raises(ParameterError):
        verify_theorems(3, 1)


def test_verify_theorems_alternative_modulus():
    r = verify_theorems(3, 2, modulus=0x49)
    assert r.match_ds and r.match_bs
