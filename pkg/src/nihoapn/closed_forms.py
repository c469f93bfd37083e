"""Closed-form differential/boomerang spectra of the Niho family and brute-force comparison."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import DomainError, FieldCtx, make_field
from .niho import NihoParams, build_niho
from .spectra import (
    BoomSpectrum,
    DiffSpectrum,
    PowerFunction,
    bct_fiber,
    ddt_row,
)


def predicted_diff_spectrum(m: int) -> DiffSpectrum:
    ds = DiffSpectrum({
        0: 2 ** (2 * m - 1) + 2 ** (m - 1) - 1,
        2: 2 ** (2 * m - 1) - 2 ** (m - 1),
        2**m: 1,
    })
    assert ds.identities_hold(2 * m)
    return ds


# Keyed by m % 2; the parity only swaps which of nu_{2^m}, nu_{2^m+2} gets the -1.
_BOOM_TEMPLATES = {
    1: lambda m: {0: 2 ** (2 * m - 1), 2: 2 ** (2 * m - 1) - 2**m, 2**m: 2 ** (m - 1), 2**m + 2: 2 ** (m - 1) - 1},
    0: lambda m: {0: 2 ** (2 * m - 1), 2: 2 ** (2 * m - 1) - 2**m, 2**m: 2 ** (m - 1) - 1, 2**m + 2: 2 ** (m - 1)},
}


def predicted_boom_spectrum(m: int) -> BoomSpectrum:
    bs = BoomSpectrum(_BOOM_TEMPLATES[m % 2](m))
    assert bs.total() == 2 ** (2 * m) - 1
    return bs


def ddt2_trace_criterion(ctx: FieldCtx, b: int) -> bool:
    """Tr_1^m(1/(b+1)) == 1, for b in GF(2^m) minus GF(2).

    For the Niho family this decides whether DDT_F(1, b) = 2 on the subfield.
    """
    ctx._need_even()
    if b in (0, 1):
        raise DomainError("b must lie outside GF(2)")
    if not ctx.in_subfield(b):
        raise DomainError(f"{b} is not in the subfield GF(2^{ctx.m})")
    return ctx.subfield_trace(ctx.inv(b ^ 1)) == 1


def omega2_in_subfield_count(m: int) -> int:
    """|GF(2^m)* intersect Omega_2| as derived for the family."""
    return 2 ** (m - 1) if m % 2 == 0 else 2 ** (m - 1) - 1


def bct_case_prediction(ctx: FieldCtx, row: np.ndarray) -> np.ndarray:
    """Predicted BCT_F(1, b) for every b from subfield membership and Omega_2 = {b : DDT = 2}."""
    m = ctx._need_even()
    in_sub = np.zeros(ctx.order, dtype=bool)
    in_sub[ctx.subfield_elements()] = True
    in_sub[0] = False
    in_omega2 = row == 2
    pred = np.zeros(ctx.order, dtype=np.int64)
    pred[in_sub & in_omega2] = 2**m + 2
    pred[in_sub & ~in_omega2] = 2**m
    pred[~in_sub & in_omega2] = 2
    pred[0] = 0
    return pred


@dataclass(frozen=True)
class PredictionReport:
    params: NihoParams
    predicted_ds: DiffSpectrum
    actual_ds: DiffSpectrum
    predicted_bs: BoomSpectrum
    actual_bs: BoomSpectrum

    @property
    def match_ds(self) -> bool:
        return self.predicted_ds.omega == self.actual_ds.omega

    @property
    def match_bs(self) -> bool:
        return self.predicted_bs.nu == self.actual_bs.nu


def verify_theorems(m: int, k: int, modulus: int | None = None, jobs: int = 1) -> PredictionReport:
    params = build_niho(m, k)
    F = PowerFunction(make_field(2 * m, modulus), params.d)
    return PredictionReport(
        params=params,
        predicted_ds=predicted_diff_spectrum(m),
        actual_ds=DiffSpectrum.from_row(ddt_row(F)),
        predicted_bs=predicted_boom_spectrum(m),
        actual_bs=BoomSpectrum.from_row(bct_fiber(F, jobs=jobs)),
    )
