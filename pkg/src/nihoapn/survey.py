"""Exhaustive sweeps over the normalized Niho exponents s(2^m-1)+1, 1 <= s <= 2^m."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .field import make_field
from .niho import exponent_orbit, inv_mod, niho_exponent, valid_ks
from .spectra import DiffSpectrum, PowerFunction, ddt_row

DEFAULT_MAX_M = 8
LARGE_MAX_M = 10


class SurveyError(ValueError):
    pass


@dataclass(frozen=True)
class SurveyRow:
    s: int
    d: int
    delta: int
    locally_apn: bool
    in_theorem_orbit: bool
    spectrum: DiffSpectrum


@dataclass
class SurveyReport:
    m: int
    locally_apn_s: list[int]
    theorem_orbit_s: list[int]
    covered: bool
    excluded_s: list[int]
    orbit_spectra_consistent: bool
    rows: list[SurveyRow] = field(default_factory=list)
    shifts_consistent: bool | None = None
    timing: float = field(default=0.0, compare=False)

    @property
    def uncovered(self) -> list[int]:
        """Locally-APN s outside the theorem orbits (a counterexample if nonempty)."""
        return sorted(set(self.locally_apn_s) - set(self.theorem_orbit_s))

    @property
    def orbit_not_locally_apn(self) -> list[int]:
        return sorted(set(self.theorem_orbit_s) - set(self.locally_apn_s))


def theorem_orbit(m: int) -> set[int]:
    out: set[int] = set()
    for k in valid_ks(m):
        out |= exponent_orbit(inv_mod(2**k + 1, 2**m + 1), m)
    return out


def _classify(m: int, s: int, modulus: int | None, shifts: bool):
    ctx = make_field(2 * m, modulus)
    d = niho_exponent(m, s)
    F = PowerFunction(ctx, d)
    row = ddt_row(F)
    spec = DiffSpectrum.from_row(row)
    lapn = int(row[2:].max()) == 2
    shift_ok = None
    if shifts:
        # d * 2^i are the non-normalized Niho exponents of the same class
        shift_ok = all(
            DiffSpectrum.from_row(ddt_row(PowerFunction(ctx, d * 2**i))) == spec
            for i in range(1, 2 * m)
        )
    return s, d, spec, lapn, shift_ok


def _check_range(m: int, allow_large: bool) -> None:
    hi = LARGE_MAX_M if allow_large else DEFAULT_MAX_M
    if not 2 <= m <= hi:
        if allow_large or not DEFAULT_MAX_M < m <= LARGE_MAX_M:
            raise SurveyError(f"m must lie in [2, {LARGE_MAX_M}], got {m}")
        raise SurveyError(f"m = {m} is a long run; pass allow_large=True (--large) to enable it")


def survey_niho(m: int, jobs: int = 1, allow_large: bool = False, shifts: bool = False,
                modulus: int | None = None) -> SurveyReport:
    _check_range(m, allow_large)
    t0 = time.perf_counter()
    make_field(2 * m, modulus).exp_table  # build tables once before forking
    svals = list(range(1, 2**m + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify, [m] * len(svals), svals, [modulus] * len(svals),
                                    [shifts] * len(svals), chunksize=max(1, len(svals) // (4 * jobs))))
    else:
        results = [_classify(m, s, modulus, shifts) for s in svals]
    results.sort(key=lambda r: r[0])

    # s = 1 gives x^(2^m), a field automorphism; it is reported, not classified
    excluded = [1]
    orbit = theorem_orbit(m)
    by_s = {r[0]: r for r in results}
    lapn = sorted(s for s, _, _, ok, _ in results if ok and s not in excluded)

    consistent = True
    for s in svals[1:]:
        spec = by_s[s][2]
        if any(by_s[t][2] != spec for t in exponent_orbit(s, m)):
            consistent = False

    rows = [
        SurveyRow(s, d, spec.delta, ok and s not in excluded, s in orbit, spec)
        for s, d, spec, ok, _ in results
    ]
    return SurveyReport(
        m=m,
        locally_apn_s=lapn,
        theorem_orbit_s=sorted(orbit),
        covered=set(lapn) == orbit,
        excluded_s=excluded,
        orbit_spectra_consistent=consistent,
        rows=rows,
        shifts_consistent=all(r[4] for r in results) if shifts else None,
        timing=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class Remark4Instance:
    m: int
    k: int
    s: int
    d: int
    locally_apn: bool
    delta: int


def remark4_instances(limit_m: int) -> list[Remark4Instance]:
    """(m, k) with gcd(2^k+1, 2^m+1) = 1 but gcd(k, m) > 1, m <= limit_m, k < 2m."""
    if limit_m > DEFAULT_MAX_M:
        raise SurveyError(f"limit_m must be <= {DEFAULT_MAX_M}")
    out = []
    for m in range(2, limit_m + 1):
        for k in range(1, 2 * m):
            if gcd(k, m) == 1 or gcd(2**k + 1, 2**m + 1) != 1:
                continue
            s = inv_mod(2**k + 1, 2**m + 1)
            d = niho_exponent(m, s)
            row = ddt_row(PowerFunction(make_field(2 * m), d))
            out.append(Remark4Instance(m, k, s, d, int(row[2:].max()) == 2, int(row.max())))
    return out


def survey_table(report: SurveyReport) -> np.ndarray:
    return np.array([[r.s, r.d, r.delta, r.locally_apn, r.in_theorem_orbit] for r in report.rows], dtype=np.int64)
