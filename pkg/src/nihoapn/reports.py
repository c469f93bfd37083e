"""JSON/CSV serialization of reports and the run manifest.

Every report carries a top-level ``schema_version``.  Spectra are written as
sorted ``[value, count]`` pairs.  Wall-clock figures live only in the
manifest, so the same inputs always produce byte-identical report files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from . import __version__
from .closed_forms import PredictionReport
from .lemmas import LemmaResult
from .niho import NihoParams
from .spectra import BoomSpectrum, DiffSpectrum
from .survey import Remark4Instance, SurveyReport, SurveyRow

SCHEMA_VERSION = 1


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def ds_to_dict(ds: DiffSpectrum) -> dict:
    return {"omega": ds.pairs(), "delta": ds.delta}


def ds_from_dict(d: dict) -> DiffSpectrum:
    return DiffSpectrum.from_pairs(d["omega"])


def bs_to_dict(bs: BoomSpectrum) -> dict:
    return {"nu": bs.pairs(), "beta": bs.beta}


def bs_from_dict(d: dict) -> BoomSpectrum:
    return BoomSpectrum.from_pairs(d["nu"])


def params_to_dict(p: NihoParams) -> dict:
    return {"m": p.m, "k": p.k, "s": p.s, "d": p.d}


def prediction_to_dict(r: PredictionReport) -> dict:
    return {
        "params": params_to_dict(r.params),
        "predicted_ds": ds_to_dict(r.predicted_ds),
        "actual_ds": ds_to_dict(r.actual_ds),
        "predicted_bs": bs_to_dict(r.predicted_bs),
        "actual_bs": bs_to_dict(r.actual_bs),
        "match_ds": r.match_ds,
        "match_bs": r.match_bs,
    }


def prediction_from_dict(d: dict) -> PredictionReport:
    return PredictionReport(
        params=NihoParams(**d["params"]),
        predicted_ds=ds_from_dict(d["predicted_ds"]),
        actual_ds=ds_from_dict(d["actual_ds"]),
        predicted_bs=bs_from_dict(d["predicted_bs"]),
        actual_bs=bs_from_dict(d["actual_bs"]),
    )


SURVEY_CSV_COLUMNS = ["s", "d", "delta", "locally_apn", "in_theorem_orbit"]


def survey_to_dict(r: SurveyReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "survey",
        "m": r.m,
        "locally_apn_s": r.locally_apn_s,
        "theorem_orbit_s": r.theorem_orbit_s,
        "covered": r.covered,
        "uncovered": r.uncovered,
        "excluded_s": r.excluded_s,
        "orbit_spectra_consistent": r.orbit_spectra_consistent,
        "shifts_consistent": r.shifts_consistent,
        "rows": [
            {
                "s": row.s,
                "d": row.d,
                "delta": row.delta,
                "locally_apn": row.locally_apn,
                "in_theorem_orbit": row.in_theorem_orbit,
                "spectrum": row.spectrum.pairs(),
            }
            for row in r.rows
        ],
    }


def survey_from_dict(d: dict) -> SurveyReport:
    rows = [
        SurveyRow(x["s"], x["d"], x["delta"], x["locally_apn"], x["in_theorem_orbit"],
                  DiffSpectrum.from_pairs(x["spectrum"]))
        for x in d["rows"]
    ]
    return SurveyReport(
        m=d["m"],
        locally_apn_s=d["locally_apn_s"],
        theorem_orbit_s=d["theorem_orbit_s"],
        covered=d["covered"],
        excluded_s=d["excluded_s"],
        orbit_spectra_consistent=d["orbit_spectra_consistent"],
        rows=rows,
        shifts_consistent=d["shifts_consistent"],
    )


def survey_csv(r: SurveyReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SURVEY_CSV_COLUMNS)
    for row in r.rows:
        w.writerow([row.s, row.d, row.delta, int(row.locally_apn), int(row.in_theorem_orbit)])
    return buf.getvalue()


def lemma_to_dict(r: LemmaResult, max_failures: int = 20) -> dict:
    return {
        "name": r.name,
        "n": r.n,
        "checked": r.checked,
        "passed": r.passed,
        "failed": len(r.failures),
        "failures": [list(f) if isinstance(f, tuple) else f for f in r.failures[:max_failures]],
        "notes": r.notes,
    }


def remark4_to_dict(inst: Remark4Instance) -> dict:
    return asdict(inst)


@dataclass
class RunManifest:
    tool_version: str = __version__
    field_moduli_used: dict[int, str] = field(default_factory=dict)
    seed: int | None = None
    command_line: str = ""
    wall_clock: float = 0.0

    def use_field(self, n: int, modulus: int) -> None:
        self.field_moduli_used[n] = f"0x{modulus:x}"

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "field_moduli_used": {str(n): h for n, h in sorted(self.field_moduli_used.items())},
            "seed": self.seed,
            "command_line": self.command_line,
            "wall_clock": round(self.wall_clock, 6),
        }
