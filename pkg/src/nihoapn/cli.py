"""Command-line front end.

Exit codes: 0 success / match, 1 mismatch or property failure, 2 usage or
parameter error (with a JSON error object on stderr).
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import reports
from .closed_forms import verify_theorems
from .field import DomainError, make_field
from .lemmas import (
    lemma1_suite,
    lemma2_suite,
    lemma3_suite,
    lemma4_suite,
    lemma5_suite,
    phi_suite,
)
from .niho import ParameterError, build_niho, is_permutation_exponent, valid_ks
from .spectra import (
    BoomSpectrum,
    DiffSpectrum,
    PowerFunction,
    SpectrumError,
    bct_fiber,
    ddt_row,
    is_permutation,
)
from .survey import SurveyError, remark4_instances, survey_niho

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
LEMMA_NAMES = ("lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "phi")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        sys.exit(EXIT_USAGE)


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}}) + "\n")


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex polynomial: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _write(args, body: str, suffix: str | None = None) -> None:
    if args.out is None:
        sys.stdout.write(body)
        return
    path = Path(args.out)
    if suffix:
        path = path.with_suffix(suffix)
    path.write_text(body)


def _write_manifest(args, manifest: reports.RunManifest) -> None:
    if args.out is None:
        return
    path = Path(args.out)
    path.with_name(path.name + ".manifest.json").write_text(reports.dumps(manifest.to_dict()))


def _table(rows: list[list], header: list[str]) -> str:
    cols = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cols) + "\n"


# -- spectrum ------------------------------------------------------------------


def cmd_spectrum(args, manifest) -> int:
    niho_mode = args.m is not None or args.k is not None
    raw_mode = args.n is not None or args.d is not None
    if niho_mode == raw_mode:
        raise UsageError("give either --n and --d, or --m and --k")
    params = None
    if niho_mode:
        if args.m is None or args.k is None:
            raise UsageError("Niho mode needs both --m and --k")
        params = build_niho(args.m, args.k)
        n, d = 2 * args.m, params.d
    else:
        if args.n is None or args.d is None:
            raise UsageError("raw mode needs both --n and --d")
        n, d = args.n, args.d
    ctx = make_field(n, args.modulus)
    manifest.use_field(n, ctx.modulus)
    F = PowerFunction(ctx, d)
    row = ddt_row(F)
    ds = DiffSpectrum.from_row(row)
    bs = BoomSpectrum.from_row(bct_fiber(F, jobs=args.jobs))
    report = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "spectrum",
        "field": {"n": n, "modulus": f"0x{ctx.modulus:x}"},
        "d": F.d,
        "diff_spectrum": reports.ds_to_dict(ds),
        "boom_spectrum": reports.bs_to_dict(bs),
        "locally_apn": int(row[2:].max()) == 2,
        "permutation": is_permutation(F),
        "niho": None,
        "prediction": None,
    }
    code = EXIT_OK
    if params is not None:
        pred = verify_theorems(params.m, params.k, modulus=args.modulus, jobs=args.jobs)
        report["niho"] = reports.params_to_dict(params) | {"permutation_criterion": is_permutation_exponent(params)}
        report["prediction"] = reports.prediction_to_dict(pred)
        if not (pred.match_ds and pred.match_bs):
            code = EXIT_MISMATCH
    if args.format == "json":
        _write(args, reports.dumps(report))
    elif args.format == "csv":
        lines = ["table,value,count"]
        lines += [f"ddt,{i},{c}" for i, c in ds.omega.items()]
        lines += [f"bct,{i},{c}" for i, c in bs.nu.items()]
        _write(args, "\n".join(lines) + "\n")
    else:
        head = f"x^{F.d} over GF(2^{n}): delta = {ds.delta}, beta = {bs.beta}, locally-APN = {report['locally_apn']}\n"
        body = _table([["DDT", i, c] for i, c in ds.omega.items()] + [["BCT", i, c] for i, c in bs.nu.items()],
                      ["table", "value", "count"])
        if report["prediction"]:
            p = report["prediction"]
            body += f"match_ds = {p['match_ds']}, match_bs = {p['match_bs']}\n"
        _write(args, head + body)
    return code


# -- survey --------------------------------------------------------------------


def cmd_survey(args, manifest) -> int:
    if args.m is None:
        raise UsageError("survey needs --m")
    ms = range(args.m, (args.max_m or args.m) + 1)
    code = EXIT_OK
    bodies = []
    for m in ms:
        rep = survey_niho(m, jobs=args.jobs, allow_large=args.large, shifts=args.shifts, modulus=args.modulus)
        manifest.use_field(2 * m, make_field(2 * m, args.modulus).modulus)
        sys.stderr.write(f"m = {m}: covered = {str(rep.covered).lower()} ({rep.timing:.2f} s)\n")
        if not rep.covered:
            sys.stderr.write(f"m = {m}: locally-APN s outside the theorem orbits: {rep.uncovered}\n")
            code = EXIT_MISMATCH
        bodies.append(rep)
    if args.out is not None:
        single = len(bodies) == 1
        for rep in bodies:
            stem = Path(args.out) if single else Path(args.out).with_name(f"{Path(args.out).stem}_m{rep.m}.json")
            stem = stem.with_suffix(".json")
            stem.write_text(reports.dumps(reports.survey_to_dict(rep)))
            stem.with_suffix(".csv").write_text(reports.survey_csv(rep))
        return code
    for rep in bodies:
        if args.format == "json":
            sys.stdout.write(reports.dumps(reports.survey_to_dict(rep)))
        elif args.format == "csv":
            sys.stdout.write(reports.survey_csv(rep))
        else:
            sys.stdout.write(
                f"m = {rep.m}: covered = {rep.covered}\n"
                f"  locally-APN s   : {rep.locally_apn_s}\n"
                f"  theorem orbits  : {rep.theorem_orbit_s}\n"
                f"  excluded s      : {rep.excluded_s}\n"
            )
    return code


# -- lemmas --------------------------------------------------------------------


def cmd_lemmas(args, manifest) -> int:
    if args.samples < 0:
        raise UsageError("--samples must be >= 0")
    only = args.only or list(LEMMA_NAMES)
    for name in only:
        if name not in LEMMA_NAMES:
            raise UsageError(f"unknown lemma selector {name!r}; choose from {', '.join(LEMMA_NAMES)}")
    manifest.seed = args.seed
    results = []
    for n in args.fields:
        ctx = make_field(n, args.modulus if args.modulus and n == _deg(args.modulus) else None)
        manifest.use_field(n, ctx.modulus)
        even = n % 2 == 0
        if "lemma1" in only and even:
            results.append(lemma1_suite(ctx))
        if "lemma2" in only and even:
            results.append(lemma2_suite(ctx))
        if "lemma3" in only:
            results.append(lemma3_suite(ctx))
        if "lemma4" in only:
            results.append(lemma4_suite(ctx, args.samples, args.seed))
        if "lemma5" in only:
            results.append(lemma5_suite(ctx, args.samples, args.seed))
        if "phi" in only and even and 2 <= n // 2 <= 6:
            for k in valid_ks(n // 2):
                results.append(phi_suite(build_niho(n // 2, k), ctx))
    vacuous = args.samples == 0 and any(r.name in ("lemma4", "lemma5") for r in results)
    if vacuous:
        sys.stderr.write("warning: --samples 0 makes the sampled lemma checks vacuous\n")
    ok = all(r.ok for r in results)
    report = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "lemmas",
        "seed": args.seed,
        "samples": args.samples,
        "fields": args.fields,
        "vacuous": vacuous,
        "ok": ok,
        "results": [reports.lemma_to_dict(r) for r in results],
    }
    if args.format == "json":
        _write(args, reports.dumps(report))
    else:
        rows = [[r.name, r.n, r.checked, r.passed, len(r.failures)] for r in results]
        if args.format == "csv":
            _write(args, "\n".join(["name,n,checked,passed,failed"] + [",".join(map(str, r)) for r in rows]) + "\n")
        else:
            _write(args, _table(rows, ["lemma", "n", "checked", "passed", "failed"]))
    return EXIT_OK if ok else EXIT_MISMATCH


def _deg(modulus: int) -> int:
    return modulus.bit_length() - 1


# -- verify --------------------------------------------------------------------


def _verify_one(m: int, k: int, modulus, jobs: int):
    return reports.prediction_to_dict(verify_theorems(m, k, modulus=modulus, jobs=jobs))


def cmd_verify(args, manifest) -> int:
    if args.m is not None and args.k is not None:
        grid = [(args.m, args.k)]
    else:
        lo = args.m if args.m is not None else 2
        hi = args.max_m if args.max_m is not None else (args.m if args.m is not None else 6)
        grid = [(m, k) for m in range(lo, hi + 1) for k in valid_ks(m) if k < 2 * m]
    for m, _ in grid:
        manifest.use_field(2 * m, make_field(2 * m, args.modulus).modulus)
    if args.jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            cases = list(pool.map(_verify_one, *zip(*[(m, k, args.modulus, 1) for m, k in grid])))
    else:
        cases = [_verify_one(m, k, args.modulus, 1) for m, k in grid]
    all_match = all(c["match_ds"] and c["match_bs"] for c in cases)
    report = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "verify",
        "cases": cases,
        "all_match": all_match,
    }
    if args.format == "json":
        _write(args, reports.dumps(report))
    else:
        rows = [[c["params"]["m"], c["params"]["k"], c["params"]["s"], c["params"]["d"], c["match_ds"], c["match_bs"]]
                for c in cases]
        if args.format == "csv":
            _write(args, "\n".join(["m,k,s,d,match_ds,match_bs"] + [",".join(map(str, r)) for r in rows]) + "\n")
        else:
            _write(args, _table(rows, ["m", "k", "s", "d", "match_ds", "match_bs"]))
    return EXIT_OK if all_match else EXIT_MISMATCH


# -- gcd(k, m) > 1 instances ---------------------------------------------------


def cmd_remark4(args, manifest) -> int:
    limit = args.max_m if args.max_m is not None else 8
    insts = remark4_instances(limit)
    for m in sorted({i.m for i in insts}):
        manifest.use_field(2 * m, make_field(2 * m).modulus)
    report = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "remark4",
        "instances": [reports.remark4_to_dict(i) for i in insts],
        "none_locally_apn": not any(i.locally_apn for i in insts),
    }
    if args.format == "json":
        _write(args, reports.dumps(report))
    else:
        rows = [[i.m, i.k, i.s, i.d, i.delta, i.locally_apn] for i in insts]
        if args.format == "csv":
            _write(args, "\n".join(["m,k,s,d,delta,locally_apn"] + [",".join(map(str, r)) for r in rows]) + "\n")
        else:
            _write(args, _table(rows, ["m", "k", "s", "d", "delta", "locally_apn"]))
    return EXIT_OK if report["none_locally_apn"] else EXIT_MISMATCH


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--modulus", type=_hex, default=None, help="irreducible modulus as hex bit pattern")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--out", default=None, help="output path (a .manifest.json sidecar is written next to it)")

    p = _Parser(prog="nihoapn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("spectrum", "boomerang"):
        sp = sub.add_parser(name, parents=[common], help="differential and boomerang spectrum of x^d")
        sp.add_argument("--n", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--k", type=int)
        sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("survey", parents=[common], help="sweep all normalized Niho exponents for one m")
    sp.add_argument("--m", type=int)
    sp.add_argument("--max-m", type=int, default=None)
    sp.add_argument("--large", action="store_true", help="allow m = 9, 10")
    sp.add_argument("--shifts", action="store_true", help="also check the cyclotomic shifts d*2^i")
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("lemmas", parents=[common], help="run the lemma checkers")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--only", action="append", help=f"one of {', '.join(LEMMA_NAMES)}; repeatable")
    sp.add_argument("--fields", type=_int_list, default=[8], help="comma-separated extension degrees")
    sp.set_defaults(func=cmd_lemmas)

    sp = sub.add_parser("verify", parents=[common], help="compare closed forms with brute force over an (m, k) grid")
    sp.add_argument("--m", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--max-m", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("remark4", parents=[common], help="(m, k) with gcd(k, m) > 1")
    sp.add_argument("--max-m", type=int, default=None)
    sp.set_defaults(func=cmd_remark4)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)
    if args.jobs < 1:
        _emit_error("usage", "--jobs must be >= 1")
        return EXIT_USAGE
    manifest = reports.RunManifest(command_line=shlex.join(["nihoapn", *argv]))
    t0 = time.perf_counter()
    try:
        code = args.func(args, manifest)
    except UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except (ParameterError, SpectrumError, DomainError, SurveyError) as exc:
        _emit_error(type(exc).__name__, str(exc))
        return EXIT_USAGE
    manifest.wall_clock = time.perf_counter() - t0
    _write_manifest(args, manifest)
    return code


if __name__ == "__main__":
    sys.exit(main())
