"""Command-line battery runner for the verification checks.

Selects registered checks by id glob, runs the exact suites before the
continuation suites, and renders a report in text or JSON with a stable
schema.  Every knob is available as a flag and as an environment
variable with the ``COVFORGE_`` prefix; flags win.  The corrected-typo
ledger ships with the package at a fixed path, named at the end of
every text report.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import numbers
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import checks as _checks
from . import continuation as _cont
from .checks import CheckResult
from .continuation import TrackConfig

ENV_PREFIX = "COVFORGE_"
ERRATA_PATH = "src/covforge/errata.json"

DEFAULT_SAMPLE_R = (Fraction(10), Fraction(1, 2), Fraction(1, 3))


@dataclass(frozen=True)
class RunConfig:
    """One fully-specified battery run; equal configs give equal reports
    (timings aside)."""

    filter: str = "*"
    seed: int = 42
    tol_track: float = 1e-10
    tol_dedup: float = 1e-6
    tol_rank: float = 1e-8
    tol_cluster: float = 1e-4
    sample_r: tuple = DEFAULT_SAMPLE_R
    format: str = "text"
    jobs: int = 1

    def validate(self) -> None:
        for name in ("tol_track", "tol_dedup", "tol_rank", "tol_cluster"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if len(self.sample_r) != 3:
            raise ValueError("sample_r needs exactly three entries")

    def track_config(self) -> TrackConfig:
        return TrackConfig(seed=self.seed, tol_track=self.tol_track,
                           tol_dedup=self.tol_dedup, tol_rank=self.tol_rank,
                           cluster_radius=self.tol_cluster)


# The registry: check id, report anchor (interface data), phase, runner.
def _registry() -> tuple:
    def sym(fn):
        return lambda cfg: fn()

    def prop(fn):
        return lambda cfg: fn(seed=cfg.seed)

    return (
        ("symbolic/expansion_1_2", "(1.2)", "exact",
         sym(_checks.check_expansion_1_2)),
        ("symbolic/action_table_3_1", "(3.1)", "exact",
         sym(_checks.check_action_table_3_1)),
        ("symbolic/group_structure", "§2 Example 2.4; §6 κ", "exact",
         sym(_checks.check_group_structure)),
        ("symbolic/equivariance_invariants", "Lemma 3.1; §3", "exact",
         sym(_checks.check_equivariance_and_invariant_spaces)),
        ("symbolic/jacobians", "§0; Lemma 3.2(1)", "exact",
         sym(_checks.check_jacobians)),
        ("symbolic/lemma_4_2", "(4.1)–(4.2); §4", "exact",
         sym(_checks.check_lemma_4_2)),
        ("symbolic/derivation_4_5", "(4.5); §5", "exact",
         sym(_checks.check_derivation_4_5)),
        ("symbolic/strata_6", "(6.3)–(6.4); §6", "exact",
         sym(_checks.check_strata_6)),
        ("property/field_axioms", "§1 (ground field)", "exact",
         prop(_checks.check_field_axioms)),
        ("property/mpoly_ring", "§1 (coordinate rings)", "exact",
         prop(_checks.check_mpoly_ring)),
        ("property/transvectants", "§1 (transvectants)", "exact",
         prop(_checks.check_transvectant_properties)),
        ("property/scaling_1_1", "(1.1)", "exact",
         prop(_checks.check_scaling_1_1)),
        ("numeric/lemma6_2", "Lemma 6.2", "numeric",
         lambda cfg: _cont.check_stratum_counts(
             seed=cfg.seed, sample_r=cfg.sample_r, cfg=cfg.track_config())),
        ("numeric/fiber_5", "Lemmas 5.1–5.5", "numeric",
         lambda cfg: _cont.check_fiber_geometry(
             seed=cfg.seed, cfg=cfg.track_config())),
        ("numeric/seed_stability", "Lemma 6.2 (stability)", "numeric",
         lambda cfg: _cont.check_seed_stability(
             seed=cfg.seed, sample_r=cfg.sample_r, cfg=cfg.track_config())),
    )


def check_ids() -> tuple[str, ...]:
    return tuple(entry[0] for entry in _registry())


def errata_ledger() -> list[dict]:
    """The machine-readable corrected-typo ledger shipped with the package."""
    data = resources.files("covforge").joinpath("errata.json").read_text()
    return json.loads(data)


@dataclass
class Report:
    config: RunConfig
    results: list[CheckResult]
    anchors: dict

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def sorted_results(self) -> list[CheckResult]:
        return sorted(self.results, key=lambda r: r.check_id)


def run(config: RunConfig) -> Report:
    """Run every check whose id matches the config filter.

    Exact checks run before numeric ones; the report is ordered by
    check id.  Raises ValueError for a malformed config and LookupError
    when the filter selects nothing.
    """
    config.validate()
    selected = [entry for entry in _registry()
                if fnmatch.fnmatch(entry[0], config.filter)]
    if not selected:
        raise LookupError(
            f"filter {config.filter!r} matches no check id; known ids: "
            + ", ".join(check_ids()))
    anchors = {cid: anchor for cid, anchor, _kind, _fn in _registry()}
    results: list[CheckResult] = []
    for phase in ("exact", "numeric"):
        batch = [entry for entry in selected if entry[2] == phase]
        if not batch:
            continue
        if config.jobs > 1:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                futures = [pool.submit(fn, config)
                           for _cid, _a, _k, fn in batch]
                results.extend(f.result() for f in futures)
        else:
            results.extend(fn(config) for _cid, _a, _k, fn in batch)
    return Report(config=config, results=results, anchors=anchors)


# ---------------------------------------------------------------------------
# Rendering


def _jsonable(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [_jsonable(v) for v in value]
    return str(value)


def render_json(report: Report) -> str:
    rows = []
    for r in report.sorted_results():
        details = _jsonable(r.details)
        if r.residuals:
            details["residuals"] = list(r.residuals)
        if r.erratum_notes:
            details["erratum_notes"] = list(r.erratum_notes)
        rows.append({
            "check_id": r.check_id,
            "paper_anchor": report.anchors[r.check_id],
            "status": r.status,
            "residual_count": len(r.residuals),
            "details": details,
            "millis": round(r.millis, 1),
        })
    return json.dumps(rows, ensure_ascii=False, indent=2)


def render_text(report: Report) -> str:
    lines = []
    for r in report.sorted_results():
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status}  {r.check_id:34} [{report.anchors[r.check_id]}]"
                     f"  {r.millis:9.1f} ms  residuals: {len(r.residuals)}")
        tol = r.details.get("tolerances") if isinstance(r.details, dict) \
            else None
        if tol:
            knobs = " ".join(f"{k}={v:g}" for k, v in tol.items())
            lines.append(f"      tolerances: {knobs}")
        if isinstance(r.details, dict) and "partition_display" in r.details:
            lines.append(f"      partition: {r.details['partition_display']}")
        for note in r.erratum_notes:
            lines.append(f"      corrected: {note}")
        for res in r.residuals:
            lines.append(f"      residual: {res}")
    passed = sum(1 for r in report.results if r.ok)
    failed = len(report.results) - passed
    lines.append(f"{len(report.results)} checks: {passed} pass, "
                 f"{failed} fail")
    lines.append(f"erratum ledger: {ERRATA_PATH}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# CLI


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return cast(raw)


def _parse_sample_r(parts) -> tuple:
    vals = tuple(Fraction(p) for p in parts)
    if len(vals) != 3:
        raise ValueError("sample-r needs three values")
    return vals


def build_config(argv=None) -> RunConfig:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run the exact and numeric verification battery.")
    parser.add_argument("--filter", metavar="GLOB",
                        help="glob over check ids (default: all)")
    parser.add_argument("--seed", type=int, metavar="N",
                        help="base random seed (default 42)")
    parser.add_argument("--format", choices=("text", "json"),
                        help="report format (default text)")
    parser.add_argument("--jobs", type=int, metavar="N",
                        help="concurrent checks per phase (default 1)")
    parser.add_argument("--tol-track", type=float, metavar="X",
                        help="path acceptance residual (default 1e-10)")
    parser.add_argument("--tol-dedup", type=float, metavar="X",
                        help="projective endpoint identification (default 1e-6)")
    parser.add_argument("--sample-r", nargs=3, metavar=("a", "b", "c"),
                        help="census parameter triple, fractions allowed")
    args = parser.parse_args(argv)

    filter_ = args.filter if args.filter is not None \
        else _env("FILTER", str, "*")
    seed = args.seed if args.seed is not None else _env("SEED", int, 42)
    fmt = args.format if args.format is not None \
        else _env("FORMAT", str, "text")
    jobs = args.jobs if args.jobs is not None else _env("JOBS", int, 1)
    tol_track = args.tol_track if args.tol_track is not None \
        else _env("TOL_TRACK", float, 1e-10)
    tol_dedup = args.tol_dedup if args.tol_dedup is not None \
        else _env("TOL_DEDUP", float, 1e-6)
    tol_rank = _env("TOL_RANK", float, 1e-8)
    tol_cluster = _env("TOL_CLUSTER", float, 1e-4)
    if args.sample_r is not None:
        sample_r = _parse_sample_r(args.sample_r)
    else:
        raw = os.environ.get(ENV_PREFIX + "SAMPLE_R")
        sample_r = _parse_sample_r(raw.split()) if raw else DEFAULT_SAMPLE_R
    return RunConfig(filter=filter_, seed=seed, tol_track=tol_track,
                     tol_dedup=tol_dedup, tol_rank=tol_rank,
                     tol_cluster=tol_cluster, sample_r=sample_r,
                     format=fmt, jobs=jobs)


def main(argv=None) -> int:
    try:
        config = build_config(argv)
        config.validate()
    except (ValueError, ZeroDivisionError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    try:
        report = run(config)
    except LookupError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 2
    out = render_json(report) if config.format == "json" \
        else render_text(report)
    print(out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
