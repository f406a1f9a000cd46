"""Running suites over a grid and assembling the JSON report."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor

from .. import __version__
from ..exactalg import field_from_spec, parse_field
from ..involutions import algebra_from_doc, algebra_to_doc, canonical
from .checks import FAIL, NOT_FOUND, PASS, SKIP, Checker
from .config import SuiteConfig
from .instances import generate_instance, instance_seed
from .suites import FIELD_ONLY, SUITES

REPORT_SCHEMA = "neatalg.report/1"
FAILURE_SCHEMA = "neatalg.failure/1"


def suite_points(cfg: SuiteConfig, suite: str):
    """(index, grid point, generation seed, sampling seed) for each instance of a suite."""
    grid = cfg.grid()
    if suite in FIELD_ONLY:
        seen, pts = set(), []
        for p in grid:
            if p[0] not in seen:
                seen.add(p[0])
                pts.append((p[0], None, None))
        grid = pts
    out = []
    for i, p in enumerate(grid):
        for k in range(cfg.instances_per_point):
            idx = i * cfg.instances_per_point + k
            s = instance_seed(cfg.seed, idx)
            out.append((idx, p, 0 if k == 0 else s, s))
    return out


def run_checks(suite, obj, seed, samples, budget):
    ck = Checker()
    try:
        SUITES[suite](obj, seed, samples, budget, ck)
    except Exception as exc:  # a suite crash is a failure, never a silent pass
        ck.fail("suite-error", f"{type(exc).__name__}: {exc}")
    return ck.summary()


def run_instance(suite, idx, point, gen_seed, seed, samples, budget):
    """One entry of the report, plus failure records."""
    if suite in FIELD_ONLY:
        obj = parse_field(point[0])
        instance_doc = None
    else:
        obj = generate_instance(point, gen_seed)
        instance_doc = algebra_to_doc(obj)
    results = run_checks(suite, obj, seed, samples, budget)
    statuses = {r.status for r in results}
    status = FAIL if FAIL in statuses else NOT_FOUND if NOT_FOUND in statuses else PASS if PASS in statuses else SKIP
    entry = {"index": idx, "grid_point": list(point), "generation_seed": gen_seed, "seed": seed, "status": status,
             "checks": [r.to_doc() for r in results]}
    failures = []
    for r in results:
        if r.status != FAIL:
            continue
        failures.append({"schema": FAILURE_SCHEMA, "suite": suite, "index": idx, "grid_point": list(point),
                         "seed": seed, "samples": samples, "budget": budget, "check": r.name, "detail": r.detail,
                         "field": obj.spec() if instance_doc is None else instance_doc["field"],
                         "instance": instance_doc})
    return entry, failures


def _run_instance_args(args):
    return run_instance(*args)


def run_suite(cfg: SuiteConfig, jobs: int = 1, progress=None) -> dict:
    """Run every configured suite; ``progress(name, summary)`` is called as each finishes."""
    t0 = time.perf_counter()
    suites = {}
    for suite in cfg.suites:
        s0 = time.perf_counter()
        samples = cfg.samples_for(suite)
        tasks = [(suite, idx, p, g, s, samples, cfg.budget) for idx, p, g, s in suite_points(cfg, suite)]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_instance_args, tasks))
        else:
            results = [run_instance(*t) for t in tasks]
        results.sort(key=lambda r: r[0]["index"])
        entries = [r[0] for r in results]
        failures = [f for r in results for f in r[1]]
        suites[suite] = {
            "instances": len(entries),
            "passes": sum(e["status"] == PASS for e in entries),
            "failures": failures,
            "failed_instances": sum(e["status"] == FAIL for e in entries),
            "not_found": sum(e["status"] == NOT_FOUND for e in entries),
            "skipped": sum(e["status"] == SKIP for e in entries),
            "entries": entries,
            "wall_time": round(time.perf_counter() - s0, 3),
        }
        if progress is not None:
            progress(suite, suites[suite])
    return {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "seed": cfg.seed,
        "config": cfg.echo(),
        "suites": suites,
        "total_failures": sum(len(s["failures"]) for s in suites.values()),
        "wall_time": round(time.perf_counter() - t0, 3),
    }


def strip_wall_time(doc):
    if isinstance(doc, dict):
        return {k: strip_wall_time(v) for k, v in doc.items() if k != "wall_time"}
    if isinstance(doc, list):
        return [strip_wall_time(v) for v in doc]
    return doc


def report_json(report: dict) -> str:
    return canonical(report)


def replay(failure: dict):
    """Re-run the suite that produced ``failure``; returns (reproduced, results)."""
    if failure.get("schema") != FAILURE_SCHEMA:
        raise ValueError("not a failure record")
    suite = failure["suite"]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if failure.get("instance") is None:
        obj = field_from_spec(failure["field"])
    else:
        obj = algebra_from_doc(failure["instance"])
    results = run_checks(suite, obj, failure["seed"], failure["samples"], failure["budget"])
    reproduced = any(r.name == failure["check"] and r.status == FAIL for r in results)
    return reproduced, results
