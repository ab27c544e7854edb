"""Batch scan drivers: enumerate or sample polynomial spaces, run the
selected checks, and emit deterministic JSON-lines and CSV reports.

All kernels are pure; worker processes only parallelize over independent
work items and results are sorted by a canonical key before writing, so
output bytes are independent of the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache

from .bounds import (
    choose_L,
    envelope_check,
    orbit_bound_check,
    run_bound_check,
    weil_check,
)
from .classify import TWO_ORDINARY, classify_2_ordinary
from .dynamics import longest_run, sign_sequence
from .errors import NotPurelyPeriodic
from .field import FieldElement, FieldSpec, make_field
from .fpoly import Poly

BOUNDS_CSV_COLUMNS = ["q", "d", "f", "a", "m", "orbit", "L", "maxB", "lhs", "rhs", "pass"]


@dataclass(frozen=True)
class ScanConfig:
    field: str
    degree: int
    space: str = "monic"  # "monic" | "all" | "sample"
    checks: tuple[str, ...] = ("classification",)
    sample: int | None = None
    seed: int = 0
    depth: int = 6
    budget: int = 4096
    workers: int = 1
    bound_Ls: tuple[int, ...] = ()

    def to_json(self):
        return asdict(self)


@lru_cache(maxsize=None)
def _resolve_field(field_str: str) -> FieldSpec:
    return FieldSpec.parse(field_str)


def enumerate_polys(field: FieldSpec, degree: int, space: str = "monic"):
    """Dense coefficient enumeration in canonical (index-lexicographic) order."""
    q = field.q

    def rec(prefix, remaining):
        if remaining == 0:
            yield prefix
            return
        for c in range(q):
            yield from rec(prefix + [c], remaining - 1)

    if space == "monic":
        for lower in rec([], degree):
            yield Poly(field, lower + [field.one_idx])
    elif space == "all":
        for lead in range(1, q):
            for lower in rec([], degree):
                yield Poly(field, lower + [lead])
    else:
        raise ValueError(f"unknown coefficient space {space!r}")


def sample_polys(field: FieldSpec, degree: int, count: int, seed: int) -> list[Poly]:
    """Seeded monic sample, without replacement when the space is small enough."""
    q = field.q
    total = q**degree
    rng = random.Random(seed)
    if total <= 4 * count:
        picks = sorted(rng.sample(range(total), min(count, total)))
    else:
        seen = set()
        while len(seen) < count:
            seen.add(rng.randrange(total))
        picks = sorted(seen)
    out = []
    for idx in picks:
        coeffs = []
        rem = idx
        for _ in range(degree):
            coeffs.append(rem % q)
            rem //= q
        out.append(Poly(field, coeffs + [field.one_idx]))
    return out


# --- per-item kernels (top level so worker processes can import them) ------

def _classify_item(args):
    field_str, coeffs, seed = args
    F = _resolve_field(field_str)
    f = Poly(F, coeffs)
    rep = classify_2_ordinary(f, seed)
    row = {"q": F.q, "d": f.degree, "f": str(f)}
    row.update(rep.to_json())
    return row


def _weil_item(args):
    field_str, coeffs = args
    F = _resolve_field(field_str)
    f = Poly(F, coeffs)
    wc = weil_check(f)
    return {"q": F.q, "d": f.degree, "f": str(f), **wc.to_json()}


def _orbit_bounds_item(args):
    field_str, coeffs, a_idx, Ls, budget = args
    F = _resolve_field(field_str)
    f = Poly(F, coeffs)
    a = FieldElement(F, a_idx)
    rep = classify_2_ordinary(f)
    rows = []
    for L in Ls:
        ob = orbit_bound_check(f, a, L, budget=budget)
        env_pass = None
        if rep.verdict == TWO_ORDINARY:
            env_pass = all(
                envelope_check(f, a, i, L, classification=rep, budget=budget).passed
                for i in range(ob.m)
            )
        rows.append(
            {
                "q": F.q,
                "d": f.degree,
                "f": str(f),
                "a": a_idx,
                "m": ob.m,
                "orbit": ob.orbit_size,
                "L": L,
                "maxB": str(max(ob.B_values)),
                "lhs": ob.lhs,
                "rhs": str(ob.rhs_sum),
                "pass": bool(ob.passed and ob.passed_uniform),
                "two_ordinary": rep.verdict == TWO_ORDINARY,
                "envelope_pass": env_pass,
            }
        )
    return rows


def _run_bounds_item(args):
    field_str, coeffs, a_idx, budget = args
    F = _resolve_field(field_str)
    f = Poly(F, coeffs)
    a = FieldElement(F, a_idx)
    return run_bound_check(f, a, budget=budget).to_json()


def _ratio_item(args):
    field_str, coeffs = args
    F = _resolve_field(field_str)
    f = Poly(F, coeffs)
    scale = F.q ** (5 / 6)
    best_orbit = 0.0
    best_run = 0.0
    for a in F.elements():
        ss = sign_sequence(f, a)
        if ss.purely_periodic:
            best_orbit = max(best_orbit, ss.orbit.size / (ss.sign_period * scale))
        for target in (1, -1):
            r = longest_run(f, a, target)
            best_run = max(best_run, r.length / scale)
    return {"q": F.q, "f": str(f), "orbit_ratio": best_orbit, "run_ratio": best_run}


def _pmap(fn, items, workers: int):
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (workers * 4))))


# --- drivers ---------------------------------------------------------------

def classification_scan(cfg: ScanConfig):
    F = _resolve_field(cfg.field)
    if cfg.space == "sample":
        polys = sample_polys(F, cfg.degree, cfg.sample or 100, cfg.seed)
    else:
        polys = list(enumerate_polys(F, cfg.degree, cfg.space))
    items = [(cfg.field, p.coeffs, cfg.seed) for p in polys]
    rows = _pmap(_classify_item, items, cfg.workers)
    rows.sort(key=lambda r: (r["q"], r["d"], r["f"]))
    counts: dict[str, int] = {}
    for r in rows:
        counts[r["verdict"]] = counts.get(r["verdict"], 0) + 1
        for fm in r["forms"]:
            key = "form_" + fm["form"]
            counts[key] = counts.get(key, 0) + 1
    return rows, counts


def weil_scan(cfg: ScanConfig):
    F = _resolve_field(cfg.field)
    polys = list(enumerate_polys(F, cfg.degree, "monic"))
    items = [(cfg.field, p.coeffs) for p in polys]
    rows = _pmap(_weil_item, items, cfg.workers)
    rows.sort(key=lambda r: (r["q"], r["d"], r["f"]))
    failures = [r for r in rows if r["applies"] and not r["passed"]]
    return rows, failures


def purely_periodic_pairs(field: FieldSpec, degree: int):
    """All (f, a) with f monic of the given degree and purely periodic signs."""
    for f in enumerate_polys(field, degree, "monic"):
        for a in field.elements():
            if sign_sequence(f, a).purely_periodic:
                yield f, a


def bounds_scan(cfg: ScanConfig):
    """Sampled orbit-bound + envelope rows in the fixed CSV schema."""
    F = _resolve_field(cfg.field)
    pairs = list(purely_periodic_pairs(F, cfg.degree))
    count = cfg.sample or len(pairs)
    rng = random.Random(cfg.seed)
    if count < len(pairs):
        pairs = [pairs[i] for i in sorted(rng.sample(range(len(pairs)), count))]
    Ls = cfg.bound_Ls or tuple(range(1, max(choose_L(F.q, cfg.degree), 3) + 1))
    items = [(cfg.field, f.coeffs, a.idx, Ls, cfg.budget) for f, a in pairs]
    nested = _pmap(_orbit_bounds_item, items, cfg.workers)
    rows = [r for chunk in nested for r in chunk]
    rows.sort(key=lambda r: (r["q"], r["d"], r["f"], r["a"], r["L"]))
    return rows


def run_bounds_scan(cfg: ScanConfig):
    """Run-structure inequality over every monic f outside forms (a)-(e)."""
    F = _resolve_field(cfg.field)
    items = []
    for f in enumerate_polys(F, cfg.degree, "monic"):
        if classify_2_ordinary(f).verdict != TWO_ORDINARY:
            continue
        for a in F.elements():
            items.append((cfg.field, f.coeffs, a.idx, cfg.budget))
    rows = _pmap(_run_bounds_item, items, cfg.workers)
    rows.sort(key=lambda r: (r["q"], r["f"], r["a"]))
    return rows


def ratio_scan(cfg: ScanConfig):
    """Observational max |O|/(m q^(5/6)) and R/q^(5/6) over a seeded sample."""
    F = _resolve_field(cfg.field)
    if cfg.space == "sample" or cfg.sample:
        polys = sample_polys(F, cfg.degree, cfg.sample or 100, cfg.seed)
    else:
        polys = list(enumerate_polys(F, cfg.degree, "monic"))
    items = [(cfg.field, p.coeffs) for p in polys]
    rows = _pmap(_ratio_item, items, cfg.workers)
    max_orbit = max((r["orbit_ratio"] for r in rows), default=0.0)
    max_run = max((r["run_ratio"] for r in rows), default=0.0)
    return {
        "q": F.q,
        "d": cfg.degree,
        "polys": len(rows),
        "max_orbit_ratio": f"{max_orbit:.6f}",
        "max_run_ratio": f"{max_run:.6f}",
    }


# --- emission --------------------------------------------------------------

def write_jsonl(rows, path):
    with open(path, "w") as fh:
        for r in rows:
            fh.write(json.dumps(r, sort_keys=True) + "\n")


def rows_to_csv_text(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def write_csv(rows, columns, path):
    with open(path, "w") as fh:
        fh.write(rows_to_csv_text(rows, columns))
