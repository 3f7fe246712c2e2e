"""Formula-versus-oracle verification grids.

A grid is a sorted list of parameter points for one family of extremal
results.  Each point is evaluated twice, once by the closed-form builder and
once exhaustively, and the two values must agree exactly.
"""
from __future__ import annotations

import functools
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import extremal
from .core import to_decimal
from .extremal import ExtremalResult, MultisetSpec
from .oracle import BruteForceReport, EnumerationRequest, brute_force, uniqueness_check

GRID_FAMILIES = ("thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7")

DEFAULT_RANGES = {
    "thm1": {"f_max": 4, "h_max": 6, "t_max": 9},
    "thm2": {"f_max": 4, "h_max": 6, "t_max": 9},
    "thm3": {"f_max": 4, "h_max": 6, "t_max": 9},
    "thm4": {"S_max": 20, "n_min": 2, "n_max": 6},
    "thm5": {"S_max": 18},
    "thm6": {"S_max": 20, "n_max": 5},
    "thm7": {"S_max": 24, "n_max": 5},
}

# Closed-form side of each grid.  Tests swap entries out to exercise the
# mismatch path, so look them up at call time.
FORMULAS: dict[str, Callable[[dict], ExtremalResult]] = {
    "thm1": lambda p: extremal.max_v(MultisetSpec(p["values"], p["mults"])),
    "thm2": lambda p: extremal.max_w(MultisetSpec(p["values"], p["mults"])),
    "thm3": lambda p: extremal.min_w(MultisetSpec(p["values"], p["mults"])),
    "thm4": lambda p: extremal.max_un(p["S"]),
    "thm5": lambda p: extremal.max_ust(p["S"], p["t"]),
    "thm6": lambda p: extremal.min_ustn(p["S"], p["t"], p["n"]),
    "thm7": lambda p: extremal.min_un(p["S"], p["n"]),
}

# (request builder, which extremum)
ORACLES: dict[str, tuple[Callable[[dict], EnumerationRequest], str]] = {
    "thm1": (lambda p: EnumerationRequest.v(MultisetSpec(p["values"], p["mults"])), "max"),
    "thm2": (lambda p: EnumerationRequest.w(MultisetSpec(p["values"], p["mults"])), "max"),
    "thm3": (lambda p: EnumerationRequest.w(MultisetSpec(p["values"], p["mults"])), "min"),
    "thm4": (lambda p: EnumerationRequest.uns(p["S"], p["n"]), "max"),
    "thm5": (lambda p: EnumerationRequest.ust(p["S"], p["t"]), "max"),
    "thm6": (lambda p: EnumerationRequest.ustn(p["S"], p["t"], p["n"]), "min"),
    "thm7": (lambda p: EnumerationRequest.uns(p["S"], p["n"]), "min"),
}


@functools.lru_cache(maxsize=8192)
def cached_brute_force(req: EnumerationRequest) -> BruteForceReport:
    """:func:`brute_force` memoized per request; W grids share one scan for min and max."""
    return brute_force(req)


@dataclass
class GridPoint:
    params: dict
    formula_value: int
    oracle_value: int
    match: bool
    runtime: float
    witness: tuple
    oracle_witnesses: list
    unique: bool | None = None

    def to_record(self) -> dict:
        return {
            "params": self.params,
            "formula": to_decimal(self.formula_value),
            "oracle": to_decimal(self.oracle_value),
            "match": self.match,
            "runtime": round(self.runtime, 6),
            "witness": list(self.witness),
            "oracle_witnesses": [list(w) for w in self.oracle_witnesses],
            "unique": self.unique,
        }


@dataclass
class VerificationGrid:
    family: str
    ranges: dict
    points: list[GridPoint] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(p.match for p in self.points)

    @property
    def all_unique(self) -> bool:
        return all(p.unique for p in self.points)

    def first_mismatch(self) -> GridPoint | None:
        return next((p for p in self.points if not p.match), None)

    def to_record(self, verbose: bool = False) -> dict:
        record = {
            "family": self.family,
            "ranges": self.ranges,
            "points": len(self.points),
            "all_match": self.all_match,
            "runtime": round(sum(p.runtime for p in self.points), 6),
        }
        bad = self.first_mismatch()
        record["first_mismatch"] = bad.to_record() if bad else None
        if verbose:
            record["results"] = [p.to_record() for p in self.points]
        return record


def multisets(f_max: int, h_max: int, t_max: int) -> Iterator[MultisetSpec]:
    """Every multiset with at most ``f_max`` distinct values in ``1..h_max`` and at most ``t_max`` elements."""
    for f in range(1, f_max + 1):
        for values in itertools.combinations(range(1, h_max + 1), f):
            for mults in itertools.product(range(1, t_max - f + 2), repeat=f):
                if sum(mults) <= t_max:
                    yield MultisetSpec(values, mults)


def grid_points(family: str, **ranges) -> list[dict]:
    """Parameter points of a grid, sorted by their parameter tuple."""
    if family not in GRID_FAMILIES:
        raise ValueError(f"unknown grid family {family!r}")
    r = {**DEFAULT_RANGES[family], **{k: v for k, v in ranges.items() if v is not None}}
    if family in ("thm1", "thm2", "thm3"):
        pts = [{"values": list(ms.values), "mults": list(ms.mults)} for ms in multisets(r["f_max"], r["h_max"], r["t_max"])]
        return sorted(pts, key=lambda p: (p["values"], p["mults"]))
    if family == "thm4":
        pts = [{"S": S, "n": n} for S in range(1, r["S_max"] + 1) for n in range(r["n_min"], r["n_max"] + 1)]
    elif family == "thm5":
        pts = [{"S": S, "t": t} for S in range(2, r["S_max"] + 1) for t in range(2, S + 1)]
    elif family == "thm6":
        pts = [
            {"S": S, "t": t, "n": n}
            for n in range(2, r["n_max"] + 1)
            for t in range(2, r["S_max"] + 1)
            for S in range(t, min(n * t, r["S_max"]) + 1)
        ]
    else:
        pts = [{"S": S, "n": n} for n in range(2, r["n_max"] + 1) for S in range(2 * n + 2, r["S_max"] + 1)]
    return sorted(pts, key=lambda p: tuple(p.values()))


def evaluate_point(family: str, params: dict, uniqueness: bool = False) -> GridPoint:
    start = time.perf_counter()
    result = FORMULAS[family](params)
    build, which = ORACLES[family]
    report = cached_brute_force(build(params))
    oracle_value = report.min_value if which == "min" else report.max_value
    witnesses = report.argmin if which == "min" else report.argmax
    unique = uniqueness_check(None, which, report) if uniqueness else None
    return GridPoint(
        params=params,
        formula_value=result.value,
        oracle_value=oracle_value,
        match=result.value == oracle_value and result.witness in witnesses,
        runtime=time.perf_counter() - start,
        witness=result.witness,
        oracle_witnesses=witnesses,
        unique=unique,
    )


def _evaluate_star(args):
    return evaluate_point(*args)


def run_grid(family: str, jobs: int = 1, uniqueness: bool = False, **ranges) -> VerificationGrid:
    """Evaluate every point of a grid; with ``jobs > 1`` points run in worker processes.

    Worker processes import :data:`FORMULAS` afresh, so patched formulas
    only take effect with ``jobs == 1``.
    """
    points = grid_points(family, **ranges)
    effective = {**DEFAULT_RANGES[family], **{k: v for k, v in ranges.items() if v is not None}}
    grid = VerificationGrid(family, effective)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            grid.points = list(pool.map(_evaluate_star, [(family, p, uniqueness) for p in points], chunksize=16))
    else:
        grid.points = [evaluate_point(family, p, uniqueness) for p in points]
    return grid
