"""Exhaustive ground truth for every set family.

The oracle walks a family depth first in lexicographic order, carrying the
continuant pair of the prefix so each member costs one multiply-add.  It is
exhaustive or it refuses; there is no sampling in :func:`brute_force`.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import Seq, as_sequence, continuant, continuant_pair, normal_form, to_decimal
from .extremal import DomainError, MultisetSpec
from .reflect import MajorizationVerdict, majorizes

FAMILIES = ("W", "V", "U_Stn", "U_St", "U_nS")


@dataclass(frozen=True)
class EnumerationRequest:
    family: str
    multiset: MultisetSpec | None = None
    S: int | None = None
    t: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        if self.family in ("W", "V"):
            if self.multiset is None:
                raise DomainError(f"family {self.family} needs a multiset")
            return
        if self.S is None or self.S < 1:
            raise DomainError("compositions need a positive sum S")
        if self.family == "U_Stn" and (self.t is None or self.n is None):
            raise DomainError("U_Stn needs both t and n")
        if self.family == "U_St" and self.t is None:
            raise DomainError("U_St needs t")
        if self.family == "U_nS" and self.n is None:
            raise DomainError("U_nS needs n")
        if (self.t is not None and self.t < 1) or (self.n is not None and self.n < 1):
            raise DomainError("t and n must be positive")

    @classmethod
    def w(cls, ms: MultisetSpec) -> "EnumerationRequest":
        return cls("W", multiset=ms)

    @classmethod
    def v(cls, ms: MultisetSpec) -> "EnumerationRequest":
        return cls("V", multiset=ms)

    @classmethod
    def ustn(cls, S: int, t: int, n: int) -> "EnumerationRequest":
        return cls("U_Stn", S=S, t=t, n=n)

    @classmethod
    def ust(cls, S: int, t: int) -> "EnumerationRequest":
        return cls("U_St", S=S, t=t)

    @classmethod
    def uns(cls, S: int, n: int) -> "EnumerationRequest":
        return cls("U_nS", S=S, n=n)

    @property
    def part_bound(self) -> int:
        if self.family == "U_St":
            return self.S - self.t + 1
        return self.n

    @property
    def length(self) -> int | None:
        return None if self.family == "U_nS" else self.t


@dataclass
class BruteForceReport:
    min_value: int | None = None
    max_value: int | None = None
    argmin: list[Seq] = field(default_factory=list)
    argmax: list[Seq] = field(default_factory=list)
    cardinality: int = 0

    def merge(self, other: "BruteForceReport") -> "BruteForceReport":
        if other.cardinality == 0:
            return self
        if self.cardinality == 0:
            return other
        out = BruteForceReport(cardinality=self.cardinality + other.cardinality)
        for attr, wattr, better in (("min_value", "argmin", int.__lt__), ("max_value", "argmax", int.__gt__)):
            a, b = getattr(self, attr), getattr(other, attr)
            if a == b:
                setattr(out, attr, a)
                setattr(out, wattr, getattr(self, wattr) + getattr(other, wattr))
            elif better(a, b):
                setattr(out, attr, a)
                setattr(out, wattr, list(getattr(self, wattr)))
            else:
                setattr(out, attr, b)
                setattr(out, wattr, list(getattr(other, wattr)))
        return out

    def to_record(self) -> dict:
        dec = lambda v: None if v is None else to_decimal(v)
        return {
            "min": dec(self.min_value),
            "max": dec(self.max_value),
            "argmin": [list(s) for s in self.argmin],
            "argmax": [list(s) for s in self.argmax],
            "cardinality": self.cardinality,
        }


def _composition_bounds(rem: int, slots: int | None, bound: int) -> range:
    if slots is None:
        return range(1, min(bound, rem) + 1)
    if slots == 0:
        return range(0)
    return range(max(1, rem - bound * (slots - 1)), min(bound, rem - (slots - 1)) + 1)


def enumerate_family(req: EnumerationRequest) -> Iterator[Seq]:
    """Yield every member of the family once, in lexicographic order."""
    if req.family in ("W", "V"):
        ms = req.multiset
        counts = list(ms.mults)
        prefix: list[int] = []
        if req.family == "V":
            counts[0] -= 1
            prefix.append(ms.values[0])

        def walk(remaining):
            if remaining == 0:
                yield tuple(prefix)
                return
            for idx, value in enumerate(ms.values):
                if counts[idx]:
                    counts[idx] -= 1
                    prefix.append(value)
                    yield from walk(remaining - 1)
                    prefix.pop()
                    counts[idx] += 1

        yield from walk(sum(counts))
        return

    bound, length = req.part_bound, req.length
    prefix = []

    def walk_parts(rem, slots):
        if rem == 0 and not slots:
            yield tuple(prefix)
            return
        for a in _composition_bounds(rem, slots, bound):
            prefix.append(a)
            yield from walk_parts(rem - a, None if slots is None else slots - 1)
            prefix.pop()

    if length is not None and not length <= req.S <= bound * length:
        return
    yield from walk_parts(req.S, length)


def _scan(req: EnumerationRequest, prefix: Seq = ()) -> BruteForceReport:
    """Exact extrema over the members of ``req`` that start with ``prefix``."""
    buf = list(prefix)
    lo = hi = None
    argmin: list[Seq] = []
    argmax: list[Seq] = []
    count = 0

    def leaf(p):
        nonlocal lo, hi, argmin, argmax, count
        count += 1
        if lo is None or p < lo:
            lo, argmin = p, [tuple(buf)]
        elif p == lo:
            argmin.append(tuple(buf))
        if hi is None or p > hi:
            hi, argmax = p, [tuple(buf)]
        elif p == hi:
            argmax.append(tuple(buf))

    p0, q0 = continuant_pair(prefix)
    if req.family in ("W", "V"):
        ms = req.multiset
        values = ms.values
        counts = list(ms.mults)
        for a in prefix:
            counts[values.index(a)] -= 1
        if any(c < 0 for c in counts):
            return BruteForceReport()
        f = len(values)

        def walk(remaining, p, q):
            if remaining == 0:
                leaf(p)
                return
            for idx in range(f):
                if counts[idx]:
                    counts[idx] -= 1
                    a = values[idx]
                    buf.append(a)
                    walk(remaining - 1, a * p + q, p)
                    buf.pop()
                    counts[idx] += 1

        walk(sum(counts), p0, q0)
    else:
        bound, length = req.part_bound, req.length
        rem0 = req.S - sum(prefix)
        slots0 = None if length is None else length - len(prefix)
        if rem0 < 0 or (slots0 is not None and slots0 < 0):
            return BruteForceReport()

        def walk_parts(rem, slots, p, q):
            if rem == 0 and not slots:
                leaf(p)
                return
            for a in _composition_bounds(rem, slots, bound):
                buf.append(a)
                walk_parts(rem - a, None if slots is None else slots - 1, a * p + q, p)
                buf.pop()

        walk_parts(rem0, slots0, p0, q0)
    return BruteForceReport(lo, hi, argmin, argmax, count)


def _partition(req: EnumerationRequest) -> list[Seq]:
    if req.family == "W":
        return [(h,) for h in req.multiset.values]
    if req.family == "V":
        h1 = req.multiset.values[0]
        rest = [h for h, p in zip(req.multiset.values, req.multiset.mults) if p > (h == h1)]
        return [(h1, h) for h in rest] or [(h1,)]
    return [(a,) for a in range(1, min(req.part_bound, req.S) + 1)]


def brute_force(req: EnumerationRequest, jobs: int = 1) -> BruteForceReport:
    """Exact minimum and maximum with complete, lexicographically sorted witness lists.

    With ``jobs > 1`` the family is split by prefix and scanned in worker
    processes; the merged report is identical to the serial one.
    """
    if jobs <= 1:
        if req.family == "V":
            return _scan(req, (req.multiset.values[0],))
        return _scan(req)
    prefixes = _partition(req)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_scan, [req] * len(prefixes), prefixes))
    report = BruteForceReport()
    for part in parts:
        report = report.merge(part)
    return report


def uniqueness_check(req: EnumerationRequest, which: str = "min", report: BruteForceReport | None = None) -> bool:
    """Do all minimizers (or maximizers) share one class under reversal and unit extraction?"""
    if which not in ("min", "max"):
        raise ValueError("which must be 'min' or 'max'")
    report = report or brute_force(req)
    witnesses = report.argmin if which == "min" else report.argmax
    return len({normal_form(w) for w in witnesses}) <= 1


def concavity_holds(seq: Seq, i: int, j: int) -> bool:
    """Moving one unit between positions ``i < j`` (0-based) of ``seq``.

    With ``a = seq[i]`` and the sum ``seq[i] + seq[j]`` fixed, the continuant
    ``F(a)`` is strictly concave in ``a``, so
    ``F(a) > min(F(a - 1), F(a + 1))`` whenever both neighbours keep every
    element positive.
    """
    seq = list(as_sequence(seq))
    a, b = seq[i], seq[j]
    if a < 2 or b < 2:
        raise ValueError("both elements must be at least 2")

    def value(x):
        s = list(seq)
        s[i], s[j] = x, a + b - x
        return continuant(s)

    return value(a) > min(value(a - 1), value(a + 1))


def random_member(req: EnumerationRequest, rng: random.Random) -> Seq | None:
    """A member of a composition family drawn part by part (not uniformly)."""
    if req.family not in ("U_Stn", "U_St", "U_nS"):
        raise DomainError("random_member draws compositions only")
    rem, slots, parts = req.S, req.length, []
    if slots is not None and not slots <= rem <= req.part_bound * slots:
        return None
    while rem > 0:
        choices = _composition_bounds(rem, slots, req.part_bound)
        a = rng.choice(choices)
        parts.append(a)
        rem -= a
        slots = None if slots is None else slots - 1
    return tuple(parts)


def unit_variation_check(req: EnumerationRequest, samples: int = 200, seed: int = 0,
                         report: BruteForceReport | None = None) -> bool:
    """(a) every minimizer has at most one element outside ``{1, n}``;
    (b) the concavity move holds on random members with two such elements."""
    if req.family not in ("U_Stn", "U_nS"):
        raise DomainError("unit variation applies to bounded compositions only")
    n = req.n
    report = report or brute_force(req)
    for w in report.argmin:
        if sum(1 for a in w if a not in (1, n)) > 1:
            return False
    rng = random.Random(seed)
    for _ in range(samples):
        seq = random_member(req, rng)
        if seq is None:
            break
        inner = [k for k, a in enumerate(seq) if 1 < a < n]
        if len(inner) < 2:
            continue
        i, j = sorted(rng.sample(inner, 2))
        if not concavity_holds(seq, i, j):
            return False
    return True


def unit_shift(a: int, b: int, c: int, p: int) -> tuple[int, int]:
    """``(<a, b^p, c>, <a - 1, b^p, c + 1>)``."""
    if a < 2:
        raise ValueError("a must be at least 2")
    return continuant((a,) + (b,) * p + (c,)), continuant((a - 1,) + (b,) * p + (c + 1,))


def unit_shift_verdict(a: int, b: int, c: int, p: int, tail: Seq) -> MajorizationVerdict:
    """How <a, b^p, c, tail> sits under <a - 1, b^p, c + 1, tail>.

    The heads are taken to include the first tail element, so the
    truncated comparison is the one between the shifted blocks themselves.
    """
    tail = as_sequence(tail)
    if not tail:
        raise ValueError("the tail must be nonempty")
    x = (a - 1,) + (b,) * p + (c + 1,) + tail[:1]
    y = (a,) + (b,) * p + (c,) + tail[:1]
    return majorizes(x, y, len(tail) - 1)


def representable(T: int, n: int) -> bool:
    """Direct search: is ``T = k*n + j*(n + 1)`` for some ``k, j >= 0``?"""
    if T < 0:
        return False
    return any((T - n * k) % (n + 1) == 0 for k in range(T // n + 1))


def residues_by_search(S: int, n: int) -> frozenset[int]:
    """``{z in 1..n-1 : S - z is a sum of n's and (n+1)'s}`` by direct search."""
    return frozenset(z for z in range(1, n) if representable(S - z, n))
