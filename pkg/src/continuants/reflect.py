"""Reflections of a middle segment and what they do to a continuant.

A reflection (basic substitution) splits a sequence as ``U, V, W`` and
reverses ``V``.  Its effect on the continuant is decided by the sign of

    a(U, V, W) = ([0; reversed U] - [0; W]) * ([0; reversed V] - [0; V])

which this module computes exactly.  On top of that sit the step-up and
step-down algorithms that move any arrangement monotonically to the extremal
one, the head-majorization predicate and the associated inequality checks.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    INFINITY,
    Seq,
    as_sequence,
    cf_value,
    continuant,
    continuant_pair,
    to_decimal,
    trivially_equal,
)


@dataclass(frozen=True)
class ReflectionSpec:
    """Reverse positions ``lo..hi`` (1-based, inclusive) of a host sequence."""

    lo: int
    hi: int

    def check(self, length: int) -> None:
        if not 1 <= self.lo <= self.hi <= length:
            raise IndexError(f"reflection {self.lo}..{self.hi} outside a sequence of length {length}")
        if self.lo == 1 and self.hi == length:
            raise IndexError("a reflection needs a nonempty prefix or suffix outside the middle")

    def parts(self, seq: Seq) -> tuple[Seq, Seq, Seq]:
        self.check(len(seq))
        return seq[: self.lo - 1], seq[self.lo - 1 : self.hi], seq[self.hi :]


class Kind(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    TRIVIAL = "trivial"
    # equal continuants without a symmetry/unit-extraction explanation
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    sign: int

    @property
    def preserves_value(self) -> bool:
        return self.sign == 0


class MajorizationVerdict(enum.Enum):
    NOT_MAJORIZED = "not-majorized"
    MAJORIZED = "majorized"
    STRICTLY_MAJORIZED = "strictly-majorized"


def apply_reflection(seq: Iterable[int], spec: ReflectionSpec) -> Seq:
    """Return ``seq`` with the middle ``spec.lo..spec.hi`` reversed.

    >>> apply_reflection((1, 3, 2, 1), ReflectionSpec(2, 3))
    (1, 2, 3, 1)
    """
    u, v, w = spec.parts(as_sequence(seq))
    return u + v[::-1] + w


def a_value(seq: Iterable[int], spec: ReflectionSpec) -> Fraction:
    """Exact a(U, V, W); an empty U or W contributes a zero continued fraction."""
    u, v, w = spec.parts(as_sequence(seq))
    # [0; u_alpha..u_1] = <u minus last>/<u>,  [0; w_1..w_gamma] = <w minus first>/<w>,
    # and both middle fractions share the denominator <v>
    u_full, u_trunc = continuant_pair(u)
    w_full, w_tail = continuant_pair(w[::-1])
    v_full, v_trunc = continuant_pair(v)
    v_tail = continuant(v[1:])
    outer = u_trunc * w_full - w_tail * u_full
    return Fraction(outer * (v_trunc - v_tail), u_full * w_full * v_full)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def classify(seq: Iterable[int], spec: ReflectionSpec) -> Classification:
    """Decide from the sign of :func:`a_value` whether the reflection raises,
    lowers or keeps the continuant."""
    seq = as_sequence(seq)
    s = _sign(a_value(seq, spec))
    if s > 0:
        return Classification(Kind.INCREASING, s)
    if s < 0:
        return Classification(Kind.DECREASING, s)
    reflected = apply_reflection(seq, spec)
    kind = Kind.TRIVIAL if trivially_equal(seq, reflected) else Kind.NEUTRAL
    return Classification(kind, 0)


def most_remote_pair(seq: Iterable[int]) -> tuple[int, int] | None:
    """1-based ``(i, j)`` with ``a_i > a_j``, ``i < j`` and ``j - i`` maximal.

    Ties on the distance go to the smallest ``i``.  ``None`` means the
    sequence is nondecreasing.
    """
    seq = as_sequence(seq)
    t = len(seq)
    for d in range(t - 1, 0, -1):
        for i in range(t - d):
            if seq[i] > seq[i + d]:
                return i + 1, i + d + 1
    return None


def _step_up_block(s: list[int], lo: int, hi: int, backwards: bool, trace: list[ReflectionSpec]) -> None:
    # s[lo..hi] (0-based) holds its minimum at the reading start; reflect the
    # most remote inverted pair until the block reads nondecreasing.
    while True:
        block = s[lo : hi + 1]
        if backwards:
            block.reverse()
        pair = most_remote_pair(block)
        if pair is None:
            return
        i, j = pair
        if backwards:
            a, b = hi - (j - 1), hi - (i - 1)
        else:
            a, b = lo + i - 1, lo + j - 1
        s[a : b + 1] = s[a : b + 1][::-1]
        trace.append(ReflectionSpec(a + 1, b + 1))


def transitive_maximize(seq: Iterable[int]) -> tuple[Seq, list[ReflectionSpec]]:
    """Raise the continuant by reflections that never lower it.

    When the minimum leads, the most remote inverted pair is reflected until
    none is left, ending at the sorted arrangement (the maximum over all
    arrangements that start with the minimum).  Otherwise the sequence is
    split at the first occurrence of its minimum and both sides are sorted
    away from it, ending at a valley arrangement; every step is still
    nondecreasing for the whole sequence.
    """
    s = list(as_sequence(seq))
    trace: list[ReflectionSpec] = []
    if len(s) <= 1:
        return tuple(s), trace
    pos = s.index(min(s))
    if pos == 0:
        _step_up_block(s, 0, len(s) - 1, False, trace)
    else:
        _step_up_block(s, 0, pos, True, trace)
        _step_up_block(s, pos, len(s) - 1, False, trace)
    return tuple(s), trace


def transitive_minimize(seq: Iterable[int]) -> tuple[Seq, list[ReflectionSpec]]:
    """Lower the continuant by reflections that never raise it.

    Each round moves the smallest remaining element to the open end of the
    unfilled block and the largest one next to it, alternating the open end
    between the two sides.  The result is the zigzag arrangement (or its
    reverse) that minimizes the continuant over all arrangements.
    """
    s = list(as_sequence(seq))
    trace: list[ReflectionSpec] = []
    if len(s) <= 1:
        return tuple(s), trace
    lo, hi = 0, len(s) - 1
    forward = s[0] <= s[-1]
    while hi - lo >= 1:
        order = list(range(lo, hi + 1)) if forward else list(range(hi, lo - 1, -1))
        for slot, pick in ((0, min), (1, max)):
            values = [s[k] for k in order[slot:]]
            target = pick(values)
            if values[0] != target:
                k = order[slot + values.index(target)]
                a, b = sorted((order[slot], k))
                s[a : b + 1] = s[a : b + 1][::-1]
                trace.append(ReflectionSpec(a + 1, b + 1))
        if forward:
            lo += 2
        else:
            hi -= 2
        forward = not forward
    return tuple(s), trace


def replay_trace(seq: Iterable[int], trace: Iterable[ReflectionSpec]) -> list[dict]:
    """Serialize a trace as ``{lo, hi, before, after}`` records."""
    cur = as_sequence(seq)
    records = []
    for spec in trace:
        before = continuant(cur)
        cur = apply_reflection(cur, spec)
        records.append(
            {"lo": spec.lo, "hi": spec.hi, "before": to_decimal(before), "after": to_decimal(continuant(cur))}
        )
    return records


def majorizes(x_head: Iterable[int], y_head: Iterable[int], tail_length: int) -> MajorizationVerdict:
    """Is <y_head, z> majorized by <x_head, z> for a common tail of the given length?

    Majorized: <y> <= <x> and <y minus last> <= <x minus last>.  Strict when
    both are strict, or when the first is strict and the tail is nonempty.
    """
    x = continuant_pair(x_head)
    y = continuant_pair(y_head)
    if not (y.full <= x.full and y.truncated <= x.truncated):
        return MajorizationVerdict.NOT_MAJORIZED
    if (y.full < x.full and y.truncated < x.truncated) or (y.full < x.full and tail_length >= 1):
        return MajorizationVerdict.STRICTLY_MAJORIZED
    return MajorizationVerdict.MAJORIZED


def tail_condition(x: Iterable[int], y: Iterable[int], z: Iterable[int]) -> bool:
    """Sufficient condition for <z, x> > <z, y> given <x> > <y>.

    Compares [z_j; z_{j-1}, ..., z_1] with
    (<y_2..y_k> - <x_2..x_i>) / (<x> - <y>).
    """
    x, y, z = as_sequence(x), as_sequence(y), as_sequence(z)
    if not z:
        raise ValueError("the tail must be nonempty")
    if not x or not y:
        raise ValueError("both heads must be nonempty")
    gap = continuant(x) - continuant(y)
    if gap <= 0:
        raise ValueError("requires <x> > <y>")
    lhs = cf_value(z[-2::-1], z[-1])
    rhs = Fraction(continuant(y[1:]) - continuant(x[1:]), gap)
    return lhs > rhs


def one_over_h_bound(h: int, r: int, g) -> tuple[bool, bool]:
    """Check [0; h^r, g] <= 1/h for 0 < h < g (g may be INFINITY).

    Returns ``(inequality holds, equality holds)``.  An infinite last term
    drops out of the continued fraction.
    """
    if not 0 < h < g:
        raise ValueError("requires 0 < h < g")
    terms = (h,) * r if g is INFINITY else (h,) * r + (g,)
    value = cf_value(terms)
    bound = Fraction(1, h)
    return value <= bound, value == bound


def alternating(n: int, length: int, start: int = 1) -> Seq:
    """``1, n, 1, n, ...`` (or ``n, 1, ...`` when ``start == n``) of the given length."""
    other = n if start == 1 else 1
    return tuple(start if k % 2 == 0 else other for k in range(length))


def j_block(n: int, count: int) -> Seq:
    """``1, n, 1, ..., 1`` with ``2*count - 1`` elements (empty for ``count == 0``)."""
    return alternating(n, 2 * count - 1) if count >= 1 else ()


def block_inequalities(n: int, m: int, x_values: Iterable[int] = (), z_values: Iterable[int] | None = None) -> dict[str, bool]:
    """Evaluate the six comparisons between ``n``-blocks and alternating blocks.

    With ``J = j_block(n, ceil(m/2))`` the keys compare

    * ``ratio``: [n; J] against a fixed ratio of block continuants,
    * ``n_run``, ``n_run_plus``: <n^n> with <j_block(n, n)> and their one-longer forms,
    * ``prefixed``, ``prefixed_plus``: the same runs behind ``J, n``,
    * ``with_tail``: the previous pair stretched by ``x`` (each >= n+1) and
      followed by ``z, n, j_block(n, floor(m/2))``, over every supplied x and z.

    A zero denominator in ``ratio`` makes that entry False.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    m_minus = m // 2
    m_plus = m - m_minus
    jp = j_block(n, m_plus)
    jn = j_block(n, n)
    out: dict[str, bool] = {}
    den = continuant((n,) * (n + 1)) - continuant(jn + (n,))
    num = continuant((n,) + j_block(n, n - 1) + (n,)) - continuant((n,) * n)
    out["ratio"] = den != 0 and cf_value(jp, n) > Fraction(num, den)
    out["n_run"] = continuant((n,) * n) > continuant(jn)
    out["n_run_plus"] = continuant((n,) * (n + 1)) > continuant(jn + (n,))
    out["prefixed"] = continuant(jp + (n,) * (n + 1)) > continuant(jp + (n,) + jn)
    out["prefixed_plus"] = continuant(jp + (n,) * (n + 2)) > continuant(jp + (n,) + jn + (n,))
    zs = tuple(range(1, n + 1)) if z_values is None else tuple(z_values)
    ok = True
    for x in x_values:
        if x < n + 1:
            raise ValueError("x must be at least n + 1")
        for z in zs:
            g = (z, n) + j_block(n, m_minus)
            lhs = continuant(jp + (n,) * (x + 1) + g)
            rhs = continuant(jp + (n,) + jn + (n,) * (x - n) + g)
            ok = ok and lhs > rhs
    out["with_tail"] = ok
    return out

