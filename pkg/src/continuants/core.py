"""Exact continuant and continued-fraction arithmetic.

A *sequence* here is a tuple of positive Python integers; the empty tuple is
allowed and has continuant 1.  Every routine is exact (Python ints and
:class:`fractions.Fraction`), there is no floating point anywhere.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, NamedTuple

Seq = tuple[int, ...]


class InvalidSequenceError(ValueError):
    """Raised when a sequence contains a non-integer or an element < 1."""


class _Infinity:
    """The ``+inf`` value of the exact-rational domain.

    Compares greater than every int and Fraction and equal only to itself.
    It is a comparison device and never appears inside a sequence.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("continuants.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


class ContinuantPair(NamedTuple):
    """``full`` is <a_1..a_t>, ``truncated`` is <a_1..a_{t-1}>."""

    full: int
    truncated: int


def as_sequence(values: Iterable[int]) -> Seq:
    """Validate and freeze ``values`` into a sequence."""
    seq = tuple(values)
    for a in seq:
        if isinstance(a, bool) or not isinstance(a, int):
            raise InvalidSequenceError(f"sequence elements must be integers, got {a!r}")
        if a < 1:
            raise InvalidSequenceError(f"sequence elements must be >= 1, got {a}")
    return seq


def continuant_pair(seq: Iterable[int]) -> ContinuantPair:
    """Return ``(<seq>, <seq without its last element>)``.

    The empty sequence gives ``(1, 0)`` so that the three-term recurrence
    also holds for the first step.

    >>> continuant_pair((2, 4, 5, 1))
    ContinuantPair(full=56, truncated=47)
    """
    p, q = 1, 0
    for a in as_sequence(seq):
        p, q = a * p + q, p
    return ContinuantPair(p, q)


def continuant(seq: Iterable[int]) -> int:
    """Continuant <a_1, ..., a_t> of a sequence of positive integers.

    >>> continuant((2, 4, 5, 1, 1))
    103
    >>> continuant(())
    1
    """
    return continuant_pair(seq).full


def split_identity(left: Iterable[int], right: Iterable[int]) -> int:
    """Evaluate <left><right> + <left minus last><right minus first>.

    The result always equals ``continuant(left + right)``; computing it from
    the four pieces is what makes it a useful independent check.
    """
    left = as_sequence(left)
    right = as_sequence(right)
    lp = continuant_pair(left)
    right_tail = continuant(right[1:]) if right else 0
    return lp.full * continuant(right) + lp.truncated * right_tail


def cf_value(seq: Iterable[int], leading: int = 0) -> Fraction:
    """Exact value of the continued fraction [leading; a_1, ..., a_t].

    The continued fraction of the empty tail is zero, so ``cf_value((), a0)``
    is just ``a0``.
    """
    if isinstance(leading, bool) or not isinstance(leading, int) or leading < 0:
        raise InvalidSequenceError(f"leading term must be a nonnegative integer, got {leading!r}")
    # backward evaluation: p/q = [a_1; a_2, ..., a_t]
    p, q = 1, 0
    for a in reversed(as_sequence(seq)):
        p, q = a * p + q, p
    return Fraction(leading * p + q, p)


def reversed_cf(seq: Seq) -> Fraction:
    """[0; a_t, a_{t-1}, ..., a_1], i.e. <a_1..a_{t-1}> / <a_1..a_t>."""
    pair = continuant_pair(seq)
    return Fraction(pair.truncated, pair.full)


def _trivial_moves(seq: Seq) -> Iterable[Seq]:
    yield seq[::-1]
    first = seq[0]
    if first >= 2:
        yield (1, first - 1) + seq[1:]
    if len(seq) >= 2 and first == 1:
        yield (seq[1] + 1,) + seq[2:]


@functools.lru_cache(maxsize=65536)
def _orbit(seq: Seq) -> frozenset[Seq]:
    seen = {seq}
    stack = [seq]
    while stack:
        cur = stack.pop()
        for nxt in _trivial_moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def trivial_orbit(seq: Iterable[int]) -> frozenset[Seq]:
    """All sequences reachable from ``seq`` by reversal and unit extraction.

    Unit extraction rewrites (a+1, ...) as (1, a, ...) and back; combined with
    reversal it acts at either end.  The orbit is finite because every move
    preserves the element sum, and every member has the same continuant.
    """
    seq = as_sequence(seq)
    if not seq:
        raise InvalidSequenceError("the trivial orbit is defined for nonempty sequences only")
    return _orbit(seq)


def normal_form(seq: Iterable[int]) -> Seq:
    """Lexicographically least member of :func:`trivial_orbit`.

    >>> normal_form((2, 2))
    (1, 1, 1, 1)
    >>> normal_form((5,))
    (1, 3, 1)
    """
    return min(trivial_orbit(seq))


def trivially_equal(a: Iterable[int], b: Iterable[int]) -> bool:
    """True when ``a`` and ``b`` are related by reversal and unit extraction."""
    a = as_sequence(a)
    b = as_sequence(b)
    if a == b:
        return True
    if sum(a) != sum(b):
        return False
    return b in trivial_orbit(a)


def to_decimal(value: int) -> str:
    """Decimal-string encoding used in every serialized record."""
    return str(value)
