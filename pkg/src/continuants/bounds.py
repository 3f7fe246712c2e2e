"""Growth constants and certified bounds.

Two quadratic surds govern the growth of bounded continuants:

    lam(n) = (n + sqrt(n^2 + 4)) / 2        (growth of <n, n, ..., n>)
    mu(n)  = (n + 2 + sqrt(n^2 + 4n)) / 2   (growth of <1, n, 1, n, ...>)

Irrational quantities are evaluated with :mod:`mpmath` interval arithmetic.
A check either certifies its answer (the enclosing interval lies cleanly on
one side of the threshold) or raises :class:`PrecisionError`;
:func:`certify` retries with more digits.
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from typing import Callable, TypeVar

from mpmath import iv
from mpmath.libmp import to_rational

from .core import continuant
from .extremal import DomainError
from .reflect import alternating

T = TypeVar("T")


class PrecisionError(ArithmeticError):
    """The working precision was too low to decide the question."""


@contextlib.contextmanager
def _digits(dps: int):
    # mpmath's interval context keeps its precision globally
    saved = iv.dps
    iv.dps = dps
    try:
        yield
    finally:
        iv.dps = saved


@dataclass(frozen=True)
class SpectralConstants:
    """``lam`` and ``mu`` for a bound ``n``, kept as exact radicands."""

    n: int

    @property
    def lam_radicand(self) -> int:
        return self.n * self.n + 4

    @property
    def mu_radicand(self) -> int:
        return self.n * self.n + 4 * self.n

    def lam(self):
        """Interval enclosure of lam at the current ``iv`` precision."""
        return (self.n + iv.sqrt(self.lam_radicand)) / 2

    def mu(self):
        return (self.n + 2 + iv.sqrt(self.mu_radicand)) / 2

    def sandwich(self, digits: int = 30) -> bool:
        """Certify ``n <= lam <= n+1 <= mu <= n+2``."""
        n = self.n
        with _digits(digits):
            lam, mu = self.lam(), self.mu()
            return (
                n <= lower_fraction(lam)
                and upper_fraction(lam) <= n + 1
                and n + 1 <= lower_fraction(mu)
                and upper_fraction(mu) <= n + 2
            )


def lower_fraction(interval) -> Fraction:
    """Exact lower endpoint of an mpmath interval."""
    p, q = to_rational(interval._mpi_[0])
    return Fraction(int(p), int(q))


def upper_fraction(interval) -> Fraction:
    p, q = to_rational(interval._mpi_[1])
    return Fraction(int(p), int(q))


def certify(check: Callable[[int], T], digits: int = 30, max_digits: int = 4000) -> T:
    """Call ``check(digits)``, doubling ``digits`` on :class:`PrecisionError`."""
    while True:
        try:
            return check(digits)
        except PrecisionError:
            if digits >= max_digits:
                raise
            digits *= 2


def alternating_k(n: int, l: int) -> int:
    """``K_0 = 1``, ``K_1 = n + 2``, ``K_{j+1} = (n + 2) K_j - K_{j-1}``."""
    if n < 1 or l < 0:
        raise DomainError("requires n >= 1 and l >= 0")
    prev, cur = 1, n + 2
    if l == 0:
        return prev
    for _ in range(l - 1):
        prev, cur = cur, (n + 2) * cur - prev
    return cur


def constant_k(n: int, l: int) -> int:
    """``k_l = <n, n, ..., n>`` with ``l`` terms."""
    if n < 1 or l < 0:
        raise DomainError("requires n >= 1 and l >= 0")
    return continuant((n,) * l)


def alternating_identities(n: int, l: int) -> bool:
    """Check the three alternating-block identities for ``l >= 1``:

    <1, n, ..., 1> (2l-1 terms) = K_{l-1},
    <n, 1, ..., n> (2l-1 terms) = n K_{l-1},
    <1, n, ..., 1, n> (2l terms) = K_l - K_{l-1}.
    """
    if l < 1:
        raise DomainError("requires l >= 1")
    k_prev = alternating_k(n, l - 1)
    return (
        continuant(alternating(n, 2 * l - 1)) == k_prev
        and continuant(alternating(n, 2 * l - 1, start=n)) == n * k_prev
        and continuant(alternating(n, 2 * l)) == alternating_k(n, l) - k_prev
    )


def _nearest_is(value, k: int) -> bool:
    diff = value - k
    lo, hi = lower_fraction(diff), upper_fraction(diff)
    half = Fraction(1, 2)
    if -half < lo and hi < half:
        return True
    if lo >= half or hi <= -half:
        return False
    raise PrecisionError("interval straddles a rounding boundary")


def _floor_is(value, k: int) -> bool:
    lo, hi = lower_fraction(value), upper_fraction(value)
    if k <= lo and hi < k + 1:
        return True
    if hi < k or lo >= k + 1:
        return False
    raise PrecisionError("interval straddles an integer")


def closed_form_check(n: int, l: int, digits: int) -> bool:
    """Do ``k_l = nearest(lam^(l+2) / (lam^2 + 1))`` and ``K_l = floor(mu^(l+2) / (mu^2 - 1))`` hold?

    Raises :class:`PrecisionError` when ``digits`` cannot decide; wrap in
    :func:`certify` for an adaptive answer.
    """
    if n < 1 or l < 0:
        raise DomainError("requires n >= 1 and l >= 0")
    sc = SpectralConstants(n)
    with _digits(digits):
        lam, mu = sc.lam(), sc.mu()
        small = lam ** (l + 2) / (lam**2 + 1)
        big = mu ** (l + 2) / (mu**2 - 1)
        return _nearest_is(small, constant_k(n, l)) and _floor_is(big, alternating_k(n, l))


def crossing_inequalities(n: int) -> tuple[bool, bool, bool]:
    """Exact truth values of

    K_{n,n} - K_{n-1,n} < k_{n+1,n},   K_{n-1,n} < k_{n,n},
    n > (n K_{n-1,n} - k_{n,n}) / (k_{n+1,n} - K_{n,n}).

    The last one is False when its denominator vanishes.
    """
    if n < 1:
        raise DomainError("requires n >= 1")
    big_n, big_prev = alternating_k(n, n), alternating_k(n, n - 1)
    k_n, k_next = constant_k(n, n), constant_k(n, n + 1)
    den = k_next - big_n
    ratio = den != 0 and n > Fraction(n * big_prev - k_n, den)
    return big_n - big_prev < k_next, big_prev < k_n, ratio


def crossings_hold(n: int) -> bool:
    return all(crossing_inequalities(n))


def _e2():
    return iv.exp(iv.mpf(2))


def ratio_bound_check(n: int, digits: int = 30) -> bool:
    """Certify ``(1 + lam^-2)/(1 - mu^-2) * (mu/lam)^n < (41/40) e^2`` for ``n > 8``."""
    if n <= 8:
        raise DomainError("stated for n > 8 only")
    sc = SpectralConstants(n)
    with _digits(digits):
        lam, mu = sc.lam(), sc.mu()
        lhs = (1 + 1 / lam**2) / (1 - 1 / mu**2) * (mu / lam) ** n
        rhs = iv.mpf(41) / 40 * _e2()
        if upper_fraction(lhs) < lower_fraction(rhs):
            return True
        if lower_fraction(lhs) >= upper_fraction(rhs):
            return False
        raise PrecisionError("comparison not separated at this precision")


def _round(value: Fraction, digits: int, rounding) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        return Decimal(value.numerator) / Decimal(value.denominator)


def growth_lower_bound(S: int, n: int, digits: int = 20) -> Decimal:
    """Certified lower approximation of ``mu^((S - n + 1)/(n + 1)) / e^2``.

    The result never exceeds the true value; ``digits`` is the number of
    significant digits returned.
    """
    if not 2 <= n <= S - 2:
        raise DomainError("requires 2 <= n <= S - 2")
    with _digits(digits + 15):
        mu = SpectralConstants(n).mu()
        value = iv.exp(iv.log(mu) * iv.mpf(S - n + 1) / (n + 1)) / _e2()
        return _round(lower_fraction(value), digits, ROUND_FLOOR)


def bound_report(S: int, n: int, exact_min: int | None = None, digits: int = 20) -> dict:
    """``{S, n, bound, exact_min, margin}`` with decimal strings."""
    bound = growth_lower_bound(S, n, digits)
    record = {"S": S, "n": n, "bound": str(bound), "exact_min": None, "margin": None}
    if exact_min is not None:
        record["exact_min"] = str(exact_min)
        record["margin"] = str(Decimal(exact_min) - bound)
    return record


def base_comparison(digits: int = 8) -> tuple[Decimal, Decimal]:
    """``(lower bound of (3 + sqrt 8)^(1/5), upper bound of sqrt(2 + 1e-6))``.

    The first is the growth base of the bound at ``n = 4``; it exceeds the
    second, which is the base of an older bound for the same problem.
    """
    with _digits(digits + 15):
        ours = iv.exp(iv.log(3 + iv.sqrt(8)) / 5)
        theirs = iv.sqrt(2 + iv.mpf(1) / 10**6)
        return (
            _round(lower_fraction(ours), digits, ROUND_FLOOR),
            _round(upper_fraction(theirs), digits, ROUND_CEILING),
        )
