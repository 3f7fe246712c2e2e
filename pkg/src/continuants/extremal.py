"""Closed-form extremal arrangements.

Set families (all sequences of positive integers):

* ``W``      arrangements of a fixed multiset,
* ``V``      arrangements of a fixed multiset that start with its minimum,
* ``U_St``   compositions of ``S`` into ``t`` parts,
* ``U_Stn``  compositions of ``S`` into ``t`` parts, each at most ``n``,
* ``U_nS``   compositions of ``S`` into any number of parts at most ``n``.

Each ``max_*``/``min_*`` builder returns an :class:`ExtremalResult` whose
witness is constructed directly from the parameters; nothing here searches.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable

from .core import Seq, as_sequence, continuant, to_decimal


class DomainError(ValueError):
    """Parameters outside the domain of a construction."""


class InfeasibleError(DomainError):
    """The requested set is empty, so it has no extremum."""


@dataclass(frozen=True)
class MultisetSpec:
    """Values ``h_1 < ... < h_f`` with multiplicities ``p_1, ..., p_f``."""

    values: tuple[int, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "mults", tuple(self.mults))
        if not self.values:
            raise DomainError("a multiset needs at least one value")
        if len(self.values) != len(self.mults):
            raise DomainError("values and multiplicities differ in length")
        as_sequence(self.values)
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise DomainError("values must be strictly increasing")
        if any(not isinstance(p, int) or p < 1 for p in self.mults):
            raise DomainError("every multiplicity must be a positive integer")

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "MultisetSpec":
        elems = sorted(as_sequence(elements))
        values = sorted(set(elems))
        return cls(tuple(values), tuple(elems.count(v) for v in values))

    @property
    def f(self) -> int:
        return len(self.values)

    @property
    def t(self) -> int:
        return sum(self.mults)

    def elements(self) -> Seq:
        return tuple(h for h, p in zip(self.values, self.mults) for _ in range(p))


@dataclass(frozen=True)
class SplitSpec:
    """How many copies of each value sit left (``l``) and right (``r``) of the valley floor."""

    l: tuple[int, ...]
    r: tuple[int, ...]

    def check(self, ms: MultisetSpec) -> None:
        if len(self.l) != ms.f or len(self.r) != ms.f:
            raise DomainError("split does not match the multiset")
        for lj, rj, pj in zip(self.l, self.r, ms.mults):
            if lj < 0 or rj < 0 or lj + rj != pj:
                raise DomainError("each l_j + r_j must equal p_j with both nonnegative")


def valley(ms: MultisetSpec, split: SplitSpec) -> Seq:
    """Values descending with multiplicities ``l``, then ascending with ``r``."""
    split.check(ms)
    left = [h for h, lj in zip(reversed(ms.values), reversed(split.l)) for _ in range(lj)]
    right = [h for h, rj in zip(ms.values, split.r) for _ in range(rj)]
    return tuple(left + right)


@dataclass(frozen=True)
class SortedViews:
    """``b``: nondecreasing (0-based), ``c``: nonincreasing (1-based) views of a multiset."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    @classmethod
    def of(cls, ms: MultisetSpec) -> "SortedViews":
        elems = ms.elements()
        return cls(tuple(sorted(elems)), tuple(sorted(elems, reverse=True)))

    def n(self, j: int) -> int:
        return self.b[j] if j % 2 == 0 else self.c[j - 1]

    def m(self, nu: int) -> int:
        return self.c[nu - 1] if nu % 2 == 0 else self.b[nu]


@dataclass(frozen=True)
class TzParams:
    """Parameters of the bounded-sum template: bound ``n``, residue ``z``, ``m`` wing pairs and centre ``x``.

    ``x >= 0`` puts ``x`` copies of ``n`` before ``z``; ``x < 0`` puts
    ``-1-x`` ones before ``z`` and a single one after it.
    """

    n: int
    z: int
    m: int
    x: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("bound n must be positive")
        if not 1 <= self.z <= self.n:
            raise DomainError("residue z must lie in 1..n")
        if self.m < 0:
            raise DomainError("m must be nonnegative")

    @property
    def length(self) -> int:
        return 2 * self.m + abs(self.x) + 1

    @property
    def total(self) -> int:
        if self.x >= 0:
            return self.m * (self.n + 1) + self.n * self.x + self.z
        return self.m * (self.n + 1) - self.x + self.z


@dataclass
class ExtremalResult:
    family: str
    witness: Seq
    value: int
    params: dict = field(default_factory=dict)
    ties: tuple[Seq, ...] = ()

    def to_record(self) -> dict:
        params = {}
        for key, val in self.params.items():
            if isinstance(val, (TzParams, SplitSpec)):
                val = asdict(val)
            params[key] = val
        return {
            "family": self.family,
            "params": params,
            "witness": list(self.witness),
            "value": to_decimal(self.value),
            "ties": [list(s) for s in self.ties],
        }


def _result(family: str, witness: Iterable[int], params: dict, ties=()) -> ExtremalResult:
    witness = as_sequence(witness)
    return ExtremalResult(family, witness, continuant(witness), params, tuple(ties))


def _multiset_params(ms: MultisetSpec) -> dict:
    return {"values": list(ms.values), "mults": list(ms.mults)}


def max_v(ms: MultisetSpec) -> ExtremalResult:
    """Maximum over arrangements that start with the smallest value: sort ascending."""
    return _result("V", sorted(ms.elements()), _multiset_params(ms))


def max_w_split(ms: MultisetSpec) -> SplitSpec:
    """The split whose valley is the maximal arrangement.

    Going down from the largest value, the single copy alternates sides:
    ``l_j = 1`` when ``j`` and ``f`` have the same parity, otherwise ``r_j = 1``;
    the remaining ``p_j - 1`` copies go to the other side.
    """
    f = ms.f
    l, r = [], []
    for j, p in enumerate(ms.mults, start=1):
        if (f - j) % 2 == 0:
            l.append(1)
            r.append(p - 1)
        else:
            l.append(p - 1)
            r.append(1)
    return SplitSpec(tuple(l), tuple(r))


def max_w(ms: MultisetSpec) -> ExtremalResult:
    """Maximum over all arrangements of the multiset."""
    split = max_w_split(ms)
    params = _multiset_params(ms)
    params["split"] = split
    return _result("W", valley(ms, split), params)


def zigzag(ms: MultisetSpec) -> Seq:
    """``n_0, n_1, ..., n_nu, m_mu, ..., m_1`` with ``nu = ceil(t/2) - 1`` and ``mu = floor(t/2)``.

    Smallest first, largest second, then alternately from both ends of the
    sorted order, folding back from the right end.
    """
    views = SortedViews.of(ms)
    t = ms.t
    t_minus = t // 2
    t_plus = t - t_minus
    head = [views.n(j) for j in range(t_plus)]
    tail = [views.m(nu) for nu in range(t_minus, 0, -1)]
    return tuple(head + tail)


def min_w(ms: MultisetSpec) -> ExtremalResult:
    """Minimum over all arrangements of the multiset."""
    return _result("W", zigzag(ms), _multiset_params(ms))


def max_un(S: int) -> ExtremalResult:
    """Maximum over compositions of ``S`` with any bound: all ones (a Fibonacci number)."""
    if S < 1:
        raise DomainError("S must be positive")
    return _result("U_nS", (1,) * S, {"S": S})


def even_split(S: int, t: int) -> tuple[int, int, int, int]:
    """``(h1, h2, c, d)`` with ``c*h1 + d*h2 = S``, ``c + d = t``, ``h2 = h1 + 1``, ``d < t``.

    This is just division with remainder: ``h1 = S // t``, ``d = S % t``.
    """
    if not 2 <= t <= S:
        raise DomainError("requires 2 <= t <= S")
    h1, d = divmod(S, t)
    return h1, h1 + 1, t - d, d


def max_ust(S: int, t: int) -> ExtremalResult:
    """Maximum over compositions of ``S`` into exactly ``t`` parts."""
    h1, h2, c, d = even_split(S, t)
    if d == 0:
        witness = (h1,) * t
    else:
        witness = (h2,) + (h1,) * c + (h2,) * (d - 1)
    return _result("U_St", witness, {"S": S, "t": t, "h1": h1, "h2": h2, "c": c, "d": d})


def center_block(n: int, z: int, x: int) -> Seq:
    """``(n^x, z)`` for ``x >= 0`` and ``(1^(-1-x), z, 1)`` otherwise."""
    if n < 1 or not 1 <= z <= n:
        raise DomainError("requires n >= 1 and 1 <= z <= n")
    if x >= 0:
        return (n,) * x + (z,)
    return (1,) * (-1 - x) + (z, 1)


def template(params: TzParams) -> Seq:
    """``1, n, ..., 1, n`` (2*ceil(m/2) terms), the centre block, then ``n, 1, ..., n, 1`` (2*floor(m/2) terms)."""
    n, m = params.n, params.m
    m_minus = m // 2
    m_plus = m - m_minus
    return (1, n) * m_plus + center_block(n, params.z, params.x) + (n, 1) * m_minus


def template_params(S: int, t: int, n: int) -> TzParams:
    """Template parameters for the minimum over compositions of ``S`` into ``t`` parts bounded by ``n``.

    ``z`` is the representative of ``S - t + 1`` modulo ``n - 1`` in
    ``1..n-1``, then ``x = 2(S - t + 1 - z)/(n - 1) + 1 - t`` and
    ``m = (t - |x| - 1)/2``.  At ``S == n*t`` the only member is all ``n``,
    described as ``z = n``, ``x = t - 1``, ``m = 0``.
    """
    if n < 2:
        raise DomainError("requires n >= 2")
    if not 2 <= t <= S <= n * t:
        raise DomainError("requires 2 <= t <= S <= n*t")
    if S == n * t:
        return TzParams(n, n, 0, t - 1)
    z = (S - t + 1) % (n - 1) or n - 1
    x = 2 * (S - t + 1 - z) // (n - 1) + 1 - t
    m2 = t - abs(x) - 1
    assert m2 % 2 == 0 and m2 >= 0
    return TzParams(n, z, m2 // 2, x)


def min_ustn(S: int, t: int, n: int) -> ExtremalResult:
    """Minimum over compositions of ``S`` into ``t`` parts, each at most ``n``."""
    if t < 1 or n < 1 or S < 1:
        raise DomainError("S, t and n must be positive")
    if not t <= S <= n * t:
        raise InfeasibleError(f"no composition of {S} into {t} parts bounded by {n}")
    if n == 1 or t == 1:
        witness = (1,) * t if n == 1 else (S,)
        return _result("U_Stn", witness, {"S": S, "t": t, "n": n})
    params = template_params(S, t, n)
    return _result("U_Stn", template(params), {"S": S, "t": t, "n": n, "template": params})


def residue_bounds(S: int, n: int) -> tuple[int, int]:
    """``(S0, S1)`` with ``S0 = ((S-1) mod (n+1)) + 1`` and ``S1 = S mod n``."""
    if S < 1 or n < 1:
        raise DomainError("S and n must be positive")
    return (S - 1) % (n + 1) + 1, S % n


def admissible_residues(S: int, n: int) -> frozenset[int]:
    """Residues ``z`` in ``1..n-1`` for which ``S - z`` is a sum of ``n``'s and ``(n+1)``'s.

    Computed from the residue bounds alone, without a search.  The middle
    case is the integer interval ``S0..S1``.
    """
    if n < 2:
        raise DomainError("requires n >= 2")
    full = frozenset(range(1, n))
    if S >= n * n - 1:
        return full
    s0, s1 = residue_bounds(S, n)
    if s0 <= s1:
        return frozenset(range(s0, s1 + 1)) & full
    return (frozenset(range(1, s1 + 1)) | frozenset(range(s0, n))) & full


def sylvester_representable(T: int, n: int) -> bool:
    """Is ``T`` a sum of terms each equal to ``n`` or ``n + 1`` (0 is the empty sum)?

    Above the Frobenius number ``n*n - n - 1`` always; at it never; below it
    exactly when ``n * frac(T/n) <= (n+1) * frac((T-1)/(n+1))``.
    """
    if T < 0 or n < 2:
        raise DomainError("requires T >= 0 and n >= 2")
    frobenius = n * n - n - 1
    if T > frobenius:
        return True
    if T == frobenius:
        return False
    t0 = (T - 1) % (n + 1)
    t1 = T % n
    return t1 <= t0


def free_template_params(S: int, n: int, z: int) -> TzParams | None:
    """The unique ``(m, x)`` with ``m(n+1) + n x + z = S``, ``m >= 0``, ``0 <= x <= n``.

    ``x`` is ``(z - S) mod (n + 1)``.  Returns ``None`` when ``m < 1``.
    """
    if n < 2:
        raise DomainError("requires n >= 2")
    if z not in admissible_residues(S, n):
        raise DomainError(f"{z} is not an admissible residue for S={S}, n={n}")
    x = (z - S) % (n + 1)
    m, rem = divmod(S - z - n * x, n + 1)
    if rem != 0 or m < 0:
        raise DomainError(f"no solution for S={S}, n={n}, z={z}")
    if m < 1:
        return None
    return TzParams(n, z, m, x)


def min_un(S: int, n: int) -> ExtremalResult:
    """Minimum over compositions of ``S`` with every part at most ``n``.

    Takes the least template value over admissible residues with ``m >= 1``;
    the smallest minimizing residue supplies the witness and every minimizing
    template is listed in ``ties``.
    """
    if n < 2 or S < 2 * n + 2:
        raise DomainError("requires n >= 2 and S >= 2n + 2")
    candidates = []
    for z in sorted(admissible_residues(S, n)):
        params = free_template_params(S, n, z)
        if params is not None:
            seq = template(params)
            candidates.append((continuant(seq), z, params, seq))
    if not candidates:
        raise InfeasibleError(f"no admissible template for S={S}, n={n}")
    best = min(c[0] for c in candidates)
    winners = [c for c in candidates if c[0] == best]
    _, z, params, seq = winners[0]
    return _result(
        "U_nS",
        seq,
        {"S": S, "n": n, "template": params, "minimizing_z": [c[1] for c in winners]},
        ties=[c[3] for c in winners],
    )
