import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from continuants.core import INFINITY, cf_value, continuant
from continuants.reflect import (
    Kind,
    MajorizationVerdict,
    ReflectionSpec,
    a_value,
    alternating,
    apply_reflection,
    classify,
    j_block,
    one_over_h_bound,
    block_inequalities,
    majorizes,
    most_remote_pair,
    replay_trace,
    tail_condition,
    transitive_maximize,
    transitive_minimize,
)


def all_specs(t):
    for lo in range(1, t + 1):
        for hi in range(lo, t + 1):
            if not (lo == 1 and hi == t):
                yield ReflectionSpec(lo, hi)


def test_apply_examples():
    assert apply_reflection((1, 3, 2, 1), ReflectionSpec(2, 3)) == (1, 2, 3, 1)
    assert apply_reflection((2, 1, 3), ReflectionSpec(1, 2)) == (1, 2, 3)
    for spec in (ReflectionSpec(1, 1), ReflectionSpec(1, 2), ReflectionSpec(0, 1)):
        with pytest.raises(IndexError):
            apply_reflection((5,), spec)


def test_a_value_examples():
    assert a_value((1, 3, 2, 1), ReflectionSpec(2, 3)) == 0
    assert continuant((1, 3, 2, 1)) == continuant((1, 2, 3, 1)) == 13
    assert a_value((2, 1, 3), ReflectionSpec(1, 2)) == Fraction(-1, 3) * Fraction(1, 3)
    assert a_value((1, 2, 2, 1), ReflectionSpec(2, 3)) == 0


def test_classify_examples():
    assert classify((2, 1, 3), ReflectionSpec(1, 2)).kind is Kind.DECREASING
    assert classify((1, 3, 2, 1), ReflectionSpec(2, 3)).kind is Kind.TRIVIAL
    # <1,1,3,2> = 16 and <1,1,2,3> = 17
    assert continuant((1, 1, 3, 2)) == 16 and continuant((1, 1, 2, 3)) == 17
    assert classify((1, 1, 3, 2), ReflectionSpec(3, 4)).kind is Kind.INCREASING


def test_classifier_soundness_small():
    for t in range(2, 6):
        for seq in itertools.product(range(1, 4), repeat=t):
            for spec in all_specs(t):
                diff = continuant(apply_reflection(seq, spec)) - continuant(seq)
                assert classify(seq, spec).sign == (diff > 0) - (diff < 0)


def test_equal_reflections_are_trivial():
    # every value-preserving reflection is explained by the trivial moves
    for t in range(2, 7):
        for seq in itertools.product(range(1, 4), repeat=t):
            for spec in all_specs(t):
                c = classify(seq, spec)
                if c.sign == 0:
                    assert c.kind is Kind.TRIVIAL


def test_most_remote_pair_examples():
    assert most_remote_pair((1, 3, 2, 3)) == (2, 3)
    assert most_remote_pair((1, 2, 3)) is None
    assert most_remote_pair((1, 3, 1, 2, 1)) == (2, 5)


def test_maximize_examples():
    final, trace = transitive_maximize((1, 3, 2))
    assert final == (1, 2, 3) and len(trace) == 1
    assert replay_trace((1, 3, 2), trace) == [{"lo": 2, "hi": 3, "before": "9", "after": "10"}]
    assert transitive_maximize((1, 2, 3)) == ((1, 2, 3), [])
    for perm in itertools.permutations((2, 3, 4)):
        seq = (1,) + perm
        final, trace = transitive_maximize(seq)
        assert final == (1, 2, 3, 4) and continuant(final) == 43
        values = [continuant(seq)] + [int(s["after"]) for s in replay_trace(seq, trace)]
        assert values == sorted(values)


def test_minimize_examples():
    assert continuant(transitive_minimize((1, 2, 3))[0]) == 9
    assert transitive_minimize((1, 2, 3))[0] == (1, 3, 2)
    assert transitive_minimize((1, 1, 2))[0] == (1, 2, 1)
    assert transitive_minimize((7,)) == ((7,), [])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
def test_transitive_monotone_and_bounded(seq):
    t = len(seq)
    for run, sign in ((transitive_maximize, 1), (transitive_minimize, -1)):
        final, trace = run(seq)
        assert sorted(final) == sorted(seq)
        assert len(trace) <= t * (t - 1) // 2
        for step in replay_trace(seq, trace):
            assert sign * (int(step["after"]) - int(step["before"])) >= 0


def test_majorization_examples():
    assert majorizes((2, 1), (3,), 0) is MajorizationVerdict.MAJORIZED
    assert majorizes((3, 1), (2, 2), 1) is MajorizationVerdict.NOT_MAJORIZED
    assert majorizes((2, 3), (2, 3), 0) is MajorizationVerdict.MAJORIZED
    assert majorizes((2, 3), (2, 2), 1) is MajorizationVerdict.STRICTLY_MAJORIZED


heads = st.lists(st.integers(1, 4), min_size=1, max_size=6).map(tuple)
tails = st.lists(st.integers(1, 4), max_size=4).map(tuple)


@given(heads, heads, tails)
def test_majorization_implies_domination(x, y, z):
    verdict = majorizes(x, y, len(z))
    if verdict is MajorizationVerdict.MAJORIZED:
        assert continuant(y + z) <= continuant(x + z)
    elif verdict is MajorizationVerdict.STRICTLY_MAJORIZED:
        assert continuant(y + z) < continuant(x + z)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5).map(tuple), tails)
def test_merging_a_final_one(head, tail):
    # <x_1..x_{i-1}, 1, tail> >= <x_1..x_{i-1}+1, tail>; the heads tie, so the
    # gap is (<x_1..x_{i-1}> - <x_1..x_{i-2}>) <tail minus first>, zero for head (1,)
    merged = head[:-1] + (head[-1] + 1,)
    lhs, rhs = continuant(head + (1,) + tail), continuant(merged + tail)
    assert lhs >= rhs
    assert (lhs > rhs) == (bool(tail) and head != (1,))
    assert majorizes(head + (1,), merged, len(tail)) is MajorizationVerdict.MAJORIZED


@given(heads, heads, st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple))
def test_tail_condition_strict_domination(x, y, z):
    # <x> > <y>, <x - last> >= <y - last> (or the tail test) and j z_1 > 1 give <z, y> < <z, x>
    if continuant(x) <= continuant(y):
        return
    if tail_condition(x, y, z):
        assert continuant(z + x) > continuant(z + y)


def test_tail_condition_examples():
    # right-hand side (<1> - <>)/(5 - 2) is 0: <y_2..> = <1> = 1 and <x_2..> = <> = 1
    assert tail_condition((5,), (1, 1), (1,))
    assert continuant((1, 5)) == 6 > continuant((1, 1, 1)) == 3
    with pytest.raises(ValueError):
        tail_condition((2,), (1,), ())
    with pytest.raises(ValueError):
        tail_condition((1, 1), (2,), (1,))


def test_one_over_h_bound():
    for h in range(1, 7):
        for r in range(0, 6):
            for g in list(range(h + 1, 7)) + [INFINITY]:
                holds, equal = one_over_h_bound(h, r, g)
                assert holds
                assert equal == (r == 1 and g is INFINITY)
    with pytest.raises(ValueError):
        one_over_h_bound(3, 1, 2)


def test_blocks():
    assert alternating(3, 4) == (1, 3, 1, 3)
    assert alternating(3, 3, start=3) == (3, 1, 3)
    assert j_block(2, 2) == (1, 2, 1)
    assert j_block(2, 0) == ()


def test_block_inequalities_hold_from_n3():
    for n in range(3, 6):
        for m in range(1, 5):
            result = block_inequalities(n, m, x_values=range(n + 1, n + 4))
            assert all(result.values()), (n, m, result)


def test_block_inequalities_small_n_values():
    # n = 2: the bound fraction is 3/1, and [2; J(1)] = 3 ties it
    assert cf_value(j_block(2, 1), 2) == 3
    assert continuant(j_block(2, 1) + (2,) * 4) == continuant(j_block(2, 1) + (2,) + j_block(2, 2) + (2,)) == 41
    # with m_+ = 2 the comparison flips
    assert continuant(j_block(2, 2) + (2,) * 4) == 152
    assert continuant(j_block(2, 2) + (2,) + j_block(2, 2) + (2,)) == 153
    # n = 1: the denominator <1,1> - <1,1> vanishes
    assert block_inequalities(1, 1)["ratio"] is False


@given(heads, heads, st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple))
def test_bumped_heads_give_strict_domination(x, y, z):
    # <x> > <y>, <y with last + 1> <= <x with last + 1> and j z_1 > 1 give <y, z> < <x, z>
    bump = lambda s: s[:-1] + (s[-1] + 1,)
    if continuant(x) > continuant(y) and continuant(bump(y)) <= continuant(bump(x)) and len(z) * z[0] > 1:
        assert continuant(y + z) < continuant(x + z)
