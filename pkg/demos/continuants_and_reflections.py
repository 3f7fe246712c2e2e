"""Continuants, their symmetries, and how reversing a middle block moves them.

Run: python3 demos/continuants_and_reflections.py
"""
from continuants import (
    ReflectionSpec,
    a_value,
    apply_reflection,
    cf_value,
    classify,
    continuant,
    normal_form,
    trivially_equal,
)

seq = (2, 4, 5, 1, 1)
print(f"<{seq}> = {continuant(seq)}")
print(f"reversed: {continuant(seq[::-1])}")
print(f"[2; 4, 5, 1, 1] = {cf_value(seq[1:], seq[0])}")

# a trailing 1 can be absorbed into its neighbour without changing the value
print(f"<2,4,5,1,1> = <2,4,5,2> = {continuant((2, 4, 5, 2))}")
print(f"normal form of {seq}: {normal_form(seq)}")

# equal values do not always come from the trivial moves
a, b = (1, 1, 1, 4, 1), (1, 3, 3, 1)
print(f"{a} and {b}: {continuant(a)} vs {continuant(b)}, trivially equal: {trivially_equal(a, b)}")

print()
host = (1, 1, 3, 2)
for lo, hi in ((3, 4), (2, 3), (2, 4)):
    spec = ReflectionSpec(lo, hi)
    after = apply_reflection(host, spec)
    print(f"reverse {lo}..{hi}: {host} -> {after}  "
          f"{continuant(host)} -> {continuant(after)}  "
          f"a = {a_value(host, spec)}  {classify(host, spec).kind.value}")
