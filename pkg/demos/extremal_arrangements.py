"""Best and worst orderings of a multiset, reached by monotone reflections.

Run: python3 demos/extremal_arrangements.py
"""
import itertools

from continuants import (
    MultisetSpec,
    continuant,
    max_v,
    max_w,
    min_w,
    transitive_maximize,
    transitive_minimize,
)
from continuants.reflect import replay_trace

ms = MultisetSpec(values=(1, 2, 3, 5), mults=(2, 1, 2, 1))
print(f"multiset {ms.elements()}")

for name, fn in (("max, minimum first", max_v), ("max", max_w), ("min", min_w)):
    r = fn(ms)
    print(f"  {name:<20} {r.witness}  {r.value}")

values = sorted({continuant(p) for p in itertools.permutations(ms.elements())})
print(f"  search over all orderings: min {values[0]}, max {values[-1]}")

start = (1, 5, 3, 1, 2, 3)
print(f"\nstepping up from {start}")
final, trace = transitive_maximize(start)
for step in replay_trace(start, trace):
    print(f"  reverse {step['lo']}..{step['hi']}: {step['before']} -> {step['after']}")
print(f"  ends at {final}")

start = (5, 3, 3, 2, 1, 1)
print(f"\nstepping down from {start}")
final, trace = transitive_minimize(start)
for step in replay_trace(start, trace):
    print(f"  reverse {step['lo']}..{step['hi']}: {step['before']} -> {step['after']}")
print(f"  ends at {final}")
