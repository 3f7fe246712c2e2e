"""Extremal continuants over compositions of S, with and without a part bound.

Run: python3 demos/bounded_compositions.py
"""
from continuants import EnumerationRequest, brute_force
from continuants.extremal import max_un, max_ust, min_un, min_ustn

S = 12
print(f"max over compositions of {S}: {max_un(S).witness} -> {max_un(S).value}")
for t in (3, 4, 5):
    r = max_ust(S, t)
    print(f"max with {t} parts: {r.witness} -> {r.value}")

print("\nminimum with t parts bounded by n, closed form against exhaustive search")
for S, t, n in ((7, 3, 3), (9, 4, 3), (14, 6, 4), (17, 7, 3)):
    r = min_ustn(S, t, n)
    oracle = brute_force(EnumerationRequest.ustn(S, t, n))
    print(f"  S={S:<3} t={t} n={n}: {r.witness} -> {r.value}   search {oracle.min_value}")

print("\nminimum with parts bounded by n, any length")
for S, n in ((8, 2), (15, 3), (20, 4)):
    r = min_un(S, n)
    oracle = brute_force(EnumerationRequest.uns(S, n))
    print(f"  S={S:<3} n={n}: {r.witness} -> {r.value}   search {oracle.min_value}")
