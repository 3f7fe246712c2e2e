"""Certified lower bounds on the smallest continuant with bounded parts.

Run: python3 demos/growth_bounds.py
"""
from continuants import EnumerationRequest, brute_force
from continuants.bounds import base_comparison, bound_report

for S, n in ((8, 2), (14, 3), (20, 4), (24, 5)):
    exact = brute_force(EnumerationRequest.uns(S, n)).min_value
    rep = bound_report(S, n, exact, digits=12)
    print(f"S={S:<3} n={n}: bound {rep['bound']}  exact {rep['exact_min']}")

ours, older = base_comparison(12)
print(f"\nper-unit growth base at n = 4: {ours}")
print(f"sqrt(2 + 1e-6):                 {older}")
