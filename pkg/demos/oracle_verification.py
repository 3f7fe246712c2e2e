"""Run a small verification grid and show how a broken formula gets caught.

Run: python3 demos/oracle_verification.py
"""
import dataclasses

from continuants import grids

grid = grids.run_grid("thm5", S_max=14)
print(f"even split over {len(grid.points)} points: all match = {grid.all_match}")

# shift one closed form by one at S = 9 and look for the first failing point
original = grids.FORMULAS["thm5"]


def off_by_one(params):
    result = original(params)
    return dataclasses.replace(result, value=result.value + 1) if params["S"] == 9 else result


grids.FORMULAS["thm5"] = off_by_one
try:
    broken = grids.run_grid("thm5", S_max=14)
finally:
    grids.FORMULAS["thm5"] = original
print(f"after corruption: all match = {broken.all_match}, first mismatch {broken.first_mismatch().params}")
