#!/usr/bin/env python3
"""Probe the open question for degree bound 7, clique bound 3: is the
triangle density 40/11 of bt_graph(3) optimal?

The search is exhaustive but prunes subtrees whose sound upper bound
(current count plus the per-vertex ceiling times the vertices still to
come) cannot reach 40/11, so every graph that ties or beats the target
survives.  Takes a minute or two.
"""

import sys

from cdt import bt_density, probe_conjecture

n_cap = int(sys.argv[1]) if len(sys.argv) > 1 else 10

print(f"target: bt_density(3) = {bt_density(3)} (~{float(bt_density(3)):.4f})")
print(f"searching the degree-7 triangle-allowed class up to {n_cap} vertices...")
out = probe_conjecture("bt3", n_cap)

if out["beaten_at"]:
    print(f"COUNTEREXAMPLE sizes: {out['beaten_at']}")
else:
    print(f"no graph on up to {n_cap} vertices beats {out['target']}")
print(f"sizes tying the target: {sorted(out['ties_at'])}")
for n, wits in sorted(out["ties_at"].items()):
    print(f"  n={n}: {wits}")
if out["unique_best_at_11"] is not None:
    print(f"bt_graph(3) ({out['bt3_graph6']}) unique best at n=11: "
          f"{out['unique_best_at_11']}")
print(f"wall time {out['wall_time']:.1f}s ({out['note']})")
