#!/usr/bin/env python3
"""Local machinery on concrete graphs: vertex weights, perfect
vertices, border profiles, detachability, and the averaging bounds.

The running example is bt_graph(2) = C_5 joined to three independent
vertices, the optimum for triangles at degree bound 5, clique bound 3.
"""

from cdt import (
    averaging_bound,
    border_profile,
    bt_graph,
    capped_weight_bound,
    clique_count,
    detach_sufficient,
    is_detachable,
    is_perfect_vertex,
    neighborhood,
    per_vertex_clique_counts,
    turan_graph,
    union,
    complete_graph,
)

g = bt_graph(2)
weights = per_vertex_clique_counts(g)
print("bt_graph(2): triangle weight of each vertex")
for v in range(g.n):
    perfect = is_perfect_vertex(g, v, 5, 3)
    print(f"  v={v}: k_3(v) = {weights[v][3]}" + ("   (perfect)" if perfect else ""))
print()

print("Why 15/8 is forced: every perfect vertex (weight 6) has three")
print("neighbors of weight at most 5, so the capped averaging bound with")
print("peak 6, three light neighbors, degree bound 5 gives")
print(f"  capped_weight_bound(6, 3, 5, 3) = {capped_weight_bound(6, 3, 5, 3)}")
print(f"while plain averaging would only give {averaging_bound(6, 3)}")
print()

print("Perfect vertices carry the Turan neighborhood T(5,2):")
v = 0
print(f"  open neighborhood of v=0 as mask: {neighborhood(g, 0):#x}")
print(f"  is_perfect_vertex(g, 0, 5, 3) = {is_perfect_vertex(g, 0, 5, 3)}")
print()

h = union(complete_graph(3), complete_graph(3))
print("Detachability: two disjoint triangles, H = the first one")
prof = border_profile(h, 0b000111, 2)
print(f"  border profile: {prof}")
print(f"  detach_sufficient(t=3): {detach_sufficient(prof, 3)}")
print(f"  is_detachable(t=3):     {is_detachable(h, 0b000111, 3)}")
print(f"  triangle counts add: k_3 = {clique_count(h, 3)} = 1 + 1")
print()

t75 = turan_graph(7, 5)
prof = border_profile(t75, t75.vertex_mask(), 6)
print("T(7,5) inside the degree-6 class: the four vertices in parts of")
print("size two are the border; the largest clique on them is an edge")
print(f"  border vertices: {[v for v, _ in prof.border]}")
print(f"  border clique number i = {prof.border_clique_number}, max cross j = {prof.max_cross}")
print(f"  t > i + j detaches: detach_sufficient(t=5) = {detach_sufficient(prof, 5)}")
