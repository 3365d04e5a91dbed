#!/usr/bin/env python3
"""Tour of the built-in constructions and their exact statistics.

Every graph here lives in some class G(dmax, omega) of graphs with
maximum degree <= dmax and clique number <= omega, and each one is the
best known (often proven optimal) for its triple.
"""

from cdt import (
    bt_density,
    bt_graph,
    clique_count,
    clique_number,
    density,
    g_star,
    graph6_encode,
    lower_bound_graph,
    max_degree,
    turan_graph,
)


def describe(name, g, t=3):
    print(f"{name}:")
    print(f"  graph6          {graph6_encode(g)}")
    print(f"  vertices/edges  {g.n} / {g.edge_count()}")
    print(f"  max degree      {max_degree(g)}")
    print(f"  clique number   {clique_number(g)}")
    print(f"  k_{t} count       {clique_count(g, t)}")
    print(f"  k_{t} per vertex  {density(g, t)}  (~{float(density(g, t)):.4f})")
    print()


print("=" * 60)
print("Balanced complete multipartite (Turan) graphs")
print("=" * 60)
describe("T(8,4) = K_{2,2,2,2}", turan_graph(8, 4))
describe("T(7,3)", turan_graph(7, 3))

print("=" * 60)
print("Lower-bound graphs: T(dmax + a, omega) with dmax = a(omega-1) + b")
print("=" * 60)
describe("L(5,3) = T(7,3)", lower_bound_graph(5, 3))
describe("L(6,4) = T(8,4)", lower_bound_graph(6, 4))

print("=" * 60)
print("Triangle-dense join constructions (degree 2k+1, clique number 3)")
print("=" * 60)
for k in (2, 3):
    g = bt_graph(k)
    describe(f"bt_graph({k})", g)
    assert density(g, 3) == bt_density(k)
print(f"closed form check: bt_density(2) = {bt_density(2)}, bt_density(3) = {bt_density(3)}")
print()

print("=" * 60)
print("The 7-vertex optimum for degree 5 / clique 4")
print("=" * 60)
describe("g_star (K_6 minus a 2-matching, plus an apex)", g_star())
