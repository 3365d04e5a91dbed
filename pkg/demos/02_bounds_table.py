#!/usr/bin/env python3
"""Sweep the bound pair over a grid of (degree bound, clique bound)
pairs and print a summary table for triangles (t = 3).

Legend per cell: an exact value when known (with how it is known),
otherwise "lower .. upper".  Whenever omega - 1 divides dmax the two
closed forms coincide and the Turan-style lower bound graph is optimal.
"""

from cdt import bounds_report

T = 3
ABBREV = {
    "divisibility": "div",
    "delta-eq-omega": "d=w",
    "delta-eq-omega-plus-one": "d=w+1",
    "special-triple": "spec",
    "none": "pinch",
}

print(f"t = {T} (triangles per vertex)")
header = "omega\\dmax" + "".join(f"{d:>18}" for d in range(3, 11))
print(header)
for omega in range(3, 11):
    cells = []
    for dmax in range(3, 11):
        rep = bounds_report(T, dmax, omega)
        if rep.exact is not None:
            cells.append(f"{str(rep.exact)} [{ABBREV[rep.provenance]}]")
        elif rep.conjecture is not None:
            cells.append(f"{rep.lower}..{rep.upper} ?{rep.conjecture}")
        else:
            cells.append(f"{rep.lower}..{rep.upper}")
    print(f"{omega:>10}" + "".join(f"{c:>18}" for c in cells))

print()
print("[div]   clique bound minus one divides the degree bound")
print("[d=w]   degree bound equals the clique bound")
print("[d=w+1] degree bound one above the clique bound (largest two clique sizes)")
print("[spec]  individually proven triple")
print("?v      open: best known candidate value v")
