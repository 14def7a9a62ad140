"""Refuting wrong claims about the 3-cube.

A facoidal system of four walks covers every corner exactly once, but a
system with six walks exists, so the four walks cannot be the 2-faces.
Likewise an order with H2-sum 9 cannot be an abstract objective function
once an order with H2-sum 6 is known.
"""

from polyrecon import graph as G
from polyrecon.orientations import h2_sum, orient_by_order
from polyrecon.solver import refute_aof_claim, refute_twofaces_claim, solve
from polyrecon.walks import validate_facoidal

g = G.cube(3)
claim = validate_facoidal(g, [[0, 1, 3, 7, 5, 4, 6, 7, 3, 2], [0, 1, 5, 4], [0, 2, 6, 4], [1, 3, 2, 6, 7, 5]])
print(f"claimed 2-faces: {len(claim)} walks")

state, cert = solve(g)
ref = refute_twofaces_claim(g, claim, state)
print(f"refuted by a system of {ref.value} walks: {[list(w) for w in ref.walks.walks]}")
print("the certified system itself is refuted:", refute_twofaces_claim(g, cert.walks, state) is not None)

order = [0, 3, 1, 6, 2, 4, 5, 7]
o = orient_by_order(g, order)
ref = refute_aof_claim(g, o, state)
print(f"order {order} has H2-sum {h2_sum(o)}; refuted by an orientation with H2-sum {ref.value}")
