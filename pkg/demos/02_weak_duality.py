"""Any facoidal system is bounded by any acyclic orientation's H2-sum.

Random edge pairings give facoidal systems of varying size; random vertex
orders give acyclic orientations.  Every walk picks up at least one sink,
and the walk sinks add up to the H2-sum exactly.
"""

import random

from polyrecon import graph as G
from polyrecon.orientations import h2_sum, orient_by_order
from polyrecon.walks import find_facoidal, walk_sink_positions

g = G.prism(5)
rng = random.Random(1)

sizes = sorted({len(find_facoidal(g, seed=s)) for s in range(200)})
print(f"pentagonal prism: facoidal systems from random pairings have sizes {sizes}")

values = []
for _ in range(200):
    order = list(range(g.n))
    rng.shuffle(order)
    values.append(h2_sum(orient_by_order(g, order)))
print(f"H2-sums of random vertex orders range over {min(values)}..{max(values)}")
print(f"largest system {max(sizes)} <= smallest H2-sum {min(values)}: {max(sizes) <= min(values)}")

fs = find_facoidal(g, seed=3)
o = orient_by_order(g, range(g.n))
sinks = [len(walk_sink_positions(w, o)) for w in fs.walks]
print(f"one system, one order: sinks per walk {sinks}, total {sum(sinks)}, H2-sum {h2_sum(o)}")
