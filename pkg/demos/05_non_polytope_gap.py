"""A 3-regular graph that is not a polytope graph: the Petersen graph.

The search cannot close the gap.  The exact fallback confirms that the best
facoidal system has 6 walks while every acyclic orientation has H2-sum at
least 7, so no certificate exists and the tool reports the gap instead.
"""

from polyrecon import graph as G
from polyrecon.solver import GapReport, SolverConfig, solve

outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
g = G.from_edges(10, outer + spokes + inner)

state, result = solve(g, SolverConfig(restarts=2, budget_iters=20000, exact=True))
assert isinstance(result, GapReport)
print(f"best facoidal system: {state.primal_value} walks")
print(f"best H2-sum:          {state.dual_value}")
print(f"gap:                  {state.gap}")
print(result.dumps())
