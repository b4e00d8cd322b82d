"""
Proving minimality by search
============================

``min_code`` runs branch and bound on any graph.  On Sierpinski graphs the
structural lower bounds meet the constructions immediately; with them
switched off the search has to prove optimality on its own.  Small cases
are cross-checked against plain subset enumeration.
"""

import time

from sierpinski_codes import (
    SolveOptions, brute_force_min, certify_paper_value, complete_graph, min_code, new_graph,
)

for kind in ("dom", "td", "id", "ld"):
    for n, k in [(2, 3), (2, 4), (2, 5), (3, 3)]:
        t0 = time.perf_counter()
        r = min_code(new_graph(n, k), SolveOptions(kind, use_structural_bound=False))
        print(f"S({n},{k}) {kind:>3}: {r.min_size:>3} {r.status.value} "
              f"nodes={r.nodes_explored} {time.perf_counter() - t0:.3f}s")

g = new_graph(2, 4)
print("brute force id on S(2,4):", brute_force_min(g, "id"))
print("brute force td on K4:", brute_force_min(complete_graph(4), "td"))

# Larger instances: bounds meet, no search needed.
for n, k in [(4, 3), (3, 4), (5, 3)]:
    print(certify_paper_value(n, k, "ld").to_dict())
