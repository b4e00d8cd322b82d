"""
Building Sierpinski graphs
==========================

S(n, k) lives on words of length n over {0, ..., k-1}.  This script builds
S(3, 3), looks at its extreme vertices, cliques and crossing edges, and
checks the recursive construction against the direct one.
"""

from sierpinski_codes import export, new_graph, new_graph_recursive

g = new_graph(3, 3)
print(g, "with", g.vertex_count, "vertices and", len(g.edges()), "edges")

# Extreme vertices (i, i, ..., i) have degree k-1, all others degree k.
print("extreme:", [g.label(u) for u in g.extreme_vertices()])
print("degrees:", sorted({g.degree(u) for u in range(g.vertex_count)}))

# Every vertex sits in one k-clique, fixed by its first n-1 coordinates.
u = g.vertex_id((2, 1, 0))
print("clique of (2,1,0):", sorted(g.label(v) for v in g.clique_of(u)))

# Inner vertices have exactly one neighbour outside their clique.
m = g.crossing_partner(g.vertex_id((0, 1, 1)))
print("crossing partner of (0,1,1):", g.label(m))
print("crossing edges:", len(g.crossing_edges()), "== (k^n - k)/2 =", (27 - 3) // 2)

# k copies of S(n-1, k) joined by k(k-1)/2 edges give the same graph.
print("recursive == direct:", new_graph_recursive(3, 3).edges() == g.edges())

# Deterministic exports: dot, json, edgelist.
print(export(new_graph(1, 3), "dot"))
