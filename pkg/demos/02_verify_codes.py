"""
Checking codes
==============

A code is a vertex subset.  ``ball(g, u, C)`` is the set of code vertices
within distance one of u; the four code kinds are conditions on these
balls.  Failing checks come with a witness.
"""

from sierpinski_codes import Code, ball, classify, new_graph, verify

g = new_graph(2, 3)
inner = Code.from_labels(g, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)])
print("inner vertices satisfy:", sorted(k.value for k in classify(g, inner)))

# Drop one inner vertex and identification breaks.
five = Code.from_labels(g, [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0)])
report = verify(g, five, "id")
print(report.to_json(g))

u, v = report.witness[1:]
print("ball", g.label(u), "=", sorted(g.label(x) for x in ball(g, u, five)))
print("ball", g.label(v), "=", sorted(g.label(x) for x in ball(g, v, five)))

# Three vertices, one per crossing edge, already locate and dominate.
ld = Code.from_labels(g, [(0, 1), (1, 2), (2, 0)])
print("ld:", verify(g, ld, "ld").valid, " id:", verify(g, ld, "id").valid)
