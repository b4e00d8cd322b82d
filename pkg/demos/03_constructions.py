"""
Explicit minimum codes
======================

Identifying, locating-dominating and total-dominating codes are built
block by block (a block is a copy of S(2, k)).  Their sizes match the
closed forms exactly.
"""

from sierpinski_codes import construct, new_graph, predicted_size, verify

print(f"{'n':>2} {'k':>2} {'kind':>4} {'size':>6} {'predicted':>9}  ok")
for n, k in [(2, 3), (2, 4), (3, 3), (3, 5), (4, 4), (5, 3)]:
    g = new_graph(n, k)
    for kind in ("id", "ld", "td"):
        code = construct(kind, n, k)
        ok = verify(g, code, kind).valid
        print(f"{n:>2} {k:>2} {kind:>4} {len(code):>6} {predicted_size(kind, n, k):>9}  {ok}")

# Odd k needs one vertex more than k^(n-1) for total domination.
g = new_graph(3, 3)
print(sorted(g.label(u) for u in construct("td", 3, 3)))

# Domination numbers are only available as a formula.
print("dominating sizes:", [predicted_size("dom", n, 3) for n in range(2, 7)])
