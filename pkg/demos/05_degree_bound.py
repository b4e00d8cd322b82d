"""
Identifying codes and the degree bound
======================================

For a connected twin-free graph with maximum degree at least 3, the
conjectured upper bound on the smallest identifying code is
ceil(|V| - |V| / max_degree).  Sierpinski graphs meet it with equality.
"""

from sierpinski_codes import is_twin_free, new_graph
from sierpinski_codes.cli import conjecture_report

for n, k in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (4, 5)]:
    rep = conjecture_report(n, k)
    print(f"S({n},{k}): bound={rep['bound']:>4} id-min={rep['id_min']:>4} "
          f"({rep['method']}) attained={rep['attained']}")

# S(1, k) is a clique: every closed neighbourhood is the same, so no
# identifying code exists at all.
print("S(1,4) twin-free:", is_twin_free(new_graph(1, 4)))
print("S(2,4) twin-free:", is_twin_free(new_graph(2, 4)))
