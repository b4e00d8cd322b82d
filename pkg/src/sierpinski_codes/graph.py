"""Sierpinski graphs S(n, k) and a minimal generic graph type.

Vertices are dense integer ids: the label ``(i_1, ..., i_n)`` maps to its
base-k value with ``i_1`` most significant.  Two distinct vertices are
adjacent iff, for some position h, they share the prefix before h, differ
at h, and the remaining coordinates of each equal the other's h-th symbol.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence

import numpy as np

# k**n above this: neighbours are computed from labels on demand
DEFAULT_TABLE_THRESHOLD = 1 << 20
# k**n above this: construction refused
DEFAULT_MAX_VERTICES = 1 << 24

EXPORT_FORMATS = ("dot", "json", "edgelist")


class ParameterError(ValueError):
    """Raised for out-of-range graph parameters."""


class CapacityError(ValueError):
    """Raised when a requested graph exceeds the configured size budget."""


class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Everything in :mod:`sierpinski_codes.codes` and
    :mod:`sierpinski_codes.solver` only needs :attr:`vertex_count`,
    :meth:`neighbors` and :meth:`label`, so this class doubles as the
    interface for arbitrary test graphs.
    """

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        self.vertex_count = int(vertex_count)
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = [tuple(sorted(s)) for s in adj]

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={self.edge_count()})"

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def closed_neighborhood(self, u: int) -> tuple[int, ...]:
        return tuple(sorted((u, *self.neighbors(u))))

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def max_degree(self) -> int:
        return max((self.degree(u) for u in range(self.vertex_count)), default=0)

    def label(self, u: int) -> tuple[int, ...]:
        return (u,)

    def vertex_id(self, label: Sequence[int]) -> int:
        (u,) = label
        if not 0 <= u < self.vertex_count:
            raise ValueError(f"vertex {u} out of range")
        return int(u)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.vertex_count) for v in self.neighbors(u) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.vertex_count)) // 2

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.vertex_count

    def neighbor_masks(self) -> list[int]:
        """Open neighbourhoods as int bit-vectors (bit v set iff v ~ u)."""
        masks = []
        for u in range(self.vertex_count):
            m = 0
            for v in self.neighbors(u):
                m |= 1 << v
            masks.append(m)
        return masks


def complete_graph(k: int) -> Graph:
    return Graph(k, itertools.combinations(range(k), 2))


class SierpinskiGraph(Graph):
    """The Sierpinski graph S(n, k); immutable after construction.

    For ``k**n`` up to ``table_threshold`` the neighbour table is held in a
    numpy array (row u lists the clique mates of u, then its crossing
    partner or -1).  Larger graphs derive neighbours from labels.
    """

    def __init__(self, n: int, k: int, *, table_threshold: int = DEFAULT_TABLE_THRESHOLD,
                 max_vertices: int = DEFAULT_MAX_VERTICES, _table: np.ndarray | None = None):
        _check_params(n, k, max_vertices)
        self.n = n
        self.k = k
        self.vertex_count = k**n
        self._weights = [k ** (n - 1 - t) for t in range(n)]
        self._table = None
        if _table is not None:
            self._table = _table
        elif self.vertex_count <= table_threshold:
            self._table = _neighbor_table(n, k)

    def __repr__(self) -> str:
        return f"SierpinskiGraph(n={self.n}, k={self.k})"

    @property
    def signature(self) -> tuple[int, int]:
        return (self.n, self.k)

    # -- labels ---------------------------------------------------------

    def label(self, u: int) -> tuple[int, ...]:
        self._check_id(u)
        out = []
        for _ in range(self.n):
            u, r = divmod(u, self.k)
            out.append(r)
        return tuple(reversed(out))

    def vertex_id(self, label: Sequence[int]) -> int:
        if len(label) != self.n:
            raise ValueError(f"label {tuple(label)} has length {len(label)}, expected {self.n}")
        u = 0
        for c in label:
            if not 0 <= c < self.k:
                raise ValueError(f"coordinate {c} of {tuple(label)} outside [0, {self.k - 1}]")
            u = u * self.k + int(c)
        return u

    def _check_id(self, u: int) -> None:
        if not 0 <= u < self.vertex_count:
            raise ValueError(f"vertex id {u} outside [0, {self.vertex_count})")

    # -- structure ------------------------------------------------------

    def neighbors(self, u: int) -> tuple[int, ...]:
        if self._table is not None:
            row = self._table[u]
            return tuple(sorted(int(v) for v in row if v >= 0))
        self._check_id(u)
        base = u - u % self.k
        out = [base + j for j in range(self.k) if base + j != u]
        m = self.crossing_partner(u)
        if m is not None:
            out.append(m)
        return tuple(sorted(out))

    def degree(self, u: int) -> int:
        return self.k - 1 if self.is_extreme(u) else self.k

    def max_degree(self) -> int:
        return self.k if self.n >= 2 else self.k - 1

    def edge_count(self) -> int:
        return self.k * (self.vertex_count - 1) // 2

    def adjacent(self, u: int, v: int) -> bool:
        """Evaluate the prefix/swap rule directly on the two labels."""
        return labels_adjacent(self.label(u), self.label(v))

    def is_extreme(self, u: int) -> bool:
        lab = self.label(u)
        return all(c == lab[0] for c in lab)

    def extreme_vertices(self) -> list[int]:
        return [self.vertex_id((c,) * self.n) for c in range(self.k)]

    def clique_of(self, u: int) -> frozenset[int]:
        self._check_id(u)
        base = u - u % self.k
        return frozenset(range(base, base + self.k))

    def cliques(self) -> list[frozenset[int]]:
        return [frozenset(range(b, b + self.k)) for b in range(0, self.vertex_count, self.k)]

    def crossing_partner(self, u: int) -> int | None:
        """The unique neighbour of ``u`` outside its clique, None for extremes."""
        lab = self.label(u)
        c = lab[-1]
        h = self.n - 1
        while h >= 0 and lab[h] == c:
            h -= 1
        if h < 0:
            return None
        a = lab[h]
        partner = lab[:h] + (c,) + (a,) * (self.n - 1 - h)
        return self.vertex_id(partner)

    def crossing_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.vertex_count):
            m = self.crossing_partner(u)
            if m is not None and u < m:
                out.append((u, m))
        return out

    def edges(self) -> list[tuple[int, int]]:
        if self._table is None:
            return super().edges()
        t = self._table
        u = np.repeat(np.arange(self.vertex_count), t.shape[1])
        v = t.ravel()
        keep = v > u
        pairs = np.stack([u[keep], v[keep]], axis=1)
        order = np.lexsort((pairs[:, 1], pairs[:, 0]))
        return [(int(a), int(b)) for a, b in pairs[order]]

    def block_prefixes(self) -> list[tuple[int, ...]]:
        """Prefixes of length n-2, one per copy of S(2, k) inside S(n, k)."""
        if self.n < 2:
            raise ParameterError("level-2 blocks need n >= 2")
        return list(itertools.product(range(self.k), repeat=self.n - 2))


def labels_adjacent(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError("labels of different length")
    n = len(a)
    for h in range(n):
        if a[h] != b[h]:
            return all(a[t] == b[h] and b[t] == a[h] for t in range(h + 1, n))
    return False


def _check_params(n: int, k: int, max_vertices: int) -> None:
    if not isinstance(n, (int, np.integer)) or not isinstance(k, (int, np.integer)):
        raise ParameterError("n and k must be integers")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if k**n > max_vertices:
        raise CapacityError(f"S({n},{k}) has {k**n} vertices, budget is {max_vertices}")


def _neighbor_table(n: int, k: int) -> np.ndarray:
    """Row u: the k-1 clique mates of u followed by its crossing partner (-1 if extreme)."""
    V = k**n
    ids = np.arange(V, dtype=np.int64)
    digits = np.empty((V, n), dtype=np.int64)
    rest = ids.copy()
    for t in range(n - 1, -1, -1):
        digits[:, t] = rest % k
        rest //= k
    weights = np.array([k ** (n - 1 - t) for t in range(n)], dtype=np.int64)

    table = np.full((V, k), -1, dtype=np.int64)
    base = ids - digits[:, -1]
    last = digits[:, -1]
    # clique mates: last coordinate j != own, in increasing j
    offsets = np.arange(k - 1)
    mates = offsets[None, :] + (offsets[None, :] >= last[:, None])
    table[:, : k - 1] = base[:, None] + mates

    # h = last position whose coordinate differs from the final one
    differs = digits != last[:, None]
    any_diff = differs.any(axis=1)
    h = np.where(any_diff, n - 1 - np.argmax(differs[:, ::-1], axis=1), -1)
    inner = np.nonzero(any_diff)[0]
    hh = h[inner]
    a = digits[inner, hh]
    c = last[inner]
    partner = ids[inner].copy()
    for t in range(n):
        pos = t == hh
        after = t > hh
        cur = digits[inner, t]
        new = np.where(pos, c, np.where(after, a, cur))
        partner += (new - cur) * weights[t]
    table[inner, k - 1] = partner
    return table


def new_graph(n: int, k: int, **kwargs) -> SierpinskiGraph:
    """Build S(n, k) directly from the labelling rule."""
    return SierpinskiGraph(n, k, **kwargs)


def _recursive_edges(n: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    if n == 1:
        return [((i,), (j,)) for i, j in itertools.combinations(range(k), 2)]
    sub = _recursive_edges(n - 1, k)
    out = []
    for i in range(k):
        out.extend(((i, *a), (i, *b)) for a, b in sub)
    for i, j in itertools.combinations(range(k), 2):
        out.append(((i,) + (j,) * (n - 1), (j,) + (i,) * (n - 1)))
    return out


def new_graph_recursive(n: int, k: int, **kwargs) -> SierpinskiGraph:
    """Build S(n, k) from k copies of S(n-1, k) joined by k(k-1)/2 edges.

    Copy i and copy j are joined by the edge (i, j, ..., j) -- (j, i, ..., i).
    The result carries its own neighbour table, so comparing its edges with
    :func:`new_graph` checks the two constructions against each other.
    """
    _check_params(n, k, kwargs.get("max_vertices", DEFAULT_MAX_VERTICES))
    V = k**n

    def enc(lab):
        u = 0
        for c in lab:
            u = u * k + c
        return u

    adj: list[list[int]] = [[] for _ in range(V)]
    for a, b in _recursive_edges(n, k):
        u, v = enc(a), enc(b)
        adj[u].append(v)
        adj[v].append(u)
    if any(len(row) > k for row in adj):
        raise AssertionError("recursive construction produced a vertex of degree > k")
    table = np.full((V, k), -1, dtype=np.int64)
    for u, row in enumerate(adj):
        table[u, : len(row)] = sorted(row)
    return SierpinskiGraph(n, k, _table=table, **kwargs)


def format_label(label: Sequence[int]) -> str:
    return ",".join(str(c) for c in label)


def parse_label(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.strip().split(","))


def export(g: Graph, fmt: str) -> str:
    """Serialise ``g`` deterministically as ``dot``, ``json`` or ``edgelist``."""
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
    edges = g.edges()
    if fmt == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in edges)
    if fmt == "json":
        doc = {"n": getattr(g, "n", None), "k": getattr(g, "k", None),
               "edges": [[u, v] for u, v in edges]}
        return json.dumps(doc, separators=(",", ":")) + "\n"
    name = f"S_{g.n}_{g.k}" if isinstance(g, SierpinskiGraph) else "G"
    lines = [f"graph {name} {{"]
    lines += [f'  "{format_label(g.label(u))}";' for u in range(g.vertex_count)]
    lines += [f'  "{format_label(g.label(u))}" -- "{format_label(g.label(v))}";' for u, v in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
