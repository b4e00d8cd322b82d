"""Exact minimum codes by branch and bound.

Every code kind is a hitting-set problem: the code must meet each set of a
family built from closed neighbourhoods.

* dominating: every ``N[u]``
* total-dominating: every open ``N(u)``
* identifying: every ``N[u]`` and every ``N[u] ^ N[v]``
* locating-dominating: every ``N[u]`` and every ``(N[u] ^ N[v]) | {u, v}``

Pairs with disjoint closed neighbourhoods are skipped (their set contains
``N[u]``), and supersets are discarded.  An empty set means no code exists.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .codes import Code, CodeKind, verify
from .constructions import CONSTRUCTIONS, predicted_size
from .graph import Graph, ParameterError, SierpinskiGraph, format_label

BRUTE_FORCE_MAX_VERTICES = 20


class Status(enum.Enum):
    PROVED_OPTIMAL = "ProvedOptimal"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    INFEASIBLE = "Infeasible"


@dataclass
class SolveOptions:
    kind: CodeKind
    node_budget: int | None = None
    time_budget: float | None = None
    deterministic: bool = True
    initial_upper_bound: Code | None = None
    use_structural_bound: bool = True
    jobs: int = 1

    def __post_init__(self):
        self.kind = CodeKind.parse(self.kind)
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass
class SolveResult:
    kind: CodeKind
    status: Status
    min_size: int | None
    witness: Code | None
    nodes_explored: int
    lower_bound_used: int
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, g: Graph) -> dict:
        return {
            "kind": self.kind.value,
            "n": getattr(g, "n", None),
            "k": getattr(g, "k", None),
            "min_size": self.min_size,
            "status": self.status.value,
            "nodes_explored": self.nodes_explored,
            "lower_bound_used": self.lower_bound_used,
            "witness": None if self.witness is None
            else [format_label(lab) for lab in self.witness.labels(g)],
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), sort_keys=True)


# -- problem reduction ----------------------------------------------------

def hitting_family(g: Graph, kind: CodeKind | str) -> list[int]:
    """Bit-mask sets a code of ``kind`` must intersect, minimal and sorted."""
    kind = CodeKind.parse(kind)
    V = g.vertex_count
    opened = g.neighbor_masks()
    closed = [opened[u] | (1 << u) for u in range(V)]
    if kind is CodeKind.TOTAL_DOMINATING:
        family = set(opened)
    else:
        family = set(closed)
    if kind in (CodeKind.IDENTIFYING, CodeKind.LOCATING_DOMINATING):
        for u in range(V):
            # v within distance two of u
            near = 0
            for w in g.neighbors(u):
                near |= closed[w]
            near |= closed[u]
            near >>= u + 1
            v = u + 1
            while near:
                if near & 1:
                    s = closed[u] ^ closed[v]
                    if kind is CodeKind.LOCATING_DOMINATING:
                        s |= (1 << u) | (1 << v)
                    family.add(s)
                near >>= 1
                v += 1
    return _minimal_sets(family)


def _minimal_sets(family) -> list[int]:
    ordered = sorted(family, key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in ordered:
        if not any(t & s == t for t in kept):
            kept.append(s)
    return kept


def greedy_hitting_set(family: list[int], vertex_count: int) -> int:
    """Repeatedly take the vertex meeting most unhit sets (lowest id on ties)."""
    unhit = list(family)
    chosen = 0
    while unhit:
        counts = [0] * vertex_count
        for s in unhit:
            while s:
                low = s & -s
                counts[low.bit_length() - 1] += 1
                s ^= low
        best = max(range(vertex_count), key=lambda v: (counts[v], -v))
        bit = 1 << best
        chosen |= bit
        unhit = [s for s in unhit if not s & bit]
    return chosen


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def generic_lower_bound(unhit: list[int], available: int) -> int:
    """Extra code vertices needed to meet every set in ``unhit``.

    Max of a disjoint-packing bound (pairwise disjoint sets each need their
    own vertex) and the ratio of unhit sets to the best single-vertex
    coverage.
    """
    if not unhit:
        return 0
    used = 0
    packed = 0
    counts: dict[int, int] = {}
    for s in unhit:
        s &= available
        if not s:
            return math.inf
        if not s & used:
            used |= s
            packed += 1
        while s:
            low = s & -s
            counts[low] = counts.get(low, 0) + 1
            s ^= low
    ratio = -(-len(unhit) // max(counts.values())) if counts else math.inf
    return max(packed, ratio)


# -- search ---------------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, family, vertex_count, best_size, floor, node_budget, deadline, shared=None):
        self.family = family
        self.full = (1 << vertex_count) - 1
        self.best_size = best_size
        self.best_mask: int | None = None
        self.floor = floor
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline
        self.shared = shared

    def run(self, chosen: int, forbidden: int, unhit: list[int]) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise _BudgetExhausted
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        if self.best_size <= self.floor:
            return
        size = chosen.bit_count()
        if not unhit:
            if size < self.best_size:
                self.best_size = size
                self.best_mask = chosen
                if self.shared is not None:
                    with self.shared.get_lock():
                        if size < self.shared.value:
                            self.shared.value = size
            return
        available = self.full & ~chosen & ~forbidden
        bound = size + max(generic_lower_bound(unhit, available), self.floor - size)
        if bound >= self.best_size:
            return
        # ties with the shared incumbent stay open so each subtree still
        # reports its own first optimum
        if self.shared is not None and bound > self.shared.value:
            return
        target = min(unhit, key=lambda s: (s & available).bit_count())
        candidates = _bits(target & available)
        for c in candidates:
            bit = 1 << c
            self.run(chosen | bit, forbidden, [s for s in unhit if not s & bit])
            forbidden |= bit


def _root_split(family, vertex_count):
    """Subproblems (chosen, forbidden, unhit) for the children of the root."""
    full = (1 << vertex_count) - 1
    target = min(family, key=lambda s: (s & full).bit_count())
    subs = []
    forbidden = 0
    for c in _bits(target):
        bit = 1 << c
        subs.append((bit, forbidden, [s for s in family if not s & bit]))
        forbidden |= bit
    return subs


_SHARED = None


def _init_worker(shared):
    global _SHARED
    _SHARED = shared


def _run_subproblem(args):
    family, vertex_count, best_size, floor, node_budget, deadline, sub = args
    search = _Search(family, vertex_count, best_size, floor, node_budget, deadline, _SHARED)
    exhausted = False
    try:
        search.run(*sub)
    except _BudgetExhausted:
        exhausted = True
    return search.best_mask, search.nodes, exhausted


def structural_lower_bound(g: Graph, kind: CodeKind | str) -> int:
    """Lower bound read off the clique/crossing-edge structure of S(n, k)."""
    kind = CodeKind.parse(kind)
    if not isinstance(g, SierpinskiGraph):
        raise TypeError("structural bounds only apply to Sierpinski graphs")
    if g.n < 2:
        raise ParameterError("structural bounds need n >= 2")
    k = g.k
    if kind is CodeKind.IDENTIFYING:
        # the partner sets M(K) are disjoint; each needs all but one member
        # in the code, and all of them when K holds an extreme vertex
        total = 0
        seen: set[int] = set()
        for K in g.cliques():
            partners = {g.crossing_partner(u) for u in K} - {None}
            if partners & seen:
                raise AssertionError("partner sets overlap")
            seen |= partners
            total += min(len(partners), k - 1)
        return total
    if kind is CodeKind.LOCATING_DOMINATING:
        # parts: extreme singletons and crossing edges; each clique needs
        # k-1 occupied parts, each part touches at most two cliques
        touches = [0] * g.vertex_count
        for u, v in g.crossing_edges():
            touches[u] = touches[v] = 2
        for u in g.extreme_vertices():
            touches[u] = 1
        demand = len(g.cliques()) * (k - 1)
        return -(-demand // max(touches))
    if kind is CodeKind.TOTAL_DOMINATING:
        # at least k per copy of S(2, k); odd k forces one more by parity
        return len(g.block_prefixes()) * k + (k % 2)
    return predicted_size(kind, g.n, g.k)


def _seed(g: Graph, kind: CodeKind) -> Code | None:
    if isinstance(g, SierpinskiGraph) and g.n >= 2 and kind in CONSTRUCTIONS:
        return CONSTRUCTIONS[kind](g.n, g.k)
    return None


def min_code(g: Graph, opts: SolveOptions) -> SolveResult:
    """Minimum code of ``opts.kind`` on ``g`` by branch and bound.

    The witness is the first optimum met in depth-first order (lowest ids
    branched on first), whatever the initial upper bound and job count.
    """
    t0 = time.monotonic()
    kind = opts.kind
    family = hitting_family(g, kind)
    V = g.vertex_count

    if family and family[0] == 0:
        return SolveResult(kind, Status.INFEASIBLE, None, None, 0, 0, time.monotonic() - t0)

    floor = 0
    if opts.use_structural_bound and isinstance(g, SierpinskiGraph) and g.n >= 2:
        floor = structural_lower_bound(g, kind)
    root_bound = max(floor, generic_lower_bound(family, (1 << V) - 1))

    seed = opts.initial_upper_bound
    if seed is None:
        seed = _seed(g, kind)
    if seed is not None and not verify(g, seed, kind).valid:
        raise ValueError("initial_upper_bound is not a valid code of the requested kind")
    incumbent = seed.mask() if seed is not None else greedy_hitting_set(family, V)

    if seed is not None and len(seed) <= floor:
        return SolveResult(kind, Status.PROVED_OPTIMAL, len(seed), seed, 0, root_bound,
                           time.monotonic() - t0)

    # accept solutions as large as the incumbent so the witness is canonical
    best_size = incumbent.bit_count() + 1
    deadline = None if opts.time_budget is None else t0 + opts.time_budget

    exhausted = False
    if opts.jobs == 1 or not family:
        search = _Search(family, V, best_size, floor, opts.node_budget, deadline)
        try:
            search.run(0, 0, family)
        except _BudgetExhausted:
            exhausted = True
        found, nodes = search.best_mask, search.nodes
    else:
        found, nodes, exhausted = _parallel(family, V, best_size, floor, opts, deadline)

    mask = found if found is not None else incumbent
    witness = Code.of(g, _bits(mask))
    status = Status.BUDGET_EXHAUSTED if exhausted else Status.PROVED_OPTIMAL
    return SolveResult(kind, status, len(witness), witness, nodes, root_bound,
                       time.monotonic() - t0)


def _parallel(family, V, best_size, floor, opts, deadline):
    subs = _root_split(family, V)
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", best_size)
    args = [(family, V, best_size, floor, opts.node_budget, deadline, sub) for sub in subs]
    with ProcessPoolExecutor(max_workers=opts.jobs, mp_context=ctx,
                             initializer=_init_worker, initargs=(shared,)) as pool:
        results = list(pool.map(_run_subproblem, args))
    found = None
    nodes = 1
    exhausted = False
    for mask, n_nodes, ex in results:
        nodes += n_nodes
        exhausted |= ex
        if mask is not None and (found is None or mask.bit_count() < found.bit_count()):
            found = mask
    return found, nodes, exhausted


def brute_force_min(g: Graph, kind: CodeKind | str) -> int | None:
    """Smallest code size by trying all subsets in order of size.

    Checks candidates with the verifiers, not the hitting-set reduction.
    Returns None when no subset (not even all of V) qualifies.
    """
    kind = CodeKind.parse(kind)
    V = g.vertex_count
    if V > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices, got {V}")
    if not verify(g, range(V), kind).valid:
        return None
    for size in range(V + 1):
        for subset in itertools.combinations(range(V), size):
            if verify(g, subset, kind).valid:
                return size
    return None


@dataclass
class Certificate:
    kind: CodeKind
    n: int
    k: int
    value: int | None
    method: str
    predicted: int
    lower_bound: int
    upper_bound: int | None
    status: Status

    @property
    def agrees(self) -> bool:
        return self.value == self.predicted

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "n": self.n, "k": self.k, "value": self.value,
                "method": self.method, "predicted": self.predicted, "agrees": self.agrees,
                "lower_bound": self.lower_bound, "upper_bound": self.upper_bound,
                "status": self.status.value}


def certify_paper_value(n: int, k: int, kind: CodeKind | str,
                        opts: SolveOptions | None = None) -> Certificate:
    """Pin down the minimum on S(n, k): construction vs structural bound,
    falling back to search when they do not meet."""
    from .graph import new_graph

    kind = CodeKind.parse(kind)
    predicted = predicted_size(kind, n, k)
    g = new_graph(n, k)
    lower = structural_lower_bound(g, kind)
    code = CONSTRUCTIONS[kind](n, k) if kind in CONSTRUCTIONS else None
    if code is not None and not verify(g, code, kind).valid:
        raise AssertionError(f"construction for {kind.value} on S({n},{k}) failed verification")
    upper = len(code) if code is not None else None
    if upper is not None and upper == lower:
        return Certificate(kind, n, k, upper, "bounds-met", predicted, lower, upper,
                           Status.PROVED_OPTIMAL)
    opts = opts or SolveOptions(kind)
    opts.kind = kind
    if code is not None and opts.initial_upper_bound is None:
        opts.initial_upper_bound = code
    result = min_code(g, opts)
    return Certificate(kind, n, k, result.min_size, "searched", predicted, lower,
                       upper if upper is not None else result.min_size, result.status)
