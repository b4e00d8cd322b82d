"""Explicit minimum codes on S(n, k) and their closed-form sizes.

All constructions work block by block: a block is the set of vertices
sharing their first n-2 coordinates and induces a copy of S(2, k).
"""

from __future__ import annotations

import itertools
import math

from .codes import Code, CodeKind, verify
from .graph import ParameterError, SierpinskiGraph, new_graph


def _check(n: int, k: int) -> None:
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if n < 2:
        raise ParameterError(f"constructions need n >= 2, got n={n}")


def predicted_size(kind: CodeKind | str, n: int, k: int) -> int:
    """Minimum code size on S(n, k) as given by the closed-form results."""
    _check(n, k)
    kind = CodeKind.parse(kind)
    if kind is CodeKind.IDENTIFYING:
        return k ** (n - 1) * (k - 1)
    if kind is CodeKind.LOCATING_DOMINATING:
        num = k ** (n - 1) * (k - 1)
        if num % 2:
            raise ArithmeticError(f"k^(n-1)(k-1) odd for n={n}, k={k}")
        return num // 2
    if kind is CodeKind.TOTAL_DOMINATING:
        return k ** (n - 1) + (k % 2)
    if n % 2 == 0:
        num = k * (k ** (n - 1) + 1)
    else:
        num = k**n + 1
    q, r = divmod(num, k + 1)
    if r:
        raise ArithmeticError(f"domination formula not integral for n={n}, k={k}")
    return q


def conjecture_bound(n: int, k: int) -> int:
    """ceil(|V| - |V| / max_degree) for S(n, k)."""
    _check(n, k)
    V = k**n
    return math.ceil(V - V / k) if V < 2**50 else V - V // k


def _block_ids(g: SierpinskiGraph):
    """Yield (offset, id_of) per block; id_of(a, b) is the id of prefix + (a, b)."""
    k = g.k
    for b in range(k ** (g.n - 2)):
        off = b * k * k
        yield off, (lambda a, c, off=off: off + a * k + c)


def identifying_code(n: int, k: int) -> Code:
    """Inner vertices of every block (last two coordinates differ)."""
    _check(n, k)
    g = new_graph(n, k)
    members = [idx(a, b) for _, idx in _block_ids(g)
               for a in range(k) for b in range(k) if a != b]
    return Code.of(g, members)


def ld_block_pattern(k: int) -> list[tuple[int, int]]:
    """One endpoint per crossing edge of S(2, k), hitting every clique.

    Edges {i, i+1 mod k} of the Hamiltonian cycle give (i, i+1 mod k); the
    remaining pairs i < j give (i, j).
    """
    cycle = {frozenset((i, (i + 1) % k)) for i in range(k)}
    picks = [(i, (i + 1) % k) for i in range(k)]
    picks += [(i, j) for i, j in itertools.combinations(range(k), 2)
              if frozenset((i, j)) not in cycle]
    return picks


def locating_dominating_code(n: int, k: int) -> Code:
    _check(n, k)
    g = new_graph(n, k)
    pattern = ld_block_pattern(k)
    return Code.of(g, [idx(a, b) for _, idx in _block_ids(g) for a, b in pattern])


def _matching(symbols: list[int]) -> list[tuple[int, int]]:
    """Canonical matching: consecutive pairs of the sorted symbols."""
    s = sorted(symbols)
    return [(s[i], s[i + 1]) for i in range(0, len(s) - 1, 2)]


def _td_partial(k: int, m: int, c: int, prefix: tuple[int, ...], out: list[tuple[int, ...]]) -> None:
    """Odd k: code on the copy of S(m, k) under ``prefix`` that totally
    dominates the copy except its extreme vertex (c, ..., c), which is in the
    code and still needs a code neighbour across the copy's boundary.
    Adds k^(m-1) labels to ``out``.
    """
    if m == 2:
        for a, b in _matching([s for s in range(k) if s != c]):
            out.append(prefix + (a, b))
            out.append(prefix + (b, a))
        out.append(prefix + (c, c))
        return
    _td_partial(k, m - 1, c, prefix + (c,), out)
    # copies a, b get extremes (a, b, .., b) and (b, a, .., a): crossing partners
    for a, b in _matching([s for s in range(k) if s != c]):
        _td_partial(k, m - 1, b, prefix + (a,), out)
        _td_partial(k, m - 1, a, prefix + (b,), out)


def total_dominating_code(n: int, k: int) -> Code:
    """Even k: both endpoints of the crossing edges of a perfect matching of
    K_k in every block.  Odd k: recursive pairing of block extreme vertices,
    leaving only the global extreme (k-1, ..., k-1) unpaired; it gets a
    clique mate as companion.
    """
    _check(n, k)
    g = new_graph(n, k)
    if k % 2 == 0:
        pairs = _matching(list(range(k)))
        members = [idx(a, b) for _, idx in _block_ids(g)
                   for i, j in pairs for a, b in ((i, j), (j, i))]
        return Code.of(g, members)

    u = k - 1
    if n == 2:
        labels = [lab for a, b in _matching(list(range(k - 1))) for lab in ((a, b), (b, a))]
        labels += [(u, (u + 1) % k), (u, (u + 2) % k)]
        return Code.from_labels(g, labels)
    labels: list[tuple[int, ...]] = []
    _td_partial(k, n, u, (), labels)
    labels.append((u,) * (n - 1) + ((u + 1) % k,))
    return Code.from_labels(g, labels)


CONSTRUCTIONS = {
    CodeKind.IDENTIFYING: identifying_code,
    CodeKind.LOCATING_DOMINATING: locating_dominating_code,
    CodeKind.TOTAL_DOMINATING: total_dominating_code,
}


def construct(kind: CodeKind | str, n: int, k: int) -> Code:
    """Explicit code of the given kind.

    Dominating codes are not constructed here; only their size is known.
    """
    kind = CodeKind.parse(kind)
    if kind not in CONSTRUCTIONS:
        raise NotImplementedError(f"no explicit construction for {kind.value} codes")
    return CONSTRUCTIONS[kind](n, k)


def summary(kind: CodeKind | str, n: int, k: int) -> dict:
    kind = CodeKind.parse(kind)
    code = construct(kind, n, k)
    g = new_graph(n, k)
    return {"kind": kind.value, "n": n, "k": k, "size": len(code),
            "predicted": predicted_size(kind, n, k), "verified": verify(g, code, kind).valid}
