"""Codes (vertex subsets) and the four covering-code predicates.

``I(u, C)`` is the set of code members within distance one of ``u``.  A
code is dominating when every ``I(u, C)`` is non-empty, total-dominating
when every ``I(u, C) - {u}`` is non-empty, identifying when it is
dominating and all ``I``-sets are pairwise distinct, and
locating-dominating when it is dominating and the ``I``-sets of non-code
vertices are pairwise distinct.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, format_label, parse_label


class CodeKind(enum.Enum):
    DOMINATING = "dom"
    TOTAL_DOMINATING = "td"
    IDENTIFYING = "id"
    LOCATING_DOMINATING = "ld"

    @classmethod
    def parse(cls, text: "str | CodeKind") -> "CodeKind":
        if isinstance(text, cls):
            return text
        aliases = {
            "dom": cls.DOMINATING, "dominating": cls.DOMINATING,
            "td": cls.TOTAL_DOMINATING, "total": cls.TOTAL_DOMINATING,
            "total-dominating": cls.TOTAL_DOMINATING,
            "id": cls.IDENTIFYING, "identifying": cls.IDENTIFYING,
            "ld": cls.LOCATING_DOMINATING, "locating-dominating": cls.LOCATING_DOMINATING,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown code kind {text!r}") from None


ALL_KINDS = tuple(CodeKind)


@dataclass(frozen=True)
class Code:
    """A set of vertex ids belonging to a graph with ``vertex_count`` vertices."""

    members: frozenset[int]
    vertex_count: int
    signature: tuple[int, ...] | None = None

    def __post_init__(self):
        bad = [u for u in self.members if not 0 <= u < self.vertex_count]
        if bad:
            raise ValueError(f"code members {sorted(bad)[:5]} outside [0, {self.vertex_count})")

    @classmethod
    def of(cls, g: Graph, members: Iterable[int]) -> "Code":
        return cls(frozenset(int(u) for u in members), g.vertex_count, getattr(g, "signature", None))

    @classmethod
    def from_labels(cls, g: Graph, labels: Iterable[Sequence[int]]) -> "Code":
        return cls.of(g, (g.vertex_id(lab) for lab in labels))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, u: object) -> bool:
        return u in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def mask(self) -> int:
        m = 0
        for u in self.members:
            m |= 1 << u
        return m

    def labels(self, g: Graph) -> list[tuple[int, ...]]:
        return [g.label(u) for u in sorted(self.members)]

    def union(self, other: Iterable[int]) -> "Code":
        return Code(self.members | frozenset(other), self.vertex_count, self.signature)


def _members(C) -> frozenset[int]:
    if isinstance(C, Code):
        return C.members
    return frozenset(C)


def ball(g: Graph, u: int, C) -> frozenset[int]:
    """``I(u, C)``: the members of ``C`` in the closed neighbourhood of ``u``."""
    members = _members(C)
    return frozenset(v for v in (u, *g.neighbors(u)) if v in members)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verifier.

    ``witness`` is ``("uncovered", u)``, ``("not-totally-covered", u)`` or
    ``("unseparated", u, v)``; ``witness_ball`` holds the (shared) I-set.
    """

    valid: bool
    kind: CodeKind
    witness: tuple | None = None
    witness_ball: frozenset[int] | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self, g: Graph) -> dict:
        doc: dict = {"valid": self.valid, "kind": self.kind.value}
        if self.witness is not None:
            reason, *verts = self.witness
            doc["witness"] = {
                "reason": reason,
                "vertices": [format_label(g.label(v)) for v in verts],
                "ball": [format_label(g.label(v)) for v in sorted(self.witness_ball or ())],
            }
        return doc

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), sort_keys=True)


def is_dominating(g: Graph, C) -> VerificationReport:
    members = _members(C)
    for u in range(g.vertex_count):
        if u not in members and not any(v in members for v in g.neighbors(u)):
            return VerificationReport(False, CodeKind.DOMINATING, ("uncovered", u), frozenset())
    return VerificationReport(True, CodeKind.DOMINATING)


def is_total_dominating(g: Graph, C) -> VerificationReport:
    members = _members(C)
    for u in range(g.vertex_count):
        if not any(v in members for v in g.neighbors(u)):
            return VerificationReport(False, CodeKind.TOTAL_DOMINATING,
                                      ("not-totally-covered", u), ball(g, u, members))
    return VerificationReport(True, CodeKind.TOTAL_DOMINATING)


def _first_collision(g: Graph, members: frozenset[int], vertices: Iterable[int]):
    # bucket by I-set; the first repeat is the witness pair
    seen: dict[frozenset[int], int] = {}
    for u in vertices:
        key = ball(g, u, members)
        if key in seen:
            return seen[key], u, key
        seen[key] = u
    return None


def _separating(g: Graph, C, kind: CodeKind, vertices) -> VerificationReport:
    members = _members(C)
    dom = is_dominating(g, members)
    if not dom.valid:
        return VerificationReport(False, kind, dom.witness, dom.witness_ball)
    hit = _first_collision(g, members, vertices(members))
    if hit is not None:
        u, v, key = hit
        return VerificationReport(False, kind, ("unseparated", u, v), key)
    return VerificationReport(True, kind)


def is_identifying(g: Graph, C) -> VerificationReport:
    return _separating(g, C, CodeKind.IDENTIFYING, lambda m: range(g.vertex_count))


def is_locating_dominating(g: Graph, C) -> VerificationReport:
    return _separating(g, C, CodeKind.LOCATING_DOMINATING,
                       lambda m: (u for u in range(g.vertex_count) if u not in m))


VERIFIERS = {
    CodeKind.DOMINATING: is_dominating,
    CodeKind.TOTAL_DOMINATING: is_total_dominating,
    CodeKind.IDENTIFYING: is_identifying,
    CodeKind.LOCATING_DOMINATING: is_locating_dominating,
}


def verify(g: Graph, C, kind: CodeKind | str) -> VerificationReport:
    return VERIFIERS[CodeKind.parse(kind)](g, C)


def classify(g: Graph, C) -> set[CodeKind]:
    return {kind for kind, check in VERIFIERS.items() if check(g, C).valid}


def is_twin_free(g: Graph) -> bool:
    """No two distinct vertices share a closed neighbourhood."""
    closed = {frozenset(g.closed_neighborhood(u)) for u in range(g.vertex_count)}
    return len(closed) == g.vertex_count


def replay_witness(g: Graph, C, report: VerificationReport) -> bool:
    """Re-check a failing report's witness straight from the definitions.

    Returns True when the witness really does violate ``report.kind``.
    """
    members = _members(C)
    reason, *verts = report.witness
    if reason == "uncovered":
        (u,) = verts
        return not ball(g, u, members)
    if reason == "not-totally-covered":
        (u,) = verts
        return not (ball(g, u, members) - {u})
    if reason == "unseparated":
        u, v = verts
        if u == v or ball(g, u, members) != ball(g, v, members):
            return False
        if report.kind is CodeKind.LOCATING_DOMINATING:
            return u not in members and v not in members
        return True
    raise ValueError(f"unknown witness {report.witness!r}")


# -- code files ---------------------------------------------------------

def parse_code_text(g: Graph, text: str) -> Code:
    """Parse one comma-separated label per line; blank lines and '#' comments ignored."""
    labels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            labels.append(parse_label(line))
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse label {line!r}") from None
    return Code.from_labels(g, labels)


def format_code(g: Graph, C) -> str:
    return "".join(format_label(g.label(u)) + "\n" for u in sorted(_members(C)))
