"""Immutable simple connected graphs and the prime-labeling verifier.

Vertex ids are 0-based; labels are 1-based. Edges are stored canonically as
sorted ``(u, v)`` pairs with ``u < v``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import InvalidParameter

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]]):
        if vertex_count < 1:
            raise InvalidParameter(f"vertex_count must be positive, got {vertex_count}")
        canon = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidParameter(f"edge {(u, v)} out of range for {vertex_count} vertices")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        if not self._connected():
            raise InvalidParameter("graph is not connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def _connected(self) -> bool:
        seen = [False] * self.vertex_count
        seen[0] = True
        todo = deque([0])
        count = 1
        adj = self.adjacency
        while todo:
            u = todo.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    todo.append(w)
        return count == self.vertex_count

    def __len__(self) -> int:
        return self.vertex_count


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidParameter(f"path needs n >= 2, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star with center 0 and leaves 1..n."""
    if n < 1:
        raise InvalidParameter(f"star needs n >= 1, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) gets id ``a * |V(h)| + b``."""
    nh = h.vertex_count
    edges = []
    for a in range(g.vertex_count):
        for b, b2 in h.edges:
            edges.append((a * nh + b, a * nh + b2))
    for a, a2 in g.edges:
        for b in range(nh):
            edges.append((a * nh + b, a2 * nh + b))
    return Graph(g.vertex_count * nh, edges)


@dataclass(frozen=True)
class Labeling:
    """Labels indexed by vertex id: ``labels[v]`` is the label of vertex v.

    Bijectivity onto 1..n is not enforced here; :func:`verify_labeling`
    reports any violation.
    """

    labels: tuple[int, ...]

    def __init__(self, labels: Iterable[int]):
        object.__setattr__(self, "labels", tuple(int(x) for x in labels))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], vertex_count: int) -> "Labeling":
        if set(mapping) != set(range(vertex_count)):
            raise InvalidParameter("labeling must assign every vertex exactly once")
        return cls(mapping[v] for v in range(vertex_count))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(range(1, len(self.labels) + 1))

    def vertex_of(self) -> dict[int, int]:
        return {lab: v for v, lab in enumerate(self.labels)}


LabelingLike = Union[Labeling, Sequence[int], Mapping[int, int]]


@dataclass(frozen=True)
class VerificationReport:
    range_violations: list[tuple[int, int]] = field(default_factory=list)
    duplicate_labels: list[tuple[int, list[int]]] = field(default_factory=list)
    coprimality_violations: list[tuple[Edge, int, int, int]] = field(default_factory=list)

    @property
    def is_prime(self) -> bool:
        return not (self.range_violations or self.duplicate_labels or self.coprimality_violations)

    def summary(self) -> str:
        if self.is_prime:
            return "prime labeling: OK"
        return (
            "not a prime labeling: "
            f"{len(self.range_violations)} out-of-range, "
            f"{len(self.duplicate_labels)} duplicated, "
            f"{len(self.coprimality_violations)} non-coprime edges"
        )

    def to_dict(self) -> dict:
        return {
            "is_prime": self.is_prime,
            "range_violations": [{"vertex": v, "label": lab} for v, lab in self.range_violations],
            "duplicate_labels": [{"label": lab, "vertices": vs} for lab, vs in self.duplicate_labels],
            "coprimality_violations": [
                {"edge": list(e), "label_u": a, "label_v": b, "gcd": d}
                for e, a, b, d in self.coprimality_violations
            ],
        }


def _as_labeling(g: Graph, lab: LabelingLike) -> Labeling:
    if isinstance(lab, Labeling):
        out = lab
    elif isinstance(lab, Mapping):
        out = Labeling.from_mapping(lab, g.vertex_count)
    else:
        out = Labeling(lab)
    if len(out) != g.vertex_count:
        raise InvalidParameter(
            f"labeling covers {len(out)} vertices but graph has {g.vertex_count}"
        )
    return out


def verify_labeling(g: Graph, labeling: LabelingLike) -> VerificationReport:
    """Check a labeling and report every violation (never fails fast)."""
    lab = _as_labeling(g, labeling)
    n = g.vertex_count
    range_bad = [(v, x) for v, x in enumerate(lab.labels) if not 1 <= x <= n]

    holders: dict[int, list[int]] = {}
    for v, x in enumerate(lab.labels):
        holders.setdefault(x, []).append(v)
    dups = sorted((x, vs) for x, vs in holders.items() if len(vs) > 1)

    coprime_bad = []
    if g.edges:
        arr = np.asarray(lab.labels, dtype=np.int64)
        e = np.asarray(g.edges, dtype=np.int64)
        a, b = arr[e[:, 0]], arr[e[:, 1]]
        # gcd(0, x) = x, so non-positive labels only show up as range violations
        d = np.gcd(np.abs(a), np.abs(b))
        for idx in np.flatnonzero(d != 1):
            u, v = g.edges[idx]
            coprime_bad.append(((u, v), int(a[idx]), int(b[idx]), int(d[idx])))
    return VerificationReport(range_bad, dups, coprime_bad)
