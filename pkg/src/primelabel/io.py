"""Canonical JSON graph documents and DOT export.

A document is a JSON object with one top-level key per line and compact
values, keys sorted, so identical inputs always give identical bytes::

    {
      "edges": [[0,1],[0,2]],
      "family": {"name":"prism","params":[6]},
      "format": "primelabel-graph",
      "labeling": [5,6,2,7],
      "roles": [["c",[1,1]],["c",[2,1]]],
      "version": 1,
      "vertex_count": 12
    }

``family``, ``roles`` and ``labeling`` may be ``null``. ``roles[v]`` names
vertex v; ``labeling[v]`` is its label.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameter
from .families import FamilyInstance, FamilyParams, Role
from .graph import Edge, Graph, Labeling

FORMAT_NAME = "primelabel-graph"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class GraphDocument:
    vertex_count: int
    edges: tuple[Edge, ...]
    family: Optional[FamilyParams] = None
    roles: Optional[tuple[Role, ...]] = None
    labeling: Optional[tuple[int, ...]] = None
    version: int = FORMAT_VERSION

    @classmethod
    def from_instance(cls, instance: FamilyInstance, labeling: Optional[Labeling] = None):
        by_vertex = instance.role_of()
        roles = tuple(by_vertex[v] for v in range(instance.graph.vertex_count))
        return cls(
            vertex_count=instance.graph.vertex_count,
            edges=instance.graph.edges,
            family=instance.family,
            roles=roles,
            labeling=tuple(labeling) if labeling is not None else None,
        )

    @classmethod
    def from_graph(cls, g: Graph, labeling: Optional[Labeling] = None):
        return cls(g.vertex_count, g.edges, labeling=tuple(labeling) if labeling is not None else None)

    @property
    def graph(self) -> Graph:
        return Graph(self.vertex_count, self.edges)

    def instance(self) -> FamilyInstance:
        if self.family is None or self.roles is None:
            raise InvalidParameter("document carries no family/roles")
        return FamilyInstance(self.graph, self.family, {r: v for v, r in enumerate(self.roles)})

    def with_labeling(self, labeling: Optional[Labeling]) -> "GraphDocument":
        return GraphDocument(
            self.vertex_count,
            self.edges,
            self.family,
            self.roles,
            tuple(labeling) if labeling is not None else None,
            self.version,
        )

    def label_of_role(self, name: str, *index: int) -> int:
        if self.roles is None or self.labeling is None:
            raise InvalidParameter("document has no roles or no labeling")
        return self.labeling[self.roles.index((name, tuple(index)))]


def _to_json_obj(doc: GraphDocument) -> dict:
    return {
        "edges": [list(e) for e in doc.edges],
        "family": None if doc.family is None else {"name": doc.family.name, "params": list(doc.family.params)},
        "format": FORMAT_NAME,
        "labeling": None if doc.labeling is None else list(doc.labeling),
        "roles": None if doc.roles is None else [[name, list(idx)] for name, idx in doc.roles],
        "version": doc.version,
        "vertex_count": doc.vertex_count,
    }


def serialize_json(doc_or_instance, labeling: Optional[Labeling] = None) -> str:
    if isinstance(doc_or_instance, FamilyInstance):
        doc = GraphDocument.from_instance(doc_or_instance, labeling)
    elif isinstance(doc_or_instance, Graph):
        doc = GraphDocument.from_graph(doc_or_instance, labeling)
    else:
        doc = doc_or_instance if labeling is None else doc_or_instance.with_labeling(labeling)
    obj = _to_json_obj(doc)
    lines = [f"  {json.dumps(k)}: {json.dumps(obj[k], separators=(',', ':'))}" for k in sorted(obj)]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def parse_json(text: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"not a JSON document: {exc}") from None
    if not isinstance(obj, dict) or obj.get("format") != FORMAT_NAME:
        raise InvalidParameter(f"not a {FORMAT_NAME} document")
    if obj.get("version") != FORMAT_VERSION:
        raise InvalidParameter(f"unsupported document version {obj.get('version')!r}")
    try:
        n = int(obj["vertex_count"])
        edges = tuple(tuple(int(x) for x in e) for e in obj["edges"])
        fam = obj.get("family")
        family = None if fam is None else FamilyParams(fam["name"], tuple(int(p) for p in fam["params"]))
        roles = obj.get("roles")
        if roles is not None:
            roles = tuple((str(name), tuple(int(i) for i in idx)) for name, idx in roles)
        labeling = obj.get("labeling")
        if labeling is not None:
            labeling = tuple(int(x) for x in labeling)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameter(f"malformed document: {exc}") from None
    if any(len(e) != 2 or e[0] >= e[1] for e in edges) or list(edges) != sorted(set(edges)):
        raise InvalidParameter("edges must be sorted canonical (u, v) pairs with u < v")
    if roles is not None and len(roles) != n:
        raise InvalidParameter("roles must name every vertex")
    if labeling is not None and len(labeling) != n:
        raise InvalidParameter("labeling must cover every vertex")
    doc = GraphDocument(n, edges, family, roles, labeling)
    doc.graph  # validates simplicity and connectivity
    return doc


def export_dot(doc_or_instance, labeling: Optional[Labeling] = None) -> str:
    """Undirected DOT; nodes are named by label when a labeling is present."""
    if isinstance(doc_or_instance, FamilyInstance):
        doc = GraphDocument.from_instance(doc_or_instance, labeling)
    elif isinstance(doc_or_instance, Graph):
        doc = GraphDocument.from_graph(doc_or_instance, labeling)
    else:
        doc = doc_or_instance if labeling is None else doc_or_instance.with_labeling(labeling)
    names = doc.labeling if doc.labeling is not None else tuple(range(doc.vertex_count))
    title = str(doc.family) if doc.family is not None else "G"
    out = [f"graph {json.dumps(title)} {{"]
    out.extend(f"  {names[v]};" for v in range(doc.vertex_count))
    out.extend(f"  {names[u]} -- {names[v]};" for u, v in doc.edges)
    out.append("}")
    return "\n".join(out) + "\n"
