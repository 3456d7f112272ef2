"""Constructors for the labeled graph families.

Each constructor returns a :class:`FamilyInstance`: the graph together with a
role map that names vertices by their coordinates (``("c", (i,))`` for the
cycle vertex c_i, ``("o", (i, k))`` for o_{i,k}, and so on). Labeling schemes
address vertices through these roles only.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .errors import InvalidParameter
from .graph import Graph, cartesian_product, cycle, path, star
from .numtheory import fibonacci, is_mersenne_prime_exponent

Role = tuple[str, tuple[int, ...]]

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "cps": ("n", "m"),
    "chain": ("n", "m"),
    "fib": ("m",),
    "prism": ("n",),
    "book": ("n", "m"),
}


@dataclass(frozen=True)
class FamilyParams:
    name: str
    params: tuple[int, ...]

    def __post_init__(self):
        expected = FAMILY_PARAMS.get(self.name)
        if expected is None:
            raise InvalidParameter(f"unknown family {self.name!r}")
        if len(self.params) != len(expected):
            raise InvalidParameter(
                f"family {self.name!r} takes parameters {', '.join(expected)}"
            )

    def as_dict(self) -> dict[str, int]:
        return dict(zip(FAMILY_PARAMS[self.name], self.params))

    def __str__(self) -> str:
        return f"{self.name}({', '.join(map(str, self.params))})"


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    family: FamilyParams
    roles: Mapping[Role, int]

    def __post_init__(self):
        object.__setattr__(self, "roles", MappingProxyType(dict(self.roles)))
        ids = sorted(self.roles.values())
        if ids != list(range(self.graph.vertex_count)):
            raise InvalidParameter("roles must be a bijection onto the vertex ids")

    def vertex(self, name: str, *index: int) -> int:
        return self.roles[(name, tuple(index))]

    def role_of(self) -> dict[int, Role]:
        return {v: r for r, v in self.roles.items()}


def _positive(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value!r}")


def build_path(n: int) -> FamilyInstance:
    g = path(n)
    return FamilyInstance(g, FamilyParams("path", (n,)), {("v", (i + 1,)): i for i in range(n)})


def build_cycle(n: int) -> FamilyInstance:
    g = cycle(n)
    return FamilyInstance(g, FamilyParams("cycle", (n,)), {("v", (i + 1,)): i for i in range(n)})


def build_star(n: int) -> FamilyInstance:
    g = star(n)
    roles = {("c", ()): 0}
    roles.update({("v", (i,)): i for i in range(1, n + 1)})
    return FamilyInstance(g, FamilyParams("star", (n,)), roles)


def build_cycle_pendant_star(n: int, m: int) -> FamilyInstance:
    """n-cycle c_1..c_n, spur p_i on each c_i, and m leaves o_{i,k} on each p_i."""
    _positive("n", n, 3)
    _positive("m", m, 0)
    block = m + 2
    roles: dict[Role, int] = {}
    edges = []
    for i in range(1, n + 1):
        base = (i - 1) * block
        roles[("c", (i,))] = base
        roles[("p", (i,))] = base + 1
        edges.append((base, base + 1))
        edges.append((base, (i % n) * block))
        for k in range(1, m + 1):
            roles[("o", (i, k))] = base + 1 + k
            edges.append((base + 1, base + 1 + k))
    return FamilyInstance(Graph(n * block, edges), FamilyParams("cps", (n, m)), roles)


def _chain_layout(n: int, i: int) -> tuple[list[int], int]:
    """Cyclic order of the new roles c_{i,k} of cycle i >= 2, read from the
    vertex shared with cycle i-1, and the k of the vertex shared with cycle i+1.

    The shared vertices of a middle cycle are antipodal, so the outgoing one is
    always the (n/2)-th vertex of the order.
    """
    half = n // 2
    if n == 4:
        order = [1, 2, 3] if i % 2 == 0 else [1, 3, 2]
    elif n == 6:
        order = [1, 2, 3, 4, 5] if i % 3 == 1 else [1, 2, 5, 4, 3]
    elif i % 2 == 0:
        order = list(range(1, half)) + list(range(n - 1, half - 1, -1))
    else:
        order = list(range(1, n))
    return order, order[half - 1]


def supported_chain_size(n: int) -> bool:
    if n in (4, 6):
        return True
    k = n.bit_length() - 1
    return n >= 8 and n == 1 << k and is_mersenne_prime_exponent(k)


def build_cycle_chain(n: int, m: int) -> FamilyInstance:
    """m n-cycles in a row, consecutive cycles sharing one vertex.

    Cycle 1 holds c_{1,1..n} in cyclic order; cycle i >= 2 adds c_{i,1..n-1}.
    """
    if not isinstance(n, int) or not supported_chain_size(n):
        raise InvalidParameter(f"cycle chains are supported for n in 4, 6 or 2^k with 2^k-1 prime; got {n}")
    _positive("m", m, 1)
    roles: dict[Role, int] = {("c", (1, k)): k - 1 for k in range(1, n + 1)}
    edges = [(k, (k + 1) % n) for k in range(n)]
    shared = roles[("c", (1, 4 if n == 4 else 1))]
    next_id = n
    for i in range(2, m + 1):
        order, exit_k = _chain_layout(n, i)
        ring = [shared]
        for k in order:
            roles[("c", (i, k))] = next_id
            ring.append(next_id)
            next_id += 1
        edges.extend((ring[j], ring[(j + 1) % n]) for j in range(n))
        shared = roles[("c", (i, exit_k))]
    return FamilyInstance(Graph(next_id, edges), FamilyParams("chain", (n, m)), roles)


def build_fibonacci_chain(m: int) -> FamilyInstance:
    """Spine p_1..p_{m+2}, chord p_1-p_3, and for 3 <= j <= m+1 a detour of
    F_j edges from p_j to p_{j+1} through new vertices d_{j,1..F_j-1}."""
    _positive("m", m, 1)
    roles: dict[Role, int] = {("p", (j,)): j - 1 for j in range(1, m + 3)}
    edges = [(j, j + 1) for j in range(m + 1)]
    edges.append((0, 2))
    next_id = m + 2
    for j in range(3, m + 2):
        prev = roles[("p", (j,))]
        for t in range(1, fibonacci(j)):
            roles[("d", (j, t))] = next_id
            edges.append((prev, next_id))
            prev = next_id
            next_id += 1
        edges.append((prev, roles[("p", (j + 1,))]))
    return FamilyInstance(Graph(next_id, edges), FamilyParams("fib", (m,)), roles)


def build_prism(n: int) -> FamilyInstance:
    """C_n x P_2 with inner cycle c_{1,i}, outer cycle c_{2,i}, spokes c_{1,i}-c_{2,i}."""
    _positive("n", n, 3)
    g = cartesian_product(cycle(n), path(2))
    roles = {("c", (r, i)): (i - 1) * 2 + (r - 1) for r in (1, 2) for i in range(1, n + 1)}
    return FamilyInstance(g, FamilyParams("prism", (n,)), roles)


def build_book(n: int, m: int) -> FamilyInstance:
    """S_n x P_m: centers c_1..c_m on a path, leaves v_{i,k} of page i in row k."""
    _positive("n", n, 1)
    _positive("m", m, 2)
    g = cartesian_product(star(n), path(m))
    roles: dict[Role, int] = {("c", (j,)): j - 1 for j in range(1, m + 1)}
    for k in range(1, n + 1):
        for i in range(1, m + 1):
            roles[("v", (i, k))] = k * m + i - 1
    return FamilyInstance(g, FamilyParams("book", (n, m)), roles)


BUILDERS = {
    "path": build_path,
    "cycle": build_cycle,
    "star": build_star,
    "cps": build_cycle_pendant_star,
    "chain": build_cycle_chain,
    "fib": build_fibonacci_chain,
    "prism": build_prism,
    "book": build_book,
}


def build(family: str, *params: int) -> FamilyInstance:
    fam = FamilyParams(family, tuple(params))
    return BUILDERS[fam.name](*fam.params)
