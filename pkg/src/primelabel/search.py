"""Exhaustive searches for prime labelings, and the Pillai window search.

``backtracking_search`` and ``brute_force_search`` are independent oracles for
the closed-form schemes: they share only :func:`verify_labeling`, which both
use to double-check anything they report as found.
"""
from __future__ import annotations

import itertools
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import InvalidParameter
from .graph import Graph, Labeling, verify_labeling
from .numtheory import distinct_prime_factors, is_prime, smallest_prime_factors

BRUTE_FORCE_MAX_VERTICES = 10


class Status(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits; both ``None`` means explicitly unbounded."""

    max_nodes: Optional[int] = None
    max_time: Optional[float] = None

    @classmethod
    def unbounded(cls) -> "SearchBudget":
        return cls()

    @property
    def is_unbounded(self) -> bool:
        return self.max_nodes is None and self.max_time is None


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    labeling: Optional[Labeling] = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "labeling": list(self.labeling) if self.labeling is not None else None,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": round(self.elapsed, 6),
            **({"notes": self.notes} if self.notes else {}),
        }


class _BudgetExceeded(Exception):
    pass


def search_order(g: Graph) -> list[int]:
    """Static vertex order: descending degree, ties broken by id."""
    return sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))


def universal_labels(n: int) -> list[int]:
    """Labels in 1..n coprime to every other label: 1 and primes p > n/2.

    Any two of them can be swapped in a prime labeling without breaking it.
    """
    return [x for x in range(1, n + 1) if x == 1 or (2 * x > n and is_prime(x))]


class _Backtracker:
    def __init__(self, g: Graph, budget: SearchBudget, break_symmetry: bool):
        self.n = n = g.vertex_count
        self.order = search_order(g)
        pos = {v: i for i, v in enumerate(self.order)}
        # neighbours already assigned when each position is reached
        self.back = [
            [pos[w] for w in g.adjacency[v] if pos[w] < i] for i, v in enumerate(self.order)
        ]
        self.coprime = [[False] * (n + 1)] + [
            [False] + [math.gcd(a, b) == 1 for b in range(1, n + 1)] for a in range(1, n + 1)
        ]
        self.universal = universal_labels(n) if break_symmetry else []
        self.universal_rank = {x: r for r, x in enumerate(self.universal)}
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_time is None else time.monotonic() + budget.max_time
        self.nodes = 0
        self.assigned = [0] * n
        self.used = [False] * (n + 1)
        self.universal_used = 0

    def _tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def candidates(self, depth: int):
        for lab in range(1, self.n + 1):
            if self.used[lab]:
                continue
            rank = self.universal_rank.get(lab)
            # interchangeable labels are placed in increasing order only
            if rank is not None and rank != self.universal_used:
                continue
            yield lab

    def extend(self, depth: int) -> bool:
        if depth == self.n:
            return True
        back = self.back[depth]
        assigned = self.assigned
        for lab in self.candidates(depth):
            row = self.coprime[lab]
            if all(row[assigned[j]] for j in back):
                self._tick()
                self.assign(depth, lab)
                if self.extend(depth + 1):
                    return True
                self.unassign(depth, lab)
        return False

    def assign(self, depth: int, lab: int):
        self.assigned[depth] = lab
        self.used[lab] = True
        if lab in self.universal_rank:
            self.universal_used += 1

    def unassign(self, depth: int, lab: int):
        self.assigned[depth] = 0
        self.used[lab] = False
        if lab in self.universal_rank:
            self.universal_used -= 1

    def labeling(self) -> Labeling:
        out = [0] * self.n
        for i, v in enumerate(self.order):
            out[v] = self.assigned[i]
        return Labeling(out)

    def run(self, first_label: Optional[int] = None) -> Status:
        try:
            if first_label is None:
                found = self.extend(0)
            else:
                self._tick()
                self.assign(0, first_label)
                found = self.extend(1)
        except _BudgetExceeded:
            return Status.BUDGET_EXCEEDED
        return Status.FOUND if found else Status.EXHAUSTED


def _run_branch(args) -> tuple[Status, Optional[tuple[int, ...]], int]:
    g, budget, break_symmetry, first = args
    bt = _Backtracker(g, budget, break_symmetry)
    status = bt.run(first)
    lab = tuple(bt.labeling()) if status is Status.FOUND else None
    return status, lab, bt.nodes


def _checked(outcome: SearchOutcome, g: Graph) -> SearchOutcome:
    if outcome.labeling is not None and not verify_labeling(g, outcome.labeling).is_prime:
        raise AssertionError("search produced a labeling that fails verification")
    return outcome


def backtracking_search(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    *,
    break_symmetry: bool = False,
    threads: int = 1,
) -> SearchOutcome:
    """Depth-first search over labels in a fixed vertex order.

    A partial assignment is abandoned as soon as two assigned neighbours share
    a factor. ``break_symmetry`` forces interchangeable labels (see
    :func:`universal_labels`) to appear in increasing search order, which is
    sound for both outcomes but changes node counts.

    With ``threads > 1`` the label choices for the first vertex run as separate
    processes; ``max_nodes`` is split evenly between them and every branch runs
    to its own conclusion so the result is deterministic. The lowest-label
    branch that finds a labeling wins.
    """
    budget = budget or SearchBudget.unbounded()
    t0 = time.monotonic()
    limit = sys.getrecursionlimit()
    if g.vertex_count + 100 > limit:
        sys.setrecursionlimit(g.vertex_count + 100)
    try:
        if threads <= 1:
            bt = _Backtracker(g, budget, break_symmetry)
            status = bt.run()
            lab = bt.labeling() if status is Status.FOUND else None
            return _checked(SearchOutcome(status, lab, bt.nodes, time.monotonic() - t0), g)

        probe = _Backtracker(g, SearchBudget.unbounded(), break_symmetry)
        firsts = list(probe.candidates(0))
        per_branch = budget.max_nodes
        if per_branch is not None:
            per_branch = max(1, per_branch // len(firsts))
        branch_budget = SearchBudget(per_branch, budget.max_time)
        jobs = [(g, branch_budget, break_symmetry, f) for f in firsts]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_branch, jobs))
    finally:
        sys.setrecursionlimit(limit)

    nodes = sum(r[2] for r in results)
    notes = {"branches": len(firsts), "max_nodes_per_branch": per_branch}
    status = Status.EXHAUSTED
    lab = None
    for st, found_lab, _ in results:
        if st is Status.FOUND:
            status, lab = st, Labeling(found_lab)
            break
    else:
        if any(st is Status.BUDGET_EXCEEDED for st, _, _ in results):
            status = Status.BUDGET_EXCEEDED
    return _checked(SearchOutcome(status, lab, nodes, time.monotonic() - t0, notes), g)


def brute_force_search(g: Graph) -> SearchOutcome:
    """Try every one of the |V|! bijections, in lexicographic order."""
    n = g.vertex_count
    if n > BRUTE_FORCE_MAX_VERTICES:
        raise InvalidParameter(
            f"brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices, graph has {n}"
        )
    t0 = time.monotonic()
    bad_pairs = {(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if math.gcd(a, b) > 1}
    edges = g.edges
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        count += 1
        for u, v in edges:
            if (perm[u], perm[v]) in bad_pairs:
                break
        else:
            return _checked(
                SearchOutcome(Status.FOUND, Labeling(perm), count, time.monotonic() - t0), g
            )
    return SearchOutcome(Status.EXHAUSTED, None, count, time.monotonic() - t0)


def pillai_witness(k: int, limit: int) -> Optional[int]:
    """Smallest s <= limit such that each of s, ..., s+k-1 shares a factor
    with some other member of the window, or ``None``."""
    if k < 2:
        raise InvalidParameter(f"window length must be >= 2, got {k}")
    if limit < k:
        raise InvalidParameter(f"limit must be >= k, got limit={limit}, k={k}")
    spf = smallest_prime_factors(limit + k)
    # only primes below k can divide two members of a window
    small: list[Optional[list[int]]] = [None] * (limit + k)

    def factors(x: int) -> list[int]:
        f = small[x]
        if f is None:
            f = small[x] = [p for p in distinct_prime_factors(x, spf) if p < k]
        return f

    for s in range(2, limit + 1):
        end = s + k - 1
        for x in range(s, end + 1):
            if not any(x - p >= s or x + p <= end for p in factors(x)):
                break
        else:
            return s
    return None
