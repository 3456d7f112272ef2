import json
import math
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# (criterion id, passed, detail) collected by the acceptance module
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def scan_is_prime(graph, labeling) -> bool:
    """Pairwise re-check that does not touch verify_labeling."""
    labels = list(labeling)
    if sorted(labels) != list(range(1, graph.vertex_count + 1)):
        return False
    return all(math.gcd(labels[u], labels[v]) == 1 for u, v in graph.edges)


def label_edges(graph, labeling) -> set[tuple[int, int]]:
    return {tuple(sorted((labeling[u], labeling[v]))) for u, v in graph.edges}


@pytest.fixture(scope="session")
def reference_labelings():
    return json.loads((DATA / "reference_labelings.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{cid}: {'PASS' if ok else 'FAIL'}  {detail}")
