import itertools

import numpy as np
import pytest

from qindex.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_mask,
    make_snk,
    path_graph,
    star_graph,
)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def all_graphs(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_mask(n, mask)


def brute_degeneracy(g):
    """max over nonempty vertex subsets S of the min degree inside G[S]."""
    best = 0
    for s in range(1, 1 << g.n):
        low = min((g.adj[v] & s).bit_count() for v in range(g.n) if s >> v & 1)
        best = max(best, low)
    return best


def dense_spectrum(m):
    return np.linalg.eigvalsh(np.asarray(m, dtype=float))


@pytest.fixture(scope="session")
def zoo():
    """Named small graphs used across modules."""
    return {
        "K1": empty_graph(1),
        "K2": complete_graph(2),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "C7": cycle_graph(7),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K13": star_graph(4),
        "K14": star_graph(5),
        "S42": make_snk(4, 2),
        "S52": make_snk(5, 2),
        "S62": make_snk(6, 2),
        "S73": make_snk(7, 3),
        "E4": empty_graph(4),
        "K3+K3": disjoint_union(complete_graph(3), complete_graph(3)),
        "K3+K1": disjoint_union(complete_graph(3), empty_graph(1)),
        "K13+K2": disjoint_union(star_graph(4), complete_graph(2)),
        "C4+K1": disjoint_union(cycle_graph(4), empty_graph(1)),
        "K3+P3": disjoint_union(complete_graph(3), path_graph(3)),
    }


def circulant(n, steps):
    return from_edge_list(n, sorted({tuple(sorted((v, (v + s) % n))) for v in range(n) for s in steps}))


def circulants(max_n=8):
    for n in range(3, max_n + 1):
        for r in range(1, n // 2 + 1):
            for steps in itertools.combinations(range(1, n // 2 + 1), r):
                yield circulant(n, steps)
