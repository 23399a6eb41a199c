"""Graph representation, degeneracy peeling, S_{n,k} constructors and codecs.

Graphs are simple and undirected with at most 64 vertices.  Each vertex
neighbourhood is stored as a Python int used as a bitset, so a graph is a
tuple of ``n`` machine-word sized integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64
CANONICAL_MAX_N = 8
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, sizes)."""


class Graph6Error(ValueError):
    """Raised when a graph6 line cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbours beyond n-1")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def with_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation of the vertex set")
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def to_numpy(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def upper_mask(self) -> int:
        """Upper-triangle bits in graph6 order, pair ``(i, j)`` at bit ``j(j-1)/2 + i``."""
        mask = 0
        for j in range(1, self.n):
            row = self.adj[j] & ((1 << j) - 1)
            mask |= row << (j * (j - 1) // 2)
        return mask


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def pair_index(i: int, j: int) -> int:
    """Position of pair ``(i, j)``, ``i < j``, in graph6 column order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pairs(n: int) -> list[tuple[int, int]]:
    """All vertex pairs ``(i, j)``, ``i < j``, in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_mask(n: int, mask: int) -> Graph:
    """Inverse of :meth:`Graph.upper_mask`."""
    adj = [0] * n
    for j in range(1, n):
        row = mask >> (j * (j - 1) // 2) & ((1 << j) - 1)
        adj[j] |= row
        for i in _bits(row):
            adj[i] |= 1 << j
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return from_edge_list(offset, edges)


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    m: int
    delta: int
    Delta: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if sum(self.degrees) != 2 * self.m:
            raise ValueError("degree sum must equal 2m")
        if self.degrees and (min(self.degrees) != self.delta or max(self.degrees) != self.Delta):
            raise ValueError("delta/Delta disagree with the degree sequence")
        if not 0 <= self.delta <= self.Delta <= max(self.n - 1, 0):
            raise ValueError("need 0 <= delta <= Delta <= n-1")

    @classmethod
    def from_params(cls, n: int, m: int, delta: int, Delta: int) -> DegreeProfile:
        """Profile without a concrete degree sequence (bounds only use n, m, delta, Delta)."""
        # A bidegreed stand-in keeps the invariants checkable.
        degs = _realize_degree_sum(n, m, delta, Delta)
        return cls(n, m, delta, Delta, degs)


def _realize_degree_sum(n: int, m: int, delta: int, Delta: int) -> tuple[int, ...]:
    if n == 1:
        if m or delta or Delta:
            raise ValueError("a single vertex has no edges")
        return (0,)
    total = 2 * m
    rest = total - delta - Delta
    slots = n - 2
    if slots < 0 or rest < slots * delta or rest > slots * Delta:
        raise ValueError(f"no degree sequence with n={n}, m={m}, delta={delta}, Delta={Delta}")
    degs = [delta, Delta]
    for i in range(slots):
        d = min(Delta, rest - (slots - i - 1) * delta)
        degs.append(d)
        rest -= d
    return tuple(sorted(degs))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    return DegreeProfile(g.n, sum(degs) // 2, min(degs), max(degs), tuple(degs))


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Min-degree removal order.

    ``order[0]`` is the first vertex removed (``v_n`` in the usual numbering);
    ``back_degrees[v]`` counts neighbours of ``v`` removed after it, i.e. its
    preceding neighbours once the order is reversed.
    """

    order: tuple[int, ...]
    degeneracy: int
    back_degrees: tuple[int, ...]


def degeneracy_ordering(g: Graph) -> DegeneracyOrdering:
    alive = (1 << g.n) - 1
    deg = g.degrees()
    order = []
    back = [0] * g.n
    degeneracy = 0
    for _ in range(g.n):
        # lowest index wins ties
        v = min(_bits(alive), key=lambda u: deg[u])
        order.append(v)
        back[v] = deg[v]
        degeneracy = max(degeneracy, deg[v])
        alive &= ~(1 << v)
        for u in _bits(g.adj[v] & alive):
            deg[u] -= 1
    return DegeneracyOrdering(tuple(order), degeneracy, tuple(back))


def degeneracy(g: Graph) -> int:
    return degeneracy_ordering(g).degeneracy


def is_k_degenerate(g: Graph, k: int) -> bool:
    return degeneracy(g) <= k


def make_snk(n: int, k: int) -> Graph:
    """Join of a clique on ``0..k-1`` with an independent set on ``k..n-1``."""
    if not 1 <= k <= n:
        raise GraphError(f"S_(n,k) needs 1 <= k <= n, got n={n}, k={k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    return from_edge_list(n, edges)


def max_degenerate_edges(n: int, k: int) -> int:
    """Largest edge count of a k-degenerate graph on n vertices: kn - (k^2+k)/2."""
    if k < 0 or n < k:
        raise ValueError(f"need n >= k >= 0, got n={n}, k={k}")
    return k * n - (k * k + k) // 2


def complete_to_maximal(g: Graph, k: int) -> Graph:
    """Greedily add non-edges in lexicographic order while staying k-degenerate.

    One pass suffices: degeneracy never drops when edges are added, so a
    rejected pair stays rejected.
    """
    if not is_k_degenerate(g, k):
        raise GraphError(f"input graph is not {k}-degenerate")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                h = g.with_edge(u, v)
                if is_k_degenerate(h, k):
                    g = h
    return g


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex blocks sorted by their smallest vertex."""
    seen = 0
    blocks = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        blocks.append(list(_bits(comp)))
    return blocks


def _refined_classes(g: Graph) -> list[list[int]]:
    """Vertex classes keyed by (degree, sorted neighbour degrees), in key order."""
    deg = g.degrees()
    keys = [(deg[v], tuple(sorted(deg[u] for u in _bits(g.adj[v])))) for v in range(g.n)]
    classes: dict[tuple, list[int]] = {}
    for v in sorted(range(g.n), key=lambda v: keys[v]):
        classes.setdefault(keys[v], []).append(v)
    return [classes[key] for key in sorted(classes)]


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string.

    The minimum upper-triangle bit string over every labelling that lists the
    refined degree classes in a fixed order.  Since the classes are an
    isomorphism invariant, isomorphic graphs search the same candidate set.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form brute force is limited to n <= {CANONICAL_MAX_N}")
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return bytes([n])
    a = g.to_numpy(dtype=np.int64)
    classes = _refined_classes(g)
    # each candidate lists vertices position by position
    perms = np.array(
        [sum(choice, ()) for choice in itertools.product(*(itertools.permutations(c) for c in classes))],
        dtype=np.int64,
    )
    ii = np.array([i for i, _ in pairs(n)])
    jj = np.array([j for _, j in pairs(n)])
    bits = a[perms[:, ii], perms[:, jj]]
    # first pair is the most significant bit
    weights = np.left_shift(np.int64(1), np.arange(npairs - 1, -1, -1, dtype=np.int64))
    best = int((bits * weights).sum(axis=1).min())
    return bytes([n]) + best.to_bytes((npairs + 7) // 8, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# -- graph6 -----------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 single-byte header supports n <= {GRAPH6_MAX_N}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} at position {pos} is outside [63, 126]")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("multi-byte size headers (n > 62) are not supported")
    if n < 1:
        raise Graph6Error("graph6 size byte encodes n = 0")
    npairs = n * (n - 1) // 2
    want = 1 + (npairs + 5) // 6
    if len(s) != want:
        raise Graph6Error(f"expected {want} characters for n={n}, got {len(s)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = ord(s[1 + k // 6]) - 63
            if c >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# -- edge-list text ---------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; errors carry line numbers."""
    rows = [(no, line.split()) for no, line in enumerate(text.splitlines(), 1)]
    rows = [(no, toks) for no, toks in rows if toks]
    if not rows:
        raise GraphError("line 1: empty edge list")
    no, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphError(f"line {no}: expected header 'n m'") from None
    if len(rows) - 1 != m:
        raise GraphError(f"line {no}: header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for no, toks in rows[1:]:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphError(f"line {no}: expected 'u v'") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {no}: invalid edge ({u}, {v}) for n={n}")
        edges.append((u, v))
    return from_edge_list(n, edges)
