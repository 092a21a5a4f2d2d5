"""Undirected simple graphs as dense symmetric 0/1 adjacency matrices.

Node indices are 1-based in every public argument and report, matching the
usual linear-algebra convention for labeled graphs; array storage is the
ordinary 0-based numpy layout.  Graph values are immutable after
construction, so all operations here are pure functions that are safe to
call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Graph:
    """Simple graph on n >= 1 nodes.

    adj is an n x n symmetric integer matrix with entries in {0, 1} and zero
    diagonal.  labels default to "1".."n".
    """

    adj: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        a = np.asarray(self.adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"adjacency must be square and non-empty, got shape {a.shape}")
        a = a.astype(np.int64, copy=True)
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise ValueError("self-loops are not allowed (diagonal must be zero)")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)
        labels = tuple(self.labels) or tuple(str(i + 1) for i in range(a.shape[0]))
        if len(labels) != a.shape[0]:
            raise ValueError("labels length must equal node count")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @property
    def num_links(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with 1-based endpoints, lexicographically sorted."""
        i, j = np.nonzero(np.triu(self.adj))
        return [(int(a) + 1, int(b) + 1) for a, b in zip(i, j)]

    def stats(self) -> "GraphStats":
        d = self.degrees
        return GraphStats(
            num_links=self.num_links,
            degrees=tuple(int(x) for x in d),
            d_min=float(d.min()),
            d_max=float(d.max()),
            d_av=2.0 * self.num_links / self.n,
            connected=connected(self),
        )


@dataclass(frozen=True)
class GraphStats:
    num_links: int
    degrees: tuple[int, ...]
    d_min: float
    d_max: float
    d_av: float
    connected: bool


def _check_node(g: Graph, j: int, name: str = "node") -> int:
    if not isinstance(j, (int, np.integer)):
        raise ValueError(f"{name} index must be an integer, got {j!r}")
    if not 1 <= j <= g.n:
        raise ValueError(f"{name} index {j} out of range 1..{g.n}")
    return int(j) - 1


def delete_node(g: Graph, j: int) -> Graph:
    """Remove node j (1-based) and all incident links; remaining order kept."""
    if g.n == 1:
        raise ValueError("cannot delete the only node (result would be empty)")
    jj = _check_node(g, j)
    keep = [i for i in range(g.n) if i != jj]
    return Graph(g.adj[np.ix_(keep, keep)], tuple(g.labels[i] for i in keep))


def delete_node_pair(g: Graph, j: int, m: int) -> Graph:
    """Remove the two distinct nodes j and m (1-based) with incident links."""
    if j == m:
        raise ValueError("node pair must consist of two distinct nodes")
    if g.n < 3:
        raise ValueError("pair deletion needs at least 3 nodes")
    jj = _check_node(g, j)
    mm = _check_node(g, m)
    keep = [i for i in range(g.n) if i not in (jj, mm)]
    return Graph(g.adj[np.ix_(keep, keep)], tuple(g.labels[i] for i in keep))


def complement(g: Graph) -> Graph:
    """Complement graph: edge present exactly where g has none."""
    c = 1 - g.adj
    np.fill_diagonal(c, 0)
    return Graph(c, g.labels)


def connected(g: Graph) -> bool:
    """True iff the graph has a single connected component (BFS reachability)."""
    n = g.n
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = np.zeros(n, dtype=bool)
    frontier[0] = True
    while frontier.any():
        nxt = (g.adj[frontier].any(axis=0)) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


# ---------------------------------------------------------------------------
# Generators.  The random generator uses SplitMix64 so that fixtures are
# reproducible from the seed alone, independent of numpy's stream evolution.


def _splitmix64(state: int) -> tuple[int, float]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return state, (z >> 11) * 2.0**-53


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    a = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(a, 0)
    return Graph(a)


def star(n: int) -> Graph:
    """Star on n nodes; node 1 is the center."""
    if n < 2:
        raise ValueError("star graph needs n >= 2")
    a = np.zeros((n, n), dtype=np.int64)
    a[0, 1:] = 1
    a[1:, 0] = 1
    return Graph(a)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n - 1)
    a[idx, idx + 1] = 1
    a[idx + 1, idx] = 1
    return Graph(a)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    g = path(n)
    a = np.array(g.adj)
    a[0, n - 1] = a[n - 1, 0] = 1
    return Graph(a)


def complete_bipartite(a_size: int, b_size: int) -> Graph:
    if a_size < 1 or b_size < 1:
        raise ValueError("complete bipartite graph needs both parts non-empty")
    n = a_size + b_size
    a = np.zeros((n, n), dtype=np.int64)
    a[:a_size, a_size:] = 1
    a[a_size:, :a_size] = 1
    return Graph(a)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the n(n-1)/2 edges drawn independently.

    Draws come from a SplitMix64 stream over ordered pairs (i < j), so the
    same (n, p, seed) triple always yields the same adjacency matrix.
    """
    if n < 1:
        raise ValueError("erdos_renyi needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    a = np.zeros((n, n), dtype=np.int64)
    state = int(seed) & _MASK64
    for i in range(n):
        for j in range(i + 1, n):
            state, u = _splitmix64(state)
            if u < p:
                a[i, j] = a[j, i] = 1
    return Graph(a)


def generate(kind: str, params: Sequence[float], seed: int = 0) -> Graph:
    """Dispatch generator by name; params are positional sizes (and p for ER)."""
    kinds = {
        "complete": lambda: complete(int(params[0])),
        "star": lambda: star(int(params[0])),
        "path": lambda: path(int(params[0])),
        "cycle": lambda: cycle(int(params[0])),
        "complete_bipartite": lambda: complete_bipartite(int(params[0]), int(params[1])),
        "erdos_renyi": lambda: erdos_renyi(int(params[0]), float(params[1]), seed),
    }
    if kind not in kinds:
        raise ValueError(f"unknown graph kind {kind!r}; choose from {sorted(kinds)}")
    try:
        return kinds[kind]()
    except IndexError:
        raise ValueError(f"missing parameters for graph kind {kind!r}") from None


# ---------------------------------------------------------------------------
# Parsing and serialization.
#
# edge_list format: one "i j" pair per line, whitespace separated, 1-based;
# '#' starts a comment.  adjacency_matrix format: n lines of n space
# separated 0/1 integers.


def parse_graph(text: str | bytes, format: str = "edge_list") -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "edge_list":
        return _parse_edge_list(text)
    if format == "adjacency_matrix":
        return _parse_adjacency(text)
    raise ValueError(f"unknown graph format {format!r}")


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"line {lineno}: non-integer token {tok!r}") from None


def _parse_edge_list(text: str) -> Graph:
    edges: set[tuple[int, int]] = set()
    max_node = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"line {lineno}: expected two node indices, got {len(toks)} tokens")
        i, j = (_int_token(t, lineno) for t in toks)
        if i < 1 or j < 1:
            raise ValueError(f"line {lineno}: node indices are 1-based, got {min(i, j)}")
        if i == j:
            raise ValueError(f"line {lineno}: self-loop {i}-{j} not allowed")
        edges.add((min(i, j), max(i, j)))
        max_node = max(max_node, i, j)
    if max_node == 0:
        raise ValueError("edge list is empty; at least one edge or node required")
    a = np.zeros((max_node, max_node), dtype=np.int64)
    for i, j in edges:
        a[i - 1, j - 1] = a[j - 1, i - 1] = 1
    return Graph(a)


def _parse_adjacency(text: str) -> Graph:
    rows = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ValueError("adjacency matrix input is empty")
    n = len(lines[0][1].split())
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != n:
            raise ValueError(f"line {lineno}: expected {n} entries, got {len(toks)}")
        row = [_int_token(t, lineno) for t in toks]
        for v in row:
            if v not in (0, 1):
                raise ValueError(f"line {lineno}: adjacency entries must be 0 or 1, got {v}")
        rows.append(row)
    if len(rows) != n:
        raise ValueError(f"adjacency matrix must be square: {n} columns but {len(rows)} rows")
    a = np.array(rows, dtype=np.int64)
    if np.any(np.diag(a) != 0):
        k = int(np.nonzero(np.diag(a))[0][0])
        raise ValueError(f"line {lines[k][0]}: self-loop at node {k + 1} (non-zero diagonal)")
    if not np.array_equal(a, a.T):
        i, j = np.argwhere(a != a.T)[0]
        raise ValueError(f"adjacency matrix not symmetric at ({i + 1}, {j + 1})")
    return Graph(a)


def to_edge_list_text(g: Graph) -> str:
    return "".join(f"{i} {j}\n" for i, j in g.edges())


def to_adjacency_text(g: Graph) -> str:
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in g.adj)
