"""Simple undirected graphs, trees, Laplacians and canonical tree codes."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from math import prod

from .errors import Disconnected, InvalidEdge, NoSuchEdge, NotATree, ParseError, ZeroDegree


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple graph on the vertices ``0..n-1``.

    Instances are immutable; the surgery helpers return new graphs.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InvalidEdge(f"vertex count must be a nonnegative integer, got {n!r}")
        seen = set()
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidEdge(f"self-loop at {u}")
            e = _norm_edge(u, v)
            if e in seen:
                raise InvalidEdge(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(seen)
        self._adj = tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def without_vertices(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Delete vertices and relabel the rest densely, preserving order.

        Returns the new graph and the old-to-new label map.
        """
        gone = set(vertices)
        keep = [w for w in range(self.n) if w not in gone]
        relabel = {w: i for i, w in enumerate(keep)}
        edges = [
            (relabel[a], relabel[b]) for a, b in self.edges if a not in gone and b not in gone
        ]
        return Graph(len(keep), edges), relabel

    def without_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        if e not in self.edges:
            raise NoSuchEdge(f"no edge {e}")
        return Graph(self.n, self.edges - {e})

    def with_pendants(self, at: int, count: int) -> "Graph":
        """Append ``count`` new leaves adjacent to vertex ``at``."""
        new = [(at, self.n + i) for i in range(count)]
        return type(self)(self.n + count, list(self.edges) + new)

    def relabeled(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        return type(self)(self.n, [(perm[a], perm[b]) for a, b in self.edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.sorted_edges()})"


class Tree(Graph):
    """A connected graph with ``n - 1`` edges, validated on construction."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        super().__init__(n, edges)
        if n == 0:
            raise NotATree("a tree needs at least one vertex")
        if len(self.edges) != n - 1 or not self.is_connected():
            raise NotATree(f"graph with n={n} and {len(self.edges)} edges is not a tree")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        return cls(g.n, g.edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    if n < 0:
        raise ParseError("vertex count must be nonnegative")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer vertex in {line!r}") from exc
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [str(g.n)]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def as_tree(g: Graph) -> Tree:
    return g if isinstance(g, Tree) else Tree.from_graph(g)


def degrees(g: Graph) -> list[int]:
    return [g.degree(v) for v in range(g.n)]


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def diameter(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if len(dist) != g.n:
            raise Disconnected("diameter is undefined for a disconnected graph")
        best = max(best, max(dist.values()))
    return best


def shortest_path(g: Graph, a: int, b: int) -> list[int]:
    parent = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in sorted(g.neighbors(x)):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if b not in parent:
        raise Disconnected(f"no path from {a} to {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def diametral_path(t: Graph) -> list[int]:
    """A longest shortest path, found by the double BFS sweep (trees only)."""
    d0 = bfs_distances(t, 0)
    a = max(sorted(d0), key=d0.__getitem__)
    da = bfs_distances(t, a)
    b = max(sorted(da), key=da.__getitem__)
    return shortest_path(t, a, b)


def product_of_degrees(g: Graph) -> int:
    degs = degrees(g)
    if any(d == 0 for d in degs):
        raise ZeroDegree("product of degrees is zero; the ratio is undefined")
    return prod(degs)


class LaplacianMatrix:
    """Laplacian ``D - A`` of a graph with an optional set of struck indices.

    ``rows()`` returns the principal submatrix that remains after striking.
    """

    __slots__ = ("entries", "struck")

    def __init__(self, entries, struck: Iterable[int] = ()):
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        self.struck = frozenset(struck)

    @property
    def full_order(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        return len(self.entries) - len(self.struck)

    @property
    def indices(self) -> list[int]:
        return [i for i in range(self.full_order) if i not in self.struck]

    def rows(self) -> list[list[int]]:
        idx = self.indices
        return [[self.entries[i][j] for j in idx] for i in idx]

    def __eq__(self, other):
        if isinstance(other, LaplacianMatrix):
            return self.rows() == other.rows()
        return self.rows() == [list(r) for r in other]

    def __repr__(self):
        return f"LaplacianMatrix({self.rows()})"


def laplacian(g: Graph) -> LaplacianMatrix:
    m = [[0] * g.n for _ in range(g.n)]
    for v in range(g.n):
        m[v][v] = g.degree(v)
    for u, v in g.edges:
        m[u][v] = m[v][u] = -1
    return LaplacianMatrix(m)


def strike(m: LaplacianMatrix, vertices: Iterable[int]) -> LaplacianMatrix:
    vs = set(vertices)
    for v in vs:
        if not 0 <= v < m.full_order:
            raise IndexError(f"index {v} out of range for order {m.full_order}")
        if v in m.struck:
            raise IndexError(f"index {v} is already struck")
    return LaplacianMatrix(m.entries, m.struck | vs)


def principal_laplacian(g: Graph, struck: Iterable[int] = ()) -> list[list[int]]:
    """Rows of ``L_S(g)``: the Laplacian with the vertex set ``struck`` removed."""
    gone = set(struck)
    idx = [i for i in range(g.n) if i not in gone]
    pos = {v: i for i, v in enumerate(idx)}
    m = [[0] * len(idx) for _ in idx]
    for v in idx:
        m[pos[v]][pos[v]] = g.degree(v)
    for u, v in g.edges:
        if u in pos and v in pos:
            m[pos[u]][pos[v]] = m[pos[v]][pos[u]] = -1
    return m


def centers(t: Graph) -> list[int]:
    """The one or two central vertices of a tree, by repeated leaf stripping."""
    return _centers([t.neighbors(v) for v in range(t.n)])


def _centers(adj) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _level_sequence(adj, root: int) -> tuple[int, ...]:
    parent = {root: None}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    seqs: dict[int, tuple[int, ...]] = {}
    for x in reversed(order):
        kids = sorted((seqs.pop(y) for y in adj[x] if parent[y] == x), reverse=True)
        seq = [0]
        for k in kids:
            seq.extend(d + 1 for d in k)
        seqs[x] = tuple(seq)
    return seqs[root]


def rooted_level_sequence(t: Graph, root: int) -> tuple[int, ...]:
    """Canonical (lexicographically largest) preorder depth sequence of ``t`` rooted at ``root``."""
    return _level_sequence([t.neighbors(v) for v in range(t.n)], root)


def tree_code_from_adjacency(adj) -> bytes:
    """:func:`canonical_code` for a tree given as adjacency lists (no validation)."""
    if not adj:
        return b""
    return bytes(max(_level_sequence(adj, c) for c in _centers(adj)))


def canonical_code(t: Graph) -> bytes:
    """Isomorphism-complete code for a tree: center-rooted canonical level sequence.

    Two trees get the same code exactly when they are isomorphic.  For a
    bicentral tree the larger of the two center-rooted sequences is used.
    """
    return tree_code_from_adjacency([t.neighbors(v) for v in range(t.n)])


def code_hex(t: Graph) -> str:
    return canonical_code(t).hex()
