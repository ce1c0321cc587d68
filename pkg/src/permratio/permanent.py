"""Exact permanents and the Laplacian expansion identities built on them.

Each ``expand_*``/``pendant_reduction``/``edge_deletion`` function evaluates
the right-hand side of an identity for ``per L(G)`` (or a principal
submatrix of it) using independent Ryser evaluations of the pieces.  The
caller compares the result with a direct permanent.
"""

from __future__ import annotations

import os
from collections.abc import Iterable
from math import prod

from .errors import NoSuchEdge, NotPendant, TooLarge
from .graph import Graph, LaplacianMatrix, laplacian, principal_laplacian

DEFAULT_CAP = 20
NAIVE_CAP = 9


def default_cap() -> int:
    """Order cap for Ryser, overridable through ``PERMRATIO_CAP``."""
    raw = os.environ.get("PERMRATIO_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_CAP


def _rows(m) -> list[list[int]]:
    if isinstance(m, LaplacianMatrix):
        return m.rows()
    rows = [list(r) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def permanent_ryser(m, cap: int | None = None) -> int:
    """Ryser's inclusion-exclusion formula with Gray-code subset order.

    Row sums over the current column subset are updated by one column per
    step, so each of the ``2**n`` subsets costs ``O(n)``.
    """
    a = _rows(m)
    n = len(a)
    if cap is None:
        cap = default_cap()
    if n > cap:
        raise TooLarge(f"order {n} exceeds the Ryser cap {cap}")
    if n == 0:
        return 1
    cols = [[a[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    in_set = [False] * n
    size = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        col = cols[j]
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i in range(n):
                sums[i] -= col[i]
        else:
            in_set[j] = True
            size += 1
            for i in range(n):
                sums[i] += col[i]
        p = prod(sums)
        if p:
            total += -p if size & 1 else p
    return -total if n & 1 else total


def permanent_naive(m, cap: int = NAIVE_CAP) -> int:
    """Sum over all permutations of the product of selected entries.

    Permutations hitting a zero entry are skipped row by row; every
    permutation with a nonzero product is still visited exactly once.
    """
    a = _rows(m)
    n = len(a)
    if n > cap:
        raise TooLarge(f"order {n} exceeds the naive cap {cap}")
    nonzero = [[(j, x) for j, x in enumerate(row) if x] for row in a]

    def rec(i: int, used: int) -> int:
        if i == n:
            return 1
        s = 0
        for j, x in nonzero[i]:
            if not used >> j & 1:
                s += x * rec(i + 1, used | 1 << j)
        return s

    return rec(0, 0)


def permanent(m, cap: int | None = None) -> int:
    return permanent_ryser(m, cap)


def _minor(a: list[list[int]], i: int, j: int) -> list[list[int]]:
    return [row[:j] + row[j + 1 :] for k, row in enumerate(a) if k != i]


def laplacian_expansion_row(m, i: int, cap: int | None = None) -> int:
    """Expansion of the permanent along row ``i``: sum of ``a_ij * per(A_ij)``."""
    a = _rows(m)
    if not 0 <= i < len(a):
        raise IndexError(f"row {i} out of range for order {len(a)}")
    return sum(x * permanent_ryser(_minor(a, i, j), cap) for j, x in enumerate(a[i]) if x)


def laplacian_expansion_column(m, j: int, cap: int | None = None) -> int:
    a = _rows(m)
    if not 0 <= j < len(a):
        raise IndexError(f"column {j} out of range for order {len(a)}")
    return sum(a[i][j] * permanent_ryser(_minor(a, i, j), cap) for i in range(len(a)) if a[i][j])


def cycles_through_vertex(g: Graph, v: int, avoid: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """All simple cycles of length >= 3 through ``v``, each listed once.

    A cycle is returned as a vertex tuple starting at ``v`` whose second
    vertex is smaller than its last, which fixes rotation and direction.
    Vertices in ``avoid`` are never used.
    """
    banned = set(avoid)
    if v in banned:
        return []
    found = []
    path = [v]
    on_path = {v}

    def dfs(x: int) -> None:
        for y in sorted(g.neighbors(x)):
            if y == v and len(path) >= 3 and path[1] < path[-1]:
                found.append(tuple(path))
            elif y not in on_path and y not in banned:
                path.append(y)
                on_path.add(y)
                dfs(y)
                path.pop()
                on_path.discard(y)

    dfs(v)
    return sorted(found)


def cycles_through_edge(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """Simple cycles containing the edge ``uv``."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    return [c for c in cycles_through_vertex(g, u) if c[1] == v or c[-1] == v]


def _cycle_terms(g: Graph, cycles, extra_struck=(), cap=None) -> int:
    total = 0
    for c in cycles:
        sign = -1 if len(c) % 2 else 1
        total += sign * permanent_ryser(principal_laplacian(g, set(c) | set(extra_struck)), cap)
    return 2 * total


def expand_vertex(g: Graph, v: int, cap: int | None = None) -> int:
    """Vertex expansion of ``per L(G)`` at ``v``, including the cycle terms."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    total = g.degree(v) * permanent_ryser(principal_laplacian(g, {v}), cap)
    for u in sorted(g.neighbors(v)):
        total += permanent_ryser(principal_laplacian(g, {u, v}), cap)
    total += _cycle_terms(g, cycles_through_vertex(g, v), cap=cap)
    return total


def pendant_reduction(g: Graph, v: int, cap: int | None = None) -> int:
    """``per L(G-v) + 2 per L_u(G-v)`` for a pendant vertex ``v`` with neighbour ``u``.

    Both Laplacians are those of ``G - v``, so ``u`` has lost a degree.
    """
    if not 0 <= v < g.n or g.degree(v) != 1:
        raise NotPendant(f"vertex {v} is not a pendant vertex")
    (u,) = g.neighbors(v)
    h, relabel = g.without_vertices([v])
    return permanent_ryser(laplacian(h), cap) + 2 * permanent_ryser(
        principal_laplacian(h, {relabel[u]}), cap
    )


def expand_submatrix(g: Graph, struck: Iterable[int], v: int, cap: int | None = None) -> int:
    """Expansion of ``per L_S(G)`` at an unstruck vertex ``v``.

    Degrees are those of ``G``; only neighbours and cycles avoiding ``S``
    contribute.
    """
    s = set(struck)
    for x in s | {v}:
        if not 0 <= x < g.n:
            raise IndexError(f"vertex {x} out of range")
    if v in s:
        raise IndexError(f"vertex {v} is already struck")
    total = g.degree(v) * permanent_ryser(principal_laplacian(g, s | {v}), cap)
    for u in sorted(g.neighbors(v)):
        if u not in s:
            total += permanent_ryser(principal_laplacian(g, s | {u, v}), cap)
    total += _cycle_terms(g, cycles_through_vertex(g, v, avoid=s), extra_struck=s, cap=cap)
    return total


def edge_deletion(g: Graph, e: tuple[int, int], cap: int | None = None) -> int:
    """Edge-deletion identity for ``per L(G)`` across the edge ``e = uv``.

    ``G - e`` keeps every vertex; the ``L_{uv}`` term and the cycle terms
    use the Laplacian of ``G`` itself.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    h = g.without_edge(u, v)
    total = permanent_ryser(laplacian(h), cap)
    total += permanent_ryser(principal_laplacian(h, {v}), cap)
    total += permanent_ryser(principal_laplacian(h, {u}), cap)
    total += 2 * permanent_ryser(principal_laplacian(g, {u, v}), cap)
    total += _cycle_terms(g, cycles_through_edge(g, u, v), cap=cap)
    return total


def block_diagonal(*blocks) -> list[list[int]]:
    rows = [_rows(b) for b in blocks]
    n = sum(len(b) for b in rows)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in rows:
        for i, row in enumerate(b):
            out[off + i][off : off + len(row)] = row
        off += len(b)
    return out


def parse_matrix(text: str) -> list[list[int]]:
    """Test fixture format: one row per line, space-separated integers."""
    rows = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows
