"""Laplacian permanents of trees through weighted matching counts.

For a tree ``T`` and a ``k``-matching ``mu`` write ``w(mu)`` for the product
of the degrees (taken in ``T``) of the vertices that ``mu`` leaves
uncovered.  Then ``n_k = sum w(mu)`` over ``k``-matchings,
``pi_k = n_k / PD(T)`` and ``per L(T) = sum_k n_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from .errors import NotATree, ZeroDegree
from .graph import Graph, Tree, as_tree, degrees, product_of_degrees


def _add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = p[:]
    for i, x in enumerate(q):
        out[i] += x
    return out


def _mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _scale(p: list[int], c: int) -> list[int]:
    return [c * x for x in p]


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


@dataclass(frozen=True)
class MatchingWeights:
    """``n[k]`` is the weighted count of ``k``-matchings; ``pd`` is ``PD(T)``."""

    n: tuple[int, ...]
    pd: int

    @property
    def pi(self) -> tuple[Fraction, ...]:
        if self.pd == 0:
            raise ZeroDegree("PD(T) is zero for a single vertex")
        return tuple(Fraction(x, self.pd) for x in self.n)

    @property
    def permanent(self) -> int:
        return sum(self.n)


def matching_weights(t: Graph, root: int = 0) -> MatchingWeights:
    """Weighted matching counts by a rooted DP over the tree.

    Per vertex ``x`` two polynomials in ``k`` are kept: ``free[x]`` for
    matchings of the subtree leaving ``x`` uncovered (``x``'s own degree not
    yet multiplied in) and ``used[x]`` for matchings covering ``x`` with a
    child edge.  Children are merged one at a time.
    """
    t = as_tree(t)
    deg = degrees(t)
    parent = {root: None}
    order = [root]
    for x in order:
        for y in t.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    free: dict[int, list[int]] = {}
    used: dict[int, list[int]] = {}
    for x in reversed(order):
        f, u = [1], [0]
        for c in t.neighbors(x):
            if parent[c] != x:
                continue
            fc, uc = free.pop(c), used.pop(c)
            total_c = _add(_scale(fc, deg[c]), uc)
            u = _add(_mul(u, total_c), [0] + _mul(f, fc))
            f = _mul(f, total_c)
        free[x], used[x] = f, u
    result = _trim(_add(_scale(free[root], deg[root]), used[root]))
    return MatchingWeights(tuple(result), prod(deg))


def matching_weights_bruteforce(g: Graph) -> MatchingWeights:
    """Enumerate every matching explicitly; an oracle for small graphs."""
    deg = degrees(g)
    edges = g.sorted_edges()
    counts = [0] * (g.n // 2 + 1)
    for k in range(len(counts)):
        for mu in combinations(edges, k):
            covered = {x for e in mu for x in e}
            if len(covered) != 2 * k:
                continue
            counts[k] += prod(deg[v] for v in range(g.n) if v not in covered)
    return MatchingWeights(tuple(_trim(counts)), prod(deg))


def tree_permanent(t: Graph) -> int:
    return matching_weights(t).permanent


def laplacian_ratio(t: Graph) -> Fraction:
    if t.n < 2:
        raise ZeroDegree("the Laplacian ratio needs at least two vertices")
    return Fraction(tree_permanent(t), product_of_degrees(t))


def matching_number(t: Graph) -> int:
    """Maximum matching size, by greedily matching leaves to their parents."""
    t = as_tree(t)
    parent = {0: None}
    order = [0]
    for x in order:
        for y in t.neighbors(x):
            if y not in parent:
                parent[y] = x
                order.append(y)
    covered = set()
    size = 0
    for x in reversed(order):
        p = parent[x]
        if p is not None and x not in covered and p not in covered:
            covered.update((x, p))
            size += 1
    return size


def graph_ratio(g: Graph, cap: int | None = None) -> tuple[int, int, Fraction]:
    """``(per L, PD, pi)`` for any graph; trees use the DP, others use Ryser."""
    from .graph import laplacian
    from .permanent import permanent_ryser

    pd = product_of_degrees(g)
    try:
        per = tree_permanent(Tree.from_graph(g))
    except NotATree:
        per = permanent_ryser(laplacian(g), cap)
    return per, pd, Fraction(per, pd)
