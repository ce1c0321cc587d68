"""Tree surgeries that are claimed not to increase the Laplacian ratio.

* :func:`split_at_edge` / :func:`to_pendant_star`: cut ``G1`` at an edge
  ``uv`` into ``H`` (holding ``u``) and ``T_r`` (holding ``v``, ``r``
  vertices), then replace ``T_r`` by ``r`` pendant vertices on ``u``.
* :func:`move_pendants`: pendants split between two degree-2 vertices
  versus all of them on one.
* :func:`caterpillarize`: flatten every branch hanging off a diametral
  path into pendants at its attachment vertex.

Vertex labels are preserved wherever the vertex survives, so outputs can
be compared with inputs directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeMismatch, InvalidSpec, NoSuchEdge, NotAPath, NotDiametral
from .graph import Graph, Tree, as_tree, degrees, diameter
from .treedp import laplacian_ratio


@dataclass(frozen=True)
class SplitDecomposition:
    """``g1`` cut at the edge ``(u, v)``.

    ``h_vertices`` and ``t_vertices`` list the ``g1`` labels of each side;
    ``h`` and ``t_r`` are the components relabeled densely in that order.
    """

    g1: Tree
    u: int
    v: int
    h: Tree
    t_r: Tree
    h_vertices: tuple[int, ...]
    t_vertices: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.t_vertices)

    @property
    def u_in_h(self) -> int:
        return self.h_vertices.index(self.u)

    @property
    def v_in_t(self) -> int:
        return self.t_vertices.index(self.v)


def _component(g: Graph, start: int, blocked: tuple[int, int]) -> list[int]:
    a, b = blocked
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if {x, y} == {a, b} or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    return sorted(seen)


def _induced(g: Graph, vertices: list[int]) -> Tree:
    pos = {w: i for i, w in enumerate(vertices)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos]
    return Tree(len(vertices), edges)


def split_at_edge(g1: Graph, u: int, v: int) -> SplitDecomposition:
    g1 = as_tree(g1)
    if not g1.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    hv = _component(g1, u, (u, v))
    tv = _component(g1, v, (u, v))
    return SplitDecomposition(g1, u, v, _induced(g1, hv), _induced(g1, tv), tuple(hv), tuple(tv))


def to_pendant_star(d: SplitDecomposition) -> Tree:
    """``G2``: keep ``H``, and hang the ``r`` vertices of ``T_r`` directly on ``u``."""
    hset = set(d.h_vertices)
    edges = [(a, b) for a, b in d.g1.edges if a in hset and b in hset]
    edges += [(d.u, w) for w in d.t_vertices]
    return Tree(d.g1.n, edges)


@dataclass(frozen=True)
class PsiTheta:
    psi: Fraction
    theta: Fraction


def psi_theta(d: SplitDecomposition) -> PsiTheta:
    """Reciprocal edge-degree sums over the moved part, before and after.

    ``psi`` runs over ``uv`` and the edges of ``T_r`` with degrees in
    ``G1``; ``theta`` runs over the ``r`` new pendant edges of ``G2``.
    """
    deg = degrees(d.g1)
    tset = set(d.t_vertices)
    moved = [(d.u, d.v)] + [(a, b) for a, b in d.g1.edges if a in tset and b in tset]
    psi = sum((Fraction(1, deg[a] * deg[b]) for a, b in moved), Fraction(0))
    theta = Fraction(d.r, deg[d.u] + d.r - 1)
    return PsiTheta(psi, theta)


def star_psi_theta(d_u: int, r: int) -> PsiTheta:
    """Closed forms when ``T_r`` is a star centred at ``v``."""
    return PsiTheta(Fraction(1, d_u * r) + Fraction(r - 1, r), Fraction(r, d_u + r - 1))


@dataclass(frozen=True)
class SplitCheck:
    decomposition: SplitDecomposition
    g2: Tree
    pi_g1: Fraction
    pi_g2: Fraction
    psi: Fraction
    theta: Fraction

    @property
    def verdict(self) -> bool:
        return self.pi_g1 >= self.pi_g2


def check_lemma28(g1: Graph, u: int, v: int) -> SplitCheck:
    """Compare ``pi(G1)`` with ``pi(G2)`` for the split of ``g1`` at ``(u, v)``."""
    d = split_at_edge(g1, u, v)
    g2 = to_pendant_star(d)
    pt = psi_theta(d)
    return SplitCheck(d, g2, laplacian_ratio(d.g1), laplacian_ratio(g2), pt.psi, pt.theta)


@dataclass(frozen=True)
class PendantMove:
    t: Tree
    t1: Tree
    t2: Tree
    pi_t: Fraction
    pi_t1: Fraction
    pi_t2: Fraction

    @property
    def verdict(self) -> bool:
        return self.pi_t > min(self.pi_t1, self.pi_t2)


def move_pendants(base: Graph, u: int, v: int, s: int, t: int) -> PendantMove:
    """Build ``T`` (``s`` leaves on ``u``, ``t`` on ``v``), ``T1`` (all on ``u``), ``T2`` (all on ``v``).

    New leaves get labels ``n..n+s+t-1`` in each output.
    """
    base = as_tree(base)
    if base.n < 4:
        raise InvalidSpec("the base tree needs at least 4 vertices")
    if u == v or not (0 <= u < base.n and 0 <= v < base.n):
        raise InvalidSpec(f"need two distinct vertices, got {u} and {v}")
    if base.degree(u) != 2 or base.degree(v) != 2:
        raise DegreeMismatch(f"vertices {u} and {v} must both have degree 2")
    if not s >= t >= 1:
        raise InvalidSpec(f"need s >= t >= 1, got s={s}, t={t}")
    both = base.with_pendants(u, s).with_pendants(v, t)
    on_u = base.with_pendants(u, s + t)
    on_v = base.with_pendants(v, s + t)
    return PendantMove(
        both, on_u, on_v, laplacian_ratio(both), laplacian_ratio(on_u), laplacian_ratio(on_v)
    )


def _check_spine(t: Tree, spine: list[int]) -> None:
    if len(set(spine)) != len(spine) or not spine:
        raise NotAPath("spine must be a nonempty list of distinct vertices")
    if any(not 0 <= x < t.n for x in spine):
        raise NotAPath("spine vertex out of range")
    for a, b in zip(spine, spine[1:]):
        if not t.has_edge(a, b):
            raise NotAPath(f"({a}, {b}) is not an edge")
    if len(spine) - 1 != diameter(t):
        raise NotDiametral(f"spine has length {len(spine) - 1}, diameter is {diameter(t)}")


def caterpillarize(t: Graph, spine: list[int]) -> Tree:
    """Replace each branch hanging off ``spine`` by that many pendants at its root."""
    t = as_tree(t)
    spine = list(spine)
    _check_spine(t, spine)
    on_spine = set(spine)
    edges = list(zip(spine, spine[1:]))
    for x in spine:
        seen = set(on_spine)
        stack = [y for y in t.neighbors(x) if y not in on_spine]
        seen.update(stack)
        while stack:
            y = stack.pop()
            edges.append((x, y))
            for z in t.neighbors(y):
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return Tree(t.n, edges)


def is_caterpillar(t: Graph) -> bool:
    """True when removing all leaves leaves a path (or nothing)."""
    t = as_tree(t)
    inner = [x for x in range(t.n) if t.degree(x) > 1]
    if len(inner) <= 2:
        return True
    iset = set(inner)
    inner_deg = [sum(1 for y in t.neighbors(x) if y in iset) for x in inner]
    return max(inner_deg) <= 2
