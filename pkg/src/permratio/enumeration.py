"""Non-isomorphic tree generation and exhaustive extremal searches."""

from __future__ import annotations

import sys
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import InvalidSpec, TooLarge
from .exact import format_rational
from .families import Broom, broom_permanent, build, theorem_bound
from .graph import Tree, canonical_code, diameter, tree_code_from_adjacency
from .treedp import laplacian_ratio, tree_permanent

DEFAULT_ENUM_CAP = 16

FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320)


def _levels_to_tree(levels: list[int]) -> Tree:
    stack: list[int] = []
    edges = []
    for v, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree; returns (that subtree, the rest)."""
    m = len(levels)
    ones = [i for i, x in enumerate(levels) if x == 1]
    if len(ones) > 1:
        m = ones[1]
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    """Skip rooted sequences that are not the canonical centroid-rooted form."""
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    cand = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(cand)
        tail = list(range(1, max(new_left) + 2))
        cand[-len(tail) :] = tail
    return cand


def enumerate_trees(n: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Tree]:
    """Yield one tree per isomorphism class on ``n`` vertices.

    Uses the constant-amortized-time level-sequence generator of Wright,
    Richmond, Odlyzko and McKay.
    """
    if n < 1:
        raise InvalidSpec("n must be at least 1")
    if n > cap:
        raise TooLarge(f"enumeration of n={n} exceeds the cap {cap}")
    if n == 1:
        yield Tree(1)
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            break
        yield _levels_to_tree(levels)
        levels = _next_rooted(levels)


def _prufer_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_decode(seq: Iterable[int], n: int) -> Tree:
    """Labeled tree on ``0..n-1`` from its Prufer sequence."""
    return Tree(n, _prufer_edges(list(seq), n))


def prufer_trees(n: int, cap: int = 9) -> list[Tree]:
    """Independent oracle: decode Prufer sequences, keep one tree per canonical code.

    Only sequences starting with ``n-1`` are decoded.  That loses no class:
    relabel any tree so that some leaf is ``0`` and its neighbour is
    ``n-1``; leaf ``0`` is removed first, so the sequence starts with ``n-1``.
    """
    if n > cap:
        raise TooLarge(f"Prufer enumeration of n={n} exceeds the cap {cap}")
    if n < 1:
        raise InvalidSpec("n must be at least 1")
    if n <= 2:
        return [Tree(n, [(0, 1)] if n == 2 else [])]
    seen: dict[bytes, list[tuple[int, int]]] = {}
    for tail in product(range(n), repeat=n - 3):
        edges = _prufer_edges([n - 1, *tail], n)
        adj = [[] for _ in range(n)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        seen.setdefault(tree_code_from_adjacency(adj), edges)
    return [Tree(n, seen[c]) for c in sorted(seen)]


def filter_diameter_at_least(trees: Iterable[Tree], k: int) -> Iterator[Tree]:
    return (t for t in trees if diameter(t) >= k)


@dataclass
class ExtremalReport:
    """Result of minimizing an objective over trees of order ``n`` and diameter >= ``k``."""

    n: int
    k: int
    objective: str
    minimum: Fraction
    minimizers: list[str]
    examined: int
    expected: Fraction
    broom_code: str
    agreement: bool
    values: dict[str, Fraction] = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "objective": self.objective,
            "minimum": format_rational(self.minimum),
            "minimizers": list(self.minimizers),
            "examined": self.examined,
            "expected": format_rational(self.expected),
            "broom_code": self.broom_code,
            "agreement": self.agreement,
        }


def _ratio_value(t: Tree) -> Fraction:
    return laplacian_ratio(t)


def _permanent_value(t: Tree) -> Fraction:
    return Fraction(tree_permanent(t))


OBJECTIVES: dict[str, Callable[[Tree], Fraction]] = {
    "ratio": _ratio_value,
    "permanent": _permanent_value,
}


def _score_chunk(args) -> list[tuple[str, Fraction]]:
    objective, trees = args
    f = OBJECTIVES[objective]
    return [(canonical_code(t).hex(), f(t)) for t in trees]


def _search(n: int, k: int, objective: str, jobs: int, cap: int, progress: bool) -> ExtremalReport:
    if not (isinstance(n, int) and isinstance(k, int)) or not 2 <= k <= n - 1:
        raise InvalidSpec(f"need 2 <= k <= n-1, got n={n}, k={k}")
    candidates = list(filter_diameter_at_least(enumerate_trees(n, cap), k))
    if jobs > 1 and len(candidates) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [candidates[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_score_chunk, [(objective, c) for c in chunks]))
        scored = [x for part in parts for x in part]
    else:
        scored = _score_chunk((objective, candidates))
    if progress:
        print(f"[extremal] n={n} k={k} {objective}: {len(scored)} trees", file=sys.stderr)
    values = dict(scored)
    minimum = min(values.values())
    minimizers = sorted(code for code, val in values.items() if val == minimum)
    broom = build(Broom(n, k))
    broom_code = canonical_code(broom).hex()
    if objective == "ratio":
        expected = theorem_bound(n, k)
    else:
        expected = Fraction(broom_permanent(n, k))
    return ExtremalReport(
        n=n,
        k=k,
        objective=objective,
        minimum=minimum,
        minimizers=minimizers,
        examined=len(scored),
        expected=expected,
        broom_code=broom_code,
        agreement=minimum == expected and minimizers == [broom_code],
        values=values,
    )


def extremal_search(
    n: int, k: int, jobs: int = 1, cap: int = DEFAULT_ENUM_CAP, progress: bool = False
) -> ExtremalReport:
    """Exact minimum of the Laplacian ratio over trees with ``n`` vertices and diameter >= ``k``."""
    return _search(n, k, "ratio", jobs, cap, progress)


def permanent_extremal_search(
    n: int, k: int, jobs: int = 1, cap: int = DEFAULT_ENUM_CAP, progress: bool = False
) -> ExtremalReport:
    """Same search minimizing ``per L(T)`` instead of the ratio."""
    return _search(n, k, "permanent", jobs, cap, progress)
