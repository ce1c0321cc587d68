"""Seeded and exhaustive verification suites, one per claim tag.

Every suite is split into a deterministic instance generator and a pure
per-instance check, so instances can be farmed out to worker processes and
merged back in index order.  Randomness comes from :class:`random.Random`
(MT19937) seeded per instance with the string ``"{seed}:{tag}:{index}"``,
which Python hashes with SHA-512; results do not depend on
``PYTHONHASHSEED`` or on the number of workers.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .enumeration import enumerate_trees, extremal_search, permanent_extremal_search
from .exact import format_rational
from .families import Broom, Path as PathSpec, broom_permanent, build, pell_q, pell_q_binet
from .graph import (
    Graph,
    Tree,
    bfs_distances,
    canonical_code,
    diameter,
    laplacian,
    principal_laplacian,
    shortest_path,
)
from .permanent import (
    edge_deletion,
    expand_submatrix,
    expand_vertex,
    pendant_reduction,
    permanent_ryser,
)
from .transforms import (
    caterpillarize,
    check_lemma28,
    is_caterpillar,
    move_pendants,
    psi_theta,
    split_at_edge,
    star_psi_theta,
)
from .treedp import laplacian_ratio, matching_weights, matching_weights_bruteforce

PRNG_ID = "python-random-mt19937/sha512-str-seed"

TAGS = (
    "2.2",
    "2.3",
    "2.4",
    "2.5",
    "2.6",
    "2.7",
    "2.8i",
    "2.8ii",
    "2.8iii",
    "2.9",
    "2.10",
    "2.11",
    "thm1.1",
    "cat",
)


class UnknownTag(ValueError):
    pass


def instance_rng(seed: int, tag: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{tag}:{index}")


# -- random structures -------------------------------------------------------


def random_tree(rng: random.Random, n: int) -> Tree:
    from .enumeration import prufer_decode

    if n == 1:
        return Tree(1)
    if n == 2:
        return Tree(2, [(0, 1)])
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def random_connected_graph(rng: random.Random, n: int, kind: str) -> Graph:
    """A tree (``kind='tree'``), a unicyclic graph, or a tree plus several random chords."""
    t = random_tree(rng, n)
    edges = set(t.edges)
    missing = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    extra = {"tree": 0, "unicyclic": 1}.get(kind)
    if extra is None:
        extra = rng.randint(2, max(2, min(len(missing), n)))
    extra = min(extra, len(missing))
    edges.update(rng.sample(missing, extra))
    return Graph(n, edges)


GRAPH_KINDS = ("tree", "unicyclic", "random")


def seeded_graph(seed: int, tag: str, i: int) -> tuple[random.Random, Graph]:
    rng = instance_rng(seed, tag, i)
    n = rng.randint(3, 8)
    return rng, random_connected_graph(rng, n, GRAPH_KINDS[i % 3])


def _edges_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


# -- results -------------------------------------------------------------------


@dataclass
class Outcome:
    ok: bool
    record: dict | None = None
    labels: tuple[str, ...] = ()


@dataclass
class SuiteResult:
    tag: str
    seed: int
    instances: int = 0
    passed: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    @property
    def failed(self) -> int:
        return self.instances - self.passed

    @property
    def ok(self) -> bool:
        return self.instances > 0 and self.failed == 0

    def to_json(self) -> dict:
        return {
            "lemma": self.tag,
            "seed": self.seed,
            "prng": PRNG_ID,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "counts": dict(sorted(self.counts.items())),
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in sorted(self.counts.items()))
        return f"{status} lemma {self.tag}: {self.passed}/{self.instances} instances{extra}"


# -- per-instance checks (module level so worker processes can pickle them) ---


def _check_22(args) -> Outcome:
    seed, i = args
    _, g = seeded_graph(seed, "2.2", i)
    target = permanent_ryser(laplacian(g))
    bad = [v for v in range(g.n) if expand_vertex(g, v) != target]
    rec = None if not bad else {"graph": _edges_json(g), "per": target, "bad_vertices": bad}
    return Outcome(not bad, rec, (GRAPH_KINDS[i % 3],))


def _check_24(args) -> Outcome:
    seed, i = args
    rng, g = seeded_graph(seed, "2.4", i)
    bad = []
    for _ in range(4):
        size = rng.randint(0, g.n - 2)
        struck = set(rng.sample(range(g.n), size))
        v = rng.choice([x for x in range(g.n) if x not in struck])
        target = permanent_ryser(principal_laplacian(g, struck))
        got = expand_submatrix(g, struck, v)
        if got != target:
            bad.append({"struck": sorted(struck), "v": v, "expected": target, "got": got})
    rec = None if not bad else {"graph": _edges_json(g), "failures": bad}
    return Outcome(not bad, rec, (GRAPH_KINDS[i % 3],))


def _check_25(args) -> Outcome:
    seed, i = args
    _, g = seeded_graph(seed, "2.5", i)
    target = permanent_ryser(laplacian(g))
    bad = [list(e) for e in g.sorted_edges() if edge_deletion(g, e) != target]
    rec = None if not bad else {"graph": _edges_json(g), "per": target, "bad_edges": bad}
    return Outcome(not bad, rec, (GRAPH_KINDS[i % 3],))


def _check_23(t: Tree) -> Outcome:
    target = permanent_ryser(laplacian(t))
    pendants = [v for v in range(t.n) if t.degree(v) == 1]
    bad = [v for v in pendants if pendant_reduction(t, v) != target]
    rec = None if not bad else {"graph": _edges_json(t), "per": target, "bad_pendants": bad}
    return Outcome(not bad, rec)


def _check_26(t: Tree) -> Outcome:
    mw = matching_weights(t)
    per = permanent_ryser(laplacian(t))
    ok = mw.permanent == per
    if ok and mw.pd:
        ok = sum(mw.pi) == laplacian_ratio(t) and sum(mw.pi) * mw.pd == per
    labels = ()
    if t.n <= 8:
        ok = ok and matching_weights_bruteforce(t).n == mw.n
        labels = ("bruteforce",)
    rec = None if ok else {"graph": _edges_json(t), "n_k": list(mw.n), "per": per}
    return Outcome(ok, rec, labels)


def _check_27(t: Tree) -> Outcome:
    d = diameter(t)
    path = build(PathSpec(d + 1))
    pi_t, pi_p = laplacian_ratio(t), laplacian_ratio(path)
    iso_path = canonical_code(t) == canonical_code(path)
    equal_allowed = iso_path or d == 2
    ok = pi_t >= pi_p and ((pi_t == pi_p) == equal_allowed)
    rec = None
    if not ok:
        rec = {
            "trees": {"T": _edges_json(t), "P": _edges_json(path)},
            "ratios": {"T": format_rational(pi_t), "P": format_rational(pi_p)},
        }
    return Outcome(ok, rec, ("equality",) if pi_t == pi_p else ())


def _split_instance(seed: int, tag: str, i: int, star: bool = False):
    """Random ``(G1, u, v)`` with ``n`` and ``r`` cycled so every ``1 <= r <= n-2`` occurs."""
    rng = instance_rng(seed, tag, i)
    n = 3 + i % 9
    r = 1 + (i // 9) % (n - 2)
    h = random_tree(rng, n - r)
    if star:
        t_r = Tree(r, [(0, j) for j in range(1, r)])
        v_local = 0
    else:
        t_r = random_tree(rng, r)
        v_local = rng.randrange(r)
    u_local = rng.randrange(n - r)
    edges = list(h.edges) + [(a + n - r, b + n - r) for a, b in t_r.edges]
    edges.append((u_local, v_local + n - r))
    perm = list(range(n))
    rng.shuffle(perm)
    g1 = Tree(n, edges).relabeled(perm)
    return g1, perm[u_local], perm[v_local + n - r]


def _split_record(tag, seed, i, c) -> dict:
    return {
        "trees": {"G1": _edges_json(c.decomposition.g1), "G2": _edges_json(c.g2)},
        "ratios": {"G1": format_rational(c.pi_g1), "G2": format_rational(c.pi_g2)},
        "edge": [c.decomposition.u, c.decomposition.v],
        "psi": format_rational(c.psi),
        "theta": format_rational(c.theta),
    }


def _check_28iii(args) -> Outcome:
    seed, i = args
    g1, u, v = _split_instance(seed, "2.8iii", i)
    c = check_lemma28(g1, u, v)
    ok = c.verdict
    labels = [f"r={c.decomposition.r}"]
    if c.decomposition.r == 1:
        if c.pi_g1 == c.pi_g2:
            labels.append("r1_equal")
        else:
            ok = False
    return Outcome(ok, None if ok else _split_record("2.8iii", seed, i, c), tuple(labels))


def _check_28ii(args) -> Outcome:
    seed, i = args
    g1, u, v = _split_instance(seed, "2.8ii", i, star=True)
    c = check_lemma28(g1, u, v)
    closed = star_psi_theta(g1.degree(u), c.decomposition.r)
    ok = c.verdict and closed.psi == c.psi and closed.theta == c.theta
    return Outcome(ok, None if ok else _split_record("2.8ii", seed, i, c), ("closed_form",))


def _psi_ge_theta_instances(seed: int, wanted: int, max_tries: int = 100_000) -> list[int]:
    """Indices of generated splits whose ``psi >= theta`` (cheap filter, no permanents)."""
    keep = []
    j = 0
    while len(keep) < wanted and j < max_tries:
        g1, u, v = _split_instance(seed, "2.8i", j)
        pt = psi_theta(split_at_edge(g1, u, v))
        if pt.psi >= pt.theta:
            keep.append(j)
        j += 1
    return keep


def _check_28i(args) -> Outcome:
    seed, j = args
    g1, u, v = _split_instance(seed, "2.8i", j)
    c = check_lemma28(g1, u, v)
    ok = c.psi >= c.theta and c.verdict
    return Outcome(ok, None if ok else _split_record("2.8i", seed, j, c))


def _check_29(args) -> Outcome:
    seed, i = args
    rng = instance_rng(seed, "2.9", i)
    want_adjacent = i % 2 == 0
    while True:
        n = rng.randint(4, 9)
        base = random_tree(rng, n)
        two = [x for x in range(n) if base.degree(x) == 2]
        pairs = [
            (a, b)
            for a in two
            for b in two
            if a != b and base.has_edge(a, b) == want_adjacent
        ]
        if pairs:
            break
    u, v = rng.choice(pairs)
    s = rng.randint(1, 4)
    t = rng.randint(1, s)
    m = move_pendants(base, u, v, s, t)
    label = "adjacent" if want_adjacent else "nonadjacent"
    rec = None
    if not m.verdict:
        rec = {
            "trees": {"T": _edges_json(m.t), "T1": _edges_json(m.t1), "T2": _edges_json(m.t2)},
            "ratios": {
                "T": format_rational(m.pi_t),
                "T1": format_rational(m.pi_t1),
                "T2": format_rational(m.pi_t2),
            },
            "u": u,
            "v": v,
            "s": s,
            "t": t,
        }
    return Outcome(m.verdict, rec, (label,))


def _random_diametral_path(rng: random.Random, t: Tree) -> list[int]:
    d = diameter(t)
    ends = []
    for a in range(t.n):
        dist = bfs_distances(t, a)
        ends.extend((a, b) for b, x in dist.items() if x == d and a < b)
    a, b = rng.choice(ends)
    return shortest_path(t, a, b)


def _check_cat(args) -> Outcome:
    seed, i = args
    rng = instance_rng(seed, "cat", i)
    n = rng.randint(6, 12)
    t = random_tree(rng, n)
    # odd instances insist on a non-caterpillar so the surgery has work to do
    for _ in range(100):
        if i % 2 == 0 or not is_caterpillar(t):
            break
        t = random_tree(rng, n)
    spine = _random_diametral_path(rng, t)
    t0 = caterpillarize(t, spine)
    before, after = laplacian_ratio(t), laplacian_ratio(t0)
    ok = before >= after and t0.n == t.n and is_caterpillar(t0)
    rec = None
    if not ok:
        rec = {
            "trees": {"T": _edges_json(t), "T0": _edges_json(t0)},
            "ratios": {"T": format_rational(before), "T0": format_rational(after)},
            "spine": spine,
        }
    return Outcome(ok, rec, ("unchanged",) if before == after else ())


def _check_211(n: int) -> Outcome:
    bad = []
    for k in range(2, n):
        expected = broom_permanent(n, k)
        if permanent_ryser(laplacian(build(Broom(n, k)))) != expected:
            bad.append(k)
    return Outcome(not bad, None if not bad else {"n": n, "bad_k": bad})


def _check_pell(k: int) -> Outcome:
    b = pell_q_binet(k)
    ok = b.b == 0 and b.a == pell_q(k)
    return Outcome(ok, None if ok else {"k": k, "binet": str(b), "recurrence": pell_q(k)})


def _check_extremal(args) -> Outcome:
    objective, n, k = args
    search = extremal_search if objective == "ratio" else permanent_extremal_search
    rep = search(n, k)
    return Outcome(rep.agreement, None if rep.agreement else rep.to_json())


# -- suite driver ---------------------------------------------------------------


def _run(fn, items, jobs: int) -> list[Outcome]:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _tree_corpus(n_max: int, n_min: int = 1):
    return [t for n in range(n_min, n_max + 1) for t in enumerate_trees(n)]


DEFAULT_N_MAX = {
    "2.2": 8,
    "2.4": 8,
    "2.5": 8,
    "2.3": 9,
    "2.6": 9,
    "2.7": 10,
    "2.10": 12,
    "thm1.1": 12,
    "2.11": 14,
}


def run_suite(
    tag: str,
    *,
    seed: int = 42,
    instances: int | None = None,
    n_max: int | None = None,
    jobs: int = 1,
    progress: bool = False,
) -> SuiteResult:
    """Run the suite for one claim tag and collect counts and counterexamples."""
    if tag not in TAGS:
        raise UnknownTag(f"unknown lemma tag {tag!r}; choose from {', '.join(TAGS)}")
    n_max = n_max if n_max is not None else DEFAULT_N_MAX.get(tag)
    count = instances if instances is not None else (100 if tag in ("2.2", "2.4", "2.5") else 200)
    if tag == "2.2":
        outcomes = _run(_check_22, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.4":
        outcomes = _run(_check_24, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.5":
        outcomes = _run(_check_25, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.3":
        outcomes = _run(_check_23, _tree_corpus(n_max, 2), jobs)
    elif tag == "2.6":
        outcomes = _run(_check_26, _tree_corpus(n_max), jobs)
    elif tag == "2.7":
        outcomes = _run(_check_27, _tree_corpus(n_max, 2), jobs)
    elif tag == "2.8i":
        outcomes = _run(_check_28i, [(seed, j) for j in _psi_ge_theta_instances(seed, count)], jobs)
    elif tag == "2.8ii":
        outcomes = _run(_check_28ii, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.8iii":
        outcomes = _run(_check_28iii, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.9":
        outcomes = _run(_check_29, [(seed, i) for i in range(count)], jobs)
    elif tag == "cat":
        outcomes = _run(_check_cat, [(seed, i) for i in range(count)], jobs)
    elif tag == "2.11":
        outcomes = _run(_check_211, range(3, n_max + 1), jobs)
        outcomes += [_check_pell(k) for k in range(0, 41)]
    else:
        objective = "ratio" if tag == "thm1.1" else "permanent"
        grid = [(objective, n, k) for n in range(3, n_max + 1) for k in range(2, n)]
        outcomes = _run(_check_extremal, grid, jobs)
    result = SuiteResult(tag, seed)
    for idx, o in enumerate(outcomes):
        result.instances += 1
        result.passed += o.ok
        for label in o.labels:
            result.counts[label] = result.counts.get(label, 0) + 1
        if not o.ok:
            rec = {"lemma": tag, "seed": seed, "instance": idx}
            rec.update(o.record or {})
            result.counterexamples.append(rec)
    if progress:
        print(f"[verify] {result.summary()}", file=sys.stderr)
    return result


def write_counterexamples(result: SuiteResult, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for rec in result.counterexamples:
        p = out_dir / f"counterexample-{result.tag}-{rec['instance']:04d}.json"
        p.write_text(json.dumps(rec, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        paths.append(p)
    return paths
