"""Named tree families and the closed forms attached to brooms.

Labelings (fixed so that examples are reproducible):

* ``Path(n)``: ``0 - 1 - ... - n-1``.
* ``Star(n)``: center ``0``, leaves ``1..n-1``.
* ``Broom(n, k)``: path ``0..k-1``, pendants ``k..n-1`` attached to ``k-1``.
* ``DoubleStar(p, q)``: centers ``0`` and ``p``; leaves ``1..p-1`` on ``0``
  and ``p+1..p+q-1`` on ``p``.
* ``Caterpillar(c_1..c_m)``: spine ``0..m-1``, then ``c_1`` leaves on
  spine vertex 0, ``c_2`` on vertex 1, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InvalidSpec, NonRational
from .exact import SQRT2, Sqrt2, as_rational
from .graph import Tree


@dataclass(frozen=True)
class Path:
    n: int

    def __str__(self):
        return f"path:{self.n}"


@dataclass(frozen=True)
class Star:
    n: int

    def __str__(self):
        return f"star:{self.n}"


@dataclass(frozen=True)
class Broom:
    n: int
    k: int

    def __str__(self):
        return f"broom:{self.n},{self.k}"


@dataclass(frozen=True)
class DoubleStar:
    p: int
    q: int

    def __str__(self):
        return f"dstar:{self.p},{self.q}"


@dataclass(frozen=True)
class Caterpillar:
    pendants: tuple[int, ...]

    def __str__(self):
        return "cat:" + ",".join(map(str, self.pendants))


FamilySpec = Union[Path, Star, Broom, DoubleStar, Caterpillar]


def _check_broom(n: int, k: int) -> None:
    if not (isinstance(n, int) and isinstance(k, int)) or not n > k >= 2:
        raise InvalidSpec(f"broom B({n},{k}) needs n > k >= 2")


def validate(spec: FamilySpec) -> None:
    match spec:
        case Path(n) | Star(n):
            if n < 1:
                raise InvalidSpec(f"{spec}: n must be at least 1")
        case Broom(n, k):
            _check_broom(n, k)
        case DoubleStar(p, q):
            if p < 2 or q < 2:
                raise InvalidSpec(f"{spec}: p and q must be at least 2")
        case Caterpillar(cs):
            if not cs or any(c < 0 for c in cs):
                raise InvalidSpec(f"{spec}: need at least one spine vertex and c_i >= 0")
        case _:
            raise InvalidSpec(f"unknown family spec {spec!r}")


def build(spec: FamilySpec) -> Tree:
    validate(spec)
    match spec:
        case Path(n):
            return Tree(n, [(i, i + 1) for i in range(n - 1)])
        case Star(n):
            return Tree(n, [(0, i) for i in range(1, n)])
        case Broom(n, k):
            edges = [(i, i + 1) for i in range(k - 1)]
            edges += [(k - 1, j) for j in range(k, n)]
            return Tree(n, edges)
        case DoubleStar(p, q):
            edges = [(0, p)]
            edges += [(0, i) for i in range(1, p)]
            edges += [(p, j) for j in range(p + 1, p + q)]
            return Tree(p + q, edges)
        case Caterpillar(cs):
            m = len(cs)
            edges = [(i, i + 1) for i in range(m - 1)]
            nxt = m
            for i, c in enumerate(cs):
                for _ in range(c):
                    edges.append((i, nxt))
                    nxt += 1
            return Tree(nxt, edges)


def parse_family(text: str) -> FamilySpec:
    """Parse ``path:N``, ``star:N``, ``broom:N,K``, ``dstar:P,Q`` or ``cat:c1,...,cm``."""
    name, sep, args = text.strip().partition(":")
    if not sep:
        raise InvalidSpec(f"family spec must look like name:args, got {text!r}")
    try:
        nums = tuple(int(a) for a in args.split(",")) if args.strip() else ()
    except ValueError as exc:
        raise InvalidSpec(f"non-integer argument in {text!r}") from exc
    arity = {"path": 1, "star": 1, "broom": 2, "dstar": 2}
    name = name.strip().lower()
    if name in arity and len(nums) != arity[name]:
        raise InvalidSpec(f"{name} takes {arity[name]} argument(s), got {len(nums)}")
    if name == "path":
        spec = Path(*nums)
    elif name == "star":
        spec = Star(*nums)
    elif name == "broom":
        spec = Broom(*nums)
    elif name == "dstar":
        spec = DoubleStar(*nums)
    elif name == "cat":
        spec = Caterpillar(nums)
    else:
        raise InvalidSpec(f"unknown family {name!r}")
    validate(spec)
    return spec


@lru_cache(maxsize=None)
def pell_q(k: int) -> int:
    """Permanent of ``Q_k``: ``Q_0 = Q_1 = 1`` and ``Q_k = 2 Q_{k-1} + Q_{k-2}``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 1, 1
    for _ in range(k):
        a, b = b, 2 * b + a
    return a


def pell_q_binet(k: int) -> Sqrt2:
    """``(1+sqrt2)^k / 2 + (1-sqrt2)^k / 2`` evaluated exactly."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    up = (1 + SQRT2) ** k
    return (up + up.conjugate()) / 2


def broom_permanent(n: int, k: int) -> int:
    _check_broom(n, k)
    return (2 * n - 2 * k + 1) * pell_q(k - 1) + pell_q(k - 2)


def broom_pd(n: int, k: int) -> int:
    _check_broom(n, k)
    return (n - k + 1) * 2 ** (k - 2)


def broom_ratio(n: int, k: int) -> Fraction:
    return Fraction(broom_permanent(n, k), broom_pd(n, k))


def theorem_bound_sqrt2(n: int, k: int) -> Sqrt2:
    """The lower bound on the ratio, as an element of Q(sqrt 2)."""
    _check_broom(n, k)
    shift = SQRT2 / (2 * (n - k + 1))
    up = (1 + SQRT2) / 2
    down = (1 - SQRT2) / 2
    return (1 + SQRT2 - shift) * up ** (k - 2) + (1 - SQRT2 + shift) * down ** (k - 2)


def theorem_bound(n: int, k: int) -> Fraction:
    value = theorem_bound_sqrt2(n, k)
    try:
        return as_rational(value)
    except NonRational as exc:  # pragma: no cover - would mean an arithmetic bug
        raise NonRational(f"bound for ({n},{k}) came out irrational: {value}") from exc
