from fractions import Fraction as F

import pytest

from permratio.errors import InvalidSpec
from permratio.exact import Sqrt2
from permratio.families import (
    Broom,
    Caterpillar,
    DoubleStar,
    Path,
    Star,
    broom_pd,
    broom_permanent,
    build,
    parse_family,
    pell_q,
    pell_q_binet,
    theorem_bound,
    theorem_bound_sqrt2,
)
from permratio.graph import canonical_code, diameter, laplacian, product_of_degrees
from permratio.permanent import permanent_naive, permanent_ryser
from permratio.treedp import laplacian_ratio, tree_permanent

GRID = [(n, k) for n in range(3, 15) for k in range(2, n)]


def test_build_broom_labeling():
    assert build(Broom(5, 3)).sorted_edges() == [(0, 1), (1, 2), (2, 3), (2, 4)]


def test_build_small_families():
    assert canonical_code(build(DoubleStar(2, 2))) == canonical_code(build(Path(4)))
    assert build(Caterpillar((0, 0, 0))) == build(Path(3))
    assert build(Star(1)).n == 1
    assert build(DoubleStar(3, 4)).n == 7
    assert build(Caterpillar((2, 0, 1))).n == 6


@pytest.mark.parametrize(
    "spec",
    [Path(0), Star(0), Broom(4, 4), Broom(4, 1), Broom(3, 5), DoubleStar(1, 3), Caterpillar(()), Caterpillar((1, -1))],
)
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        build(spec)


@pytest.mark.parametrize(
    "text, spec",
    [
        ("path:5", Path(5)),
        ("star:7", Star(7)),
        ("broom:5,3", Broom(5, 3)),
        ("dstar:2,3", DoubleStar(2, 3)),
        ("cat:1,0,2", Caterpillar((1, 0, 2))),
    ],
)
def test_parse_family(text, spec):
    assert parse_family(text) == spec
    assert str(spec) == text


@pytest.mark.parametrize("text", ["path", "path:a", "broom:5", "broom:5,5", "blob:3", "star:1,2"])
def test_parse_family_errors(text):
    with pytest.raises(InvalidSpec):
        parse_family(text)


def test_pell_values():
    assert [pell_q(k) for k in (0, 2, 5)] == [1, 3, 41]
    assert pell_q_binet(0) == Sqrt2(1, 0)
    assert pell_q_binet(2) == Sqrt2(3, 0)


def test_pell_is_path_submatrix_permanent():
    # Q_k: drop the first row/column of L(P_{k+1}), leaving diagonal 2,...,2,1
    for k in range(1, 9):
        rows = laplacian(build(Path(k + 1))).rows()
        q = [r[1:] for r in rows[1:]]
        assert permanent_naive(q) == pell_q(k)


def test_pell_binet_agrees_to_40():
    for k in range(41):
        b = pell_q_binet(k)
        assert b.b == 0 and b.a == pell_q(k)


def test_broom_permanent_examples():
    assert broom_permanent(3, 2) == 4 == permanent_naive(laplacian(build(Star(3))))
    assert broom_permanent(5, 3) == 16 == permanent_ryser(laplacian(build(Broom(5, 3))))
    assert broom_permanent(6, 4) == 38 == permanent_ryser(laplacian(build(Broom(6, 4))))


def test_broom_pd_examples():
    assert broom_pd(5, 3) == 6
    assert broom_pd(6, 4) == 12
    assert all(broom_pd(n, 2) == n - 1 for n in range(3, 12))
    with pytest.raises(InvalidSpec):
        broom_pd(3, 3)


def test_theorem_bound_examples():
    assert theorem_bound(5, 3) == F(8, 3) == laplacian_ratio(build(Broom(5, 3)))
    assert all(theorem_bound(n, 2) == 2 for n in range(3, 11))
    assert theorem_bound(6, 5) == F(29, 8) == laplacian_ratio(build(Path(6)))
    assert theorem_bound_sqrt2(7, 4).b == 0


@pytest.mark.parametrize("n, k", GRID)
def test_broom_closed_forms_on_grid(n, k):
    b = build(Broom(n, k))
    assert broom_permanent(n, k) == tree_permanent(b)
    assert broom_pd(n, k) == product_of_degrees(b)
    assert theorem_bound(n, k) == laplacian_ratio(b)
    assert diameter(b) == k
