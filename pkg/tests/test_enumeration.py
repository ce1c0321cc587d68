from fractions import Fraction as F

import pytest

from permratio.enumeration import (
    FREE_TREE_COUNTS,
    enumerate_trees,
    extremal_search,
    filter_diameter_at_least,
    permanent_extremal_search,
    prufer_decode,
    prufer_trees,
)
from permratio.errors import InvalidSpec, TooLarge
from permratio.graph import canonical_code, code_hex

from conftest import broom, path, star


def test_small_counts():
    assert len(list(enumerate_trees(1))) == 1
    assert len(list(enumerate_trees(4))) == 2
    assert len(list(enumerate_trees(7))) == 11


@pytest.mark.parametrize("n", range(1, 13))
def test_counts_and_distinct_codes(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == FREE_TREE_COUNTS[n - 1]
    codes = {canonical_code(t) for t in trees}
    assert len(codes) == len(trees)
    assert all(t.n == n and len(t.edges) == n - 1 for t in trees)


@pytest.mark.parametrize("n", range(1, 9))
def test_prufer_oracle_matches(n):
    gen = sorted(canonical_code(t) for t in enumerate_trees(n))
    assert sorted(canonical_code(t) for t in prufer_trees(n)) == gen


def test_prufer_decode_roundtrip_shape():
    t = prufer_decode([3, 3, 3], 5)
    assert sorted(t.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]


def test_enumeration_caps():
    with pytest.raises(TooLarge):
        list(enumerate_trees(17))
    with pytest.raises(InvalidSpec):
        list(enumerate_trees(0))
    with pytest.raises(TooLarge):
        prufer_trees(10)


def test_filter_diameter():
    assert len(list(filter_diameter_at_least(enumerate_trees(5), 3))) == 2
    assert len(list(filter_diameter_at_least(enumerate_trees(5), 2))) == 3
    assert len(list(filter_diameter_at_least(enumerate_trees(5), 5))) == 0


def test_extremal_examples():
    r = extremal_search(5, 3)
    assert r.minimum == F(8, 3) and r.minimizers == [code_hex(broom(5, 3))] and r.agreement
    r = extremal_search(6, 5)
    assert r.minimum == F(29, 8) and r.minimizers == [code_hex(path(6))] and r.examined == 1
    r = extremal_search(6, 2)
    assert r.minimum == 2 and r.minimizers == [code_hex(star(6))] and r.examined == 6


def test_permanent_extremal_examples():
    r = permanent_extremal_search(5, 3)
    assert r.minimum == 16 and r.minimizers == [code_hex(broom(5, 3))]
    r = permanent_extremal_search(6, 4)
    assert r.minimum == 38 and r.agreement
    r = permanent_extremal_search(4, 3)
    assert r.minimum == 10 and r.minimizers == [code_hex(path(4))]


def test_extremal_rejects_bad_k():
    for n, k in [(5, 1), (5, 5), (2, 2)]:
        with pytest.raises(InvalidSpec):
            extremal_search(n, k)


def test_report_minimum_bounds_every_value():
    r = extremal_search(9, 4)
    assert all(r.minimum <= v for v in r.values.values())
    assert r.to_json()["minimum"] == "10/3"


def test_parallel_search_is_identical():
    one = extremal_search(10, 4, jobs=1).to_json()
    many = extremal_search(10, 4, jobs=3).to_json()
    assert one == many
