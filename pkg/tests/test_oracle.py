"""The brute-force enumeration oracles and their agreement with the constructions."""

import itertools

import pytest

from cyclotile.coloring import (
    CirculantSpec,
    Coloring,
    is_perfect_coloring,
    structured_tile,
    tiling_to_coloring,
)
from cyclotile.errors import NotExists, SearchSpaceTooLarge
from cyclotile.oracle import (
    census_colorings,
    search_colorings,
    search_tilings,
)
from cyclotile.tiling import (
    Tile,
    construct_tiling_prime_power,
    multitiling_exists,
)


def test_search_colorings_square():
    report = search_colorings(CirculantSpec(4, (1,)), 1, 1)
    assert [col.colors for col in report.found] == ["BBWW", "WBBW", "BWWB", "WWBB"]
    assert report.exhausted
    assert report.states_examined == 16
    for col in report.found:
        assert is_perfect_coloring(report.spec, col)


def test_search_colorings_triangle_empty():
    report = search_colorings(CirculantSpec(3, (1,)), 1, 1)
    assert report.found == ()
    assert report.exhausted
    assert report.states_examined == 8


def test_search_colorings_two_cycle():
    report = search_colorings(CirculantSpec(2, (1,)), 2, 2)
    assert [col.colors for col in report.found] == ["BW", "WB"]
    assert report.exhausted


def test_search_colorings_limit():
    report = search_colorings(CirculantSpec(4, (1,)), 1, 1, limit=2)
    assert [col.colors for col in report.found] == ["BBWW", "WBBW"]
    assert not report.exhausted
    assert report.states_examined < 16


def test_search_colorings_too_large():
    with pytest.raises(SearchSpaceTooLarge):
        search_colorings(CirculantSpec(25, (1,)), 1, 1)
    # a limit caps the work and is allowed; C_25(5, 10) splits into five
    # cliques on {i, i+5, ..., i+20}, so one all-black clique gives the
    # first (4, 1)-perfect pattern at mask 0b11111
    spec = CirculantSpec(25, (5, 10))
    report = search_colorings(spec, 4, 1, limit=1)
    assert [col.colors for col in report.found] == ["BBBBB" + "W" * 20]
    assert report.states_examined == 32
    assert not report.exhausted


def test_search_tilings_examples():
    u = Tile((1, 0, 1, 0))
    found = [v.values for v in search_tilings(u, 1)]
    assert sorted(found) == sorted(
        [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)])
    assert [v.values for v in search_tilings(u, 2)] == [(1, 1, 1, 1)]
    assert search_tilings(Tile((1, 0, 0)), 2) == []


def test_search_tilings_counter_order():
    # masks ascend: 3 = [1,1,0,0], 6 = [0,1,1,0], 9 = [1,0,0,1], 12 = [0,0,1,1]
    found = [v.values for v in search_tilings(Tile((1, 0, 1, 0)), 1)]
    assert found == [(1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 1, 1)]


def test_search_tilings_too_large():
    with pytest.raises(SearchSpaceTooLarge):
        search_tilings(Tile((1,) + (0,) * 24), 1)


def _check_agreement(spec, b, c):
    u = structured_tile(spec, b, c)
    oracle_found = search_tilings(u, c)
    exists = multitiling_exists(u, c).passed
    try:
        v = construct_tiling_prime_power(u, c)
        constructed = True
    except NotExists:
        constructed = False
    assert bool(oracle_found) == exists == constructed, (spec, b, c)
    if constructed:
        assert v.values in [w.values for w in oracle_found]


def test_oracle_constructor_agreement():
    # tiling existence, the divisibility test, and the constructor agree
    for p in (2, 3, 4, 5, 7, 8, 9):
        for k in (1, 2):
            for distances in itertools.combinations_with_replacement(range(p), k):
                spec = CirculantSpec(p, distances)
                for b in range(1, 7):
                    for c in range(1, 8 - b):
                        _check_agreement(spec, b, c)


def test_oracle_constructor_agreement_sixteen():
    # spot coverage at the largest prime power the oracle can handle
    for distances in [(1,), (1, 3), (0, 2)]:
        spec = CirculantSpec(16, distances)
        for b in range(1, 7):
            for c in range(1, 8 - b):
                _check_agreement(spec, b, c)


def test_search_colorings_matches_tiling_search():
    for p in (2, 3, 4, 5, 6):
        for distances in [(1,), (0,), (1, 2 % p)]:
            spec = CirculantSpec(p, distances)
            for b in range(1, 5):
                for c in range(1, 5):
                    u = structured_tile(spec, b, c)
                    via_tilings = {
                        tiling_to_coloring(v, b, c).colors
                        for v in search_tilings(u, c)
                    }
                    direct = {col.colors for col in search_colorings(spec, b, c).found}
                    assert direct == via_tilings, (p, distances, b, c)


def test_census_matches_search():
    for p in range(2, 9):
        for distances in [(1,), (0,), (p - 1,), (1, 1), (1, 2 % p)]:
            spec = CirculantSpec(p, distances)
            census = census_colorings(spec)
            for b in range(1, 2 * spec.k + 1):
                for c in range(1, 2 * spec.k + 1):
                    expected = list(search_colorings(spec, b, c).found)
                    assert census.get((b, c), []) == expected, (p, distances, b, c)
            # census never reports a pair outside the direct search
            for (b, c), cols in census.items():
                assert cols == list(search_colorings(spec, b, c).found)


def test_census_buckets_are_perfect():
    spec = CirculantSpec(8, (1, 3))
    for (b, c), cols in census_colorings(spec).items():
        assert cols
        for col in cols:
            assert col.b == b and col.c == c
            assert is_perfect_coloring(spec, col)


def test_census_too_large():
    with pytest.raises(SearchSpaceTooLarge):
        census_colorings(CirculantSpec(25, (1,)))
