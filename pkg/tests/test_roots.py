from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given
from strategies import elements

from wreath.characters import class_size, class_types
from wreath.colored_perm import (
    ColoredPermutation,
    bar,
    class_type,
    colored_cycles,
    compose,
    enumerate_group,
    group_order,
)
from wreath.roots import (
    absolute_square,
    count_bruteforce,
    count_formula,
    count_sqroots_sn,
    count_squares_bruteforce,
    enumerate_pair_singleton_partitions,
    sqroots_sn_bruteforce,
)
from wreath.shapes import partitions


def cycle(r, d, color, n=None):
    n = d if n is None else n
    return ColoredPermutation.from_cycles(r, n, [tuple(range(1, d + 1))], [color] + [0] * (n - 1))


def test_absolute_square_examples():
    g = ColoredPermutation(5, 3, (1, 2, 3), (1, 4, 2))
    assert absolute_square(g).is_identity()
    for v in enumerate_group(2, 3):
        assert absolute_square(v) == compose(v, v)


@pytest.mark.parametrize("r,e", [(1, 2), (2, 2), (3, 1), (3, 2), (4, 1), (2, 3)])
def test_square_of_even_cycle_splits(r, e):
    for z in range(r):
        v = cycle(r, 2 * e, z)
        cyc = colored_cycles(absolute_square(v))
        assert sorted(c.length for c in cyc) == [e, e]
        assert (cyc[0].color + cyc[1].color) % r == 0


def test_bruteforce_examples():
    assert count_bruteforce(ColoredPermutation.identity(1, 2)) == 2
    assert count_bruteforce(ColoredPermutation.identity(2, 2)) == 6
    assert count_bruteforce(ColoredPermutation(2, 1, (1,), (1,))) == 0


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("d", [1, 3])
def test_single_odd_cycle(r, d):
    # each odd colored cycle has exactly r absolute square roots among single cycles
    for z in range(r):
        g = cycle(r, d, z)
        expected = r if z == 0 else 0
        assert count_bruteforce(g) == count_formula(g) == expected


@pytest.mark.parametrize("r", range(1, 5))
@pytest.mark.parametrize("d", [2, 4])
def test_single_even_cycle_has_no_roots(r, d):
    if group_order(r, d) > 10**5:
        pytest.skip("group too large")
    for z in range(r):
        g = cycle(r, d, z)
        assert count_bruteforce(g) == count_formula(g) == 0


@pytest.mark.parametrize("r,d", [(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (3, 2)])
def test_two_cycles_of_equal_length(r, d):
    n = 2 * d
    for z1, z2 in itertools.product(range(r), repeat=2):
        g = ColoredPermutation.from_cycles(
            r, n, [tuple(range(1, d + 1)), tuple(range(d + 1, n + 1))],
            [z1] + [0] * (d - 1) + [z2] + [0] * (d - 1))
        expected = 0
        if (z1 + z2) % r == 0:
            expected += d * r
        if d % 2 and z1 == 0 and z2 == 0:
            expected += r * r
        assert count_formula(g) == count_bruteforce(g) == expected


@pytest.mark.parametrize("r,d", [(1, 3), (2, 3), (1, 4), (2, 2), (3, 2), (4, 2)])
def test_square_map_fibres_over_classes(r, d):
    n = 2 * d
    if group_order(r, n) > 10**5:
        pytest.skip("group too large")
    fibres = Counter(class_type(absolute_square(v)) for v in enumerate_group(r, n))
    for ct in class_types(r, n):
        assert fibres.get(ct, 0) == count_formula(ct.representative()) * class_size(ct)


def test_partition_enumeration_examples():
    assert len(enumerate_pair_singleton_partitions([0], [0], [1], True, 3)) == 1
    assert enumerate_pair_singleton_partitions([0, 1], [1, 1], [2, 2], False, 3) == []
    parts = enumerate_pair_singleton_partitions(range(4), [0] * 4, [3] * 4, True, 2)
    assert len(parts) == 10
    assert Counter(p.n2 for p in parts) == {2: 3, 1: 6, 0: 1}
    for p in parts:
        assert sorted(x for b in p.blocks() for x in b) == [0, 1, 2, 3]


@pytest.mark.parametrize("m", range(0, 7))
def test_perfect_matchings_count(m):
    parts = enumerate_pair_singleton_partitions(range(m), [0] * m, [2] * m, False, 1)
    expected = 0 if m % 2 else 1
    for k in range(1, m, 2):
        expected *= k
    assert len(parts) == expected


@pytest.mark.parametrize("r,n", [(r, n) for r in range(1, 5) for n in range(1, 5) if group_order(r, n) <= 10**5])
def test_formula_against_bruteforce_all_classes(r, n):
    for ct in class_types(r, n):
        g = ct.representative()
        assert count_formula(g) == count_bruteforce(g)


@given(elements(max_r=3, max_n=4))
def test_formula_on_arbitrary_elements(g):
    assert count_formula(g) == count_bruteforce(g)


def test_symmetric_group_roots():
    assert count_sqroots_sn((1, 2, 3)) == sqroots_sn_bruteforce((1, 2, 3)) == 4
    # a 3-cycle c has the single root c^2
    assert count_sqroots_sn((2, 3, 1)) == sqroots_sn_bruteforce((2, 3, 1)) == 1
    assert count_sqroots_sn((2, 1)) == sqroots_sn_bruteforce((2, 1)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_group_roots_all(n):
    for sigma in itertools.permutations(range(1, n + 1)):
        assert count_sqroots_sn(sigma) == sqroots_sn_bruteforce(sigma)


@pytest.mark.parametrize("n", range(1, 4))
def test_r2_absolute_roots_are_ordinary_roots(n):
    for g in enumerate_group(2, n):
        assert bar(g) == g
        assert count_bruteforce(g) == count_squares_bruteforce(g)


@pytest.mark.parametrize("n", range(1, 6))
def test_r1_matches_symmetric_group(n):
    for mu in partitions(n):
        g = ColoredPermutation.from_cycles(1, n, _cycles_of_type(mu))
        assert count_formula(g) == count_sqroots_sn(g.perm)


def _cycles_of_type(mu):
    out, start = [], 1
    for k in mu:
        out.append(tuple(range(start, start + k)))
        start += k
    return out
