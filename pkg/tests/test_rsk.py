from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given
from strategies import elements

from wreath.colored_perm import (
    ColoredPermutation,
    enumerate_group,
    group_order,
    transpose,
)
from wreath.model import model_basis
from wreath.rsk import (
    TableauPair,
    colored_rsk,
    inverse_colored_rsk,
    rs_insert,
    shape_of_involution,
    tableau_shape,
)
from wreath.shapes import multi_syt_count, multipartitions

SMALL = [(r, n) for r in range(1, 4) for n in range(0, 5)]


def classical_rs(word):
    # textbook row insertion, written out independently
    P, Q = [], []
    for pos, x in enumerate(word, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([pos])
                break
            bigger = [k for k, y in enumerate(P[row]) if y > x]
            if not bigger:
                P[row].append(x)
                Q[row].append(pos)
                break
            k = bigger[0]
            P[row][k], x = x, P[row][k]
            row += 1
    return tuple(map(tuple, P)), tuple(map(tuple, Q))


def test_insertion_examples():
    t, cell = rs_insert((), 5)
    assert t == ((5,),) and cell == (0, 0)
    t = ()
    for x in (1, 2, 3):
        t, _ = rs_insert(t, x)
    assert t == ((1, 2, 3),)
    t, _ = rs_insert(((2,),), 1)
    assert t == ((1,), (2,))
    with pytest.raises(ValueError):
        rs_insert(((1, 2),), 2)


def test_single_letter():
    for r in range(1, 4):
        for c in range(r):
            pair = colored_rsk(ColoredPermutation(r, 1, (1,), (c,)))
            assert pair.P[c] == pair.Q[c] == ((1,),)
            assert all(pair.P[k] == () for k in range(r) if k != c)


@pytest.mark.parametrize("n", range(1, 7))
def test_r1_is_classical(n):
    for perm in itertools.permutations(range(1, n + 1)):
        pair = colored_rsk(ColoredPermutation(1, n, perm, (0,) * n))
        P, Q = classical_rs(perm)
        assert pair.P == (P,) and pair.Q == (Q,)
    dec = tuple(range(n, 0, -1))
    assert tableau_shape(colored_rsk(ColoredPermutation(1, n, dec, (0,) * n)).P[0]) == (1,) * n


@pytest.mark.parametrize("r,n", SMALL)
def test_duality_and_bijection(r, n):
    images = set()
    shapes = Counter()
    for g in enumerate_group(r, n):
        pair = colored_rsk(g)
        assert colored_rsk(transpose(g)) == pair.swap()
        assert inverse_colored_rsk(pair, r, n) == g
        assert tuple(map(tableau_shape, pair.Q)) == pair.shape
        images.add((pair.P, pair.Q))
        shapes[pair.shape] += 1
    assert len(images) == group_order(r, n)
    for mp in multipartitions(r, n):
        assert shapes[mp] == multi_syt_count(mp) ** 2


@given(elements(max_r=5, max_n=6))
def test_round_trip_random(g):
    assert inverse_colored_rsk(colored_rsk(g), g.r, g.n) == g
    assert colored_rsk(transpose(g)) == colored_rsk(g).swap()


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3)])
def test_value_attachment_breaks_duality(r, n):
    bad = sum(1 for g in enumerate_group(r, n)
              if colored_rsk(transpose(g), "value") != colored_rsk(g, "value").swap())
    assert bad > 0


@pytest.mark.parametrize("r,n", SMALL)
def test_involution_shapes(r, n):
    basis = model_basis(r, n)
    shapes = Counter(shape_of_involution(w) for w in basis.elements)
    assert sum(shapes.values()) == len(basis) == sum(multi_syt_count(mp) for mp in multipartitions(r, n))
    assert all(shapes[mp] == multi_syt_count(mp) for mp in multipartitions(r, n))


def test_involution_shape_examples():
    assert shape_of_involution(ColoredPermutation.identity(3, 4)) == ((4,), (), ())
    w = ColoredPermutation(3, 3, (1, 2, 3), (0, 1, 2))
    assert shape_of_involution(w) == ((1,), (1,), (1,))
    w = ColoredPermutation(2, 4, (1, 2, 3, 4), (1, 0, 1, 0))
    assert shape_of_involution(w) == ((2,), (2,))
    with pytest.raises(ValueError):
        shape_of_involution(ColoredPermutation(3, 2, (2, 1), (1, 2)))


def test_inverse_rejects_bad_pairs():
    with pytest.raises(ValueError):
        inverse_colored_rsk(TableauPair((((1,),),), ((),)), 1, 1)
    with pytest.raises(ValueError):
        inverse_colored_rsk(TableauPair((((1,),),), (((1,),),)), 2, 1)
    single = TableauPair((((1,),), ()), (((1,),), ()))
    assert inverse_colored_rsk(single, 2, 1) == ColoredPermutation(2, 1, (1,), (0,))


def test_json():
    pair = colored_rsk(ColoredPermutation(2, 3, (3, 1, 2), (1, 0, 1)))
    js = pair.to_json()
    assert set(js) == {"P", "Q"} and len(js["P"]) == 2
