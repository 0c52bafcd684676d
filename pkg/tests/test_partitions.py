from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from chowkit.partitions import (
    BoxShape,
    Partition,
    _schubert_product,
    complement_in_box,
    fits_in_box,
    giambelli_expand,
    partitions_in_box,
    pieri_multiply,
    schubert_product,
)

from oracles import schubert_product_oracle

SMALL_BOXES = [BoxShape(r, c) for r in range(1, 5) for c in range(1, 5)]


def test_partition_canonical_form():
    assert Partition((2, 1, 0, 0)) == (2, 1)
    assert Partition(()) == ()
    assert Partition((0,)).weight == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


@pytest.mark.parametrize(
    "lam, box, expected",
    [((2, 2), BoxShape(2, 2), True), ((3,), BoxShape(2, 2), False), ((), BoxShape(1, 1), True),
     ((1, 1, 1), BoxShape(2, 5), False)],
)
def test_fits_in_box(lam, box, expected):
    assert fits_in_box(lam, box) is expected


@pytest.mark.parametrize(
    "lam, box, expected",
    [((2, 2), BoxShape(2, 2), ()), ((3, 1), BoxShape(2, 3), (2,)), ((1,), BoxShape(2, 2), (2, 1))],
)
def test_complement_examples(lam, box, expected):
    assert complement_in_box(lam, box) == expected


def test_complement_rejects_outside_box():
    with pytest.raises(ValueError):
        complement_in_box((3,), BoxShape(2, 2))


@pytest.mark.parametrize("rows, cols", [(r, c) for r in range(1, 7) for c in range(1, 7)])
def test_complement_involution_exhaustive(rows, cols):
    box = BoxShape(rows, cols)
    for lam in partitions_in_box(box):
        comp = complement_in_box(lam, box)
        assert complement_in_box(comp, box) == lam
        assert sum(lam) + sum(comp) == box.area


def test_partitions_in_box_counts():
    # C(n, k) Schubert classes on Gr(k, n)
    assert len(partitions_in_box(BoxShape(3, 7))) == 120
    assert len(partitions_in_box(BoxShape(4, 6))) == 210
    assert partitions_in_box(BoxShape(2, 2), 2) == [(2,), (1, 1)]


@pytest.mark.parametrize(
    "lam, m, expected",
    [((1,), 1, {(2,), (1, 1)}), ((2,), 1, {(2, 1)}), ((2, 1), 1, {(2, 2)}), ((2, 2), 1, set())],
)
def test_pieri_examples(lam, m, expected):
    assert set(pieri_multiply(lam, m, BoxShape(2, 2))) == expected


@pytest.mark.parametrize("box", SMALL_BOXES)
def test_pieri_closure(box):
    for lam in partitions_in_box(box):
        for m in range(0, box.cols + 1):
            out = pieri_multiply(lam, m, box)
            assert len(set(out)) == len(out)
            for mu in out:
                assert fits_in_box(mu, box)
                assert sum(mu) == sum(lam) + m
                lam_pad = tuple(lam) + (0,) * (len(mu) - len(lam))
                # horizontal strip: mu_i >= lam_i >= mu_{i+1}
                assert all(a >= b for a, b in zip(mu, lam_pad))
                assert all(lam_pad[i] >= mu[i + 1] for i in range(len(mu) - 1))


@pytest.mark.parametrize(
    "lam, expected",
    [((2, 1), {(2, 1): 1, (3,): -1}), ((4,), {(4,): 1}), ((1, 1), {(1, 1): 1, (2,): -1}), ((), {(): 1})],
)
def test_giambelli_examples(lam, expected):
    assert giambelli_expand(lam) == expected


def test_schubert_product_examples():
    assert schubert_product((1,), (1,), BoxShape(2, 2)) == {(2,): 1, (1, 1): 1}
    assert schubert_product((1,), (2, 1), BoxShape(2, 2)) == {(2, 2): 1}
    # frozen from the tableau oracle
    assert schubert_product((2, 1), (2, 1), BoxShape(3, 3)) == {(3, 3): 1, (3, 2, 1): 2, (2, 2, 2): 1}


@pytest.mark.parametrize("box", [BoxShape(r, c) for r in range(1, 4) for c in range(1, 5)] + [BoxShape(4, 2)])
def test_schubert_product_matches_tableau_oracle(box):
    parts = partitions_in_box(box)
    for lam in parts:
        for mu in parts:
            if sum(lam) + sum(mu) > box.area:
                continue
            assert schubert_product(lam, mu, box) == schubert_product_oracle(lam, mu, box.rows, box.cols)


@pytest.mark.parametrize("box", SMALL_BOXES)
def test_commutative_and_nonnegative(box):
    # the unswapped internal product, so that commutativity is really tested
    parts = partitions_in_box(box)
    for lam, mu in product(parts, parts):
        a = dict(_schubert_product(lam, mu, box.rows, box.cols))
        b = dict(_schubert_product(mu, lam, box.rows, box.cols))
        assert a == b
        assert all(isinstance(c, int) and c > 0 for c in a.values())


def _mul(x, y, box):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for c, cc in schubert_product(a, b, box).items():
                out[c] = out.get(c, 0) + ca * cb * cc
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("box", [b for b in SMALL_BOXES if b.area <= 9])
def test_associative_exhaustive(box):
    parts = partitions_in_box(box)
    for lam, mu, nu in product(parts, repeat=3):
        if sum(lam) + sum(mu) + sum(nu) > box.area:
            continue
        left = _mul(_mul({lam: 1}, {mu: 1}, box), {nu: 1}, box)
        right = _mul({lam: 1}, _mul({mu: 1}, {nu: 1}, box), box)
        assert left == right


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_associative_4x4(data):
    box = BoxShape(4, 4)
    parts = partitions_in_box(box)
    lam, mu, nu = (data.draw(st.sampled_from(parts)) for _ in range(3))
    left = _mul(_mul({lam: 1}, {mu: 1}, box), {nu: 1}, box)
    right = _mul({lam: 1}, _mul({mu: 1}, {nu: 1}, box), box)
    assert left == right
