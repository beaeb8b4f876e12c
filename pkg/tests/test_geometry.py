"""Shape and distance tests, checked against brute-force oracles."""

import itertools

import pytest

from halfcross.geometry import (
    DimensionMismatch,
    covers,
    cross_distance,
    cross_weight,
    hamming_distance,
    manhattan_distance,
    torus_covers,
    torus_cross_distance,
    upsilon_offsets,
)


def shape_cells_oracle(n):
    """Cell set of the scaled half-cross, straight from its definition.

    The core is the box {-1, 0}^n; the arms are the Manhattan-distance-1
    neighbors of the core that leave it along a single coordinate.
    """
    core = set(itertools.product((-1, 0), repeat=n))
    cells = set(core)
    for c in core:
        for i in range(n):
            for step in (-1, 1):
                nb = c[:i] + (c[i] + step,) + c[i + 1 :]
                if nb not in core:
                    cells.add(nb)
    return cells


def test_offset_count():
    for n in range(1, 9):
        assert len(upsilon_offsets(n).offsets) == 2**n * (n + 1)


def test_offset_entries_shape():
    for n in range(1, 7):
        for off in upsilon_offsets(n).offsets:
            assert all(-1 <= d <= 2 for d in off)
            assert sum(1 for d in off if d in (-1, 2)) <= 1


def test_offsets_sorted_unique():
    for n in range(1, 7):
        offs = upsilon_offsets(n).offsets
        assert list(offs) == sorted(set(offs))


def test_offsets_match_cell_set_definition():
    # offsets D with x - a = D correspond to cells a = x - D; at x = 0 the
    # shape's cells must equal the negated offsets
    for n in range(1, 5):
        offs = upsilon_offsets(n).offsets
        negated = {tuple(-d for d in off) for off in offs}
        assert negated == shape_cells_oracle(n)


def test_cells_at_point():
    shape = upsilon_offsets(2)
    cells = shape.cells((0, 0))
    assert len(cells) == 12
    assert cells == shape_cells_oracle(2)


def test_covers_equals_offset_membership():
    for n in (1, 2, 3):
        offs = set(upsilon_offsets(n).offsets)
        for x in itertools.product(range(-2, 3), repeat=n):
            for a in itertools.product(range(-2, 3), repeat=n):
                d = tuple(xi - ai for xi, ai in zip(x, a))
                assert covers(x, a) == (d in offs)


def test_distances_known_values():
    assert hamming_distance((0, 1, 2), (0, 2, 2)) == 1
    assert manhattan_distance((0, 0), (3, -4)) == 7
    assert cross_distance((0, 0, 0), (2, 0, -3)) == 1 + 0 + 2
    assert cross_weight((2, 1, 0, -5)) == 1 + 0 + 0 + 4


def test_cross_distance_from_definition():
    for x in itertools.product(range(-3, 4), repeat=2):
        for y in itertools.product(range(-3, 4), repeat=2):
            want = sum(max(0, abs(yi - xi) - 1) for xi, yi in zip(x, y))
            assert cross_distance(x, y) == want


def test_cross_distance_not_a_metric():
    # triangle inequality fails: d(0,2) = 1 but d(0,1) + d(1,2) = 0
    assert cross_distance((0,), (2,)) == 1
    assert cross_distance((0,), (1,)) + cross_distance((1,), (2,)) == 0


def test_disjointness_iff_cross_distance_3():
    # two translates of the shape are disjoint exactly when d_C >= 3
    for n in (1, 2):
        shape = upsilon_offsets(n)
        base = shape.cells((0,) * n)
        for y in itertools.product(range(-5, 6), repeat=n):
            other = shape.cells(y)
            disjoint = not (base & other)
            assert disjoint == (cross_distance((0,) * n, y) >= 3), y


def test_torus_cross_distance_oracle():
    # minimum of the plain distance over all wraparound representatives
    for p in (4, 5, 12):
        for x in itertools.product(range(p), repeat=2):
            for y in itertools.product(range(p), repeat=2):
                want = min(
                    cross_distance(x, (y[0] + p * k0, y[1] + p * k1))
                    for k0 in (-1, 0, 1)
                    for k1 in (-1, 0, 1)
                )
                assert torus_cross_distance(x, y, p) == want


def test_torus_requires_period_4():
    with pytest.raises(ValueError):
        torus_cross_distance((0,), (1,), 3)


def test_torus_covers_matches_plain_covers():
    p = 5
    shape = upsilon_offsets(2)
    for x in itertools.product(range(p), repeat=2):
        cells = {tuple(c % p for c in cell) for cell in shape.cells(x)}
        for a in itertools.product(range(p), repeat=2):
            assert torus_covers(x, a, p) == (a in cells)


def test_torus_cells_count_preserved():
    # p >= 4 keeps all 2^n (n+1) cells distinct after reduction
    shape = upsilon_offsets(3)
    for p in (4, 5, 12):
        assert len(shape.torus_cells((1, 2, 3), p)) == 2**3 * 4


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        hamming_distance((0, 1), (0, 1, 2))
    with pytest.raises(DimensionMismatch):
        cross_distance((0,), (0, 0))
