from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusedhecke.errors import StochasticRegimeError
from fusedhecke.heckerep import BlockShape
from fusedhecke.vertexsim import (
    RNG_NAME,
    make_rng,
    region_scan,
    sample_grid,
    sample_vertex,
    weight_table,
)

HALF = F(1, 2)
T11 = weight_table(BlockShape(1, 1), HALF, 2)


def test_table_example():
    assert T11.probability((0, 1), (1, 0)) == F(1, 7)
    assert T11.probability((0, 1), (0, 1)) == F(6, 7)
    for k, l, z in ((1, 1, 2), (2, 2, 8), (1, 2, 5)):
        T = weight_table(BlockShape(k, l), HALF, z)
        assert T.rows[(0, 0)] == [((0, 0), 1)]
        assert all(sum(w for _, w in row) == 1 for row in T.rows.values())


def test_negative_regime_rejected_with_all_entries():
    with pytest.raises(StochasticRegimeError) as e:
        weight_table(BlockShape(1, 1), HALF, F(1, 3))
    assert sorted(v for *_, v in e.value.entries) == [-8, -2]


def test_csv_decimals():
    rows = T11.csv_rows()
    assert rows[0] == ["row", "column", "exact", "decimal"]
    assert ["(0,1)", "(1,0)", "1/7", "0.142857142857"] in rows


def test_single_support_row_is_deterministic():
    rng = make_rng(1)
    assert all(sample_vertex(T11, (1, 1), rng) == (1, 1) for _ in range(50))


def test_vertex_frequency():
    rng = make_rng(42)
    n = 100_000
    hits = sum(sample_vertex(T11, (0, 1), rng) == (1, 0) for _ in range(n))
    assert abs(F(hits, n) - F(1, 7)) <= F(1, 100)


def test_vertex_determinism():
    a, b = make_rng(9), make_rng(9)
    assert [sample_vertex(T11, (1, 0), a) for _ in range(200)] == [sample_vertex(T11, (1, 0), b) for _ in range(200)]
    with pytest.raises(ValueError):
        sample_vertex(T11, (2, 0), a)


def test_zero_boundary_fixed_point():
    g = sample_grid(T11, 6, 4, [0] * 4, [0] * 6, 5)
    assert all(v == 0 for row in g.horizontal for v in row)
    assert all(v == 0 for row in g.vertical for v in row)


def test_one_by_one_is_one_vertex():
    for seed in range(20):
        g = sample_grid(T11, 1, 1, [1], [0], seed)
        assert (g.horizontal[0][1], g.vertical[1][0]) == sample_vertex(T11, (0, 1), make_rng(seed))


def test_row_one_independent_of_height():
    tall = sample_grid(T11, 50, 50, [1] * 50, [0] * 50, 7)
    flat = sample_grid(T11, 50, 1, [1], [0] * 50, 7)
    assert tall.horizontal[0] == flat.horizontal[0]
    assert tall.vertical[1] == flat.vertical[1]


def test_first_column_statistics():
    # vertex (row 1, column 1) sees left=1, bottom=0; only the bottom row
    # matters, and it is drawn before any higher row
    runs = 10_000
    passes = sum(sample_grid(T11, 50, 1, [1], [0] * 50, 7 + r).horizontal[0][1] for r in range(runs))
    assert abs(F(passes, runs) - F(1, 7)) <= F(2, 100)


@settings(max_examples=25)
@given(st.integers(0, 2**64 - 1), st.sampled_from([(1, 1, 2), (1, 2, 5), (2, 2, 8), (2, 3, 9)]))
def test_grid_conservation(seed, klz):
    k, l, z = klz
    T = weight_table(BlockShape(k, l), HALF, z)
    left = [(seed >> i) % (l + 1) for i in range(7)]
    bottom = [(seed >> (3 * i)) % (k + 1) for i in range(8)]
    g = sample_grid(T, 8, 7, left, bottom, seed)
    assert g.conservation_defect() is None
    assert g == sample_grid(T, 8, 7, left, bottom, seed)
    assert all(0 <= v <= l for row in g.horizontal for v in row)
    assert all(0 <= v <= k for row in g.vertical for v in row)


def test_grid_validation_and_metadata():
    with pytest.raises(ValueError):
        sample_grid(T11, 2, 2, [2, 0], [0, 0], 0)
    with pytest.raises(ValueError):
        sample_grid(T11, 2, 2, [0], [0, 0], 0)
    g = sample_grid(T11, 2, 2, [1, 1], [0, 1], 0)
    d = g.to_json()
    assert d["metadata"]["rng"] == RNG_NAME and "mapping" in d["metadata"]
    assert len(d["horizontal"]) == 2 and len(d["horizontal"][0]) == 3
    assert len(d["vertical"]) == 3 and len(d["vertical"][0]) == 2
    assert g.edge_rows()[0] == ["kind", "row", "col", "value"]


def test_region_scan():
    runs = region_scan(BlockShape(1, 1), HALF, [F(i, 4) for i in range(-8, 20)])
    # (1,1): a_0 = (t-1)/(t-z) >= 0 and a_1 = (1-z)/(t-z) >= 0 need z <= t or z >= 1
    assert runs[-1] == (F(1), F(19, 4))
    assert all(z1 <= z2 for z1, z2 in runs)
