"""Bound formula and table tests."""

from __future__ import annotations

import pytest

from intervalmesh import (
    Family,
    GridVertex,
    bounds_table,
    bounds_table_csv,
    build_cylinder,
    build_torus,
    lower_bound,
    theorem1_upper,
)
from intervalmesh.bounds import BOUNDS_COLUMNS, bounds_row
from intervalmesh.errors import InvalidParameterError, NonBipartiteError
from intervalmesh.grids import _assemble


def test_theorem1_upper_small():
    assert theorem1_upper(build_cylinder(1, 2)) == 3  # ring of four
    assert theorem1_upper(build_torus(2, 2)) == 13


def test_theorem1_upper_matches_closed_form_for_wide_cylinders():
    for m in range(3, 7):
        for n in range(2, 7):
            assert theorem1_upper(build_cylinder(m, n)) == 3 * m + 3 * n - 2


def test_theorem1_upper_rejects_odd_cycles():
    tri = [GridVertex(1, 1), GridVertex(1, 2), GridVertex(1, 3)]
    g = _assemble(
        Family.PRODUCT,
        None,
        None,
        tri,
        [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])],
    )
    with pytest.raises(NonBipartiteError):
        theorem1_upper(g)


def test_lower_bound_values():
    assert lower_bound("cylinder", 3, 2) == 9
    assert lower_bound("torus", 2, 3) == 11
    assert lower_bound("cylinder", 1, 2) == 3
    assert lower_bound("torus", 3, 2) == 11  # transposed witness


def test_lower_bound_rejects_bad_parameters():
    with pytest.raises(InvalidParameterError):
        lower_bound("cylinder", 0, 2)
    with pytest.raises(InvalidParameterError):
        lower_bound("path", 3, 3)


def test_lower_bound_monotonicity():
    for family in ("cylinder", "torus"):
        lo = 1 if family == "cylinder" else 2
        for m in range(lo, 5):
            for n in range(2, 5):
                here = lower_bound(family, m, n)
                assert lower_bound(family, m + 1, n) > here
                assert lower_bound(family, m, n + 1) > here


def test_bounds_rows_frozen_examples():
    row = bounds_row("torus", 2, 2)
    assert (row.delta, row.diam, row.w_claimed) == (4, 4, 4)
    assert (row.lower_W, row.upper_W) == (8, 13)

    row = bounds_row("cylinder", 2, 2)
    assert (row.delta, row.w_claimed) == (3, 3)
    assert (row.lower_W, row.upper_W) == (6, 7)


def test_bounds_table_cylinder_grid():
    rows = bounds_table(["cylinder"], (1, 3), (2, 3))
    assert len(rows) == 6
    for row in rows:
        assert row.lower_W <= row.upper_W
        assert row.w_exact is None and row.W_exact is None


def test_bounds_table_oracle_columns():
    rows = bounds_table(["cylinder"], (1, 2), (2, 3), oracle_budget=16)
    by_key = {(r.m, r.n): r for r in rows}
    assert (by_key[(1, 2)].w_exact, by_key[(1, 2)].W_exact) == (2, 3)
    assert (by_key[(2, 2)].w_exact, by_key[(2, 2)].W_exact) == (3, 6)
    assert by_key[(2, 3)].w_exact is None  # 18 edges, over budget
    for row in rows:
        if row.w_exact is not None:
            assert row.w_claimed == row.w_exact
            assert row.lower_W <= row.W_exact <= row.upper_W


def test_bounds_table_skips_invalid_torus_sizes():
    rows = bounds_table(["torus"], (1, 2), (2, 2))
    assert [(r.m, r.n) for r in rows] == [(2, 2)]


def test_bounds_table_rejects_empty_ranges():
    with pytest.raises(InvalidParameterError):
        bounds_table(["cylinder"], (3, 1), (2, 2))


def test_csv_rendering():
    rows = bounds_table(["cylinder"], (1, 1), (2, 3), oracle_budget=4)
    text = bounds_table_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(BOUNDS_COLUMNS)
    assert len(lines) == 3
    assert lines[1] == "cylinder,1,2,2,2,2,3,3,2,3"
    assert lines[2].endswith(",,")  # the six-edge ring sits over the 4-edge budget
