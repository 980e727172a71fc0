"""Graph construction and query tests, with independent oracles for derived values."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intervalmesh import (
    Edge,
    Family,
    GridVertex,
    build_cylinder,
    build_even_cycle,
    build_path,
    build_torus,
    cartesian_product,
    diameter,
    graph_from_json_dict,
    graph_to_json_dict,
    is_bipartite,
    is_regular,
    max_degree,
)
from intervalmesh.errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    SchemaError,
)
from intervalmesh.grids import _assemble, dumps_canonical


def degree_by_edge_scan(g, v):
    # independent of the adjacency index: recount from the edge list
    return sum(1 for e in g.edges if v in (e.u, e.v))


def test_path_sizes():
    for m in (1, 2, 5):
        g = build_path(m)
        assert g.num_vertices == m
        assert g.num_edges == m - 1


def test_path_invalid():
    with pytest.raises(InvalidParameterError):
        build_path(0)


def test_even_cycle_basic():
    g = build_even_cycle(4)
    assert g.num_vertices == 4
    assert g.num_edges == 4
    assert all(g.degree(v) == 2 for v in g.vertices)
    assert g.n == 2 and g.m is None


def test_even_cycle_invalid():
    for bad in (2, 3, 5, 0, -4):
        with pytest.raises(InvalidParameterError):
            build_even_cycle(bad)


def test_cylinder_vertex_and_edge_counts():
    for m in (1, 2, 3, 7):
        for n in (2, 3, 5):
            g = build_cylinder(m, n)
            assert g.num_vertices == 2 * m * n
            assert g.num_edges == 2 * m * n + (m - 1) * 2 * n


def test_cylinder_invalid_parameters():
    with pytest.raises(InvalidParameterError):
        build_cylinder(0, 2)
    with pytest.raises(InvalidParameterError):
        build_cylinder(1, 1)


def test_cylinder_degrees():
    # layer count controls the maximum degree: 2 on a bare cycle, 3 with one
    # neighbor layer, 4 with layers on both sides
    assert max_degree(build_cylinder(1, 3)) == 2
    assert max_degree(build_cylinder(2, 2)) == 3
    assert max_degree(build_cylinder(3, 2)) == 4
    g = build_cylinder(3, 2)
    for v in g.vertices:
        assert g.degree(v) == degree_by_edge_scan(g, v)
        assert g.degree(v) in (3, 4)


def test_cylinder_m1_equals_even_cycle():
    c = build_cylinder(1, 2)
    cyc = build_even_cycle(4)
    assert c.vertices == cyc.vertices
    assert c.edges == cyc.edges


def test_is_regular_examples():
    assert is_regular(build_cylinder(2, 2))
    assert is_regular(build_cylinder(1, 4))
    assert not is_regular(build_cylinder(3, 2))
    assert is_regular(build_torus(2, 2))


def test_torus_counts_and_regularity():
    for m in (2, 3):
        for n in (2, 4):
            g = build_torus(m, n)
            assert g.num_vertices == 4 * m * n
            assert g.num_edges == 8 * m * n
            assert is_regular(g)
            assert max_degree(g) == 4


def test_torus_invalid_parameters():
    for m, n in ((1, 2), (2, 1), (0, 0)):
        with pytest.raises(InvalidParameterError):
            build_torus(m, n)


def test_bipartite_by_coordinate_parity():
    # (layer + ring) parity is a proper 2-coloring because every edge steps
    # one coordinate by 1 or wraps across an odd span
    for g in (build_cylinder(3, 3), build_torus(2, 3), build_even_cycle(6)):
        assert is_bipartite(g)
        for e in g.edges:
            pu = (e.u.layer + e.u.ring) % 2
            pv = (e.v.layer + e.v.ring) % 2
            assert pu != pv


def test_product_identity_factor():
    prod = cartesian_product(build_path(1), build_even_cycle(4))
    cyc = build_even_cycle(4)
    assert prod.vertices == cyc.vertices
    assert prod.edges == cyc.edges


def test_product_counts_frozen():
    g = cartesian_product(build_path(2), build_even_cycle(4))
    assert (g.num_vertices, g.num_edges) == (8, 12)
    h = cartesian_product(build_even_cycle(4), build_even_cycle(4))
    assert (h.num_vertices, h.num_edges) == (16, 32)
    assert is_regular(h) and max_degree(h) == 4


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=2, max_value=5))
def test_product_edge_count_law(m, n):
    g1 = build_path(m)
    g2 = build_even_cycle(2 * n)
    g = cartesian_product(g1, g2)
    assert g.num_vertices == g1.num_vertices * g2.num_vertices
    assert (
        g.num_edges
        == g1.num_vertices * g2.num_edges + g2.num_vertices * g1.num_edges
    )


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=2, max_value=5))
def test_cylinder_equals_product(m, n):
    direct = build_cylinder(m, n)
    prod = cartesian_product(build_path(m), build_even_cycle(2 * n))
    assert direct.vertices == prod.vertices
    assert direct.edges == prod.edges


def test_diameter_small_cases():
    assert diameter(build_even_cycle(4)) == 2
    assert diameter(build_even_cycle(8)) == 4
    for m, n in ((1, 2), (2, 2), (3, 4), (5, 2)):
        assert diameter(build_cylinder(m, n)) == m + n - 1


def floyd_warshall_diameter(g):
    verts = list(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    size = len(verts)
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(size)] for i in range(size)]
    for e in g.edges:
        i, j = idx[e.u], idx[e.v]
        dist[i][j] = dist[j][i] = 1
    for k in range(size):
        dk = dist[k]
        for i in range(size):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(size):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return max(max(row) for row in dist)


def test_diameter_torus_against_floyd_warshall():
    g = build_torus(2, 2)
    assert diameter(g) == 4
    assert diameter(g) == floyd_warshall_diameter(g)
    h = build_torus(2, 3)
    assert diameter(h) == floyd_warshall_diameter(h)


def test_diameter_disconnected_raises():
    g = _assemble(
        Family.PRODUCT, None, None, [GridVertex(1, 1), GridVertex(2, 2)], []
    )
    with pytest.raises(DisconnectedGraphError):
        diameter(g)


def test_edge_canonical_order_and_loop_rejection():
    a, b = GridVertex(2, 1), GridVertex(1, 3)
    assert Edge.between(a, b) == Edge.between(b, a)
    assert Edge.between(a, b).u < Edge.between(a, b).v
    with pytest.raises(InvalidParameterError):
        Edge.between(a, a)


def test_assemble_rejects_bad_structure():
    v1, v2 = GridVertex(1, 1), GridVertex(1, 2)
    with pytest.raises(InvalidParameterError):
        _assemble(Family.PRODUCT, None, None, [v1, v2], [(v1, v2), (v2, v1)])
    with pytest.raises(InvalidParameterError):
        _assemble(Family.PRODUCT, None, None, [v1], [(v1, v2)])
    with pytest.raises(InvalidParameterError):
        _assemble(Family.PRODUCT, None, None, [GridVertex(0, 1)], [])


def test_degree_unknown_vertex():
    g = build_even_cycle(4)
    with pytest.raises(InvalidParameterError):
        g.degree(GridVertex(9, 9))


def test_json_round_trip_all_families():
    graphs = [
        build_path(3),
        build_even_cycle(6),
        build_cylinder(2, 3),
        build_torus(2, 2),
        cartesian_product(build_path(2), build_even_cycle(4)),
    ]
    for g in graphs:
        doc = graph_to_json_dict(g)
        back = graph_from_json_dict(json.loads(json.dumps(doc)))
        assert back.family == g.family
        assert back.vertices == g.vertices
        assert back.edges == g.edges


def test_json_output_is_canonical():
    g = build_cylinder(2, 2)
    doc = graph_to_json_dict(g)
    assert doc["vertices"] == sorted(doc["vertices"])
    assert dumps_canonical(doc) == dumps_canonical(graph_to_json_dict(build_cylinder(2, 2)))


def test_json_schema_errors():
    doc = graph_to_json_dict(build_cylinder(2, 2))
    bad = dict(doc, family="moebius")
    with pytest.raises(SchemaError):
        graph_from_json_dict(bad)

    tampered = dict(doc)
    tampered["edges"] = doc["edges"][:-1]  # break the family law
    with pytest.raises(SchemaError):
        graph_from_json_dict(tampered)

    with pytest.raises(SchemaError):
        graph_from_json_dict({"family": "cylinder", "m": 2})

    inconsistent = dict(doc, n=None)
    with pytest.raises(SchemaError):
        graph_from_json_dict(inconsistent)

    dupe = dict(doc)
    dupe["edges"] = doc["edges"] + [doc["edges"][0]]
    with pytest.raises(SchemaError):
        graph_from_json_dict(dupe)

    with pytest.raises(SchemaError):
        graph_from_json_dict({**doc, "vertices": doc["vertices"] + [[1, 1]]})
