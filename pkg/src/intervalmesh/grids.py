"""Bipartite grid graphs on path, cycle, cylinder, and torus meshes.

Vertices carry 1-based ``(layer, ring)`` coordinates.  A cylinder on
``m`` layers and ``2n`` rings is the Cartesian product of a path with an
even cycle; the torus closes the layer factor into an even cycle too.
Edge lists are kept in a single canonical order so that serialization,
iteration, and search are deterministic.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    SchemaError,
)

__all__ = [
    "Family",
    "GridVertex",
    "Edge",
    "MeshGraph",
    "build_path",
    "build_even_cycle",
    "build_cylinder",
    "build_torus",
    "cartesian_product",
    "max_degree",
    "is_regular",
    "is_bipartite",
    "diameter",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "dumps_canonical",
]


class Family(str, Enum):
    PATH = "path"
    EVEN_CYCLE = "even_cycle"
    CYLINDER = "cylinder"
    TORUS = "torus"
    PRODUCT = "product"


class GridVertex(NamedTuple):
    layer: int
    ring: int


class Edge(NamedTuple):
    u: GridVertex
    v: GridVertex

    @classmethod
    def between(cls, a: GridVertex, b: GridVertex) -> "Edge":
        """Canonical (sorted-endpoint) edge; loops are rejected."""
        if a == b:
            raise InvalidParameterError(f"loop edge at {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class MeshGraph:
    """A finite simple graph with grid-coordinate vertices.

    ``vertices`` and ``edges`` are sorted tuples; ``adjacency``,
    ``incident``, and ``edge_set`` are derived lookups built once at
    assembly time and excluded from equality.
    """

    family: Family
    m: int | None
    n: int | None
    vertices: tuple[GridVertex, ...]
    edges: tuple[Edge, ...]
    adjacency: dict[GridVertex, tuple[GridVertex, ...]] = field(
        repr=False, compare=False
    )
    incident: dict[GridVertex, tuple[Edge, ...]] = field(repr=False, compare=False)
    edge_set: frozenset[Edge] = field(repr=False, compare=False)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: GridVertex) -> int:
        if v not in self.adjacency:
            raise InvalidParameterError(f"vertex {v} not in graph")
        return len(self.adjacency[v])

    def has_edge(self, a: GridVertex, b: GridVertex) -> bool:
        return Edge.between(a, b) in self.edge_set


def _assemble(
    family: Family,
    m: int | None,
    n: int | None,
    vertices: Iterable[GridVertex],
    edge_pairs: Iterable[tuple[GridVertex, GridVertex]],
) -> MeshGraph:
    vs = tuple(sorted(set(vertices)))
    if not vs:
        raise InvalidParameterError("graph needs at least one vertex")
    for v in vs:
        if v.layer < 1 or v.ring < 1:
            raise InvalidParameterError(f"vertex coordinates must be >= 1, got {v}")
    vset = set(vs)
    edges = []
    seen: set[Edge] = set()
    for a, b in edge_pairs:
        e = Edge.between(a, b)
        if e.u not in vset or e.v not in vset:
            raise InvalidParameterError(f"edge {e} leaves the vertex set")
        if e in seen:
            raise InvalidParameterError(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    edges.sort()
    adj: dict[GridVertex, list[GridVertex]] = {v: [] for v in vs}
    inc: dict[GridVertex, list[Edge]] = {v: [] for v in vs}
    for e in edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
        inc[e.u].append(e)
        inc[e.v].append(e)
    return MeshGraph(
        family=family,
        m=m,
        n=n,
        vertices=vs,
        edges=tuple(edges),
        adjacency={v: tuple(sorted(nb)) for v, nb in adj.items()},
        incident={v: tuple(es) for v, es in inc.items()},
        edge_set=frozenset(edges),
    )


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _ring_edges(layer: int, length: int) -> list[tuple[GridVertex, GridVertex]]:
    """Cycle edges within one layer: (j, j+1) for j < length, plus the wrap."""
    out = [
        (GridVertex(layer, j), GridVertex(layer, j + 1)) for j in range(1, length)
    ]
    out.append((GridVertex(layer, 1), GridVertex(layer, length)))
    return out


def build_path(m: int) -> MeshGraph:
    """Path on ``m`` vertices, laid out as layers 1..m on ring 1."""
    if m < 1:
        raise InvalidParameterError(f"path needs m >= 1, got {m}")
    vertices = [GridVertex(i, 1) for i in range(1, m + 1)]
    edges = [(GridVertex(i, 1), GridVertex(i + 1, 1)) for i in range(1, m)]
    return _assemble(Family.PATH, m, None, vertices, edges)


def build_even_cycle(length: int) -> MeshGraph:
    """Cycle on an even number of vertices, laid out as rings on layer 1."""
    if length < 4 or length % 2 != 0:
        raise InvalidParameterError(
            f"even cycle needs an even length >= 4, got {length}"
        )
    vertices = [GridVertex(1, j) for j in range(1, length + 1)]
    return _assemble(Family.EVEN_CYCLE, None, length // 2, vertices, _ring_edges(1, length))


def build_cylinder(m: int, n: int) -> MeshGraph:
    """Cylinder grid on ``m`` layers and ``2n`` rings.

    Layer ``i`` carries a cycle on rings 1..2n; consecutive layers are
    joined by one rung per ring.  Equals ``cartesian_product(build_path(m),
    build_even_cycle(2 * n))`` vertex for vertex.
    """
    if m < 1:
        raise InvalidParameterError(f"cylinder needs m >= 1, got m={m}")
    if n < 2:
        raise InvalidParameterError(f"cylinder needs n >= 2, got n={n}")
    width = 2 * n
    vertices = [
        GridVertex(i, j) for i in range(1, m + 1) for j in range(1, width + 1)
    ]
    edges: list[tuple[GridVertex, GridVertex]] = []
    for i in range(1, m + 1):
        edges.extend(_ring_edges(i, width))
    for i in range(1, m):
        for j in range(1, width + 1):
            edges.append((GridVertex(i, j), GridVertex(i + 1, j)))
    return _assemble(Family.CYLINDER, m, n, vertices, edges)


def build_torus(m: int, n: int) -> MeshGraph:
    """Torus grid on ``2m`` layers and ``2n`` rings.

    Both factors are even cycles, so the graph is 4-regular and bipartite.
    """
    if m < 2:
        raise InvalidParameterError(f"torus needs m >= 2, got m={m}")
    if n < 2:
        raise InvalidParameterError(f"torus needs n >= 2, got n={n}")
    height, width = 2 * m, 2 * n
    vertices = [
        GridVertex(i, j) for i in range(1, height + 1) for j in range(1, width + 1)
    ]
    edges: list[tuple[GridVertex, GridVertex]] = []
    for i in range(1, height + 1):
        edges.extend(_ring_edges(i, width))
    for j in range(1, width + 1):
        for i in range(1, height):
            edges.append((GridVertex(i, j), GridVertex(i + 1, j)))
        edges.append((GridVertex(1, j), GridVertex(height, j)))
    return _assemble(Family.TORUS, m, n, vertices, edges)


def cartesian_product(g1: MeshGraph, g2: MeshGraph) -> MeshGraph:
    """Cartesian product, with vertex (a, b) relabeled to grid coordinates.

    The layer of a product vertex is the 1-based rank of ``a`` among
    ``g1.vertices`` and the ring is the rank of ``b`` among ``g2.vertices``,
    so products of paths and even cycles coincide with the direct builders.
    """
    rank1 = {v: i for i, v in enumerate(g1.vertices, start=1)}
    rank2 = {v: i for i, v in enumerate(g2.vertices, start=1)}
    vertices = [
        GridVertex(rank1[a], rank2[b]) for a in g1.vertices for b in g2.vertices
    ]
    edges: list[tuple[GridVertex, GridVertex]] = []
    for a in g1.vertices:
        for e in g2.edges:
            edges.append(
                (GridVertex(rank1[a], rank2[e.u]), GridVertex(rank1[a], rank2[e.v]))
            )
    for b in g2.vertices:
        for e in g1.edges:
            edges.append(
                (GridVertex(rank1[e.u], rank2[b]), GridVertex(rank1[e.v], rank2[b]))
            )
    return _assemble(Family.PRODUCT, None, None, vertices, edges)


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------


def max_degree(g: MeshGraph) -> int:
    return max(len(g.adjacency[v]) for v in g.vertices)


def is_regular(g: MeshGraph) -> bool:
    degrees = {len(g.adjacency[v]) for v in g.vertices}
    return len(degrees) == 1


def is_bipartite(g: MeshGraph) -> bool:
    side: dict[GridVertex, int] = {}
    for start in g.vertices:
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _eccentricity(g: MeshGraph, start: GridVertex) -> int:
    dist = {start: 0}
    queue = deque([start])
    far = 0
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                far = max(far, dist[w])
                queue.append(w)
    if len(dist) != g.num_vertices:
        raise DisconnectedGraphError("graph is disconnected, diameter is infinite")
    return far


def diameter(g: MeshGraph) -> int:
    """Largest shortest-path distance, by breadth-first search per vertex."""
    return max(_eccentricity(g, v) for v in g.vertices)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_BUILDERS = {
    Family.PATH: lambda m, n: build_path(m),
    Family.EVEN_CYCLE: lambda m, n: build_even_cycle(2 * n),
    Family.CYLINDER: build_cylinder,
    Family.TORUS: build_torus,
}


def graph_to_json_dict(g: MeshGraph) -> dict:
    return {
        "family": g.family.value,
        "m": g.m,
        "n": g.n,
        "vertices": [[v.layer, v.ring] for v in g.vertices],
        "edges": [[[e.u.layer, e.u.ring], [e.v.layer, e.v.ring]] for e in g.edges],
    }


def _parse_vertex(obj: object) -> GridVertex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(c, int) and not isinstance(c, bool) for c in obj)
    ):
        raise SchemaError(f"vertex must be a [layer, ring] pair of integers, got {obj!r}")
    return GridVertex(obj[0], obj[1])


def _parse_optional_size(d: dict, key: str) -> int | None:
    value = d.get(key)
    if value is None:
        return None
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaError(f"{key!r} must be an integer or null, got {value!r}")
    return value


def graph_from_json_dict(d: dict) -> MeshGraph:
    """Parse and validate a graph document.

    Recognized families are rebuilt from (m, n) and must match the listed
    vertices and edges exactly; ``product`` graphs are taken as listed.
    """
    if not isinstance(d, dict):
        raise SchemaError("graph document must be a JSON object")
    for key in ("family", "vertices", "edges"):
        if key not in d:
            raise SchemaError(f"graph document is missing {key!r}")
    try:
        family = Family(d["family"])
    except ValueError:
        raise SchemaError(f"unknown family {d['family']!r}") from None
    m = _parse_optional_size(d, "m")
    n = _parse_optional_size(d, "n")
    if not isinstance(d["vertices"], list) or not isinstance(d["edges"], list):
        raise SchemaError("'vertices' and 'edges' must be arrays")
    vertices = [_parse_vertex(v) for v in d["vertices"]]
    pairs = []
    for item in d["edges"]:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise SchemaError(f"edge must be a pair of vertices, got {item!r}")
        pairs.append((_parse_vertex(item[0]), _parse_vertex(item[1])))
    if len(set(vertices)) != len(vertices):
        raise SchemaError("duplicate vertices in document")
    try:
        g = _assemble(family, m, n, vertices, pairs)
    except InvalidParameterError as exc:
        raise SchemaError(str(exc)) from None
    if family in _BUILDERS:
        if family is Family.PATH:
            ok_params = m is not None and n is None
        elif family is Family.EVEN_CYCLE:
            ok_params = m is None and n is not None
        else:
            ok_params = m is not None and n is not None
        if not ok_params:
            raise SchemaError(f"family {family.value!r} has inconsistent m/n")
        try:
            expected = _BUILDERS[family](m, n)
        except InvalidParameterError as exc:
            raise SchemaError(str(exc)) from None
        if expected.vertices != g.vertices or expected.edges != g.edges:
            raise SchemaError(
                f"listed vertices/edges do not match family {family.value!r} "
                f"with m={m}, n={n}"
            )
    return g


def dumps_canonical(d: dict) -> str:
    """Stable JSON rendering used for every file the package writes."""
    return json.dumps(d, indent=2, sort_keys=False) + "\n"
