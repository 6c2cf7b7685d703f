"""
Small simple graphs and their chromatic and sigma polynomials.

P(G, lambda) is computed by deletion-contraction with a memo that lives for
one call. Writing P(G, lambda) = sum_k alpha_k(G) (lambda)_k, alpha_k(G) counts
the partitions of the vertex set into k independent sets, and the sigma
polynomial is sum_k alpha_k(G) x**k, which is U[P(G, y)].
"""

import itertools
import json
import logging
import os
import random
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .exactmath import (
    InternalInconsistency, Poly, falling_factorial_poly, poly_mul, to_falling,
)
from .umbra import r_bell_poly, umbral_eval

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 14


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..vertex_count-1. Edges are stored
    as (u, v) with u < v.
    """
    vertex_count: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError(f"Vertex count must be non-negative, got {self.vertex_count}")
        normalized = set()
        for edge in self.edges:
            try:
                u, v = (int(e) for e in edge)
            except (TypeError, ValueError) as exc:
                raise ValueError(f"Edge must be a pair of vertex indices: {edge!r}") from exc
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"Edge ({u}, {v}) outside 0..{self.vertex_count - 1}")
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise ValueError(f"Duplicate edge {pair}")
            normalized.add(pair)
        object.__setattr__(self, 'edges', frozenset(normalized))

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> 'Graph':
        index = {node: i for i, node in enumerate(sorted(nxg.nodes))}
        return cls(len(index), [(index[u], index[v]) for u, v in nxg.edges])

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def complete_graph(r: int) -> Graph:
    if r < 0:
        raise ValueError(f"Complete graph size must be non-negative, got {r}")
    return Graph.from_networkx(nx.complete_graph(r))


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A simple cycle needs at least 3 vertices, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def star_graph(n: int) -> Graph:
    """Star on n vertices: vertex 0 joined to every other vertex."""
    if n < 1:
        return Graph(0)
    return Graph.from_networkx(nx.star_graph(n - 1))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree on n vertices, decoded from a random Pruefer sequence."""
    if n <= 2:
        return path_graph(n)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on vertices 0..|g|-1, h shifted after it."""
    offset = g.vertex_count
    edges = list(g.edges) + [(u + offset, v + offset) for u, v in h.edges]
    return Graph(g.vertex_count + h.vertex_count, edges)


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, frozenset]:
    """Merge v into u (u < v), relabel to 0..n-2 and drop loops and parallels."""

    def relabel(w):
        if w == v:
            w = u
        return w - 1 if w > v else w

    merged = set()
    for a, b in edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return n - 1, frozenset(merged)


def _canonical_key(n: int, edges: frozenset) -> tuple:
    """
    Relabel by (degree, sorted neighbour degrees, index) and return the
    relabelled edge list. Equal keys mean isomorphic graphs; isomorphic
    graphs may still get different keys.
    """
    neighbours = [[] for _ in range(n)]
    for a, b in edges:
        neighbours[a].append(b)
        neighbours[b].append(a)
    degrees = [len(ns) for ns in neighbours]
    order = sorted(
        range(n),
        key=lambda w: (degrees[w], sorted(degrees[x] for x in neighbours[w]), w),
    )
    position = {w: i for i, w in enumerate(order)}
    relabelled = sorted(
        (min(position[a], position[b]), max(position[a], position[b])) for a, b in edges
    )
    return n, tuple(sorted(degrees)), tuple(relabelled)


def _components(n: int, edges: frozenset) -> list[tuple[int, frozenset]]:
    """Connected components, each relabelled to 0..size-1."""
    neighbours = [[] for _ in range(n)]
    for a, b in edges:
        neighbours[a].append(b)
        neighbours[b].append(a)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        members = []
        while stack:
            w = stack.pop()
            members.append(w)
            for x in neighbours[w]:
                if not seen[x]:
                    seen[x] = True
                    stack.append(x)
        position = {w: i for i, w in enumerate(sorted(members))}
        part_edges = frozenset(
            (position[a], position[b]) for a, b in edges if a in position
        )
        parts.append((len(members), part_edges))
    return parts


def _chromatic(n: int, edges: frozenset, memo: dict) -> Poly:
    if not edges:
        return Poly.monomial(n)
    if len(edges) == n * (n - 1) // 2:
        return falling_factorial_poly(n)
    key = _canonical_key(n, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached
    parts = _components(n, edges)
    if len(parts) > 1:
        result = Poly.constant(1)
        for size, part_edges in parts:
            result = poly_mul(result, _chromatic(size, part_edges, memo))
        memo[key] = result
        return result
    degrees = [0] * n
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    hub = max(range(n), key=lambda w: (degrees[w], -w))
    u, v = min(e for e in edges if hub in e)
    deleted = _chromatic(n, edges - {(u, v)}, memo)
    contracted = _chromatic(*_contract(n, edges, u, v), memo)
    result = deleted - contracted
    memo[key] = result
    return result


def _check_size(g: Graph, max_vertices: int):
    if g.vertex_count > max_vertices:
        raise ValueError(
            f"Graph has {g.vertex_count} vertices, above the limit of {max_vertices}; "
            f"raise it with --max-vertices or UMBRAL_RZ_MAX_VERTICES"
        )


def chromatic_poly(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Poly:
    _check_size(g, max_vertices)
    memo: dict = {}
    result = _chromatic(g.vertex_count, g.edges, memo)
    logger.debug('Chromatic polynomial of %s vertices, %s edges: %s memo entries',
                 g.vertex_count, len(g.edges), len(memo))
    return result


def alpha_coeffs(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[int]:
    """alpha_k(G) for k = 0..|V|, from the falling-factorial expansion of P(G, y)."""
    chrom = chromatic_poly(g, max_vertices)
    falling = to_falling(chrom).coeffs
    alphas = []
    for k in range(g.vertex_count + 1):
        value = falling[k] if k < len(falling) else 0
        if value < 0 or getattr(value, 'denominator', 1) != 1:
            raise InternalInconsistency(f"alpha_{k} is {value}, not a partition count")
        alphas.append(int(value))
    return alphas


def sigma_poly(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Poly:
    """sum_k alpha_k(G) x**k, cross-checked against U[P(G, y)]."""
    direct = Poly(alpha_coeffs(g, max_vertices))
    umbral = umbral_eval(chromatic_poly(g, max_vertices))
    if direct != umbral:
        raise InternalInconsistency(f"sigma polynomial routes disagree: {direct} != {umbral}")
    return direct


def count_proper_colorings(g: Graph, lam: int) -> int:
    """Exhaustive count of maps V -> {0..lam-1} with adjacent vertices coloured apart."""
    if lam < 0:
        raise ValueError(f"Colour count must be non-negative, got {lam}")
    edges = g.sorted_edges()
    count = 0
    for colouring in itertools.product(range(lam), repeat=g.vertex_count):
        if all(colouring[a] != colouring[b] for a, b in edges):
            count += 1
    return count


def union_sigma_closed_form(n: int, r: int) -> Poly:
    """
    sigma(T_n u K_r) for any tree T_n on n >= 1 vertices:
    x**r [x B_{n-1,r}(x) + r B_{n-1,r-1}(x)].
    """
    if n < 1:
        raise ValueError(f"A tree needs at least one vertex, got {n}")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    inner = poly_mul(Poly.x(), r_bell_poly(n - 1, r))
    if r:
        inner = inner + r * r_bell_poly(n - 1, r - 1)
    return poly_mul(Poly.monomial(r), inner)


def graph_to_json(g: Graph) -> dict:
    return {'vertices': g.vertex_count, 'edges': [list(e) for e in g.sorted_edges()]}


def graph_from_json(data) -> Graph:
    """Accept {"vertices": n, "edges": [[u, v], ...]} or its JSON text."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Graph is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or 'vertices' not in data:
        raise ValueError('Graph JSON needs a "vertices" count and an "edges" list')
    vertices = data['vertices']
    if not isinstance(vertices, int) or isinstance(vertices, bool):
        raise ValueError(f'"vertices" must be an integer, got {vertices!r}')
    return Graph(vertices, data.get('edges', []))


_PRESETS = {
    'path': path_graph,
    'cycle': cycle_graph,
    'complete': complete_graph,
    'star': star_graph,
    'empty': edgeless_graph,
}


def parse_graph(text: str) -> Graph:
    """A preset such as "path:5", inline JSON, or the path of a JSON file."""
    text = text.strip()
    if text.startswith('{'):
        return graph_from_json(text)
    name, sep, size = text.partition(':')
    if sep and name in _PRESETS:
        try:
            n = int(size)
        except ValueError as exc:
            raise ValueError(f"Bad graph preset {text!r}") from exc
        return _PRESETS[name](n)
    if os.path.exists(text):
        return graph_from_json(Path(text).read_text())
    raise ValueError(f"Not a graph preset, JSON object or existing file: {text!r}")
