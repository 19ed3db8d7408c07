"""Graph representation, DIMACS / edge-list input and output, and family generators."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

from . import vocabulary as vb
from .errors import FamilyParameterError, GraphError, InstanceTooLargeError, ParseError

logger = logging.getLogger(__name__)


class FamilyEnum(enum.Enum):
    """graph family enum"""
    COMPLETE = vb.COMPLETE
    PATH = vb.PATH
    CYCLE = vb.CYCLE
    WHEEL = vb.WHEEL
    COMPLETE_BIPARTITE = vb.COMPLETE_BIPARTITE
    COMPLETE_MULTIPARTITE = vb.COMPLETE_MULTIPARTITE
    STAR = vb.STAR

    @classmethod
    def from_name(cls, name: str) -> FamilyEnum:
        """Accepts 'complete-bipartite' as well as 'complete_bipartite'"""
        try:
            return cls(name.strip().lower().replace('-', '_'))
        except ValueError:
            available = ", ".join(f.value for f in cls)
            raise FamilyParameterError(f"Unknown family '{name}'. Please use one of the following: {available}")

    @property
    def uses_parts(self) -> bool:
        return self in (FamilyEnum.COMPLETE_BIPARTITE, FamilyEnum.COMPLETE_MULTIPARTITE)


# smallest n accepted by the single-parameter families
FAMILY_MINIMUM = {
    FamilyEnum.COMPLETE: 1,
    FamilyEnum.PATH: 1,
    FamilyEnum.CYCLE: 3,
    FamilyEnum.WHEEL: 4,
    FamilyEnum.STAR: 2,
}


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on the dense vertices 0..n-1.
    edges holds (u, v) pairs with u < v; labels keeps the input name of every vertex.
    """
    n: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"a graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not a normalized pair in [0, {self.n})")
        if not self.labels:
            object.__setattr__(self, 'labels', tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels given for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Iterable[int] = ()) -> Graph:
        """Normalizes the pairs and drops duplicates"""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            normalized.add((min(u, v), max(u, v)))
        return cls(n=n, edges=frozenset(normalized), labels=tuple(labels))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> Graph:
        """Nodes are sorted and re-indexed, the original node names become labels"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = ((index[u], index[v]) for u, v in nx_graph.edges() if u != v)
        labels = nodes if all(isinstance(node, int) for node in nodes) else range(len(nodes))
        return cls.from_edges(len(nodes), edges, labels)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.sorted_edges)
        return nx_graph

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of every vertex as a bit mask"""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class FamilySpec:
    """
    A member of one of the standard graph families.
    Single-parameter families use n, complete_(bi|multi)partite use parts.
    """
    family: FamilyEnum
    n: int | None = None
    parts: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family.uses_parts:
            if self.parts is None:
                raise FamilyParameterError(f"'{self.family.value}' requires part sizes")
            object.__setattr__(self, 'parts', tuple(self.parts))
            if self.family is FamilyEnum.COMPLETE_BIPARTITE and len(self.parts) != 2:
                raise FamilyParameterError(f"'{self.family.value}' requires exactly 2 part sizes, got {len(self.parts)}")
            if self.family is FamilyEnum.COMPLETE_MULTIPARTITE and len(self.parts) < 2:
                raise FamilyParameterError(family=self.family.value, parameter="number of parts", minimum=2)
            if min(self.parts) < 1:
                raise FamilyParameterError(family=self.family.value, parameter="part size", minimum=1)
        else:
            if self.n is None:
                raise FamilyParameterError(f"'{self.family.value}' requires n")
            minimum = FAMILY_MINIMUM[self.family]
            if self.n < minimum:
                raise FamilyParameterError(family=self.family.value, parameter="n", minimum=minimum)

    @classmethod
    def from_name(cls, name: str, n: int | None = None, parts: Iterable[int] | None = None) -> FamilySpec:
        family = FamilyEnum.from_name(name)
        if family.uses_parts:
            return cls(family, parts=tuple(parts) if parts is not None else None)
        return cls(family, n=n)

    @property
    def order(self) -> int:
        """Number of vertices of the generated graph"""
        return sum(self.parts) if self.family.uses_parts else self.n

    @property
    def label(self) -> str:
        if self.family.uses_parts:
            return f"{self.family.value}({','.join(str(p) for p in self.parts)})"
        return f"{self.family.value}({self.n})"

    @property
    def parameters(self) -> str:
        if self.family.uses_parts:
            return f"parts={','.join(str(p) for p in self.parts)}"
        return f"n={self.n}"


def generate_family(spec: FamilySpec, max_vertices: int | None = None) -> Graph:
    """
    Raises InstanceTooLargeError before building anything when spec.order exceeds max_vertices.
    wheel(n) has n vertices: hub 0 joined to the rim cycle 1..n-1.
    star(n) is complete_bipartite(1, n-1) with the hub on vertex 0.
    """
    _check_order(spec.order, max_vertices)
    family = spec.family
    if family is FamilyEnum.COMPLETE:
        nx_graph = nx.complete_graph(spec.n)
    elif family is FamilyEnum.PATH:
        nx_graph = nx.path_graph(spec.n)
    elif family is FamilyEnum.CYCLE:
        nx_graph = nx.cycle_graph(spec.n)
    elif family is FamilyEnum.WHEEL:
        nx_graph = nx.wheel_graph(spec.n)
    elif family is FamilyEnum.STAR:
        nx_graph = nx.star_graph(spec.n - 1)
    elif family is FamilyEnum.COMPLETE_BIPARTITE:
        nx_graph = nx.complete_bipartite_graph(*spec.parts)
    else:
        nx_graph = nx.complete_multipartite_graph(*spec.parts)
    logger.debug("generated %s with %s edges", spec.label, nx_graph.number_of_edges())
    return Graph.from_networkx(nx_graph)


def _check_order(n: int, max_vertices: int | None) -> None:
    if max_vertices is not None and n > max_vertices:
        raise InstanceTooLargeError(n=n, limit=max_vertices)


def decode_graph_text(data: bytes) -> str:
    """UTF-8 input, a bad byte is a ParseError on its line"""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_no = data.count(b"\n", 0, e.start) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line=line_no)


def _int_token(token: str, line_no: int, line: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"'{token}' is not an integer", line=line_no, text=line)


def parse_dimacs(text: str | Iterable[str], max_vertices: int | None = None) -> Graph:
    """
    DIMACS .col: 'c' comment lines, one 'p edge N M' line, then 'e u v' lines with
    1-based vertices. Duplicate edges collapse, vertices become 0-based.
    A vertex count above max_vertices stops the parse at the 'p' line.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    edges = set()
    declared_m = None
    for line_no, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            if n is not None:
                raise ParseError("duplicate 'p' line", line=line_no, text=line)
            if len(tokens) != 4 or tokens[1] not in ('edge', 'col'):
                raise ParseError("expected 'p edge N M'", line=line_no, text=line)
            n = _int_token(tokens[2], line_no, line)
            declared_m = _int_token(tokens[3], line_no, line)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", line=line_no, text=line)
            _check_order(n, max_vertices)
        elif tokens[0] == 'e':
            if n is None:
                raise ParseError("edge line before the 'p edge' line", line=line_no, text=line)
            if len(tokens) != 3:
                raise ParseError("expected 'e u v'", line=line_no, text=line)
            u = _int_token(tokens[1], line_no, line)
            v = _int_token(tokens[2], line_no, line)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} out of range 1..{n}", line=line_no, text=line)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", line=line_no, text=line)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unknown line type '{tokens[0]}'", line=line_no, text=line)

    if n is None:
        raise ParseError("missing 'p edge N M' line")
    if declared_m != len(edges):
        logger.debug("'p' line declares %s edges, %s distinct edges read", declared_m, len(edges))
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def parse_edge_list(text: str | Iterable[str], max_vertices: int | None = None) -> Graph:
    """
    One 'u v' pair of 0-based vertices per line. An optional first line 'n <count>'
    declares the vertex count, isolated vertices included. '#' starts a comment.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    declared_n = None
    declared_line = None
    edges = set()
    max_vertex = -1
    max_line = None
    seen_content = False
    for line_no, line in enumerate(lines, start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == 'n' and not seen_content:
            if len(tokens) != 2:
                raise ParseError("expected 'n <count>'", line=line_no, text=line)
            declared_n = _int_token(tokens[1], line_no, line)
            declared_line = line_no
            if declared_n < 1:
                raise ParseError(f"vertex count must be >= 1, got {declared_n}", line=line_no, text=line)
            _check_order(declared_n, max_vertices)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise ParseError("expected 'u v'", line=line_no, text=line)
        u = _int_token(tokens[0], line_no, line)
        v = _int_token(tokens[1], line_no, line)
        if u < 0 or v < 0:
            raise ParseError("vertex indices must be >= 0", line=line_no, text=line)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", line=line_no, text=line)
        edges.add((min(u, v), max(u, v)))
        _check_order(max(u, v) + 1, max_vertices)
        if max(u, v) > max_vertex:
            max_vertex = max(u, v)
            max_line = line_no

    if declared_n is None:
        if max_vertex < 0:
            raise ParseError("no edges and no 'n <count>' line")
        n = max_vertex + 1
    else:
        if declared_n < max_vertex + 1:
            raise ParseError(
                f"declared n={declared_n} (line {declared_line}) is smaller than max index + 1 = {max_vertex + 1}",
                line=max_line
                )
        n = declared_n
    return Graph.from_edges(n, edges)


def parse_graph(text: str, max_vertices: int | None = None) -> Graph:
    """A leading 'p' line (after 'c' comments) means DIMACS, otherwise edge list"""
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            return parse_dimacs(text, max_vertices)
        break
    return parse_edge_list(text, max_vertices)


def write_dimacs(graph: Graph) -> str:
    out = [f"p edge {graph.n} {graph.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in graph.sorted_edges)
    return "\n".join(out) + "\n"


def write_edge_list(graph: Graph) -> str:
    out = [f"n {graph.n}"]
    out.extend(f"{u} {v}" for u, v in graph.sorted_edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GraphDiagnostics:
    """Connectivity and degree summary of a graph"""
    n: int
    m: int
    connected: bool
    components: int
    min_degree: int
    max_degree: int

    @property
    def regular(self) -> bool:
        return self.min_degree == self.max_degree

    @property
    def flat_dict(self) -> dict:
        return {
            vb.N: self.n,
            vb.M: self.m,
            vb.CONNECTED: self.connected,
            vb.COMPONENTS: self.components,
            vb.MIN_DEGREE: self.min_degree,
            vb.MAX_DEGREE: self.max_degree,
            vb.REGULAR: self.regular,
            }


def validate(graph: Graph) -> GraphDiagnostics:
    """
    Disconnected graphs are valid input for every operation; callers decide whether to warn.
    """
    components = nx.number_connected_components(graph.to_networkx())
    degrees = [graph.degree(v) for v in range(graph.n)]
    return GraphDiagnostics(
        n=graph.n,
        m=graph.m,
        connected=components == 1,
        components=components,
        min_degree=min(degrees),
        max_degree=max(degrees),
        )
