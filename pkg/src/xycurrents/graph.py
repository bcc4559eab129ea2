"""Finite coupled graphs, oriented edges, and integer vertex functions.

The model is a finite simple graph on vertices 0..V-1 with a strictly
positive rational coupling attached to every edge.  Each unoriented edge
{u, v} is stored canonically as the pair (min(u, v), max(u, v)); throughout
the package "forward" on an edge means this canonical direction.  Couplings
are exact ``Fraction`` values so that every downstream series coefficient is
an exact rational; only the numerical oracle converts to floating point.

Integer-valued vertex functions (current sources, observable exponent
vectors) are wrapped in :class:`SourceFunction`, which supports the pointwise
arithmetic the counting identities need (f + g, -f + g, negation).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping


class GraphError(ValueError):
    """Invalid graph description.

    ``reason`` is a stable machine-readable tag, one of: ``"self-loop"``,
    ``"duplicate-edge"``, ``"nonpositive-coupling"``, ``"dangling-endpoint"``,
    ``"bad-vertices"``, ``"bad-coupling"``.
    """

    def __init__(self, reason: str, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Graph:
    """Finite simple graph with positive rational couplings.

    ``vertices`` is always the dense tuple (0, 1, ..., V-1).  ``edges[i]`` is
    the i-th unoriented edge as a canonically ordered pair (u, v) with u < v,
    and ``couplings[i]`` is its coupling.  Instances are immutable and
    hashable, so they can be shared freely and used as cache keys.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    couplings: tuple[Fraction, ...]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def endpoints(self, edge_index: int) -> tuple[int, int]:
        return self.edges[edge_index]

    def edge_index(self, u: int, v: int) -> int:
        """Index of the unoriented edge {u, v}; KeyError if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self.edges.index(key)
        except ValueError:
            raise KeyError(f"no edge {{{u},{v}}} in graph") from None

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"u": u, "v": v, "J": format_rational(j)}
                for (u, v), j in zip(self.edges, self.couplings)
            ],
        }


@dataclass(frozen=True)
class OrientedEdge:
    """One of the two orientations of an unoriented edge.

    ``base`` is the index of the underlying edge in ``graph.edges``; the
    orientation with ``tail < head`` is the canonical (forward) one.
    """

    tail: int
    head: int
    base: int

    @property
    def is_forward(self) -> bool:
        return self.tail < self.head


def oriented_edges(graph: Graph) -> tuple[OrientedEdge, ...]:
    """Both orientations of every edge, forward then backward per base edge."""
    out = []
    for i, (u, v) in enumerate(graph.edges):
        out.append(OrientedEdge(u, v, i))
        out.append(OrientedEdge(v, u, i))
    return tuple(out)


def parse_rational(value) -> Fraction:
    """Parse a coupling given as int, Fraction, or a "p/q" / "p" string."""
    if isinstance(value, bool):
        raise GraphError("bad-coupling", f"coupling must be a rational, got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError("bad-coupling", f"cannot parse coupling {value!r}: {exc}") from None
    raise GraphError("bad-coupling", f"coupling must be int or 'p/q' string, got {type(value).__name__}")


def format_rational(x: Fraction) -> str:
    """Serialize an exact rational as an explicit "p/q" string."""
    return f"{x.numerator}/{x.denominator}"


def build_graph(spec: Mapping) -> Graph:
    """Validate an instance description and return the Graph.

    ``spec`` maps "vertices" to a list of ints (a permutation of 0..V-1) and
    "edges" to a list of {"u": int, "v": int, "J": rational} objects.  Each
    malformed input raises :class:`GraphError` with a distinct ``reason``.
    Identical specs produce identical internal indexing: edges keep their
    input order and each is stored with tail < head.
    """
    try:
        raw_vertices = list(spec["vertices"])
        raw_edges = list(spec.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise GraphError("bad-vertices", f"instance description missing fields: {exc}") from None

    if any(not isinstance(v, int) or isinstance(v, bool) for v in raw_vertices):
        raise GraphError("bad-vertices", "vertex ids must be integers")
    if sorted(raw_vertices) != list(range(len(raw_vertices))):
        raise GraphError(
            "bad-vertices",
            f"vertex ids must be the dense range 0..{len(raw_vertices) - 1}, got {raw_vertices}",
        )
    num_vertices = len(raw_vertices)

    edges: list[tuple[int, int]] = []
    couplings: list[Fraction] = []
    seen: set[tuple[int, int]] = set()
    for entry in raw_edges:
        try:
            u, v = int(entry["u"]), int(entry["v"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError("dangling-endpoint", f"malformed edge entry {entry!r}: {exc}") from None
        if u == v:
            raise GraphError("self-loop", f"self-loop at vertex {u}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise GraphError("dangling-endpoint", f"edge {{{u},{v}}} references an undeclared vertex")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError("duplicate-edge", f"duplicate edge {{{key[0]},{key[1]}}}")
        seen.add(key)
        coupling = parse_rational(entry.get("J", entry.get("coupling")))
        if coupling <= 0:
            raise GraphError("nonpositive-coupling", f"coupling {coupling} on edge {{{key[0]},{key[1]}}} is not positive")
        edges.append(key)
        couplings.append(coupling)

    return Graph(tuple(range(num_vertices)), tuple(edges), tuple(couplings))


def load_graph(path: str | Path) -> Graph:
    """Read a graph instance file (JSON) and validate it."""
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    return build_graph(spec)


def single_edge(coupling=1) -> Graph:
    """The graph with two vertices joined by one edge."""
    return build_graph({"vertices": [0, 1], "edges": [{"u": 0, "v": 1, "J": coupling}]})


def path_graph(num_vertices: int, coupling=1) -> Graph:
    """Path on ``num_vertices`` vertices with a uniform coupling."""
    if num_vertices < 1:
        raise GraphError("bad-vertices", "path needs at least one vertex")
    edges = [{"u": i, "v": i + 1, "J": coupling} for i in range(num_vertices - 1)]
    return build_graph({"vertices": list(range(num_vertices)), "edges": edges})


def cycle_graph(num_vertices: int, coupling=1) -> Graph:
    """Cycle on ``num_vertices`` >= 3 vertices with a uniform coupling."""
    if num_vertices < 3:
        raise GraphError("bad-vertices", "cycle needs at least three vertices")
    edges = [{"u": i, "v": (i + 1) % num_vertices, "J": coupling} for i in range(num_vertices)]
    return build_graph({"vertices": list(range(num_vertices)), "edges": edges})


@dataclass(frozen=True)
class SourceFunction:
    """Integer-valued function on the vertices of a fixed graph.

    Used both for current sources (net outflow per vertex) and for the
    exponent vectors of correlation observables.  The zero-sum condition is
    not enforced here; operations that require it check it themselves.
    """

    values: tuple[int, ...]

    @classmethod
    def zero(cls, num_vertices: int) -> "SourceFunction":
        return cls((0,) * num_vertices)

    @classmethod
    def from_dict(cls, mapping: Mapping, num_vertices: int) -> "SourceFunction":
        """Build from a sparse {vertex: value} map; JSON string keys accepted."""
        values = [0] * num_vertices
        for key, val in mapping.items():
            vertex = int(key)
            if not (0 <= vertex < num_vertices):
                raise ValueError(f"vertex {vertex} out of range 0..{num_vertices - 1}")
            values[vertex] = int(val)
        return cls(tuple(values))

    def to_dict(self) -> dict[str, int]:
        """Sparse JSON form: only nonzero entries, string vertex keys."""
        return {str(v): x for v, x in enumerate(self.values) if x != 0}

    def total(self) -> int:
        return sum(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def _check_compatible(self, other: "SourceFunction") -> None:
        if len(self.values) != len(other.values):
            raise ValueError("source functions live on different vertex sets")

    def __add__(self, other: "SourceFunction") -> "SourceFunction":
        self._check_compatible(other)
        return SourceFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "SourceFunction") -> "SourceFunction":
        self._check_compatible(other)
        return SourceFunction(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "SourceFunction":
        return SourceFunction(tuple(-a for a in self.values))

    def __getitem__(self, vertex: int) -> int:
        return self.values[vertex]

    def __len__(self) -> int:
        return len(self.values)
