"""Multigraphs with distinguishable edge slots and two-color configurations.

Replacing each edge e of a coupled graph by N_e distinguishable parallel
slots gives a multigraph.  A colored configuration paints every slot red or
blue and orients it; the red slots and the blue slots each induce a current,
and the central quantities are exact counts of configurations with prescribed
per-color sources:

    count_two_color(N, f, g) = #{ configs : red source = f, blue source = g }
    count_one_color(N, f)    = #{ orientations of all slots : source = f }

Both counts have closed combinatorial forms.  Grouping two-color configs by
the red/blue current pair (n, m) with |n + m| = N gives the multinomial sum

    sum over pairs of  prod_e N_e! / (n_fwd! n_bwd! m_fwd! m_bwd!),

and the one-color count is  sum over currents n with |n| = N, source f of
prod_e binomial(N_e, n_fwd).  ``count_two_color`` keeps both routes: the
slot-level enumeration ("direct") is the obvious-by-construction oracle, the
multinomial sum ("multinomial") is the default.  Class-count tables bucketed
by source are memoized per (graph, N) because the verification sweeps hit the
same amplitude vector with many different source pairs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

from .currents import EdgeAmplitude
from .graph import Graph, SourceFunction


class Color(Enum):
    RED = "red"
    BLUE = "blue"


class Direction(Enum):
    FWD = "fwd"
    BWD = "bwd"

    def flipped(self) -> "Direction":
        return Direction.BWD if self is Direction.FWD else Direction.FWD


# One slot of a colored configuration; directions are relative to the
# canonical orientation of the slot's base edge.
ColoredSlot = tuple[Color, Direction]
ColoredConfig = tuple[ColoredSlot, ...]
OrientedConfig = tuple[Direction, ...]

_SLOT_STATES: tuple[ColoredSlot, ...] = (
    (Color.RED, Direction.FWD),
    (Color.RED, Direction.BWD),
    (Color.BLUE, Direction.FWD),
    (Color.BLUE, Direction.BWD),
)


@dataclass(frozen=True)
class Multigraph:
    """A graph together with an amplitude vector of distinguishable slots.

    Edge e contributes ``amplitude[e]`` slots; slot ids are global, dense,
    and grouped by edge in edge order, so ``slot_edge[s]`` is the base edge
    of slot s.
    """

    graph: Graph
    amplitude: EdgeAmplitude
    slot_edge: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.amplitude) != self.graph.num_edges:
            raise ValueError("amplitude vector does not match the edge count")
        if any(n < 0 for n in self.amplitude):
            raise ValueError("amplitude entries must be nonnegative")
        slot_edge = []
        for edge, count in enumerate(self.amplitude):
            slot_edge.extend([edge] * count)
        object.__setattr__(self, "slot_edge", tuple(slot_edge))

    @property
    def num_slots(self) -> int:
        return len(self.slot_edge)

    def slots_of_edge(self, edge: int) -> range:
        start = sum(self.amplitude[:edge])
        return range(start, start + self.amplitude[edge])


def sources_of_config(multigraph: Multigraph, config: ColoredConfig) -> tuple[SourceFunction, SourceFunction]:
    """Red and blue sources of a colored configuration.

    Each forward slot on edge (u, v) moves one unit u -> v in its color's
    current; backward slots move v -> u.  Both returned functions sum to
    zero.
    """
    if len(config) != multigraph.num_slots:
        raise ValueError("configuration does not match the multigraph's slot count")
    num_vertices = multigraph.graph.num_vertices
    red = [0] * num_vertices
    blue = [0] * num_vertices
    for slot, (color, direction) in enumerate(config):
        u, v = multigraph.graph.edges[multigraph.slot_edge[slot]]
        if direction is Direction.BWD:
            u, v = v, u
        acc = red if color is Color.RED else blue
        acc[u] += 1
        acc[v] -= 1
    return SourceFunction(tuple(red)), SourceFunction(tuple(blue))


def enumerate_all_configs(multigraph: Multigraph) -> Iterator[ColoredConfig]:
    """All 4^(number of slots) colored configurations, lexicographic in slots."""
    return itertools.product(_SLOT_STATES, repeat=multigraph.num_slots)


def enumerate_configs(
    multigraph: Multigraph,
    red_source: SourceFunction,
    blue_source: SourceFunction,
) -> Iterator[ColoredConfig]:
    """Colored configurations with the prescribed red and blue sources.

    Plain filtered slot enumeration over the full 4^(slots) space; intended
    for desk-scale amplitudes and as the reference for the counting methods.
    """
    for config in enumerate_all_configs(multigraph):
        red, blue = sources_of_config(multigraph, config)
        if red == red_source and blue == blue_source:
            yield config


def enumerate_orientations(multigraph: Multigraph) -> Iterator[OrientedConfig]:
    """All 2^(number of slots) colorless orientation assignments."""
    return itertools.product((Direction.FWD, Direction.BWD), repeat=multigraph.num_slots)


def oriented_source(multigraph: Multigraph, orientation: OrientedConfig) -> SourceFunction:
    """Source of a colorless orientation assignment."""
    num_vertices = multigraph.graph.num_vertices
    out = [0] * num_vertices
    for slot, direction in enumerate(orientation):
        u, v = multigraph.graph.edges[multigraph.slot_edge[slot]]
        if direction is Direction.BWD:
            u, v = v, u
        out[u] += 1
        out[v] -= 1
    return SourceFunction(tuple(out))


@lru_cache(maxsize=None)
def one_color_class_counts(graph: Graph, amplitude: EdgeAmplitude) -> Mapping[SourceFunction, int]:
    """Orientation counts of the N-slot multigraph, bucketed by source.

    Entry f holds  sum over currents n with |n| = N, source f  of
    prod_e binomial(N_e, n_fwd); keys cover exactly the realizable sources.
    Memoized per (graph, N); the returned mapping is read-only.
    """
    table: dict[tuple[int, ...], int] = {}
    src = [0] * graph.num_vertices
    edges = graph.edges

    def descend(edge: int, coeff: int) -> None:
        if edge == len(edges):
            key = tuple(src)
            table[key] = table.get(key, 0) + coeff
            return
        u, v = edges[edge]
        n_e = amplitude[edge]
        for fwd in range(n_e + 1):
            delta = 2 * fwd - n_e
            src[u] += delta
            src[v] -= delta
            descend(edge + 1, coeff * math.comb(n_e, fwd))
            src[u] -= delta
            src[v] += delta

    descend(0, 1)
    return MappingProxyType({SourceFunction(k): c for k, c in table.items()})


@lru_cache(maxsize=None)
def two_color_class_counts(
    graph: Graph, amplitude: EdgeAmplitude
) -> Mapping[tuple[SourceFunction, SourceFunction], int]:
    """Two-color configuration counts bucketed by (red source, blue source).

    Entry (f, g) is the multinomial sum over red/blue current pairs (n, m)
    with source n = f, source m = g and |n + m| = N of
    prod_e N_e! / (n_fwd! n_bwd! m_fwd! m_bwd!).  The values over all keys
    sum to 4^(total amplitude).  Memoized per (graph, N); read-only result.
    """
    table: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    red = [0] * graph.num_vertices
    blue = [0] * graph.num_vertices
    edges = graph.edges

    def descend(edge: int, coeff: int) -> None:
        if edge == len(edges):
            key = (tuple(red), tuple(blue))
            table[key] = table.get(key, 0) + coeff
            return
        u, v = edges[edge]
        n_e = amplitude[edge]
        for n_fwd in range(n_e + 1):
            c1 = math.comb(n_e, n_fwd)
            for n_bwd in range(n_e - n_fwd + 1):
                c2 = c1 * math.comb(n_e - n_fwd, n_bwd)
                red_delta = n_fwd - n_bwd
                red[u] += red_delta
                red[v] -= red_delta
                rest = n_e - n_fwd - n_bwd
                for m_fwd in range(rest + 1):
                    c3 = c2 * math.comb(rest, m_fwd)
                    blue_delta = 2 * m_fwd - rest
                    blue[u] += blue_delta
                    blue[v] -= blue_delta
                    descend(edge + 1, coeff * c3)
                    blue[u] -= blue_delta
                    blue[v] += blue_delta
                red[u] -= red_delta
                red[v] += red_delta

    descend(0, 1)
    return MappingProxyType(
        {(SourceFunction(r), SourceFunction(b)): c for (r, b), c in table.items()}
    )


def count_one_color(graph: Graph, amplitude: EdgeAmplitude, source: SourceFunction) -> int:
    """Number of orientations of the N-slot multigraph with the given source.

    Zero whenever the source has nonzero total, and more generally whenever
    the parity of some vertex's source does not match its slot degree.
    """
    _check_source(graph, source)
    return one_color_class_counts(graph, tuple(amplitude)).get(source, 0)


def count_two_color(
    graph: Graph,
    amplitude: EdgeAmplitude,
    red_source: SourceFunction,
    blue_source: SourceFunction,
    method: str = "multinomial",
) -> int:
    """Number of colored configurations with the given per-color sources.

    ``method="multinomial"`` evaluates the closed multinomial sum (memoized
    per amplitude); ``method="direct"`` literally enumerates the 4^(slots)
    configuration space.  The two must agree exactly.  Sources with nonzero
    total give 0 rather than an error so sweep loops stay total.
    """
    _check_source(graph, red_source)
    _check_source(graph, blue_source)
    if method == "multinomial":
        return two_color_class_counts(graph, tuple(amplitude)).get((red_source, blue_source), 0)
    if method == "direct":
        multigraph = Multigraph(graph, tuple(amplitude))
        return sum(1 for _ in enumerate_configs(multigraph, red_source, blue_source))
    raise ValueError(f"unknown counting method {method!r}")


def _check_source(graph: Graph, source: SourceFunction) -> None:
    if len(source) != graph.num_vertices:
        raise ValueError("source function does not match the graph's vertex count")
