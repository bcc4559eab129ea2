"""Currents: nonnegative integer flows on the oriented edges of a graph.

A current assigns a nonnegative integer to each of the two orientations of
every edge.  Three derived quantities drive everything downstream:

* amplitude: per unoriented edge, the sum of the two oriented values;
* source:    per vertex, net outflow minus inflow (always sums to zero);
* weight:    the exact rational coefficient the current contributes to the
             expansion of exp(sum_e (J_e/2)(s_u conj(s_v) + conj(s_u) s_v)),
             namely prod over oriented edges of (J/2)^value / value!.

Enumeration comes in two modes: all currents with a fixed per-edge amplitude
vector (the grading used by the multigraph counts), or all currents whose
total amplitude is bounded by a degree cap (the truncation used by the
series).  Both streams are deterministic: lexicographic in edge index, then
in the oriented values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .graph import Graph, SourceFunction

# Per unoriented edge: nonnegative total flow.  Index-aligned with graph.edges.
EdgeAmplitude = tuple[int, ...]


@dataclass(frozen=True)
class Current:
    """A current on a fixed graph.

    ``values[i]`` is the pair (forward, backward) of flows on edge i, where
    forward means the canonical direction tail < head.
    """

    graph: Graph
    values: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.num_edges:
            raise ValueError("current does not match the graph's edge count")
        if any(f < 0 or b < 0 for f, b in self.values):
            raise ValueError("current values must be nonnegative")

    def amplitude(self) -> EdgeAmplitude:
        """Per-edge total flow: forward + backward."""
        return tuple(f + b for f, b in self.values)

    def source(self) -> SourceFunction:
        """Net outflow per vertex; the entries always sum to zero."""
        out = [0] * self.graph.num_vertices
        for (u, v), (fwd, bwd) in zip(self.graph.edges, self.values):
            out[u] += fwd - bwd
            out[v] += bwd - fwd
        return SourceFunction(tuple(out))

    def weight(self) -> Fraction:
        """Exact rational weight prod (J/2)^value / value! over orientations."""
        acc = Fraction(1)
        for coupling, (fwd, bwd) in zip(self.graph.couplings, self.values):
            half = coupling / 2
            acc *= half ** (fwd + bwd)
            acc /= math.factorial(fwd) * math.factorial(bwd)
        return acc

    def total_amplitude(self) -> int:
        return sum(f + b for f, b in self.values)

    def reversed(self) -> "Current":
        """The current with every orientation swapped.

        Reversal keeps the weight and negates the source; per-edge swaps keep
        the weight as well, since both orientations share one coupling.
        """
        return Current(self.graph, tuple((b, f) for f, b in self.values))

    def to_json_dict(self) -> dict[str, int]:
        """JSON form {"u->v": value} listing nonzero oriented values."""
        out: dict[str, int] = {}
        for (u, v), (fwd, bwd) in zip(self.graph.edges, self.values):
            if fwd:
                out[f"{u}->{v}"] = fwd
            if bwd:
                out[f"{v}->{u}"] = bwd
        return out

    @classmethod
    def from_json_dict(cls, graph: Graph, mapping: Mapping[str, int]) -> "Current":
        values = [[0, 0] for _ in range(graph.num_edges)]
        for key, val in mapping.items():
            tail_str, _, head_str = key.partition("->")
            tail, head = int(tail_str), int(head_str)
            idx = graph.edge_index(tail, head)
            values[idx][0 if tail < head else 1] = int(val)
        return cls(graph, tuple((f, b) for f, b in values))


def zero_current(graph: Graph) -> Current:
    return Current(graph, ((0, 0),) * graph.num_edges)


def _fixed_amplitude_values(amplitude: EdgeAmplitude) -> Iterator[tuple[tuple[int, int], ...]]:
    # Per edge the forward value runs 0..N_e and pins the backward value.
    per_edge = [[(f, n - f) for f in range(n + 1)] for n in amplitude]
    return itertools.product(*per_edge)


def _capped_values(num_edges: int, cap: int) -> Iterator[tuple[tuple[int, int], ...]]:
    if num_edges == 0:
        yield ()
        return
    for fwd in range(cap + 1):
        for bwd in range(cap - fwd + 1):
            for rest in _capped_values(num_edges - 1, cap - fwd - bwd):
                yield ((fwd, bwd),) + rest


def enumerate_currents(
    graph: Graph,
    *,
    amplitude: EdgeAmplitude | None = None,
    degree_cap: int | None = None,
    source: SourceFunction | None = None,
) -> Iterator[Current]:
    """Stream currents under an amplitude or total-degree constraint.

    Exactly one of ``amplitude`` (per-edge totals, fixed) or ``degree_cap``
    (total amplitude at most the cap) must be given.  With a fixed amplitude
    the unfiltered stream has exactly prod_e (N_e + 1) elements.  If
    ``source`` is given, only currents with that exact source are yielded; a
    source with nonzero total admits no currents at all.  Order is
    deterministic either way.
    """
    if (amplitude is None) == (degree_cap is None):
        raise ValueError("give exactly one of amplitude= or degree_cap=")
    if amplitude is not None:
        if len(amplitude) != graph.num_edges:
            raise ValueError("amplitude vector does not match the edge count")
        if any(n < 0 for n in amplitude):
            raise ValueError("amplitude entries must be nonnegative")
        stream = _fixed_amplitude_values(amplitude)
    else:
        if degree_cap < 0:
            raise ValueError("degree cap must be nonnegative")
        stream = _capped_values(graph.num_edges, degree_cap)

    for values in stream:
        current = Current(graph, values)
        if source is not None and current.source() != source:
            continue
        yield current


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def amplitude_vectors(num_edges: int, total_cap: int) -> Iterator[EdgeAmplitude]:
    """All amplitude vectors with total at most the cap.

    Ordered by ascending total, then lexicographically; this is the canonical
    sweep order used by reports and the command line front end.
    """
    if total_cap < 0:
        raise ValueError("total cap must be nonnegative")
    for total in range(total_cap + 1):
        yield from compositions(total, num_edges)


def sub_amplitudes(amplitude: EdgeAmplitude) -> Iterator[EdgeAmplitude]:
    """All vectors 0 <= a <= amplitude componentwise, lexicographic."""
    return itertools.product(*(range(n + 1) for n in amplitude))
