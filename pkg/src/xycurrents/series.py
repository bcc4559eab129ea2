"""Exact truncated current series and the count-level Ginibre certificate.

Sums over currents are graded by the per-edge amplitude vector N and
truncated by the total amplitude sum; every coefficient is an exact rational.
The module provides:

* the truncated partition function  sum over sourceless currents of weight;
* truncated correlations  <s^phi> = sourced sum / sourceless sum;
* per-amplitude coefficient identities tying the current-pair expansion to
  the two-color multigraph counts;
* the Ginibre gap: per amplitude vector, the integer

      count(N, phi+psi, 0) + count(N, phi-psi, 0) - 2 count(N, phi, psi)

  which equals (count_one_color(N, phi+psi) - count_one_color(N, phi-psi))^2
  and is therefore nonnegative, and its weighted series, which certifies the
  truncated correlation inequality
  <s^(phi+psi)> + <s^(phi-psi)> >= 2 <s^phi> <s^psi>.

Truncation is the package's own device; convergence is judged by the relative
change between consecutive caps, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .currents import (
    EdgeAmplitude,
    amplitude_vectors,
    enumerate_currents,
    sub_amplitudes,
)
from .graph import Graph, SourceFunction, format_rational
from .multigraph import count_two_color


@dataclass(frozen=True)
class TruncatedSeries:
    """Per-amplitude rational coefficients under a total-degree cap."""

    terms: dict[EdgeAmplitude, Fraction]
    degree_cap: int

    def __post_init__(self) -> None:
        for amplitude in self.terms:
            if sum(amplitude) > self.degree_cap:
                raise ValueError(f"term {amplitude} exceeds the degree cap {self.degree_cap}")

    def total(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def to_json_rows(self, counts: dict[EdgeAmplitude, int] | None = None) -> list[dict]:
        rows = []
        for amplitude in sorted(self.terms, key=lambda a: (sum(a), a)):
            row = {"N": list(amplitude), "coeff": format_rational(self.terms[amplitude])}
            if counts is not None:
                row["count"] = str(counts[amplitude])
            rows.append(row)
        return rows


@lru_cache(maxsize=None)
def _edge_terms(graph: Graph, cap: int) -> tuple[tuple[Fraction, ...], ...]:
    # Per edge e and flow k: (J_e/2)^k / k!, the per-orientation weight factor.
    out = []
    for coupling in graph.couplings:
        half = coupling / 2
        out.append(tuple(half**k / math.factorial(k) for k in range(cap + 1)))
    return tuple(out)


def sourced_weight_sums(
    graph: Graph, targets: Iterable[SourceFunction], degree_cap: int
) -> dict[SourceFunction, Fraction]:
    """Total weight of currents with each target source, up to the cap.

    One pass over all currents with total amplitude <= degree_cap,
    accumulating the weight of every current whose source is among the
    targets.  Exact rationals throughout.
    """
    if degree_cap < 0:
        raise ValueError("degree cap must be nonnegative")
    sums: dict[SourceFunction, Fraction] = {}
    for target in targets:
        if len(target) != graph.num_vertices:
            raise ValueError("source function does not match the graph's vertex count")
        sums[target] = Fraction(0)
    wanted = {target.values: target for target in sums}

    terms = _edge_terms(graph, degree_cap)
    edges = graph.edges
    num_edges = graph.num_edges
    src = [0] * graph.num_vertices

    def descend(edge: int, budget: int, acc: Fraction) -> None:
        if edge == num_edges:
            target = wanted.get(tuple(src))
            if target is not None:
                sums[target] += acc
            return
        u, v = edges[edge]
        edge_terms = terms[edge]
        for fwd in range(budget + 1):
            for bwd in range(budget - fwd + 1):
                delta = fwd - bwd
                src[u] += delta
                src[v] -= delta
                descend(edge + 1, budget - fwd - bwd, acc * edge_terms[fwd] * edge_terms[bwd])
                src[u] -= delta
                src[v] += delta

    descend(0, degree_cap, Fraction(1))
    return sums


def partition_function(graph: Graph, degree_cap: int) -> Fraction:
    """Truncated partition function: weights of sourceless currents up to the cap.

    Equals 1 at cap 0 and is nondecreasing in the cap; the untruncated limit
    is bounded above by prod_e exp(J_e).
    """
    zero = SourceFunction.zero(graph.num_vertices)
    return sourced_weight_sums(graph, (zero,), degree_cap)[zero]


def correlation(graph: Graph, phi: SourceFunction, degree_cap: int) -> Fraction:
    """Truncated correlation <s^phi>: sourced sum over sourceless sum.

    Returns 0 whenever no current with source phi exists under the cap; in
    particular for every phi with nonzero total, where the sourced sum is
    empty at any cap.
    """
    zero = SourceFunction.zero(graph.num_vertices)
    sums = sourced_weight_sums(graph, (phi, zero), degree_cap)
    numerator = sums[phi]
    if numerator == 0:
        return Fraction(0)
    return numerator / sums[zero]


def amplitude_weight(graph: Graph, amplitude: EdgeAmplitude) -> Fraction:
    """The grading factor prod_e (J_e/2)^(N_e) / N_e! of one amplitude class."""
    acc = Fraction(1)
    for coupling, n_e in zip(graph.couplings, amplitude):
        acc *= (coupling / 2) ** n_e
        acc /= math.factorial(n_e)
    return acc


def _require_mean_zero(name: str, source: SourceFunction) -> None:
    if source.total() != 0:
        raise ValueError(f"{name} must have zero total, got {source.total()}")


def ginibre_gap_counts(
    graph: Graph, amplitude: EdgeAmplitude, phi: SourceFunction, psi: SourceFunction
) -> int:
    """Count-level Ginibre gap at a single amplitude vector.

    Returns
        count(N, phi+psi, 0) + count(N, phi-psi, 0) - 2 count(N, phi, psi)
    over two-color configurations.  The product identity behind the split
    bijection turns this into the perfect square
        (count_one_color(N, phi+psi) - count_one_color(N, phi-psi))^2,
    so the result is a nonnegative integer; the equality itself is checked by
    the test suite, not assumed here.
    """
    _require_mean_zero("phi", phi)
    _require_mean_zero("psi", psi)
    zero = SourceFunction.zero(graph.num_vertices)
    amplitude = tuple(amplitude)
    both = count_two_color(graph, amplitude, phi + psi, zero)
    crossed = count_two_color(graph, amplitude, phi - psi, zero)
    mixed = count_two_color(graph, amplitude, phi, psi)
    return both + crossed - 2 * mixed


def ginibre_gap_terms(
    graph: Graph, phi: SourceFunction, psi: SourceFunction, degree_cap: int
) -> tuple[TruncatedSeries, dict[EdgeAmplitude, int]]:
    """Weighted gap series terms and the raw gap counts, per amplitude vector.

    Only amplitude vectors with a nonzero gap appear; each term is
    amplitude_weight(N) * gap(N), a nonnegative rational.
    """
    terms: dict[EdgeAmplitude, Fraction] = {}
    counts: dict[EdgeAmplitude, int] = {}
    for amplitude in amplitude_vectors(graph.num_edges, degree_cap):
        gap = ginibre_gap_counts(graph, amplitude, phi, psi)
        if gap:
            counts[amplitude] = gap
            terms[amplitude] = amplitude_weight(graph, amplitude) * gap
    return TruncatedSeries(terms, degree_cap), counts


def ginibre_gap_series(
    graph: Graph, phi: SourceFunction, psi: SourceFunction, degree_cap: int
) -> Fraction:
    """Weighted sum of the gap counts over all amplitudes up to the cap.

    Nonnegative at every cap because every summand is nonnegative; dividing
    by the jointly truncated squared partition function turns this into the
    truncated correlation inequality.
    """
    series, _ = ginibre_gap_terms(graph, phi, psi, degree_cap)
    return series.total()


@dataclass(frozen=True)
class CoefficientRow:
    """One amplitude class of the coefficient identity check."""

    amplitude: EdgeAmplitude
    pair_sum: Fraction
    counted: Fraction

    @property
    def match(self) -> bool:
        return self.pair_sum == self.counted


@dataclass(frozen=True)
class CoefficientReport:
    degree_cap: int
    rows: tuple[CoefficientRow, ...]

    @property
    def mismatches(self) -> tuple[CoefficientRow, ...]:
        return tuple(row for row in self.rows if not row.match)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "D": self.degree_cap,
            "checked": len(self.rows),
            "mismatches": [
                {
                    "N": list(row.amplitude),
                    "pair_sum": format_rational(row.pair_sum),
                    "counted": format_rational(row.counted),
                }
                for row in self.mismatches
            ],
        }


def coefficient_identity_check(
    graph: Graph, phi: SourceFunction, psi: SourceFunction, degree_cap: int
) -> CoefficientReport:
    """Compare the current-pair expansion against the counted form, per N.

    For every amplitude vector N with total <= cap, the sum of
    weight(n) * weight(m) over current pairs with source n = phi,
    source m = psi and |n + m| = N must equal
    amplitude_weight(N) * count_two_color(N, phi, psi) as exact rationals.

    The pair sum is evaluated by splitting N into the red amplitude a and
    blue amplitude N - a; the two inner sums factor because the pair weight
    is a product.  Per-amplitude inner sums are cached across N.
    """
    zero = Fraction(0)
    phi_sums: dict[EdgeAmplitude, Fraction] = {}
    psi_sums: dict[EdgeAmplitude, Fraction] = {}

    def sourced_amplitude_sum(
        cache: dict[EdgeAmplitude, Fraction], amplitude: EdgeAmplitude, source: SourceFunction
    ) -> Fraction:
        if amplitude not in cache:
            cache[amplitude] = sum(
                (c.weight() for c in enumerate_currents(graph, amplitude=amplitude, source=source)),
                zero,
            )
        return cache[amplitude]

    rows = []
    for amplitude in amplitude_vectors(graph.num_edges, degree_cap):
        pair_sum = zero
        for red_amplitude in sub_amplitudes(amplitude):
            red = sourced_amplitude_sum(phi_sums, red_amplitude, phi)
            if red == 0:
                continue
            blue_amplitude = tuple(n - a for n, a in zip(amplitude, red_amplitude))
            pair_sum += red * sourced_amplitude_sum(psi_sums, blue_amplitude, psi)
        counted = amplitude_weight(graph, amplitude) * count_two_color(graph, amplitude, phi, psi)
        rows.append(CoefficientRow(amplitude, pair_sum, counted))

    return CoefficientReport(degree_cap, tuple(rows))
