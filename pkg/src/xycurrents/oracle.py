"""Numerical evaluation of XY correlations by direct torus integration.

Everything here is floating point and independent of the exact-arithmetic
series machinery, so the two can cross-validate each other.  The observable
is <cos(phi . theta)> under the Gibbs weight exp(-H) with

    H(theta) = - sum over edges J_uv cos(theta_u - theta_v)

and the uniform product measure on angles.  Two evaluators are provided:

* periodic trapezoid quadrature on a K-points-per-angle grid, with one angle
  gauge-fixed to 0 (valid for mean-zero phi, where both integrands depend on
  angle differences only) or over all angles as a fallback;
* a plain importance-ratio Monte Carlo estimator with uniform proposals, for
  sizes where a grid is infeasible.

Monte Carlo runs are bit-reproducible for a fixed seed: the generator is
NumPy's default PCG64 stream.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .graph import Graph, SourceFunction


def hamiltonian(graph: Graph, angles: Sequence[float]) -> float:
    """XY energy  - sum over edges J cos(theta_u - theta_v).

    Invariant under adding a constant to every angle.
    """
    if len(angles) != graph.num_vertices:
        raise ValueError("angle configuration does not match the graph's vertex count")
    total = 0.0
    for (u, v), coupling in zip(graph.edges, graph.couplings):
        total -= float(coupling) * math.cos(angles[u] - angles[v])
    return total


def quadrature_correlation(
    graph: Graph,
    phi: SourceFunction,
    points_per_angle: int,
    gauge_fixed: bool = True,
) -> float:
    """<cos(phi . theta)> by K-point periodic trapezoid sums per angle.

    With ``gauge_fixed`` the angle of vertex 0 is pinned to 0, reducing the
    grid to K^(V-1) points; this requires phi to have zero total.  The full
    K^V grid (``gauge_fixed=False``) accepts any phi and returns a value
    near 0 when the total is nonzero.  On smooth periodic integrands the rule
    converges spectrally in K.
    """
    if points_per_angle < 2:
        raise ValueError("need at least two quadrature points per angle")
    if len(phi) != graph.num_vertices:
        raise ValueError("phi does not match the graph's vertex count")
    if gauge_fixed and phi.total() != 0:
        raise ValueError("gauge fixing requires a zero-total phi; use gauge_fixed=False")

    num_vertices = graph.num_vertices
    free = list(range(1, num_vertices)) if gauge_fixed else list(range(num_vertices))
    axis_of = {vertex: axis for axis, vertex in enumerate(free)}
    ndim = len(free)
    grid_1d = 2.0 * np.pi * np.arange(points_per_angle) / points_per_angle

    def vertex_angles(vertex: int):
        axis = axis_of.get(vertex)
        if axis is None:
            return 0.0
        shape = [1] * ndim
        shape[axis] = points_per_angle
        return grid_1d.reshape(shape)

    log_weight = np.zeros((points_per_angle,) * ndim)
    for (u, v), coupling in zip(graph.edges, graph.couplings):
        log_weight = log_weight + float(coupling) * np.cos(vertex_angles(u) - vertex_angles(v))
    weight = np.exp(log_weight)

    phase = np.zeros((points_per_angle,) * ndim)
    for vertex, power in enumerate(phi.values):
        if power:
            phase = phase + power * vertex_angles(vertex)

    return float((np.cos(phase) * weight).sum() / weight.sum())


class MCResult(NamedTuple):
    estimate: float
    stderr: float


def mc_correlation(graph: Graph, phi: SourceFunction, samples: int, seed: int) -> MCResult:
    """Importance-ratio Monte Carlo estimate of <cos(phi . theta)>.

    Angles are drawn uniformly on [0, 2pi)^V; the estimate is the
    exp(-H)-weighted mean of cos(phi . theta) and the standard error comes
    from the delta method for the ratio estimator.  Deterministic per
    (seed, samples): the stream is NumPy's PCG64.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if len(phi) != graph.num_vertices:
        raise ValueError("phi does not match the graph's vertex count")

    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=(samples, graph.num_vertices))

    log_weight = np.zeros(samples)
    for (u, v), coupling in zip(graph.edges, graph.couplings):
        log_weight += float(coupling) * np.cos(theta[:, u] - theta[:, v])
    weight = np.exp(log_weight)

    phase = theta @ np.asarray(phi.values, dtype=float)
    weighted_obs = weight * np.cos(phase)

    weight_total = weight.sum()
    estimate = weighted_obs.sum() / weight_total
    residuals = weighted_obs - estimate * weight
    stderr = math.sqrt(float((residuals**2).sum())) / weight_total
    return MCResult(float(estimate), stderr)
