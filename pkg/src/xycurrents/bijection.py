"""The split/merge bijection between two-color configurations and pairs of
one-color orientation patterns.

``split`` sends a colored configuration to two colorless orientation
patterns on the same multigraph: the first keeps every slot's direction as
is, the second keeps blue slots and reverses red ones.  If the input has red
source f and blue source g, the images have sources f + g and -f + g.
``merge`` inverts this: directions come from the first pattern, and a slot is
colored blue exactly where the two patterns agree.  Neither map ever reads
f or g, so the round trips are identities on the full configuration space,
and comparing class sizes yields the product identity

    count_two_color(N, f, g) = count_one_color(N, f+g) * count_one_color(N, -f+g)

whose consequence is the count-level nonnegativity certificate used by the
series module.  ``verify_bijection`` checks all of this exhaustively for one
amplitude vector.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .currents import EdgeAmplitude
from .graph import Graph, SourceFunction
from .multigraph import (
    Color,
    ColoredConfig,
    Direction,
    Multigraph,
    OrientedConfig,
    count_one_color,
    enumerate_all_configs,
    enumerate_orientations,
    oriented_source,
    sources_of_config,
)


class SplitPair(NamedTuple):
    """Image of a colored configuration: two orientation patterns on the
    same multigraph."""

    red_part: OrientedConfig
    blue_part: OrientedConfig


def split(config: ColoredConfig) -> SplitPair:
    """Forget colors into the red part; reverse red slots into the blue part."""
    red_part = tuple(direction for _, direction in config)
    blue_part = tuple(
        direction if color is Color.BLUE else direction.flipped()
        for color, direction in config
    )
    return SplitPair(red_part, blue_part)


def merge(pair: SplitPair) -> ColoredConfig:
    """Take directions from the red part; color a slot blue iff the parts agree."""
    red_part, blue_part = pair
    if len(red_part) != len(blue_part):
        raise ValueError("split pair parts live on different multigraphs")
    return tuple(
        (Color.BLUE if r is b else Color.RED, r)
        for r, b in zip(red_part, blue_part)
    )


@dataclass(frozen=True)
class BijectionFailure:
    """A counterexample found during exhaustive verification."""

    kind: str
    detail: str


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of the exhaustive checks for one amplitude vector."""

    amplitude: EdgeAmplitude
    configs_checked: int
    pairs_checked: int
    classes_checked: int
    failures: tuple[BijectionFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "N": list(self.amplitude),
            "checked": self.configs_checked + self.pairs_checked,
            "configs_checked": self.configs_checked,
            "pairs_checked": self.pairs_checked,
            "classes_checked": self.classes_checked,
            "failures": [{"kind": f.kind, "detail": f.detail} for f in self.failures],
        }


def _slot_repr(config: Iterable) -> str:
    def one(entry) -> str:
        if isinstance(entry, tuple):
            color, direction = entry
            return ("R" if color is Color.RED else "B") + ("F" if direction is Direction.FWD else "W")
        return "F" if entry is Direction.FWD else "W"

    return "".join(one(e) for e in config)


def verify_bijection(graph: Graph, amplitude: EdgeAmplitude) -> BijectionReport:
    """Exhaustively verify the bijection on the full 4^(slots) spaces.

    Checks, with every failure collected as a counterexample:
      * merge(split(w)) == w for every colored configuration w;
      * source(red part) == f + g and source(blue part) == -f + g where
        (f, g) are the per-color sources of w;
      * split(merge(p)) == p for every orientation pair p;
      * for every realized source pair (f, g), the class size equals
        count_one_color(N, f+g) * count_one_color(N, -f+g).

    The caller is responsible for keeping 4^(total amplitude) affordable.
    """
    multigraph = Multigraph(graph, tuple(amplitude))
    failures: list[BijectionFailure] = []
    class_sizes: Counter[tuple[SourceFunction, SourceFunction]] = Counter()

    configs_checked = 0
    for config in enumerate_all_configs(multigraph):
        configs_checked += 1
        pair = split(config)
        back = merge(pair)
        if back != config:
            failures.append(BijectionFailure(
                "round-trip-config",
                f"merge(split(w)) != w for w={_slot_repr(config)}",
            ))
        red_source, blue_source = sources_of_config(multigraph, config)
        class_sizes[(red_source, blue_source)] += 1
        expected_red = red_source + blue_source
        expected_blue = -red_source + blue_source
        if oriented_source(multigraph, pair.red_part) != expected_red:
            failures.append(BijectionFailure(
                "source-map-red",
                f"red part of w={_slot_repr(config)} has source "
                f"{oriented_source(multigraph, pair.red_part).values}, expected {expected_red.values}",
            ))
        if oriented_source(multigraph, pair.blue_part) != expected_blue:
            failures.append(BijectionFailure(
                "source-map-blue",
                f"blue part of w={_slot_repr(config)} has source "
                f"{oriented_source(multigraph, pair.blue_part).values}, expected {expected_blue.values}",
            ))

    pairs_checked = 0
    for red_part in enumerate_orientations(multigraph):
        for blue_part in enumerate_orientations(multigraph):
            pairs_checked += 1
            pair = SplitPair(red_part, blue_part)
            if split(merge(pair)) != pair:
                failures.append(BijectionFailure(
                    "round-trip-pair",
                    f"split(merge(p)) != p for p=({_slot_repr(red_part)}, {_slot_repr(blue_part)})",
                ))

    classes_checked = 0
    for (red_source, blue_source), size in sorted(
        class_sizes.items(), key=lambda kv: (kv[0][0].values, kv[0][1].values)
    ):
        classes_checked += 1
        product = (
            count_one_color(graph, amplitude, red_source + blue_source)
            * count_one_color(graph, amplitude, -red_source + blue_source)
        )
        if size != product:
            failures.append(BijectionFailure(
                "class-count",
                f"class (f={red_source.values}, g={blue_source.values}) has size {size}, "
                f"one-color product gives {product}",
            ))

    return BijectionReport(
        amplitude=tuple(amplitude),
        configs_checked=configs_checked,
        pairs_checked=pairs_checked,
        classes_checked=classes_checked,
        failures=tuple(failures),
    )
