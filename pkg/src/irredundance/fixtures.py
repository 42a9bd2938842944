"""Named small-graph fixtures with their original vertex labelings.

Each fixture stores the adjacency exactly as drawn in its source diagram,
the label of each internal vertex (internal index i carries label
labels[i]), and the graph6 string of the internal labeling.  Helpers
translate label sets to masks and back so expected values can be written
in the original labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, build, to_graph6


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    labels: tuple[int, ...]
    description: str

    @property
    def g6(self) -> str:
        return to_graph6(self.graph)

    def mask(self, label_set) -> int:
        """Mask of a set given in fixture labels."""
        index = {lab: i for i, lab in enumerate(self.labels)}
        m = 0
        for lab in label_set:
            m |= 1 << index[lab]
        return m

    def labels_of(self, mask: int) -> frozenset[int]:
        return frozenset(self.labels[v] for v in bits(mask))

    def family_labels(self, masks) -> set[frozenset[int]]:
        return {self.labels_of(m) for m in masks}


def _fixture(name: str, labels: tuple[int, ...], edges, description: str) -> Fixture:
    index = {lab: i for i, lab in enumerate(labels)}
    g = build(len(labels), [(index[u], index[v]) for u, v in edges])
    return Fixture(name=name, graph=g, labels=labels, description=description)


FIXTURES: dict[str, Fixture] = {}


def _register(fix: Fixture, *aliases: str) -> Fixture:
    FIXTURES[fix.name] = fix
    for a in aliases:
        FIXTURES[a] = fix
    return fix


FIG2_L = _register(_fixture(
    "fig2",
    labels=tuple(range(1, 9)),
    edges=[(1, 2), (1, 5), (4, 5), (1, 4), (1, 7), (7, 8), (1, 8),
           (3, 4), (2, 3), (2, 6), (6, 7), (3, 5), (6, 8)],
    description="ladder with two adjacent-twin pairs; PSD lower irredundance 3 < PSD forcing 4",
))

FIG3_BC = _register(_fixture(
    "fig3",
    labels=tuple(range(1, 12)),
    edges=[(11, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 11), (11, 2), (2, 4),
           (4, 11), (11, 3), (1, 5), (11, 6), (6, 5), (6, 7), (7, 11), (11, 8),
           (8, 7), (8, 9), (9, 11), (11, 10), (10, 9), (1, 10), (1, 3), (3, 5)],
    description="11-vertex graph with PSD forcing 4 but upper PSD forcing 5",
), "bc")

FIG4_TREE = _register(_fixture(
    "fig4",
    labels=tuple(range(1, 7)),
    edges=[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)],
    description="double-star tree: PSD lower irredundance 1 < standard lower irredundance 2",
))

FIG5_TRIANGLES = _register(_fixture(
    "fig5",
    labels=tuple(range(1, 7)),
    edges=[(1, 3), (3, 4), (4, 1), (1, 2), (2, 5), (5, 6), (6, 2)],
    description="two triangles joined by an edge: PSD lower irredundance 3 > standard 2",
))

FIG6_FAN = _register(_fixture(
    "fig6",
    labels=tuple(range(5)),
    edges=[(0, 2), (2, 4), (4, 0), (0, 3), (3, 1), (1, 4), (3, 4)],
    description="fan: upper skew forcing 1 < upper skew irredundance 2",
))

FIG7_SKEW = _register(_fixture(
    "fig7",
    labels=tuple(range(7)),
    edges=[(1, 5), (5, 2), (2, 6), (6, 1), (1, 4), (4, 2), (6, 0), (0, 3),
           (3, 5), (0, 4)],
    description="7-vertex graph: lower skew irredundance 2 < skew forcing 3",
))

BULL = _register(_fixture(
    "bull",
    labels=tuple(range(1, 6)),
    edges=[(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)],
    description="bull: worked example for the domination closure and its generators",
))

PAW = _register(_fixture(
    "paw",
    labels=tuple(range(1, 5)),
    edges=[(1, 4), (4, 2), (2, 3), (3, 4)],
    description="paw: separates the domination chain from vertex-cover irredundance",
))
