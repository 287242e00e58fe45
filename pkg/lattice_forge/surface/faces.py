import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.surface.discrete_surface import DiscreteSurface
from lattice_forge.utils.datatypes import EulerStats
from lattice_forge.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of half-edges around every vertex.

    Edge k owns half-edges 2k (leaving its origin) and 2k + 1 (leaving its
    terminus); `h ^ 1` is the opposite half-edge.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = Counter(h for order in self.rotation for h in order)
        expected = 2 * len(self.edges)
        if len(self.rotation) != self.vertex_count:
            raise InvalidInputError("inconsistent rotation system: one cyclic order per vertex required")
        if sorted(seen) != list(range(expected)) or any(c != 1 for c in seen.values()):
            raise InvalidInputError("inconsistent rotation system: every half-edge must appear exactly once")
        for v, order in enumerate(self.rotation):
            for h in order:
                if self.tail(h) != v:
                    raise InvalidInputError(f"inconsistent rotation system: half-edge {h} does not leave vertex {v}")

    def tail(self, h: int) -> int:
        o, t = self.edges[h // 2]
        return t if h % 2 else o

    def head(self, h: int) -> int:
        return self.tail(h ^ 1)

    def next_in_face(self, h: int) -> int:
        """Leave the head of h along the half-edge following h's reverse in the cyclic order."""
        order = self.rotation[self.head(h)]
        return order[(order.index(h ^ 1) + 1) % len(order)]

    @classmethod
    def from_graph(cls, g: MultiGraph, orders: Sequence[Sequence[int]]) -> "RotationSystem":
        return cls(
            vertex_count=g.vertex_count,
            edges=g.edges,
            rotation=tuple(tuple(int(h) for h in order) for order in orders),
        )

    @classmethod
    def from_surface(cls, s: DiscreteSurface) -> "RotationSystem":
        """Pair the stored neighbour slots into edges; parallel slots pair in order of appearance."""
        edges: list[tuple[int, int]] = []
        rotation = [[-1, -1, -1] for _ in range(s.vertex_count)]
        pending: dict[tuple, list[int]] = defaultdict(list)
        for i, triple in enumerate(s.neighbors):
            for slot, (j, label) in enumerate(triple):
                reverse = (j, i, tuple(-x for x in label))
                if pending[reverse]:
                    k = pending[reverse].pop(0)
                    rotation[i][slot] = 2 * k + 1
                    continue
                k = len(edges)
                edges.append((i, j))
                rotation[i][slot] = 2 * k
                pending[(i, j, label)].append(k)
        return cls(
            vertex_count=s.vertex_count,
            edges=tuple(edges),
            rotation=tuple(tuple(order) for order in rotation),
        )


def trace_faces(system: Union[RotationSystem, DiscreteSurface]) -> list[list[int]]:
    """Faces as closed half-edge sequences; every half-edge is used exactly once."""
    if isinstance(system, DiscreteSurface):
        system = RotationSystem.from_surface(system)
    limit = 2 * len(system.edges)
    used = [False] * limit
    faces = []
    for start in range(limit):
        if used[start]:
            continue
        face = []
        h = start
        while True:
            if used[h] or len(face) > limit:
                raise InvalidInputError("inconsistent orientation: face traversal does not close")
            used[h] = True
            face.append(h)
            h = system.next_in_face(h)
            if h == start:
                break
        faces.append(face)
    logger.debug("Traced %s faces over %s half-edges", len(faces), limit)
    return faces


def face_histogram(faces: Sequence[Sequence[int]]) -> dict[int, int]:
    return dict(sorted(Counter(len(face) for face in faces).items()))


def euler_stats(
    faces: Union[Sequence[Sequence[int]], Mapping[int, int]],
    vertex_count: Optional[int] = None,
    edge_count: Optional[int] = None,
) -> EulerStats:
    """Both Euler numbers of a closed trivalent surface graph.

    Args:
        faces: traced faces, or a histogram {k: N_k}.
        vertex_count (Optional[int]): V; derived as sum k N_k / 3 when omitted.
        edge_count (Optional[int]): E; derived as sum k N_k / 2 when omitted.

    Returns:
        EulerStats: counts plus chi = F - E + V and chi = sum (1 - k/6) N_k.
    """
    histogram = dict(faces) if isinstance(faces, Mapping) else face_histogram(faces)
    if any(k < 1 or n < 0 for k, n in histogram.items()):
        raise InvalidInputError("face sizes must be at least 1 and counts non-negative")
    corners = sum(k * n for k, n in histogram.items())
    if corners % 6:
        raise InvalidInputError(f"sum of k N_k = {corners} is not divisible by 6")
    derived_e, derived_v = corners // 2, corners // 3
    if edge_count is not None and edge_count != derived_e:
        raise InvalidInputError(f"inconsistent counts: E = {edge_count} but sum k N_k / 2 = {derived_e}")
    if vertex_count is not None and vertex_count != derived_v:
        raise InvalidInputError(f"inconsistent counts: V = {vertex_count} but sum k N_k / 3 = {derived_v}")

    face_count = sum(histogram.values())
    chi_counts = face_count - derived_e + derived_v
    chi_formula = sum((Fraction(6 - k, 6) * n for k, n in histogram.items()), Fraction(0))
    if chi_counts != chi_formula:
        raise InvalidInputError(f"Euler numbers disagree: {chi_counts} != {chi_formula}")
    return EulerStats(
        face_sizes=histogram,
        vertex_count=derived_v,
        edge_count=derived_e,
        face_count=face_count,
        chi_from_counts=chi_counts,
        chi_from_formula=chi_formula,
    )
