import logging
import math
from collections import deque
from typing import Sequence

from lattice_forge.graphs.multigraph import MultiGraph
from lattice_forge.homology.labels import validate_labels
from lattice_forge.utils.errors import NumericalError
from lattice_forge.utils.settings import DEFAULT_GIRTH_CAP

logger = logging.getLogger(__name__)


def periodic_girth(g: MultiGraph, labels: Sequence[Sequence[int]], radius_cap: int = DEFAULT_GIRTH_CAP) -> int:
    """Length of the shortest non-backtracking closed path in the periodic lift.

    Breadth-first search over lifted states (vertex, translation) from every
    base vertex; a non-tree dart between two reached states closes a cycle of
    length dist(u) + dist(w) + 1. The lift is translation invariant, so roots
    at translation 0 suffice.
    """
    labels = validate_labels(g, labels)
    d = len(labels[0])
    depth_limit = math.ceil(radius_cap / 2)
    darts = {v: g.incident_half_edges(v) for v in range(g.vertex_count)}

    best = math.inf
    for root in range(g.vertex_count):
        start = (root, (0,) * d)
        dist = {start: 0}
        arrival = {start: -1}
        queue = deque([start])
        while queue:
            state = queue.popleft()
            if dist[state] > depth_limit or 2 * dist[state] >= best:
                break
            vertex, shift = state
            for half_edge in darts[vertex]:
                if arrival[state] != -1 and half_edge == arrival[state] ^ 1:
                    continue
                label = labels[half_edge // 2]
                sign = -1 if half_edge % 2 else 1
                head = (
                    g.half_edge_head(half_edge),
                    tuple(s + sign * x for s, x in zip(shift, label)),
                )
                if head not in dist:
                    dist[head] = dist[state] + 1
                    arrival[head] = half_edge
                    queue.append(head)
                elif arrival[head] != half_edge:
                    best = min(best, dist[state] + dist[head] + 1)

    if best > radius_cap:
        raise NumericalError("girth exceeds cap")
    logger.info("Periodic girth %s", best)
    return int(best)
