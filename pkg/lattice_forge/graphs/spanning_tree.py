from collections import deque
from dataclasses import dataclass

from lattice_forge.graphs.multigraph import MultiGraph


@dataclass(frozen=True)
class SpanningTreeDecomposition:
    """Kruskal spanning tree rooted at vertex 0.

    `parent_half_edge[v]` is the tree half-edge that enters v from its parent
    (-1 at the root), so the unique tree path from the root is recovered by
    walking parents.
    """

    tree_edges: tuple[int, ...]
    cotree_edges: tuple[int, ...]
    parent_half_edge: tuple[int, ...]
    depth: tuple[int, ...]

    def root_path(self, g: MultiGraph, vertex: int) -> list[int]:
        """Half-edges of the tree path from the root to `vertex`, in walking order."""
        path = []
        while self.parent_half_edge[vertex] != -1:
            half_edge = self.parent_half_edge[vertex]
            path.append(half_edge)
            vertex = g.half_edge_tail(half_edge)
        return path[::-1]


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        self.parent[root_y] = root_x
        return True


def spanning_tree(g: MultiGraph) -> SpanningTreeDecomposition:
    """Kruskal on unweighted edges scanned in stored order."""
    components = _DisjointSet(g.vertex_count)
    tree, cotree = [], []
    for k, (o, t) in enumerate(g.edges):
        if components.union(o, t):
            tree.append(k)
        else:
            cotree.append(k)

    tree_set = set(tree)
    parent = [-1] * g.vertex_count
    depth = [0] * g.vertex_count
    visited = [False] * g.vertex_count
    visited[0] = True
    queue = deque([0])
    while queue:
        vertex = queue.popleft()
        for half_edge in g.incident_half_edges(vertex):
            if half_edge // 2 not in tree_set:
                continue
            head = g.half_edge_head(half_edge)
            if not visited[head]:
                visited[head] = True
                parent[head] = half_edge
                depth[head] = depth[vertex] + 1
                queue.append(head)

    return SpanningTreeDecomposition(
        tree_edges=tuple(tree),
        cotree_edges=tuple(cotree),
        parent_half_edge=tuple(parent),
        depth=tuple(depth),
    )
