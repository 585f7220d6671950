"""Vertex-weighted multigraphs, edge-subset states, deletion and contraction.

A graph is an ordered vertex list with positive integer weights and an
ordered edge list.  Loops and parallel edges are allowed.  The edge order
is the input list order; every sign in the chain complex and the inherited
orders under deletion/contraction derive from it.  All values here are
immutable; operations are pure.
"""

from dataclasses import dataclass
from functools import lru_cache
import json


@dataclass(frozen=True)
class VertexWeightedGraph:
    ids: tuple[str, ...]
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # endpoint positions into `ids`

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def edge_ids(self, e: int) -> tuple[str, str]:
        u, v = self.edges[e]
        return self.ids[u], self.ids[v]

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def has_loop(self) -> bool:
        return any(self.is_loop(e) for e in range(self.m))

    def parallel_pairs(self) -> list[tuple[int, int]]:
        seen: dict[tuple[int, int], int] = {}
        pairs = []
        for e, (u, v) in enumerate(self.edges):
            key = (min(u, v), max(u, v))
            if key in seen:
                pairs.append((seen[key], e))
            else:
                seen[key] = e
        return pairs

    def delete_edge(self, e: int) -> "VertexWeightedGraph":
        return modify_edge(self, e, "delete")

    def contract_edge(self, e: int) -> "VertexWeightedGraph":
        return modify_edge(self, e, "contract")

    def with_edge_order(self, order: tuple[int, ...]) -> "VertexWeightedGraph":
        """Same graph with edges permuted: new edge k is old edge order[k]."""
        if sorted(order) != list(range(self.m)):
            raise ValueError("order must be a permutation of the edge indices")
        return VertexWeightedGraph(
            self.ids, self.weights, tuple(self.edges[k] for k in order)
        )

    def serialize(self) -> str:
        """Canonical text form; round-trips vertex and edge order exactly."""
        doc = {
            "vertices": [
                {"id": i, "weight": w} for i, w in zip(self.ids, self.weights)
            ],
            "edges": [[self.ids[u], self.ids[v]] for u, v in self.edges],
        }
        return json.dumps(doc, sort_keys=False, separators=(",", ":"))


def build_graph(description: dict) -> VertexWeightedGraph:
    """Validate a structured graph description.

    Expected fields: ``vertices: [{id, weight}]`` and ``edges: [[id, id]]``;
    the edge array order defines the edge order.
    """
    if not isinstance(description, dict):
        raise ValueError("graph description must be a mapping")
    vertices = description.get("vertices")
    if not vertices:
        raise ValueError("graph must have at least one vertex")
    ids = []
    weights = []
    for item in vertices:
        vid = str(item["id"])
        w = item["weight"]
        if not isinstance(w, int) or w < 1:
            raise ValueError(f"vertex {vid!r} has weight {w!r}; weights must be integers >= 1")
        if vid in ids:
            raise ValueError(f"duplicate vertex id {vid!r}")
        ids.append(vid)
        weights.append(w)
    pos = {vid: k for k, vid in enumerate(ids)}
    edges = []
    for pair in description.get("edges", []):
        u, v = pair
        u, v = str(u), str(v)
        if u not in pos or v not in pos:
            missing = u if u not in pos else v
            raise ValueError(f"edge endpoint {missing!r} is not a declared vertex")
        edges.append((pos[u], pos[v]))
    return VertexWeightedGraph(tuple(ids), tuple(weights), tuple(edges))


def graph_from_weights(weights, edges, ids=None) -> VertexWeightedGraph:
    """Convenience builder from a weight list and index-pair edges."""
    ids = tuple(ids) if ids else tuple(f"v{k}" for k in range(len(weights)))
    return build_graph(
        {
            "vertices": [{"id": i, "weight": int(w)} for i, w in zip(ids, weights)],
            "edges": [[ids[u], ids[v]] for u, v in edges],
        }
    )


def path_graph(weights) -> VertexWeightedGraph:
    n = len(weights)
    return graph_from_weights(weights, [(k, k + 1) for k in range(n - 1)])


def cycle_graph(weights) -> VertexWeightedGraph:
    n = len(weights)
    return graph_from_weights(
        weights, [(k, k + 1) for k in range(n - 1)] + [(n - 1, 0)]
    )


def complete_graph(weights) -> VertexWeightedGraph:
    n = len(weights)
    return graph_from_weights(
        weights, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def star_graph(weights) -> VertexWeightedGraph:
    """Hub is the first vertex."""
    n = len(weights)
    return graph_from_weights(weights, [(0, k) for k in range(1, n)])


def single_vertex(weight: int, vid: str = "v0") -> VertexWeightedGraph:
    return graph_from_weights([weight], [], ids=(vid,))


def disjoint_union(a: VertexWeightedGraph, b: VertexWeightedGraph) -> VertexWeightedGraph:
    """A's vertices first (keeping ids), then B's, suffixed on collision."""
    ids = list(a.ids)
    for vid in b.ids:
        new = vid
        while new in ids:
            new = new + "'"
        ids.append(new)
    weights = a.weights + b.weights
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return VertexWeightedGraph(tuple(ids), weights, tuple(edges))


def modify_edge(g: VertexWeightedGraph, e: int, mode: str) -> VertexWeightedGraph:
    """Delete or contract edge e; remaining edges keep their relative order.

    Contracting a non-loop (u, v) merges the endpoints into one vertex at
    the earlier position, with weight w(u) + w(v); edges re-target the
    merged vertex, so loops and parallel edges may appear and are kept.
    Contracting a loop just removes it.
    """
    if not 0 <= e < g.m:
        raise ValueError(f"edge index {e} out of range")
    rest = tuple(ed for k, ed in enumerate(g.edges) if k != e)
    if mode == "delete":
        return VertexWeightedGraph(g.ids, g.weights, rest)
    if mode != "contract":
        raise ValueError(f"unknown mode {mode!r}")
    u, v = g.edges[e]
    if u == v:
        return VertexWeightedGraph(g.ids, g.weights, rest)
    keep, drop = (u, v) if u < v else (v, u)
    ids = tuple(i for k, i in enumerate(g.ids) if k != drop)
    weights = tuple(
        w + g.weights[drop] if k == keep else w
        for k, w in enumerate(g.weights)
        if k != drop
    )

    def remap(x: int) -> int:
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    edges = tuple((remap(a), remap(b)) for a, b in rest)
    return VertexWeightedGraph(ids, weights, edges)


@dataclass(frozen=True)
class State:
    """An edge subset F with its component data.

    `blocks` partitions the vertex positions, ordered by smallest member;
    `block_weights` are the component total weights in that order, and
    `partition` is their weakly decreasing sort (a partition of w(G)).
    """

    graph: VertexWeightedGraph
    mask: int
    blocks: tuple[tuple[int, ...], ...]
    block_weights: tuple[int, ...]
    partition: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def edge_indices(self) -> list[int]:
        return [e for e in range(self.graph.m) if self.mask >> e & 1]


@dataclass(frozen=True)
class HasseEdge:
    """Cover relation F -> F - e in the state lattice, with its sign.

    The sign is (-1)^k where k counts the edges of F strictly before e in
    the edge order.
    """

    upper: int
    lower: int
    edge: int
    sign: int


def removal_sign(mask: int, e: int) -> int:
    below = mask & ((1 << e) - 1)
    return -1 if below.bit_count() % 2 else 1


def state_profile(g: VertexWeightedGraph, mask: int) -> State:
    """Component blocks of the spanning subgraph with edge set `mask`."""
    if mask >> g.m:
        raise ValueError("mask has bits outside the edge range")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(g.m):
        if mask >> e & 1:
            u, v = g.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for x in range(g.n):
        groups.setdefault(find(x), []).append(x)
    blocks = tuple(tuple(groups[r]) for r in sorted(groups))
    bw = tuple(sum(g.weights[x] for x in blk) for blk in blocks)
    lam = tuple(sorted(bw, reverse=True))
    return State(g, mask, blocks, bw, lam)


@lru_cache(maxsize=100_000)
def _cached_state(g: VertexWeightedGraph, mask: int) -> State:
    return state_profile(g, mask)


def level_masks(m: int, i: int) -> list[int]:
    """All edge masks with exactly i edges, ascending."""
    masks = [mask for mask in range(1 << m) if mask.bit_count() == i]
    return sorted(masks)


def lattice_layer(g: VertexWeightedGraph, i: int):
    """States with i edges and their outgoing signed cover relations."""
    if not 0 <= i <= g.m:
        raise ValueError(f"layer {i} out of range")
    out = []
    for mask in level_masks(g.m, i):
        st = _cached_state(g, mask)
        hasse = [
            HasseEdge(mask, mask & ~(1 << e), e, removal_sign(mask, e))
            for e in range(g.m)
            if mask >> e & 1
        ]
        out.append((st, hasse))
    return out


def count_blocks(g: VertexWeightedGraph) -> int:
    """Number of blocks (maximal 2-connected pieces, bridges, isolated
    vertices) of the underlying graph."""
    adj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(g.n)}
    for e, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, e))
            adj[v].append((u, e))
    visited = [False] * g.n
    disc = [0] * g.n
    low = [0] * g.n
    timer = [1]
    blocks = [0]
    stack: list[int] = []

    def dfs(x: int, parent_edge: int) -> None:
        visited[x] = True
        disc[x] = low[x] = timer[0]
        timer[0] += 1
        for y, e in adj[x]:
            if e == parent_edge:
                continue
            if not visited[y]:
                stack.append(e)
                dfs(y, e)
                low[x] = min(low[x], low[y])
                if low[y] >= disc[x]:
                    # pop one block's worth of edges
                    blocks[0] += 1
                    while stack and stack[-1] != e:
                        stack.pop()
                    if stack:
                        stack.pop()
            elif disc[y] < disc[x]:
                stack.append(e)
                low[x] = min(low[x], disc[y])

    isolated = 0
    for x in range(g.n):
        if not visited[x]:
            if not adj[x]:
                isolated += 1
                visited[x] = True
            else:
                dfs(x, -1)
    return blocks[0] + isolated
