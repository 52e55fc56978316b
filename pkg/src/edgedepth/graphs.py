"""Simple graphs with optional loops, their edge ideals and distance data."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .monomials import Monomial, MonomialIdeal, ideal_colon_monomial, minimalize


class GraphError(ValueError):
    pass


class OrderNeighborsError(GraphError):
    """A precondition of `order_neighbors` failed; `condition` names which."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


class EdgeListParseError(GraphError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    loops: frozenset[int] = frozenset()
    vertex_names: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"edge {{{u},{v}}} is a loop; loops go in the loop set")
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise GraphError(f"edge endpoint {w} out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        for w in self.loops:
            if not 0 <= w < self.n:
                raise GraphError(f"loop vertex {w} out of range for n={self.n}")
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "loops", frozenset(self.loops))
        names = tuple(self.vertex_names) or tuple(f"x{i + 1}" for i in range(self.n))
        if len(names) != self.n:
            raise GraphError(f"{len(names)} vertex names for {self.n} vertices")
        object.__setattr__(self, "vertex_names", names)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], loops: Iterable[int] = (),
                   names: Sequence[str] = (), name: str = "") -> "Graph":
        return cls(n, frozenset(edges), frozenset(loops), tuple(names), name)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: int) -> set[int]:
        """N(v); a loop puts v in its own neighbor set."""
        out = {b if a == v else a for a, b in self.edges if v in (a, b)}
        if v in self.loops:
            out.add(v)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_leaf(self, v: int) -> bool:
        return v not in self.loops and self.degree(v) == 1

    def with_loops(self, loops: Iterable[int]) -> "Graph":
        return Graph(self.n, self.edges, self.loops | frozenset(loops), self.vertex_names, self.name)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex i becomes perm[i]."""
        edges = {(perm[u], perm[v]) for u, v in self.edges}
        names = [""] * self.n
        for i, nm in enumerate(self.vertex_names):
            names[perm[i]] = nm
        return Graph(self.n, frozenset(edges), frozenset(perm[v] for v in self.loops), tuple(names))


@dataclass(frozen=True)
class DistancePartition:
    root: int
    layers: tuple[frozenset[int], ...]
    unreachable: frozenset[int]

    def layer_of(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None


@dataclass(frozen=True)
class ComponentSummary:
    components: tuple[frozenset[int], ...]
    isolated: int
    diameters: tuple[int, ...]
    p: int
    d: int
    bipartite: bool
    isolated_vertices: frozenset[int] = field(default=frozenset())


def edge_ideal(G: Graph) -> MonomialIdeal:
    gens = [Monomial.from_vertices(G.n, e) for e in G.edges]
    gens += [Monomial.from_vertices(G.n, (v, v)) for v in G.loops]
    return minimalize(gens, G.n)


def bfs_distances(G: Graph, root: int, adj: list[set[int]] | None = None) -> dict[int, int]:
    adj = adj if adj is not None else G.adjacency()
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(G: Graph, u: int, v: int) -> int | None:
    return bfs_distances(G, u).get(v)


def distance_partition(G: Graph, u: int) -> DistancePartition:
    if not 0 <= u < G.n:
        raise GraphError(f"root {u} out of range")
    dist = bfs_distances(G, u)
    depth = max(dist.values())
    layers = [set() for _ in range(depth + 1)]
    for x, i in dist.items():
        layers[i].add(x)
    unreachable = frozenset(range(G.n)) - frozenset(dist)
    return DistancePartition(u, tuple(frozenset(s) for s in layers), unreachable)


def is_bipartite(G: Graph) -> bool:
    if G.loops:
        return False
    adj = G.adjacency()
    color: dict[int, int] = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def connected_components(G: Graph) -> list[frozenset[int]]:
    """All components including singletons, ordered by least vertex."""
    adj = G.adjacency()
    seen: set[int] = set()
    comps = []
    for s in range(G.n):
        if s in seen:
            continue
        comp = frozenset(bfs_distances(G, s, adj))
        seen |= comp
        comps.append(comp)
    return comps


def component_summary(G: Graph) -> ComponentSummary:
    """Components of size >= 2 with their diameters; isolated vertices counted apart.

    A looped vertex with no other edge is neither: it is not a component (too
    small) and not isolated (its square is a generator).
    """
    adj = G.adjacency()
    comps, diams, isolated = [], [], []
    for comp in connected_components(G):
        if len(comp) == 1:
            (v,) = comp
            if v not in G.loops:
                isolated.append(v)
            continue
        comps.append(comp)
        diams.append(max(max(bfs_distances(G, x, adj).values()) for x in comp))
    return ComponentSummary(
        components=tuple(comps),
        isolated=len(isolated),
        diameters=tuple(diams),
        p=len(comps),
        d=max(diams, default=0),
        bipartite=is_bipartite(G),
        isolated_vertices=frozenset(isolated),
    )


def component_of(G: Graph, u: int) -> frozenset[int]:
    return frozenset(bfs_distances(G, u))


def diameter(G: Graph) -> int:
    return component_summary(G).d


def induced_connected(G: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    adj = G.adjacency()
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x] & vs:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vs


def deletion_minor(G: Graph, S: Iterable[int]) -> Graph:
    """Remove the vertices in S with their edges and loops; slots stay as isolated vertices."""
    S = frozenset(S)
    edges = frozenset(e for e in G.edges if not (e[0] in S or e[1] in S))
    return Graph(G.n, edges, G.loops - S, G.vertex_names, "")


def contraction_ideal(I: MonomialIdeal, x: int) -> MonomialIdeal:
    return ideal_colon_monomial(I, Monomial.var(I.ambient_n, x))


def graph_of_ideal(I: MonomialIdeal, names: Sequence[str] = ()) -> Graph:
    """G(I) for an ideal generated in degree two (squares become loops)."""
    edges, loops = set(), set()
    for g in I.generators:
        if g.degree != 2:
            raise GraphError(f"generator {g} is not of degree two")
        s = g.support
        if len(s) == 1:
            loops.add(s[0])
        else:
            edges.add(s)
    return Graph(I.ambient_n, frozenset(edges), frozenset(loops), tuple(names))


def _shortest_path(G: Graph, u: int, target: int) -> list[int]:
    # BFS parents; ties resolved toward the smallest-index predecessor
    adj = G.adjacency()
    dist = bfs_distances(G, u, adj)
    path = [target]
    while path[-1] != u:
        x = path[-1]
        path.append(min(y for y in adj[x] if dist.get(y) == dist[x] - 1))
    return path[::-1]


def order_neighbors(G: Graph, u: int, targets: Iterable[int], Y: Iterable[int]) -> list[int]:
    """Order Y so that deleting any proper prefix keeps u and all targets connected.

    Construction: take the target x_q of least distance from u, fix a shortest
    u -> x_q path, and put the (at most one) member of Y on that path last.
    Everything else is in ascending vertex order.
    """
    targets = frozenset(targets)
    Y = list(dict.fromkeys(Y))
    if not targets:
        raise OrderNeighborsError("targets-nonempty", "no target vertices given")
    if not induced_connected(G, targets):
        raise OrderNeighborsError("targets-connected", f"induced graph on {sorted(targets)} is disconnected")
    dist = bfs_distances(G, u)
    if any(x not in dist for x in targets):
        raise OrderNeighborsError("targets-in-root-component", f"some target is not reachable from {u}")
    if targets & set(Y):
        raise OrderNeighborsError("Y-disjoint-from-targets", f"{sorted(targets & set(Y))} are targets")
    adj = G.adjacency()
    nbrs = set().union(*(adj[x] for x in targets))
    if not set(Y) <= nbrs:
        raise OrderNeighborsError("Y-in-neighborhood", f"{sorted(set(Y) - nbrs)} are not neighbors of the targets")
    q = min(targets, key=lambda x: (dist[x], x))
    on_path = set(_shortest_path(G, u, q)) & set(Y)
    assert len(on_path) <= 1
    rest = sorted(set(Y) - on_path)
    return rest + sorted(on_path)


def check_order(G: Graph, u: int, targets: Iterable[int], order: Sequence[int]) -> bool:
    """True when every proper prefix deletion keeps u and the targets in one component."""
    targets = frozenset(targets)
    for i in range(len(order)):
        H = deletion_minor(G, order[:i])
        if not targets <= component_of(H, u):
            return False
    return True


def parse_edge_list(text: str, allow_loops: bool = False, name: str = "") -> Graph:
    """Parse `u v` lines; `#` starts a comment; vertex order is first appearance."""
    index: dict[str, int] = {}
    edges, loops = set(), set()

    def vid(tok: str) -> int:
        if tok not in index:
            index[tok] = len(index)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        toks = line.split()
        if len(toks) != 2:
            col = len(raw) - len(raw.lstrip()) + 1
            raise EdgeListParseError(f"expected two vertex identifiers, got {len(toks)}", lineno, col)
        for tok in toks:
            if not tok.isalnum():
                raise EdgeListParseError(f"bad vertex identifier {tok!r}", lineno, raw.index(tok) + 1)
        a, b = toks
        if a == b:
            if not allow_loops:
                raise EdgeListParseError(f"loop {a} {b} not allowed without the loops flag",
                                         lineno, raw.index(a) + 1)
            loops.add(vid(a))
            continue
        ia, ib = vid(a), vid(b)
        edges.add((min(ia, ib), max(ia, ib)))
    names = [None] * len(index)
    for tok, i in index.items():
        names[i] = tok
    return Graph(len(index), frozenset(edges), frozenset(loops), tuple(names), name)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.vertex_names[u]} {G.vertex_names[v]}" for u, v in G.sorted_edges()]
    lines += [f"{G.vertex_names[v]} {G.vertex_names[v]}" for v in sorted(G.loops)]
    return "\n".join(lines) + "\n"


# builders

def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"path:{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle:{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"complete:{n}")


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"star:{leaves}")


def disjoint_union(G: Graph, H: Graph) -> Graph:
    k = G.n
    edges = set(G.edges) | {(u + k, v + k) for u, v in H.edges}
    loops = set(G.loops) | {v + k for v in H.loops}
    return Graph.from_edges(G.n + H.n, edges, loops)


def matching(p: int) -> Graph:
    """p disjoint edges."""
    if p < 1:
        raise GraphError("need at least one edge")
    return Graph.from_edges(2 * p, [(2 * i, 2 * i + 1) for i in range(p)], name=f"matching:{p}")


# 5-vertex block: pendant x1 on x2, triangle x2 x3 x4, pendant x5 on x4
_BLOCK = [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]


def block_chain(k: int) -> Graph:
    """k copies of the 5-vertex block, copy i's last vertex joined to copy i+1's first."""
    if k < 1:
        raise GraphError("block_chain needs k >= 1")
    edges = []
    for c in range(k):
        off = 5 * c
        edges += [(a + off, b + off) for a, b in _BLOCK]
        if c:
            edges.append((off - 1, off))
    return Graph.from_edges(5 * k, edges, name=f"block-chain:{k}")


PAPER_EXAMPLES = ("square-sharp", "cube-sharp")


def paper_example(example_id: str) -> Graph:
    if example_id == "square-sharp":
        edges = [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]
        n = 5
    elif example_id == "cube-sharp":
        edges = [(1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (7, 9), (8, 9), (9, 10)]
        n = 10
    else:
        raise GraphError(f"unknown example id {example_id!r}; known: {', '.join(PAPER_EXAMPLES)}")
    return Graph.from_edges(n, [(a - 1, b - 1) for a, b in edges], name=example_id)


def builtin(example_id: str) -> Graph:
    """Resolve `square-sharp`, `cube-sharp`, `block-chain:k`, `path:n`, `cycle:n`,
    `complete:n`, `star:k`, `matching:p`."""
    if example_id in PAPER_EXAMPLES:
        return paper_example(example_id)
    kind, _, arg = example_id.partition(":")
    builders = {"block-chain": block_chain, "path": path, "cycle": cycle,
                "complete": complete, "star": star, "matching": matching}
    if kind not in builders or not arg.isdigit():
        raise GraphError(f"unknown example id {example_id!r}")
    return builders[kind](int(arg))
