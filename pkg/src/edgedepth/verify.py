"""Exhaustive and seeded checks of the colon identities and depth bounds.

Each suite returns a `Summary` with the number of instances checked and a
reproducer for every failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bounds import (ColonKind, bound_colon, bound_loops, bound_report, construct_E, exhaust_trace,
                     hamorey_check, leaf_colon_check)
from .enumeration import enumerate_connected_graphs
from .graphs import (Graph, builtin, check_order, distance_partition, edge_ideal, format_edge_list,
                     order_neighbors, path)
from .homology import GF2, Field
from .monomials import Monomial, MonomialIdeal, ideal_colon_monomial, ideal_from_exponents, ideal_power
from .oracle import LATTICE, depth

LEMMAS = ("edge", "leaf", "hamorey", "exhaust", "order")


@dataclass
class Summary:
    name: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, **reproducer):
        self.checked += 1
        if not passed:
            self.failures.append(reproducer)

    def to_text(self) -> str:
        head = f"{self.name}: {self.checked} checked, {len(self.failures)} failed -> {'PASS' if self.ok else 'FAIL'}"
        if self.failures:
            head += "\n  first failure: " + repr(self.failures[0])
        return head


def connected_graphs(max_n: int, min_n: int = 2) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_connected_graphs(n)


def _edges(G: Graph) -> str:
    return format_edge_list(G).strip().replace("\n", ", ")


def verify_leaf(max_n: int = 6, powers: Iterable[int] = (2, 3)) -> Summary:
    s = Summary("leaf")
    for G in connected_graphs(max_n):
        for x in range(G.n):
            if not G.is_leaf(x):
                continue
            for t in powers:
                s.record(leaf_colon_check(G, x, t), graph=_edges(G), leaf=G.vertex_names[x], t=t)
    return s


def _check_E(s: Summary, G: Graph, factors: Monomial, t: int):
    direct = ideal_colon_monomial(ideal_power(edge_ideal(G), t + 1), factors)
    s.record(construct_E(G, factors, t) == direct, graph=_edges(G), factors=factors.to_str(G.vertex_names), t=t)


def verify_edge(max_n: int = 6, samples: int = 200, seed: int = 0, sample_powers: Iterable[int] = (2,)) -> Summary:
    """Every edge of every connected graph at t = 1, then seeded products of t edges."""
    s = Summary("edge")
    graphs = list(connected_graphs(max_n))
    for G in graphs:
        for u, v in G.sorted_edges():
            _check_E(s, G, Monomial.from_vertices(G.n, (u, v)), 1)
    rng = random.Random(seed)
    sample_powers = list(sample_powers)
    for _ in range(samples):
        G = rng.choice(graphs)
        t = rng.choice(sample_powers)
        edges = G.sorted_edges()
        chosen = [rng.choice(edges) for _ in range(t)]
        _check_E(s, G, Monomial.from_vertices(G.n, [v for e in chosen for v in e]), t)
    return s


def random_monomial_ideal(rng: random.Random, n: int, max_exp: int = 3, max_gens: int = 5) -> MonomialIdeal:
    """A nonzero proper monomial ideal with no unit generator."""
    while True:
        k = rng.randint(1, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(k)]
        gens = [g for g in gens if any(g)]
        if gens:
            return ideal_from_exponents(gens, n)


def verify_hamorey(samples: int = 200, seed: int = 0, max_n: int = 5) -> Summary:
    s = Summary("hamorey")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, max_n)
        I = random_monomial_ideal(rng, n)
        y = rng.randrange(n)
        M = Monomial(tuple(0 if i == y else rng.randint(0, 3) for i in range(n)))
        s.record(hamorey_check(I, M, y), ideal=str(I), M=str(M), y=f"x{y + 1}")
    return s


def verify_order(max_n: int = 6) -> Summary:
    """Every root u, every single target x in u's component, Y = N(x)."""
    s = Summary("order")
    for G in connected_graphs(max_n):
        for u in range(G.n):
            for x in range(G.n):
                Y = sorted(G.neighbors(x))
                if not Y:
                    continue
                order = order_neighbors(G, u, {x}, Y)
                s.record(sorted(order) == Y and check_order(G, u, {x}, order),
                         graph=_edges(G), u=G.vertex_names[u], target=G.vertex_names[x], order=order)
    return s


def verify_exhaust(graphs: Iterable[Graph], powers: Iterable[int] = (2,), root: int = 0,
                   field: Field = GF2, strategy: str = LATTICE) -> Summary:
    """For each vertex w: order N(w) from `root`, run the trace with M = w, check the min inequality."""
    s = Summary("exhaust")
    powers = list(powers)
    for G in graphs:
        for w in range(G.n):
            Y = sorted(G.neighbors(w))
            if not Y:
                continue
            order = order_neighbors(G, root, {w}, Y)
            for t in powers:
                tr = exhaust_trace(G, root, Monomial.var(G.n, w), t, order, field, strategy)
                s.record(tr.holds, graph=_edges(G), w=G.vertex_names[w], t=t, order=list(order),
                         root_depth=tr.root_depth, floor=tr.floor, rewrites_ok=tr.rewrites_ok)
    return s


def run_lemma(lemma: str, max_n: int = 5, powers: Iterable[int] | None = None, seed: int = 0,
              samples: int = 200, example: str | None = None) -> Summary:
    if lemma == "leaf":
        return verify_leaf(max_n, powers or (2, 3))
    if lemma == "edge":
        return verify_edge(max_n, samples, seed)
    if lemma == "hamorey":
        return verify_hamorey(samples, seed)
    if lemma == "order":
        return verify_order(max_n)
    if lemma == "exhaust":
        graphs = [builtin(example)] if example else list(connected_graphs(max_n))
        return verify_exhaust(graphs, powers or (2,))
    raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")


# ---------------------------------------------------------------------------
# bound conformance

def verify_theorems(graphs: Iterable[Graph], powers: Iterable[int] = (1, 2, 3), field: Field = GF2,
                    strategy: str = LATTICE, budget_ms: float | None = None) -> tuple[Summary, int]:
    """oracle depth >= proven combined bound; returns (summary, skipped count)."""
    s = Summary("theorems")
    skipped = 0
    for G in graphs:
        for t in powers:
            r = bound_report(G, t, with_oracle=True, field=field, strategy=strategy, budget_ms=budget_ms)
            if r.oracle_depth is None:
                skipped += 1
                continue
            s.record(r.oracle_depth >= r.proven, graph=_edges(G), t=t, oracle=r.oracle_depth, bound=r.proven)
    return s, skipped


def verify_colon_bounds(max_n: int = 6, powers: Iterable[int] = (1, 2), field: Field = GF2) -> Summary:
    """depth R/(I^t : w) against the distance bound, for every root u and vertex w.

    depth R/(I^t : w) does not depend on u, so it is computed once per w and
    compared with the bound at every distance layer w occupies.
    """
    kinds = {1: ColonKind.COLON1_VERTEX, 2: ColonKind.COLON2_VERTEX, 3: ColonKind.COLON3_VERTEX}
    s = Summary("colon-bounds")
    for G in connected_graphs(max_n):
        I = edge_ideal(G)
        for t in powers:
            P = ideal_power(I, t)
            for w in range(G.n):
                dep = depth(ideal_colon_monomial(P, Monomial.var(G.n, w)), G.n, field=field).depth
                for u in range(G.n):
                    ell = distance_partition(G, u).layer_of(w)
                    bound = bound_colon(kinds[t], ell)
                    s.record(dep >= bound, graph=_edges(G), t=t, u=G.vertex_names[u], w=G.vertex_names[w],
                             ell=ell, depth=dep, bound=bound)
    return s


def verify_colon_bounds_sampled(samples: int = 50, seed: int = 0, max_n: int = 6, t: int = 3,
                                field: Field = GF2) -> Summary:
    kinds = {1: ColonKind.COLON1_VERTEX, 2: ColonKind.COLON2_VERTEX, 3: ColonKind.COLON3_VERTEX}
    s = Summary(f"colon-bounds-t{t}")
    rng = random.Random(seed)
    graphs = list(connected_graphs(max_n, min_n=3))
    for _ in range(samples):
        G = rng.choice(graphs)
        u, w = rng.randrange(G.n), rng.randrange(G.n)
        ell = distance_partition(G, u).layer_of(w)
        P = ideal_power(edge_ideal(G), t)
        dep = depth(ideal_colon_monomial(P, Monomial.var(G.n, w)), G.n, field=field).depth
        bound = bound_colon(kinds[t], ell)
        s.record(dep >= bound, graph=_edges(G), t=t, u=G.vertex_names[u], w=G.vertex_names[w], ell=ell,
                 depth=dep, bound=bound)
    return s


def looped_path(ell: int) -> Graph:
    """Path x1 - ... - x_{ell+1} with a loop on the last vertex; x1 is at distance ell from it."""
    return path(ell + 1).with_loops([ell])


def verify_loops(lengths: Iterable[int] = range(3, 7), field: Field = GF2) -> Summary:
    s = Summary("loops")
    for ell in lengths:
        G = looped_path(ell)
        dep = depth(edge_ideal(G), G.n, field=field).depth
        s.record(dep >= bound_loops(ell), ell=ell, depth=dep, bound=bound_loops(ell))
    return s

