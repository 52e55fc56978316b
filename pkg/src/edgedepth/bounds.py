"""Closed-form depth bounds for powers of edge ideals, the colon gadgets
behind them, and a report combining everything for one (graph, power).

Bounds for t <= 3 are theorems; the unified formula at t >= 4 is an open
conjecture and is labelled as such wherever it appears.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .graphs import Graph, GraphError, component_summary, deletion_minor, edge_ideal
from .homology import GF2, Field
from .monomials import (Monomial, MonomialIdeal, ideal_add_variables, ideal_colon_monomial, ideal_power,
                        ideal_restrict, minimalize)
from .oracle import LATTICE, OracleBudgetError, depth

# depths stated alongside the built-in examples, kept for side-by-side reporting
REFERENCE_CLAIMS = {
    "square-sharp": {2: 0},
    "cube-sharp": {1: 2, 2: 1, 3: 0},
}


def ceil_div3(numerator: int) -> int:
    return -((-numerator) // 3)


def is_conjectural(t: int) -> bool:
    return t >= 4


def bound_power(d: int, p: int, t: int) -> int:
    """ceil((d - 4t + 5)/3) + p - 1; proven for t <= 3, conjectural beyond."""
    if d < 0 or p < 1 or t < 1:
        raise ValueError(f"need d >= 0, p >= 1, t >= 1 (got d={d}, p={p}, t={t})")
    return ceil_div3(d - 4 * t + 5) + p - 1


def bound_components_sum(diameters: Sequence[int]) -> int:
    """First power only: sum over components of ceil((d_i + 1)/3)."""
    if any(d < 1 for d in diameters):
        raise ValueError("component diameters are at least 1")
    return sum(ceil_div3(d + 1) for d in diameters)


def bound_p_minus_t(p: int, t: int) -> int:
    return p - t


def bound_positivity(p: int, t: int, bipartite: bool) -> int:
    return 1 if t <= p or bipartite else 0


def bound_loops(ell: int) -> int:
    """Looped graph, every loop at distance >= ell from some vertex u."""
    return ceil_div3(ell - 1)


class ColonKind(str, Enum):
    COLON1_VERTEX = "COLON1_VERTEX"              # (I : w),  w at distance ell
    COLON2_VERTEX = "COLON2_VERTEX"              # (I^2 : w)
    COLON2_DISCONNECTED = "COLON2_DISCONNECTED"  # (I^2 : w), w outside u's component, ell = d(uG)
    COLON3_EDGE_PRODUCT_2T = "COLON3_EDGE_PRODUCT_2T"  # (I^{t+1} : x1...x2t), all x_i at distance >= ell
    COLON3_TRIPLE = "COLON3_TRIPLE"              # (I^3 : x1x2x3), path x1-x2-x3 at distance >= ell
    COLON3_EDGE = "COLON3_EDGE"                  # (I^3 : xy), x at distance ell
    COLON3_VERTEX = "COLON3_VERTEX"              # (I^3 : w)
    TRIANGLE = "TRIANGLE"                        # Hamiltonian-cycle component, ell = d(J)
    PAIR_PATH = "PAIR_PATH"                      # depth R/I^2 from any pair at distance ell


_COLON_OFFSETS = {
    ColonKind.COLON1_VERTEX: 2,
    ColonKind.COLON2_VERTEX: -2,
    ColonKind.COLON2_DISCONNECTED: 0,
    ColonKind.COLON3_EDGE_PRODUCT_2T: -2,
    ColonKind.COLON3_TRIPLE: -5,
    ColonKind.COLON3_EDGE: -6,
    ColonKind.COLON3_VERTEX: -6,
    ColonKind.TRIANGLE: -3,
    ColonKind.PAIR_PATH: -3,
}


def bound_colon(kind: ColonKind | str, ell: int, p: int = 1) -> int:
    """ceil((ell + offset)/3) for the given colon shape; PAIR_PATH adds p - 1."""
    try:
        kind = ColonKind(kind)
    except ValueError:
        raise ValueError(f"unknown colon kind {kind!r}") from None
    if ell < 0:
        raise ValueError("ell must be non-negative")
    value = ceil_div3(ell + _COLON_OFFSETS[kind])
    if kind is ColonKind.PAIR_PATH:
        value += p - 1
    return value


# ---------------------------------------------------------------------------
# colon gadgets

def in_edge_power(exps: Sequence[int], edges: Sequence[tuple[int, int]], s: int) -> bool:
    """Whether some product of s edges (repeats allowed) divides x^exps.

    Searches edge multisets directly, independent of ideal_power.
    """
    edges = tuple(sorted(set(edges)))

    @lru_cache(maxsize=None)
    def search(rem: tuple[int, ...], k: int, start: int) -> bool:
        if k == 0:
            return True
        for j in range(start, len(edges)):
            a, b = edges[j]
            if rem[a] and rem[b] and (a != b or rem[a] >= 2):
                nxt = list(rem)
                nxt[a] -= 1
                nxt[b] -= 1
                if search(tuple(nxt), k - 1, j):
                    return True
        return False

    return search(tuple(exps), s, 0)


def _edge_tuples(G: Graph) -> list[tuple[int, int]]:
    return G.sorted_edges() + [(v, v) for v in sorted(G.loops)]


def construct_E(G: Graph, factors: Monomial, t: int) -> MonomialIdeal:
    """(I, E) where E holds every degree-two y1*y2 on the union of the factors'
    neighborhoods with y1*y2*factors in I^{t+1}. Equals (I^{t+1} : factors)."""
    if factors.degree != 2 * t:
        raise ValueError(f"factors must be a product of {2 * t} vertices, got degree {factors.degree}")
    edges = _edge_tuples(G)
    if not in_edge_power(factors.exponents, edges, t):
        raise ValueError(f"{factors.to_str(G.vertex_names)} is not in I^{t}")
    union = sorted(set().union(*(G.neighbors(v) for v in factors.support)))
    E = []
    for i, y1 in enumerate(union):
        for y2 in union[i:]:
            e = list(factors.exponents)
            e[y1] += 1
            e[y2] += 1
            if in_edge_power(e, edges, t + 1):
                E.append(Monomial.from_vertices(G.n, (y1, y2)))
    return minimalize(list(edge_ideal(G).generators) + E, G.n)


def leaf_colon_check(G: Graph, x: int, t: int, y: int | None = None) -> bool:
    """(I^t : xy) == I^{t-1} for a leaf x with neighbor y."""
    if t < 2:
        raise ValueError("t must be at least 2")
    if not G.is_leaf(x):
        raise GraphError(f"{G.vertex_names[x]} is not a leaf")
    (nbr,) = G.neighbors(x)
    if y is not None and y != nbr:
        raise GraphError(f"{G.vertex_names[y]} is not the neighbor of {G.vertex_names[x]}")
    I = edge_ideal(G)
    xy = Monomial.from_vertices(G.n, (x, nbr))
    return ideal_colon_monomial(ideal_power(I, t), xy) == ideal_power(I, t - 1)


def hamorey_check(I: MonomialIdeal, M: Monomial, y: int) -> bool:
    """((I : M), y) == ((K : M), y) where K keeps the generators of I free of y."""
    if M.exponents[y]:
        raise ValueError("y must not divide M")
    K = ideal_restrict(I, y)
    left = ideal_add_variables(ideal_colon_monomial(I, M), [y])
    right = ideal_add_variables(ideal_colon_monomial(K, M), [y])
    return left == right


# ---------------------------------------------------------------------------
# exhausting neighbors

@dataclass(frozen=True)
class TraceStep:
    index: int
    deleted: tuple[int, ...]   # vertices deleted before this step
    vertex: int                # y_i
    ideal: MonomialIdeal       # (I_{i-1}^t : M y_i)
    depth: int | None          # depth in R_{i-1}; None when the colon is the unit ideal (depth of 0 is infinite)
    rewrite_ok: bool           # ((I_{i-1}^t : M), y_i) == ((I_i^t : M), y_i)


@dataclass(frozen=True)
class ReductionTrace:
    M: Monomial
    t: int
    order: tuple[int, ...]
    steps: tuple[TraceStep, ...]
    terminal: MonomialIdeal    # (I_s^t : M)
    terminal_depth: int | None  # depth in R_s
    root_depth: int | None      # depth R/(I^t : M)

    @property
    def a(self) -> int | None:
        return min((s.depth for s in self.steps if s.depth is not None), default=None)

    @property
    def b(self) -> int | None:
        return self.terminal_depth

    @property
    def floor(self) -> int | None:
        """min(a, b) over the finite values; None means every term is the zero module."""
        vals = [v for v in (self.a, self.b) if v is not None]
        return min(vals, default=None)

    @property
    def rewrites_ok(self) -> bool:
        return all(s.rewrite_ok for s in self.steps)

    @property
    def holds(self) -> bool:
        if not self.rewrites_ok:
            return False
        if self.root_depth is None or self.floor is None:
            # R/(I^t : M) = 0 has infinite depth; if it is nonzero some term must be too
            return self.root_depth is None
        return self.root_depth >= self.floor


def exhaust_trace(G: Graph, u: int, M: Monomial, t: int, Y: Sequence[int], field: Field = GF2,
                  strategy: str = LATTICE, budget_ms: float | None = None) -> ReductionTrace:
    """Delete Y one vertex at a time, recording each colon (I_{i-1}^t : M y_i),
    the terminal (I_s^t : M), and their depths in the shrinking rings.

    `u` is the root the ordering was built from; it does not enter the algebra.
    """
    Y = tuple(Y)
    if len(set(Y)) != len(Y):
        raise ValueError("Y has repeated vertices")
    if any(M.exponents[y] for y in Y):
        raise ValueError("no vertex of Y may divide M")
    if not 0 <= u < G.n:
        raise GraphError(f"root {u} out of range")
    n = G.n

    def ring_depth(J: MonomialIdeal, removed: int) -> int | None:
        # deleted vertices never occur in J, so they are free variables of R
        if J.is_unit():
            return None
        return depth(J, n, strategy, field, budget_ms=budget_ms).depth - removed

    steps = []
    power = ideal_power(edge_ideal(G), t)
    for i, y in enumerate(Y, start=1):
        step_ideal = ideal_colon_monomial(power, M * Monomial.var(n, y))
        next_power = ideal_power(edge_ideal(deletion_minor(G, Y[:i])), t)
        rewrite_ok = (ideal_restrict(power, y) == next_power and
                      ideal_add_variables(ideal_colon_monomial(power, M), [y]) ==
                      ideal_add_variables(ideal_colon_monomial(next_power, M), [y]))
        steps.append(TraceStep(i, Y[:i - 1], y, step_ideal, ring_depth(step_ideal, i - 1), rewrite_ok))
        power = next_power
    terminal = ideal_colon_monomial(power, M)
    root = ideal_colon_monomial(ideal_power(edge_ideal(G), t), M)
    return ReductionTrace(M, t, Y, tuple(steps), terminal, ring_depth(terminal, len(Y)), ring_depth(root, 0))


# ---------------------------------------------------------------------------
# combined report

@dataclass
class BoundReport:
    n: int
    edge_count: int
    d: int
    p: int
    isolated: int
    diameters: tuple[int, ...]
    bipartite: bool
    t: int
    components_sum: int | None
    unified: int
    p_minus_t: int
    positivity: int
    bipartite_positivity: int
    proven: int
    combined: int
    conjectural: bool
    stanley_depth_bound: int | None
    oracle_depth: int | None = None
    sharp: bool | None = None
    status: str | None = None
    claimed_depth: int | None = None
    extra: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["diameters"] = list(self.diameters)
        rec.pop("extra")
        return rec

    def to_text(self) -> str:
        rows = [
            ("n", self.n), ("edges", self.edge_count), ("d", self.d), ("p", self.p),
            ("isolated", self.isolated), ("component diameters", list(self.diameters)),
            ("bipartite", self.bipartite), ("t", self.t),
            ("components_sum (t=1)", self.components_sum),
            ("unified" + (" [conjectural]" if self.conjectural else ""), self.unified),
            ("p_minus_t", self.p_minus_t), ("positivity (t<=p)", self.positivity),
            ("bipartite_positivity", self.bipartite_positivity),
            ("proven", self.proven), ("combined", self.combined),
            ("stanley_depth_bound", self.stanley_depth_bound),
            ("oracle_depth", self.oracle_depth), ("sharp", self.sharp), ("status", self.status),
        ]
        if self.claimed_depth is not None:
            rows.append(("claimed_depth (reference)", self.claimed_depth))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {'-' if v is None else v}" for k, v in rows)


def classify(oracle_depth: int | None, proven: int, combined: int) -> str:
    if oracle_depth is None:
        return "SKIPPED"
    if oracle_depth < proven:
        return "BUG"
    if oracle_depth < combined:
        return "CANDIDATE-COUNTEREXAMPLE"
    return "OK"


def bound_report(G: Graph, t: int, with_oracle: bool = False, field: Field = GF2, strategy: str = LATTICE,
                 budget_ms: float | None = None, **caps) -> BoundReport:
    if not G.edges:
        raise GraphError("bound_report needs a graph with at least one edge")
    if G.loops:
        raise GraphError("bound_report is for simple graphs; remove loops first")
    if t < 1:
        raise ValueError("t must be positive")
    s = component_summary(G)
    comp_sum = bound_components_sum(s.diameters) if t == 1 else None
    unified = bound_power(s.d, s.p, t)
    pmt = bound_p_minus_t(s.p, t)
    pos = 1 if t <= s.p else 0
    bip = 1 if s.bipartite else 0
    proven_rules = [pmt, pos, bip, 0]
    if comp_sum is not None:
        proven_rules.append(comp_sum)
    if not is_conjectural(t):
        proven_rules.append(unified)
    proven = max(proven_rules)
    combined = max(proven, unified)
    report = BoundReport(
        n=G.n, edge_count=len(G.edges), d=s.d, p=s.p, isolated=s.isolated, diameters=s.diameters,
        bipartite=s.bipartite, t=t, components_sum=comp_sum, unified=unified, p_minus_t=pmt,
        positivity=pos, bipartite_positivity=bip, proven=proven, combined=combined,
        conjectural=is_conjectural(t), stanley_depth_bound=None if is_conjectural(t) else unified,
        claimed_depth=REFERENCE_CLAIMS.get(G.name, {}).get(t),
    )
    if with_oracle:
        J = ideal_power(edge_ideal(G), t)
        try:
            report.oracle_depth = depth(J, G.n, strategy, field, budget_ms=budget_ms, **caps).depth
        except OracleBudgetError as exc:
            report.extra["skip_reason"] = str(exc)
        if report.oracle_depth is not None:
            report.sharp = report.oracle_depth == combined
        report.status = classify(report.oracle_depth, proven, combined)
    return report
