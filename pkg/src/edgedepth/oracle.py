"""Multigraded Betti numbers, projective dimension and depth of R/J.

For a monomial ideal J and a multidegree b, the Betti number of R/J in
homological degree i >= 1 and degree b is the rank of H~_{i-2} of the upper
Koszul complex K^b(J) = {S subset supp(b) : x^b / x^S in J}. Nonzero values only
occur at lcms of generators (LATTICE strategy); the BOX strategy scans every
divisor of the lcm of all generators and serves as a cross-check.

depth R/J = n - pd R/J (Auslander-Buchsbaum).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .homology import GF2, Field, SimplicialComplex, maximal_masks, reduced_homology_from_masks
from .monomials import Monomial, MonomialIdeal

LATTICE = "lattice"
BOX = "box"
STRATEGIES = (LATTICE, BOX)

DEFAULT_LATTICE_CAP = 2 ** 22
DEFAULT_BOX_CAP = 2 ** 22
DEFAULT_SOCLE_BUDGET = 2 ** 24

# numpy work arrays are sized to roughly this many elements
_CHUNK_ELEMS = 4_000_000


class OracleBudgetError(RuntimeError):
    """A configured cap was exceeded. `cap` names it."""

    def __init__(self, cap: str, limit, message: str):
        self.cap = cap
        self.limit = limit
        super().__init__(message)


class LatticeOverflow(OracleBudgetError):
    def __init__(self, limit: int):
        super().__init__("lattice_cap", limit,
                         f"lcm lattice exceeds {limit} elements; raise lattice_cap, use the box strategy, "
                         "or try a smaller instance")


class BoxOverflow(OracleBudgetError):
    def __init__(self, limit: int, size: int):
        super().__init__("box_cap", limit, f"divisor box has {size} elements, over the budget of {limit}")


class SocleBudgetOverflow(OracleBudgetError):
    def __init__(self, limit: int, size: int):
        super().__init__("socle_budget", limit, f"socle search box has {size} elements, over the budget of {limit}")


class TimeBudgetExceeded(OracleBudgetError):
    def __init__(self, limit_ms):
        super().__init__("budget_ms", limit_ms, f"instance exceeded the time budget of {limit_ms} ms")


@dataclass(frozen=True)
class BettiTable:
    ambient_n: int
    field: Field
    entries: dict  # (i, Monomial) -> rank

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(r for (j, _), r in self.entries.items() if j == i)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return dict(sorted(out.items()))

    def sorted_entries(self) -> list[tuple[int, Monomial, int]]:
        return sorted(((i, b, r) for (i, b), r in self.entries.items()),
                      key=lambda e: (e[0], e[1].sort_key()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ambient_n == other.ambient_n and self.entries == other.entries

    def __hash__(self):
        return hash((self.ambient_n, frozenset(self.entries.items())))

    def to_text(self, names=None) -> str:
        lines = [f"Betti numbers of R/J over {self.field} (n={self.ambient_n}, pd={self.pd})"]
        for i, b, r in self.sorted_entries():
            lines.append(f"  beta[{i}, {b.to_str(names)}] = {r}")
        lines.append("  totals: " + ", ".join(f"beta_{i}={r}" for i, r in self.totals().items()))
        return "\n".join(lines)


@dataclass(frozen=True)
class DepthResult:
    depth: int
    pd: int
    strategy: str
    field: Field
    multidegrees_examined: int = 0
    wall_time: float = 0.0
    stats: dict = field(default_factory=dict, compare=False)


def _gens_array(J: MonomialIdeal) -> np.ndarray:
    return np.array([g.exponents for g in J.generators], dtype=np.int64).reshape(-1, J.ambient_n)


def _radix(top: np.ndarray) -> np.ndarray | None:
    sizes = top.astype(object) + 1
    total = 1
    for s in sizes:
        total *= int(s)
    if total >= 2 ** 62:
        return None
    return np.cumprod(np.r_[1, (top[:-1] + 1)]).astype(np.int64)


def _unique_rows(rows: np.ndarray, radix: np.ndarray | None) -> np.ndarray:
    if radix is not None:
        codes = np.unique(rows @ radix)
        return codes
    return np.unique(rows, axis=0)


def _lattice_array(J: MonomialIdeal, cap: int) -> np.ndarray:
    """All lcms of nonempty subsets of generators as an (L, n) array."""
    G = _gens_array(J)
    n = J.ambient_n
    top = G.max(axis=0)
    radix = _radix(top)
    known = _unique_rows(G, radix)
    if len(known) > cap:
        raise LatticeOverflow(cap)
    frontier = G
    m = len(G)
    step = max(1, _CHUNK_ELEMS // max(1, m * n))
    while len(frontier):
        found = []
        for s in range(0, len(frontier), step):
            joins = np.maximum(frontier[s:s + step, None, :], G[None, :, :]).reshape(-1, n)
            found.append(_unique_rows(joins, radix))
        if radix is not None:
            cand = np.unique(np.concatenate(found))
            new = np.setdiff1d(cand, known, assume_unique=True)
            known = np.union1d(known, new)
            frontier = (new[:, None] // radix) % (top + 1)
        else:
            cand = np.unique(np.concatenate(found), axis=0)
            kset = {r.tobytes() for r in known}
            new = np.array([r for r in cand if r.tobytes() not in kset], dtype=np.int64).reshape(-1, n)
            known = np.unique(np.concatenate([known, new]), axis=0)
            frontier = new
        if len(known) > cap:
            raise LatticeOverflow(cap)
    if radix is not None:
        return (known[:, None] // radix) % (top + 1)
    return known


def _check_proper_nonzero(J: MonomialIdeal):
    if J.is_zero():
        raise ValueError("the zero ideal has no lcm lattice / Betti table beyond degree 0")
    if J.is_unit():
        raise ValueError("J must be a proper ideal")


def lcm_lattice(J: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list[Monomial]:
    _check_proper_nonzero(J)
    arr = _lattice_array(J, cap)
    return sorted((Monomial(tuple(int(e) for e in row)) for row in arr), key=Monomial.sort_key)


def _box_array(J: MonomialIdeal, cap: int) -> Iterator[np.ndarray]:
    top = _gens_array(J).max(axis=0)
    sizes = [int(t) + 1 for t in top]
    total = 1
    for s in sizes:
        total *= s
    if total > cap:
        raise BoxOverflow(cap, total)
    radix = np.cumprod([1] + sizes[:-1]).astype(np.int64)
    step = max(1, _CHUNK_ELEMS // max(1, len(sizes)))
    for s in range(0, total, step):
        codes = np.arange(s, min(total, s + step), dtype=np.int64)
        yield (codes[:, None] // radix) % (top + 1)


def upper_koszul_complex(J: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """K^b(J) on the variables of J; faces are subsets S of supp(b) with x^b / x^S in J."""
    be = b.exponents
    masks = []
    for g in J.generators:
        ge = g.exponents
        if all(x <= y for x, y in zip(ge, be)):
            # S is a face via g iff b - 1_S >= g, i.e. S within {i : b_i > g_i}
            masks.append(sum(1 << i for i, (x, y) in enumerate(zip(ge, be)) if y > x))
    return SimplicialComplex.from_masks(J.ambient_n, maximal_masks(masks))


class _KoszulBatch:
    """Vectorized facet computation for many multidegrees against one ideal."""

    def __init__(self, J: MonomialIdeal):
        self.G = _gens_array(J)
        self.n = J.ambient_n
        if self.n > 62:
            raise ValueError("at most 62 variables are supported")
        self.bits = (np.int64(1) << np.arange(self.n, dtype=np.int64))
        self.step = max(1, _CHUNK_ELEMS // max(1, len(self.G) * self.n))

    def facets(self, B: np.ndarray) -> Iterator[tuple[np.ndarray, list[int]]]:
        G, bits = self.G, self.bits
        for s in range(0, len(B), self.step):
            chunk = B[s:s + self.step]
            div = (G[None, :, :] <= chunk[:, None, :]).all(axis=2)
            fm = (chunk[:, None, :] > G[None, :, :]) @ bits
            for row, d, f in zip(chunk, div, fm):
                if d.any():
                    yield row, maximal_masks(f[d].tolist())
                else:
                    yield row, []


def _koszul_homology(masks: list[int], field: Field) -> dict[int, int]:
    if not masks:
        return {}
    common = masks[0]
    for m in masks[1:]:
        common &= m
    if common:
        return {}  # a cone: acyclic
    hom = reduced_homology_from_masks(masks, field)
    return {k: r for k, r in hom.items() if r}


def _candidates(J: MonomialIdeal, strategy: str, lattice_cap: int, box_cap: int) -> Iterator[np.ndarray]:
    if strategy == LATTICE:
        yield _lattice_array(J, lattice_cap)
    elif strategy == BOX:
        yield from _box_array(J, box_cap)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; use {LATTICE} or {BOX}")


def _deadline(budget_ms):
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000.0


def betti_table(J: MonomialIdeal, strategy: str = LATTICE, field: Field = GF2,
                lattice_cap: int = DEFAULT_LATTICE_CAP, box_cap: int = DEFAULT_BOX_CAP,
                budget_ms: float | None = None) -> BettiTable:
    _check_proper_nonzero(J)
    deadline = _deadline(budget_ms)
    n = J.ambient_n
    entries = {(0, Monomial.one(n)): 1}
    kb = _KoszulBatch(J)
    for B in _candidates(J, strategy, lattice_cap, box_cap):
        for row, masks in kb.facets(B):
            if deadline is not None and time.monotonic() > deadline:
                raise TimeBudgetExceeded(budget_ms)
            hom = _koszul_homology(masks, field)
            if hom:
                b = Monomial(tuple(int(e) for e in row))
                for k, r in hom.items():
                    entries[(k + 2, b)] = r
    return BettiTable(n, field, entries)


def _restrict_to_support(J: MonomialIdeal) -> MonomialIdeal:
    supp = J.support
    gens = tuple(Monomial(tuple(g.exponents[i] for i in supp)) for g in J.generators)
    return MonomialIdeal(len(supp), gens)


def projective_dimension(J: MonomialIdeal, strategy: str = LATTICE, field: Field = GF2,
                         lattice_cap: int = DEFAULT_LATTICE_CAP, box_cap: int = DEFAULT_BOX_CAP,
                         budget_ms: float | None = None) -> tuple[int, int]:
    """(pd R/J, number of multidegrees whose Koszul complex was examined).

    Equal to `betti_table(...).pd`, but candidates are visited by decreasing
    support size and the scan stops once no remaining multidegree can carry a
    higher homological degree (beta_{i,b} != 0 forces |supp b| >= i).
    """
    if J.is_zero():
        return 0, 0
    _check_proper_nonzero(J)
    deadline = _deadline(budget_ms)
    kb = _KoszulBatch(J)
    pd = 1
    examined = 0
    for B in _candidates(J, strategy, lattice_cap, box_cap):
        ssize = (B > 0).sum(axis=1)
        order = np.argsort(-ssize, kind="stable")
        B, ssize = B[order], ssize[order]
        keep = ssize > pd
        B = B[keep]
        for row, masks in kb.facets(B):
            if int((row > 0).sum()) <= pd:
                break
            if deadline is not None and time.monotonic() > deadline:
                raise TimeBudgetExceeded(budget_ms)
            examined += 1
            hom = _koszul_homology(masks, field)
            if hom:
                pd = max(pd, max(hom) + 2)
    return pd, examined


def depth(J: MonomialIdeal, ambient_n: int | None = None, strategy: str = LATTICE, field: Field = GF2,
          lattice_cap: int = DEFAULT_LATTICE_CAP, box_cap: int = DEFAULT_BOX_CAP,
          budget_ms: float | None = None) -> DepthResult:
    """depth of R/J where R has `ambient_n` variables (default: those of J).

    Variables outside the support of J are free and variables that are
    generators are split off before the Betti computation.
    """
    t0 = time.perf_counter()
    n = J.ambient_n if ambient_n is None else ambient_n
    if n < J.ambient_n:
        raise ValueError(f"ambient_n={n} is smaller than the ideal's {J.ambient_n} variables")
    if J.is_unit():
        raise ValueError("depth of R/R is undefined; J must be proper")
    linear = [g for g in J.generators if g.degree == 1]
    rest = MonomialIdeal(J.ambient_n, tuple(g for g in J.generators if g.degree > 1))
    if rest.is_zero():
        pd_rest, examined = 0, 0
    else:
        pd_rest, examined = projective_dimension(_restrict_to_support(rest), strategy, field,
                                                 lattice_cap, box_cap, budget_ms)
    pd = pd_rest + len(linear)
    return DepthResult(n - pd, pd, strategy, field, examined, time.perf_counter() - t0)


def depth_from_table(J: MonomialIdeal, ambient_n: int | None = None, strategy: str = LATTICE,
                     field: Field = GF2, **caps) -> int:
    """depth via the full Betti table of J itself (no splitting, no pruning)."""
    n = J.ambient_n if ambient_n is None else ambient_n
    if J.is_zero():
        return n
    return n - betti_table(J, strategy, field, **caps).pd


def socle_depth_zero(J: MonomialIdeal, ambient_n: int | None = None,
                     budget: int = DEFAULT_SOCLE_BUDGET) -> Monomial | None:
    """A monomial z outside J with z * x_i in J for every variable, or None.

    Only exponents below the generators' componentwise max need checking: if
    z_i reaches that max then z * x_i in J already forces z in J.
    """
    n = J.ambient_n if ambient_n is None else ambient_n
    if J.is_unit():
        raise ValueError("J must be proper")
    if J.is_zero() or n > J.ambient_n or len(J.support) < J.ambient_n:
        return None
    G = _gens_array(J)
    top = G.max(axis=0)
    sizes = [int(t) for t in top]
    total = 1
    for s in sizes:
        total *= s
    if total > budget:
        raise SocleBudgetOverflow(budget, total)
    radix = np.cumprod([1] + sizes[:-1]).astype(np.int64)
    step = max(1, _CHUNK_ELEMS // max(1, len(G) * J.ambient_n))

    def member(Z: np.ndarray) -> np.ndarray:
        return (G[None, :, :] <= Z[:, None, :]).all(axis=2).any(axis=1)

    for s in range(0, total, step):
        codes = np.arange(s, min(total, s + step), dtype=np.int64)
        Z = (codes[:, None] // radix) % top
        Z = Z[~member(Z)]
        for i in range(J.ambient_n):
            if not len(Z):
                break
            Zi = Z.copy()
            Zi[:, i] += 1
            Z = Z[member(Zi)]
        if len(Z):
            return Monomial(tuple(int(e) for e in Z[0]))
    return None
