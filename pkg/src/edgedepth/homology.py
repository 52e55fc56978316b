"""Reduced simplicial homology ranks over Q or GF(p), computed exactly.

Faces are handled as integer bitmasks over the vertex set. Over GF(2) a
boundary row is itself a bitmask and elimination is XOR; over GF(p) rows are
dicts reduced mod p; over Q the rank comes from fraction-free (Bareiss)
elimination on integer matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Field:
    characteristic: int  # 0 for the rationals

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or p >= 2 ** 31 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")

    @property
    def name(self) -> str:
        return "q" if self.characteristic == 0 else f"gf{self.characteristic}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return RATIONALS
        if t.startswith("gf"):
            return cls(int(t[2:]))
        raise ValueError(f"unknown field {text!r}; use q or gf<p>")

    def __str__(self) -> str:
        return self.name


RATIONALS = Field(0)
GF2 = Field(2)


def GF(p: int) -> Field:
    return Field(p)


def _masks_to_faces(masks: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(i for i in range(m.bit_length()) if m >> i & 1) for m in masks)


def maximal_masks(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 0..ground_n-1 given by its facets.

    `facets == ()` is the void complex; `facets == ((),)` is the complex whose
    only face is the empty set.
    """
    ground_n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        masks = []
        for f in self.facets:
            m = 0
            for v in f:
                if not 0 <= v < self.ground_n:
                    raise ValueError(f"vertex {v} outside ground set of size {self.ground_n}")
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "facets", _masks_to_faces(maximal_masks(masks)))

    @classmethod
    def from_masks(cls, ground_n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(ground_n, _masks_to_faces(masks))

    @property
    def masks(self) -> list[int]:
        return [sum(1 << v for v in f) for f in self.facets]

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int | None:
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> dict[int, list[int]]:
        return faces_by_dim(self.masks)

    def f_vector(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.faces().items()}

    def cone(self) -> "SimplicialComplex":
        apex = self.ground_n
        return SimplicialComplex(self.ground_n + 1, tuple(f + (apex,) for f in self.facets))


def faces_by_dim(facet_masks: Sequence[int]) -> dict[int, list[int]]:
    """All faces as bitmasks, grouped by dimension and sorted (colex on masks)."""
    seen: set[int] = set()
    for F in facet_masks:
        if F in seen:
            continue
        sub = F
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & F
    out: dict[int, list[int]] = {}
    for m in seen:
        out.setdefault(bin(m).count("1") - 1, []).append(m)
    for k in out:
        out[k].sort()
    return out


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = max(r)
            if c not in pivots:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                rank += 1
                break
            f = r[c]
            for k, v in pivots[c].items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    A = [list(r) for r in matrix if any(r)]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for r in range(rank + 1, rows):
            a = A[r][c]
            Ar, Ak = A[r], A[rank]
            for j in range(c, cols):
                # exact division is guaranteed by Sylvester's identity
                Ar[j] = (p * Ar[j] - a * Ak[j]) // prev
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def _boundary_rank(upper: list[int], lower: list[int], field: Field) -> int:
    """Rank of the boundary map from faces `upper` (dim k) to faces `lower` (dim k-1)."""
    if not upper or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    p = field.characteristic
    if p == 2:
        rows = []
        for F in upper:
            r = 0
            sub = F
            while sub:
                low = sub & -sub
                r |= 1 << index[F ^ low]
                sub ^= low
            rows.append(r)
        return _rank_gf2(rows)
    sparse = []
    for F in upper:
        row = {}
        sign = 1
        sub = F
        # vertices in increasing order; the j-th removed vertex carries (-1)^j
        while sub:
            low = sub & -sub
            row[index[F ^ low]] = sign
            sign = -sign
            sub ^= low
        sparse.append(row)
    if p:
        return _rank_mod_p(sparse, p)
    # over Q the boundary matrices have small entries; transpose if wide
    if len(upper) <= len(lower):
        dense = [[row.get(j, 0) for j in range(len(lower))] for row in sparse]
    else:
        dense = [[row.get(j, 0) for row in sparse] for j in range(len(lower))]
    return bareiss_rank(dense)


def reduced_homology_from_masks(facet_masks: Sequence[int], field: Field = GF2) -> dict[int, int]:
    """{i: dim H~_i} for -1 <= i <= dim; the void complex gives {-1: 0}."""
    if not facet_masks:
        return {-1: 0}
    faces = faces_by_dim(facet_masks)
    top = max(faces)
    ranks = {k: _boundary_rank(faces.get(k, []), faces.get(k - 1, []), field) for k in range(0, top + 1)}
    out = {}
    for i in range(-1, top + 1):
        out[i] = len(faces.get(i, [])) - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return out


def reduced_homology_dims(C: SimplicialComplex, field: Field = GF2) -> dict[int, int]:
    return reduced_homology_from_masks(C.masks, field)


def reduced_euler_characteristic(C: SimplicialComplex) -> int:
    if C.is_void():
        return 0
    return sum(-c if k % 2 else c for k, c in C.f_vector().items())
