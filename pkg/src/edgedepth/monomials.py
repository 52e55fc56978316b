"""Monomials and monomial ideals over a fixed list of variables.

Everything here is immutable. A `MonomialIdeal` always stores its minimal
generating set in graded lexicographic order, so two ideals are equal exactly
when their generator tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

MAX_EXPONENT = 2 ** 15


class DimensionMismatch(ValueError):
    pass


class ExponentOverflow(OverflowError):
    pass


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> "Monomial":
        exps = [0] * n
        exps[i] = 1
        return cls(tuple(exps))

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> "Monomial":
        """Product of the given variables, repeats allowed."""
        exps = [0] * n
        for v in vertices:
            exps[v] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def _check(self, other: "Monomial"):
        if len(other.exponents) != len(self.exponents):
            raise DimensionMismatch(
                f"monomials live in {len(self.exponents)} and {len(other.exponents)} variables")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the part of self not cancelled by other."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return self.quotient(other)

    def sort_key(self):
        # graded lex with x1 > x2 > ... ; ascending order lists x1x2 before x2x3
        return (self.degree, tuple(-e for e in self.exponents))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or default_names(self.n)
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(names[i])
            elif e > 1:
                parts.append(f"{names[i]}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.to_str()


def default_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


_FACTOR = re.compile(r"^\s*([A-Za-z0-9_]+)\s*(?:\^\s*([0-9]+))?\s*$")


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse `x2^3*x5` style text; `1` is the unit monomial."""
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return Monomial(tuple(exps))
    if not text:
        raise ValueError("empty monomial")
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse factor {factor!r}")
        name, power = m.group(1), m.group(2)
        if name not in index:
            raise ValueError(f"unknown variable {name!r}")
        exps[index[name]] += int(power) if power is not None else 1
    return Monomial(tuple(exps))


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    uniq = sorted(set(gens), key=Monomial.sort_key)
    kept: list[tuple[int, ...]] = []
    out: list[Monomial] = []
    for g in uniq:
        e = g.exponents
        # earlier entries have degree <= deg g, so only they can divide g
        if any(all(a <= b for a, b in zip(k, e)) for k in kept):
            continue
        kept.append(e)
        out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    ambient_n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.ambient_n:
                raise DimensionMismatch(
                    f"generator {g} has {g.n} variables, ideal has {self.ambient_n}")

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, f: Monomial) -> bool:
        return ideal_membership(f, self)

    @property
    def support(self) -> tuple[int, ...]:
        s = set()
        for g in self.generators:
            s.update(g.support)
        return tuple(sorted(s))

    def is_squarefree(self) -> bool:
        return all(max(g.exponents, default=0) <= 1 for g in self.generators)

    def lcm_all(self) -> Monomial:
        top = [0] * self.ambient_n
        for g in self.generators:
            top = [max(a, b) for a, b in zip(top, g.exponents)]
        return Monomial(tuple(top))

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(g.to_str(names) for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.to_str()


def minimalize(gens: Iterable[Monomial], ambient_n: int | None = None) -> MonomialIdeal:
    """Minimal generating set of the ideal spanned by `gens`.

    `ambient_n` is only needed when `gens` is empty (the zero ideal).
    """
    gens = list(gens)
    sizes = {g.n for g in gens}
    if ambient_n is not None:
        sizes.add(ambient_n)
    if len(sizes) > 1:
        raise DimensionMismatch(f"mixed ambient sizes {sorted(sizes)}")
    if not sizes:
        raise ValueError("ambient_n is required for an empty generator set")
    return MonomialIdeal(sizes.pop(), _minimal(gens))


def ideal_from_exponents(exps: Iterable[Sequence[int]], ambient_n: int | None = None) -> MonomialIdeal:
    return minimalize((Monomial(tuple(e)) for e in exps), ambient_n)


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ambient_n != J.ambient_n:
        raise DimensionMismatch(f"{I.ambient_n} vs {J.ambient_n} variables")
    return minimalize((f * g for f in I.generators for g in J.generators), I.ambient_n)


def ideal_power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError(f"power must be positive, got {t}")
    result = I
    for _ in range(t - 1):
        result = ideal_product(result, I)
    return result


def ideal_power_direct(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """All t-fold products of generators at once (no intermediate minimalization)."""
    if t < 1:
        raise ValueError(f"power must be positive, got {t}")
    prods = []
    for combo in combinations_with_replacement(I.generators, t):
        m = combo[0]
        for g in combo[1:]:
            m = m * g
        prods.append(m)
    return minimalize(prods, I.ambient_n)


def ideal_colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    if m.n != I.ambient_n:
        raise DimensionMismatch(f"monomial in {m.n} variables, ideal in {I.ambient_n}")
    return minimalize((g.quotient(m) for g in I.generators), I.ambient_n)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ambient_n != J.ambient_n:
        raise DimensionMismatch(f"{I.ambient_n} vs {J.ambient_n} variables")
    return minimalize(I.generators + J.generators, I.ambient_n)


def ideal_add_variables(I: MonomialIdeal, variables: Iterable[int]) -> MonomialIdeal:
    return minimalize(list(I.generators) + [Monomial.var(I.ambient_n, v) for v in variables], I.ambient_n)


def ideal_membership(f: Monomial, I: MonomialIdeal) -> bool:
    if f.n != I.ambient_n:
        raise DimensionMismatch(f"monomial in {f.n} variables, ideal in {I.ambient_n}")
    e = f.exponents
    return any(all(a <= b for a, b in zip(g.exponents, e)) for g in I.generators)


def ideal_restrict(I: MonomialIdeal, variable: int) -> MonomialIdeal:
    """Generators not involving `variable`: the image of I in R/(variable), extended back to R."""
    return MonomialIdeal(I.ambient_n, tuple(g for g in I.generators if g.exponents[variable] == 0))


def embed(I: MonomialIdeal, extra: int = 1) -> MonomialIdeal:
    """The same ideal in a ring with `extra` new trailing variables."""
    n = I.ambient_n + extra
    return MonomialIdeal(n, tuple(Monomial(g.exponents + (0,) * extra) for g in I.generators))


def permute(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Relabel variable i as perm[i]."""
    n = I.ambient_n
    gens = []
    for g in I.generators:
        exps = [0] * n
        for i, e in enumerate(g.exponents):
            exps[perm[i]] = e
        gens.append(Monomial(tuple(exps)))
    return minimalize(gens, n)
