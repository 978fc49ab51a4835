"""Nagata input data and its divisor-closed face model.

The face model of ``f = sum_r x_r^d1 * g_r`` is the set of all u-monomials
dividing at least one facet ``g_r``, graded by degree.  Skeleton containment
between cells is monomial divisibility, so every count and every
minimal-non-face query reduces to exponent-vector comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Optional, Sequence

from . import monomials as mono
from .monomials import Monomial, PairingAction


class ValidationError(ValueError):
    """Input violates a structural constraint of a CW-Nagata polynomial."""


@dataclass(frozen=True)
class NagataInput:
    """``f = sum_r x_r^d1 * u^facets[r]`` together with the pairing action."""

    d1: int
    m: int
    facets: tuple[Monomial, ...]
    action: PairingAction = PairingAction.CONTRACTION

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(tuple(int(e) for e in g) for g in self.facets))
        object.__setattr__(self, "action", PairingAction.parse(self.action))
        if not isinstance(self.d1, int) or self.d1 < 1:
            raise ValidationError(f"d1 must be a positive integer, got {self.d1!r}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValidationError(f"m must be a positive integer, got {self.m!r}")
        if not self.facets:
            raise ValidationError("at least one facet g_0 is required")
        for r, g in enumerate(self.facets):
            if len(g) != self.m:
                raise ValidationError(f"facet g_{r} has {len(g)} exponents, expected m={self.m}")
            if min(g) < 0:
                raise ValidationError(f"facet g_{r} has a negative exponent")
        degrees = {sum(g) for g in self.facets}
        if len(degrees) != 1:
            raise ValidationError(f"facets must share one degree d2, got degrees {sorted(degrees)}")
        d2 = degrees.pop()
        if d2 < 2:
            raise ValidationError(f"d2 must be at least 2, got {d2}")
        seen = {}
        for r, g in enumerate(self.facets):
            if g in seen:
                raise ValidationError(f"facets g_{seen[g]} and g_{r} coincide (must be distinct)")
            seen[g] = r
        bound = comb(self.m + d2 - 1, d2)
        if len(self.facets) > bound:
            raise ValidationError(
                f"n+1={len(self.facets)} facets exceed C(m+d2-1, d2)={bound}"
            )
        if self.square_free and len(self.facets) > comb(self.m, d2):
            raise ValidationError(
                f"n+1={len(self.facets)} square-free facets exceed C(m, d2)={comb(self.m, d2)}"
            )

    @property
    def n(self) -> int:
        return len(self.facets) - 1

    @property
    def nx(self) -> int:
        return len(self.facets)

    @property
    def d2(self) -> int:
        return sum(self.facets[0])

    @property
    def socle_degree(self) -> int:
        return self.d1 + self.d2

    @property
    def nvars(self) -> int:
        return self.nx + self.m

    @property
    def square_free(self) -> bool:
        return all(e <= 1 for g in self.facets for e in g)

    def x_power(self, r: int, k: int) -> Monomial:
        e = [0] * self.nx
        e[r] = k
        return tuple(e)

    def polynomial(self) -> dict:
        """``f`` as a dict from flat exponent tuples (x then u) to coefficients."""
        return {self.x_power(r, self.d1) + g: 1 for r, g in enumerate(self.facets)}

    def with_action(self, action) -> "NagataInput":
        return NagataInput(self.d1, self.m, self.facets, PairingAction.parse(action))

    def with_d1(self, d1: int) -> "NagataInput":
        return NagataInput(d1, self.m, self.facets, self.action)


@dataclass(frozen=True)
class FaceModel:
    input: NagataInput
    divisor_sets: tuple[tuple[Monomial, ...], ...]
    per_facet_divisors: tuple[tuple[tuple[Monomial, ...], ...], ...]
    support_sets: tuple[frozenset, ...]
    _members: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def facets(self) -> tuple[Monomial, ...]:
        return self.input.facets

    @property
    def d1(self) -> int:
        return self.input.d1

    @property
    def d2(self) -> int:
        return self.input.d2

    @property
    def m(self) -> int:
        return self.input.m

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(D) for D in self.divisor_sets)

    def f_jr(self, j: int, r: int) -> int:
        if j < 0 or j > self.d2:
            return 0
        return len(self.per_facet_divisors[r][j])

    @cached_property
    def per_facet_counts(self) -> tuple[tuple[int, ...], ...]:
        """``per_facet_counts[r][j]`` is the number of degree-j divisors of ``g_r``."""
        return tuple(tuple(len(Dj) for Dj in per) for per in self.per_facet_divisors)

    def is_face(self, w: Sequence[int]) -> bool:
        return tuple(w) in self._members


def build_face_model(inp: NagataInput) -> FaceModel:
    per_facet = []
    for g in inp.facets:
        per_facet.append(tuple(tuple(mono.divisors_of_degree(g, j)) for j in range(inp.d2 + 1)))
    divisor_sets = []
    for j in range(inp.d2 + 1):
        D = set()
        for per in per_facet:
            D.update(per[j])
        divisor_sets.append(tuple(sorted(D, key=mono.order_key)))
    supports = tuple(frozenset(k for k, e in enumerate(g) if e) for g in inp.facets)
    members = frozenset(w for D in divisor_sets for w in D)
    return FaceModel(inp, tuple(divisor_sets), tuple(per_facet), supports, members)


def _unit(m: int, k: int) -> Monomial:
    e = [0] * m
    e[k] = 1
    return tuple(e)


def _minimal_outside(m: int, cap: int, inside) -> list[Monomial]:
    """Minimal monomials (degree 1..cap) outside a divisor-closed family ``inside``.

    ``inside`` must contain the constant monomial.  Candidates are grown one
    variable at a time from members of the family, which is enough because a
    minimal outsider has every maximal proper divisor inside.
    """
    found = set()
    level = [tuple([0] * m)]
    for j in range(1, cap + 1):
        nxt = set()
        for v in level:
            for k in range(m):
                w = list(v)
                w[k] += 1
                w = tuple(w)
                if w in found or w in nxt:
                    continue
                if inside(w):
                    nxt.add(w)
                    continue
                if all(inside(w[:l] + (w[l] - 1,) + w[l + 1:]) for l in range(m) if w[l]):
                    found.add(w)
        level = nxt
    return sorted(found, key=mono.order_key)


def minimal_nonfaces(model: FaceModel, max_degree: Optional[int] = None) -> list[Monomial]:
    """Minimal monomials not dividing any facet, degrees ``1..max_degree`` (default d2)."""
    cap = model.d2 if max_degree is None else max_degree
    return _minimal_outside(model.m, cap, model.is_face)


def minimal_nondivisors_per_facet(
    model: FaceModel, r: int, max_degree: Optional[int] = None
) -> list[Monomial]:
    if not 0 <= r < len(model.facets):
        raise IndexError(f"facet index {r} out of range 0..{len(model.facets) - 1}")
    g = model.facets[r]
    cap = model.d2 if max_degree is None else max_degree
    return _minimal_outside(model.m, cap, lambda w: all(a <= b for a, b in zip(w, g)))


def pair_cofactors(model: FaceModel, r: int, s: int) -> tuple[Monomial, Monomial, Monomial]:
    """``(gcd, rho, sigma)`` with ``g_r = rho*gcd`` and ``g_s = sigma*gcd``."""
    if r == s:
        raise ValueError(f"pair_cofactors needs two distinct facets, got r = s = {r}")
    gr, gs = model.facets[r], model.facets[s]
    common = mono.gcd(gr, gs)
    return common, mono.quotient(gr, common), mono.quotient(gs, common)


def hasse_edges(model: FaceModel) -> list[tuple[Monomial, Monomial]]:
    """Cover relations ``(w, w*u_k)`` inside the face model, deterministic order."""
    edges = []
    for j in range(1, model.d2 + 1):
        for w in model.divisor_sets[j]:
            for k in range(model.m):
                if w[k]:
                    below = w[:k] + (w[k] - 1,) + w[k + 1:]
                    edges.append((below, w))
    edges.sort(key=lambda e: (mono.order_key(e[0]), mono.order_key(e[1])))
    return edges


def export_hasse_dot(model: FaceModel) -> str:
    names = mono.u_names(model.m)
    label = lambda w: mono.format_monomial(w, names)
    lines = ["digraph hasse {", "  rankdir=BT;", '  node [shape=plaintext];']
    for j, D in enumerate(model.divisor_sets):
        ids = " ".join(f'"{label(w)}";' for w in D)
        lines.append(f"  {{ rank=same; {ids} }}")
    for a, b in hasse_edges(model):
        lines.append(f'  "{label(a)}" -> "{label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
