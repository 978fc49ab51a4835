"""Generators of ``Ann(f)`` read off the face model, plus minimalization.

Generators are tagged by family:

1. ``X_i*X_j`` (i < j) and ``X_k^(d1+1)``;
2. every U-monomial of degree ``d2 + 1`` (kept as a symbolic power until a
   bidegree needs it);
3. minimal non-faces as U-monomials;
4. ``X_s*U_k`` for variables ``u_k`` not dividing ``g_s``;
5. ``X_s*U^w`` for the other minimal non-divisors ``w`` of ``g_s``;
6. binomials ``c_s*X_r^d1*U^rho - c_r*X_s^d1*U^sigma`` for each facet pair,
   where ``g_r = rho*gcd`` and ``g_s = sigma*gcd``.

Under contraction every ``c`` is 1.  Under differentiation ``c_r`` is the
falling-factorial constant of ``U^rho`` acting on ``g_r``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterator, Optional

from . import monomials as mono
from .faces import (
    FaceModel,
    NagataInput,
    build_face_model,
    minimal_nondivisors_per_facet,
    minimal_nonfaces,
    pair_cofactors,
)
from .linalg import RowReducer
from .monomials import BiMonomial, PairingAction
from .oracle import bihomogeneous_monomials


@dataclass(frozen=True)
class Generator:
    item: int
    terms: tuple[tuple[int, BiMonomial], ...]

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.terms[0][1].bidegree

    def as_poly(self) -> dict:
        return {b.flat: c for c, b in self.terms}

    def sort_key(self) -> tuple:
        a, b = self.bidegree
        return (a + b, mono.order_key(self.terms[0][1].flat), len(self.terms))

    def format(self) -> str:
        nx = len(self.terms[0][1].x)
        m = len(self.terms[0][1].u)
        names = mono.x_names(nx, upper=True) + mono.u_names(m, upper=True)
        out = ""
        for k, (c, b) in enumerate(self.terms):
            body = mono.format_monomial(b.flat, names)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            text = body if mag == 1 else (f"{mag}" if body == "1" else f"{mag}*{body}")
            if k == 0:
                out = ("-" if c < 0 else "") + text
            else:
                out += f" {sign} {text}"
        return out


@dataclass
class GeneratorSet:
    generators: list[Generator]
    action: PairingAction
    nx: int
    m: int
    power_degree: Optional[int] = None
    minimalized: bool = False

    def by_item(self) -> dict[int, list[Generator]]:
        out: dict[int, list[Generator]] = {k: [] for k in range(1, 7)}
        for g in self.generators:
            out[g.item].append(g)
        return out

    def power_generators(self) -> list[Generator]:
        if self.power_degree is None:
            return []
        zero_x = (0,) * self.nx
        return [
            Generator(2, ((1, BiMonomial(zero_x, w)),))
            for w in mono.enumerate_monomials(self.m, self.power_degree)
        ]

    def all_generators(self) -> list[Generator]:
        return self.generators + self.power_generators()

    def explicit(self, bound: tuple[int, int]) -> Iterator[tuple[dict, tuple[int, int]]]:
        """``(poly, bidegree)`` for every generator not exceeding ``bound``."""
        i, j = bound
        for g in self.generators:
            a, b = g.bidegree
            if a <= i and b <= j:
                yield g.as_poly(), (a, b)
        if self.power_degree is not None and self.power_degree <= j:
            for g in self.power_generators():
                yield g.as_poly(), g.bidegree

    def __len__(self) -> int:
        return len(self.generators)


def _mono_gen(item: int, x, u) -> Generator:
    return Generator(item, ((1, BiMonomial(tuple(x), tuple(u))),))


def build_generators(inp: NagataInput, model: Optional[FaceModel] = None,
                     unit_binomials: bool = False) -> GeneratorSet:
    """Generating set of ``Ann(f)`` under ``inp.action``.

    ``unit_binomials=True`` forces coefficient 1 on both terms of every
    family-6 binomial whatever the action; the result is only guaranteed to
    annihilate ``f`` under contraction.
    """
    model = model or build_face_model(inp)
    nx, m, d1 = inp.nx, inp.m, inp.d1
    zero_x, zero_u = (0,) * nx, (0,) * m
    gens: list[Generator] = []

    for i, j in itertools.combinations(range(nx), 2):
        x = [0] * nx
        x[i] = x[j] = 1
        gens.append(_mono_gen(1, x, zero_u))
    for k in range(nx):
        gens.append(_mono_gen(1, inp.x_power(k, d1 + 1), zero_u))

    for w in minimal_nonfaces(model):
        gens.append(_mono_gen(3, zero_x, w))

    for s in range(nx):
        for w in minimal_nondivisors_per_facet(model, s):
            gens.append(_mono_gen(4 if sum(w) == 1 else 5, inp.x_power(s, 1), w))

    for r, s in itertools.combinations(range(nx), 2):
        _, rho, sigma = pair_cofactors(model, r, s)
        if unit_binomials:
            c_r = c_s = 1
        else:
            c_r = mono.apply(inp.action, rho, model.facets[r])
            c_s = mono.apply(inp.action, sigma, model.facets[s])
            g = gcd(c_r, c_s)
            c_r, c_s = c_r // g, c_s // g
        gens.append(Generator(6, (
            (c_s, BiMonomial(inp.x_power(r, d1), rho)),
            (-c_r, BiMonomial(inp.x_power(s, d1), sigma)),
        )))

    return GeneratorSet(gens, inp.action, nx, m, power_degree=inp.d2 + 1)


def _shifted_rows(poly: dict, a: int, b: int, i: int, j: int, nx: int, m: int):
    for sh in bihomogeneous_monomials(nx, m, i - a, j - b):
        yield {tuple(p + q for p, q in zip(t, sh.flat)): c for t, c in poly.items()}


def minimalize(gens: GeneratorSet, inp: NagataInput) -> GeneratorSet:
    """Drop every generator lying in the ideal of the generators kept before it.

    Candidates (with the symbolic power expanded) are visited by total degree,
    then graded-lex on the leading term.  At bidegree ``(a, b)`` a candidate
    is dropped iff it lies in the span of ``T_(a-a', b-b') * kept`` there.
    """
    candidates = sorted(gens.all_generators(), key=Generator.sort_key)
    kept: list[Generator] = []
    reducers: dict[tuple[int, int], RowReducer] = {}
    for cand in candidates:
        a, b = cand.bidegree
        red = reducers.get((a, b))
        if red is None:
            red = RowReducer()
            for g in kept:
                ga, gb = g.bidegree
                if ga <= a and gb <= b:
                    for row in _shifted_rows(g.as_poly(), ga, gb, a, b, inp.nx, inp.m):
                        red.add(row)
            reducers[(a, b)] = red
        if red.add(cand.as_poly()):
            kept.append(cand)
    kept.sort(key=lambda g: (g.item, g.sort_key()))
    return replace(gens, generators=kept, power_degree=None, minimalized=True)


@dataclass
class AnnihilationReport:
    checked: int
    failures: list[tuple[Generator, dict]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_annihilation(gens: GeneratorSet, inp: NagataInput) -> AnnihilationReport:
    """Apply every generator to ``f`` under ``gens.action``; collect nonzero residues."""
    f = inp.polynomial()
    report = AnnihilationReport(0)
    for g in gens.all_generators():
        report.checked += 1
        residue = mono.act_poly(gens.action, g.as_poly(), f)
        if residue:
            report.failures.append((g, residue))
    return report


def format_residue(residue: dict, nx: int, m: int) -> str:
    names = mono.x_names(nx) + mono.u_names(m)
    parts = []
    for t in sorted(residue, key=mono.order_key):
        c = residue[t]
        body = mono.format_monomial(t, names)
        parts.append(f"{c}" if body == "1" else f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


def ideal_listing(gens: GeneratorSet) -> str:
    """One generator per line, ``*`` for products and ``^`` for powers."""
    lines = [g.format() for g in gens.generators]
    if gens.power_degree is not None:
        lines.extend(g.format() for g in gens.power_generators())
    return "\n".join(lines) + "\n"
