"""Closed-form bigraded Hilbert table of ``A = T/Ann(f)`` from face counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import monomials as mono
from .faces import FaceModel
from .monomials import BiMonomial


@dataclass(frozen=True)
class BigradedTable:
    """``a[i][j] = dim A_(i,j)`` for ``0 <= i <= d1``, ``0 <= j <= d2``."""

    a: tuple[tuple[int, ...], ...]

    @property
    def d1(self) -> int:
        return len(self.a) - 1

    @property
    def d2(self) -> int:
        return len(self.a[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if 0 <= i <= self.d1 and 0 <= j <= self.d2:
            return self.a[i][j]
        return 0

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.a]

    def duality_ok(self) -> bool:
        d1, d2 = self.d1, self.d2
        return all(self.a[i][j] == self.a[d1 - i][d2 - j] for i in range(d1 + 1) for j in range(d2 + 1))

    def mismatches(self, other: "BigradedTable") -> list[tuple[int, int, int, int]]:
        """Cells ``(i, j, self, other)`` where the two tables disagree."""
        if (self.d1, self.d2) != (other.d1, other.d2):
            raise ValueError("tables have different shapes")
        return [
            (i, j, self.a[i][j], other.a[i][j])
            for i in range(self.d1 + 1)
            for j in range(self.d2 + 1)
            if self.a[i][j] != other.a[i][j]
        ]


def bigraded_table(model: FaceModel) -> BigradedTable:
    d1, d2 = model.d1, model.d2
    f = model.f_vector
    rows = []
    for i in range(d1 + 1):
        if i == 0:
            rows.append(tuple(f[j] for j in range(d2 + 1)))
        elif i == d1:
            # also covers d1 == 1, where there are no interior rows
            rows.append(tuple(f[d2 - j] for j in range(d2 + 1)))
        else:
            rows.append(tuple(sum(model.f_jr(j, r) for r in range(len(model.facets))) for j in range(d2 + 1)))
    return BigradedTable(tuple(rows))


def hilbert_vector(table: BigradedTable) -> list[int]:
    d1, d2 = table.d1, table.d2
    h = [0] * (d1 + d2 + 1)
    for i in range(d1 + 1):
        for j in range(d2 + 1):
            h[i + j] += table.a[i][j]
    return h


def is_palindromic(h: list[int]) -> bool:
    return h == h[::-1]


@dataclass(frozen=True)
class BasisElement:
    terms: tuple[tuple[int, BiMonomial], ...]
    bidegree: tuple[int, int]

    def as_poly(self) -> dict:
        return {b.flat: c for c, b in self.terms}


def basis_of(model: FaceModel, i: int, j: int) -> list[BasisElement]:
    """Representatives of a basis of ``A_(i,j)``.

    Rows ``0 <= i < d1`` use the monomial bases read off the face model.  On
    the top row ``i = d1`` the element attached to ``w`` in ``D_(d2-j)`` is
    ``X_s^d1 * U^(g_s/w)`` for the first facet ``g_s`` that ``w`` divides;
    evaluated against ``U^w'`` in ``A_(0,d2-j)`` it pairs to a nonzero scalar
    exactly when ``w' = w``, so these classes are the dual basis up to scale.
    """
    d1, d2 = model.d1, model.d2
    if not (0 <= i <= d1 and 0 <= j <= d2):
        raise ValueError(f"bidegree ({i}, {j}) outside (0..{d1}, 0..{d2})")
    inp = model.input
    zero_x = (0,) * inp.nx
    out = []
    if i == 0:
        for w in model.divisor_sets[j]:
            out.append(BasisElement(((1, BiMonomial(zero_x, w)),), (0, j)))
    elif i < d1:
        for s in range(inp.nx):
            for w in model.per_facet_divisors[s][j]:
                out.append(BasisElement(((1, BiMonomial(inp.x_power(s, i), w)),), (i, j)))
    else:
        for w in model.divisor_sets[d2 - j]:
            s = next(r for r, g in enumerate(model.facets) if mono.divides(w, g))
            cof = mono.quotient(model.facets[s], w)
            out.append(BasisElement(((1, BiMonomial(inp.x_power(s, d1), cof)),), (d1, j)))
    return out


def naive_interior_table(model: FaceModel) -> Optional[BigradedTable]:
    """Table obtained by (wrongly) using the interior-row count on row 1 when ``d1 == 1``.

    Returns None when ``d1 != 1``.  Used to explain the discrepancy between
    the interior formula and the true top row for socle x-degree one.
    """
    if model.d1 != 1:
        return None
    d2 = model.d2
    f = model.f_vector
    row1 = tuple(sum(model.f_jr(j, r) for r in range(len(model.facets))) for j in range(d2 + 1))
    return BigradedTable((tuple(f[j] for j in range(d2 + 1)), row1))
