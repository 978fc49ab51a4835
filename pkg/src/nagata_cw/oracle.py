"""Brute-force apolarity: catalecticant matrices of ``f`` at every bidegree.

Nothing here looks at the face model.  Each row is an operator monomial of
``T_(i,j)`` applied to ``f`` term by term; ranks give ``dim A_(i,j)`` and row
relations give ``Ann(f)_(i,j)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from . import monomials as mono
from .faces import NagataInput
from .hilbert import BigradedTable
from .linalg import RowReducer, rank_and_left_kernel
from .monomials import BiMonomial


@lru_cache(maxsize=None)
def bihomogeneous_monomials(nx: int, m: int, i: int, j: int) -> tuple[BiMonomial, ...]:
    """Monomial basis of the bidegree-(i, j) piece, increasing in graded-lex order."""
    if i < 0 or j < 0:
        return ()
    xs = mono.enumerate_monomials(nx, i)
    us = mono.enumerate_monomials(m, j)
    return tuple(BiMonomial(a, b) for a, b in itertools.product(xs, us))


@dataclass
class ExactMatrix:
    row_labels: tuple[BiMonomial, ...]
    col_labels: tuple[BiMonomial, ...]
    sparse_rows: list[dict] = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def entries(self) -> list[list[int]]:
        ncols = len(self.col_labels)
        out = []
        for r in self.sparse_rows:
            row = [0] * ncols
            for k, v in r.items():
                row[k] = v
            out.append(row)
        return out


def catalecticant(inp: NagataInput, i: int, j: int) -> ExactMatrix:
    """Matrix of ``alpha -> alpha(f)`` from ``T_(i,j)`` to ``S_(d1-i, d2-j)``."""
    d1, d2 = inp.d1, inp.d2
    if not (0 <= i <= d1 and 0 <= j <= d2):
        raise ValueError(f"bidegree ({i}, {j}) outside (0..{d1}, 0..{d2})")
    f = inp.polynomial()
    rows_l = bihomogeneous_monomials(inp.nx, inp.m, i, j)
    cols_l = bihomogeneous_monomials(inp.nx, inp.m, d1 - i, d2 - j)
    col_index = {b.flat: k for k, b in enumerate(cols_l)}
    rows = []
    for op in rows_l:
        image = mono.act(inp.action, op.flat, f)
        rows.append({col_index[t]: c for t, c in image.items()})
    return ExactMatrix(rows_l, cols_l, rows)


def rank_and_kernel(mat: ExactMatrix) -> tuple[int, list[dict]]:
    """Rank and a primitive integer basis of the left kernel.

    Kernel vectors are sparse ``{row index: coefficient}`` dicts; read as
    operators ``sum c_k * row_label[k]`` they span ``Ann(f)`` in that bidegree.
    """
    return rank_and_left_kernel(mat.sparse_rows)


def catalecticant_rank(inp: NagataInput, i: int, j: int) -> int:
    red = RowReducer()
    for r in catalecticant(inp, i, j).sparse_rows:
        if r:
            red.add(r)
    return red.rank


def oracle_bigraded_table(inp: NagataInput) -> BigradedTable:
    return BigradedTable(
        tuple(
            tuple(catalecticant_rank(inp, i, j) for j in range(inp.d2 + 1))
            for i in range(inp.d1 + 1)
        )
    )


def standard_monomials(inp: NagataInput, i: int, j: int) -> list[BiMonomial]:
    """Operator monomials of ``T_(i,j)`` whose classes form a basis of ``A_(i,j)``.

    Chosen greedily in label order: a monomial is kept when its image under
    evaluation at ``f`` is independent of the images kept before it.
    """
    mat = catalecticant(inp, i, j)
    red = RowReducer()
    keep = []
    for label, r in zip(mat.row_labels, mat.sparse_rows):
        if r and red.add(r):
            keep.append(label)
    return keep


def operator_as_poly(mat: ExactMatrix, vec: dict) -> dict:
    return {mat.row_labels[k].flat: c for k, c in vec.items()}


def kernel_annihilates(inp: NagataInput, mat: ExactMatrix, kernel: Iterable[dict]) -> bool:
    f = inp.polynomial()
    return all(not mono.act_poly(inp.action, operator_as_poly(mat, v), f) for v in kernel)


def _shift(poly: dict, by: tuple) -> dict:
    return {tuple(a + b for a, b in zip(t, by)): c for t, c in poly.items()}


def ideal_span_dimension(gens, inp: NagataInput, i: int, j: int) -> int:
    """``dim`` of the bidegree-(i, j) part of the ideal generated by ``gens``.

    ``gens`` is anything with an ``explicit(max_bidegree)`` method yielding
    ``(poly, (a, b))`` pairs (see :class:`nagata_cw.annihilator.GeneratorSet`),
    or a plain iterable of such pairs.  Monomial products are collected as a
    coordinate set first; only the remaining multi-term products go through
    elimination, after their coordinates inside that set are dropped.
    """
    if i < 0 or j < 0:
        raise ValueError("bidegree must be non-negative")
    pairs = gens.explicit((i, j)) if hasattr(gens, "explicit") else gens
    covered: set = set()
    multi = []
    for poly, (a, b) in pairs:
        if a > i or b > j or not poly:
            continue
        for shift in bihomogeneous_monomials(inp.nx, inp.m, i - a, j - b):
            prod = _shift(poly, shift.flat)
            if len(prod) == 1:
                covered.add(next(iter(prod)))
            else:
                multi.append(prod)
    red = RowReducer()
    for prod in multi:
        row = {t: c for t, c in prod.items() if t not in covered}
        if row:
            red.add(row)
    return len(covered) + red.rank


def dim_T(inp: NagataInput, i: int, j: int) -> int:
    return len(bihomogeneous_monomials(inp.nx, inp.m, i, j))


@dataclass
class OracleReport:
    table: BigradedTable
    kernels: Optional[dict] = None
    closed_form_equal: Optional[bool] = None
    mismatches: list = field(default_factory=list)
    span_deficits: list = field(default_factory=list)

    @property
    def generators_complete(self) -> bool:
        return not self.span_deficits


def oracle_report(inp: NagataInput, closed_form: Optional[BigradedTable] = None, gens=None,
                  with_kernels: bool = False) -> OracleReport:
    table = oracle_bigraded_table(inp)
    report = OracleReport(table)
    if with_kernels:
        report.kernels = {}
        for i in range(inp.d1 + 1):
            for j in range(inp.d2 + 1):
                mat = catalecticant(inp, i, j)
                _, ker = rank_and_kernel(mat)
                report.kernels[(i, j)] = [operator_as_poly(mat, v) for v in ker]
    if closed_form is not None:
        report.mismatches = table.mismatches(closed_form)
        report.closed_form_equal = not report.mismatches
    if gens is not None:
        report.span_deficits = span_deficits(gens, inp, table)
    return report


def span_deficits(gens, inp: NagataInput, table: BigradedTable) -> list[tuple[int, int, int, int]]:
    """Bidegrees where ``dim (gens)_(i,j) != dim T_(i,j) - a[i][j]``."""
    out = []
    for i in range(inp.d1 + 1):
        for j in range(inp.d2 + 1):
            want = dim_T(inp, i, j) - table.a[i][j]
            got = ideal_span_dimension(gens, inp, i, j)
            if got != want:
                out.append((i, j, got, want))
    return out
