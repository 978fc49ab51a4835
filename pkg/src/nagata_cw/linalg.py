"""Exact integer linear algebra: fraction-free elimination, no floats.

Two engines live here.  :func:`bareiss_rank` is the classical one-step
Bareiss elimination on a dense integer matrix.  :class:`RowReducer` works on
sparse integer rows (``dict`` column -> value), eliminates by integer
cross-multiplication and strips the content after every step, which keeps
entries small on the very sparse catalecticant and ideal-span matrices.
Pivoting is deterministic: the pivot of a row is its smallest column.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence


def _content(*rows: dict) -> int:
    g = 0
    for row in rows:
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _divide(row: dict, g: int) -> dict:
    return {k: v // g for k, v in row.items()}


def _combine(a: int, row: dict, b: int, other: dict) -> dict:
    """``a*row - b*other`` with zero entries removed."""
    out = {k: a * v for k, v in row.items()}
    for k, v in other.items():
        w = out.get(k, 0) - b * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def clear_denominators(row: dict) -> dict:
    """Scale a row with Fraction entries to a primitive integer row."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {k: int(v * den) for k, v in row.items() if v}
    g = _content(out)
    return _divide(out, g) if g > 1 else out


class RowReducer:
    """Incremental echelon form over Q with integer arithmetic.

    ``add(row)`` returns True when the row is independent of everything added
    before.  With ``track=True`` each dependent row also yields a primitive
    integer relation among the inserted rows (indices in insertion order).
    """

    def __init__(self, track: bool = False):
        self.pivots: dict = {}
        self.track = track
        self.relations: list[dict] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict, combo: Optional[dict] = None):
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                break
            prow, pcombo = piv
            a, b = prow[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            row = _combine(a, row, b, prow)
            if combo is not None:
                combo = _combine(a, combo, b, pcombo)
            g = _content(row, combo) if combo is not None else _content(row)
            if g > 1:
                row = _divide(row, g)
                if combo is not None:
                    combo = _divide(combo, g)
        return row, combo

    def add(self, row: dict) -> bool:
        idx = self.count
        self.count += 1
        combo = {idx: 1} if self.track else None
        row, combo = self.reduce(row, combo)
        if not row:
            if combo is not None:
                self.relations.append(_primitive(combo))
            return False
        g = _content(row, combo) if combo is not None else _content(row)
        if g > 1:
            row = _divide(row, g)
            if combo is not None:
                combo = _divide(combo, g)
        self.pivots[min(row)] = (row, combo)
        return True

    def contains(self, row: dict) -> bool:
        reduced, _ = self.reduce(row)
        return not reduced


def _primitive(vec: dict) -> dict:
    g = _content(vec)
    out = _divide(vec, g) if g > 1 else dict(vec)
    # sign: leading (smallest-index) entry positive
    if out and out[min(out)] < 0:
        out = {k: -v for k, v in out.items()}
    return out


def sparse_rank(rows: Iterable[dict]) -> int:
    red = RowReducer()
    for r in rows:
        red.add(r)
    return red.rank


def rank_and_left_kernel(rows: Sequence[dict]) -> tuple[int, list[dict]]:
    """Rank of the row set and a primitive integer basis of row relations."""
    red = RowReducer(track=True)
    for r in rows:
        red.add(r)
    return red.rank, red.relations


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by one-step fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, nrows):
            for k in range(c + 1, ncols):
                a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def dense_to_sparse(matrix: Sequence[Sequence[int]]) -> list[dict]:
    return [{k: v for k, v in enumerate(row) if v} for row in matrix]
