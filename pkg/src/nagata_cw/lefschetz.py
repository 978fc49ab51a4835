"""Weak/strong Lefschetz checks and higher Hessian ranks by exact evaluation.

Multiplication maps never need an explicit presentation of ``A``: for
``alpha`` in ``T_i`` the class of ``L^k * alpha`` is determined by
``(L^k * alpha)(f) = alpha(L^k(f))``, so the rank of ``·L^k: A_i -> A_(i+k)``
is the rank of the catalecticant rows of ``L^k(f)`` indexed by a basis of
``A_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import monomials as mono
from .faces import NagataInput
from .linalg import RowReducer, clear_denominators
from .oracle import standard_monomials

RANDOM_COEFF_RANGE = (-9, 9)
VANISHING_EVIDENCE_TRIALS = 10


@dataclass(frozen=True)
class LinearForm:
    """``a_0 X_0 + ... + a_n X_n + b_1 U_1 + ... + b_m U_m``."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if not any(self.coefficients):
            raise ValueError("linear form must not be zero")

    @classmethod
    def sum_of_x(cls, inp: NagataInput) -> "LinearForm":
        return cls((1,) * inp.nx + (0,) * inp.m)

    def as_operator(self) -> dict:
        n = len(self.coefficients)
        out = {}
        for k, c in enumerate(self.coefficients):
            if c:
                e = [0] * n
                e[k] = 1
                out[tuple(e)] = c
        return out

    def to_json(self) -> list:
        return [str(c) for c in self.coefficients]


def _check_form(inp: NagataInput, L: LinearForm) -> None:
    if len(L.coefficients) != inp.nvars:
        raise ValueError(f"linear form has {len(L.coefficients)} coefficients, expected {inp.nvars}")


def power_applied(inp: NagataInput, L: LinearForm, k: int) -> dict:
    """``L^k(f)`` under ``inp.action``."""
    poly = inp.polynomial()
    op = L.as_operator()
    for _ in range(k):
        poly = mono.act_poly(inp.action, op, poly)
    return poly


@lru_cache(maxsize=64)
def degree_basis(inp: NagataInput, deg: int) -> tuple:
    """Flat operator monomials whose classes form a basis of ``A_deg``."""
    out = []
    for i in range(max(0, deg - inp.d2), min(deg, inp.d1) + 1):
        out.extend(b.flat for b in standard_monomials(inp, i, deg - i))
    return tuple(out)


def _rank_of_images(inp: NagataInput, ops: Sequence[tuple], g: dict) -> int:
    red = RowReducer()
    for op in ops:
        img = mono.act(inp.action, op, g)
        if img:
            red.add(clear_denominators(img))
    return red.rank


def multiplication_rank(inp: NagataInput, L: LinearForm, k: int, deg: int,
                        _cache: Optional[dict] = None) -> tuple[int, int]:
    """``(rank of ·L^k: A_deg -> A_(deg+k), min(dim A_deg, dim A_(deg+k)))``."""
    _check_form(inp, L)
    d = inp.socle_degree
    if k < 0 or not (0 <= deg <= d):
        raise ValueError(f"degree {deg} or power {k} out of range for socle degree {d}")
    src = degree_basis(inp, deg)
    tgt_dim = len(degree_basis(inp, deg + k)) if deg + k <= d else 0
    if tgt_dim == 0:
        return 0, 0
    if _cache is not None and k in _cache:
        g = _cache[k]
    else:
        g = power_applied(inp, L, k)
        if _cache is not None:
            _cache[k] = g
    return _rank_of_images(inp, src, g), min(len(src), tgt_dim)


@dataclass
class DegreeCheck:
    deg: int
    k: int
    rank: int
    max_rank: int

    @property
    def maximal(self) -> bool:
        return self.rank == self.max_rank


@dataclass
class LefschetzReport:
    kind: str
    form: Optional[LinearForm]
    checks: list[DegreeCheck] = field(default_factory=list)
    verdict: bool = False
    seed: Optional[int] = None
    trials: int = 0
    hessian_evidence: dict = field(default_factory=dict)
    note: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "form": self.form.to_json() if self.form else None,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [
                {"deg": c.deg, "k": c.k, "rank": c.rank, "max_rank": c.max_rank, "maximal": c.maximal}
                for c in self.checks
            ],
            "hessian_evidence": {str(k): v for k, v in sorted(self.hessian_evidence.items())},
            "note": self.note,
        }


def _run_checks(inp: NagataInput, L: LinearForm, powers, stop_early: bool) -> list[DegreeCheck]:
    d = inp.socle_degree
    cache: dict = {}
    out = []
    for k in powers:
        for deg in range(0, d - k + 1):
            rank, mx = multiplication_rank(inp, L, k, deg, cache)
            out.append(DegreeCheck(deg, k, rank, mx))
            if stop_early and rank != mx:
                return out
    return out


def check_wlp(inp: NagataInput, L: Optional[LinearForm] = None) -> LefschetzReport:
    L = L or LinearForm.sum_of_x(inp)
    _check_form(inp, L)
    checks = _run_checks(inp, L, [1], stop_early=False)
    return LefschetzReport("WLP", L, checks, all(c.maximal for c in checks))


def hessian_matrix(inp: NagataInput, k: int, point: Sequence) -> list[list[Fraction]]:
    """``(alpha_a * alpha_b)(f)`` over a basis of ``A_k``, evaluated at ``point``."""
    if len(point) != inp.nvars:
        raise ValueError(f"point has {len(point)} coordinates, expected {inp.nvars}")
    if 2 * k > inp.socle_degree:
        raise ValueError(f"order {k} too large: need 2k <= {inp.socle_degree}")
    pt = [Fraction(c) for c in point]
    basis = degree_basis(inp, k)
    f = inp.polynomial()
    first = [mono.act(inp.action, a, f) for a in basis]
    mat = []
    for a in range(len(basis)):
        row = []
        for b in range(len(basis)):
            poly = mono.act(inp.action, basis[b], first[a])
            row.append(_evaluate(poly, pt))
        mat.append(row)
    return mat


def _evaluate(poly: dict, pt: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for t, c in poly.items():
        v = Fraction(c)
        for x, e in zip(pt, t):
            if e:
                v *= x ** e
        total += v
    return total


def hessian_rank(inp: NagataInput, k: int, point: Sequence) -> tuple[int, int]:
    mat = hessian_matrix(inp, k, point)
    red = RowReducer()
    for row in mat:
        sparse = {c: v for c, v in enumerate(row) if v}
        if sparse:
            red.add(clear_denominators(sparse))
    return red.rank, len(mat)


def random_form(inp: NagataInput, rng: random.Random) -> LinearForm:
    lo, hi = RANDOM_COEFF_RANGE
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(inp.nvars)]
        if any(coeffs):
            return LinearForm(coeffs)


def check_slp(inp: NagataInput, trials: int = 10, seed: int = 0) -> LefschetzReport:
    """Search for a strong Lefschetz element among seeded random forms.

    A passing form is a certificate.  Otherwise the verdict is False with
    "no witness found", and for every Hessian order the number of sampled
    points where ``hess^k`` dropped rank is recorded; deficiency at all of at
    least ten points is flagged as (probabilistic) evidence that ``hess^k``
    vanishes identically.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    d = inp.socle_degree
    orders = range(0, d // 2 + 1)
    deficient = {k: 0 for k in orders}
    report = LefschetzReport("SLP", None, seed=seed)
    for t in range(trials):
        L = random_form(inp, rng)
        for k in orders:
            rank, size = hessian_rank(inp, k, L.coefficients)
            if rank < size:
                deficient[k] += 1
        report.trials = t + 1
        checks = _run_checks(inp, L, range(1, d + 1), stop_early=True)
        if all(c.maximal for c in checks):
            report.form, report.checks, report.verdict = L, checks, True
            break
        report.checks = checks
    report.hessian_evidence = {
        k: {
            "deficient_points": deficient[k],
            "points": report.trials,
            "identically_vanishing_evidence": report.trials >= VANISHING_EVIDENCE_TRIALS
            and deficient[k] == report.trials,
        }
        for k in orders
    }
    if report.verdict:
        report.note = f"witness found at trial {report.trials}"
    else:
        report.note = f"no witness found in {report.trials} trials"
        flagged = [k for k, v in report.hessian_evidence.items() if v["identically_vanishing_evidence"]]
        if flagged:
            report.note += "; evidence (probabilistic) of identically vanishing hess^k for k=" + ",".join(
                map(str, flagged)
            )
    return report

