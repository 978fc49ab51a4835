"""Exponent-vector arithmetic and the apolarity pairing on monomials.

Monomials are plain tuples of non-negative integers.  A u-monomial has one
entry per u-variable; a bi-monomial (:class:`BiMonomial`) pairs an x-part and
a u-part.  Polynomials elsewhere in the package are ``dict`` objects mapping
flat exponent tuples to integer (or Fraction) coefficients.

The fixed monomial order is graded-lexicographic: lower degree first, and
within a degree ``u1^2 < u1*u2 < u1*u3 < u2^2 < ...`` (the order in which
``itertools.combinations_with_replacement`` produces variable multisets).
"""

from __future__ import annotations

import enum
import itertools
from math import prod
from typing import Iterable, NamedTuple, Sequence, Union

Monomial = tuple


class DimensionError(ValueError):
    """Monomials with different ambient variable counts were combined."""


class EmptyDomainError(ValueError):
    """Positive degree requested in a ring with no variables."""


class PairingAction(enum.Enum):
    CONTRACTION = "contraction"
    DIFFERENTIATION = "differentiation"

    @classmethod
    def parse(cls, value: Union[str, "PairingAction"]) -> "PairingAction":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(
                f"unknown action {value!r}; expected 'contraction' or 'differentiation'"
            ) from None


class BiMonomial(NamedTuple):
    x: Monomial
    u: Monomial

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.x), sum(self.u)

    @property
    def flat(self) -> Monomial:
        return self.x + self.u

    @classmethod
    def from_flat(cls, flat: Sequence[int], nx: int) -> "BiMonomial":
        return cls(tuple(flat[:nx]), tuple(flat[nx:]))


def degree(a: Sequence[int]) -> int:
    return sum(a)


def order_key(a: Sequence[int]) -> tuple:
    """Sort key realising the graded-lex order on exponent vectors."""
    return (sum(a), tuple(-e for e in a))


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"ambient dimensions differ: {len(a)} != {len(b)}")


def enumerate_monomials(m: int, d: int) -> list[Monomial]:
    """All exponent vectors of length ``m`` and degree ``d``, increasing in graded-lex order."""
    if d < 0:
        return []
    if m == 0:
        if d > 0:
            raise EmptyDomainError(f"no monomials of degree {d} in zero variables")
        return [()]
    out = []
    for combo in itertools.combinations_with_replacement(range(m), d):
        e = [0] * m
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return out


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """``a / b``; caller guarantees ``b`` divides ``a``."""
    _check_dims(a, b)
    q = tuple(x - y for x, y in zip(a, b))
    if min(q, default=0) < 0:
        raise ValueError(f"{b} does not divide {a}")
    return q


def divisors_of_degree(g: Sequence[int], j: int) -> list[Monomial]:
    """Every degree-``j`` monomial dividing ``g``, in graded-lex order.

    Returns an empty list when ``j`` is negative or exceeds ``deg g``.
    """
    if j < 0 or j > sum(g):
        return []
    out = []

    def rec(k: int, left: int, acc: list[int]) -> None:
        if k == len(g):
            if left == 0:
                out.append(tuple(acc))
            return
        # remaining capacity after position k
        cap = sum(g[k + 1:])
        for e in range(min(g[k], left), -1, -1):
            if left - e > cap:
                break
            acc.append(e)
            rec(k + 1, left - e, acc)
            acc.pop()

    rec(0, j, [])
    return out


def all_divisors(g: Sequence[int]) -> list[Monomial]:
    return [w for j in range(sum(g) + 1) for w in divisors_of_degree(g, j)]


def _falling(b: int, a: int) -> int:
    # b * (b-1) * ... * (b-a+1)
    return prod(range(b - a + 1, b + 1))


def pairing_coefficient(action: PairingAction, op: Sequence[int], target: Sequence[int]) -> int:
    """Scalar ``c`` with ``op(target) = c * target/op`` (0 when ``op`` does not divide)."""
    _check_dims(op, target)
    if any(a > b for a, b in zip(op, target)):
        return 0
    if action is PairingAction.CONTRACTION:
        return 1
    return prod(_falling(b, a) for a, b in zip(op, target) if a)


def _as_flat(mono) -> Monomial:
    return mono.flat if isinstance(mono, BiMonomial) else tuple(mono)


def apply(action: PairingAction, op, target) -> int:
    """Pairing coefficient of operator monomial ``op`` on polynomial monomial ``target``.

    Accepts :class:`BiMonomial` or flat exponent tuples.
    """
    return pairing_coefficient(action, _as_flat(op), _as_flat(target))


def act(action: PairingAction, op: Sequence[int], poly: dict) -> dict:
    """Apply a single operator monomial to a polynomial (flat exponent dict)."""
    out: dict = {}
    for t, c in poly.items():
        k = pairing_coefficient(action, op, t)
        if k:
            r = tuple(x - y for x, y in zip(t, op))
            v = out.get(r, 0) + k * c
            if v:
                out[r] = v
            else:
                out.pop(r, None)
    return out


def act_poly(action: PairingAction, ops: dict, poly: dict) -> dict:
    """Apply an operator polynomial ``ops`` (exponent dict) to ``poly``."""
    out: dict = {}
    for op, a in ops.items():
        for r, c in act(action, op, poly).items():
            v = out.get(r, 0) + a * c
            if v:
                out[r] = v
            else:
                out.pop(r, None)
    return out


def format_monomial(e: Sequence[int], names: Iterable[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def u_names(m: int, upper: bool = False) -> list[str]:
    return [("U" if upper else "u") + str(k + 1) for k in range(m)]


def x_names(nx: int, upper: bool = False) -> list[str]:
    return [("X" if upper else "x") + str(i) for i in range(nx)]
