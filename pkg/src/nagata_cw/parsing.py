"""Reading and writing Nagata inputs as expression text or JSON.

Expression grammar (whitespace is ignored)::

    poly   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := VAR ('^' INT)?
    VAR    := 'x' INT | 'u' INT

x-variables are numbered from 0, u-variables from 1.  Each term holds
exactly one x-variable, raised to the common power d1, and the x indices of
the terms must be exactly 0..n.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Optional, Union

from . import monomials as mono
from .faces import NagataInput, ValidationError
from .monomials import PairingAction

SCHEMA_VERSION = "nagata-cw/1"

_TOKEN = re.compile(r"\s*(?:(?P<var>[xu])(?P<idx>\d+)|(?P<int>\d+)|(?P<op>[+*^]))")


class ParseError(ValidationError):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f" (expected {' or '.join(expected)})" if expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@dataclass
class _Tok:
    kind: str
    value: Any
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start,
                             ("'x<i>'", "'u<j>'", "'+'", "'*'", "'^'", "integer"))
        if mt.group("var"):
            toks.append(_Tok(mt.group("var"), int(mt.group("idx")), mt.start("var")))
        elif mt.group("int"):
            toks.append(_Tok("int", int(mt.group("int")), mt.start("int")))
        else:
            toks.append(_Tok(mt.group("op"), None, mt.start("op")))
        pos = mt.end()
    toks.append(_Tok("eof", None, len(text)))
    return toks


def _describe(t: _Tok) -> str:
    if t.kind == "eof":
        return "end of input"
    if t.kind in ("x", "u"):
        return f"'{t.kind}{t.value}'"
    if t.kind == "int":
        return f"integer {t.value}"
    return repr(t.kind)


def _parse_terms(text: str) -> list[tuple[int, list[tuple[str, int, int, int]]]]:
    """Terms as ``(position, [(kind, index, exponent, position), ...])``."""
    toks = _tokenize(text)
    k = 0

    def expect(*kinds):
        nonlocal k
        t = toks[k]
        if t.kind not in kinds:
            names = {"x": "'x<i>'", "u": "'u<j>'", "int": "integer", "eof": "end of input"}
            raise ParseError(f"unexpected {_describe(t)}", t.pos, tuple(names.get(x, repr(x)) for x in kinds))
        k += 1
        return t

    terms = []
    while True:
        start = toks[k].pos
        factors = []
        while True:
            v = expect("x", "u")
            e = 1
            if toks[k].kind == "^":
                k += 1
                e = expect("int").value
                if e < 1:
                    raise ParseError("exponent must be positive", toks[k - 1].pos)
            factors.append((v.kind, v.value, e, v.pos))
            if toks[k].kind == "*":
                k += 1
                continue
            break
        terms.append((start, factors))
        if toks[k].kind == "+":
            k += 1
            continue
        expect("eof")
        return terms


def parse_expression(text: str, m: Optional[int] = None,
                     action: Union[str, PairingAction] = PairingAction.CONTRACTION) -> NagataInput:
    """Parse ``x0^d*u..*.. + x1^d*... + ...``; ``m`` defaults to the largest u index used."""
    terms = _parse_terms(text)
    max_u = 0
    for _, factors in terms:
        for kind, idx, _, pos in factors:
            if kind == "u":
                if idx < 1:
                    raise ParseError("u-variables are numbered from 1", pos)
                max_u = max(max_u, idx)
    if m is None:
        m = max_u
    elif max_u > m:
        raise ValidationError(f"u{max_u} used but m={m}")
    if m < 1:
        raise ValidationError("no u-variables present")

    by_x: dict[int, tuple] = {}
    d1 = None
    for start, factors in terms:
        xs = [(idx, e, pos) for kind, idx, e, pos in factors if kind == "x"]
        if len(xs) != 1:
            raise ParseError(f"term must contain exactly one x-variable, found {len(xs)}", start)
        xi, xe, xpos = xs[0]
        if d1 is None:
            d1 = xe
        elif xe != d1:
            raise ParseError(f"mixed d1: x{xi}^{xe} but an earlier term has x-degree {d1}", xpos)
        if xi in by_x:
            raise ParseError(f"x{xi} appears in two terms", xpos)
        g = [0] * m
        for kind, idx, e, _ in factors:
            if kind == "u":
                g[idx - 1] += e
        by_x[xi] = (tuple(g), start)
    if sorted(by_x) != list(range(len(by_x))):
        raise ValidationError(f"x indices must be exactly 0..{len(by_x) - 1}, got {sorted(by_x)}")
    facets = [by_x[i][0] for i in range(len(by_x))]
    return NagataInput(d1, m, facets, action)


def to_expression(inp: NagataInput) -> str:
    names = mono.x_names(inp.nx) + mono.u_names(inp.m)
    terms = []
    for r, g in enumerate(inp.facets):
        terms.append(mono.format_monomial(inp.x_power(r, inp.d1) + g, names))
    return " + ".join(terms)


def parse_json(doc: Union[str, dict], action: Optional[Union[str, PairingAction]] = None) -> NagataInput:
    """Parse the JSON input document; an explicit ``action`` overrides the document's."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(doc, dict):
        raise ValidationError("input document must be a JSON object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValidationError(f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION!r}")
    missing = [k for k in ("d1", "m", "g") if k not in doc]
    if missing:
        raise ValidationError(f"missing field(s): {', '.join(missing)}")
    g = doc["g"]
    if not isinstance(g, list) or not all(isinstance(v, list) for v in g):
        raise ValidationError("field g must be a list of exponent vectors")
    for v in g:
        if not all(isinstance(e, int) and not isinstance(e, bool) for e in v):
            raise ValidationError("exponents must be integers")
    if not isinstance(doc["d1"], int) or not isinstance(doc["m"], int):
        raise ValidationError("d1 and m must be integers")
    act = action if action is not None else doc.get("action", PairingAction.CONTRACTION.value)
    return NagataInput(doc["d1"], doc["m"], [tuple(v) for v in g], act)


def to_json_document(inp: NagataInput) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "d1": inp.d1,
        "m": inp.m,
        "g": [list(g) for g in inp.facets],
        "action": inp.action.value,
    }


def parse(source: Union[str, dict], action: Optional[Union[str, PairingAction]] = None,
          m: Optional[int] = None) -> NagataInput:
    """Parse either input format; JSON is recognised by a leading ``{``."""
    if isinstance(source, dict) or source.lstrip().startswith("{"):
        return parse_json(source, action)
    return parse_expression(source.rstrip("\n"), m=m,
                            action=action if action is not None else PairingAction.CONTRACTION)
