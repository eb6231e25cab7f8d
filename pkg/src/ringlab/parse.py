"""Text front ends: ring specs, raw ring documents and module specs.

Ring specs::

    Z/8   GF(9)   Mat(2, GF(2))   Tri(2, GF(3))   op(Tri(2, GF(2)))
    GF(2) x Z/4   GF(2)[x]/(x^3)   quo(Z/8; [4])

``quo(<spec>; v1; v2; ...)`` is the quotient by the two-sided ideal spanned
by the coordinate vectors ``v_i``. The product operator ``x`` needs spaces
around it.

Module specs (over a fixed ring)::

    R   R/rad   R/soc   simple:0   proj:1   hull(simple:1)   cover(R/soc)
    R+R   sq(R+R, 5, 2)

``sq(M, v, u)`` is ``V/U`` for members ``v`` and ``u`` of the canonical
submodule lattice of ``M``.
"""

from __future__ import annotations

import json
import re

from sympy import Poly, symbols
from sympy.parsing.sympy_parser import parse_expr

from . import rings as Rg
from .errors import ParseError
from .modules import FinModule, direct_sum_of, quotient_module, submodule_lattice, submodule_module, subquotient


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def take(self, token: str):
        if not self.peek(token):
            raise ParseError(f"expected {token!r} at position {self.pos} in {self.text!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise ParseError(f"expected an integer at position {self.pos} in {self.text!r}")
        self.pos = m.end()
        return int(m.group())

    def balanced(self) -> str:
        """Text up to the parenthesis closing the one just consumed."""
        depth, start = 1, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                out = self.text[start:self.pos]
                self.pos += 1
                return out
            self.pos += 1
        raise ParseError(f"unbalanced parentheses in {self.text!r}")

    def done(self) -> bool:
        self.skip()
        return self.pos == len(self.text)


def _poly_coeffs(text: str) -> list[int]:
    x = symbols("x")
    try:
        poly = Poly(parse_expr(text.replace("^", "**"), local_dict={"x": x}), x)
    except Exception as exc:  # sympy raises a zoo of types here
        raise ParseError(f"cannot parse polynomial {text!r}") from exc
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    if not all(float(c).is_integer() for c in poly.all_coeffs()):
        raise ParseError(f"polynomial {text!r} must have integer coefficients")
    return coeffs


def _ring_product(cur: _Cursor) -> Rg.FiniteRing:
    ring = _ring_term(cur)
    while True:
        m = re.compile(r"\s*x\s+").match(cur.text, cur.pos)
        if not m:
            return ring
        cur.pos = m.end()
        ring = Rg.product(ring, _ring_term(cur))


def _ring_term(cur: _Cursor) -> Rg.FiniteRing:
    ring = _ring_atom(cur)
    while cur.peek("[x]/("):
        cur.take("[x]/(")
        text = cur.balanced()
        ring = Rg.poly_quotient(ring, _poly_coeffs(text), text.strip())
    return ring


def _ring_atom(cur: _Cursor) -> Rg.FiniteRing:
    if cur.peek("Z/"):
        cur.take("Z/")
        return Rg.zmod(cur.integer())
    if cur.peek("GF("):
        cur.take("GF(")
        q = cur.integer()
        cur.take(")")
        return Rg.gf(q)
    for head, fn in (("Mat(", Rg.matrix_ring), ("Tri(", Rg.triangular)):
        if cur.peek(head):
            cur.take(head)
            n = cur.integer()
            cur.take(",")
            base = _ring_product(cur)
            cur.take(")")
            return fn(n, base)
    if cur.peek("op("):
        cur.take("op(")
        base = _ring_product(cur)
        cur.take(")")
        return base.op
    if cur.peek("quo("):
        cur.take("quo(")
        base = _ring_product(cur)
        gens = []
        while cur.peek(";"):
            cur.take(";")
            cur.take("[")
            start = cur.pos
            while cur.pos < len(cur.text) and cur.text[cur.pos] != "]":
                cur.pos += 1
            gens.append([int(v) for v in cur.text[start:cur.pos].split(",") if v.strip()])
            cur.take("]")
        cur.take(")")
        if any(len(g) != base.k for g in gens):
            raise ParseError(f"ideal generators must have {base.k} coordinates")
        return Rg.quotient_ring(base, gens, name=f"quo({base.name}; {'; '.join(map(str, gens))})")
    if cur.peek("("):
        cur.take("(")
        ring = _ring_product(cur)
        cur.take(")")
        return ring
    raise ParseError(f"unexpected input at position {cur.pos} in {cur.text!r}")


def build_ring(spec: str) -> Rg.FiniteRing:
    """Parse a ring spec; raw ring JSON documents are accepted too."""
    text = spec.strip()
    if text.startswith("{"):
        return load_raw_ring(text)
    cur = _Cursor(text)
    try:
        ring = _ring_product(cur)
    except ValueError as exc:
        raise ParseError(f"{spec}: {exc}") from exc
    if not cur.done():
        raise ParseError(f"trailing input at position {cur.pos} in {spec!r}")
    return ring


def load_raw_ring(text: str) -> Rg.FiniteRing:
    try:
        doc = json.loads(text)
        return Rg.make_ring(doc["orders"], doc["mult"], doc["unit"], name=doc.get("name", ""))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad raw ring document: {exc}") from exc


# -- module specs -------------------------------------------------------------


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def build_module(ring: Rg.FiniteRing, spec: str) -> FinModule:
    from . import homological as H

    text = spec.strip()
    summands = _split_top(text, "+")
    if len(summands) > 1:
        mod = direct_sum_of([build_module(ring, s) for s in summands])
        mod.name = text
        return mod
    reg = ring.regular
    if text == "R":
        return reg
    if text in ("R/rad", "R/soc"):
        N = H.radical(reg) if text == "R/rad" else H.socle(reg)
        mod, _ = quotient_module(reg, N)
    elif m := re.fullmatch(r"(simple|proj):(\d+)", text):
        ctx = H.context(ring)
        i = int(m.group(2))
        if i >= len(ctx.simples):
            raise ParseError(f"{text}: ring has {len(ctx.simples)} simple modules")
        if m.group(1) == "simple":
            mod = ctx.simples[i]
        else:
            mod, _ = submodule_module(reg, ctx.projective_for[i][0])
    elif m := re.fullmatch(r"(hull|cover)\((.*)\)", text):
        inner = build_module(ring, m.group(2))
        mod = H.injective_hull(inner).hull if m.group(1) == "hull" else H.projective_cover(inner).cover
    elif m := re.fullmatch(r"sq\((.*)\)", text):
        args = _split_top(m.group(1), ",")
        if len(args) != 3:
            raise ParseError(f"{text}: sq takes a module and two lattice indices")
        base = build_module(ring, args[0])
        L = submodule_lattice(base)
        try:
            V, U = L[int(args[1])], L[int(args[2])]
        except (ValueError, IndexError) as exc:
            raise ParseError(f"{text}: bad lattice index") from exc
        if not U <= V:
            raise ParseError(f"{text}: member {args[2]} is not contained in member {args[1]}")
        mod, _ = subquotient(base, V, U)
    else:
        raise ParseError(f"unknown module spec {spec!r}")
    mod.name = text
    return mod
