"""Finite unital rings given by structure constants.

A ring has additive basis ``b_1..b_k`` with ``b_i`` of additive order
``orders[i]``; ``mult[i, j]`` holds the coordinates of ``b_i * b_j``.
Ring elements are indexed in mixed radix with the first coordinate most
significant, so index order is lexicographic order of coordinates.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np
from sympy import Poly, symbols

from .abelian import factor
from .errors import (
    AssociativityViolation,
    NotIrreducible,
    NotTwoSidedIdeal,
    OrderIncompatibility,
    RingLabError,
    UnitViolation,
)


def strides_for(orders) -> np.ndarray:
    s = np.ones(len(orders), dtype=np.int64)
    for u in range(len(orders) - 2, -1, -1):
        s[u] = s[u + 1] * orders[u + 1]
    return s


def all_coords(orders) -> np.ndarray:
    if len(orders) == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(o, dtype=np.int64) for o in orders], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


class FiniteRing:
    """Immutable finite ring; derived tables are computed lazily and cached."""

    def __init__(self, orders, mult, unit, name: str = "", factors=None):
        self.orders = tuple(int(o) for o in orders)
        k = len(self.orders)
        ords = np.array(self.orders, dtype=np.int64)
        self.mult = np.array(mult, dtype=np.int64).reshape(k, k, k) % ords
        self.unit = np.array(unit, dtype=np.int64).reshape(k) % ords
        self.mult.flags.writeable = False
        self.unit.flags.writeable = False
        self.name = name or f"ring{self.orders}"
        # (R1, R2) when built as a direct product; used by product checks.
        self.factors = factors

    def __repr__(self):
        return f"FiniteRing({self.name!r}, size={self.size})"

    @property
    def k(self) -> int:
        return len(self.orders)

    @cached_property
    def size(self) -> int:
        return int(np.prod(self.orders, dtype=np.int64)) if self.orders else 1

    @cached_property
    def ords(self) -> np.ndarray:
        return np.array(self.orders, dtype=np.int64)

    @cached_property
    def strides(self) -> np.ndarray:
        return strides_for(self.orders)

    @cached_property
    def elements(self) -> np.ndarray:
        return all_coords(self.orders)

    def index(self, coords) -> np.ndarray | int:
        c = np.asarray(coords, dtype=np.int64) % self.ords
        return c @ self.strides

    def mul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.ords

    @cached_property
    def mul_table(self) -> np.ndarray:
        """``mul_table[a, b]`` is the index of ``elements[a] * elements[b]``."""
        X = self.elements
        left = np.einsum("ai,ijk->ajk", X, self.mult)
        prod_coords = np.einsum("ajk,bj->abk", left, X) % self.ords
        return prod_coords @ self.strides

    @cached_property
    def one_index(self) -> int:
        return int(self.index(self.unit))

    @cached_property
    def basis_indices(self) -> np.ndarray:
        return np.array([self.index(row) for row in np.eye(self.k, dtype=np.int64)], dtype=np.int64)

    @cached_property
    def op(self) -> "FiniteRing":
        other = FiniteRing(self.orders, self.mult.transpose(1, 0, 2), self.unit, name=f"op({self.name})")
        if self.factors is not None:
            other.factors = tuple(f.op for f in self.factors)
        other.__dict__["op"] = self
        return other

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.transpose(1, 0, 2)))

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self.orders == other.orders
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
        )

    @cached_property
    def regular(self):
        from .modules import regular_module

        return regular_module(self)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "orders": list(self.orders),
            "unit": [int(x) for x in self.unit],
            "mult": self.mult.tolist(),
        }


def _check_ring(orders, mult, unit):
    k = len(orders)
    ords = np.array(orders, dtype=np.int64)
    for i, j in itertools.product(range(k), repeat=2):
        v = mult[i, j]
        if np.any((orders[i] * v) % ords) or np.any((orders[j] * v) % ords):
            raise OrderIncompatibility(
                f"b_{i + 1}*b_{j + 1} is not killed by the additive orders of its factors", (i, j)
            )
    left = np.einsum("l,lik->ik", unit, mult) % ords
    right = np.einsum("l,ilk->ik", unit, mult) % ords
    eye = np.eye(k, dtype=np.int64)
    for i in range(k):
        if not np.array_equal(left[i], eye[i]):
            raise UnitViolation(f"1*b_{i + 1} != b_{i + 1}", (i,))
        if not np.array_equal(right[i], eye[i]):
            raise UnitViolation(f"b_{i + 1}*1 != b_{i + 1}", (i,))
    lhs = np.einsum("ijs,slk->ijlk", mult, mult) % ords
    rhs = np.einsum("jls,isk->ijlk", mult, mult) % ords
    bad = np.argwhere(np.any(lhs != rhs, axis=-1))
    if len(bad):
        i, j, l = (int(x) for x in bad[0])
        raise AssociativityViolation(
            f"(b_{i + 1} b_{j + 1}) b_{l + 1} != b_{i + 1} (b_{j + 1} b_{l + 1})", (i, j, l)
        )


def make_ring(orders, mult, unit, name: str = "") -> FiniteRing:
    """Validate structure constants and build the ring.

    Raises ``AssociativityViolation``, ``UnitViolation`` or
    ``OrderIncompatibility`` naming the offending basis indices.
    """
    orders = [int(o) for o in orders]
    if any(o < 1 for o in orders):
        raise ValueError("additive orders must be positive")
    k = len(orders)
    mult = np.array(mult, dtype=np.int64)
    if mult.shape != (k, k, k):
        raise ValueError(f"structure constants must have shape {(k, k, k)}, got {mult.shape}")
    unit = np.array(unit, dtype=np.int64).reshape(k)
    ords = np.array(orders, dtype=np.int64)
    _check_ring(orders, mult % ords, unit % ords)
    return FiniteRing(orders, mult, unit, name=name)


# -- constructors -------------------------------------------------------------


def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError("Z/n needs n >= 2")
    return make_ring([n], [[[1]]], [1], name=f"Z/{n}")


def _first_irreducible(p: int, k: int) -> list[int]:
    x = symbols("x")
    for tail in itertools.product(range(p), repeat=k):
        coeffs = [1] + list(tail)  # high to low
        if coeffs[-1] == 0:
            continue
        if Poly(coeffs, x, modulus=p).is_irreducible:
            return list(reversed(coeffs))
    raise NotIrreducible(f"no irreducible polynomial of degree {k} over F_{p}")


def _poly_ring(base: FiniteRing, low_to_high, name: str) -> FiniteRing:
    """``base[x]/(f)`` for a monic integer polynomial ``f``."""
    f = [int(c) for c in low_to_high]
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise ValueError("modulus must be a monic polynomial of degree >= 1")
    # x^t mod f as integer coefficient vectors for t < 2d - 1
    powers = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(2 * d - 1):
        powers.append(list(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [c - top * f[i] for i, c in enumerate(cur)]
    k = base.k
    K = k * d
    orders = [base.orders[i] for _ in range(d) for i in range(k)]  # basis b_i x^a at a*k + i
    ords = np.array(orders, dtype=np.int64)
    mult = np.zeros((K, K, K), dtype=np.int64)
    for a, c in itertools.product(range(d), repeat=2):
        xp = powers[a + c]
        for i, j in itertools.product(range(k), repeat=2):
            bij = base.mult[i, j]
            out = np.zeros(K, dtype=np.int64)
            for t in range(d):
                if xp[t]:
                    out[t * k:(t + 1) * k] += xp[t] * bij
            mult[a * k + i, c * k + j] = out % ords
    unit = np.zeros(K, dtype=np.int64)
    unit[:k] = base.unit
    return make_ring(orders, mult, unit, name=name)


def gf(q: int, modulus=None) -> FiniteRing:
    """GF(q) as F_p[x]/(f) with ``f`` the first monic irreducible in lex order."""
    fac = factor(q)
    if len(fac) != 1:
        raise ValueError(f"GF({q}): {q} is not a prime power")
    p, k = fac[0]
    if k == 1 and modulus is None:
        return make_ring([p], [[[1]]], [1], name=f"GF({q})")
    if modulus is None:
        modulus = _first_irreducible(p, k)
    else:
        modulus = [int(c) % p for c in modulus]
        x = symbols("x")
        if len(modulus) - 1 != k or modulus[-1] != 1 or not Poly(list(reversed(modulus)), x, modulus=p).is_irreducible:
            raise NotIrreducible(f"{modulus} is not a monic irreducible of degree {k} over F_{p}")
    return _poly_ring(zmod(p), modulus, name=f"GF({q})")


def poly_quotient(base: FiniteRing, low_to_high, poly_text: str | None = None) -> FiniteRing:
    if not base.is_commutative:
        raise RingLabError(f"{base.name}[x]/(f) requires a commutative base ring")
    label = poly_text if poly_text is not None else str(list(low_to_high))
    return _poly_ring(base, low_to_high, name=f"{base.name}[x]/({label})")


def matrix_ring(n: int, base: FiniteRing, upper_only: bool = False) -> FiniteRing:
    cells = [(a, b) for a in range(n) for b in range(n) if not upper_only or a <= b]
    pos = {cell: t for t, cell in enumerate(cells)}
    k = base.k
    K = len(cells) * k
    orders = [base.orders[i] for _ in cells for i in range(k)]
    mult = np.zeros((K, K, K), dtype=np.int64)
    for (a, b), (c, d) in itertools.product(cells, repeat=2):
        if b != c:
            continue
        t = pos[(a, d)]
        for i, j in itertools.product(range(k), repeat=2):
            mult[pos[(a, b)] * k + i, pos[(c, d)] * k + j, t * k:(t + 1) * k] = base.mult[i, j]
    unit = np.zeros(K, dtype=np.int64)
    for a in range(n):
        unit[pos[(a, a)] * k:(pos[(a, a)] + 1) * k] = base.unit
    kind = "Tri" if upper_only else "Mat"
    return make_ring(orders, mult, unit, name=f"{kind}({n}, {base.name})")


def triangular(n: int, base: FiniteRing) -> FiniteRing:
    return matrix_ring(n, base, upper_only=True)


def product(r1: FiniteRing, r2: FiniteRing) -> FiniteRing:
    k1, k2 = r1.k, r2.k
    K = k1 + k2
    mult = np.zeros((K, K, K), dtype=np.int64)
    mult[:k1, :k1, :k1] = r1.mult
    mult[k1:, k1:, k1:] = r2.mult
    unit = np.concatenate([r1.unit, r2.unit])
    ring = make_ring(list(r1.orders) + list(r2.orders), mult, unit, name=f"{_wrap(r1)} x {_wrap(r2)}")
    ring.factors = (r1, r2)
    return ring


def _wrap(r: FiniteRing) -> str:
    return f"({r.name})" if " x " in r.name and not r.name.startswith("(") else r.name


def opposite(r: FiniteRing) -> FiniteRing:
    return r.op


def component_idempotents(ring: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of ``(1, 0)`` and ``(0, 1)`` in a product ring."""
    r1, _ = ring.factors
    e1 = np.zeros(ring.k, dtype=np.int64)
    e2 = np.zeros(ring.k, dtype=np.int64)
    e1[: r1.k] = ring.unit[: r1.k]
    e2[r1.k:] = ring.unit[r1.k:]
    return e1, e2


def ideal_indices(ring: FiniteRing, generators) -> np.ndarray:
    """Additive span of ``generators`` as sorted element indices."""
    from .abelian import enumerate_span, polycyclic

    gens, rel = polycyclic(np.array(generators, dtype=np.int64).reshape(-1, ring.k), ring.orders)
    return np.unique(ring.index(enumerate_span(gens, rel, ring.orders)))


def quotient_ring(ring: FiniteRing, generators, name: str | None = None) -> FiniteRing:
    """``R/I`` where ``I`` is the additive span of ``generators``.

    Raises ``NotTwoSidedIdeal`` if that span is not closed under left and
    right multiplication by ``R``.
    """
    from .modules import subquotient

    idx = ideal_indices(ring, generators)
    inside = np.zeros(ring.size, dtype=bool)
    inside[idx] = True
    T = ring.mul_table
    if not inside[T[:, idx]].all() or not inside[T[idx, :]].all():
        raise NotTwoSidedIdeal(f"span of {np.asarray(generators).tolist()} is not a two-sided ideal")
    M = ring.regular
    I = M.submodule(idx)
    Q, label = subquotient(M, M.full, I)
    return ring_on_group(ring, Q, label, ring.one_index, name or f"{ring.name}/I")


def ring_on_group(ring: FiniteRing, Q, label, one_index: int, name: str) -> FiniteRing:
    """Transport multiplication of ``ring`` onto the group of module ``Q``.

    ``label`` maps ring element indices onto ``Q`` indices (-1 where undefined);
    multiplication must be compatible with it.
    """
    reps = np.full(Q.size, -1, dtype=np.int64)
    valid = np.nonzero(label >= 0)[0]
    reps[label[valid][::-1]] = valid[::-1]
    gen_idx = [int(reps[int(Q.index(row))]) for row in np.eye(Q.m, dtype=np.int64)]
    T = ring.mul_table
    K = Q.m
    mult = np.zeros((K, K, K), dtype=np.int64)
    for i, j in itertools.product(range(K), repeat=2):
        mult[i, j] = Q.coords[label[T[gen_idx[i], gen_idx[j]]]]
    unit = Q.coords[label[one_index]]
    return make_ring(Q.orders, mult, unit, name=name)


def ring_isomorphism(A: FiniteRing, B: FiniteRing) -> np.ndarray | None:
    """Index map ``A -> B`` of a ring isomorphism, or ``None``.

    Backtracks over images of the additive basis of ``A`` among elements of
    ``B`` with matching additive order; meant for small rings.
    """
    if A.size != B.size or A.is_commutative != B.is_commutative:
        return None
    if A.k == 0:
        return np.zeros(1, dtype=np.int64)
    Bel = B.elements
    order_of = np.ones(B.size, dtype=np.int64)
    for idx in range(1, B.size):
        x = Bel[idx]
        t = 1
        while ((t * x) % B.ords).any():
            t += 1
        order_of[idx] = t
    candidates = [np.nonzero(order_of == d)[0] for d in A.orders]
    images = np.zeros((A.k, B.k), dtype=np.int64)

    def finish():
        phi = (A.elements @ images) % B.ords @ B.strides
        if len(np.unique(phi)) != A.size:
            return None
        if phi[A.one_index] != B.one_index:
            return None
        basis = A.basis_indices
        if not np.array_equal(phi[A.mul_table[np.ix_(basis, basis)]], B.mul_table[np.ix_(phi[basis], phi[basis])]):
            return None
        return phi

    def search(i):
        if i == A.k:
            return finish()
        for y in candidates[i]:
            images[i] = Bel[y]
            out = search(i + 1)
            if out is not None:
                return out
        return None

    return search(0)
