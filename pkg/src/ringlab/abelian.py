"""Exact linear algebra over finite abelian groups ``Z/o_1 x ... x Z/o_n``.

Everything is reduced prime by prime: over ``Z/p^K`` every nonzero entry is a
unit times a power of ``p``, so Smith reduction never needs Euclidean steps
and numpy row/column updates stay exact in int64.

Conventions: a homomorphism ``phi: D -> C`` between such groups is an integer
matrix ``A`` of shape ``(len(C), len(D))`` whose column ``j`` holds the
coordinates of the image of the ``j``-th generator of ``D``. Callers are
responsible for ``A`` being well defined on ``D``.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

import numpy as np
from sympy import factorint


@lru_cache(maxsize=None)
def factor(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(int(n)).items()))


def vp(n: int, p: int) -> int:
    """p-adic valuation of a positive integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _primes(orders) -> list[int]:
    ps = set()
    for o in orders:
        ps.update(p for p, _ in factor(int(o)))
    return sorted(ps)


def local_snf(A, p: int, K: int, track_q: bool = True):
    """Diagonalise ``A`` over ``Z/p^K``.

    Returns ``(vals, Q)`` where ``P @ A @ Q`` is diagonal with entries
    ``p**vals[t]`` for ``t < len(vals)`` and zero afterwards, for some
    invertible ``P``. ``Q`` is ``None`` when ``track_q`` is false.
    """
    q = p**K
    A = np.array(A, dtype=np.int64) % q
    r, c = A.shape
    Q = np.eye(c, dtype=np.int64) if track_q else None
    vals: list[int] = []
    t = 0
    powers = [p**e for e in range(K + 1)]
    while t < min(r, c):
        sub = A[t:, t:]
        if not sub.any():
            break
        for e in range(K):
            hits = np.flatnonzero(sub % powers[e + 1])
            if len(hits):
                i, j = divmod(int(hits[0]), sub.shape[1])
                break
        i += t
        j += t
        if i != t:
            A[[t, i]] = A[[i, t]]
        if j != t:
            A[:, [t, j]] = A[:, [j, t]]
            if track_q:
                Q[:, [t, j]] = Q[:, [j, t]]
        pe = powers[e]
        u = int(A[t, t]) // pe
        uinv = pow(u, -1, q)
        A[t] = (A[t] * uinv) % q
        below = A[t + 1:, t] // pe
        if below.any():
            A[t + 1:] = (A[t + 1:] - np.outer(below, A[t])) % q
        right = A[t, t + 1:] // pe
        if right.any():
            A[:, t + 1:] = (A[:, t + 1:] - np.outer(A[:, t], right)) % q
            if track_q:
                Q[:, t + 1:] = (Q[:, t + 1:] - np.outer(Q[:, t], right)) % q
        vals.append(e)
        t += 1
    return vals, Q


def _scaled_rows(A, cod, p: int, K: int):
    """Embed each codomain factor ``Z/p^b`` into ``Z/p^K`` by scaling its row."""
    scale = np.array([p ** (K - vp(int(o), p)) for o in cod], dtype=np.int64)
    return (np.asarray(A, dtype=np.int64) % p**K) * scale[:, None]


def image_order(A, cod) -> int:
    """Order of the image of the map with matrix ``A`` into ``prod Z/cod``."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 1
    total = 1
    for p in _primes(cod):
        K = max(vp(int(o), p) for o in cod)
        if K == 0:
            continue
        vals, _ = local_snf(_scaled_rows(A, cod, p, K), p, K, track_q=False)
        total *= p ** sum(K - v for v in vals)
    return total


def span_order(gens, orders) -> int:
    """Order of the subgroup generated by the rows of ``gens``."""
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, len(orders))
    if gens.shape[0] == 0 or len(orders) == 0:
        return 1
    return image_order(gens.T, orders)


def kernel_order(A, dom, cod) -> int:
    return prod(int(o) for o in dom) // image_order(A, cod)


def _crt_idempotent(o: int, p: int) -> int:
    """Integer congruent to 1 mod the p-part of ``o`` and 0 mod its p'-part."""
    pa = p ** vp(o, p)
    rest = o // pa
    if rest == 1:
        return 1
    return (rest * pow(rest, -1, pa)) % o


def kernel(A, dom, cod) -> np.ndarray:
    """Generators (rows) of the kernel of ``A: prod Z/dom -> prod Z/cod``."""
    dom = [int(o) for o in dom]
    n = len(dom)
    A = np.asarray(A, dtype=np.int64).reshape(len(cod), n)
    out = []
    for p in _primes(list(dom) + [int(o) for o in cod]):
        a = [vp(o, p) for o in dom]
        if max(a, default=0) == 0:
            continue
        K = max(a + [vp(int(o), p) for o in cod])
        if len(cod):
            vals, Q = local_snf(_scaled_rows(A, cod, p, K), p, K)
        else:
            vals, Q = [], np.eye(n, dtype=np.int64)
        cols = [(p ** (K - v)) * Q[:, t] for t, v in enumerate(vals)]
        cols += [Q[:, t] for t in range(len(vals), n)]
        if not cols:
            continue
        G = np.array(cols, dtype=np.int64) % p**K
        eps = np.array([_crt_idempotent(o, p) for o in dom], dtype=np.int64)
        pa = np.array([p**x for x in a], dtype=np.int64)
        G = ((G % pa) * eps) % np.array(dom, dtype=np.int64)
        out.append(G[G.any(axis=1)])
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    return np.concatenate(out, axis=0)


def polycyclic(gens, orders):
    """Reduce ``gens`` to a sequence with relative orders.

    Returns ``(gens, rel)`` such that every element of the generated subgroup
    is uniquely ``sum t_i gens[i]`` with ``0 <= t_i < rel[i]``.
    """
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, len(orders))
    kept, rel = [], []
    size = 1
    for g in gens:
        trial = kept + [g]
        new = span_order(np.array(trial), orders)
        if new > size:
            kept.append(g)
            rel.append(new // size)
            size = new
    if not kept:
        return np.zeros((0, len(orders)), dtype=np.int64), []
    return np.array(kept, dtype=np.int64), rel


def enumerate_span(gens, rel, orders) -> np.ndarray:
    """All elements ``sum t_i gens[i]`` in lexicographic order of ``t``."""
    orders_a = np.asarray(orders, dtype=np.int64)
    elems = np.zeros((1, len(orders)), dtype=np.int64)
    for g, o in zip(gens, rel):
        steps = (np.arange(o, dtype=np.int64)[:, None] * g[None, :])
        elems = (elems[:, None, :] + steps[None, :, :]).reshape(-1, len(orders)) % orders_a
    return elems


def elementary_divisors(orders) -> tuple[int, ...]:
    """Sorted prime-power decomposition of ``prod Z/orders``."""
    out = []
    for o in orders:
        out.extend(p**k for p, k in factor(int(o)))
    return tuple(sorted(out))
