"""Singular and small modules and the torsion radicals built from them.

Cyclic submodules ``R x`` are classified through the left ideal
``(U : x) = {r : r x in U}``: ``R(x + U)`` is isomorphic to ``R / (U : x)``.
Per-ideal verdicts (essential, small quotient) are cached on the ring
context, which makes most predicates a table lookup per element.
"""

from __future__ import annotations

import numpy as np

from .errors import FixpointDivergence
from .homological import context, injective_hull, is_essential, radical
from .modules import FinModule, Submodule, closure, quotient_module, submodule_lattice


def colon_ideals(M: FinModule, inside: np.ndarray) -> tuple[list[int], np.ndarray]:
    """Left ideals ``(U : x)`` for every ``x`` given the boolean set ``U``.

    Returns ``(masks, which)``: distinct ideal bitmasks over the ring and
    ``which[x]``, the position of ``(U : x)`` in ``masks``.
    """
    hits = inside[M.ract]
    packed = np.packbits(hits, axis=0, bitorder="little").T
    rows, which = np.unique(packed, axis=0, return_inverse=True)
    masks = [int.from_bytes(r.tobytes(), "little") for r in rows]
    return masks, which.ravel()


def _ideal_flags(M: FinModule, inside: np.ndarray, predicate) -> np.ndarray:
    masks, which = colon_ideals(M, inside)
    flags = np.array([predicate(M.ring, m) for m in masks], dtype=bool)
    return flags[which]


def is_essential_ideal(ring, mask: int) -> bool:
    ctx = context(ring)
    cache = ctx.__dict__.setdefault("_essential_ideals", {})
    if mask not in cache:
        reg = ctx.regular
        cache[mask] = is_essential(Submodule.from_mask(reg, mask), reg)
    return cache[mask]


def is_small_ideal(ring, mask: int) -> bool:
    """Whether ``R / I`` is a small module."""
    ctx = context(ring)
    cache = ctx.__dict__.setdefault("_small_ideals", {})
    if mask not in cache:
        reg = ctx.regular
        Q, _ = quotient_module(reg, Submodule.from_mask(reg, mask))
        cache[mask] = is_small_module(Q)
    return cache[mask]


# -- Z and Z* -------------------------------------------------------------------


def singular_submodule(M: FinModule) -> Submodule:
    """``Z(M)``: elements whose annihilator is essential in ``R``."""
    zero = np.zeros(M.size, dtype=bool)
    zero[0] = True
    flags = _ideal_flags(M, zero, is_essential_ideal)
    return Submodule(M, np.nonzero(flags)[0])


def is_singular_module(M: FinModule) -> bool:
    return singular_submodule(M).is_full()


def goldie_radical(M: FinModule) -> Submodule:
    """``Z_2(M)`` with ``Z_2(M) / Z(M) = Z(M / Z(M))``."""
    Z = singular_submodule(M)
    flags = _ideal_flags(M, Z.bools, is_essential_ideal)
    Z2 = Submodule(M, np.nonzero(flags)[0])
    Q, _ = quotient_module(M, Z2)
    assert singular_submodule(Q).is_zero(), "Goldie radical is not idempotent"
    return Z2


def is_small_module(M: FinModule) -> bool:
    """``M`` lies in the radical of its injective hull."""
    if M.size == 1:
        return True
    h = injective_hull(M)
    return bool(radical(h.hull).bools[h.embedding.images].all())


def zstar_hull(M: FinModule) -> Submodule:
    """``Z*(M)`` as the preimage of ``Rad E(M)`` under the hull embedding."""
    if M.size == 1:
        return M.zero
    h = injective_hull(M)
    radE = radical(h.hull).bools
    return Submodule(M, np.nonzero(radE[h.embedding.images])[0])


def zstar(M: FinModule) -> Submodule:
    """``Z*(M)`` as the sum of all small submodules of ``M``.

    A submodule is small iff all its cyclic submodules are, so this is the
    span of the ``x`` with ``R / ann(x)`` small.
    """
    zero = np.zeros(M.size, dtype=bool)
    zero[0] = True
    flags = _ideal_flags(M, zero, is_small_ideal)
    elems = closure(M, M.zero.elems, M.coords[np.nonzero(flags)[0]])
    return Submodule(M, elems)


# -- dual Goldie torsion ------------------------------------------------------


def cg_radical(M: FinModule) -> Submodule:
    """Largest submodule all of whose nonzero subquotients have ``Z* != 0``.

    Iterates ``T_{n+1} = preimage of Z*(M / T_n)`` to its fixpoint.
    """
    T = M.zero
    for _ in range(M.size + 1):
        Q, proj = quotient_module(M, T)
        Zq = zstar_hull(Q)
        nxt = Submodule(M, np.nonzero(Zq.bools[proj.images])[0])
        if nxt.size == T.size:
            return T
        T = nxt
    raise FixpointDivergence("cg_radical did not stabilise")


def is_cg_torsion(M: FinModule) -> bool:
    return cg_radical(M).is_full()


def is_cg_torsionfree(M: FinModule) -> bool:
    return zstar(M).is_zero()


def small_colon_masks(M: FinModule) -> list[int]:
    """For each member ``U`` of the lattice, the bitmask of ``x`` with ``R(x+U)`` small."""
    cached = M.__dict__.get("_small_colon_masks")
    if cached is not None:
        return cached
    from .modules import _mask_from

    out = []
    for U in submodule_lattice(M):
        flags = _ideal_flags(M, U.bools, is_small_ideal)
        out.append(_mask_from(np.nonzero(flags)[0], M.size))
    M.__dict__["_small_colon_masks"] = out
    return out


def cg_radical_bruteforce(M: FinModule) -> Submodule:
    """Largest ``T`` with ``Z*(V/U) != 0`` for all ``U < V <= T``, by lattice scan."""
    L = submodule_lattice(M)
    S = small_colon_masks(M)
    bad = []
    for U, SU in zip(L, S):
        for V in L:
            if U < V and (V.mask & SU) & ~U.mask == 0:
                bad.append(V.mask)
    good = [T for T in L if not any(b & ~T.mask == 0 for b in bad)]
    top = good[-1]
    assert all(T <= top for T in good), "torsion members have no largest element"
    return top


def reject_small(M: FinModule, within: Submodule | None = None) -> Submodule:
    """Intersection of the ``K <= N`` with ``N / K`` small (``N`` defaults to ``M``)."""
    N = within if within is not None else M.full
    L = submodule_lattice(M)
    S = small_colon_masks(M)
    mask = N.mask
    for K, SK in zip(L, S):
        if K <= N and N.mask & ~SK == 0:
            mask &= K.mask
    return L.lookup(mask)


def generalov_rho(M: FinModule) -> Submodule:
    """Iterate ``reject_small`` downward until it stabilises."""
    N = M.full
    for _ in range(M.size + 1):
        nxt = reject_small(M, N)
        if nxt == N:
            return N
        N = nxt
    raise FixpointDivergence("generalov_rho did not stabilise")


def is_perp_torsion(M: FinModule) -> bool:
    return reject_small(M).is_full()


def has_small_quotient(M: FinModule) -> bool:
    """Some nonzero factor module of ``M`` is a small module (hull test)."""
    for K in submodule_lattice(M):
        if K.is_full():
            continue
        Q, _ = quotient_module(M, K)
        if is_small_module(Q):
            return True
    return False
