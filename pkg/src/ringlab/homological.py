"""Radical, socle, simples, projective covers, duality and injective hulls.

Everything ring-dependent (the left-ideal lattice, J, simples, primitive
idempotents) is computed once per ring by :func:`context`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import log, prod

import numpy as np

from . import abelian
from .errors import NotASubmodule, TopDecompositionFailure
from .modules import (
    FinModule,
    ModuleMorphism,
    Submodule,
    closure,
    direct_sum_of,
    hom_count,
    hom_set,
    submodule_lattice,
    submodule_module,
    quotient_module,
)
from .rings import FiniteRing


class RingContext:
    """Derived data of one ring: left ideals, J, simples, projectives."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.regular = ring.regular

    @cached_property
    def ideals(self):
        return submodule_lattice(self.regular)

    @cached_property
    def jacobson(self) -> Submodule:
        return radical_by_lattice(self.regular)

    @cached_property
    def j_gens(self) -> np.ndarray:
        """Ring element indices additively generating J."""
        R = self.ring
        gens, _ = abelian.polycyclic(R.elements[self.jacobson.elems], R.orders)
        return np.array([int(R.index(g)) for g in gens], dtype=np.int64)

    @cached_property
    def simples(self) -> list[FinModule]:
        out: list[FinModule] = []
        for K in self.ideals.maximal():
            S, _ = quotient_module(self.regular, K)
            # nonzero maps between simples are isomorphisms
            if not any(hom_count(S, T) > 1 for T in out):
                S.name = f"simple:{len(out)}"
                out.append(S)
        return out

    @cached_property
    def end_sizes(self) -> list[int]:
        return [hom_count(S, S) for S in self.simples]

    def simple_class(self, S: FinModule) -> int:
        for i, T in enumerate(self.simples):
            if hom_count(S, T) > 1:
                return i
        raise TopDecompositionFailure("module is not isomorphic to a known simple")

    @cached_property
    def summands(self):
        """Indecomposable summands ``R e`` of the regular module with idempotents.

        Returns a list of ``(submodule, idempotent index, simple class)``.
        """
        R = self.ring
        parts = decompose_submodules(self.regular)
        ones = split_element(self.regular, parts, R.one_index)
        out = []
        for P, e in zip(parts, ones):
            Pm, _ = submodule_module(self.regular, P)
            top, _ = quotient_module(Pm, radical(Pm))
            out.append((P, int(e), self.simple_class(top)))
        return out

    @cached_property
    def projective_for(self) -> dict[int, tuple[Submodule, int]]:
        table = {}
        for P, e, cls in self.summands:
            table.setdefault(cls, (P, e))
        if len(table) != len(self.simples):
            raise TopDecompositionFailure("some simple module has no projective cover in R")
        return table


def context(ring: FiniteRing) -> RingContext:
    ctx = ring.__dict__.get("_context")
    if ctx is None:
        ctx = RingContext(ring)
        ring.__dict__["_context"] = ctx
    return ctx


def simple_modules(ring: FiniteRing) -> list[FinModule]:
    return list(context(ring).simples)


# -- radical and socle --------------------------------------------------------


def radical_by_lattice(M: FinModule) -> Submodule:
    """Intersection of the maximal submodules."""
    L = submodule_lattice(M)
    mask = M.full.mask
    for K in L.maximal():
        mask &= K.mask
    return L.lookup(mask)


def socle_by_lattice(M: FinModule) -> Submodule:
    """Sum of the minimal submodules."""
    L = submodule_lattice(M)
    out = M.zero
    for S in L.minimal():
        out = out + S
    return L.lookup(out.mask)


def j_times(M: FinModule, N: Submodule) -> Submodule:
    """``J N``, spanned by ``j x`` for ``j`` in a basis of ``J`` and ``x`` generating ``N``."""
    j = context(M.ring).j_gens
    if len(j) == 0 or N.is_zero():
        return M.zero
    vecs = M.coords[M.ract[j][:, list(N.gens)].ravel()]
    return Submodule(M, closure(M, M.zero.elems, vecs))


def radical(M: FinModule) -> Submodule:
    """``Rad(M) = J M`` (finite rings are semiperfect)."""
    return j_times(M, M.full)


def radical_layers(M: FinModule) -> tuple[int, ...]:
    """Sizes of ``M > J M > J^2 M > ... > 0``."""
    sizes = [M.size]
    N = M.full
    while not N.is_zero():
        N = j_times(M, N)
        sizes.append(N.size)
    return tuple(sizes)


def socle(M: FinModule) -> Submodule:
    """``Soc(M) = {x : J x = 0}``."""
    j = context(M.ring).j_gens
    if len(j) == 0:
        return M.full
    return Submodule(M, np.nonzero((M.ract[j] == 0).all(axis=0))[0])


def annihilated_by(M: FinModule, ring_elems) -> Submodule:
    """``{x in M : r x = 0 for all given r}``."""
    ring_elems = np.asarray(ring_elems, dtype=np.int64)
    if len(ring_elems) == 0:
        return M.full
    return Submodule(M, np.nonzero((M.ract[ring_elems] == 0).all(axis=0))[0])


def _check_sub(N: Submodule, M: FinModule):
    if N.ambient is not M:
        raise NotASubmodule("submodule belongs to a different module")


def is_essential(N: Submodule, M: FinModule) -> bool:
    """``N`` meets every nonzero cyclic submodule of ``M``."""
    _check_sub(N, M)
    if M.size == 1:
        return True
    inN = N.bools
    R = M.ract[:, 1:]
    hit = inN[R] & (R != 0)
    return bool(hit.any(axis=0).all())


def is_small_in(N: Submodule, M: FinModule) -> bool:
    _check_sub(N, M)
    return N <= radical(M)


def is_small_in_by_lattice(N: Submodule, M: FinModule) -> bool:
    """``N + K != M`` for every proper submodule ``K``."""
    L = submodule_lattice(M)
    return not any((N + K).is_full() for K in L if not K.is_full())


# -- decomposition ------------------------------------------------------------


def _complement_pairs(M: FinModule, within: Submodule):
    L = submodule_lattice(M)
    inside = [s for s in L if s <= within]
    by_size: dict[int, list[Submodule]] = {}
    for s in inside:
        by_size.setdefault(s.size, []).append(s)
    zero = M.zero.mask
    for A in inside:
        if A.is_zero() or A == within:
            continue
        if within.size % A.size:
            continue
        for B in by_size.get(within.size // A.size, []):
            if A.mask & B.mask == zero:
                yield A, B


def decompose_submodules(M: FinModule, within: Submodule | None = None, order: str = "smallest") -> list[Submodule]:
    """Indecomposable direct summands of ``within`` (default ``M``) as submodules."""
    within = within if within is not None else M.full
    if within.is_zero():
        return []
    pairs = _complement_pairs(M, within)
    if order == "largest":
        pairs = reversed(list(pairs))
    for A, B in pairs:
        if order == "smallest":
            return [A] + decompose_submodules(M, B, order)
        return decompose_submodules(M, A, order) + decompose_submodules(M, B, order)
    return [within]


def decompose(M: FinModule, order: str = "smallest"):
    """Indecomposable summands of ``M`` as ``(module, inclusion)`` pairs."""
    out = []
    for P in sorted(decompose_submodules(M, order=order), key=Submodule.sort_key):
        out.append(submodule_module(M, P))
    return out


def split_element(M: FinModule, parts: list[Submodule], x: int) -> list[int]:
    """Components of ``x`` along an internal direct sum ``parts``."""
    out = []
    rest_x = int(x)
    for t, P in enumerate(parts):
        if t == len(parts) - 1:
            if rest_x not in P:
                raise NotASubmodule("parts do not span the element")
            out.append(rest_x)
            break
        rest = M.zero
        for Q in parts[t + 1:]:
            rest = rest + Q
        diff = ((M.coords[rest_x] - M.coords[P.elems]) % M.ords) @ M.strides
        hits = np.nonzero(rest.bools[diff])[0]
        if len(hits) != 1:
            raise NotASubmodule("parts do not form a direct sum")
        out.append(int(P.elems[hits[0]]))
        rest_x = int(diff[hits[0]])
    return out


# -- projectivity -------------------------------------------------------------


def top_multiplicities(M: FinModule) -> list[int]:
    ctx = context(M.ring)
    out = []
    for S, q in zip(ctx.simples, ctx.end_sizes):
        h = hom_count(M, S)
        n = round(log(h, q))
        if q**n != h:
            raise TopDecompositionFailure("Hom into a simple is not a power of its endomorphisms")
        out.append(n)
    return out


def cover_size(M: FinModule) -> int:
    ctx = context(M.ring)
    table = ctx.projective_for
    return prod(table[i][0].size ** n for i, n in enumerate(top_multiplicities(M)))


def is_projective(M: FinModule) -> bool:
    return cover_size(M) == M.size


@dataclass
class CoverResult:
    cover: FinModule
    surjection: ModuleMorphism


def projective_cover(M: FinModule) -> CoverResult:
    """Sum of indecomposable projectives ``R e`` mapping onto ``M``."""
    ctx = context(M.ring)
    table = ctx.projective_for
    reg = ctx.regular
    N = radical(M)
    chosen: list[tuple[int, int]] = []
    for cls in range(len(ctx.simples)):
        P, e = table[cls]
        for y in np.unique(M.ract[e]):
            if int(y) in N:
                continue
            chosen.append((cls, int(y)))
            N = N + M.cyclic(int(y))
    if not N.is_full():
        raise TopDecompositionFailure("tops of indecomposable projectives do not cover M")
    if not chosen:
        from .modules import zero_map, zero_module

        Z = zero_module(M.ring)
        return CoverResult(Z, zero_map(Z, M))
    blocks, cols = [], []
    for cls, y in chosen:
        P, _ = table[cls]
        Pm, incl = submodule_module(reg, P)
        blocks.append(Pm)
        reps = Pm.__dict__["_reps"]
        cols.extend(M.coords[M.ract[r, y]] for r in reps)
    C = direct_sum_of(blocks)
    f = ModuleMorphism(C, M, np.array(cols, dtype=np.int64).T).validate()
    if not f.is_surjective():
        raise TopDecompositionFailure("cover map is not onto")
    return CoverResult(C, f)


# -- duality and hulls --------------------------------------------------------


def character_dual(M: FinModule) -> FinModule:
    """``Hom_Z(M, Q/Z)`` as a left module over the opposite ring."""
    e = M.ords
    # column v of the dual matrix of b_i: (b_i . phi_v)(m_u) = phi_v(b_i m_u)
    action = (M.mats.transpose(0, 2, 1) * e[None, :, None]) // e[None, None, :]
    dual_mats = action % e[None, :, None]
    return FinModule(M.ring.op, M.orders, dual_mats.transpose(0, 2, 1), name=f"D({M.name})" if M.name else "")


def dual_morphism(f: ModuleMorphism, source_dual: FinModule, target_dual: FinModule) -> ModuleMorphism:
    """``f* : N* -> M*`` for ``f : M -> N``; duals passed in to fix identities."""
    F = f.matrix
    e = f.source.ords
    fo = f.target.ords
    mat = (F.T * e[:, None]) // fo[None, :]
    return ModuleMorphism(target_dual, source_dual, mat % e[:, None])


def is_injective_baer(M: FinModule) -> bool:
    """Every map from a left ideal extends to ``R``, counted per ideal."""
    ctx = context(M.ring)
    reg = ctx.regular
    for I in ctx.ideals:
        if I.is_zero():
            continue
        Im, _ = submodule_module(reg, I)
        extendable = M.size // annihilated_by(M, I.elems).size
        if hom_count(Im, M) != extendable:
            return False
    return True


def is_injective_baer_enum(M: FinModule) -> bool:
    """Baer's criterion by enumerating every map from every left ideal."""
    ctx = context(M.ring)
    reg = ctx.regular
    for I in ctx.ideals:
        if I.is_zero():
            continue
        Im, incl = submodule_module(reg, I)
        reps = Im.__dict__["_reps"]
        restricted = {tuple(M.ract[reps, x].tolist()) for x in range(M.size)}
        for f in hom_set(Im, M):
            gens = tuple(int(f(Im.index(row))) for row in np.eye(Im.m, dtype=np.int64))
            if gens not in restricted:
                return False
    return True


def is_injective_by_duality(M: FinModule) -> bool:
    return is_projective(character_dual(M))


def is_injective(M: FinModule) -> bool:
    return is_injective_baer(M)


@dataclass
class HullResult:
    hull: FinModule
    embedding: ModuleMorphism


def injective_hull(M: FinModule, check: bool = True) -> HullResult:
    """``E(M) = D(P(D(M)))`` with the dual of the cover map as embedding."""
    cached = M.__dict__.get("_hull")
    if cached is not None:
        return cached
    D = character_dual(M)
    cov = projective_cover(D)
    E = character_dual(cov.cover)
    E.name = f"hull({M.name})" if M.name else ""
    emb = dual_morphism(cov.surjection, E, M)
    if check:
        emb.validate()
        assert emb.is_injective(), "hull embedding is not injective"
        assert is_essential(emb.image(), E), "hull image is not essential"
        assert is_injective_baer(E), "hull fails Baer's criterion"
    res = HullResult(E, emb)
    M.__dict__["_hull"] = res
    return res
