"""Finite left modules, submodules, quotients and homomorphisms.

A module over a ring with basis ``b_1..b_k`` has additive generators
``m_1..m_m`` of orders ``orders``; ``action[i, u]`` holds the coordinates of
``b_i * m_u``. Elements are addressed by mixed-radix index (first coordinate
most significant), submodules by the bitmask of their element indices.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from math import prod

import numpy as np

from . import abelian
from .errors import (
    DifferentBaseRings,
    EnumerationCutoffExceeded,
    ModuleAxiomError,
    NotASubmodule,
    SizeCutoffExceeded,
)
from .limits import get_limits
from .rings import FiniteRing, all_coords, strides_for


def _mask_from(idx, n: int) -> int:
    arr = np.zeros(n, dtype=bool)
    arr[idx] = True
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _elems_from(mask: int, n: int) -> np.ndarray:
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    return np.nonzero(bits)[0].astype(np.int64)


class FinModule:
    def __init__(self, ring: FiniteRing, orders, action, name: str = ""):
        self.ring = ring
        self.orders = tuple(int(o) for o in orders)
        m = len(self.orders)
        self.action = np.array(action, dtype=np.int64).reshape(ring.k, m, m) % self.ords
        self.action.flags.writeable = False
        self.name = name

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"FinModule({label}size={self.size}, orders={list(self.orders)})"

    @property
    def m(self) -> int:
        return len(self.orders)

    @cached_property
    def ords(self) -> np.ndarray:
        return np.array(self.orders, dtype=np.int64)

    @cached_property
    def size(self) -> int:
        return prod(self.orders)

    @cached_property
    def strides(self) -> np.ndarray:
        return strides_for(self.orders)

    @cached_property
    def mats(self) -> np.ndarray:
        """``mats[i]`` is the matrix of ``b_i``: column ``u`` is ``b_i * m_u``."""
        return self.action.transpose(0, 2, 1).copy()

    @cached_property
    def coords(self) -> np.ndarray:
        return all_coords(self.orders)

    def index(self, coords):
        c = np.asarray(coords, dtype=np.int64) % self.ords
        return c @ self.strides

    def ring_matrix(self, r) -> np.ndarray:
        """Matrix of the ring element with coordinates ``r``."""
        return np.einsum("i,iab->ab", np.asarray(r, dtype=np.int64), self.mats) % self.ords[:, None] if self.m else np.zeros((0, 0), dtype=np.int64)

    @cached_property
    def ract(self) -> np.ndarray:
        """``ract[r, x]`` is the index of ``r * x`` for ring element ``r``."""
        if self.m == 0:
            return np.zeros((self.ring.size, 1), dtype=np.int64)
        Ar = np.einsum("ri,iab->rab", self.ring.elements, self.mats)
        out = np.einsum("rab,nb->rna", Ar, self.coords) % self.ords
        return out @ self.strides

    @cached_property
    def basis_act(self) -> np.ndarray:
        return self.ract[self.ring.basis_indices]

    @cached_property
    def zero(self) -> "Submodule":
        return Submodule(self, np.array([0], dtype=np.int64), gens=())

    @cached_property
    def full(self) -> "Submodule":
        gens = tuple(int(self.index(row)) for row in np.eye(self.m, dtype=np.int64))
        return Submodule(self, np.arange(self.size, dtype=np.int64), gens=gens)

    def submodule(self, elems, gens=None, check: bool = True) -> "Submodule":
        elems = np.unique(np.asarray(elems, dtype=np.int64))
        sub = Submodule(self, elems, gens=gens)
        if check and not sub.is_closed():
            raise NotASubmodule("element set is not closed under addition and the ring action")
        return sub

    def cyclic(self, x: int) -> "Submodule":
        return Submodule(self, np.unique(self.ract[:, x]), gens=(int(x),))

    def span(self, gens) -> "Submodule":
        gens = tuple(int(g) for g in gens)
        elems = closure(self, self.zero.elems, self.additive_gens(gens))
        return Submodule(self, elems, gens=gens)

    def additive_gens(self, rgens) -> np.ndarray:
        """Additive generators of the R-span of the given element indices."""
        if not len(rgens):
            return np.zeros((0, self.m), dtype=np.int64)
        idx = self.basis_act[:, list(rgens)].T.ravel()
        return self.coords[idx]

    def validate(self) -> "FinModule":
        R = self.ring
        ords = self.ords
        eye = np.eye(self.m, dtype=np.int64)
        if self.m and np.any((self.ring_matrix(R.unit) - eye) % ords[:, None]):
            raise ModuleAxiomError("the unit does not act as the identity")
        for i in range(R.k):
            if np.any((self.mats[i] * ords[None, :]) % ords[:, None]):
                raise ModuleAxiomError(f"action of b_{i + 1} is incompatible with generator orders")
            if np.any((R.orders[i] * self.mats[i]) % ords[:, None]):
                raise ModuleAxiomError(f"additive order of b_{i + 1} does not annihilate its action")
        for i, j in itertools.product(range(R.k), repeat=2):
            lhs = self.ring_matrix(R.mult[i, j])
            rhs = (self.mats[i] @ self.mats[j]) % ords[:, None]
            if not np.array_equal(lhs, rhs):
                raise ModuleAxiomError(f"(b_{i + 1} b_{j + 1}) m != b_{i + 1} (b_{j + 1} m)")
        return self


def make_module(ring: FiniteRing, orders, action, name: str = "") -> FinModule:
    return FinModule(ring, orders, action, name=name).validate()


def closure(M: FinModule, elems, vec_gens) -> np.ndarray:
    """Sorted elements of the subgroup generated by ``elems`` and ``vec_gens``.

    ``elems`` must already be a subgroup.
    """
    n = M.size
    S = np.asarray(elems, dtype=np.int64)
    inS = np.zeros(n, dtype=bool)
    inS[S] = True
    ords, strides = M.ords, M.strides
    for g in vec_gens:
        if inS[int(g @ strides)]:
            continue
        base = M.coords[S]
        parts = [S]
        t = 1
        while True:
            tg = (t * g) % ords
            if inS[int(tg @ strides)]:
                break
            parts.append(((base + tg) % ords) @ strides)
            t += 1
        S = np.concatenate(parts)
        inS[S] = True
    return np.sort(S)


class Submodule:
    """A submodule of ``ambient`` stored as its sorted element indices."""

    __slots__ = ("ambient", "mask", "size", "_elems", "_gens")

    def __init__(self, ambient: FinModule, elems, gens=None):
        self.ambient = ambient
        self._elems = np.asarray(elems, dtype=np.int64)
        self.size = len(self._elems)
        self.mask = _mask_from(self._elems, ambient.size)
        self._gens = tuple(gens) if gens is not None else None

    @classmethod
    def from_mask(cls, ambient: FinModule, mask: int, gens=None) -> "Submodule":
        return cls(ambient, _elems_from(mask, ambient.size), gens=gens)

    @property
    def elems(self) -> np.ndarray:
        return self._elems

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_gens(self)
        return self._gens

    def is_closed(self) -> bool:
        M = self.ambient
        inside = self.bools
        if not inside[0]:
            return False
        if not inside[M.ract[:, self._elems]].all():
            return False
        add = closure(M, M.zero.elems, M.coords[self._elems[:16]])
        return len(closure(M, add, M.coords[self._elems])) == self.size

    @property
    def bools(self) -> np.ndarray:
        arr = np.zeros(self.ambient.size, dtype=bool)
        arr[self._elems] = True
        return arr

    def __contains__(self, x) -> bool:
        return bool((self.mask >> int(x)) & 1)

    def __le__(self, other: "Submodule") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Submodule") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other) -> bool:
        return isinstance(other, Submodule) and other.ambient is self.ambient and other.mask == self.mask

    def __hash__(self):
        return hash(self.mask)

    def __and__(self, other: "Submodule") -> "Submodule":
        return Submodule.from_mask(self.ambient, self.mask & other.mask)

    def __add__(self, other: "Submodule") -> "Submodule":
        if other <= self:
            return self
        if self <= other:
            return other
        elems = closure(self.ambient, self._elems, self.ambient.additive_gens(other.gens))
        return Submodule(self.ambient, elems, gens=self.gens + other.gens)

    def __repr__(self):
        return f"Submodule(size={self.size})"

    def is_zero(self) -> bool:
        return self.size == 1

    def is_full(self) -> bool:
        return self.size == self.ambient.size

    def sort_key(self):
        return (self.size, tuple(self._elems.tolist()))


def _greedy_gens(N: Submodule) -> tuple[int, ...]:
    M = N.ambient
    cur = M.zero.elems
    inside = np.zeros(M.size, dtype=bool)
    inside[cur] = True
    gens = []
    for x in N.elems:
        if len(cur) == N.size:
            break
        if inside[x]:
            continue
        cur = closure(M, cur, M.additive_gens((int(x),)))
        inside[cur] = True
        gens.append(int(x))
    return tuple(gens)


# -- lattice ------------------------------------------------------------------


class SubmoduleSet:
    """All submodules of a module in canonical order (by size, then elements)."""

    def __init__(self, ambient: FinModule, members):
        self.ambient = ambient
        self.members = sorted(members, key=Submodule.sort_key)
        self.position = {s.mask: i for i, s in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i) -> Submodule:
        return self.members[i]

    def lookup(self, mask: int) -> Submodule:
        return self.members[self.position[mask]]

    def index(self, sub: Submodule) -> int:
        return self.position[sub.mask]

    def meet(self, a: Submodule, b: Submodule) -> Submodule:
        return self.lookup(a.mask & b.mask)

    def join(self, a: Submodule, b: Submodule) -> Submodule:
        return self.lookup((a + b).mask)

    def below(self, top: Submodule) -> list[Submodule]:
        return [s for s in self.members if s <= top]

    def interval(self, lo: Submodule, hi: Submodule) -> list[Submodule]:
        return [s for s in self.members if lo <= s and s <= hi]

    def maximal(self, top: Submodule | None = None) -> list[Submodule]:
        top = top or self.ambient.full
        inner = [s for s in self.members if s < top]
        return [s for s in inner if not any(s < t for t in inner)]

    def minimal(self, top: Submodule | None = None) -> list[Submodule]:
        top = top or self.ambient.full
        inner = [s for s in self.members if s <= top and not s.is_zero()]
        return [s for s in inner if not any(t < s for t in inner)]


def submodule_lattice(M: FinModule) -> SubmoduleSet:
    """Every submodule of ``M``: all sums of cyclic submodules."""
    cached = M.__dict__.get("_lattice")
    if cached is not None:
        return cached
    cutoff = get_limits().module_cutoff
    if M.size > cutoff:
        raise SizeCutoffExceeded(M.size, cutoff)
    cyclics: dict[int, Submodule] = {}
    R = M.ract
    for x in range(M.size):
        elems = np.unique(R[:, x])
        mask = _mask_from(elems, M.size)
        if mask not in cyclics:
            cyclics[mask] = Submodule(M, elems, gens=(x,))
    cyc = sorted(cyclics.values(), key=lambda s: s.size)
    found = {M.zero.mask: M.zero}
    queue = [M.zero]
    while queue:
        X = queue.pop()
        for C in cyc:
            if C <= X:
                continue
            Y = X + C
            if Y.mask not in found:
                found[Y.mask] = Y
                queue.append(Y)
    lattice = SubmoduleSet(M, found.values())
    M.__dict__["_lattice"] = lattice
    return lattice


# -- morphisms ----------------------------------------------------------------


class ModuleMorphism:
    """R-linear map; column ``u`` of ``matrix`` holds the coordinates of f(m_u)."""

    def __init__(self, source: FinModule, target: FinModule, matrix):
        self.source = source
        self.target = target
        self.matrix = np.array(matrix, dtype=np.int64).reshape(target.m, source.m) % target.ords[:, None]

    def __repr__(self):
        return f"ModuleMorphism({self.source.size} -> {self.target.size})"

    @cached_property
    def images(self) -> np.ndarray:
        """Target index of the image of every source element."""
        if self.target.m == 0:
            return np.zeros(self.source.size, dtype=np.int64)
        return ((self.source.coords @ self.matrix.T) % self.target.ords) @ self.target.strides

    def __call__(self, x: int) -> int:
        return int(self.images[int(x)])

    def __matmul__(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """Composition ``self o other``."""
        if other.target is not self.source:
            raise ValueError("morphisms are not composable")
        return ModuleMorphism(other.source, self.target, self.matrix @ other.matrix)

    def kernel(self) -> Submodule:
        return Submodule(self.source, np.nonzero(self.images == 0)[0])

    def image(self) -> Submodule:
        return Submodule(self.target, np.unique(self.images))

    def is_injective(self) -> bool:
        return int(np.count_nonzero(self.images == 0)) == 1

    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.target.size

    def is_iso(self) -> bool:
        return self.source.size == self.target.size and self.is_injective()

    def is_zero(self) -> bool:
        return not self.matrix.any()

    def validate(self) -> "ModuleMorphism":
        S, T = self.source, self.target
        F = self.matrix
        if np.any((F * S.ords[None, :]) % T.ords[:, None]):
            raise ModuleAxiomError("generator images violate additive orders")
        for i in range(S.ring.k):
            lhs = (F @ S.mats[i]) % T.ords[:, None]
            rhs = (T.mats[i] @ F) % T.ords[:, None]
            if not np.array_equal(lhs, rhs):
                raise ModuleAxiomError(f"map does not commute with b_{i + 1}")
        return self


def identity(M: FinModule) -> ModuleMorphism:
    return ModuleMorphism(M, M, np.eye(M.m, dtype=np.int64))


def zero_map(M: FinModule, N: FinModule) -> ModuleMorphism:
    return ModuleMorphism(M, N, np.zeros((N.m, M.m), dtype=np.int64))


def kernel_image(f: ModuleMorphism) -> tuple[Submodule, Submodule]:
    return f.kernel(), f.image()


# -- constructions ------------------------------------------------------------


def regular_module(R: FiniteRing) -> FinModule:
    """``R`` as a left module over itself; its element indices match ``R``'s."""
    action = np.stack([R.mult[i] for i in range(R.k)])  # action[i, u] = b_i b_u
    return FinModule(R, R.orders, action, name="R")


def zero_module(R: FiniteRing) -> FinModule:
    return FinModule(R, (), np.zeros((R.k, 0, 0), dtype=np.int64), name="0")


def subquotient(M: FinModule, V: Submodule, U: Submodule):
    """The module ``V/U`` and a labelling of ``M`` onto it.

    Returns ``(Q, label)`` where ``label[x]`` is the index in ``Q`` of
    ``x + U`` for ``x`` in ``V`` and ``-1`` elsewhere. The generators of ``Q``
    come from a Smith reduction of the relation lattice of a polycyclic
    generating sequence of ``V`` modulo ``U``.
    """
    if not U <= V:
        raise NotASubmodule("U is not contained in V")
    n = M.size
    gens = M.additive_gens(V.gens)
    S = U.elems
    inS = np.zeros(n, dtype=bool)
    inS[S] = True
    pc = np.zeros((n, max(len(gens), 1)), dtype=np.int64)
    rel_rows, ords, strides = [], M.ords, M.strides
    for g in gens:
        if inS[int(g @ strides)]:
            continue
        col = len(rel_rows)
        base = M.coords[S]
        parts = [S]
        t = 1
        while True:
            tg = (t * g) % ords
            ti = int(tg @ strides)
            if inS[ti]:
                break
            T = ((base + tg) % ords) @ strides
            pc[T] = pc[S]
            pc[T, col] = t
            parts.append(T)
            t += 1
        rel = -pc[ti].copy()
        rel[col] += t
        rel_rows.append(rel)
        S = np.concatenate(parts)
        inS[S] = True
    s = len(rel_rows)
    label = np.full(n, -1, dtype=np.int64)
    Velems = V.elems
    if s == 0:
        label[Velems] = 0
        return zero_module(M.ring), label
    Rel = np.array(rel_rows, dtype=np.int64)[:, :s]
    N = V.size // U.size
    q_orders = []
    q_coords = []
    pcV = pc[Velems, :s]
    for p, K in abelian.factor(N):
        vals, Q = abelian.local_snf(Rel, p, K)
        for t in range(s):
            v = vals[t] if t < len(vals) else K
            if v > 0:
                q_orders.append(p**v)
                q_coords.append((pcV @ Q[:, t]) % p**v)
    q_strides = strides_for(q_orders)
    qc = np.stack(q_coords, axis=1)
    labelV = qc @ q_strides
    label[Velems] = labelV
    reps = []
    for j in range(len(q_orders)):
        hit = np.nonzero(labelV == q_strides[j])[0]
        reps.append(int(Velems[hit[0]]))
    qc_full = all_coords(q_orders)
    action = np.zeros((M.ring.k, len(q_orders), len(q_orders)), dtype=np.int64)
    for i in range(M.ring.k):
        for j, x in enumerate(reps):
            action[i, j] = qc_full[label[M.basis_act[i, x]]]
    Qmod = FinModule(M.ring, q_orders, action)
    Qmod.__dict__["_reps"] = reps
    return Qmod, label


def quotient_module(M: FinModule, N: Submodule):
    """``M/N`` with its projection ``M -> M/N``."""
    if N.ambient is not M:
        raise NotASubmodule("N is not a submodule of M")
    Q, label = subquotient(M, M.full, N)
    gens_idx = [int(M.index(row)) for row in np.eye(M.m, dtype=np.int64)]
    matrix = Q.coords[label[gens_idx]].T if Q.m else np.zeros((0, M.m), dtype=np.int64)
    return Q, ModuleMorphism(M, Q, matrix)


def submodule_module(M: FinModule, V: Submodule):
    """``V`` as a module in its own right with the inclusion ``V -> M``."""
    if V.ambient is not M:
        raise NotASubmodule("V is not a submodule of M")
    S, label = subquotient(M, V, M.zero)
    reps = S.__dict__.get("_reps", [])
    matrix = M.coords[reps].T if reps else np.zeros((M.m, 0), dtype=np.int64)
    incl = ModuleMorphism(S, M, matrix)
    S.__dict__["_embedding_label"] = label
    return S, incl


def direct_sum(M: FinModule, N: FinModule):
    """``M + N`` with injections and projections ``(S, i1, i2, p1, p2)``."""
    if M.ring is not N.ring:
        raise DifferentBaseRings("direct sum needs a common base ring")
    a, b = M.m, N.m
    action = np.zeros((M.ring.k, a + b, a + b), dtype=np.int64)
    action[:, :a, :a] = M.action
    action[:, a:, a:] = N.action
    S = FinModule(M.ring, M.orders + N.orders, action)
    eye = np.eye(a + b, dtype=np.int64)
    i1 = ModuleMorphism(M, S, eye[:, :a])
    i2 = ModuleMorphism(N, S, eye[:, a:])
    p1 = ModuleMorphism(S, M, eye[:a, :])
    p2 = ModuleMorphism(S, N, eye[a:, :])
    return S, i1, i2, p1, p2


def direct_sum_of(modules) -> FinModule:
    modules = list(modules)
    out = modules[0]
    for X in modules[1:]:
        out = direct_sum(out, X)[0]
    return out


# -- Hom ----------------------------------------------------------------------


def _hom_system(M: FinModule, N: FinModule):
    m, n2 = M.m, N.m
    dom = np.tile(np.array(N.orders, dtype=np.int64), m)
    blocks = [np.diag(np.repeat(M.ords, n2))]
    eye_n, eye_m = np.eye(n2, dtype=np.int64), np.eye(m, dtype=np.int64)
    for i in range(M.ring.k):
        # kron(mats_M[i].T, I) - kron(I, mats_N[i]) without np.kron's overhead
        left = np.einsum("ji,kl->ikjl", M.mats[i], eye_n)
        right = np.einsum("ij,kl->ikjl", eye_m, N.mats[i])
        blocks.append((left - right).reshape(m * n2, m * n2))
    A = np.concatenate(blocks, axis=0)
    cod = np.tile(dom, M.ring.k + 1)
    return A, dom, cod


def hom_count(M: FinModule, N: FinModule) -> int:
    if M.ring is not N.ring:
        raise DifferentBaseRings("Hom needs a common base ring")
    if M.m == 0 or N.m == 0:
        return 1
    A, dom, cod = _hom_system(M, N)
    return abelian.kernel_order(A, dom, cod)


class HomSet:
    """``Hom_R(M, N)`` as a finite abelian group with a polycyclic basis.

    Iteration is lazy and in a fixed canonical order; ``all()`` materialises
    the set subject to the hom-size cutoff.
    """

    def __init__(self, M: FinModule, N: FinModule):
        self.source, self.target = M, N
        if M.m == 0 or N.m == 0:
            self.dom = np.zeros(0, dtype=np.int64)
            self.gens, self.rel = np.zeros((0, 0), dtype=np.int64), []
        else:
            A, dom, cod = _hom_system(M, N)
            self.dom = dom
            kern = abelian.kernel(A, dom, cod)
            self.gens, self.rel = abelian.polycyclic(kern, dom)

    def __len__(self):
        return prod(self.rel)

    def morphism(self, flat) -> ModuleMorphism:
        M, N = self.source, self.target
        matrix = np.asarray(flat, dtype=np.int64).reshape(M.m, N.m).T if M.m and N.m else np.zeros((N.m, M.m), dtype=np.int64)
        return ModuleMorphism(M, N, matrix)

    def _flat(self, ts) -> np.ndarray:
        if not len(self.rel):
            return np.zeros(len(self.dom), dtype=np.int64)
        return (np.asarray(ts, dtype=np.int64) @ self.gens) % self.dom

    def __iter__(self):
        for ts in itertools.product(*[range(o) for o in self.rel]):
            yield self.morphism(self._flat(ts))

    def all(self) -> list[ModuleMorphism]:
        cutoff = get_limits().hom_cutoff
        if len(self) > cutoff:
            raise EnumerationCutoffExceeded(len(self), cutoff)
        return list(self)

    def flats(self, limit: int | None = None) -> np.ndarray:
        """All maps as flattened coordinate rows (vectorised enumeration)."""
        if not len(self.rel):
            return np.zeros((1, len(self.dom)), dtype=np.int64)
        return abelian.enumerate_span(self.gens, self.rel, self.dom)

    def random(self, rng) -> ModuleMorphism:
        ts = [int(rng.integers(o)) for o in self.rel]
        return self.morphism(self._flat(ts))


def hom_set(M: FinModule, N: FinModule) -> HomSet:
    if M.ring is not N.ring:
        raise DifferentBaseRings("Hom needs a common base ring")
    return HomSet(M, N)


# -- isomorphism --------------------------------------------------------------


def _invariants(M: FinModule):
    from . import homological as H

    cached = M.__dict__.get("_iso_invariants")
    if cached is None:
        ctx = H.context(M.ring)
        cached = (
            M.size,
            abelian.elementary_divisors(M.orders),
            H.radical_layers(M),
            H.socle(M).size,
            tuple(len(np.unique(M.ract[ctx.projective_for[c][1]])) for c in sorted(ctx.projective_for)),
            tuple(hom_count(S, M) for S in ctx.simples),
            tuple(hom_count(M, S) for S in ctx.simples),
        )
        M.__dict__["_iso_invariants"] = cached
    return cached


def invariant_key(M: FinModule):
    return _invariants(M)


def _injective_batch(M: FinModule, N: FinModule, flats: np.ndarray) -> np.ndarray:
    F = flats.reshape(len(flats), M.m, N.m)
    imgs = np.einsum("nu,buj->bnj", M.coords, F) % N.ords
    zero = (imgs == 0).all(axis=2)
    return zero.sum(axis=1) == 1


def find_isomorphism(M: FinModule, N: FinModule, tries: int = 64) -> ModuleMorphism | None:
    """A bijective member of ``Hom(M, N)``, or ``None`` if there is none."""
    if M.ring is not N.ring:
        raise DifferentBaseRings("isomorphism test needs a common base ring")
    if M.size != N.size:
        return None
    if M.size == 1:
        return zero_map(M, N)
    if _invariants(M) != _invariants(N):
        return None
    hs = hom_set(M, N)
    if len(hs) != hom_count(M, M) or len(hs) != hom_count(N, N):
        return None
    rng = np.random.default_rng(0)
    for _ in range(tries):
        f = hs.random(rng)
        if f.is_iso():
            return f
    cutoff = get_limits().hom_cutoff
    if len(hs) > cutoff:
        raise EnumerationCutoffExceeded(len(hs), cutoff)
    flats = hs.flats()
    for start in range(0, len(flats), 512):
        batch = flats[start:start + 512]
        ok = np.nonzero(_injective_batch(M, N, batch))[0]
        if len(ok):
            return hs.morphism(batch[ok[0]])
    return None


def are_isomorphic(M: FinModule, N: FinModule) -> bool:
    return find_isomorphism(M, N) is not None
