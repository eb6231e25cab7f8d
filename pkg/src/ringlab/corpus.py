"""Module corpora and the default ring corpus.

The module corpus of a ring is every subquotient of ``R+R`` up to
isomorphism, plus the simples with their hulls and projective covers. Each
member keeps a module spec that rebuilds it through :func:`parse.build_module`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import homological as H
from .errors import SizeCutoffExceeded
from .limits import Limits, get_limits
from .modules import (
    FinModule,
    _mask_from,
    find_isomorphism,
    hom_set,
    invariant_key,
    submodule_lattice,
    submodule_module,
    subquotient,
)
from .parse import build_module, build_ring
from .rings import FiniteRing

DEFAULT_RING_SPECS = (
    "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "Z/12", "Z/16",
    "GF(2)", "GF(3)", "GF(4)", "GF(8)", "GF(9)",
    "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3)", "GF(3)[x]/(x^2)",
    "Mat(2, GF(2))",
    "Tri(2, GF(2))", "Tri(2, GF(3))",
    "op(Tri(2, GF(2)))",
    "GF(2) x Z/4", "Z/4 x Z/9", "Tri(2, GF(2)) x GF(2)",
)


@dataclass
class CorpusModule:
    spec: str
    module: FinModule


@dataclass
class Corpus:
    rings: list[tuple[str, FiniteRing]]
    limits: Limits = field(default_factory=get_limits)

    def __post_init__(self):
        names = [n for n, _ in self.rings]
        if len(set(names)) != len(names):
            raise ValueError("corpus ring names must be unique")

    def names(self) -> list[str]:
        return [n for n, _ in self.rings]


def default_corpus(limits: Limits | None = None) -> Corpus:
    return Corpus([(s, build_ring(s)) for s in DEFAULT_RING_SPECS], limits or get_limits())


def load_corpus(text: str, limits: Limits | None = None) -> Corpus:
    """One ring spec or raw-ring JSON document per line; ``#`` starts a comment."""
    rings = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        ring = build_ring(line)
        rings.append((ring.name if line.startswith("{") else line, ring))
    return Corpus(rings, limits or get_limits())


class IsoClasses:
    """Modules kept up to isomorphism, bucketed by cheap invariants."""

    def __init__(self):
        self.buckets: dict[tuple, list[FinModule]] = {}
        self.members: list[CorpusModule] = []

    def find(self, M: FinModule) -> FinModule | None:
        for N in self.buckets.get(invariant_key(M), []):
            if find_isomorphism(M, N) is not None:
                return N
        return None

    def add(self, spec: str, M: FinModule) -> bool:
        if self.find(M) is not None:
            return False
        self.buckets.setdefault(invariant_key(M), []).append(M)
        M.name = spec
        self.members.append(CorpusModule(spec, M))
        return True


class _UnionFind:
    """Union-find whose roots are always the smallest member."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def lattice_automorphisms(M: FinModule, L, count: int = 6, tries: int = 256) -> list[np.ndarray]:
    """Lattice permutations ``perm[v] = index of f(L[v])`` for a few automorphisms ``f`` of ``M``.

    Automorphisms are drawn from ``Hom(M, M)`` with a fixed seed, so the
    result is deterministic. Only used to skip isomorphism tests that an
    automorphism already settles.
    """
    hs = hom_set(M, M)
    rng = np.random.default_rng(0)
    perms = []
    for _ in range(tries):
        f = hs.random(rng)
        if not f.is_iso():
            continue
        img = f.images
        perms.append(np.array([L.position[_mask_from(img[S.elems], M.size)] for S in L], dtype=np.int64))
        if len(perms) == count:
            break
    return perms


def corpus_modules(ring: FiniteRing) -> list[CorpusModule]:
    """Deterministic module corpus of ``ring`` (cached per ring)."""
    ctx = H.context(ring)
    cached = ctx.__dict__.get("_corpus")
    if cached is not None:
        return cached
    cutoff = get_limits().module_cutoff
    RR = build_module(ring, "R+R")
    if RR.size > cutoff:
        raise SizeCutoffExceeded(RR.size, cutoff)
    L = submodule_lattice(RR)
    n = len(L)
    perms = lattice_automorphisms(RR, L)
    orbits = _UnionFind(n)
    for perm in perms:
        for v in range(n):
            orbits.union(v, int(perm[v]))
    subs = IsoClasses()
    chosen = []
    for v, V in enumerate(L):
        if orbits.find(v) != v:
            continue
        Vm, _ = submodule_module(RR, V)
        if subs.add(f"sq(R+R,{v},0)", Vm):
            chosen.append(v)
    pairs = _UnionFind(n * n)
    below = [[u for u in range(v + 1) if L[u] <= L[v]] for v in range(n)]
    for perm in perms:
        for v in range(n):
            gv = int(perm[v]) * n
            for u in below[v]:
                pairs.union(v * n + u, gv + int(perm[u]))
    found = IsoClasses()
    seen = set()
    for v in chosen:
        for u in below[v]:
            root = pairs.find(v * n + u)
            if root in seen:
                continue
            seen.add(root)
            Q, _ = subquotient(RR, L[v], L[u])
            found.add(f"sq(R+R,{v},{u})", Q)
    for i, S in enumerate(ctx.simples):
        for spec in (f"simple:{i}", f"hull(simple:{i})", f"cover(simple:{i})"):
            M = build_module(ring, spec)
            if M.size <= cutoff:
                found.add(spec, M)
    out = sorted(found.members, key=lambda c: c.module.size)
    ctx.__dict__["_corpus"] = out
    return out
