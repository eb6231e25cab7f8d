"""Ring classifiers and the splitting decision for the dual Goldie theory."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import homological as H
from . import torsion as T
from .errors import SemilocalHypothesisViolated
from .modules import FinModule, Submodule, hom_count, quotient_module, submodule_lattice, submodule_module
from .rings import FiniteRing, quotient_ring


@dataclass
class TorsionVerdict:
    radical_of_R: Submodule
    kind: str  # "xi", "chi" or "proper"
    splits: bool
    split_e: bool
    split_h: bool
    witness: dict
    cohereditary: bool | None = None
    cohereditary_hull: bool | None = None
    stable: bool | None = None
    goldie_leq_cg: bool | None = None
    consistency: dict = field(default_factory=dict)
    contradictions: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "radical_of_R": {"size": self.radical_of_R.size, "elements": self.radical_of_R.elems.tolist()},
            "kind": self.kind,
            "splits": self.splits,
            "split_e": self.split_e,
            "split_h": self.split_h,
            "witness": self.witness,
            "cohereditary": self.cohereditary,
            "cohereditary_hull": self.cohereditary_hull,
            "stable": self.stable,
            "goldie_leq_cg": self.goldie_leq_cg,
            "consistency": self.consistency,
            "contradictions": self.contradictions,
            "scope": "corpus-extensional",
        }


@dataclass
class RingReport:
    ring: FiniteRing
    classifiers: dict
    verdict: TorsionVerdict
    theorem_results: list = field(default_factory=list)
    module: dict | None = None
    timing: dict = field(default_factory=dict)

    def witnesses(self) -> list[dict]:
        out = [{"source": "verdict", **self.verdict.witness}]
        for tid, status, detail in self.theorem_results:
            for f in detail.get("failures", []):
                out.append({"source": tid, **f})
        return out

    def to_json(self) -> dict:
        """Deterministic record; timings are kept out (see ``timing``)."""
        out = {
            "ring": self.ring.name,
            "size": self.ring.size,
            "classifiers": self.classifiers,
            "verdict": self.verdict.to_json(),
            "theorems": [
                {"id": tid, "status": status, "witness": wit} for tid, status, wit in self.theorem_results
            ],
            "witnesses": self.witnesses(),
        }
        if self.module is not None:
            out["module"] = self.module
        return out


# -- annihilators -------------------------------------------------------------


def left_annihilator(ring: FiniteRing, elems) -> np.ndarray:
    """``l(X) = {y : y x = 0 for x in X}`` as sorted indices."""
    elems = np.asarray(elems, dtype=np.int64)
    return np.nonzero((ring.mul_table[:, elems] == 0).all(axis=1))[0]


def right_annihilator(ring: FiniteRing, elems) -> np.ndarray:
    """``r(X) = {y : x y = 0 for x in X}``."""
    elems = np.asarray(elems, dtype=np.int64)
    return np.nonzero((ring.mul_table[elems, :] == 0).all(axis=0))[0]


def regular_in_primitive(ring: FiniteRing) -> bool:
    """Whether some non-zero-divisor lies in a primitive ideal ``ann(S)``.

    For a finite ring every non-zero-divisor is a unit, so this is always
    false; it is computed rather than assumed.
    """
    T = ring.mul_table
    nonzero = np.arange(ring.size) != 0
    zero = T == 0
    regular = ~(zero & nonzero[None, :]).any(axis=1) & ~(zero & nonzero[:, None]).any(axis=0)
    for S in H.context(ring).simples:
        ann = (S.ract == 0).all(axis=1)
        if (ann & regular).any():
            return True
    return False


def central_idempotents(ring: FiniteRing) -> list[int]:
    T = ring.mul_table
    idx = np.arange(ring.size)
    idem = T[idx, idx] == idx
    central = (T == T.T).all(axis=1)
    return [int(e) for e in np.nonzero(idem & central)[0]]


def _ring_part(ring: FiniteRing, e: int) -> np.ndarray:
    """Elements of ``R e``."""
    return np.unique(ring.mul_table[:, e])


def product_factors(ring: FiniteRing, e: int):
    """``(R e, R (1-e))`` as rings, ``None`` standing for the zero ring."""
    one = ring.one_index
    f = int(ring.index(ring.elements[one] - ring.elements[e]))
    Re, Rf = _ring_part(ring, e), _ring_part(ring, f)
    if len(Re) == 1:
        return None, ring
    if len(Rf) == 1:
        return ring, None
    A = quotient_ring(ring, ring.elements[Rf], name=f"{ring.name}.e")
    B = quotient_ring(ring, ring.elements[Re], name=f"{ring.name}.(1-e)")
    return A, B


# -- per-module facts ---------------------------------------------------------


def module_facts(M: FinModule) -> dict:
    """Torsion-theoretic predicates of one module (cached on the module)."""
    cached = M.__dict__.get("_facts")
    if cached is not None:
        return cached
    cg = T.cg_radical(M)
    Z = T.singular_submodule(M)
    facts = {
        "size": M.size,
        "cg_size": cg.size,
        "cg_torsion": cg.is_full(),
        "cg_torsionfree": T.is_cg_torsionfree(M),
        "singular": Z.is_full(),
        "goldie_torsion": T.goldie_radical(M).is_full(),
        "projective": H.is_projective(M),
        "injective": H.is_injective(M),
        "small": T.is_small_module(M),
    }
    M.__dict__["_facts"] = facts
    return facts


def has_complement(M: FinModule, N: Submodule) -> bool:
    L = submodule_lattice(M)
    zero = M.zero.mask
    return any(K.size * N.size == M.size and K.mask & N.mask == zero for K in L)


def quotients_torsionfree(M: FinModule) -> bool:
    """Every factor module of ``M`` has ``Z* = 0``."""
    L = submodule_lattice(M)
    for K, SK in zip(L, T.small_colon_masks(M)):
        if SK & ~K.mask:
            return False
    return True


def hull_quotient_torsionfree(M: FinModule) -> bool:
    h = H.injective_hull(M)
    Q, _ = quotient_module(h.hull, h.embedding.image())
    return T.zstar(Q).is_zero()


# -- ring level ---------------------------------------------------------------


def is_xi(ring: FiniteRing) -> bool:
    """No nonzero cyclic module is small (so no nonzero module is torsion)."""
    ctx = H.context(ring)
    return not any(T.is_small_ideal(ring, I.mask) for I in ctx.ideals if not I.is_full())


def splitting_witness(ring: FiniteRing, radical_of_R: Submodule) -> dict:
    """Decompose ``R = T x S`` along the torsion ideal and check both factors."""
    target = radical_of_R.elems
    for e in central_idempotents(ring):
        if np.array_equal(_ring_part(ring, e), target):
            A, B = product_factors(ring, e)
            t_ok = A is None or T.cg_radical(A.regular).is_full()
            s_ok = B is None or H.context(B).jacobson.is_zero()
            return {
                "type": "decomposition",
                "idempotent": ring.elements[e].tolist(),
                "T_size": 1 if A is None else A.size,
                "S_size": 1 if B is None else B.size,
                "T_almost_small": bool(t_ok),
                "S_semisimple": bool(s_ok),
            }
    return {"type": "decomposition", "idempotent": None}


def cg_splitting(ring: FiniteRing, corpus=None) -> TorsionVerdict:
    ctx = H.context(ring)
    reg = ctx.regular
    zs = T.zstar(reg)
    Q, _ = quotient_module(reg, zs)
    if not H.radical(Q).is_zero():
        raise SemilocalHypothesisViolated("R / Z*(R) is not semisimple")
    cgR = T.cg_radical(reg)
    if cgR.is_full():
        kind = "chi"
    elif is_xi(ring):
        kind = "xi"
    else:
        kind = "proper"
    inj = [i for i, S in enumerate(ctx.simples) if H.is_injective(S)]
    split_e = all(H.is_projective(ctx.simples[i]) for i in inj)
    split_h = all(hom_count(ctx.simples[i], reg) > 1 for i in inj)
    if split_e:
        witness = splitting_witness(ring, cgR)
    else:
        bad = next(i for i in inj if not H.is_projective(ctx.simples[i]))
        witness = {"type": "simple", "module": f"simple:{bad}", "injective": True, "projective": False}
    verdict = TorsionVerdict(cgR, kind, split_e, split_e, split_h, witness)
    if corpus is not None:
        _corpus_checks(verdict, corpus)
    return verdict


def _corpus_checks(verdict: TorsionVerdict, corpus) -> None:
    """Corpus-extensional readings of the splitting equivalences."""
    fails: dict[str, list[str]] = {k: [] for k in ("a", "c", "d", "f", "g", "coher", "coher_hull")}
    for cm in corpus:
        M = cm.module
        facts = module_facts(M)
        if not has_complement(M, T.cg_radical(M)):
            fails["a"].append(cm.spec)
        if facts["cg_torsion"] and not module_facts(H.injective_hull(M).hull)["cg_torsion"]:
            fails["c"].append(cm.spec)
        if facts["cg_torsionfree"]:
            if not facts["projective"]:
                fails["d"].append(cm.spec)
            if not quotients_torsionfree(M):
                fails["coher"].append(cm.spec)
            if not hull_quotient_torsionfree(M):
                fails["coher_hull"].append(cm.spec)
        if facts["goldie_torsion"] and not facts["cg_torsion"]:
            fails["f"].append(cm.spec)
        if facts["singular"] and not facts["cg_torsion"]:
            fails["g"].append(cm.spec)
    verdict.cohereditary = not fails["coher"]
    verdict.cohereditary_hull = not fails["coher_hull"]
    verdict.stable = not fails["c"]
    verdict.goldie_leq_cg = not fails["f"]
    verdict.consistency = {k: {"holds": not v, "witnesses": v[:3]} for k, v in fails.items()}
    if verdict.splits:
        verdict.contradictions = [
            {"condition": k, "module": v[0]} for k, v in fails.items() if k in "acdfg" and v
        ]


def classify_ring(ring: FiniteRing, corpus=None) -> RingReport:
    ctx = H.context(ring)
    reg = ctx.regular
    J = ctx.jacobson
    simples = ctx.simples
    maximal = ctx.ideals.maximal()
    rJ = right_annihilator(ring, J.elems)
    lJ = left_annihilator(ring, J.elems)
    soc_left = H.socle(reg).elems
    assert np.array_equal(soc_left, rJ), "Soc of the regular module differs from r(J)"
    hull = H.injective_hull(reg)
    qf = H.is_injective(reg)
    classifiers = {
        "semisimple": J.is_zero(),
        "local": len(maximal) == 1,
        "division": len(maximal) == 1 and J.is_zero(),
        "commutative": ring.is_commutative,
        "qf": qf,
        "qf_op": H.is_injective(ring.op.regular),
        "v_ring": all(H.is_injective(S) for S in simples),
        "kasch": all(hom_count(S, reg) > 1 for S in simples),
        "small_ring": H.radical(hull.hull).is_full(),
        "almost_small": T.is_cg_torsion(reg),
        "perp_torsion": T.is_perp_torsion(reg),
        "teply": np.array_equal(left_annihilator(ring, rJ), J.elems),
        "soc_lr": bool(np.isin(soc_left, lJ).all()),
        "soc_rl": bool(np.isin(lJ, soc_left).all()),
        "regular_in_primitive": regular_in_primitive(ring),
        "num_simples": len(simples),
        "jacobson_size": J.size,
    }
    verdict = cg_splitting(ring, corpus)
    classifiers["splits"] = verdict.splits
    return RingReport(ring, classifiers, verdict)


def component_module(M: FinModule, which: int):
    """``e_i M`` as a module over the factor ``R_i`` of a product ring.

    Returns ``(module over R_i, inclusion label)`` where the label maps the
    component's element indices to indices of ``M``.
    """
    from .modules import FinModule as FM
    from .rings import component_idempotents

    ring = M.ring
    e = component_idempotents(ring)[which]
    e_idx = int(ring.index(e))
    part = M.submodule(np.unique(M.ract[e_idx]), check=False)
    sub, incl = submodule_module(M, part)
    factor = ring.factors[which]
    offset = 0 if which == 0 else ring.factors[0].k
    action = sub.action[offset:offset + factor.k]
    comp = FM(factor, sub.orders, action).validate()
    return comp, incl.images


def product_decomposition_check(M: FinModule) -> bool:
    """``cg_radical(M)`` is the sum of the componentwise radicals."""
    if M.size == 1:
        return True
    pieces = []
    for which in (0, 1):
        comp, label = component_module(M, which)
        pieces.append(label[T.cg_radical(comp).elems])
    combined = (M.coords[pieces[0]][:, None, :] + M.coords[pieces[1]][None, :, :]).reshape(-1, M.m) % M.ords
    idx = np.unique(combined @ M.strides)
    return np.array_equal(idx, T.cg_radical(M).elems)
