"""Consistency suites run over a ring corpus.

Every suite is a function ``(ring, report, corpus) -> (status, detail)`` with
status ``pass``, ``fail`` or ``n/a``. Cutoff errors become ``skip``. A
failure detail always names the ring and, where one exists, the module spec
of the offending corpus member.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import homological as H
from . import torsion as T
from .classify import (
    RingReport,
    central_idempotents,
    cg_splitting,
    classify_ring,
    component_module,
    module_facts,
    product_decomposition_check,
    product_factors,
)
from .corpus import Corpus, corpus_modules
from .errors import EnumerationCutoffExceeded, SizeCutoffExceeded, UnknownSuite
from .limits import Limits, use_limits
from .modules import are_isomorphic, submodule_lattice, submodule_module

SUITE_IDS = (
    "T1.1", "P2.3ab", "L2.4", "P3.1", "P3.3", "P3.8", "L4.2", "C4.3", "C4.4",
    "T4.5", "P4.6", "T4.7", "P4.10", "P4.12", "R4.11", "OPEN-Q", "ZSTAR", "KERNEL",
)

# Suites that read the ring report and at most cached per-module facts; the
# rest sweep decompositions, lattices or duals of every corpus module.
RING_LEVEL_SUITES = (
    "P3.1", "P3.3", "P3.8", "C4.3", "C4.4", "T4.5", "P4.6", "T4.7", "P4.10", "P4.12", "R4.11", "OPEN-Q",
)


def _verdict(failures: list, **extra):
    detail = dict(extra)
    if failures:
        detail["failures"] = failures
        return "fail", detail
    return "pass", detail


def _na(reason: str):
    return "n/a", {"reason": reason}


# -- suites -------------------------------------------------------------------


def suite_T1_1(ring, report: RingReport, corpus):
    """QF rings: every module is projective + small and injective + singular."""
    qf = report.classifiers["qf"]
    failures = []
    if qf != report.classifiers["qf_op"]:
        failures.append({"reason": "self-injectivity differs between R and op(R)"})
    violators = []
    for cm in corpus:
        for part, _ in H.decompose(cm.module):
            f = module_facts(part)
            if not (f["projective"] or f["small"]):
                violators.append({"module": cm.spec, "condition": "projective + small", "summand_size": part.size})
                break
            if not (f["injective"] or f["singular"]):
                violators.append({"module": cm.spec, "condition": "injective + singular", "summand_size": part.size})
                break
    if qf:
        failures.extend(violators)
        if not report.classifiers["soc_lr"]:
            failures.append({"reason": "QF ring without Soc(_RR) in Soc(R_R)"})
        return _verdict(failures, qf=True, modules_checked=len(corpus))
    return _verdict(failures, qf=False, violating_module=violators[0] if violators else None)


def suite_P2_3ab(ring, report, corpus):
    """Perp-torsion by reject agrees with "no nonzero small factor module"."""
    failures = []
    for cm in corpus:
        M = cm.module
        a = T.is_perp_torsion(M)
        b = not T.has_small_quotient(M)
        rho = T.generalov_rho(M)
        if a != b:
            failures.append({"module": cm.spec, "reject_form": a, "quotient_form": b})
        Rm, _ = submodule_module(M, rho)
        if not T.generalov_rho(Rm).is_full():
            failures.append({"module": cm.spec, "reason": "rho is not idempotent"})
        if (rho.is_full()) != a:
            failures.append({"module": cm.spec, "reason": "rho torsion class differs from reject_small"})
    return _verdict(failures, modules_checked=len(corpus))


def suite_L2_4(ring, report, corpus):
    """Torsionfree class equals perp-torsion class iff cohereditary and perp hereditary."""
    same = True
    hereditary = True
    for cm in corpus:
        M = cm.module
        tf = module_facts(M)["cg_torsionfree"]
        perp = T.is_perp_torsion(M)
        same &= tf == perp
        if perp:
            for N in submodule_lattice(M):
                if T.reject_small(M, N) != N:
                    hereditary = False
                    break
    lhs = same
    rhs = bool(report.verdict.cohereditary) and hereditary
    failures = [] if lhs == rhs else [{"classes_equal": lhs, "cohereditary": report.verdict.cohereditary, "perp_hereditary": hereditary}]
    return _verdict(failures, classes_equal=lhs, perp_hereditary=hereditary)


def suite_P3_1(ring, report, corpus):
    c = report.classifiers
    xi = report.verdict.kind == "xi"
    failures = []
    if not (c["v_ring"] == xi == c["perp_torsion"]):
        failures.append({"v_ring": c["v_ring"], "xi": xi, "perp_torsion": c["perp_torsion"]})
    spec_form = report.verdict.radical_of_R.is_zero() and c["v_ring"]
    if xi != spec_form:
        failures.append({"reason": "kind xi differs from (radical 0 and all simples injective)"})
    if xi:
        nonzero = [cm.spec for cm in corpus if not T.zstar(cm.module).is_zero()]
        if nonzero:
            failures.append({"reason": "nonzero small submodule over a V-ring", "module": nonzero[0]})
    return _verdict(failures, v_ring=c["v_ring"], xi=xi, perp_torsion=c["perp_torsion"])


def suite_P3_3(ring, report, corpus):
    """Small ring iff Rad E(R) = E(R); never true for a finite ring."""
    reg = ring.regular
    a = T.is_small_module(reg)
    c = report.classifiers["small_ring"]
    b = all(H.radical(cm.module).is_full() for cm in corpus if module_facts(cm.module)["injective"])
    failures = []
    if not (a == b == c):
        failures.append({"small_module": a, "all_injectives_radical": b, "rad_hull": c})
    if c:
        failures.append({"reason": "finite ring reported small"})
    return _verdict(failures, small_ring=c)


def suite_P3_8(ring, report, corpus):
    c = report.classifiers
    if not c["local"]:
        return _na("not local")
    if c["division"]:
        ok = c["v_ring"] and report.verdict.kind == "xi"
        return _verdict([] if ok else [{"reason": "division ring is not a V-ring"}], division=True)
    right = T.is_cg_torsion(ring.op.regular)
    failures = []
    if not c["almost_small"]:
        failures.append({"side": "left", "cg_radical_size": report.verdict.radical_of_R.size})
    if not right:
        failures.append({"side": "right"})
    return _verdict(failures, division=False, left_almost_small=c["almost_small"], right_almost_small=right)


def suite_L4_2(ring, report, corpus):
    if ring.factors is None:
        return _na("not a product")
    failures = []
    for cm in corpus:
        M = cm.module
        tf = [T.is_cg_torsionfree(component_module(M, i)[0]) for i in (0, 1)]
        if module_facts(M)["cg_torsionfree"] != all(tf):
            failures.append({"module": cm.spec, "reason": "torsionfree class is not componentwise"})
        if not product_decomposition_check(M):
            failures.append({"module": cm.spec, "reason": "cg_radical is not componentwise"})
    return _verdict(failures, modules_checked=len(corpus))


def suite_C4_3(ring, report, corpus):
    if ring.factors is None:
        return _na("not a product")
    parts = [cg_splitting(f) for f in ring.factors]
    failures = []
    splits = all(p.splits for p in parts)
    if splits != report.verdict.splits:
        failures.append({"product_splits": report.verdict.splits, "factor_splits": [p.splits for p in parts]})
    kinds = [p.kind for p in parts]
    expect = "chi" if kinds == ["chi", "chi"] else "xi" if kinds == ["xi", "xi"] else "proper"
    if expect != report.verdict.kind:
        failures.append({"product_kind": report.verdict.kind, "factor_kinds": kinds})
    return _verdict(failures, factor_kinds=kinds)


def suite_C4_4(ring, report, corpus):
    if not ring.is_commutative:
        return _na("not commutative")
    w = report.verdict.witness
    ok = report.verdict.splits and w.get("idempotent") is not None and w["T_almost_small"] and w["S_semisimple"]
    return _verdict([] if ok else [{"witness": w}], witness=w)


def suite_T4_5(ring, report, corpus):
    """Splitting and cohereditary iff R = T x S, T almost small, S a V-ring."""
    lhs = report.verdict.splits and bool(report.verdict.cohereditary)
    found = None
    for e in central_idempotents(ring):
        A, B = product_factors(ring, e)
        if (A is None or T.is_cg_torsion(A.regular)) and (
            B is None or all(H.is_injective(S) for S in H.simple_modules(B))
        ):
            found = ring.elements[e].tolist()
            break
    rhs = found is not None
    failures = [] if lhs == rhs else [{"splits_and_cohereditary": lhs, "decomposition": found}]
    return _verdict(failures, idempotent=found)


def suite_P4_6(ring, report, corpus):
    v = report.verdict
    failures = [] if v.cohereditary == v.cohereditary_hull else [
        {"quotient_form": v.cohereditary, "hull_form": v.cohereditary_hull}
    ]
    return _verdict(failures, cohereditary=v.cohereditary)


def suite_T4_7(ring, report, corpus):
    v = report.verdict
    failures = []
    if v.split_e != v.split_h:
        failures.append({"e": v.split_e, "h": v.split_h})
    failures.extend(v.contradictions)
    if v.splits:
        w = v.witness
        if w.get("idempotent") is None or not (w["T_almost_small"] and w["S_semisimple"]):
            failures.append({"reason": "no T x S decomposition", "witness": w})
        if not v.stable:
            failures.append({"reason": "splitting but torsion class not closed under hulls"})
    return _verdict(failures, splits=v.splits, witness=v.witness, consistency=v.consistency)


def suite_P4_10(ring, report, corpus):
    c = report.classifiers
    failures = [] if c["teply"] == c["kasch"] else [{"teply": c["teply"], "kasch": c["kasch"]}]
    return _verdict(failures, teply=c["teply"], kasch=c["kasch"])


def suite_P4_12(ring, report, corpus):
    c = report.classifiers
    if not c["soc_rl"]:
        return _na("Soc(R_R) not contained in Soc(_RR)")
    return _verdict([] if report.verdict.split_e else [{"reason": "injective simple that is not projective"}])


def suite_R4_11(ring, report, corpus):
    if ring.factors is not None or not ring.name.startswith("Tri(2,"):
        return _na("not a 2x2 triangular ring")
    v = report.verdict
    failures = []
    if v.splits:
        failures.append({"reason": "triangular ring reported splitting"})
        return _verdict(failures)
    from .parse import build_module

    S = build_module(ring, v.witness["module"])
    Q = build_module(ring, "R/soc")
    iso = are_isomorphic(S, Q)
    inj, proj = H.is_injective(S), H.is_projective(S)
    if not (iso and inj and not proj):
        failures.append({"iso_to_R_mod_soc": iso, "injective": inj, "projective": proj})
    return _verdict(failures, witness=v.witness["module"], iso_to_R_mod_soc=iso, injective=inj, projective=proj)


def suite_OPEN_Q(ring, report, corpus):
    v = report.verdict
    hit = v.splits and not v.cohereditary
    return _verdict([{"reason": "splits but not cohereditary"}] if hit else [], hit=hit)


def suite_ZSTAR(ring, report, corpus):
    """Trace and hull forms of Z*, essentiality in cg_radical, oracle agreement."""
    failures = []
    for cm in corpus:
        M = cm.module
        zt, zh = T.zstar(M), T.zstar_hull(M)
        if zt != zh:
            failures.append({"module": cm.spec, "trace": zt.size, "hull": zh.size})
        cg = T.cg_radical(M)
        if not zt <= cg:
            failures.append({"module": cm.spec, "reason": "Z* not inside cg_radical"})
        elif not cg.is_zero():
            Cm, _ = submodule_module(M, cg)
            lab = Cm.__dict__["_embedding_label"]
            if not H.is_essential(Cm.submodule(lab[zt.elems], check=False), Cm):
                failures.append({"module": cm.spec, "reason": "Z* not essential in cg_radical"})
        brute = T.cg_radical_bruteforce(M)
        if brute != cg:
            failures.append({"module": cm.spec, "fixpoint": cg.size, "bruteforce": brute.size})
    return _verdict(failures, modules_checked=len(corpus))


def suite_KERNEL(ring, report, corpus):
    """Baer vs duality injectivity, hull postconditions, double duals."""
    failures = []
    if report.classifiers["small_ring"]:
        failures.append({"reason": "finite ring reported small"})
    for cm in corpus:
        M = cm.module
        if H.is_injective_baer(M) != H.is_injective_by_duality(M):
            failures.append({"module": cm.spec, "reason": "Baer and duality disagree"})
        h = H.injective_hull(M)
        if not (h.embedding.is_injective() and H.is_essential(h.embedding.image(), h.hull) and H.is_injective(h.hull)):
            failures.append({"module": cm.spec, "reason": "hull postcondition"})
        DD = H.character_dual(H.character_dual(M))
        if DD.ring is not M.ring or not are_isomorphic(DD, M):
            failures.append({"module": cm.spec, "reason": "double dual"})
    return _verdict(failures, modules_checked=len(corpus))


SUITES = {
    "T1.1": suite_T1_1,
    "P2.3ab": suite_P2_3ab,
    "L2.4": suite_L2_4,
    "P3.1": suite_P3_1,
    "P3.3": suite_P3_3,
    "P3.8": suite_P3_8,
    "L4.2": suite_L4_2,
    "C4.3": suite_C4_3,
    "C4.4": suite_C4_4,
    "T4.5": suite_T4_5,
    "P4.6": suite_P4_6,
    "T4.7": suite_T4_7,
    "P4.10": suite_P4_10,
    "P4.12": suite_P4_12,
    "R4.11": suite_R4_11,
    "OPEN-Q": suite_OPEN_Q,
    "ZSTAR": suite_ZSTAR,
    "KERNEL": suite_KERNEL,
}


# -- running ------------------------------------------------------------------


@dataclass
class CheckResult:
    theorem: str
    ring: str
    status: str
    detail: dict

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "ring": self.ring, "status": self.status, "detail": self.detail}


@dataclass
class SuiteResult:
    suites: list[str]
    reports: dict[str, RingReport] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    def aggregate(self) -> list[dict]:
        out = []
        for sid in self.suites:
            rows = [c for c in self.checks if c.theorem == sid]
            out.append({
                "id": sid,
                "rings_checked": sum(c.status in ("pass", "fail") for c in rows),
                "passes": sum(c.status == "pass" for c in rows),
                "not_applicable": sum(c.status == "n/a" for c in rows),
                "skips": [{"ring": c.ring, "reason": c.detail.get("reason")} for c in rows if c.status == "skip"],
                "failures": [{"ring": c.ring, **c.detail} for c in rows if c.status == "fail"],
            })
        return out

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.status == "skip" for c in self.checks)

    @property
    def exit_code(self) -> int:
        if self.failed:
            return 1
        return 3 if self.skipped else 0


def resolve_suites(ids) -> list[str]:
    if ids is None or ids == "all" or ids == ["all"]:
        return list(SUITE_IDS)
    if isinstance(ids, str):
        ids = [s.strip() for s in ids.split(",") if s.strip()]
    for sid in ids:
        if sid not in SUITES:
            raise UnknownSuite(f"unknown suite {sid!r}; known: {', '.join(SUITE_IDS)}")
    return list(ids)


def check_ring(name: str, ring, suites: list[str], result: SuiteResult, strict: bool = False) -> None:
    start = time.perf_counter()
    try:
        corpus = corpus_modules(ring)
        report = classify_ring(ring, corpus)
    except (SizeCutoffExceeded, EnumerationCutoffExceeded) as exc:
        if strict:
            raise
        for sid in suites:
            result.checks.append(CheckResult(sid, name, "skip", {"reason": str(exc)}))
        result.timing[name] = time.perf_counter() - start
        return
    result.reports[name] = report
    for sid in suites:
        try:
            status, detail = SUITES[sid](ring, report, corpus)
        except (SizeCutoffExceeded, EnumerationCutoffExceeded) as exc:
            status, detail = "skip", {"reason": str(exc)}
        detail = _plain(detail)
        result.checks.append(CheckResult(sid, name, status, detail))
        report.theorem_results.append((sid, status, detail))
    result.timing[name] = time.perf_counter() - start


def module_summary(M) -> dict:
    """Predicate values of one module, as reported by ``analyze --module``."""
    facts = dict(module_facts(M))
    hull = H.injective_hull(M)
    facts.update({
        "spec": M.name,
        "zstar_size": T.zstar(M).size,
        "singular_size": T.singular_submodule(M).size,
        "goldie_size": T.goldie_radical(M).size,
        "rho_size": T.generalov_rho(M).size,
        "radical_size": H.radical(M).size,
        "socle_size": H.socle(M).size,
        "hull_size": hull.hull.size,
        "cover_size": H.cover_size(M),
    })
    return facts


def analyze(spec: str, limits: Limits | None = None, suites=RING_LEVEL_SUITES, module: str | None = None) -> RingReport:
    """Classify one ring, run ``suites`` on it and optionally describe a module.

    Cutoff errors during corpus construction propagate; suite-level cutoff
    errors are recorded as ``skip`` entries of the report.
    """
    from .parse import build_module, build_ring

    suites = resolve_suites(suites)
    with use_limits(limits or Limits.from_env()):
        start = time.perf_counter()
        ring = build_ring(spec)
        M = build_module(ring, module) if module is not None else None
        result = SuiteResult(suites)
        check_ring(spec, ring, suites, result, strict=True)
        report = result.reports[spec]
        if M is not None:
            report.module = _plain(module_summary(M))
        report.timing = {spec: time.perf_counter() - start}
    return report


def run_suite(corpus: Corpus, suite_ids=None, limits: Limits | None = None, progress=None) -> SuiteResult:
    suites = resolve_suites(suite_ids)
    result = SuiteResult(suites)
    with use_limits(limits or corpus.limits):
        for name, ring in corpus.rings:
            check_ring(name, ring, suites, result)
            if progress is not None:
                progress(name, result)
    return result


def _plain(obj):
    """Convert numpy scalars and arrays inside a detail record to JSON types."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj
