import pytest

from conftest import module, ring
from ringlab import homological as H
from ringlab import torsion as T
from ringlab.classify import classify_ring, component_module, product_decomposition_check
from ringlab.corpus import corpus_modules
from ringlab.modules import quotient_module, submodule_lattice

FIELDS = ["GF(2)", "GF(3)", "GF(4)", "Z/5"]


def _list(S):
    return S.elems.tolist()


def test_singular_submodule_examples():
    assert T.singular_submodule(module("Z/4", "simple:0")).is_full()
    assert _list(T.singular_submodule(ring("Z/4").regular)) == [0, 2]
    for f in FIELDS:
        assert T.singular_submodule(module(f, "R+R")).is_zero()


def test_zstar_examples():
    assert T.is_small_module(module("Z/4", "simple:0"))
    assert _list(T.zstar(ring("Z/4").regular)) == [0, 2]
    for f in FIELDS:
        assert T.zstar(module(f, "R+R")).is_zero()


def test_goldie_radical_examples():
    assert T.goldie_radical(ring("Z/4").regular).is_full()
    assert T.goldie_radical(module("GF(2)", "R+R")).is_zero()
    assert T.goldie_radical(module("Z/4", "simple:0")).is_full()


def test_cg_radical_examples():
    assert T.cg_radical(ring("Z/4").regular).is_full()
    for f in FIELDS:
        assert T.cg_radical(module(f, "R+R")).is_zero()
    assert T.cg_radical(ring("Z/6").regular).is_zero()


def test_reject_and_rho_examples():
    Z4 = ring("Z/4").regular
    assert _list(T.reject_small(Z4)) == [0, 2]
    assert T.generalov_rho(Z4).is_zero()
    assert T.reject_small(module("Z/4", "simple:0")).is_zero()
    for f in FIELDS:
        assert T.is_perp_torsion(module(f, "R+R"))


def test_product_decomposition_examples():
    for spec in ["Z/2 x Z/3", "GF(2) x Z/4", "Tri(2,GF(2)) x GF(2)"]:
        assert product_decomposition_check(ring(spec).regular)
    P = ring("GF(2) x Z/4")
    comp, _ = component_module(P.regular, 1)
    assert T.cg_radical(comp).is_full()
    comp0, _ = component_module(P.regular, 0)
    assert T.cg_radical(comp0).is_zero()


CORPUS_RINGS = ["Z/4", "Z/6", "Tri(2,GF(2))", "GF(2)[x]/(x^2)", "GF(2) x Z/4"]


@pytest.fixture(scope="module", params=CORPUS_RINGS)
def corpus(request):
    return request.param, corpus_modules(ring(request.param))


def test_zstar_trace_equals_hull_form(corpus):
    for cm in corpus[1]:
        assert T.zstar(cm.module) == T.zstar_hull(cm.module), cm.spec


def test_fixpoint_equals_bruteforce(corpus):
    for cm in corpus[1]:
        assert T.cg_radical(cm.module) == T.cg_radical_bruteforce(cm.module), cm.spec


def test_cg_radical_is_hereditary_and_idempotent(corpus):
    from ringlab.modules import submodule_module

    for cm in corpus[1]:
        M = cm.module
        cg = T.cg_radical(M)
        Q, _ = quotient_module(M, cg)
        assert T.cg_radical(Q).is_zero(), cm.spec
        for N in submodule_lattice(M):
            Nm, incl = submodule_module(M, N)
            assert sorted(incl.images[T.cg_radical(Nm).elems].tolist()) == (N & cg).elems.tolist(), cm.spec


def test_torsion_torsionfree_orthogonal(corpus):
    from ringlab.classify import module_facts
    from ringlab.modules import hom_count

    mods = [cm.module for cm in corpus[1]]
    for M in mods:
        if not module_facts(M)["cg_torsion"]:
            continue
        for N in mods:
            if module_facts(N)["cg_torsionfree"]:
                assert hom_count(M, N) == 1


def test_small_modules_closed_under_submodules_and_quotients(corpus):
    from ringlab.modules import submodule_module

    for cm in corpus[1]:
        M = cm.module
        if not T.is_small_module(M):
            continue
        for N in submodule_lattice(M):
            assert T.is_small_module(submodule_module(M, N)[0])
            assert T.is_small_module(quotient_module(M, N)[0])


def test_simple_dichotomies():
    for spec in CORPUS_RINGS + ["Mat(2, GF(2))", "op(Tri(2,GF(2)))"]:
        for S in H.simple_modules(ring(spec)):
            assert T.is_small_module(S) != H.is_injective(S)
            assert T.is_singular_module(S) != H.is_projective(S)


def test_generalov_rho_idempotent(corpus):
    from ringlab.modules import submodule_module

    for cm in corpus[1]:
        rho = T.generalov_rho(cm.module)
        Rm, _ = submodule_module(cm.module, rho)
        assert T.generalov_rho(Rm).is_full()
        assert rho.is_full() == T.is_perp_torsion(cm.module) == (not T.has_small_quotient(cm.module))


def test_report_for_triangular():
    rep = classify_ring(ring("Tri(2,GF(2))"), corpus_modules(ring("Tri(2,GF(2))")))
    c = rep.classifiers
    assert not c["kasch"] and not c["teply"] and not c["qf"] and not c["small_ring"]
    assert rep.verdict.kind == "proper" and not rep.verdict.splits
