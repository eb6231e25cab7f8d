import numpy as np
import pytest

from conftest import module, ring
from oracles import brute_homs, brute_iso, brute_lattice, brute_maximal
from ringlab import homological as H
from ringlab.errors import DifferentBaseRings, EnumerationCutoffExceeded, NotASubmodule, SizeCutoffExceeded
from ringlab.limits import Limits, use_limits
from ringlab.modules import (
    ModuleMorphism,
    are_isomorphic,
    direct_sum,
    find_isomorphism,
    hom_count,
    hom_set,
    identity,
    kernel_image,
    quotient_module,
    submodule_lattice,
    submodule_module,
    zero_map,
    zero_module,
)


def _sets(L):
    return {frozenset(S.elems.tolist()) for S in L}


def test_regular_z4():
    reg = ring("Z/4").regular
    assert reg.orders == (4,)
    assert [S.elems.tolist() for S in submodule_lattice(reg)] == [[0], [0, 2], [0, 1, 2, 3]]


def test_regular_triangular_and_field():
    assert ring("Tri(2,GF(2))").regular.size == 8
    L = submodule_lattice(ring("GF(4)").regular)
    assert len(L) == 2


@pytest.mark.parametrize(
    "ring_spec, module_spec, count",
    [
        ("Z/4", "R", 3),
        ("GF(2)", "R+R", 5),
        ("Tri(2,GF(2))", "R", 7),
        ("Z/6", "R", 4),
        ("GF(2)[x]/(x^2)", "R+R", 15),
        ("Tri(2,GF(2))", "R+R", 120),
    ],
)
def test_lattice_matches_brute_force(ring_spec, module_spec, count):
    M = module(ring_spec, module_spec)
    L = submodule_lattice(M)
    assert len(L) == count
    assert _sets(L) == brute_lattice(M)


def test_lattice_canonical_order():
    L = submodule_lattice(module("Tri(2,GF(2))", "R+R"))
    keys = [(S.size, S.elems.tolist()) for S in L]
    assert keys == sorted(keys)


def test_triangular_regular_has_two_maximals():
    reg = ring("Tri(2,GF(2))").regular
    maxs = submodule_lattice(reg).maximal()
    assert len(maxs) == 2
    assert _sets(maxs) == set(brute_maximal(reg))


def test_lattice_cutoff():
    with use_limits(Limits(module_cutoff=16)):
        with pytest.raises(SizeCutoffExceeded) as exc:
            submodule_lattice(module("Tri(2,GF(2))", "R+R+R"))
    assert exc.value.size == 512 and exc.value.cutoff == 16


def test_quotients():
    reg = ring("Z/4").regular
    Q, p = quotient_module(reg, reg.submodule([0, 2]))
    assert Q.size == 2 and p.is_surjective()
    Q0, p0 = quotient_module(reg, reg.zero)
    assert Q0.size == 4 and p0.is_iso() and Q0.orders == reg.orders
    T = ring("Tri(2,GF(2))").regular
    Qs, _ = quotient_module(T, H.socle(T))
    assert Qs.size == 2 and len(submodule_lattice(Qs)) == 2


def test_not_a_submodule():
    reg = ring("Z/4").regular
    with pytest.raises(NotASubmodule):
        reg.submodule([0, 1])


@pytest.mark.parametrize(
    "ring_spec, a, b, count",
    [
        ("Z/4", "simple:0", "R", 2),
        ("GF(2)", "R", "R", 2),
        ("Z/4", "R", "R", 4),
        ("Tri(2,GF(2))", "R", "R", 8),
        ("Tri(2,GF(2))", "R/soc", "R", 1),
        ("Tri(2,GF(2))", "simple:0", "R", 4),
        ("GF(2) x Z/4", "R", "R/rad", 4),
        ("Mat(2, GF(2))", "R", "simple:0", 4),
    ],
)
def test_hom_counts_match_enumeration(ring_spec, a, b, count):
    M, N = module(ring_spec, a), module(ring_spec, b)
    assert hom_count(M, N) == count
    assert len(brute_homs(M, N)) == count
    hs = hom_set(M, N)
    found = {tuple(f.images.tolist()) for f in hs}
    assert found == {tuple(h.tolist()) for h in brute_homs(M, N)}


def test_hom_z2_to_z4_maps():
    maps = sorted(tuple(f.images.tolist()) for f in hom_set(module("Z/4", "simple:0"), ring("Z/4").regular))
    assert maps == [(0, 0), (0, 2)]


def test_hom_into_zero_module():
    M = ring("Tri(2,GF(2))").regular
    assert hom_count(M, zero_module(M.ring)) == 1
    assert len(hom_set(M, zero_module(M.ring)).all()) == 1


def test_hom_cutoff():
    M = module("GF(2)", "R+R+R+R")
    with use_limits(Limits(hom_cutoff=100)):
        with pytest.raises(EnumerationCutoffExceeded):
            hom_set(M, M).all()
        assert len(list(hom_set(M, M))) == 2**16  # lazy iteration is not capped


def test_different_base_rings():
    with pytest.raises(DifferentBaseRings):
        hom_count(ring("Z/4").regular, ring("Z/2").regular)
    with pytest.raises(DifferentBaseRings):
        are_isomorphic(ring("Z/4").regular, ring("Z/2").regular)


def test_isomorphism_examples():
    Z4 = ring("Z/4")
    V = module("Z/4", "simple:0+simple:0")
    assert not are_isomorphic(V, Z4.regular)
    assert are_isomorphic(Z4.regular, Z4.regular)
    T = ring("Tri(2,GF(2))")
    reg = T.regular
    e11 = int(T.index([1, 0, 0]))
    e12 = int(T.index([0, 1, 0]))
    col = reg.cyclic(e11)  # first column R e11 = {0, e11}
    top = reg.cyclic(e12)  # R e12 = {0, e12}
    A, _ = submodule_module(reg, col)
    B, _ = submodule_module(reg, top)
    assert A.size == B.size == 2
    f = find_isomorphism(A, B)
    assert f is not None and f.is_iso()
    assert brute_iso(A, B)


def test_kernel_image():
    reg = ring("Z/4").regular
    K, I = kernel_image(identity(reg))
    assert K.is_zero() and I.is_full()
    K, I = kernel_image(zero_map(reg, reg))
    assert K.is_full() and I.is_zero()
    f = ModuleMorphism(reg, reg, [[2]]).validate()
    K, I = kernel_image(f)
    assert K.elems.tolist() == [0, 2] and I.elems.tolist() == [0, 2]


def test_direct_sum_biproduct_identities():
    M, N = module("Tri(2,GF(2))", "R"), module("Tri(2,GF(2))", "simple:1")
    S, i1, i2, p1, p2 = direct_sum(M, N)
    assert S.size == M.size * N.size
    assert (p1 @ i1).images.tolist() == identity(M).images.tolist()
    assert (p2 @ i2).images.tolist() == identity(N).images.tolist()
    assert (p2 @ i1).is_zero() and (p1 @ i2).is_zero()
    total = (i1 @ p1).images
    other = (i2 @ p2).images
    summed = ((S.coords[total] + S.coords[other]) % S.ords) @ S.strides
    assert np.array_equal(summed, np.arange(S.size))
