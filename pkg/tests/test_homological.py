import pytest

from conftest import module, ring
from oracles import brute_baer, brute_essential, brute_iso, brute_lattice, brute_radical, brute_small, brute_socle
from ringlab import homological as H
from ringlab.errors import NotASubmodule
from ringlab.modules import are_isomorphic, direct_sum, submodule_lattice, submodule_module

SMALL_CASES = [
    ("Z/4", "R"), ("Z/4", "simple:0"), ("Z/8", "R+simple:0"), ("Tri(2,GF(2))", "R"), ("Tri(2,GF(2))", "R/soc"),
    ("GF(2) x Z/4", "R"), ("GF(2)[x]/(x^3)", "R"), ("Mat(2, GF(2))", "R"), ("op(Tri(2,GF(2)))", "R"),
    ("Tri(2,GF(2))", "simple:0+simple:1"), ("GF(3)[x]/(x^2)", "R+R/rad"), ("Z/6", "R"),
]


def _elems(S):
    return frozenset(S.elems.tolist())


def test_radical_socle_examples():
    reg = ring("Z/4").regular
    assert H.radical(reg).elems.tolist() == [0, 2]
    T = ring("Tri(2,GF(2))").regular
    assert H.socle(T).size == 4
    for S in H.simple_modules(ring("Tri(2,GF(2))")):
        assert H.radical(S).is_zero() and H.socle(S).is_full()


@pytest.mark.parametrize("ring_spec, module_spec", SMALL_CASES)
def test_radical_socle_match_lattice_definitions(ring_spec, module_spec):
    M = module(ring_spec, module_spec)
    assert _elems(H.radical(M)) == brute_radical(M)
    assert _elems(H.socle(M)) == brute_socle(M)
    assert H.radical(M) == H.radical_by_lattice(M)
    assert H.socle(M) == H.socle_by_lattice(M)


@pytest.mark.parametrize("ring_spec, module_spec", SMALL_CASES[:8])
def test_essential_and_small_match_definitions(ring_spec, module_spec):
    M = module(ring_spec, module_spec)
    for N in submodule_lattice(M):
        assert H.is_essential(N, M) == brute_essential(_elems(N), M)
        assert H.is_small_in(N, M) == brute_small(_elems(N), M) == H.is_small_in_by_lattice(N, M)


def test_essential_small_examples():
    reg = ring("Z/4").regular
    two = reg.submodule([0, 2])
    assert H.is_essential(two, reg) and H.is_small_in(two, reg)
    assert not H.is_essential(reg.zero, reg)
    with pytest.raises(NotASubmodule):
        H.is_essential(ring("Z/4").op.regular.zero, reg)


@pytest.mark.parametrize("spec, count", [("GF(4)", 1), ("Tri(2,GF(2))", 2), ("Z/6", 2), ("Mat(2, GF(2))", 1), ("Z/4 x Z/9", 2)])
def test_simple_classes(spec, count):
    simples = H.simple_modules(ring(spec))
    assert len(simples) == count
    for i, A in enumerate(simples):
        for B in simples[i + 1:]:
            assert not brute_iso(A, B)


def test_simples_of_z6_are_z2_and_z3():
    sizes = sorted(S.size for S in H.simple_modules(ring("Z/6")))
    assert sizes == [2, 3]


@pytest.mark.parametrize(
    "ring_spec, module_spec, expected",
    [
        ("Z/4", "R", True),
        ("Z/4", "simple:0", False),
        ("GF(2)", "R+R", True),
        ("Tri(2,GF(2))", "R", False),
        ("Tri(2,GF(2))", "R/soc", True),
        ("Tri(2,GF(2))", "simple:0", False),
        ("Mat(2, GF(2))", "simple:0", True),
        ("GF(2) x Z/4", "R", True),
        ("op(Tri(2,GF(2)))", "R", False),
    ],
)
def test_baer_injectivity(ring_spec, module_spec, expected):
    M = module(ring_spec, module_spec)
    assert H.is_injective(M) == expected
    assert brute_baer(M) == expected
    assert H.is_injective_baer_enum(M) == expected
    assert H.is_injective_by_duality(M) == expected


def test_projectivity():
    T = ring("Tri(2,GF(2))")
    assert H.is_projective(T.regular)
    assert not H.is_projective(module("Tri(2,GF(2))", "R/soc"))
    assert H.is_projective(module("Tri(2,GF(2))", "proj:0+proj:1"))


def test_cover_of_z2_over_z4():
    S = module("Z/4", "simple:0")
    cov = H.projective_cover(S)
    assert are_isomorphic(cov.cover, ring("Z/4").regular)
    assert cov.surjection.is_surjective()
    assert H.is_small_in(cov.surjection.kernel(), cov.cover)


@pytest.mark.parametrize("ring_spec, module_spec", SMALL_CASES)
def test_cover_postconditions(ring_spec, module_spec):
    M = module(ring_spec, module_spec)
    cov = H.projective_cover(M)
    assert cov.surjection.validate().is_surjective()
    assert H.is_small_in(cov.surjection.kernel(), cov.cover)
    assert H.is_projective(cov.cover)
    assert H.is_projective(M) == (cov.cover.size == M.size)


def test_character_dual_examples():
    Z4 = ring("Z/4")
    D = H.character_dual(Z4.regular)
    assert D.ring is Z4.op and D.size == 4
    assert are_isomorphic(D, Z4.op.regular)
    T = ring("Tri(2,GF(2))")
    for S in H.simple_modules(T):
        DS = H.character_dual(S)
        assert len(submodule_lattice(DS)) == 2
    M, N = module("Tri(2,GF(2))", "R"), module("Tri(2,GF(2))", "simple:1")
    S = direct_sum(M, N)[0]
    assert are_isomorphic(H.character_dual(S), direct_sum(H.character_dual(M), H.character_dual(N))[0])


def test_hull_examples():
    S = module("Z/4", "simple:0")
    h = H.injective_hull(S)
    assert are_isomorphic(h.hull, ring("Z/4").regular)
    inj = ring("Z/4").regular
    assert are_isomorphic(H.injective_hull(inj).hull, inj)
    V = module("GF(3)", "R+R")
    assert are_isomorphic(H.injective_hull(V).hull, V)
    W = module("Tri(2,GF(2))", "simple:0")
    hw = H.injective_hull(W)
    assert hw.hull.size == 4 and H.is_injective(hw.hull)


@pytest.mark.parametrize("ring_spec, module_spec", SMALL_CASES)
def test_hull_postconditions(ring_spec, module_spec):
    M = module(ring_spec, module_spec)
    h = H.injective_hull(M)
    img = h.embedding.image()
    assert h.embedding.is_injective()
    assert brute_essential(_elems(img), h.hull)
    assert brute_baer(h.hull) if h.hull.size <= 64 else H.is_injective(h.hull)


def test_decompose_examples():
    T = ring("Tri(2,GF(2))")
    parts = H.decompose(T.regular)
    assert len(parts) == 2
    assert all(H.is_projective(P) for P, _ in parts)
    assert sorted(P.size for P, _ in parts) == [2, 4]
    assert len(H.decompose(ring("Z/4").regular)) == 1
    simples = H.decompose(module("GF(2)", "R+R"))
    assert [P.size for P, _ in simples] == [2, 2]


@pytest.mark.parametrize("ring_spec, module_spec", SMALL_CASES)
def test_krull_schmidt_across_orders(ring_spec, module_spec):
    M = module(ring_spec, module_spec)
    a = [P for P, _ in H.decompose(M, order="smallest")]
    b = [P for P, _ in H.decompose(M, order="largest")]
    assert len(a) == len(b)
    unmatched = list(b)
    for P in a:
        j = next(j for j, Q in enumerate(unmatched) if are_isomorphic(P, Q))
        unmatched.pop(j)
    size = 1
    for P in a:
        size *= P.size
        assert len(H.decompose(P)) == 1
    assert size == M.size


def test_decompose_inclusions_span_module():
    M = module("Tri(2,GF(2))", "R+simple:1")
    parts = H.decompose(M)
    images = [incl.image() for _, incl in parts]
    total = images[0]
    for I in images[1:]:
        assert (total & I).is_zero()
        total = total + I
    assert total.is_full()


def test_lattice_of_tri_regular_is_brute_lattice():
    reg = ring("Tri(2,GF(2))").regular
    assert {_elems(S) for S in submodule_lattice(reg)} == brute_lattice(reg)
    Sm, _ = submodule_module(reg, H.socle(reg))
    assert len(H.decompose(Sm)) == 2
