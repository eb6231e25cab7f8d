"""Property tests over randomly drawn small modules."""

import itertools

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import module, ring
from ringlab import homological as H
from ringlab import torsion as T
from ringlab.modules import (
    are_isomorphic,
    direct_sum,
    hom_count,
    hom_set,
    quotient_module,
    submodule_lattice,
    zero_module,
)
from ringlab.parse import build_ring

RINGS = ["Z/4", "Z/6", "Z/8", "GF(4)", "GF(2)[x]/(x^2)", "Tri(2,GF(2))", "op(Tri(2,GF(2)))", "GF(2) x Z/4",
         "Mat(2, GF(2))", "GF(3)[x]/(x^2)"]
ATOMS = ["R", "R/rad", "R/soc", "simple:0", "simple:-1", "proj:0", "proj:-1", "hull(simple:0)", "hull(simple:-1)"]
SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _resolve(ring_spec: str, atom: str) -> str:
    n = len(H.simple_modules(ring(ring_spec)))
    return atom.replace("-1", str(n - 1))


@st.composite
def modules(draw, ring_spec=None, max_size=64):
    spec = ring_spec or draw(st.sampled_from(RINGS))
    atoms = [_resolve(spec, a) for a in ATOMS]
    parts = draw(st.lists(st.sampled_from(atoms), min_size=1, max_size=2))
    text = "+".join(parts)
    M = module(spec, text)
    if M.size > max_size:
        M = module(spec, parts[0])
    return M


@st.composite
def module_pairs(draw, max_size=32):
    spec = draw(st.sampled_from(RINGS))
    return draw(modules(spec, max_size)), draw(modules(spec, max_size))


def _add(M, x, y):
    return ((M.coords[x] + M.coords[y]) % M.ords) @ M.strides


@SETTINGS
@given(module_pairs(), st.integers(0, 2**32 - 1))
def test_homs_are_linear(pair, seed):
    M, N = pair
    f = hom_set(M, N).random(np.random.default_rng(seed))
    img = f.images
    xs, ys = np.meshgrid(np.arange(M.size), np.arange(M.size))
    assert np.array_equal(img[_add(M, xs.ravel(), ys.ravel())], _add(N, img[xs.ravel()], img[ys.ravel()]))
    for r in range(M.ring.size):
        assert np.array_equal(img[M.ract[r]], N.ract[r][img])


@SETTINGS
@given(st.sampled_from(RINGS), st.data())
def test_biproduct_hom_law(spec, data):
    A = data.draw(modules(spec, 16))
    B = data.draw(modules(spec, 16))
    P = data.draw(modules(spec, 32))
    S = direct_sum(A, B)[0]
    assert hom_count(S, P) == hom_count(A, P) * hom_count(B, P)
    assert hom_count(P, S) == hom_count(P, A) * hom_count(P, B)


@SETTINGS
@given(modules(max_size=64), st.integers(0, 10**6))
def test_lattice_correspondence_and_closure(M, pick):
    L = submodule_lattice(M)
    N = L[pick % len(L)]
    Q, _ = quotient_module(M, N)
    assert len(submodule_lattice(Q)) == sum(1 for K in L if N <= K)
    K = L[(pick // 7) % len(L)]
    L.lookup((N & K).mask)
    L.lookup((N + K).mask)


@SETTINGS
@given(module_pairs(max_size=16))
def test_isomorphism_is_an_equivalence(pair):
    A, B = pair
    assert are_isomorphic(A, A)
    assert are_isomorphic(A, B) == are_isomorphic(B, A)
    Z = zero_module(A.ring)
    A0 = direct_sum(A, Z)[0]
    assert are_isomorphic(A, A0)
    if are_isomorphic(A, B):
        assert are_isomorphic(A0, B)


@SETTINGS
@given(modules(max_size=32), st.integers(0, 10**6))
def test_essential_and_small_monotonicity(M, pick):
    L = submodule_lattice(M)
    N = L[pick % len(L)]
    above = [P for P in L if N <= P]
    below = [P for P in L if P <= N]
    if H.is_essential(N, M):
        assert all(H.is_essential(P, M) for P in above)
    if H.is_small_in(N, M):
        assert all(H.is_small_in(P, M) for P in below)


@SETTINGS
@given(modules(max_size=64))
def test_duality_exchange(M):
    D = H.character_dual(M)
    assert D.size == M.size and D.ring is M.ring.op
    assert H.radical(M).size * H.socle(D).size == M.size
    assert H.is_injective(M) == H.is_projective(D)
    assert are_isomorphic(H.character_dual(D), M)


@SETTINGS
@given(module_pairs(max_size=32), st.integers(0, 2**32 - 1))
def test_cg_radical_is_functorial(pair, seed):
    M, N = pair
    f = hom_set(M, N).random(np.random.default_rng(seed))
    cgN = T.cg_radical(N)
    assert cgN.bools[f.images[T.cg_radical(M).elems]].all()


@SETTINGS
@given(module_pairs(max_size=16))
def test_small_modules_closed_under_sums(pair):
    A, B = pair
    if T.is_small_module(A) and T.is_small_module(B):
        assert T.is_small_module(direct_sum(A, B)[0])


@SETTINGS
@given(modules(max_size=64))
def test_module_names_rebuild(M):
    from ringlab.parse import build_module

    assert are_isomorphic(build_module(M.ring, M.name), M)


ATOMIC_RINGS = ["Z/2", "Z/3", "Z/4", "Z/9", "GF(4)", "GF(2)[x]/(x^2)", "Tri(2, GF(2))"]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(ATOMIC_RINGS), min_size=1, max_size=2), st.booleans())
def test_constructed_rings_are_valid(parts, opp):
    spec = " x ".join(f"({p})" for p in parts)
    if opp:
        spec = f"op({spec})"
    R = build_ring(spec)
    T_ = R.mul_table
    idx = range(R.size)
    for x, y, z in itertools.islice(itertools.product(idx, repeat=3), 4096):
        assert T_[T_[x, y], z] == T_[x, T_[y, z]]
    one = R.one_index
    assert (T_[one] == np.arange(R.size)).all() and (T_[:, one] == np.arange(R.size)).all()
    assert R.op.op.same_tables(R)
