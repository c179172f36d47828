from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from energized.calculus import (
    cartesian_product,
    curvature,
    disjoint_union,
    poincare_hopf_index,
    verify_gauss_bonnet,
    verify_poincare_hopf,
    verify_ring,
    verify_tensor_representation,
)
from energized.energize import build_bundle, constant_energy, explicit_energy, omega_energy
from energized.errors import InvalidInputError
from energized.setsys import atoms, complete_complex, cycle_complex, random_family, random_sets


def energized(S, rng):
    return S, explicit_energy(S, oracles.random_energy(rng, len(S), nonzero=False))


def test_curvature_of_edge():
    S = complete_complex(2)
    K = curvature(S, omega_energy(S))
    assert K == {(1,): Fraction(1, 2), (2,): Fraction(1, 2)}


def test_curvature_of_cycle_is_zero():
    S = cycle_complex(6)
    assert all(v == 0 for v in curvature(S, omega_energy(S)).values())


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_gauss_bonnet_and_poincare_hopf(seed, simplicial):
    rng = np.random.default_rng(seed)
    S = random_sets(5, 3, seed) if simplicial else random_family(5, 8, seed)
    S, h = energized(S, rng)
    assert verify_gauss_bonnet(S, h).ok
    A = atoms(S)
    phi = dict(zip(A, rng.permutation(len(A)).tolist()))
    assert verify_poincare_hopf(S, h, phi=phi).ok
    assert verify_poincare_hopf(S, h).ok


def test_poincare_hopf_index_on_edge():
    S = complete_complex(2)
    idx = poincare_hopf_index(S, omega_energy(S), phi={(1,): 0, (2,): 1})
    assert idx == {(1,): 1, (2,): 0}


def test_phi_must_be_injective():
    S = complete_complex(2)
    with pytest.raises(InvalidInputError):
        poincare_hopf_index(S, omega_energy(S), phi=lambda a: 0)


def test_disjoint_union_shifts_atoms():
    A = complete_complex(2)
    U, h = disjoint_union((A, omega_energy(A)), (A, omega_energy(A)))
    assert U.cells[3:] == ((4,), (5,), (4, 5))
    assert h.total() == 2


def test_product_of_edges():
    A = complete_complex(2)
    P, h = cartesian_product((A, omega_energy(A)), (A, omega_energy(A)))
    assert len(P) == 9
    assert (1, 2, 3, 4) in P
    assert h.total() == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_ring_laws(seed):
    rng = np.random.default_rng(seed)
    A = energized(random_sets(3, 2, seed), rng)
    B = energized(random_family(3, 4, seed + 1), rng)
    assert verify_ring(A, B).ok


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_tensor_representation(seed):
    rng = np.random.default_rng(seed)
    A = energized(random_sets(3, 2, seed), rng)
    B = energized(random_sets(3, 2, seed + 7), rng)
    rep = verify_tensor_representation(A, B)
    assert rep.ok, rep.summary()
    P = build_bundle(*cartesian_product(A, B), check_order=False)
    ref = oracles.brute_bundle(cartesian_product(A, B)[0].cells, cartesian_product(A, B)[1].values)
    assert P.Lmm.tolist() == ref["Lmm"]


def test_product_is_not_simplicial():
    A = complete_complex(2)
    rep = verify_tensor_representation((A, constant_energy(A)), (A, constant_energy(A)))
    assert rep.ok
    assert rep.info["product_simplicial"] is False
