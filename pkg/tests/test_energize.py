from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import golden
import oracles
from energized.energize import (
    build_bundle,
    constant_energy,
    energy_from_json,
    energy_of,
    explicit_energy,
    omega_energy,
    spin_energy,
    verify_determinant,
    verify_duality,
    verify_energy_theorem,
    verify_inverse_spin,
    verify_product,
    verify_strace,
    wu_sum,
)
from energized.errors import InvalidInputError, InvalidStateError
from energized.exact import ExactMatrix, det_exact
from energized.setsys import SetSystem, canonical_order, complete_complex, random_family, random_sets


def bundle_in_listed_order(cells, h_values=None):
    """Build in canonical order, then permute into the order the cells are listed."""
    listed = SetSystem(cells, allow_empty=True)
    canon = canonical_order(listed)
    vals = h_values or [1] * len(canon)
    B = build_bundle(canon, explicit_energy(canon, vals))
    perm = canon.permutation_to(listed)
    return {k: getattr(B, k).permuted(perm) for k in ("Lmm", "Lpp", "g")}


# -- golden matrices ------------------------------------------------------------


@pytest.mark.parametrize(
    "cells, lmm, lpp",
    [
        (golden.KOMMA, golden.KOMMA_LMM, golden.KOMMA_LPP),
        (golden.CHAIN, golden.CHAIN_LMM, golden.CHAIN_LPP),
        (golden.EIGHT, golden.EIGHT_LMM, golden.EIGHT_LPP),
        (golden.NINE, golden.NINE_LMM, golden.NINE_LPP),
        (golden.CODE5, golden.CODE5_LMM, golden.CODE5_LPP),
        (golden.C5, golden.C5_LMM, golden.C5_LPP),
    ],
    ids=["komma", "chain", "eight", "nine", "code5", "c5"],
)
def test_reference_matrices(cells, lmm, lpp):
    M = bundle_in_listed_order(cells)
    assert M["Lmm"] == ExactMatrix(lmm)
    assert M["Lpp"] == ExactMatrix(lpp)


def test_komma_by_hand():
    S = SetSystem(golden.KOMMA)
    B = build_bundle(S, constant_energy(S))
    assert B.g == ExactMatrix([[2, -1], [-1, 1]])


def test_symbolic_example_three_cells():
    S = SetSystem(golden.EX1)
    h = explicit_energy(S, golden.sym([golden.EX1_VARS], golden.EX1_VARS)[0])
    B = build_bundle(S, h)
    assert B.Lmm == ExactMatrix(golden.sym(golden.EX1_LMM, golden.EX1_VARS))
    assert B.Lpp == ExactMatrix(golden.sym(golden.EX1_LPP, golden.EX1_VARS))
    assert B.Lmm @ B.g == ExactMatrix(golden.sym(golden.EX1_LG, golden.EX1_VARS))
    x, y, z = h.values
    assert det_exact(B.Lmm) == x * y * z == det_exact(B.g)


def test_symbolic_example_seven_cells():
    S = SetSystem(golden.EX2)
    vs = golden.EX2_VARS
    h = explicit_energy(S, golden.sym([vs], vs)[0])
    B = build_bundle(S, h)
    assert B.Lmm == ExactMatrix(golden.sym(golden.EX2_LMM, vs))
    assert B.Lpp == ExactMatrix(golden.sym(golden.EX2_LPP, vs))
    assert B.g == ExactMatrix(golden.sym(golden.EX2_G, vs))
    assert B.Lmm @ B.g == ExactMatrix(golden.sym(golden.EX2_LG, vs))
    assert B.g.total() == h.total()
    assert det_exact(B.Lpp) == h.fermi()


# -- against the brute-force oracle ----------------------------------------


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_bundle_matches_definition(seed, simplicial):
    rng = np.random.default_rng(seed)
    S = random_sets(4, 3, seed) if simplicial else random_family(4, 8, seed)
    vals = oracles.random_energy(rng, len(S), nonzero=False)
    B = build_bundle(S, explicit_energy(S, vals))
    ref = oracles.brute_bundle(S.cells, vals)
    for name in ("Lmm", "Lpp", "Lpm", "Lmp", "g"):
        assert getattr(B, name) == ExactMatrix(ref[name]), name


def test_unordered_system_rejected():
    S = SetSystem(golden.CODE5)
    with pytest.raises(InvalidStateError):
        build_bundle(S, constant_energy(S))
    build_bundle(S, constant_energy(S), check_order=False)


def test_energy_shape_and_float_checks():
    S = complete_complex(2)
    with pytest.raises(InvalidInputError):
        build_bundle(S, explicit_energy(complete_complex(1), [1]))
    with pytest.raises(InvalidInputError):
        explicit_energy(S, [1.5, 1, 1])
    with pytest.raises(InvalidInputError):
        spin_energy(S, "+-x")
    assert explicit_energy(S, ["1/2", 1, 2]).values[0] == Fraction(1, 2)


def test_energy_from_json_kinds():
    S = complete_complex(2)
    assert energy_from_json(S, {"kind": "omega"}).values == (1, 1, -1)
    assert energy_from_json(S, {"kind": "spin", "values": "+-+"}).values == (1, -1, 1)
    assert energy_from_json(S, {"kind": "constant", "values": 3}).values == (3, 3, 3)


def test_energy_of_subset():
    S = complete_complex(2)
    h = omega_energy(S)
    assert energy_of(S, h, [(1,), (1, 2)]) == 0


# -- identities -------------------------------------------------------------


def test_triangular_product_on_complex():
    S = complete_complex(3)
    rng = np.random.default_rng(0)
    h = explicit_energy(S, oracles.random_energy(rng, len(S)))
    rep = verify_product(S, h)
    assert rep.ok and rep.status == "pass"


def test_triangular_product_only_reported_off_complexes():
    S = SetSystem(golden.KOMMA)
    rep = verify_product(S, constant_energy(S))
    assert rep.status == "not-applicable"


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_determinant_theorem_any_set_of_sets(seed):
    rng = np.random.default_rng(seed)
    S = random_family(5, 9, seed)
    h = explicit_energy(S, oracles.random_energy(rng, len(S), nonzero=False))
    rep = verify_determinant(S, h)
    assert rep.ok, rep.summary()
    assert det_exact(build_bundle(S, h).Lmm) == oracles.det(oracles.brute_bundle(S.cells, h.values)["Lmm"])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_spin_inverse_on_complexes(seed):
    rng = np.random.default_rng(seed)
    S = random_sets(5, 3, seed)
    h = spin_energy(S, rng.choice([1, -1], size=len(S)).tolist())
    assert verify_inverse_spin(S, h).ok


def test_spin_inverse_counterexample_is_a_finding():
    S = SetSystem([[1], [2], [1, 2], [1, 2, 3]])
    rep = verify_inverse_spin(S, constant_energy(S))
    assert rep.status == "not-applicable"
    assert rep.findings


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_energy_and_supertrace(seed):
    rng = np.random.default_rng(seed)
    S = random_sets(5, 3, seed)
    h = explicit_energy(S, oracles.random_energy(rng, len(S), nonzero=False))
    assert verify_energy_theorem(S, h).ok
    assert verify_strace(S, h).ok


def test_energy_theorem_fails_on_komma():
    S = SetSystem(golden.KOMMA)
    rep = verify_energy_theorem(S, constant_energy(S))
    assert rep["sum g = E[G]"].holds is False
    assert rep.findings


def test_omega_energy_gives_euler_characteristic():
    S = complete_complex(3)
    B = build_bundle(S, omega_energy(S))
    assert B.g.total() == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_duality_swaps_matrices(seed):
    rng = np.random.default_rng(seed)
    S = random_family(4, 8, seed)
    h = explicit_energy(S, oracles.random_energy(rng, len(S)))
    assert verify_duality(S, h).ok


def test_wu_sum_komma():
    S = SetSystem(golden.KOMMA)
    # S L S = [[1,-1],[-1,2]]
    assert wu_sum(S, constant_energy(S)) == 1
