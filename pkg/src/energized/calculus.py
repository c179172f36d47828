"""Local redistribution of energy and the ring structure of energized systems."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .energize import EnergyAssignment, build_bundle, explicit_energy
from .errors import InvalidInputError
from .exact import det_exact, tensor_product
from .report import Report
from .setsys import Cell, SetSystem, _is_subset, atoms

__all__ = [
    "curvature",
    "verify_gauss_bonnet",
    "poincare_hopf_index",
    "verify_poincare_hopf",
    "disjoint_union",
    "cartesian_product",
    "verify_ring",
    "verify_tensor_representation",
]

Energized = tuple[SetSystem, EnergyAssignment]


def _atoms_in(S: SetSystem):
    A = atoms(S)
    return A, [[a for a in A if _is_subset(a, x)] for x in S.cells]


def curvature(S: SetSystem, h: EnergyAssignment) -> dict[Cell, Fraction]:
    """``K(a)``: each cell's energy split equally among the atoms it contains."""
    A, inside = _atoms_in(S)
    K = {a: Fraction(0) for a in A}
    for x, val in zip(inside, h.values):
        share = Fraction(1, len(x))
        for a in x:
            K[a] += val * share
    return K


def verify_gauss_bonnet(S: SetSystem, h: EnergyAssignment) -> Report:
    rep = Report("gauss-bonnet")
    K = curvature(S, h)
    total = sum(K.values(), Fraction(0))
    rep.add("sum of curvatures = E[G]", total == h.total(), h.total(), total)
    rep.info["curvature"] = {str(set(a)): v for a, v in K.items()}
    return rep


def poincare_hopf_index(S: SetSystem, h: EnergyAssignment,
                        phi: Mapping[Cell, float] | Callable[[Cell], float] | None = None) -> dict[Cell, object]:
    """Index ``i(a)``: energies of the cells whose ``phi``-largest atom is ``a``.

    ``phi`` maps atoms (as cells) to reals; the default is the position of
    the atom in the system order.
    """
    A, inside = _atoms_in(S)
    if phi is None:
        values = {a: S.index(a) for a in A}
    elif callable(phi):
        values = {a: phi(a) for a in A}
    else:
        values = {a: phi[a] for a in A}
    if len(set(values.values())) != len(A):
        raise InvalidInputError("phi must be injective on atoms")
    index = {a: 0 for a in A}
    for x, val in zip(inside, h.values):
        top = max(x, key=values.__getitem__)
        index[top] = index[top] + val
    return index


def verify_poincare_hopf(S: SetSystem, h: EnergyAssignment, phi=None) -> Report:
    rep = Report("poincare-hopf")
    idx = poincare_hopf_index(S, h, phi)
    total = sum(idx.values(), 0)
    rep.add("sum of indices = E[G]", total == h.total(), h.total(), total)
    rep.info["index"] = {str(set(a)): v for a, v in idx.items()}
    return rep


def disjoint_union(A: Energized, B: Energized) -> Energized:
    """Cells of ``A`` then cells of ``B`` with ``B``'s atoms shifted past ``A``'s."""
    SA, hA = A
    SB, hB = B
    offset = (max(SA.ground) + 1) if SA.ground else 0
    cells = list(SA.cells) + [tuple(a + offset for a in c) for c in SB.cells]
    S = SetSystem(cells)
    return S, explicit_energy(S, list(hA.values) + list(hB.values))


def cartesian_product(A: Energized, B: Energized) -> Energized:
    """Cells ``x * y`` in pair-lexicographic order, energy ``hA(x) hB(y)``.

    The atom pair ``(a, b)`` is relabelled ``i * |ground B| + j + 1`` where
    ``i``, ``j`` are the positions of ``a``, ``b`` in the sorted grounds.
    """
    SA, hA = A
    SB, hB = B
    ga = {a: i for i, a in enumerate(SA.ground)}
    gb = {b: j for j, b in enumerate(SB.ground)}
    m = len(gb)
    cells, vals = [], []
    for x, u in zip(SA.cells, hA.values):
        for y, v in zip(SB.cells, hB.values):
            cells.append([ga[a] * m + gb[b] + 1 for a in x for b in y])
            vals.append(u * v)
    S = SetSystem(cells)
    return S, explicit_energy(S, vals)


def verify_ring(A: Energized, B: Energized) -> Report:
    """Total energy is additive under union and multiplicative under product."""
    rep = Report("ring")
    EA, EB = A[1].total(), B[1].total()
    U = disjoint_union(A, B)
    P = cartesian_product(A, B)
    rep.add("E[A+B] = E[A] + E[B]", U[1].total() == EA + EB, EA + EB, U[1].total())
    rep.add("E[A*B] = E[A] E[B]", P[1].total() == EA * EB, EA * EB, P[1].total())
    return rep


def verify_tensor_representation(A: Energized, B: Energized) -> Report:
    """``L(A*B) = L(A) (x) L(B)`` for both ``Lmm`` and ``Lpp``."""
    rep = Report("tensor")
    SP, hP = cartesian_product(A, B)
    BA = build_bundle(*A, check_order=False)
    BB = build_bundle(*B, check_order=False)
    BP = build_bundle(SP, hP, check_order=False)
    for name in ("Lmm", "Lpp"):
        K = tensor_product(getattr(BA, name), getattr(BB, name))
        rep.add(f"{name}(A*B) = {name}(A) (x) {name}(B)", getattr(BP, name) == K)
    dA, dB = det_exact(BA.Lmm), det_exact(BB.Lmm)
    expected = dA ** len(B[0]) * dB ** len(A[0])
    got = det_exact(BP.Lmm)
    rep.add("det L(A*B) = det L(A)^|B| det L(B)^|A|", got == expected, expected, got)
    rep.info["product_simplicial"] = SP.simplicial
    return rep
