"""Energy functions on set systems and the connection matrices they define."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, InvalidStateError, NotFoundError
from .exact import ExactMatrix, Poly, det_exact, laurent, ring_of
from .report import Report
from .setsys import SetSystem, boolean_dual, canonical_order, omega

__all__ = [
    "EnergyAssignment",
    "ConnectionBundle",
    "constant_energy",
    "omega_energy",
    "spin_energy",
    "explicit_energy",
    "parametric_energy",
    "energy_from_json",
    "energy_of",
    "build_bundle",
    "verify_product",
    "verify_determinant",
    "verify_inverse_spin",
    "verify_energy_theorem",
    "verify_strace",
    "verify_duality",
    "wu_sum",
]

KINDS = ("constant", "omega", "spin", "explicit", "parametric")


@dataclass(frozen=True)
class EnergyAssignment:
    """Per-cell energies aligned with a system's order."""

    kind: str
    values: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown energy kind {self.kind!r}")
        if self.kind == "spin" and any(v not in (1, -1) for v in self.values):
            raise InvalidInputError("spin energies must be +1 or -1")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def is_spin(self) -> bool:
        return all(v in (1, -1) for v in self.values)

    def total(self):
        return sum(self.values, 0)

    def fermi(self):
        """Product of all energies."""
        return prod(self.values, start=1)

    def permuted(self, perm: Sequence[int]) -> "EnergyAssignment":
        return EnergyAssignment(self.kind, tuple(self.values[i] for i in perm))

    def to_json_obj(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            if isinstance(v, Poly):
                return v.to_json()
            return v

        return {"kind": self.kind, "values": [enc(v) for v in self.values]}


def constant_energy(S: SetSystem, c=1) -> EnergyAssignment:
    return EnergyAssignment("constant", (c,) * len(S))


def omega_energy(S: SetSystem) -> EnergyAssignment:
    return EnergyAssignment("omega", tuple(omega(c) for c in S))


def spin_energy(S: SetSystem, signs) -> EnergyAssignment:
    """``signs`` is a ``"+-+..."`` string or a sequence of +1/-1."""
    if isinstance(signs, str):
        try:
            vals = tuple({"+": 1, "-": -1}[ch] for ch in signs)
        except KeyError:
            raise InvalidInputError(f"spin string may only contain '+' and '-': {signs!r}") from None
    else:
        vals = tuple(int(v) for v in signs)
    if len(vals) != len(S):
        raise InvalidInputError(f"expected {len(S)} spins, got {len(vals)}")
    return EnergyAssignment("spin", vals)


def explicit_energy(S: SetSystem, values: Sequence) -> EnergyAssignment:
    if len(values) != len(S):
        raise InvalidInputError(f"expected {len(S)} energy values, got {len(values)}")
    vals = []
    for v in values:
        if isinstance(v, str):
            v = Fraction(v)
        if isinstance(v, Fraction) and v.denominator == 1:
            v = int(v)
        if isinstance(v, float):
            raise InvalidInputError("energies must be exact (int, rational or polynomial)")
        vals.append(v)
    return EnergyAssignment("explicit", tuple(vals))


def parametric_energy(S: SetSystem) -> EnergyAssignment:
    """``h_t(x) = -t^|x|`` so that ``E[A] = 1 - f_A(t)``."""
    return EnergyAssignment("parametric", tuple(laurent([-1], len(c)) for c in S))


def energy_from_json(S: SetSystem, obj: dict) -> EnergyAssignment:
    kind = obj.get("kind", "explicit")
    if kind == "constant":
        vals = obj.get("values", 1)
        if isinstance(vals, list):
            vals = vals[0] if vals else 1
        c = obj.get("value", vals)
        return constant_energy(S, Fraction(c) if isinstance(c, str) else c)
    if kind == "omega":
        return omega_energy(S)
    if kind == "spin":
        return spin_energy(S, obj["values"])
    if kind == "parametric":
        return parametric_energy(S)
    if kind == "explicit":
        vals = [Poly.from_json(v) if isinstance(v, dict) else v for v in obj["values"]]
        return explicit_energy(S, vals)
    raise InvalidInputError(f"unknown energy kind {kind!r}")


def load_energy(S: SetSystem, path: str | Path) -> EnergyAssignment:
    obj = json.loads(Path(path).read_text())
    if "energy" in obj:
        obj = obj["energy"]
    return energy_from_json(S, obj)


def energy_of(S: SetSystem, h: EnergyAssignment, A) -> object:
    """Sum of ``h`` over the cells ``A`` (which must belong to ``S``)."""
    total = 0
    for cell in A:
        try:
            total = total + h[S.index(cell)]
        except NotFoundError:
            raise NotFoundError(f"cell {cell} is not in the system") from None
    return total


# -- bundle ------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectionBundle:
    system: SetSystem
    energy: EnergyAssignment
    Lmm: ExactMatrix
    Lpp: ExactMatrix
    Lpm: ExactMatrix
    Lmp: ExactMatrix
    S: ExactMatrix
    g: ExactMatrix

    @property
    def L(self) -> ExactMatrix:
        return self.Lmm

    @property
    def n(self) -> int:
        return len(self.system)

    def matrix(self, which: str) -> ExactMatrix:
        try:
            return {"mm": self.Lmm, "pp": self.Lpp, "pm": self.Lpm, "mp": self.Lmp, "g": self.g, "S": self.S}[which]
        except KeyError:
            raise InvalidInputError(f"unknown matrix {which!r}") from None


def _sandwich(left: np.ndarray, h: Sequence, right: np.ndarray) -> np.ndarray:
    """``left @ diag(h) @ right`` for 0/1 integer ``left``/``right``."""
    n = len(h)
    if n and all(type(v) is int for v in h):
        bound = max(abs(v) for v in h) * n
        if bound < 2**62:
            return ((left * np.array(h, dtype=np.int64)[None, :]) @ right).astype(object)
    hv = np.empty(n, dtype=object)
    hv[:] = list(h)
    return (left.astype(object) * hv[None, :]) @ right.astype(object)


def build_bundle(S: SetSystem, h: EnergyAssignment, *, check_order: bool = True) -> ConnectionBundle:
    """All connection matrices of the energized system ``(S, h)``.

    ``Z[x, u] = [u subset of x]`` gives ``Lmm = Z H Z^T``, ``Lpp = Z^T H Z``,
    ``Lpm = Z^T H Z^T`` and ``Lmp = Z H Z``. With ``check_order`` the system
    must list every cell after its strict subsets, the basis in which ``Lmp``
    is lower triangular.
    """
    if len(h) != len(S):
        raise InvalidInputError(f"energy has {len(h)} values for {len(S)} cells")
    if check_order and not S.is_inclusion_ordered():
        raise InvalidStateError("system is not ordered with subsets before supersets; use canonical_order()")
    Z = S.zeta_matrix()
    vals = h.values
    ring = next((ring_of(v) for v in vals if isinstance(v, Poly)), None)
    Lmm = ExactMatrix(_sandwich(Z, vals, Z.T), ring)
    Lpp = ExactMatrix(_sandwich(Z.T, vals, Z), ring)
    Lpm = ExactMatrix(_sandwich(Z.T, vals, Z.T), ring)
    Lmp = ExactMatrix(_sandwich(Z, vals, Z), ring)
    w = np.array([omega(c) for c in S], dtype=object)
    Smat = ExactMatrix.diag(list(w))
    g = ExactMatrix(Lpp.a * w[:, None] * w[None, :], ring)
    return ConnectionBundle(S, h, Lmm, Lpp, Lpm, Lmp, Smat, g)


# -- verifications -----------------------------------------------------------


def _needs_simplicial(S: SetSystem) -> tuple[bool, str]:
    if S.simplicial and S.is_inclusion_ordered():
        return True, ""
    if not S.simplicial:
        return False, "hypothesis: simplicial complex (reported only)"
    return False, "hypothesis: subsets listed before supersets (reported only)"


def verify_product(S: SetSystem, h: EnergyAssignment) -> Report:
    """``L g`` is lower triangular with diagonal ``h(x)^2`` on ordered complexes."""
    rep = Report("product")
    B = build_bundle(S, h, check_order=False)
    P = B.Lmm @ B.g
    ok, note = _needs_simplicial(S)
    squares = [v * v for v in h.values]
    rep.add("Lg lower triangular", P.is_lower_triangular(), applicable=ok, note=note)
    rep.add("Lg diagonal = h^2", P.diagonal() == squares, expected=squares, got=P.diagonal(), applicable=ok, note=note)
    rep.info["Lg"] = P
    rep.info["below_diagonal"] = {
        f"{i},{j}": P[i, j] for i in range(P.n) for j in range(i) if P[i, j] != 0
    }
    return rep


def verify_determinant(S: SetSystem, h: EnergyAssignment, bundle: ConnectionBundle | None = None) -> Report:
    """``det`` of all four connection matrices and of ``g`` equals the product of energies."""
    rep = Report("determinant")
    B = bundle or build_bundle(S, h, check_order=False)
    expected = h.fermi()
    applicable = not S.has_empty
    note = "" if applicable else "system contains the empty cell (reported only)"
    for name in ("Lmm", "Lpp", "Lpm", "Lmp", "g"):
        d = det_exact(getattr(B, name))
        rep.add(f"det({name}) = prod h", d == expected, expected, d, applicable, note)
    if h.is_spin:
        for name in ("Lmm", "Lpp", "Lpm", "Lmp", "g"):
            M = getattr(B, name)
            d = det_exact(M)
            rep.add(f"{name} unimodular", M.ring == "int" and d in (1, -1), (1, -1), d, applicable, note)
    return rep


def verify_inverse_spin(S: SetSystem, h: EnergyAssignment) -> Report:
    """For +-1 energies ``g`` inverts ``L``.

    Asserted on simplicial complexes; on other sets of sets both products
    are computed and a failure is reported as a finding.
    """
    rep = Report("inverse")
    if not h.is_spin:
        rep.add("g L = I", False, applicable=False, note="hypothesis: energies in {-1, 1}")
        return rep
    B = build_bundle(S, h, check_order=False)
    I = ExactMatrix.identity(B.n)
    gl, lg = B.g @ B.Lmm, B.Lmm @ B.g
    ok, note = _needs_simplicial(S)
    if not S.simplicial:
        note = "general set of sets: tested, not asserted"
    rep.add("g L = I", gl == I, got=gl, applicable=ok, note=note)
    rep.add("L g = I", lg == I, got=lg, applicable=ok, note=note)
    return rep


def verify_energy_theorem(S: SetSystem, h: EnergyAssignment, bundle: ConnectionBundle | None = None) -> Report:
    """Sum of all entries of ``g`` is the total energy; row sums equal ``omega(x) g(x, x)``."""
    rep = Report("energy")
    B = bundle or build_bundle(S, h, check_order=False)
    ok = S.simplicial
    note = "" if ok else "hypothesis: simplicial complex (reported only)"
    E = h.total()
    tot = B.g.total()
    rep.add("sum g = E[G]", tot == E, E, tot, ok, note)
    rows = B.g.row_sums()
    selfint = [omega(c) * d for c, d in zip(S, B.g.diagonal())]
    rep.add("row sums = omega(x) g(x,x)", rows == selfint, selfint, rows, ok, note)
    return rep


def verify_strace(S: SetSystem, h: EnergyAssignment, bundle: ConnectionBundle | None = None) -> Report:
    rep = Report("strace")
    B = bundle or build_bundle(S, h, check_order=False)
    ok = S.simplicial
    note = "" if ok else "hypothesis: simplicial complex (reported only)"
    E = h.total()
    st = (B.S @ B.g).trace()
    rep.add("str(g) = E[G]", st == E, E, st, ok, note)
    return rep


def verify_duality(S: SetSystem, h: EnergyAssignment) -> Report:
    """The dual system swaps ``Lmm`` and ``Lpp`` (energies carried by complements)."""
    rep = Report("dual")
    D = boolean_dual(S)
    B = build_bundle(S, h, check_order=False)
    BD = build_bundle(D, h, check_order=False)
    rep.add("Lmm(dual) = Lpp", BD.Lmm == B.Lpp, got=BD.Lmm, expected=B.Lpp)
    rep.add("Lpp(dual) = Lmm", BD.Lpp == B.Lmm, got=BD.Lpp, expected=B.Lmm)
    canon = canonical_order(D)
    perm = D.permutation_to(canon)
    BC = build_bundle(canon, h.permuted(perm), check_order=False)
    rep.add("canonical reorder consistent", BC.Lmm == B.Lpp.permuted(perm))
    rep.info["dual"] = [list(c) for c in D]
    return rep


def wu_sum(S: SetSystem, h: EnergyAssignment):
    """Sum of the entries of ``S L S``."""
    B = build_bundle(S, h, check_order=False)
    w = [omega(c) for c in S]
    return sum(w[i] * w[j] * B.Lmm[i, j] for i in range(B.n) for j in range(B.n))
