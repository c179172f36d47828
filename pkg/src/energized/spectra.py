"""Floating-point spectra and the analytic functions built from them.

Eigenvalues come from a cyclic Jacobi solver on the double-precision image
of an exact symmetric matrix. Everything that can be decided exactly
(characteristic polynomials, ranks, signs of determinants) is decided in
:mod:`energized.exact` and only cross-checked here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .energize import build_bundle, constant_energy, EnergyAssignment
from .errors import InvalidInputError, PreconditionError, ResourceLimitError
from .exact import ExactMatrix, charpoly_exact, det_exact, rank_exact
from .report import Report
from .setsys import SetSystem

__all__ = [
    "Spectrum",
    "jacobi_eigh",
    "eig_sym",
    "inertia",
    "verify_sign_theorem",
    "palindrome_class",
    "sign_rule_holds",
    "verify_isospectral",
    "orthogonal_conjugator",
    "spectral_zeta",
    "ihara_poly",
    "ihara_zeta",
    "verify_zeta_functional_equation",
    "theta_truncated",
    "eig1_multiplicity",
    "quadratic_form_values",
]

DEFAULT_BUDGET = 20_000_000


@dataclass
class Spectrum:
    eigenvalues: np.ndarray
    source: str = ""
    tolerance: float = 0.0
    vectors: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)

    def tolist(self) -> list[float]:
        return [float(x) for x in self.eigenvalues]


def _as_float(A) -> np.ndarray:
    if isinstance(A, ExactMatrix):
        return A.to_float()
    return np.asarray(A, dtype=float)


def jacobi_eigh(A: np.ndarray, tol: float = 1e-14, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigen-decomposition of a real symmetric matrix.

    Returns ``(w, V)`` with ``A V = V diag(w)``, ``w`` ascending. Sweeps run
    in row-major (p, q) order until the off-diagonal Frobenius norm drops
    below ``tol * ||A||_F``, or stop decreasing once it is within a few
    hundred units of roundoff.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    if n <= 1:
        return A.diagonal().copy(), V
    scale = np.linalg.norm(A)
    if scale == 0.0:
        return np.zeros(n), V
    target = tol * scale
    floor = 1e-13 * n * scale
    last = math.inf
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= target or (off <= floor and off >= 0.5 * last):
            break
        last = off
        skip = 1e-18 * scale
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e100:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def eig_sym(A, source: str = "", vectors: bool = False) -> Spectrum:
    """Eigenvalues (ascending) of a symmetric exact or float matrix."""
    if isinstance(A, ExactMatrix) and not A.is_symmetric():
        raise InvalidInputError("eig_sym needs a symmetric matrix")
    M = _as_float(A)
    if not isinstance(A, ExactMatrix) and not np.allclose(M, M.T, rtol=0, atol=0):
        raise InvalidInputError("eig_sym needs a symmetric matrix")
    w, V = jacobi_eigh(M)
    tau = 1e-9 * (np.abs(M).sum(axis=1).max() if M.size else 0.0)
    return Spectrum(w, source, tau, V if vectors else None)


def inertia(A, rel_tol: float = 1e-9) -> tuple[int, int, int]:
    """(negative, zero, positive) eigenvalue counts with ``tau = rel_tol * ||A||_inf``."""
    M = _as_float(A)
    tau = rel_tol * (np.abs(M).sum(axis=1).max() if M.size else 0.0)
    w = eig_sym(A).eigenvalues
    return int(np.sum(w < -tau)), int(np.sum(np.abs(w) <= tau)), int(np.sum(w > tau))


def verify_sign_theorem(S: SetSystem, h: EnergyAssignment) -> Report:
    """Negative eigenvalue counts of ``Lmm``, ``Lpp``, ``g`` equal the number of negative energies."""
    rep = Report("signs")
    vals = list(h.values)
    if any(not isinstance(v, (int,)) and not hasattr(v, "denominator") for v in vals):
        rep.add("inertia matches signs of h", False, applicable=False, note="energies are not real numbers")
        return rep
    if any(v == 0 for v in vals):
        raise PreconditionError("sign theorem needs non-zero energies")
    B = build_bundle(S, h, check_order=False)
    neg = sum(1 for v in vals if v < 0)
    expected = (neg, 0, len(vals) - neg)
    for name in ("Lmm", "Lpp", "g"):
        M = getattr(B, name)
        got = inertia(M)
        rep.add(f"inertia({name})", got == expected, expected, got)
        d = det_exact(M)
        sign = 1 if d > 0 else -1 if d < 0 else 0
        rep.add(f"sign det({name}) = (-1)^negatives", sign == (-1) ** got[0], (-1) ** neg, sign)
    return rep


def palindrome_class(coeffs: Sequence) -> str:
    """'palindromic' if c_k = c_(n-k), 'anti-palindromic' if c_k = -c_(n-k), else 'neither'."""
    c = list(coeffs)
    if c == c[::-1]:
        return "palindromic"
    if c == [-x for x in c[::-1]]:
        return "anti-palindromic"
    return "neither"


def sign_rule_holds(coeffs: Sequence) -> bool:
    """``p_k = (-1)^n p_(n-k)`` for a degree-n coefficient list."""
    n = len(coeffs) - 1
    s = -1 if n % 2 else 1
    return all(coeffs[k] == s * coeffs[n - k] for k in range(n + 1))


def verify_isospectral(S: SetSystem) -> Report:
    """Constant energy 1: ``Lmm`` and ``Lpp`` share their characteristic polynomial.

    Positive definiteness is checked through the inertia. The reciprocal
    symmetry of the spectrum (charpoly obeying the ``(-1)^n`` palindrome rule)
    is asserted on simplicial complexes and reported for other sets of sets.
    """
    rep = Report("isospectral")
    h = constant_energy(S, 1)
    B = build_bundle(S, h, check_order=False)
    pm, pp = charpoly_exact(B.Lmm), charpoly_exact(B.Lpp)
    rep.add("charpoly(Lmm) = charpoly(Lpp)", pm == pp, pm, pp)
    n = B.n
    for name in ("Lmm", "Lpp"):
        got = inertia(getattr(B, name))
        rep.add(f"{name} positive definite", got == (0, 0, n), (0, 0, n), got)
    note = "" if S.simplicial else "general set of sets: tested, not asserted"
    rep.add("charpoly obeys p_k = (-1)^n p_(n-k)", sign_rule_holds(pm), got=pm,
            applicable=S.simplicial, note=note)
    rep.info["palindrome_class"] = palindrome_class(pm)
    rep.info["charpoly"] = pm
    return rep


def _fix_sign(v: np.ndarray) -> np.ndarray:
    # permutation-invariant sign choice: first non-negligible odd moment positive
    scale = np.abs(v).max()
    for k in (1, 3, 5, 7):
        m = np.sum(v**k)
        if abs(m) > 1e-8 * scale**k:
            return v if m > 0 else -v
    i = int(np.flatnonzero(np.abs(v) > 1e-8 * scale)[0])
    return v if v[i] > 0 else -v


def orthogonal_conjugator(S: SetSystem, gap_tol: float = 1e-8) -> np.ndarray:
    """Orthogonal ``O`` with ``O Lmm = Lpp O`` for constant energy 1.

    Eigenvectors of both matrices are paired by ascending eigenvalue and
    signed by a permutation-invariant rule, so that a basis permutation
    relating the two matrices is recovered exactly. Repeated eigenvalues
    make the pairing ambiguous and raise :class:`PreconditionError`.
    """
    B = build_bundle(S, constant_energy(S, 1), check_order=False)
    su = eig_sym(B.Lmm, vectors=True)
    sv = eig_sym(B.Lpp, vectors=True)
    w = su.eigenvalues
    scale = max(1.0, float(np.abs(w).max())) if len(w) else 1.0
    if len(w) > 1:
        gaps = np.diff(w)
        if np.any(gaps <= gap_tol * scale):
            clusters, cur = [], 1
            for g in gaps:
                if g <= gap_tol * scale:
                    cur += 1
                else:
                    clusters.append(cur)
                    cur = 1
            clusters.append(cur)
            raise PreconditionError(f"repeated eigenvalues; multiplicity structure {clusters}")
    U = np.column_stack([_fix_sign(u) for u in su.vectors.T]) if len(w) else su.vectors
    V = np.column_stack([_fix_sign(v) for v in sv.vectors.T]) if len(w) else sv.vectors
    O = V @ U.T
    Lm, Lp = B.Lmm.to_float(), B.Lpp.to_float()
    resid = np.abs(O @ Lm - Lp @ O).max() if len(w) else 0.0
    if resid >= 1e-8 * max(1.0, np.abs(Lm).max()):
        raise PreconditionError(f"conjugation residual too large: {resid:.3g}")
    return O


def spectral_zeta(spec, s: complex) -> complex:
    """``sum_k lambda_k^(-s)`` with ``lambda^(-s) = exp(-s log lambda)``."""
    w = spec.eigenvalues if isinstance(spec, Spectrum) else np.asarray(spec, dtype=float)
    if np.any(w <= 0):
        raise InvalidInputError("spectral zeta needs positive eigenvalues")
    return complex(np.sum(np.exp(-complex(s) * np.log(w))))


def ihara_poly(A) -> list:
    """Exact coefficients ``[q_0, ..., q_n]`` of ``det(1 - s A) = sum q_k s^k``."""
    if isinstance(A, ExactMatrix):
        d = charpoly_exact(A)
    else:
        d = list(A)
    n = len(d) - 1
    sign = -1 if n % 2 else 1
    return [sign * c for c in d]


def ihara_zeta(A, s: complex) -> complex:
    """``1 / det(1 - s A)`` from exact coefficients, evaluated in complex doubles.

    ``A`` is an exact matrix or its ``charpoly_exact`` coefficient list.
    """
    q = ihara_poly(A)
    s = complex(s)
    val = 0j
    for c in reversed(q):
        val = val * s + complex(c)
    scale = sum(abs(complex(c)) * abs(s) ** k for k, c in enumerate(q))
    if abs(val) <= 1e-14 * max(scale, 1.0):
        raise ZeroDivisionError(f"Ihara zeta has a pole at s = {s}")
    return 1.0 / val


def verify_zeta_functional_equation(S: SetSystem, grid: Iterable[tuple[float, float]] | None = None,
                                    tol: float = 1e-9) -> Report:
    """Reflection symmetry of the spectral and Ihara zeta functions (energy 1).

    Asserted: ``zeta(-a+ib) = conj(zeta(a+ib))`` within ``tol`` and
    ``|s^n q(1/s)| = |q(s)|`` (relative ``tol``) for ``q(s) = det(1 - s L)``.
    The literal equality ``zeta(a+ib) = zeta(-a+ib)`` is reported only.
    """
    if grid is None:
        vals = np.linspace(-2.0, 2.0, 5)
        grid = [(a, b) for a in vals for b in vals]
    grid = list(grid)
    rep = Report("zeta")
    B = build_bundle(S, constant_energy(S, 1), check_order=False)
    spec = eig_sym(B.Lmm)
    q = ihara_poly(B.Lmm)
    n = len(q) - 1
    worst_conj = worst_lit = worst_ihara = 0.0

    def qval(s):
        v = 0j
        for c in reversed(q):
            v = v * s + complex(c)
        return v

    for a, b in grid:
        z1 = spectral_zeta(spec, complex(a, b))
        z2 = spectral_zeta(spec, complex(-a, b))
        worst_conj = max(worst_conj, abs(z2 - z1.conjugate()))
        worst_lit = max(worst_lit, abs(z2 - z1))
        s = complex(a, b)
        if s != 0:
            lhs = abs(s**n * qval(1 / s))
            rhs = abs(qval(s))
            worst_ihara = max(worst_ihara, abs(lhs - rhs) / max(1.0, rhs))
    rep.add("zeta(-a+ib) = conj zeta(a+ib)", worst_conj <= tol, f"<= {tol}", worst_conj)
    rep.add("|s^n q(1/s)| = |q(s)|", worst_ihara <= tol, f"<= {tol}", worst_ihara)
    rep.add("zeta(a+ib) = zeta(-a+ib) (literal)", worst_lit <= tol, f"<= {tol}", worst_lit,
            applicable=False, note="literal form, reported only")
    rep.add("zeta(0) = n", abs(spectral_zeta(spec, 0) - len(spec)) == 0, len(spec), spectral_zeta(spec, 0))
    z0 = ihara_zeta(B.Lmm, 0)
    rep.add("zeta_I(0) = 1", z0 == 1, 1, z0)
    return rep


def _box(n: int, M: int, budget: int, chunk: int = 200_000):
    base = 2 * M + 1
    total = base**n
    if n * total > budget:
        raise ResourceLimitError(f"box of {total} points in dimension {n} exceeds budget {budget}")
    powers = base ** np.arange(n, dtype=np.int64)
    for start in range(0, total, chunk):
        k = np.arange(start, min(total, start + chunk), dtype=np.int64)
        yield (k[:, None] // powers[None, :]) % base - M


def _quad_values(L: np.ndarray, M: int, budget: int):
    for m in _box(L.shape[0], M, budget):
        yield np.einsum("ij,jk,ik->i", m, L, m)


def theta_truncated(L, z: complex, M: int, budget: int = DEFAULT_BUDGET) -> complex:
    """Partial theta sum ``sum exp(2 pi i z m.Lm)`` over the box ``|m_i| <= M``.

    No bound on the truncation error is provided.
    """
    if complex(z).imag <= 0:
        raise InvalidInputError("theta needs Im(z) > 0")
    if M < 0:
        raise InvalidInputError("truncation M must be >= 0")
    Lm = _as_float(L) if isinstance(L, ExactMatrix) else np.asarray(L, dtype=float)
    total = 0j
    factor = 2j * math.pi * complex(z)
    for q in _quad_values(Lm, M, budget):
        total += complex(np.sum(np.exp(factor * q)))
    return total


def eig1_multiplicity(S: SetSystem) -> int:
    """Multiplicity of eigenvalue 1 of ``Lmm`` with energy 1, via exact rank."""
    B = build_bundle(S, constant_energy(S, 1), check_order=False)
    return B.n - rank_exact(B.Lmm - ExactMatrix.identity(B.n))


def quadratic_form_values(L, coord_bound: int = 6, value_bound: int = 20,
                          budget: int = DEFAULT_BUDGET) -> set[int]:
    """Values ``m.Lm <= value_bound`` over integer vectors with ``|m_i| <= coord_bound``."""
    if isinstance(L, ExactMatrix):
        if L.ring != "int":
            raise InvalidInputError("quadratic form needs an integer matrix")
        Li = L.to_int64()
    else:
        Li = np.asarray(L, dtype=np.int64)
    out: set[int] = set()
    for q in _quad_values(Li, coord_bound, budget):
        out.update(int(v) for v in np.unique(q[q <= value_bound]))
    return out
