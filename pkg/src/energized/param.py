"""The polynomial-parameter case ``h_t(x) = -t^|x|`` and the throttled (T, H) deformation."""
from __future__ import annotations

from dataclasses import dataclass

from .energize import build_bundle, constant_energy, explicit_energy, parametric_energy
from .errors import InvalidInputError, PreconditionError
from .exact import ExactMatrix, Poly, det_exact, laurent, principal_minor_sums, var
from .report import Report
from .setsys import SetSystem, _is_subset, f_poly_eval, omega
from .spectra import palindrome_class

__all__ = [
    "ParamBundle",
    "build_param",
    "verify_green_star",
    "verify_param_energy",
    "verify_param_det",
    "deform_throttled",
    "minor_sum_coefficients",
    "verify_deformation",
]

T_VAR = laurent([0, 1])


@dataclass(frozen=True)
class ParamBundle:
    system: SetSystem
    Lt: ExactMatrix
    gt: ExactMatrix
    convention: str = "code"

    def at(self, t) -> tuple[ExactMatrix, ExactMatrix]:
        """``(Lt, gt)`` with ``t`` substituted."""
        return self.Lt.substitute(t=t), self.gt.substitute(t=t)


def _require_simplicial(S: SetSystem) -> None:
    if not S.simplicial:
        raise PreconditionError("the parameter case needs a simplicial complex")


def build_param(S: SetSystem, convention: str = "code") -> ParamBundle:
    """Polynomial matrices ``g_t`` and ``L_t``.

    ``g_t(x,y) = w(x) w(y) (1 - f_{W+(x) & W+(y)}(t))`` and, for the default
    ``"code"`` convention, ``L_t(x,y) = 1 - f_{W-(x) & W-(y)}(t) / t^|x & y|``.
    ``convention="text"`` gives ``t^(1-|x & y|) (1 - f(t))`` instead, which
    differs by a factor ``t`` and is kept only for comparison.
    """
    if convention not in ("code", "text"):
        raise InvalidInputError(f"unknown convention {convention!r}")
    _require_simplicial(S)
    B = build_bundle(S, parametric_energy(S), check_order=False)
    n = len(S)
    # Lmm(x,y) = E[W-(x) & W-(y)] = 1 - f(t), Lpp likewise on stars
    L = [[None] * n for _ in range(n)]
    for i, x in enumerate(S.cells):
        for j, y in enumerate(S.cells):
            k = len(set(x) & set(y))
            e = B.Lmm[i, j]
            if convention == "code":
                L[i][j] = 1 - (1 - e) * laurent([1], -k)
            else:
                L[i][j] = laurent([1], 1 - k) * e
    return ParamBundle(S, ExactMatrix(L, "laurent"), B.g, convention)


def verify_green_star(S: SetSystem) -> Report:
    rep = Report("green star")
    P = build_param(S)
    n = len(S)
    rep.add("g_t L_t = I", P.gt @ P.Lt == ExactMatrix.identity(n, "laurent"))
    rep.add("L_t g_t = I", P.Lt @ P.gt == ExactMatrix.identity(n, "laurent"))
    return rep


def verify_param_energy(S: SetSystem) -> Report:
    rep = Report("parametrized energy")
    P = build_param(S)
    target = 1 - f_poly_eval(S, T_VAR)
    total = P.gt.total()
    rep.add("sum g_t = 1 - f_G(t)", total == target, target, total)
    w = [omega(c) for c in S]
    st = sum((w[i] * P.gt[i, i] for i in range(len(S))), 0)
    rep.add("tr(S g_t) = 1 - f_G(t)", st == target, target, st)
    rows = P.gt.row_sums()
    expect_rows = [w[i] * P.gt[i, i] for i in range(len(S))]
    rep.add("row sums = w(x) g_t(x,x)", rows == expect_rows, expect_rows, rows)
    return rep


def verify_param_det(S: SetSystem) -> Report:
    rep = Report("parametrized determinant")
    P = build_param(S)
    n = len(S)
    weight = sum(len(c) for c in S)
    expected = laurent([(-1) ** n], weight)
    dg = det_exact(P.gt)
    dL = det_exact(P.Lt)
    rep.add("det g_t = (-1)^n t^(sum |x|)", dg == expected, expected, dg)
    rep.add("det g_t det L_t = 1", dg * dL == 1, 1, dg * dL)
    text = laurent([1], 0)
    for c in S:
        text = text * laurent([(-1) ** len(c)], len(c))
    rep.add("det L_t = prod (-t)^|x| (text form)", dL == text, text, dL, applicable=False,
            note="product form, reported only")
    return rep


def deform_throttled(S: SetSystem, which: str = "mm") -> ExactMatrix:
    """Energy ``H`` on the last cell, 1 elsewhere; the last column is scaled by ``T``."""
    if not S.cells:
        raise InvalidInputError("empty system")
    last = S.cells[-1]
    if any(_is_subset(last, y) and y != last for y in S.cells):
        raise PreconditionError("the last cell must be maximal")
    if which not in ("mm", "pp"):
        raise InvalidInputError("which must be 'mm' or 'pp'")
    vars = ("T", "H")
    T, H = var("T", vars), var("H", vars)
    h = explicit_energy(S, [1] * (len(S) - 1) + [H])
    M = build_bundle(S, h, check_order=False).matrix(which)
    rows = M.tolist()
    for row in rows:
        row[-1] = row[-1] * T
    return ExactMatrix(rows, M.ring)


def minor_sum_coefficients(M: ExactMatrix) -> list:
    """Ascending coefficients of ``det(M + x I)``."""
    return principal_minor_sums(M)[::-1]


def _at(p, T, H):
    return p.substitute(T=T, H=H) if isinstance(p, Poly) else p


def verify_deformation(S: SetSystem) -> Report:
    rep = Report("deformation")
    p = minor_sum_coefficients(deform_throttled(S, "mm"))
    q = minor_sum_coefficients(deform_throttled(S, "pp"))
    multi = all(not isinstance(c, Poly) or c.is_multilinear() for c in p + q)
    rep.add("coefficients multilinear in T, H", multi)
    swapped = [c.swap("T", "H") if isinstance(c, Poly) else c for c in p]
    rep.add("q_{T,H} = p_{H,T}", q == swapped, swapped, q)
    diff = [a - b for a, b in zip(q, p)]
    rep.add("q_{T,H} - p_{T,H} palindromic", palindrome_class(diff) == "palindromic", got=[str(d) for d in diff])
    p11 = [_at(c, 1, 1) for c in p]
    rep.add("p at (1,1) palindromic", palindrome_class(p11) == "palindromic", got=p11)
    p00 = [_at(c, 0, 0) for c in p]
    shifted = p00[0] == 0 and palindrome_class(p00[1:]) == "palindromic"
    rep.add("p at (0,0) is a shifted palindrome", shifted, got=p00)
    base = build_bundle(S, constant_energy(S, 1), check_order=False).Lmm
    rep.add("(T,H) = (1,1) gives the energy-1 matrix", deform_throttled(S, "mm").substitute(T=1, H=1) == base)
    rep.info["p"] = [str(c) for c in p]
    rep.info["q"] = [str(c) for c in q]
    return rep
