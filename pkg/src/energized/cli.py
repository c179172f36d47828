"""Command-line front end.

Exit codes: 0 success, 2 a verified identity failed, 3 nothing applicable
was checked, 64 usage error, 66 unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import calculus, energize, graphs, param, spectra
from .energize import EnergyAssignment, build_bundle
from .exact import charpoly_exact, det_exact
from .errors import InvalidInputError, PreconditionError, ResourceLimitError
from .report import Report, jsonable
from .setsys import (
    SetSystem,
    complete_complex,
    cycle_complex,
    decorated_path,
    downward_closure,
    grid_whitney,
    random_sets,
)

EX_OK, EX_FAIL, EX_NA, EX_USAGE, EX_NOINPUT = 0, 2, 3, 64, 66

SUITES = ("product", "det", "inverse", "energy", "strace", "signs", "isospectral",
          "palindrome", "dual", "tensor", "gaussbonnet", "ph")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _read_system(path: str) -> tuple[SetSystem, dict | None]:
    text = _read_text(path)
    try:
        stripped = text.lstrip()
        if stripped.startswith(("{", "[")):
            obj = json.loads(text)
            energy = obj.get("energy") if isinstance(obj, dict) else None
            return SetSystem.from_json_obj(obj), energy
        return SetSystem.from_text(text), None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse {path}: {exc}") from None


def parse_energy(spec: str | None, S: SetSystem, embedded: dict | None = None) -> EnergyAssignment:
    """Energy SPEC: ``constant:c``, ``omega``, ``spin:+-..``, ``explicit:file.json`` or ``param``."""
    if spec is None:
        if embedded is not None:
            return energize.energy_from_json(S, embedded)
        return energize.constant_energy(S, 1)
    kind, _, arg = spec.partition(":")
    if kind == "constant":
        try:
            c = Fraction(arg or "1")
        except ValueError:
            raise UsageError(f"bad constant energy {arg!r}") from None
        return energize.constant_energy(S, int(c) if c.denominator == 1 else c)
    if kind == "omega":
        return energize.omega_energy(S)
    if kind == "spin":
        return energize.spin_energy(S, arg)
    if kind == "explicit":
        text = _read_text(arg)
        try:
            obj = json.loads(text)
        except ValueError as exc:
            raise InputError(f"cannot parse {arg}: {exc}") from None
        if isinstance(obj, list):
            return energize.explicit_energy(S, obj)
        return energize.energy_from_json(S, obj.get("energy", obj))
    if kind == "param":
        return energize.parametric_energy(S)
    raise UsageError(f"unknown energy spec {spec!r}")


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(jsonable(obj)) + "\n")


def _report_exit(reports: list[Report]) -> int:
    _dump({"reports": [r.to_json_obj() for r in reports]})
    applicable = [c for r in reports for c in r.applicable]
    if any(not c.holds for c in applicable):
        return EX_FAIL
    return EX_OK if applicable else EX_NA


def _na(title: str, reason: str) -> Report:
    rep = Report(title)
    rep.add(title, False, applicable=False, note=reason)
    return rep


# -- subcommands --------------------------------------------------------------


def cmd_generate(a) -> int:
    if a.complete is not None:
        S = complete_complex(a.complete)
    elif a.cycle is not None:
        S = cycle_complex(a.cycle)
    elif a.grid is not None:
        S = grid_whitney(*a.grid)
    elif a.closure is not None:
        S = downward_closure(_read_system(a.closure)[0].cells)
    elif a.random is not None:
        S = random_sets(*a.random, seed=a.seed)
    else:
        S = decorated_path(a.decorated)
    _dump(S.to_json_obj())
    return EX_OK


def cmd_matrices(a) -> int:
    S, emb = _read_system(a.file)
    h = parse_energy(a.energy, S, emb)
    M = build_bundle(S, h, check_order=False).matrix(a.which)
    if a.format == "csv":
        sys.stdout.write(M.to_csv())
    else:
        _dump(M.to_json_obj())
    return EX_OK


def _suite(name: str, S: SetSystem, h: EnergyAssignment) -> Report:
    numeric = all(not hasattr(v, "vars") for v in h.values)
    if name == "product":
        return energize.verify_product(S, h)
    if name == "det":
        return energize.verify_determinant(S, h)
    if name == "inverse":
        if not h.is_spin:
            return _na("inverse", "energy is not a spin energy")
        return energize.verify_inverse_spin(S, h)
    if name == "energy":
        return energize.verify_energy_theorem(S, h)
    if name == "strace":
        return energize.verify_strace(S, h)
    if name == "signs":
        if not numeric:
            return _na("signs", "energies are not numbers")
        if any(v == 0 for v in h.values):
            return _na("signs", "some energy is zero")
        return spectra.verify_sign_theorem(S, h)
    if name == "isospectral":
        if h.values and set(h.values) != {1}:
            return _na("isospectral", "needs constant energy 1")
        return spectra.verify_isospectral(S)
    if name == "palindrome":
        if h.values and set(h.values) != {1}:
            return _na("palindrome", "needs constant energy 1")
        Gm, Gp = graphs.multigraphs_from(S)
        rep = graphs.path_symmetry_check(Gm)
        rep.add("charpoly(Gamma_mm) = charpoly(Gamma_pp)", Gm.charpoly == Gp.charpoly)
        if not S.simplicial:
            rep.checks[0].applicable = False
            rep.checks[0].note = "general set of sets: tested, not asserted"
        return rep
    if name == "dual":
        return energize.verify_duality(S, h)
    if name == "tensor":
        if not numeric:
            return _na("tensor", "energies are not numbers")
        # pair with the energized edge; a self-product costs |S|^2 cells
        K2 = complete_complex(2)
        edge = (K2, energize.omega_energy(K2))
        rep = calculus.verify_tensor_representation((S, h), edge)
        return rep.extend(calculus.verify_ring((S, h), edge))
    if name == "gaussbonnet":
        if not numeric:
            return _na("gaussbonnet", "energies are not numbers")
        return calculus.verify_gauss_bonnet(S, h)
    if name == "ph":
        return calculus.verify_poincare_hopf(S, h)
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(a) -> int:
    S, emb = _read_system(a.file)
    h = parse_energy(a.energy, S, emb)
    names = SUITES if a.suite == "all" else (a.suite,)
    reports = []
    for name in names:
        try:
            reports.append(_suite(name, S, h))
        except PreconditionError as exc:
            reports.append(_na(name, str(exc)))
    return _report_exit(reports)


def cmd_spectra(a) -> int:
    S, emb = _read_system(a.file)
    h = parse_energy(a.energy, S, emb)
    M = build_bundle(S, h, check_order=False).matrix(a.which)
    if a.eigs:
        _dump(spectra.eig_sym(M).tolist())
    elif a.charpoly:
        _dump(charpoly_exact(M))
    elif a.zeta is not None:
        _dump(spectra.spectral_zeta(spectra.eig_sym(M), complex(*a.zeta)))
    elif a.ihara is not None:
        _dump(spectra.ihara_zeta(M, complex(*a.ihara)))
    elif a.theta is not None:
        re, im, m = a.theta
        _dump(spectra.theta_truncated(M, complex(re, im), int(m)))
    elif a.eig1mult:
        _dump(spectra.eig1_multiplicity(S))
    else:
        cb, vb = a.qform
        _dump(sorted(spectra.quadratic_form_values(M, cb, vb)))
    return EX_OK


def cmd_multigraph(a) -> int:
    S, _ = _read_system(a.file)
    Gm, Gp = graphs.multigraphs_from(S)
    G = Gm if a.which == "mm" else Gp
    sys.stdout.write(graphs.export_dot(G) if a.format == "dot" else graphs.export_json(G) + "\n")
    return EX_OK


def cmd_param(a) -> int:
    S, _ = _read_system(a.file)
    if a.verify:
        return _report_exit([param.verify_green_star(S), param.verify_param_energy(S), param.verify_param_det(S)])
    if a.deform:
        return _report_exit([param.verify_deformation(S)])
    t = Fraction(a.eval.split("=", 1)[-1])
    t = int(t) if t.denominator == 1 else t
    if t == 0:
        raise UsageError("t = 0 is a pole of L_t")
    Lt, gt = param.build_param(S).at(t)
    _dump({"t": t, "Lt": Lt.to_json_obj(), "gt": gt.to_json_obj(),
           "det_gt": det_exact(gt), "charpoly_gt": charpoly_exact(gt)})
    return EX_OK


def cmd_ring(a) -> int:
    pair = a.union or a.product
    systems = []
    for path in pair:
        S, emb = _read_system(path)
        systems.append((S, parse_energy(None, S, emb)))
    A, B = systems
    if a.verify_tensor:
        if a.union:
            raise UsageError("--verify-tensor goes with --product")
        return _report_exit([calculus.verify_tensor_representation(A, B), calculus.verify_ring(A, B)])
    S, h = calculus.disjoint_union(A, B) if a.union else calculus.cartesian_product(A, B)
    out = S.to_json_obj()
    out["energy"] = h.to_json_obj()
    _dump(out)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="energized", description="Energized sets of sets: connection matrices and their identities.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="emit a named set system as JSON")
    m = g.add_mutually_exclusive_group(required=True)
    m.add_argument("--complete", type=int, metavar="N")
    m.add_argument("--cycle", type=int, metavar="N")
    m.add_argument("--grid", type=int, nargs=2, metavar=("W", "H"))
    m.add_argument("--closure", metavar="FILE")
    m.add_argument("--random", type=int, nargs=2, metavar=("N", "M"))
    m.add_argument("--decorated", metavar="BITS")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_generate)

    def with_file(sp, energy=True):
        sp.add_argument("file", nargs="?", default="-", help="system file (JSON or text), '-' for stdin")
        if energy:
            sp.add_argument("--energy", metavar="SPEC")

    mx = sub.add_parser("matrices", help="emit a connection matrix")
    with_file(mx)
    mx.add_argument("--which", choices=("mm", "pp", "pm", "mp", "g"), default="mm")
    mx.add_argument("--format", choices=("json", "csv"), default="json")
    mx.set_defaults(func=cmd_matrices)

    v = sub.add_parser("verify", help="check identities and emit a JSON report")
    with_file(v)
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectra", help="eigenvalues, characteristic polynomial, zeta and theta")
    with_file(s)
    s.add_argument("--which", choices=("mm", "pp", "g"), default="mm")
    q = s.add_mutually_exclusive_group(required=True)
    q.add_argument("--eigs", action="store_true")
    q.add_argument("--charpoly", action="store_true")
    q.add_argument("--zeta", type=float, nargs=2, metavar=("A", "B"))
    q.add_argument("--ihara", type=float, nargs=2, metavar=("A", "B"))
    q.add_argument("--theta", type=float, nargs=3, metavar=("RE", "IM", "M"))
    q.add_argument("--eig1mult", action="store_true")
    q.add_argument("--qform", type=int, nargs=2, metavar=("CB", "VB"))
    s.set_defaults(func=cmd_spectra)

    mg = sub.add_parser("multigraph", help="export the multigraph of Lmm or Lpp")
    with_file(mg, energy=False)
    mg.add_argument("--which", choices=("mm", "pp"), default="mm")
    mg.add_argument("--format", choices=("dot", "json"), default="dot")
    mg.set_defaults(func=cmd_multigraph)

    pa = sub.add_parser("param", help="the polynomial-parameter case")
    with_file(pa, energy=False)
    q = pa.add_mutually_exclusive_group(required=True)
    q.add_argument("--verify", action="store_true")
    q.add_argument("--deform", action="store_true")
    q.add_argument("--eval", metavar="t=VALUE")
    pa.set_defaults(func=cmd_param)

    r = sub.add_parser("ring", help="disjoint union or Cartesian product of two systems")
    q = r.add_mutually_exclusive_group(required=True)
    q.add_argument("--union", nargs=2, metavar=("A", "B"))
    q.add_argument("--product", nargs=2, metavar=("A", "B"))
    r.add_argument("--verify-tensor", action="store_true")
    r.set_defaults(func=cmd_ring)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EX_USAGE
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EX_NOINPUT
    except (InvalidInputError, PreconditionError, ResourceLimitError, ZeroDivisionError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
