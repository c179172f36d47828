"""Multigraphs whose adjacency matrices are the connection matrices at energy 1."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .energize import EnergyAssignment, build_bundle, constant_energy
from .errors import InvalidInputError
from .exact import ExactMatrix, charpoly_exact, mat_mul
from .report import Report
from .setsys import Cell, SetSystem, make_cell
from .spectra import palindrome_class

__all__ = [
    "Multigraph",
    "multigraphs_from",
    "node_name",
    "export_dot",
    "import_dot",
    "export_json",
    "import_json",
    "closed_walk_counts",
    "path_symmetry_check",
]


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on cells; ``mult[i, i]`` counts loops at node ``i``."""

    nodes: tuple[Cell, ...]
    mult: ExactMatrix

    def __post_init__(self):
        if self.mult.n != len(self.nodes):
            raise InvalidInputError("multiplicity matrix does not match the node list")
        if self.mult.ring != "int" or not self.mult.is_symmetric():
            raise InvalidInputError("multiplicities must form a symmetric integer matrix")
        if any(v < 0 for row in self.mult.tolist() for v in row):
            raise InvalidInputError("multiplicities must be non-negative")

    @cached_property
    def charpoly(self) -> list:
        return charpoly_exact(self.mult)

    def edge_count(self) -> int:
        M = self.mult.to_int64()
        return int(np.triu(M).sum())


def multigraphs_from(S: SetSystem, h: EnergyAssignment | None = None) -> tuple[Multigraph, Multigraph]:
    """``(Gamma_mm, Gamma_pp)`` with adjacency ``Lmm`` and ``Lpp``."""
    h = constant_energy(S, 1) if h is None else h
    B = build_bundle(S, h, check_order=False)
    for M in (B.Lmm, B.Lpp):
        if M.ring != "int" or any(v < 0 for row in M.tolist() for v in row):
            raise InvalidInputError("connection matrix has entries that are not non-negative integers")
    return Multigraph(S.cells, B.Lmm), Multigraph(S.cells, B.Lpp)


def node_name(cell: Cell) -> str:
    return "s{" + ",".join(map(str, cell)) + "}"


def export_dot(G: Multigraph, name: str = "G") -> str:
    """DOT text with one ``--`` line per unit of multiplicity."""
    lines = [f"graph {name} {{"]
    names = [node_name(c) for c in G.nodes]
    for nm in names:
        lines.append(f'  "{nm}";')
    M = G.mult.tolist()
    for i in range(len(names)):
        for j in range(i, len(names)):
            for _ in range(int(M[i][j])):
                lines.append(f'  "{names[i]}" -- "{names[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*"s\{([0-9,]*)\}"\s*;\s*$')
_EDGE = re.compile(r'^\s*"s\{([0-9,]*)\}"\s*--\s*"s\{([0-9,]*)\}"\s*;\s*$')


def _parse_cell(body: str) -> Cell:
    return make_cell(int(a) for a in body.split(",") if a)


def import_dot(text: str) -> Multigraph:
    """Inverse of :func:`export_dot`."""
    nodes: list[Cell] = []
    edges: list[tuple[Cell, Cell]] = []
    for line in text.splitlines():
        if m := _EDGE.match(line):
            edges.append((_parse_cell(m.group(1)), _parse_cell(m.group(2))))
        elif m := _NODE.match(line):
            nodes.append(_parse_cell(m.group(1)))
    index = {c: i for i, c in enumerate(nodes)}
    M = np.zeros((len(nodes), len(nodes)), dtype=np.int64)
    for a, b in edges:
        if a not in index or b not in index:
            raise InvalidInputError(f"edge between undeclared nodes {a}, {b}")
        i, j = index[a], index[b]
        M[i, j] += 1
        if i != j:
            M[j, i] += 1
    return Multigraph(tuple(nodes), ExactMatrix(M))


def export_json(G: Multigraph) -> str:
    return json.dumps({"nodes": [list(c) for c in G.nodes], "mult": G.mult.tolist()})


def import_json(text: str) -> Multigraph:
    obj = json.loads(text)
    return Multigraph(tuple(make_cell(c) for c in obj["nodes"]), ExactMatrix(obj["mult"]))


def closed_walk_counts(G: Multigraph, kmax: int) -> list[int]:
    """``tr(M^k)`` for ``k = 1..kmax``: closed walks of each length."""
    out = []
    P = G.mult
    for k in range(1, kmax + 1):
        if k > 1:
            P = mat_mul(P, G.mult)
        out.append(P.trace())
    return out


def path_symmetry_check(G: Multigraph) -> Report:
    """Classify the characteristic polynomial coefficients of the adjacency matrix."""
    rep = Report("path symmetry")
    cls = palindrome_class(G.charpoly)
    rep.add("charpoly coefficients symmetric", cls != "neither", "palindromic or anti-palindromic", cls)
    rep.info["charpoly"] = G.charpoly
    rep.info["class"] = cls
    return rep
