"""Finite sets of sets: construction, ordering, duality and named families.

A cell is a sorted tuple of non-negative integer atom labels. A
:class:`SetSystem` is an ordered tuple of distinct cells; the order is the
basis in which every matrix of the package is written.
"""
from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidInputError, NotFoundError

Cell = tuple[int, ...]

__all__ = [
    "Cell",
    "SetSystem",
    "make_cell",
    "omega",
    "canonical_key",
    "downward_closure",
    "canonical_order",
    "star",
    "core",
    "boolean_dual",
    "f_vector",
    "f_poly_eval",
    "atoms",
    "complete_complex",
    "cycle_complex",
    "grid_whitney",
    "random_sets",
    "random_family",
    "decorated_path",
    "load_system",
]


def make_cell(atoms: Iterable[int]) -> Cell:
    cell = tuple(sorted(set(int(a) for a in atoms)))
    if any(a < 0 for a in cell):
        raise InvalidInputError(f"atom labels must be non-negative: {cell}")
    return cell


def omega(cell: Cell) -> int:
    """(-1)^dim: +1 for odd cardinality, -1 for even (including the empty cell)."""
    return 1 if len(cell) % 2 else -1


def canonical_key(cell: Cell):
    return (len(cell), cell)


def _is_subset(a: Cell, b: Cell) -> bool:
    # merge walk over two sorted tuples
    i = 0
    nb = len(b)
    for x in a:
        while i < nb and b[i] < x:
            i += 1
        if i == nb or b[i] != x:
            return False
        i += 1
    return True


class SetSystem:
    """Ordered collection of distinct cells."""

    __slots__ = ("cells", "_index", "_simplicial")

    def __init__(self, cells: Iterable[Iterable[int]], allow_empty: bool = False):
        cs = tuple(make_cell(c) for c in cells)
        if not allow_empty and any(len(c) == 0 for c in cs):
            raise InvalidInputError("the empty cell is only allowed in dual systems")
        index = {}
        for i, c in enumerate(cs):
            if c in index:
                raise InvalidInputError(f"duplicate cell {set(c) or '{}'}")
            index[c] = i
        self.cells = cs
        self._index = index
        self._simplicial = None

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __getitem__(self, i):
        return self.cells[i]

    def __contains__(self, cell):
        return make_cell(cell) in self._index

    def __eq__(self, other):
        return isinstance(other, SetSystem) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.cells)
        return f"SetSystem([{body}])"

    def index(self, cell) -> int:
        try:
            return self._index[make_cell(cell)]
        except KeyError:
            raise NotFoundError(f"cell {cell} not in system") from None

    @property
    def ground(self) -> Cell:
        return tuple(sorted({a for c in self.cells for a in c}))

    @property
    def has_empty(self) -> bool:
        return () in self._index

    @property
    def simplicial(self) -> bool:
        """Every non-empty subset of every cell is present."""
        if self._simplicial is None:
            present = self._index
            self._simplicial = not self.has_empty and all(
                c[:i] + c[i + 1:] in present for c in self.cells if len(c) > 1 for i in range(len(c))
            )
        return self._simplicial

    def is_canonical(self) -> bool:
        keys = [canonical_key(c) for c in self.cells]
        return keys == sorted(keys)

    def is_inclusion_ordered(self) -> bool:
        """Every strict subset of a cell is listed before it."""
        for j, y in enumerate(self.cells):
            for i in range(j + 1, len(self.cells)):
                x = self.cells[i]
                if len(x) < len(y) and _is_subset(x, y):
                    return False
        return True

    def zeta_matrix(self) -> np.ndarray:
        """Incidence ``Z[x, u] = 1`` iff ``u`` is a subset of ``x`` (int64)."""
        n = len(self.cells)
        Z = np.zeros((n, n), dtype=np.int64)
        sets = [frozenset(c) for c in self.cells]
        for i, x in enumerate(sets):
            for j, u in enumerate(sets):
                if u <= x:
                    Z[i, j] = 1
        return Z

    def reordered(self, perm: Sequence[int]) -> "SetSystem":
        return SetSystem((self.cells[i] for i in perm), allow_empty=True)

    def permutation_to(self, other: "SetSystem") -> list[int]:
        """``perm`` with ``other[i] == self[perm[i]]``."""
        if len(other) != len(self) or set(other.cells) != set(self.cells):
            raise InvalidInputError("systems contain different cells")
        return [self._index[c] for c in other.cells]

    # serialization ----------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"sets": [list(c) for c in self.cells]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json_obj(cls, obj) -> "SetSystem":
        sets = obj["sets"] if isinstance(obj, dict) else obj
        return cls(sets, allow_empty=True)

    @classmethod
    def from_text(cls, text: str) -> "SetSystem":
        cells = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            cells.append([int(tok) for tok in line.replace(",", " ").split()])
        return cls(cells)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, c)) + "\n" for c in self.cells)


def load_system(path: str | Path) -> tuple[SetSystem, dict | None]:
    """Read JSON (``{"sets": ...}``, optional ``"energy"``) or the plain-text format."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        obj = json.loads(text)
        energy = obj.get("energy") if isinstance(obj, dict) else None
        return SetSystem.from_json_obj(obj), energy
    return SetSystem.from_text(text), None


# -- operations --------------------------------------------------------------


def canonical_order(S: SetSystem) -> SetSystem:
    """Sort by (cardinality, lexicographic atoms); subsets precede supersets."""
    return SetSystem(sorted(S.cells, key=canonical_key), allow_empty=True)


def downward_closure(generators: Iterable[Iterable[int]]) -> SetSystem:
    """All non-empty subsets of the generators, canonically ordered."""
    out: set[Cell] = set()
    for g in generators:
        cell = make_cell(g)
        if not cell:
            raise InvalidInputError("generator cells must be non-empty")
        if cell in out:
            continue
        for r in range(1, len(cell) + 1):
            out.update(combinations(cell, r))
    return SetSystem(sorted(out, key=canonical_key))


def star(S: SetSystem, x) -> list[Cell]:
    """Cells of ``S`` containing ``x`` (``x`` included), in system order."""
    x = S[S.index(x)]
    return [y for y in S.cells if _is_subset(x, y)]


def core(S: SetSystem, x) -> list[Cell]:
    """Cells of ``S`` contained in ``x`` (``x`` included), in system order."""
    x = S[S.index(x)]
    return [y for y in S.cells if _is_subset(y, x)]


def boolean_dual(S: SetSystem, ground: Iterable[int] | None = None) -> SetSystem:
    """Complements of the cells within the ground set, in the same order.

    The result may contain the empty cell. Pass ``ground`` to dualize with
    respect to a fixed ground set (needed to recover ``S`` from its dual).
    """
    g = set(S.ground if ground is None else ground)
    return SetSystem((sorted(g - set(c)) for c in S.cells), allow_empty=True)


def f_vector(S: SetSystem | Iterable[Cell]) -> list[int]:
    """``f[k-1]`` = number of cells of cardinality ``k`` (k >= 1)."""
    cells = S.cells if isinstance(S, SetSystem) else list(S)
    top = max((len(c) for c in cells), default=0)
    f = [0] * top
    for c in cells:
        if c:
            f[len(c) - 1] += 1
    return f


def f_poly_eval(S: SetSystem | Iterable[Cell], t):
    """``1 + sum_k f_k t^k``; works for numbers and :class:`Poly` arguments."""
    total = 1
    for k, fk in enumerate(f_vector(S), start=1):
        if fk:
            total = total + fk * t**k
    return total


def atoms(S: SetSystem) -> list[Cell]:
    """Cells with no proper non-empty subset present in ``S``."""
    return [
        x for x in S.cells
        if x and not any(y and y != x and _is_subset(y, x) for y in S.cells)
    ]


# -- named families -----------------------------------------------------------


def complete_complex(n: int) -> SetSystem:
    if n < 1:
        raise InvalidInputError("complete_complex needs n >= 1")
    return downward_closure([range(1, n + 1)])


def cycle_complex(n: int) -> SetSystem:
    if n < 3:
        raise InvalidInputError("cycle_complex needs n >= 3")
    return downward_closure([(k, k % n + 1) for k in range(1, n + 1)])


def grid_whitney(w: int, h: int) -> SetSystem:
    """Vertices and edges of the w x h grid graph (it has no triangles).

    Vertex (column c, row r) gets the label ``r * w + c + 1``.
    """
    if w < 2 or h < 2:
        raise InvalidInputError("grid_whitney needs w, h >= 2")
    label = lambda c, r: r * w + c + 1  # noqa: E731
    edges = []
    for r in range(h):
        for c in range(w):
            if c + 1 < w:
                edges.append((label(c, r), label(c + 1, r)))
            if r + 1 < h:
                edges.append((label(c, r), label(c, r + 1)))
    return downward_closure(edges)


def random_sets(n: int, m: int, seed: int | np.random.Generator | None = None) -> SetSystem:
    """Random simplicial complex on atoms ``1..n`` from ``m`` random generators.

    Each generator draws ``k = 1 + uniform{0..n-1}`` atoms with replacement;
    duplicates collapse. The result is the downward closure. ``m = 0`` gives
    the empty system.
    """
    if n < 1 or m < 0:
        raise InvalidInputError("random_sets needs n >= 1 and m >= 0")
    rng = np.random.default_rng(seed)
    gens = []
    for _ in range(m):
        k = 1 + int(rng.integers(0, n))
        gens.append(rng.integers(1, n + 1, size=k).tolist())
    if not gens:
        return SetSystem([])
    return downward_closure(gens)


def random_family(n_atoms: int, max_cells: int, seed: int | np.random.Generator | None = None) -> SetSystem:
    """Random set of sets (no closure axiom) with 1..max_cells distinct cells."""
    if n_atoms < 1 or max_cells < 1:
        raise InvalidInputError("random_family needs n_atoms >= 1 and max_cells >= 1")
    rng = np.random.default_rng(seed)
    target = min(1 + int(rng.integers(0, max_cells)), 2**n_atoms - 1)
    cells: set[Cell] = set()
    while len(cells) < target:
        k = 1 + int(rng.integers(0, n_atoms))
        cells.add(make_cell(rng.choice(np.arange(1, n_atoms + 1), size=k, replace=False).tolist()))
    return SetSystem(sorted(cells, key=canonical_key))


def decorated_path(bits: Sequence[int] | str) -> SetSystem:
    """Path 1-2-...-N with a pendant edge at vertex ``i + 1`` iff ``bits[i] == 1``.

    Pendant vertices are labelled ``N + 1, N + 2, ...`` from left to right.
    """
    if isinstance(bits, str):
        bits = [int(b) for b in bits]
    if not bits or any(b not in (0, 1) for b in bits):
        raise InvalidInputError("bits must be a non-empty 0/1 sequence")
    N = len(bits)
    gens: list[tuple[int, ...]] = [(k,) for k in range(1, N + 1)]
    gens += [(k, k + 1) for k in range(1, N)]
    nxt = N + 1
    for i, b in enumerate(bits):
        if b:
            gens.append((i + 1, nxt))
            nxt += 1
    return downward_closure(gens)
