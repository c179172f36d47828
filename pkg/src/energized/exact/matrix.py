"""Dense exact matrices over int, Fraction and :class:`Poly` entries."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .poly import Poly, RingMismatchError

__all__ = [
    "ExactMatrix",
    "SingularMatrixError",
    "ring_of",
    "mat_mul",
    "tensor_product",
    "det_exact",
    "inverse_exact",
    "charpoly_exact",
    "charpoly_monic",
    "berkowitz",
    "faddeev_leverrier",
    "rank_exact",
    "principal_minor_sums",
]

RING_ORDER = {"int": 0, "rat": 1}
MOD_PRIMES = (2147483647, 2147483629, 2147483587)


class SingularMatrixError(ArithmeticError):
    pass


def ring_of(x) -> str:
    if isinstance(x, Poly):
        if x.vars == ("t",):
            return "laurent"
        if x.vars == ("T", "H"):
            return "bipoly"
        return "poly:" + ",".join(x.vars)
    if isinstance(x, Fraction):
        return "int" if x.denominator == 1 else "rat"
    if isinstance(x, (int, np.integer)):
        return "int"
    raise TypeError(f"unsupported scalar {x!r} of type {type(x).__name__}")


def _join_rings(rings: Iterable[str]) -> str:
    poly = {r for r in rings if r not in RING_ORDER}
    if len(poly) > 1:
        raise RingMismatchError(f"mixed polynomial rings {sorted(poly)}")
    if poly:
        return poly.pop()
    return max(rings, key=RING_ORDER.__getitem__, default="int")


def _norm(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    if isinstance(x, Poly) and x.is_constant():
        return x.constant_term()
    return x


class ExactMatrix:
    """Square matrix with exact entries from a single ring.

    Entries are kept in a numpy object array so products, sums and Kronecker
    products reuse numpy's loops with Python arithmetic. Constant polynomials
    are stored as plain numbers; the ring tag records the ring the matrix
    lives in, so ``ExactMatrix([[1]], ring="laurent")`` is a Laurent matrix.
    """

    __slots__ = ("a", "ring", "_sym")

    def __init__(self, rows, ring: str | None = None):
        a = np.array(rows, dtype=object)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        flat = [_norm(x) for x in a.ravel()]
        a = np.empty(a.shape, dtype=object)
        a.ravel()[:] = flat if flat else []
        found = _join_rings({ring_of(x) for x in flat} | ({ring} if ring else set()))
        self.a = a
        self.ring = found
        self._sym = None

    # constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, n: int, ring: str = "int") -> "ExactMatrix":
        m = np.zeros((n, n), dtype=object)
        for i in range(n):
            m[i, i] = 1
        return cls(m, ring)

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        m = np.zeros((n, n), dtype=object)
        for i, v in enumerate(values):
            m[i, i] = v
        return cls(m)

    @classmethod
    def _wrap(cls, a: np.ndarray, ring: str) -> "ExactMatrix":
        obj = cls.__new__(cls)
        flat = [_norm(x) for x in a.ravel()]
        b = np.empty(a.shape, dtype=object)
        b.ravel()[:] = flat if flat else []
        obj.a = b
        obj.ring = ring
        obj._sym = None
        return obj

    # basic protocol -------------------------------------------------------

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def shape(self):
        return self.a.shape

    def __getitem__(self, ij):
        return self.a[ij]

    def __len__(self):
        return self.n

    def tolist(self) -> list[list]:
        return self.a.tolist()

    def __repr__(self):
        return f"ExactMatrix(n={self.n}, ring={self.ring!r}, rows={self.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            try:
                other = ExactMatrix(other)
            except (TypeError, ValueError):
                return NotImplemented
        if self.shape != other.shape:
            return False
        return all(x == y for x, y in zip(self.a.ravel(), other.a.ravel()))

    __hash__ = None

    def _check(self, other: "ExactMatrix") -> str:
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        return _join_rings({self.ring, other.ring})

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        ring = self._check(other)
        if self.shape != other.shape:
            raise ValueError("size mismatch")
        return ExactMatrix._wrap(self.a + other.a, ring)

    def __sub__(self, other):
        ring = self._check(other)
        if self.shape != other.shape:
            raise ValueError("size mismatch")
        return ExactMatrix._wrap(self.a - other.a, ring)

    def __neg__(self):
        return ExactMatrix._wrap(-self.a, self.ring)

    def scale(self, c) -> "ExactMatrix":
        ring = _join_rings({self.ring, ring_of(c)})
        return ExactMatrix._wrap(self.a * c, ring)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self.a.T.copy(), self.ring)

    def is_symmetric(self) -> bool:
        if self._sym is None:
            self._sym = self == self.T
        return self._sym

    def is_lower_triangular(self) -> bool:
        n = self.n
        return all(self.a[i, j] == 0 for i in range(n) for j in range(i + 1, n))

    def is_upper_triangular(self) -> bool:
        return self.T.is_lower_triangular()

    def diagonal(self) -> list:
        return [self.a[i, i] for i in range(self.n)]

    def trace(self):
        return _norm(sum(self.diagonal(), 0))

    def total(self):
        """Sum of all entries."""
        return _norm(sum(self.a.ravel().tolist(), 0))

    def row_sums(self) -> list:
        return [_norm(sum(row, 0)) for row in self.a.tolist()]

    def permuted(self, perm: Sequence[int]) -> "ExactMatrix":
        """Matrix in the basis ``perm``: ``B[i, j] = A[perm[i], perm[j]]``."""
        p = np.asarray(perm, dtype=int)
        return ExactMatrix._wrap(self.a[np.ix_(p, p)], self.ring)

    def map(self, f) -> "ExactMatrix":
        out = np.empty(self.shape, dtype=object)
        out.ravel()[:] = [f(x) for x in self.a.ravel()] if self.a.size else []
        return ExactMatrix(out)

    def substitute(self, **values) -> "ExactMatrix":
        """Evaluate polynomial entries at the given variable values."""
        return self.map(lambda x: x.substitute(**values) if isinstance(x, Poly) else x)

    def to_float(self) -> np.ndarray:
        if self.ring not in RING_ORDER:
            raise TypeError(f"cannot convert {self.ring} matrix to floats")
        return np.array([[float(x) for x in row] for row in self.a.tolist()], dtype=float).reshape(self.shape)

    def to_int64(self) -> np.ndarray | None:
        """int64 copy when every entry is an integer of moderate size."""
        if self.ring != "int":
            return None
        flat = self.a.ravel().tolist()
        if flat and max(abs(x) for x in flat) >= 2**62:
            return None
        return np.array(flat, dtype=np.int64).reshape(self.shape)

    # algebra shortcuts ----------------------------------------------------

    def det(self):
        return det_exact(self)

    def inverse(self) -> "ExactMatrix":
        return inverse_exact(self)

    def charpoly(self) -> list:
        return charpoly_exact(self)

    def rank(self) -> int:
        return rank_exact(self)

    def kron(self, other) -> "ExactMatrix":
        return tensor_product(self, other)

    # serialization ----------------------------------------------------------

    def to_json_obj(self) -> dict:
        def enc(x):
            if isinstance(x, Poly):
                return x.to_json()
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            return x

        ring = self.ring if self.ring in ("int", "rat", "laurent", "bipoly") else "poly"
        return {"n": self.n, "ring": ring, "rows": [[enc(x) for x in row] for row in self.tolist()]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ExactMatrix":
        def dec(x):
            if isinstance(x, dict):
                return Poly.from_json(x)
            if isinstance(x, str):
                return Fraction(x)
            return x

        rows = [[dec(x) for x in row] for row in obj["rows"]]
        if len(rows) != obj.get("n", len(rows)):
            raise ValueError("row count does not match n")
        ring = obj.get("ring")
        return cls(rows, ring if ring in ("laurent", "bipoly") else None)

    @classmethod
    def from_json(cls, text: str) -> "ExactMatrix":
        return cls.from_json_obj(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.tolist():
            w.writerow([str(x) for x in row])
        return buf.getvalue()


# -- products ---------------------------------------------------------------


def mat_mul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    ring = A._check(B)
    if A.shape != B.shape:
        raise ValueError(f"size mismatch {A.shape} vs {B.shape}")
    if A.n == 0:
        return ExactMatrix._wrap(A.a.copy(), ring)
    ai, bi = A.to_int64(), B.to_int64()
    if ai is not None and bi is not None:
        bound = int(np.abs(ai).max()) * int(np.abs(bi).max()) * A.n
        if bound < 2**62:
            return ExactMatrix._wrap((ai @ bi).astype(object), ring)
    return ExactMatrix._wrap(A.a @ B.a, ring)


def tensor_product(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Kronecker product; entry ``(i*m + k, j*m + l)`` is ``A[i,j] * B[k,l]``."""
    ring = A._check(B)
    return ExactMatrix._wrap(np.kron(A.a, B.a), ring)


# -- determinants and characteristic polynomials ----------------------------


def _bareiss_det(rows: list[list]):
    """Fraction-free elimination; entries int or Fraction."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * pivot - M[i][k] * M[k][j]
                M[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            M[i][k] = 0
        prev = pivot
    return _norm(sign * M[n - 1][n - 1])


def berkowitz(A: ExactMatrix | Sequence[Sequence]) -> list:
    """Division-free characteristic polynomial.

    Returns ``[1, c1, ..., cn]`` with ``det(x I - A) = x^n + c1 x^(n-1) + ... + cn``.
    Works over any commutative ring, including the polynomial rings.
    """
    a = A.a if isinstance(A, ExactMatrix) else np.array(A, dtype=object)
    n = a.shape[0]
    poly = [1]
    for k in range(n):
        akk = a[k, k]
        if k == 0:
            toeplitz = [1, -akk]
        else:
            R = a[k, :k]
            C = a[:k, k]
            M = a[:k, :k]
            toeplitz = [1, -akk]
            v = C
            for _ in range(k):
                toeplitz.append(-(R @ v))
                v = M @ v
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - len(toeplitz) + 1), min(i, k) + 1):
                s = s + toeplitz[i - j] * poly[j]
            new.append(s)
        poly = new
    return [_norm(c) for c in poly]


def faddeev_leverrier(A: ExactMatrix) -> list:
    """Monic characteristic coefficients ``[1, c1, ..., cn]`` for int/rat matrices.

    Uses exact division by the step index, which is integral for integer input.
    """
    if A.ring not in RING_ORDER:
        raise TypeError("Faddeev-LeVerrier needs int or rational entries")
    n = A.n
    coeffs = [1]
    M = ExactMatrix.identity(n) if n else A
    for k in range(1, n + 1):
        AM = mat_mul(A, M)
        tr = AM.trace()
        c = Fraction(-tr, k) if not isinstance(tr, int) or tr % k else -tr // k
        coeffs.append(_norm(c))
        if k < n:
            M = AM + ExactMatrix.identity(n).scale(c)
    return coeffs


def charpoly_monic(A: ExactMatrix) -> list:
    """Coefficients of ``det(x I - A)``, degree-descending, leading 1."""
    if A.ring in RING_ORDER and A.n > 12:
        return faddeev_leverrier(A)
    return berkowitz(A)


def charpoly_exact(A: ExactMatrix) -> list:
    """Coefficients of ``det(A - x I)``, degree-descending, leading ``(-1)^n``."""
    s = -1 if A.n % 2 else 1
    return [_norm(s * c) for c in charpoly_monic(A)]


def principal_minor_sums(A: ExactMatrix) -> list:
    """``[e_0, e_1, ..., e_n]`` where ``e_k`` is the sum of the k x k principal minors."""
    return [_norm(c if k % 2 == 0 else -c) for k, c in enumerate(charpoly_monic(A))]


def det_exact(A: ExactMatrix):
    if A.n == 0:
        return 1
    if A.ring in RING_ORDER:
        return _bareiss_det(A.tolist())
    c = berkowitz(A)[-1]
    return _norm(c if A.n % 2 == 0 else -c)


# -- inverse ----------------------------------------------------------------


def _gauss_jordan_inverse(rows: list[list]) -> list[list]:
    n = len(rows)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def inverse_exact(A: ExactMatrix) -> ExactMatrix:
    """Exact inverse.

    Int/rational matrices are inverted over the rationals. Polynomial
    matrices go through the Cayley-Hamilton adjugate and an exact division
    by the determinant, which must stay inside the polynomial ring (always
    the case when the determinant is a monomial with unit coefficient).
    """
    n = A.n
    if A.ring in RING_ORDER:
        return ExactMatrix(_gauss_jordan_inverse(A.tolist()) if n else A.a)
    c = berkowitz(A)
    det = c[-1] if n % 2 == 0 else -c[-1]
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    # adj(A) = (-1)^(n-1) (A^(n-1) + c1 A^(n-2) + ... + c_(n-1) I)
    acc = ExactMatrix.identity(n, A.ring)
    for k in range(1, n):
        acc = mat_mul(A, acc) + ExactMatrix.identity(n, A.ring).scale(c[k])
    adj = acc if (n - 1) % 2 == 0 else -acc
    vars = next(x.vars for x in A.a.ravel() if isinstance(x, Poly))

    def div(x):
        if not isinstance(x, Poly):
            x = Poly.constant(x, vars)
        return x.divide_exact(det)

    return ExactMatrix(adj.map(div).a, A.ring)


# -- rank -------------------------------------------------------------------


def _rank_mod(M: np.ndarray, p: int) -> int:
    M = M.copy() % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        below = np.nonzero(M[r + 1:, c])[0] + r + 1
        if below.size:
            f = M[below, c][:, None]
            M[below] = (M[below] - (f * M[r]) % p) % p
        r += 1
    return r


def _rank_fraction_free(rows: list[list[int]]) -> int:
    M = [list(r) for r in rows]
    n_rows = len(M)
    n_cols = len(M[0]) if M else 0
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                M[i][j] = (M[i][j] * M[r][c] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        r += 1
    return r


def _integer_rows(A: ExactMatrix) -> list[list[int]]:
    rows = []
    for row in A.tolist():
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // np.gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def rank_exact(A: ExactMatrix, primes: Sequence[int] = MOD_PRIMES) -> int:
    """Rank over the rationals.

    Elimination modulo several word-size primes; the results must agree,
    otherwise fraction-free integer elimination decides.
    """
    if A.ring not in RING_ORDER:
        raise TypeError("rank needs int or rational entries")
    if A.n == 0:
        return 0
    rows = _integer_rows(A)
    ranks = set()
    for p in primes:
        M = np.array([[x % p for x in row] for row in rows], dtype=np.int64)
        ranks.add(_rank_mod(M, p))
    if len(ranks) == 1:
        return ranks.pop()
    return _rank_fraction_free(rows)

