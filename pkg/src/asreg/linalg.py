"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; there is no floating point
anywhere.  Dense matrices are small (at most a few dozen rows), while the
graded pieces of quadratic algebras live in spaces of dimension ``4**d`` and
are handled by the sparse :class:`Echelon` engine.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Q",
    "fmt_q",
    "QMatrix",
    "rref_rank",
    "kernel_basis",
    "solve",
    "Subspace",
    "span_compare",
    "Echelon",
    "DimensionMismatch",
    "SingularMatrix",
]


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def Q(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(x)


def fmt_q(x) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QMatrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(Q(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def parse(cls, text: str) -> "QMatrix":
        """Parse ``"1,0;0,1"`` (rows separated by semicolons)."""
        rows = [r for r in text.strip().split(";")]
        return cls.from_rows([[Q(e) for e in r.split(",")] for r in rows])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other) -> bool:
        return (isinstance(other, QMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"QMatrix({self.to_str()!r})"

    def to_str(self) -> str:
        return ";".join(",".join(fmt_q(e) for e in self.row(i)) for i in range(self.rows))

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                           for c in ocols)
            return QMatrix(self.rows, other.cols, out)
        v = [Q(x) for x in other]
        if len(v) != self.cols:
            raise DimensionMismatch("vector length")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def __mul__(self, c) -> "QMatrix":
        c = Q(c)
        return QMatrix(self.rows, self.cols, [c * e for e in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch("shape")
        return QMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-1) * other

    def __pow__(self, k: int) -> "QMatrix":
        if self.rows != self.cols:
            raise DimensionMismatch("power of non-square matrix")
        base = self if k >= 0 else self.inverse()
        out = QMatrix.identity(self.rows)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def rank(self) -> int:
        return rref_rank(self)[1]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of non-square matrix")
        a = self.tolist()
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "QMatrix":
        n = self.rows
        if n != self.cols:
            raise SingularMatrix("non-square matrix")
        aug = QMatrix.from_rows([list(self.row(i)) + [1 if i == j else 0 for j in range(n)]
                                 for i in range(n)])
        red, _ = rref_rank(aug)
        left = [red.row(i)[:n] for i in range(n)]
        if any(left[i][i] != 1 for i in range(n)):
            raise SingularMatrix("matrix is singular")
        return QMatrix.from_rows([red.row(i)[n:] for i in range(n)])

    def kron(self, other: "QMatrix") -> "QMatrix":
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [Fraction(0)] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                if not a:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other[k, l]
                        if b:
                            out[(i * other.rows + k) * c + j * other.cols + l] = a * b
        return QMatrix(r, c, out)

    def is_proportional_to(self, other: "QMatrix") -> bool:
        """True iff ``self = c * other`` for a nonzero rational ``c``."""
        if self.shape != other.shape:
            return False
        ratio = None
        for a, b in zip(self.entries, other.entries):
            if (a == 0) != (b == 0):
                return False
            if a:
                if ratio is None:
                    ratio = a / b
                elif a != ratio * b:
                    return False
        return ratio is not None


def rref_rank(m: QMatrix) -> tuple[QMatrix, int]:
    """Reduced row echelon form and rank.

    Pivots are taken at the first nonzero entry in column order, so the result
    depends only on the row space of ``m``.
    """
    a = m.tolist()
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return QMatrix(rows, cols, [e for row in a for e in row]), r


def kernel_basis(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, itself in reduced row echelon form."""
    n = m.cols
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    red, rank = rref_rank(m)
    pivots = []
    for i in range(rank):
        row = red.row(i)
        pivots.append(next(j for j in range(n) if row[j]))
    free = [j for j in range(n) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        vecs.append(v)
    if not vecs:
        return []
    red_k, _ = rref_rank(QMatrix.from_rows(vecs))
    return [red_k.row(i) for i in range(len(vecs))]


def solve(m: QMatrix, b) -> tuple[Fraction, ...] | None:
    """A particular solution of ``m x = b`` (free variables set to 0), or None."""
    b = [Q(x) for x in b]
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length")
    aug = QMatrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)], m.cols + 1)
    red, rank = rref_rank(aug)
    x = [Fraction(0)] * m.cols
    for i in range(rank):
        row = red.row(i)
        p = next(j for j in range(m.cols + 1) if row[j])
        if p == m.cols:
            return None
        x[p] = row[m.cols]
    return tuple(x)


def _axpy(w: dict, f: Fraction, row: dict) -> None:
    """w -= f * row, in place, dropping zeros."""
    for c, x in row.items():
        y = w.get(c)
        if y is None:
            w[c] = -f * x
        else:
            y -= f * x
            if y:
                w[c] = y
            else:
                del w[c]


class Echelon:
    """Incremental fully reduced echelon basis of sparse vectors.

    Rows are dicts ``{column: Fraction}``.  ``pivot="first"`` takes the pivot
    at the smallest column (classical rref); ``pivot="last"`` at the largest,
    which makes the non-pivot columns the lexicographically first complement.
    Every pivot column occurs in exactly one row, so reduction of a vector is
    a single pass over its support.
    """

    def __init__(self, ambient: int, pivot: str = "first"):
        if pivot not in ("first", "last"):
            raise ValueError("pivot must be 'first' or 'last'")
        self.ambient = ambient
        self.pivot = pivot
        self.rows: dict[int, dict] = {}
        self._occ: dict[int, set] = defaultdict(set)  # column -> pivots of rows using it

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.ambient, self.pivot)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        e._occ = defaultdict(set, {c: set(s) for c, s in self._occ.items()})
        return e

    def reduce(self, v: dict) -> dict:
        w = {c: Q(x) for c, x in v.items() if x}
        rows = self.rows
        for c in [c for c in w if c in rows]:
            f = w.get(c)
            if f:
                _axpy(w, f, rows[c])
        return w

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        self._insert_reduced(w)
        return True

    def _insert_reduced(self, w: dict) -> None:
        p = min(w) if self.pivot == "first" else max(w)
        inv = 1 / w[p]
        if inv != 1:
            w = {c: x * inv for c, x in w.items()}
        for q in list(self._occ.get(p, ())):
            row = self.rows[q]
            f = row[p]
            old = set(row)
            _axpy(row, f, w)
            new = set(row)
            for c in old - new:
                self._occ[c].discard(q)
            for c in new - old:
                self._occ[c].add(q)
        self._occ.pop(p, None)
        self.rows[p] = w
        for c in w:
            if c != p:
                self._occ[c].add(p)

    def add_reduced_rows(self, rows: Iterable[dict]) -> None:
        """Bulk insert rows already known to be fully reduced with fresh pivots."""
        for w in rows:
            p = min(w) if self.pivot == "first" else max(w)
            self.rows[p] = w
            for c in w:
                if c != p:
                    self._occ[c].add(p)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def sorted_rows(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]


class Subspace:
    """Linear subspace of Q^n kept in canonical rref (first-nonzero pivots).

    Two subspaces are equal iff their rref bases agree entry-wise, so ``==``
    is plain data comparison.
    """

    __slots__ = ("ambient_dim", "_rows", "_key")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        ech = Echelon(ambient_dim, "first")
        for v in vectors:
            ech.add(_as_sparse(v, ambient_dim))
        self.ambient_dim = ambient_dim
        self._rows = tuple(tuple(sorted(r.items())) for r in ech.sorted_rows())
        self._key = None

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "Subspace":
        if ech.pivot == "first":
            s = cls.__new__(cls)
            s.ambient_dim = ech.ambient
            s._rows = tuple(tuple(sorted(r.items())) for r in ech.sorted_rows())
            s._key = None
            return s
        return cls(ech.ambient, ech.rows.values())

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return self.dim

    def sparse_rows(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def vectors(self) -> list[tuple[Fraction, ...]]:
        out = []
        for r in self._rows:
            v = [Fraction(0)] * self.ambient_dim
            for c, x in r:
                v[c] = x
            out.append(tuple(v))
        return out

    @property
    def basis(self) -> QMatrix:
        return QMatrix(self.dim, self.ambient_dim, [x for v in self.vectors() for x in v])

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim, "first")
        ech.add_reduced_rows(self.sparse_rows())
        return ech

    def contains(self, v) -> bool:
        return self.echelon().contains(_as_sparse(v, self.ambient_dim))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace(self.ambient_dim, self.sparse_rows() + other.sparse_rows())

    def map(self, m: QMatrix) -> "Subspace":
        """Image under the linear map ``v -> m v``."""
        if m.cols != self.ambient_dim:
            raise DimensionMismatch("map does not act on this space")
        cols = [dict((i, x) for i, x in enumerate(m.col(j)) if x) for j in range(m.cols)]
        images = []
        for r in self._rows:
            img: dict = {}
            for c, x in r:
                for i, y in cols[c].items():
                    img[i] = img.get(i, 0) + x * y
            images.append(img)
        return Subspace(m.rows, images)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient_dim}, dim={self.dim})"


def _as_sparse(v, n: int) -> dict:
    if isinstance(v, dict):
        out = {c: Q(x) for c, x in v.items() if x}
    elif hasattr(v, "coeffs"):
        out = {c: x for c, x in v.coeffs.items() if x}
    else:
        v = list(v)
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {n}")
        out = {i: Q(x) for i, x in enumerate(v) if x}
    if out and (min(out) < 0 or max(out) >= n):
        raise DimensionMismatch("coordinate out of range")
    return out


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient {a.ambient_dim} vs {b.ambient_dim}")


def span_compare(a: Subspace, b: Subspace) -> str:
    """One of ``equal``, ``a_subset_b``, ``b_subset_a``, ``incomparable``."""
    _check_ambient(a, b)
    joint = (a + b).dim
    a_in_b = joint == b.dim
    b_in_a = joint == a.dim
    if a_in_b and b_in_a:
        return "equal"
    if a_in_b:
        return "a_subset_b"
    if b_in_a:
        return "b_subset_a"
    return "incomparable"
