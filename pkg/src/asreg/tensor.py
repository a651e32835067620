"""Quadratic algebras T(V)/<W> and their graded pieces.

Degree-d tensors are sparse vectors in Q^(n^d).  The word
``x_{i1} x_{i2} ... x_{id}`` (indices from 0) sits at offset
``sum i_k * n**(d-k)``, i.e. row-major order, which is also the
lexicographic order on words.

The degree-d ideal piece is built incrementally from
``I_d = I_{d-1} (x) V + V^(d-2) (x) W``; with pivots at the last nonzero
column, ``I_{d-1} (x) V`` is already fully reduced, so only the new shifts of
``W`` need elimination.  The non-pivot words are the lexicographically first
monomial complement and serve as the standard basis of ``A_d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Echelon, QMatrix, Q, Subspace, fmt_q

__all__ = [
    "TensorElement",
    "QuadraticPresentation",
    "GradedComponent",
    "word_index",
    "index_word",
    "ideal_component",
    "graded_dim",
    "hilbert_coefficients",
    "normal_form",
    "multiply_nf",
    "right_ideal_dims",
    "transform_tensor",
    "pullback",
    "reduce",
    "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 6


def word_index(word: Sequence[int], n: int) -> int:
    idx = 0
    for i in word:
        idx = idx * n + i
    return idx


def index_word(idx: int, d: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(d):
        idx, r = divmod(idx, n)
        out.append(r)
    return tuple(reversed(out))


class TensorElement:
    """Homogeneous element of the tensor algebra on ``n`` generators."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: dict | None = None):
        self.n = n
        self.degree = degree
        self.coeffs = {c: Q(x) for c, x in (coeffs or {}).items() if x}

    @classmethod
    def gen(cls, i: int, n: int = 4) -> "TensorElement":
        return cls(n, 1, {i: 1})

    @classmethod
    def word(cls, word: Sequence[int], n: int = 4, coeff=1) -> "TensorElement":
        return cls(n, len(word), {word_index(word, n): coeff})

    @classmethod
    def linear(cls, coefficients: Sequence, n: int | None = None) -> "TensorElement":
        coefficients = list(coefficients)
        return cls(n or len(coefficients), 1, dict(enumerate(coefficients)))

    @classmethod
    def dense(cls, values: Sequence, n: int, degree: int) -> "TensorElement":
        if len(values) != n ** degree:
            raise ValueError("wrong number of coordinates")
        return cls(n, degree, dict(enumerate(values)))

    @classmethod
    def one(cls, n: int = 4) -> "TensorElement":
        return cls(n, 0, {0: 1})

    def _same(self, other: "TensorElement") -> None:
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("elements of different degree or rank")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        out = dict(self.coeffs)
        for c, x in other.coeffs.items():
            out[c] = out.get(c, 0) + x
        return TensorElement(self.n, self.degree, out)

    __radd__ = __add__

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.n, self.degree, {c: -x for c, x in self.coeffs.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = Q(c)
        return TensorElement(self.n, self.degree, {i: c * x for i, x in self.coeffs.items()})

    def __mul__(self, other):
        """Scalar multiple or tensor (= free algebra) product."""
        if isinstance(other, TensorElement):
            if other.n != self.n:
                raise ValueError("different generator counts")
            shift = self.n ** other.degree
            out = {}
            for a, x in self.coeffs.items():
                base = a * shift
                for b, y in other.coeffs.items():
                    out[base + b] = x * y
            return TensorElement(self.n, self.degree + other.degree, out)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorElement) and self.n == other.n
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.degree, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def dense(self) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * (self.n ** self.degree)
        for c, x in self.coeffs.items():
            v[c] = x
        return tuple(v)

    def apply(self, maps: Sequence[QMatrix]) -> "TensorElement":
        """Apply one coefficient-space map per tensor factor."""
        return transform_tensor(self, maps)

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i + 1}" for i in range(self.n)]
        if not self.coeffs:
            return "0"
        parts = []
        for c in sorted(self.coeffs):
            x = self.coeffs[c]
            w = "*".join(names[i] for i in index_word(c, self.degree, self.n)) or "1"
            a = abs(x)
            body = w if a == 1 else f"{fmt_q(a)}*{w}"
            parts.append(("-" if x < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])

    def __repr__(self):
        return f"TensorElement({self.format()!r})"


def transform_tensor(e: TensorElement, maps: Sequence[QMatrix]) -> TensorElement:
    """``(m_1 (x) ... (x) m_d) e`` where each ``m_k`` acts on coefficient vectors."""
    if len(maps) != e.degree:
        raise ValueError("one map per tensor factor required")
    n = e.n
    cols = [[{i: x for i, x in enumerate(m.col(j)) if x} for j in range(n)] for m in maps]
    out: dict = {}
    for idx, coef in e.coeffs.items():
        partial = {0: coef}
        for k, letter in enumerate(index_word(idx, e.degree, n)):
            nxt: dict = {}
            for acc, x in partial.items():
                for i, y in cols[k][letter].items():
                    key = acc * n + i
                    nxt[key] = nxt.get(key, 0) + x * y
            partial = nxt
        for key, x in partial.items():
            out[key] = out.get(key, 0) + x
    return TensorElement(n, e.degree, out)


def pullback(tau: QMatrix) -> QMatrix:
    """Coefficient action of ``v -> v o tau`` on linear forms.

    ``tau`` acts on points; ``x_i o tau = sum_k tau[i, k] x_k``, so on
    coefficient vectors the induced map is the transpose.
    """
    return tau.T


class GradedComponent:
    """Degree-d slice: the ideal piece ``I_d`` and the standard words of ``A_d``."""

    def __init__(self, n: int, degree: int, ideal: Echelon):
        self.n = n
        self.degree = degree
        self.ideal = ideal
        size = n ** degree
        self.complement_basis = [c for c in range(size) if c not in ideal.rows]
        self._position = {c: i for i, c in enumerate(self.complement_basis)}

    @property
    def dim(self) -> int:
        return len(self.complement_basis)

    @property
    def ideal_dim(self) -> int:
        return self.ideal.rank

    def reduce(self, e) -> TensorElement:
        coeffs = e.coeffs if isinstance(e, TensorElement) else dict(e)
        return TensorElement(self.n, self.degree, self.ideal.reduce(coeffs))

    def coordinates(self, e) -> tuple[Fraction, ...]:
        r = self.reduce(e)
        v = [Fraction(0)] * self.dim
        for c, x in r.coeffs.items():
            v[self._position[c]] = x
        return tuple(v)

    def lift(self, coords: Sequence) -> TensorElement:
        return TensorElement(self.n, self.degree,
                             {self.complement_basis[i]: x for i, x in enumerate(coords) if x})

    def standard_words(self) -> list[tuple[int, ...]]:
        return [index_word(c, self.degree, self.n) for c in self.complement_basis]


@dataclass(frozen=True, eq=False)
class QuadraticPresentation:
    """The algebra ``T(V)/<W>`` with ``W`` a subspace of degree-2 tensors."""

    gen_names: tuple
    relations: Subspace
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.gen_names)
        if self.relations.ambient_dim != n * n:
            raise ValueError("relation space must live in degree-2 tensors")
        object.__setattr__(self, "gen_names", tuple(self.gen_names))

    @classmethod
    def from_relations(cls, relations: Iterable, gen_names: Sequence[str] | int = 4
                       ) -> "QuadraticPresentation":
        if isinstance(gen_names, int):
            gen_names = tuple(f"x{i + 1}" for i in range(gen_names))
        n = len(gen_names)
        vecs = []
        for r in relations:
            if isinstance(r, TensorElement):
                if r.degree != 2 or r.n != n:
                    raise ValueError("relations must be degree-2 tensors")
                vecs.append(r.coeffs)
            else:
                vecs.append(r)
        return cls(tuple(gen_names), Subspace(n * n, vecs))

    @property
    def gen_count(self) -> int:
        return len(self.gen_names)

    n = gen_count

    @property
    def relation_dim(self) -> int:
        return self.relations.dim

    def relation_elements(self) -> list[TensorElement]:
        return [TensorElement(self.n, 2, r) for r in self.relations.sparse_rows()]

    def gen(self, i: int) -> TensorElement:
        return TensorElement.gen(i, self.n)

    def element(self, coefficients: Sequence) -> TensorElement:
        return TensorElement.linear(coefficients, self.n)

    def same_algebra(self, other: "QuadraticPresentation") -> bool:
        return self.gen_count == other.gen_count and self.relations == other.relations

    def __eq__(self, other):
        return isinstance(other, QuadraticPresentation) and self.same_algebra(other)

    def __hash__(self):
        return hash(self.relations)

    def component(self, d: int) -> GradedComponent:
        """Cached degree-d slice (any d >= 0)."""
        if d in self._cache:
            return self._cache[d]
        n = self.n
        if d < 2:
            comp = GradedComponent(n, d, Echelon(n ** d, "last"))
        else:
            ech = Echelon(n ** d, "last")
            if d == 2:
                for r in self.relations.sparse_rows():
                    ech.add(r)
            else:
                prev = self.component(d - 1).ideal
                ech.add_reduced_rows(
                    {c * n + j: x for c, x in row.items()}
                    for row in prev.rows.values() for j in range(n))
                rels = self.component(2).ideal.sorted_rows()
                for left in range(n ** (d - 2)):
                    base = left * n * n
                    for r in rels:
                        ech.add({base + c: x for c, x in r.items()})
            comp = GradedComponent(n, d, ech)
        self._cache[d] = comp
        return comp

    def format_relations(self) -> list[str]:
        return [e.format(self.gen_names) for e in self.relation_elements()]

    def __repr__(self):
        return (f"QuadraticPresentation(gens={' '.join(self.gen_names)}, "
                f"relations={self.relation_dim})")


def ideal_component(P: QuadraticPresentation, d: int) -> Subspace:
    if d < 2:
        raise ValueError("the ideal starts in degree 2")
    return Subspace.from_echelon(P.component(d).ideal)


def graded_dim(P: QuadraticPresentation, d: int) -> int:
    if d < 0:
        raise ValueError("negative degree")
    return P.component(d).dim


def hilbert_coefficients(P: QuadraticPresentation, max_degree: int) -> list[int]:
    return [graded_dim(P, d) for d in range(max_degree + 1)]


def normal_form(P: QuadraticPresentation, e: TensorElement) -> tuple[Fraction, ...]:
    """Coordinates of the class of ``e`` over the standard words of its degree."""
    return P.component(e.degree).coordinates(e)


def reduce(P: QuadraticPresentation, e: TensorElement) -> TensorElement:
    """Canonical representative of ``e`` supported on standard words."""
    return P.component(e.degree).reduce(e)


def multiply_nf(P: QuadraticPresentation, a: TensorElement, b: TensorElement) -> TensorElement:
    """Product of classes; well defined because ``I`` is a two-sided ideal."""
    return reduce(P, a * b)


def right_ideal_dims(P: QuadraticPresentation, gens: Sequence[TensorElement], d: int) -> int:
    """``dim (sum_i g_i A_{d - deg g_i})`` inside ``A_d``."""
    comp = P.component(d)
    span = Echelon(P.n ** d, "last")
    for g in gens:
        if g.degree > d:
            raise ValueError("generator degree exceeds target degree")
        rest = P.component(d - g.degree)
        for w in rest.complement_basis:
            tail = TensorElement(P.n, d - g.degree, {w: 1})
            span.add(comp.reduce(g * tail).coeffs)
    return span.rank


def all_words(n: int, d: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(n), repeat=d)
