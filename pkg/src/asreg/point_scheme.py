"""Multilinearization, the 4x4 minors, and the automorphism sigma at points.

Relation ``r = sum c_ij x_i x_j`` gives the row ``M[r][j] = sum_i c_ij Y_i``;
``M(p) z = 0`` says every relation vanishes on ``(p, z)``, and
``sigma(p)`` is that ``z`` when it is unique.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .coordinate_rings import QuadricSpec
from .linalg import QMatrix, Q, Subspace, kernel_basis
from .polynomials import CommPoly, LinearForm, det, poly_divisible, restrict_to_line
from .tensor import QuadraticPresentation

__all__ = [
    "MultilinearMatrix",
    "MinorIdeal",
    "PlanePair",
    "Line",
    "NotOnScheme",
    "SigmaUndetermined",
    "AllMinorsZero",
    "multilinearize",
    "minors",
    "contains_component",
    "sigma_at",
    "verify_sigma_formula",
    "residual_polynomials",
    "normalize_point",
    "projectively_equal",
    "grid_points",
    "plane_samples",
    "line_points",
    "scheme_report",
]

GRID_COORDS = (0, 1, -1, 2, -2, 3)


class NotOnScheme(ValueError):
    pass


class SigmaUndetermined(ValueError):
    pass


class AllMinorsZero(ValueError):
    pass


@dataclass(frozen=True)
class MultilinearMatrix:
    rows: tuple            # rows of LinearForm
    n: int = 4

    def at(self, p: Sequence) -> QMatrix:
        return QMatrix.from_rows([[f(p) for f in r] for r in self.rows], self.n)

    def polys(self) -> list[list[CommPoly]]:
        return [[f.to_poly() for f in r] for r in self.rows]

    def relations(self) -> Subspace:
        """Rebuild the relation span: c_ij is the Y_i coefficient of entry (r, j)."""
        n = self.n
        vecs = []
        for r in self.rows:
            vecs.append({i * n + j: r[j][i] for i in range(n) for j in range(n) if r[j][i]})
        return Subspace(n * n, vecs)

    def format(self) -> list[list[str]]:
        return [[str(f) for f in r] for r in self.rows]


@dataclass(frozen=True)
class MinorIdeal:
    polys: tuple
    subsets: tuple

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def nonzero(self) -> list[CommPoly]:
        return [p for p in self.polys if not p.is_zero()]

    def all_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def vanish_at(self, p) -> bool:
        return all(f(p) == 0 for f in self.polys)


@dataclass(frozen=True)
class PlanePair:
    l1: LinearForm
    l2: LinearForm


@dataclass(frozen=True)
class Line:
    """The line V(m1, m2)."""
    m1: LinearForm
    m2: LinearForm

    def param(self) -> tuple[tuple, tuple]:
        ker = kernel_basis(QMatrix.from_rows([list(self.m1), list(self.m2)]))
        if len(ker) != 2:
            raise ValueError("line must be cut out by two independent forms")
        return ker[0], ker[1]

    def __str__(self):
        return f"V({self.m1}, {self.m2})"


def multilinearize(P: QuadraticPresentation) -> MultilinearMatrix:
    if P.relation_dim != 6:
        raise ValueError(f"multilinearization needs 6 relations, got {P.relation_dim}")
    n = P.n
    rows = []
    for r in P.relations.sparse_rows():
        cols = [[Fraction(0)] * n for _ in range(n)]
        for idx, c in r.items():
            i, j = divmod(idx, n)
            cols[j][i] += c
        rows.append(tuple(LinearForm(c) for c in cols))
    return MultilinearMatrix(tuple(rows), n)


def minors(M: MultilinearMatrix) -> MinorIdeal:
    """All maximal minors, row subsets in lexicographic order."""
    polys = M.polys()
    k = M.n
    subsets = tuple(itertools.combinations(range(len(polys)), k))
    return MinorIdeal(tuple(det([polys[r] for r in s]) for s in subsets), subsets)


def contains_component(I: MinorIdeal, component) -> bool:
    if isinstance(component, PlanePair):
        return all(poly_divisible(p, [component.l1, component.l2])[0] for p in I.polys)
    if isinstance(component, Line):
        base, d = component.param()
        return all(not any(restrict_to_line(p, base, d)) for p in I.polys)
    raise TypeError("component must be a PlanePair or a Line")


def normalize_point(v) -> tuple[Fraction, ...]:
    """Primitive integer representative with first nonzero entry positive."""
    v = [Q(x) for x in v]
    if not any(v):
        raise ValueError("zero vector is not a point")
    den = math.lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(Fraction(x) for x in ints)


def projectively_equal(a, b) -> bool:
    return normalize_point(a) == normalize_point(b)


def sigma_at(M: MultilinearMatrix, p) -> tuple[Fraction, ...]:
    m = M.at(p)
    r = m.rank()
    if r == M.n:
        raise NotOnScheme(f"rank {r} at {tuple(map(str, p))}: point not on the scheme")
    ker = kernel_basis(m)
    if len(ker) > 1:
        raise SigmaUndetermined(f"kernel of dimension {len(ker)} at {tuple(map(str, p))}")
    return normalize_point(ker[0])


def verify_sigma_formula(M: MultilinearMatrix, chart: int, formula: Callable,
                         sample: Sequence) -> bool:
    """``chart`` is a 1-based generator index; ``formula(p)`` gives 4 coordinates."""
    for p in sample:
        p = [Q(x) for x in p]
        if p[chart - 1] == 0:
            raise ValueError(f"sample point {p} is outside chart {chart}")
        if M.at(p).rank() == M.n:
            raise NotOnScheme(f"sample point {tuple(map(str, p))} is off the scheme")
        if not projectively_equal(sigma_at(M, p), formula(p)):
            return False
    return True


def residual_polynomials(I: MinorIdeal, q: QuadricSpec) -> list[CommPoly]:
    if I.all_zero():
        raise AllMinorsZero("all minors vanish identically")
    out = []
    for p in I.polys:
        ok, quo = poly_divisible(p, [q.l1, q.l2])
        if not ok:
            raise ValueError("a minor is not divisible by the quadric")
        out.append(quo)
    return out


def grid_points(count: int, condition: Callable | None = None, coords=GRID_COORDS) -> list:
    """First ``count`` projectively distinct grid points satisfying ``condition``."""
    out, seen = [], set()
    for p in itertools.product(coords, repeat=4):
        if not any(p):
            continue
        p = tuple(Fraction(x) for x in p)
        if condition is not None and not condition(p):
            continue
        key = normalize_point(p)
        if key in seen:
            continue
        seen.add(key)
        out.append(p)
        if len(out) == count:
            break
    return out


def plane_samples(q: QuadricSpec, count_per_plane: int, condition: Callable | None = None) -> list:
    """Deterministic grid points on V(l1) then on V(l2)."""
    pts = []
    for form in (q.l1, q.l2):
        pts += grid_points(count_per_plane,
                           lambda p, f=form: f(p) == 0 and (condition is None or condition(p)))
    return pts


def line_points(line: Line, count: int) -> list:
    base, d = line.param()
    ts = [0, 1, -1, 2, -2, 3, Fraction(1, 2), -3]
    pts = [tuple(b + Fraction(t) * x for b, x in zip(base, d)) for t in ts[:count - 1]]
    return pts + [tuple(d)] if count > len(pts) else pts


@dataclass
class SchemeReport:
    classification: str
    divisible: list = field(default_factory=list)
    residuals: list = field(default_factory=list)
    candidates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"classification": self.classification, "divisible": self.divisible,
                "residuals": [str(r) for r in self.residuals], "candidates": self.candidates}


def scheme_report(P: QuadraticPresentation, q: QuadricSpec, candidates: Sequence = ()) -> SchemeReport:
    """Classify: all_minors_zero, contains_quadric (with residuals), or other."""
    I = minors(multilinearize(P))
    cand = {str(l): contains_component(I, l) for l in candidates}
    if I.all_zero():
        return SchemeReport("all_minors_zero", candidates=cand)
    div = [poly_divisible(p, [q.l1, q.l2])[0] for p in I.polys]
    if all(div):
        return SchemeReport("contains_quadric", div, residual_polynomials(I, q), cand)
    return SchemeReport("other", div, [], cand)
