"""Jacobian partials of the minor ideal and multiplicities along lines.

The multiplicity of ``V(polys)`` along a line at a parameter is the least
order of vanishing of the restricted polynomials there; for a line this is
the length of the restricted local ring ``k[t]_(t)/(f_1, ..., f_r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from fractions import Fraction
from typing import Sequence

from .coordinate_rings import QuadricSpec, check_surjection
from .linalg import Q
from .point_scheme import Line, MinorIdeal, minors, multilinearize, normalize_point
from .polynomials import CommPoly, LinearForm, restrict_to_line
from .tensor import QuadraticPresentation

__all__ = [
    "LineParam",
    "LineContained",
    "INF",
    "jacobian_partials",
    "vanishing_at",
    "line_multiplicity",
    "intersection_parameters",
    "L_line",
    "K_line",
    "multiplicity_report",
]

INF = "inf"


class LineContained(ValueError):
    """Every restricted polynomial vanishes identically."""


@dataclass(frozen=True)
class LineParam:
    base: tuple
    dir: tuple

    def __post_init__(self):
        b = tuple(Q(x) for x in self.base)
        d = tuple(Q(x) for x in self.dir)
        object.__setattr__(self, "base", b)
        object.__setattr__(self, "dir", d)
        if all(b[i] * d[j] == b[j] * d[i] for i in range(len(b)) for j in range(len(b))):
            raise ValueError("base and direction are proportional")

    def point(self, at) -> tuple:
        if at == INF:
            return self.dir
        t = Q(at)
        return tuple(b + t * d for b, d in zip(self.base, self.dir))

    @classmethod
    def from_line(cls, line: Line) -> "LineParam":
        a, b = line.param()
        return cls(a, b)

    @classmethod
    def parse(cls, text: str) -> "LineParam":
        """``"base=0,0,1,0;dir=1,1,0,0"``."""
        parts = dict(p.split("=", 1) for p in text.replace(" ", "").split(";"))
        return cls(tuple(Q(x) for x in parts["base"].split(",")),
                   tuple(Q(x) for x in parts["dir"].split(",")))


def L_line(n) -> LineParam:
    """``V(x1 - x2, n x3 - x4)``; meets V(x1, x2) at (0,0,1,n) (t = 0)."""
    if n == INF:
        return LineParam((0, 0, 0, 1), (1, 1, 0, 0))
    return LineParam((0, 0, 1, Q(n)), (1, 1, 0, 0))


def K_line(n) -> LineParam:
    """``V(x3 - n x2, x1 - x4)``; meets V(x1, x4) at (0,1,n,0) (t = 0)."""
    return LineParam((0, 1, Q(n), 0), (1, 0, 0, 1))


def jacobian_partials(I) -> list[list[CommPoly]]:
    polys = I.polys if isinstance(I, MinorIdeal) else list(I)
    return [[p.partial(v) for v in p.variables] for p in polys]


def vanishing_at(polys: Sequence[CommPoly], p) -> bool:
    if not any(Q(x) for x in p):
        raise ValueError("zero vector is not a point")
    return all(f(p) == 0 for f in polys)


def _order(coeffs: list) -> int | None:
    for i, c in enumerate(coeffs):
        if c:
            return i
    return None


def line_multiplicity(polys: Sequence[CommPoly], line: LineParam, at) -> int:
    if at == INF:
        base, d = line.dir, line.base            # s = 1/t chart: dir + s*base
    else:
        t = Q(at)
        base, d = tuple(b + t * x for b, x in zip(line.base, line.dir)), line.dir
    orders = []
    for f in polys:
        if f.is_zero():
            continue
        o = _order(restrict_to_line(f, base, d))
        if o is not None:
            orders.append(o)
    if not orders:
        raise LineContained("line lies in the zero set")
    return min(orders)


def intersection_parameters(f: CommPoly, line: LineParam) -> list:
    """Rational roots t of ``f(base + t dir)`` plus ``inf`` when ``f(dir) = 0``."""
    coeffs = restrict_to_line(f, line.base, line.dir)
    if not coeffs:
        raise LineContained("line lies in the zero set")
    roots = _rational_roots(coeffs)
    if f(line.dir) == 0:
        roots.append(INF)
    return roots


def _rational_roots(coeffs: list) -> list:
    """Distinct rational roots of a univariate polynomial (constant term first)."""
    import math
    c = [Q(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    roots = []
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
    c = c[k:]
    if len(c) <= 1:
        return roots
    den = math.lcm(*(x.denominator for x in c))
    ints = [int(x * den) for x in c]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(m):
        return [d for d in range(1, m + 1) if m % d == 0]

    for p in divisors(a0):
        for q in divisors(an):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in roots and sum(x * r ** i for i, x in enumerate(c)) == 0:
                    roots.append(r)
    return sorted(roots)


def multiplicity_report(P: QuadraticPresentation, q: QuadricSpec,
                        candidates: Sequence[Line] = (), grid=(0, 1, 2, INF),
                        tau=None) -> dict:
    """Minors, Jacobian loci, L_n / K_n slices and a classification.

    Classification is one of ``all_minors_zero``, ``consistent_with_P_eq_Q``,
    ``Q_uplus_L`` (with the embedded line named), ``Q_union_L`` or
    ``inconsistent``.
    """
    if not check_surjection(P, q, tau):
        raise ValueError("presentation does not map onto the coordinate ring of Q")
    I = minors(multilinearize(P))
    rep = {"minors": [str(p) for p in I.polys]}
    if I.all_zero():
        rep["classification"] = "all_minors_zero"
        return rep
    J = jacobian_partials(I)
    flat = [p for row in J for p in row]
    coord_lines = {}
    names = [f"Y{i + 1}" for i in range(4)]
    for i, j in combinations(range(4), 2):
        ln = Line(LinearForm.coordinate(i), LinearForm.coordinate(j))
        a, b = ln.param()
        vanish = all(not any(restrict_to_line(f, a, b)) for f in flat if not f.is_zero())
        coord_lines[f"V({names[i]},{names[j]})"] = vanish
    rep["jacobian_vanishing_lines"] = coord_lines
    cand = {str(l): _line_in(I, l) for l in candidates}
    rep["candidates"] = cand
    L = {}
    for n in grid:
        try:
            L[str(n)] = line_multiplicity(I.polys, L_line(n), 0)
        except LineContained:
            L[str(n)] = "contained"
    rep["L_slices"] = L
    # K_n slices probe points (0,1,n,0) of V(Y1, Y4)
    K = {}
    for n in [g for g in grid if g != INF]:
        try:
            K[str(n)] = line_multiplicity(I.polys, K_line(n), 0)
        except LineContained:
            K[str(n)] = "contained"
    rep["K_slices"] = K
    reduced_q = all(ok for ok in (_divides(p, q) for p in I.polys))
    rep["quadric_in_scheme"] = reduced_q
    # a candidate lying on Q is inside every scheme containing Q; only lines
    # off Q can witness an extra component
    extra = [str(l) for l in candidates if cand[str(l)] and not _line_on_q(l, q)]
    embedded = [name for name, v in coord_lines.items()
                if v and name != "V(Y1,Y2)" and _on_q(name, q)]
    if not reduced_q:
        rep["classification"] = "inconsistent"
    elif extra:
        rep["classification"] = "Q_union_L"
        rep["line"] = extra[0]
    elif embedded and all(v == 2 for v in K.values()) and any(v == 3 for v in L.values()):
        rep["classification"] = "Q_uplus_L"
        rep["line"] = embedded[0]
    elif all(v == 2 for v in L.values()):
        rep["classification"] = "consistent_with_P_eq_Q"
    else:
        rep["classification"] = "inconsistent"
    return rep


def _divides(p, q: QuadricSpec) -> bool:
    from .polynomials import poly_divisible
    return poly_divisible(p, [q.l1, q.l2])[0]


def _line_in(I: MinorIdeal, line: Line) -> bool:
    a, b = line.param()
    return all(not any(restrict_to_line(f, a, b)) for f in I.polys)


def _on_q(name: str, q: QuadricSpec) -> bool:
    idx = [int(c) - 1 for c in name if c.isdigit()]
    return _line_on_q(Line(LinearForm.coordinate(idx[0]), LinearForm.coordinate(idx[1])), q)


def _line_on_q(line: Line, q: QuadricSpec) -> bool:
    # l1 l2 restricted to the line is a quadratic; three zeros make it vanish
    a, b = line.param()
    return all(q.contains(p) for p in (a, b, tuple(x + y for x, y in zip(a, b))))
