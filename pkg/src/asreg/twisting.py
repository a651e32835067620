"""Zhang twists, stabilizers of the relation span, pair twists and Ore data.

Maps are given as point matrices (the convention of ``coordinate_rings``);
on generators they act through the transpose (``pullback``).  With this
choice ``zhang_twist(P, t1 @ t2)`` equals
``zhang_twist(zhang_twist(P, t1), t2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import QMatrix, Q, Subspace, SingularMatrix
from .tensor import (QuadraticPresentation, TensorElement, pullback, reduce,
                     transform_tensor)

__all__ = [
    "TwistMap",
    "zhang_twist",
    "stabilizes",
    "pair_twist",
    "transform_relations",
    "hv_twist_map",
    "hv_match_search",
    "HVMatch",
    "HV_GRIDS",
    "OreData",
    "NotAnAutomorphism",
    "sigma_derivation_check",
    "ore_presentation",
]


def _invertible(m: QMatrix, n: int, what: str = "map") -> None:
    if m.shape != (n, n) or not m.is_invertible():
        raise SingularMatrix(f"{what} must be an invertible {n}x{n} matrix")


def transform_relations(P: QuadraticPresentation, f_hat: QMatrix, g_hat: QMatrix
                        ) -> QuadraticPresentation:
    """Relation span ``(f_hat (x) g_hat) W`` with the maps acting on coefficients."""
    rows = [transform_tensor(e, (f_hat, g_hat)).coeffs for e in P.relation_elements()]
    return QuadraticPresentation(P.gen_names, Subspace(P.n * P.n, rows))


def zhang_twist(P: QuadraticPresentation, tau: QMatrix) -> QuadraticPresentation:
    """Relations ``sum c_ij x_i^tau x_j`` for each relation ``sum c_ij x_i x_j``."""
    _invertible(tau, P.n, "tau")
    return transform_relations(P, pullback(tau), QMatrix.identity(P.n))


def stabilizes(P: QuadraticPresentation, tau: QMatrix) -> bool:
    """Is ``tau`` a graded automorphism, i.e. ``(tau (x) tau) W = W``?"""
    _invertible(tau, P.n, "tau")
    h = pullback(tau)
    return transform_relations(P, h, h).relations == P.relations


@dataclass(frozen=True)
class TwistMap:
    f: QMatrix
    g: QMatrix

    def __post_init__(self):
        for m in (self.f, self.g):
            if m.rows != m.cols or not m.is_invertible():
                raise SingularMatrix("twist maps must be invertible")


def pair_twist(P: QuadraticPresentation, m: TwistMap) -> QuadraticPresentation:
    """Relation span ``(f (x) g) W``; f, g are point matrices like tau."""
    if m.f.rows != P.n or m.g.rows != P.n:
        raise SingularMatrix("twist map size does not match generator count")
    return transform_relations(P, pullback(m.f), pullback(m.g))


def hv_twist_map(t: QMatrix, tau: QMatrix, n: int) -> TwistMap:
    """Degree-2 part of ``a1 a2 -> tau^(-n) t^n (a1) * tau^(-1-n) t^n tau (a2)``."""
    for m in (t, tau):
        if m.rows != m.cols or not m.is_invertible():
            raise SingularMatrix("t and tau must be invertible")
    tn = t ** n
    f = (tau ** (-n)) @ tn
    g = (tau ** (-1 - n)) @ tn @ tau
    return TwistMap(f, g)


# parameter grids for hv_match_search: a, q (nonzero), alpha, beta, n
_SMALL = [Fraction(x) for x in (1, -1, 2, -2)] + [Fraction(1, 2), Fraction(-1, 2)]
HV_GRIDS = {
    "small": {
        "a": _SMALL,
        "q": _SMALL,
        "alpha": [Fraction(x) for x in (-1, 2, -2)],
        "beta": [Fraction(x) for x in (1, -1)],
        "n": [0, 1, 2],
    },
    "wide": {
        "a": _SMALL + [Fraction(x) for x in (3, -3)],
        "q": _SMALL + [Fraction(x) for x in (3, -3)],
        "alpha": [Fraction(x) for x in (-1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 2)],
        "beta": [Fraction(x) for x in (1, -1, 2, -2)],
        "n": [-1, 0, 1, 2, 3],
    },
}


@dataclass(frozen=True)
class HVMatch:
    params: dict
    twist: TwistMap
    base_tau: str


def hv_remark_matrices(a, q) -> tuple[QMatrix, QMatrix]:
    """``t = diag(a,1,1,1)`` and ``tau`` with ``tau^-1 = diag(-1/q, -q, -1, 1)``."""
    a, q = Q(a), Q(q)
    t = QMatrix.diag([a, 1, 1, 1])
    tau = QMatrix.diag([-1 / q, -q, -1, 1]).inverse()
    return t, tau


def hv_match_search(target: QuadraticPresentation, grid: dict | str = "small",
                    base_taus: Sequence[str] = ("identity",)) -> HVMatch | None:
    """First grid point (lexicographic in a, q, alpha, beta, n) reproducing ``target``.

    The family instance is ``prop1_a(alpha, beta)`` twisted by ``identity``
    (the untwisted family) or, with ``base_taus`` containing ``"remark"``,
    by the same tau that enters the twisting system.
    """
    from .catalog import prop1_a_relations

    if isinstance(grid, str):
        grid = HV_GRIDS[grid]
    for a, q, alpha, beta, n in itertools.product(
            grid["a"], grid["q"], grid["alpha"], grid["beta"], grid["n"]):
        alpha, beta = Q(alpha), Q(beta)
        if alpha in (0, 1) or beta == 0 or Q(a) == 0 or Q(q) == 0:
            continue
        t, tau = hv_remark_matrices(a, q)
        m = hv_twist_map(t, tau, n)
        for bt in base_taus:
            base = prop1_a_relations(alpha, beta, tau if bt == "remark" else None)
            if pair_twist(base, m).relations == target.relations:
                params = {"a": Q(a), "q": Q(q), "alpha": alpha, "beta": beta, "n": n}
                return HVMatch(params, m, bt)
    return None


class NotAnAutomorphism(ValueError):
    """sigma does not preserve the relations of the base ring."""


@dataclass
class OreData:
    """``B[z; sigma, delta]`` with ``z b = sigma(b) z + delta(b)`` for generators b.

    ``sigma_map`` row i is the image of the i-th base generator; ``delta``
    maps a generator index to a degree-2 tensor of the base (missing = 0).
    ``position`` is where z sits among the generators of the extension.
    """

    base: QuadraticPresentation
    sigma_map: QMatrix
    delta: dict = field(default_factory=dict)
    adjoint: str = "z"
    position: int | None = None

    def __post_init__(self):
        n = self.base.n
        if self.sigma_map.shape != (n, n) or not self.sigma_map.is_invertible():
            raise SingularMatrix("sigma must be invertible")
        for i, d in self.delta.items():
            if not 0 <= i < n or d.degree != 2 or d.n != n:
                raise ValueError("delta must send generators to degree-2 tensors")
        if self.position is None:
            self.position = n

    def sigma_of(self, i: int) -> TensorElement:
        return TensorElement.linear(self.sigma_map.row(i), self.base.n)

    def delta_of(self, i: int) -> TensorElement:
        return self.delta.get(i, TensorElement(self.base.n, 2))


def sigma_derivation_check(o: OreData) -> bool:
    """Compatibility of (sigma, delta) with the base relations.

    Raises NotAnAutomorphism when sigma does not stabilize the base relation
    span.  Otherwise checks that every relation sum c_ij x_i x_j satisfies
    ``sum c_ij (sigma(x_i) delta(x_j) + delta(x_i) x_j) = 0`` in degree 3.
    """
    B = o.base
    n = B.n
    # sigma(x_i) = sum_k S[i,k] x_k: as a coefficient map this is S^T
    h = o.sigma_map.T
    img = transform_relations(B, h, h)
    if img.relations != B.relations:
        raise NotAnAutomorphism("sigma does not preserve the base relations")
    for rel in B.relation_elements():
        acc = TensorElement(n, 3)
        for idx, c in rel.coeffs.items():
            i, j = divmod(idx, n)
            acc = acc + (o.sigma_of(i) * o.delta_of(j) + o.delta_of(i) * TensorElement.gen(j, n)).scale(c)
        if not reduce(B, acc).is_zero():
            return False
    return True


def ore_presentation(o: OreData) -> QuadraticPresentation:
    """Quadratic presentation of the Ore extension on n+1 generators."""
    B = o.base
    n = B.n
    m = n + 1
    pos = o.position
    emb = [k if k < pos else k + 1 for k in range(n)]

    def embed(e: TensorElement) -> TensorElement:
        out = {}
        for idx, x in e.coeffs.items():
            word = []
            rest = idx
            for _ in range(e.degree):
                rest, r = divmod(rest, n)
                word.append(emb[r])
            key = 0
            for letter in reversed(word):
                key = key * m + letter
            out[key] = x
        return TensorElement(m, e.degree, out)

    rels = [embed(r) for r in B.relation_elements()]
    z = TensorElement.gen(pos, m)
    for i in range(n):
        b = TensorElement.gen(emb[i], m)
        rels.append(z * b - embed(o.sigma_of(i)) * z - embed(o.delta_of(i)))
    names = list(B.gen_names)
    names.insert(pos, o.adjoint)
    return QuadraticPresentation.from_relations(rels, names)
