"""Degree-2 relations of twisted coordinate rings of rank-two quadrics.

A tensor ``u (x) v`` is evaluated on a pair of points ``(p, p')`` as
``u(p) * v(p')``; the graph of ``tau`` is ``{(p, tau p)}``.  Hence
``u^tau(p) = u(tau p)`` and, on coefficient vectors, ``u^tau = tau^T u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import QMatrix, Q, Subspace, SingularMatrix, kernel_basis, span_compare
from .polynomials import CommPoly, LinearForm
from .tensor import QuadraticPresentation, TensorElement, pullback, reduce

__all__ = [
    "QuadricSpec",
    "GraphRelationSpace",
    "OmegaError",
    "SurjectionError",
    "thcr_relation_space",
    "thcr_presentation",
    "check_surjection",
    "extract_omega",
    "omega_tensor",
    "omega_scalars",
    "omega_multiple_check",
    "graph_commutator",
]


class OmegaError(ValueError):
    """The quadric lift is zero in degree 2."""


class SurjectionError(ValueError):
    """The relations are not contained in the coordinate ring's relations."""


@dataclass(frozen=True)
class QuadricSpec:
    l1: LinearForm
    l2: LinearForm

    def __post_init__(self):
        l1, l2 = self.l1, self.l2
        if not isinstance(l1, LinearForm):
            object.__setattr__(self, "l1", LinearForm(l1))
        if not isinstance(l2, LinearForm):
            object.__setattr__(self, "l2", LinearForm(l2))
        if len(self.l1) != len(self.l2):
            raise ValueError("forms on different spaces")
        if QMatrix.from_rows([list(self.l1), list(self.l2)]).rank() < 2:
            raise ValueError("rank-two quadric needs independent linear forms")

    @classmethod
    def standard(cls) -> "QuadricSpec":
        """``V(x1 x2)``."""
        return cls(LinearForm.coordinate(0), LinearForm.coordinate(1))

    @property
    def n(self) -> int:
        return len(self.l1)

    @property
    def quadric(self) -> CommPoly:
        return self.l1.to_poly() * self.l2.to_poly()

    def contains(self, p) -> bool:
        return self.l1(p) == 0 or self.l2(p) == 0

    def __str__(self):
        return f"({self.l1}, {self.l2})"


@dataclass(frozen=True)
class GraphRelationSpace:
    tau: QMatrix
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def _check_tau(tau: QMatrix, n: int) -> None:
    if tau.shape != (n, n) or not tau.is_invertible():
        raise SingularMatrix("tau must be an invertible n x n matrix")


def thcr_relation_space(q: QuadricSpec, tau: QMatrix) -> GraphRelationSpace:
    """All ``c`` with ``sum c_ij Y_i (tau Y)_j`` a rational multiple of ``l1*l2``.

    Unknowns are the n^2 entries of ``c`` plus the multiplier; one equation
    per monomial ``Y_a Y_b`` (a <= b).
    """
    n = q.n
    _check_tau(tau, n)
    monos = [(a, b) for a in range(n) for b in range(a, n)]
    pos = {m: r for r, m in enumerate(monos)}
    rows = [[Fraction(0)] * (n * n + 1) for _ in monos]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = tau[j, k]
                if t:
                    rows[pos[(min(i, k), max(i, k))]][i * n + j] += t
    l1, l2 = list(q.l1), list(q.l2)
    for a in range(n):
        for b in range(n):
            x = l1[a] * l2[b]
            if x:
                rows[pos[(min(a, b), max(a, b))]][n * n] -= x
    ker = kernel_basis(QMatrix.from_rows(rows))
    space = Subspace(n * n, [v[:n * n] for v in ker])
    return GraphRelationSpace(tau, space)


def thcr_presentation(q: QuadricSpec, tau: QMatrix | None = None) -> QuadraticPresentation:
    """Quadratic part of the twisted coordinate ring, as a presentation."""
    tau = tau if tau is not None else QMatrix.identity(q.n)
    return QuadraticPresentation(tuple(f"x{i + 1}" for i in range(q.n)),
                                 thcr_relation_space(q, tau).space)


def check_surjection(P: QuadraticPresentation, q: QuadricSpec, tau: QMatrix | None = None) -> bool:
    """Does ``R -> S`` exist in degree 2, i.e. ``W`` is inside ``W_S``?

    ``W = W_S`` (the ring S itself) also counts as a surjection.
    """
    tau = tau if tau is not None else QMatrix.identity(P.n)
    ws = thcr_relation_space(q, tau).space
    return span_compare(P.relations, ws) in ("a_subset_b", "equal")


def omega_tensor(q: QuadricSpec, tau: QMatrix | None = None) -> TensorElement:
    """``l1^tau (x) l2``; an element of ``W_S`` (plain ``l1 (x) l2`` when tau = id)."""
    n = q.n
    tau = tau if tau is not None else QMatrix.identity(n)
    a = TensorElement.linear(pullback(tau) @ list(q.l1), n)
    return a * TensorElement.linear(list(q.l2), n)


def extract_omega(P: QuadraticPresentation, q: QuadricSpec, tau: QMatrix | None = None
                  ) -> TensorElement:
    """Reduced representative of the class spanning ``W_S / W``."""
    if not check_surjection(P, q, tau):
        raise SurjectionError("relations do not vanish on the graph of tau over Q")
    om = reduce(P, omega_tensor(q, tau))
    if om.is_zero():
        raise OmegaError("the quadric lift is zero in A_2; presentation is degenerate")
    return om


def graph_commutator(u: Sequence, v: Sequence, tau: QMatrix) -> TensorElement:
    """``u^tau (x) v - v^tau (x) u`` for linear forms given by coefficients."""
    n = tau.rows
    h = pullback(tau)
    U, Vv = TensorElement.linear(u, n), TensorElement.linear(v, n)
    return (TensorElement.linear(h @ list(u), n) * Vv
            - TensorElement.linear(h @ list(v), n) * U)


def _ratio(a: TensorElement, b: TensorElement) -> Fraction | None:
    """The scalar c with a = c*b, or None."""
    if a.is_zero():
        return Fraction(0)
    k = next(iter(a.coeffs))
    if k not in b.coeffs:
        return None
    c = a.coeffs[k] / b.coeffs[k]
    return c if a == b.scale(c) else None


def omega_scalars(P: QuadraticPresentation, tau: QMatrix | None, omega: TensorElement
                  ) -> dict:
    """``{(a, b): c}`` with ``nf(x_a^tau x_b - x_b^tau x_a) = c * omega``; None if off the line."""
    n = P.n
    tau = tau if tau is not None else QMatrix.identity(n)
    omega = reduce(P, omega)
    if omega.is_zero():
        raise OmegaError("omega must be nonzero")
    out = {}
    for a in range(n):
        for b in range(n):
            ea = [1 if i == a else 0 for i in range(n)]
            eb = [1 if i == b else 0 for i in range(n)]
            out[(a, b)] = _ratio(reduce(P, graph_commutator(ea, eb, tau)), omega)
    return out


def omega_multiple_check(P: QuadraticPresentation, tau: QMatrix | None, omega: TensorElement
                         ) -> bool:
    return all(c is not None for c in omega_scalars(P, tau, omega).values())
