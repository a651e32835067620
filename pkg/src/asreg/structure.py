"""Centrality, normality, the adapted generators construction and
normalizing sequences.

Degree-1 normality is decided in degree 2: if ``v A_1 = A_1 v`` then
``v A_n = v A_1 A_{n-1} = A_1 v A_{n-1} = ... = A_n v`` by induction.  The
same argument with ``A_1 w = w A_1`` in degree 3 settles a degree-2 element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coordinate_rings import QuadricSpec, check_surjection
from .linalg import Echelon, QMatrix, Q, Subspace, kernel_basis, solve
from .tensor import QuadraticPresentation, TensorElement, reduce
from .twisting import transform_relations, zhang_twist

__all__ = [
    "NormalityCertificate",
    "AdaptedBasis",
    "NotNormal",
    "ZeroProduct",
    "PreconditionError",
    "central_space",
    "is_normal_deg1",
    "is_normal_deg2",
    "is_normal_up_to",
    "normal_pair_scalar",
    "adapted_generators",
    "quotient_by",
    "normalizing_sequence_report",
    "normalizing_sequence_check",
]


class NotNormal(ValueError):
    pass


class ZeroProduct(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class NormalityCertificate:
    element: TensorElement
    is_normal: bool
    phi: QMatrix | None = None
    witness: TensorElement | None = None
    phi_unique: bool = True

    def to_json(self, names=None) -> dict:
        return {
            "element": self.element.format(names),
            "normal": self.is_normal,
            "phi": self.phi.to_str() if self.phi is not None else None,
            "witness": self.witness.format(names) if self.witness is not None else None,
        }


def _as_elem(P: QuadraticPresentation, v, degree: int = 1) -> TensorElement:
    if isinstance(v, TensorElement):
        return v
    return TensorElement.linear(list(v), P.n) if degree == 1 else TensorElement(P.n, degree, v)


def central_space(P: QuadraticPresentation) -> Subspace:
    """All v in V with ``v x - x v`` zero in A_2 for every generator x."""
    n = P.n
    comp = P.component(2)
    cols = []
    for i in range(n):
        xi = P.gen(i)
        col = []
        for j in range(n):
            col.extend(comp.coordinates(xi * P.gen(j) - P.gen(j) * xi))
        cols.append(col)
    m = QMatrix.from_rows(cols).T if cols and cols[0] else QMatrix.zeros(0, n)
    return Subspace(n, kernel_basis(m))


def _span(P: QuadraticPresentation, elems: Sequence[TensorElement], d: int) -> Echelon:
    ech = Echelon(P.n ** d, "last")
    for e in elems:
        ech.add(reduce(P, e).coeffs)
    return ech


def _side_products(P, w: TensorElement, k: int):
    """Reduced ``w u`` and ``u w`` for u over the standard words of degree k."""
    comp = P.component(k)
    words = [TensorElement(P.n, k, {c: 1}) for c in comp.complement_basis]
    return ([reduce(P, w * u) for u in words], [reduce(P, u * w) for u in words])


def _compare_sides(P, w: TensorElement, k: int):
    left, right = _side_products(P, w, k)
    d = w.degree + k
    L, R = _span(P, left, d), _span(P, right, d)
    for e in right:
        if not L.contains(e.coeffs):
            return False, e
    for e in left:
        if not R.contains(e.coeffs):
            return False, e
    return True, None


def is_normal_deg1(P: QuadraticPresentation, v) -> NormalityCertificate:
    """Normality of a degree-1 element and its automorphism phi.

    phi is returned as a matrix whose row j is ``phi(x_j)``, where
    ``v x_j = phi(x_j) v`` in A_2.
    """
    v = _as_elem(P, v)
    if v.is_zero():
        raise ValueError("zero element")
    ok, witness = _compare_sides(P, v, 1)
    if not ok:
        return NormalityCertificate(v, False, None, witness)
    n = P.n
    comp = P.component(2)
    cols = [comp.coordinates(P.gen(k) * v) for k in range(n)]
    M = QMatrix.from_rows(cols).T
    rows = []
    for j in range(n):
        sol = solve(M, comp.coordinates(v * P.gen(j)))
        if sol is None:                          # cannot happen when spans agree
            return NormalityCertificate(v, False, None, reduce(P, v * P.gen(j)))
        rows.append(sol)
    return NormalityCertificate(v, True, QMatrix.from_rows(rows), None, M.rank() == n)


def is_normal_deg2(P: QuadraticPresentation, omega) -> NormalityCertificate:
    w = _as_elem(P, omega, 2)
    if reduce(P, w).is_zero():
        raise ValueError("zero element")
    ok, witness = _compare_sides(P, w, 1)
    return NormalityCertificate(w, ok, None, witness)


def is_normal_up_to(P: QuadraticPresentation, elem: TensorElement, degree: int) -> bool:
    """Direct check ``w A_k = A_k w`` for every k with deg w + k <= degree."""
    return all(_compare_sides(P, elem, k)[0] for k in range(1, degree - elem.degree + 1))


def _proportion(a: TensorElement, b: TensorElement) -> Fraction | None:
    if b.is_zero():
        return None
    k = next(iter(b.coeffs))
    c = a.coeffs.get(k, Fraction(0)) / b.coeffs[k]
    return c if a == b.scale(c) else None


def normal_pair_scalar(P: QuadraticPresentation, v, w) -> Fraction:
    """The alpha with ``v w = alpha w v`` for normal degree-1 v, w."""
    v, w = _as_elem(P, v), _as_elem(P, w)
    a, b = reduce(P, v * w), reduce(P, w * v)
    if a.is_zero() or b.is_zero():
        raise ZeroProduct("product of the two elements is zero; not a domain")
    for e in (v, w):
        if not is_normal_deg1(P, e).is_normal:
            raise NotNormal(f"{e.format(P.gen_names)} is not normal")
    c = _proportion(a, b)
    if c is None:
        raise ZeroProduct("products are not proportional")
    return c


# -- adapted generators -------------------------------------------------------------

@dataclass
class AdaptedBasis:
    change_of_basis: QMatrix        # row k = new generator k in old coordinates
    transformed: QuadraticPresentation
    branch: str
    alphas: dict = field(default_factory=dict)
    y: tuple | None = None
    omega: TensorElement | None = None
    twisted_by: QMatrix | None = None


def _vec(x) -> list:
    return [Q(c) for c in x]


def _next_outside(span: list, n: int) -> list:
    for k in range(n):
        e = [Fraction(int(i == k)) for i in range(n)]
        if QMatrix.from_rows(span + [e]).rank() > len(span):
            return e
    raise PreconditionError("no vector outside the span")


def _lin_comb(*pairs) -> list:
    n = len(pairs[0][1])
    out = [Fraction(0)] * n
    for c, v in pairs:
        for i in range(n):
            out[i] += Q(c) * v[i]
    return out


def adapted_generators(P: QuadraticPresentation, q: QuadricSpec,
                       tau: QMatrix | None = None) -> AdaptedBasis:
    """Generators x1..x4 making the quadric lift visibly normal.

    When tau is not the identity the algebra is first twisted by tau^-1 so
    the coordinate ring becomes the commutative one.
    """
    n = P.n
    twisted_by = None
    if tau is not None and tau != QMatrix.identity(n):
        twisted_by = tau.inverse()
        P = zhang_twist(P, twisted_by)
    if not check_surjection(P, q):
        raise PreconditionError("relations do not vanish on Q (after untwisting)")

    def comm(u, v):
        U, V_ = TensorElement.linear(u, n), TensorElement.linear(v, n)
        return reduce(P, U * V_ - V_ * U)

    X1, X2 = _vec(q.l1), _vec(q.l2)
    om = reduce(P, TensorElement.linear(X1, n) * TensorElement.linear(X2, n))
    if om.is_zero():
        raise PreconditionError("l1 l2 is zero in A_2 (not a domain)")

    def alpha(u, v, label):
        c = _proportion(comm(u, v), om)
        if c is None:
            raise PreconditionError(f"commutator of {label} is not a multiple of Omega")
        return c

    X3 = _next_outside([X1, X2], n)
    a12, a13, a23 = alpha(X1, X2, "X1, X2"), alpha(X1, X3, "X1, X3"), alpha(X2, X3, "X2, X3")
    y = _lin_comb((a23, X1), (-a13, X2), (a12, X3))

    def prop(u, v):
        return QMatrix.from_rows([u, v]).rank() == 1

    is_plane = any(y) and (prop(y, X1) or prop(y, X2))
    if is_plane:
        branch = "plane"
        if prop(y, X2) and not prop(y, X1):
            X1, X2 = X2, X1
            om = reduce(P, TensorElement.linear(X1, n) * TensorElement.linear(X2, n))
            a12, a13, a23 = -a12, a23, a13
        w = _next_outside([X1, X2, X3], n)
        beta = alpha(X3, w, "X3, w")
        z = w if beta == 0 else _lin_comb((a23, w), (beta, X2))
        gamma = alpha(X2, z, "X2, z")
        X4 = z if gamma == 0 else _lin_comb((a23, z), (-gamma, X3))
        gens = [X1, X2, X3, X4]
    elif a12 != 0:
        branch = "two_lines_noncommutative"
        x3 = y
        w = _next_outside([X1, X2, x3], n)
        beta = alpha(X1, w, "x1, w")
        z = w if beta == 0 else _lin_comb((a12, w), (-beta, X2))
        gamma = alpha(X2, z, "x2, z")
        x4 = z if gamma == 0 else _lin_comb((a12, z), (gamma, X1))
        gens = [X1, X2, x3, x4]
    else:
        branch = "two_lines_commutative"
        x3 = y if any(y) and QMatrix.from_rows([X1, X2, y]).rank() == 3 else X3
        gens = [X1, X2, x3, _next_outside([X1, X2, x3], n)]
    g = QMatrix.from_rows(gens)
    if not g.is_invertible():
        raise PreconditionError("constructed generators are dependent")
    # old x_i = sum_k G[i,k] new_k with G = g^-1; coefficients move by G^T per factor
    G = g.inverse()
    new = transform_relations(P, G.T, G.T)
    new = QuadraticPresentation(P.gen_names, new.relations)
    omega_new = reduce(new, TensorElement.word((0, 1), n))
    if not is_normal_deg2(new, omega_new).is_normal:
        raise PreconditionError(f"Omega not normal in the {branch} basis")
    return AdaptedBasis(g, new, branch, {"a12": a12, "a13": a13, "a23": a23},
                        tuple(y), omega_new, twisted_by)


# -- normalizing sequences --------------------------------------------------------------

def quotient_by(P: QuadraticPresentation, v) -> QuadraticPresentation:
    """Quadratic presentation of ``P/<v>``, keeping all generators.

    Adding ``v V + V v`` to the relations gives the same algebra in degrees
    >= 2 as eliminating v; degree 1 keeps v as a (nonzero) extra vector.
    """
    v = _as_elem(P, v)
    extra = []
    for j in range(P.n):
        extra.append((v * P.gen(j)).coeffs)
        extra.append((P.gen(j) * v).coeffs)
    return QuadraticPresentation(P.gen_names, P.relations + Subspace(P.n * P.n, extra))


def _left_injective(P: QuadraticPresentation, v: TensorElement, d: int) -> bool:
    comp = P.component(d)
    imgs = [reduce(P, v * TensorElement(P.n, d, {c: 1})) for c in comp.complement_basis]
    return _span(P, imgs, d + 1).rank == comp.dim


def normalizing_sequence_report(P: QuadraticPresentation, v1, v2, max_degree: int = 4) -> dict:
    v1, v2 = _as_elem(P, v1), _as_elem(P, v2)
    if QMatrix.from_rows([v1.dense(), v2.dense()]).rank() < 2:
        raise ValueError("v1, v2 must be independent")
    c1 = is_normal_deg1(P, v1)
    rep = {"v1_normal": c1.is_normal, "v2_normal_mod_v1": False,
           "v1_regular": False, "v2_regular_mod_v1": False}
    if not c1.is_normal:
        rep["ok"] = False
        return rep
    Pq = quotient_by(P, v1)
    rep["v2_normal_mod_v1"] = _compare_sides(Pq, v2, 1)[0]
    rep["v1_regular"] = all(_left_injective(P, v1, d) for d in range(max_degree + 1))
    # the quotient presentation still carries v1 in degree 1, so start at degree 2
    rep["v2_regular_mod_v1"] = all(_left_injective(Pq, v2, d) for d in range(2, max_degree))
    rep["ok"] = all(rep[k] for k in ("v1_normal", "v2_normal_mod_v1", "v1_regular",
                                     "v2_regular_mod_v1"))
    return rep


def normalizing_sequence_check(P: QuadraticPresentation, v1, v2, max_degree: int = 4) -> bool:
    return normalizing_sequence_report(P, v1, v2, max_degree)["ok"]
