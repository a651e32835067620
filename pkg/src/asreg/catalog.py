"""Named algebras with parameter validation and metadata.

Every entry builds a presentation on x1..x4 with Q = V(x1 x2) unless stated
otherwise.  ``*_relations`` helpers return the bare presentation; ``catalog``
returns a :class:`CatalogInstance` carrying tau, Q, lines and declared
central/normal elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coordinate_rings import QuadricSpec, thcr_presentation
from .linalg import QMatrix, Q, kernel_basis
from .parser import parse_expr, parse_form
from .tensor import QuadraticPresentation, TensorElement
from .twisting import zhang_twist

__all__ = ["CatalogError", "CatalogEntry", "CatalogInstance", "ENTRIES", "catalog",
           "parse_params", "FIXED_INSTANCES", "CANDIDATE_LINES", "PLALG_B_DECOYS",
           "prop1_a_relations", "prop1_b_relations", "line_forms"]


class CatalogError(ValueError):
    pass


def _pres(*exprs: str) -> QuadraticPresentation:
    return QuadraticPresentation.from_relations([parse_expr(e) for e in exprs], 4)


def _with(expr: str, **coeffs) -> str:
    for k, v in coeffs.items():
        expr = expr.replace("{" + k + "}", f"({Q(v)})")
    return expr


def _lin(*terms) -> QuadraticPresentation:
    """Relations from (coefficient, i, j) triples (1-based), one tuple per relation."""
    rels = []
    for rel in terms:
        e = TensorElement(4, 2)
        for c, i, j in rel:
            e = e + TensorElement.word((i - 1, j - 1), 4, c)
        rels.append(e)
    return QuadraticPresentation.from_relations(rels, 4)


def line_forms(text: str) -> tuple:
    """``"x1 - x2, x3"`` -> two LinearForms."""
    a, b = text.split(",")
    return parse_form(a), parse_form(b)


CANDIDATE_LINES = ["x3, x4", "x1 - x2, x3", "x1 - x2, x4", "x1 + x2, x3", "x1 + x2, x4"]
PLALG_B_DECOYS = ["x1 - x2, x3", "x1 - x2, x4", "x1 + x2, x3", "x1 + x2, x4", "x1 - x3, x2 - x4"]


# -- relation families -------------------------------------------------------

def poly4() -> QuadraticPresentation:
    return _lin(*[[(1, i, j), (-1, j, i)] for i in range(1, 5) for j in range(i + 1, 5)])


def plalg_b_relations(alpha) -> QuadraticPresentation:
    a = Q(alpha)
    return _lin([(1, 3, 1), (-1, 1, 3)], [(1, 4, 2), (-1, 2, 4)], [(1, 3, 2), (-1, 2, 3)],
                [(1, 4, 1), (-1, 1, 4)], [(1, 3, 4), (-1, 4, 3)], [(1, 2, 1), (1 - a, 1, 2)])


def plalg_c_relations(alpha=1) -> QuadraticPresentation:
    a = Q(alpha)
    return _lin([(1, 3, 1), (-1, 1, 3)], [(1, 2, 1), (-1, 1, 2)], [(1, 3, 2), (-1, 2, 3)],
                [(1, 2, 4), (-1, 4, 2), (-a, 1, 2)], [(1, 3, 4), (-1, 4, 3)],
                [(1, 1, 4), (-1, 4, 1), (-a, 1, 2)])


def plalg_d_relations(alpha=1) -> QuadraticPresentation:
    a = Q(alpha)
    return _lin([(1, 1, 2), (-1, 2, 1)], [(1, 2, 3), (-1, 3, 2)], [(1, 1, 3), (-1, 3, 1)],
                [(1, 2, 4), (-1, 4, 2)], [(1, 1, 4), (-1, 4, 1)],
                [(1, 3, 4), (-1, 4, 3), (-a, 1, 2)])


def plalg_e_relations(alpha=1) -> QuadraticPresentation:
    """Normalized member (alpha = 1) has x2 x4 - x4 x2 = x2 x1."""
    a = Q(alpha)
    return _lin([(1, 1, 2), (-1, 2, 1)], [(1, 2, 3), (-1, 3, 2)], [(1, 1, 3), (-1, 3, 1)],
                [(1, 3, 4), (-1, 4, 3)], [(1, 1, 4), (-1, 4, 1)],
                [(1, 2, 4), (-1, 4, 2), (-a, 2, 1)])


def prop1_a_relations(alpha, beta, tau: QMatrix | None = None) -> QuadraticPresentation:
    a, b = Q(alpha), Q(beta)
    base = _lin([(1, 2, 1), (-a, 1, 2)], [(1, 2, 3), (-1, 3, 2)], [(1, 1, 3), (-1, 3, 1)],
                [(1, 2, 4), (-1, 4, 2)], [(1, 1, 4), (-1, 4, 1)],
                [(1, 3, 4), (-1, 4, 3), (-b, 1, 2)])
    return base if tau is None else zhang_twist(base, tau)


def prop1_b_relations(alpha, beta, tau: QMatrix | None = None) -> QuadraticPresentation:
    a, b = Q(alpha), Q(beta)
    base = _lin([(1, 1, 2), (-1, 2, 1)], [(1, 1, 3), (-1, 3, 1)],
                [(1, 2, 3), (-1, 3, 2), (-a, 1, 2)], [(1, 1, 4), (-1, 4, 1), (-b, 1, 2)],
                [(1, 2, 4), (-1, 4, 2)], [(1, 3, 4), (-1, 4, 3)])
    return base if tau is None else zhang_twist(base, tau)


def ex_notnormal() -> QuadraticPresentation:
    return _lin([(1, 1, 2), (-1, 2, 1)], [(1, 1, 3), (-1, 3, 1)], [(1, 1, 4), (-1, 4, 1)],
                [(1, 2, 4), (-1, 4, 2)], [(1, 3, 4), (-1, 4, 3)], [(1, 1, 2)])


def ex_quadric_only() -> QuadraticPresentation:
    return _lin([(1, 1, 2), (-1, 2, 1)], [(1, 2, 3), (1, 3, 2)], [(1, 1, 3), (-1, 3, 1)],
                [(1, 2, 4), (1, 4, 2)], [(1, 1, 4), (-1, 4, 1)],
                [(1, 3, 4), (-1, 4, 3), (1, 1, 2)])


# -- tau families --------------------------------------------------------------

def _m(rows) -> QMatrix:
    return QMatrix.from_rows(rows)


def tau_b(t22, t33, t34, t43, t44) -> QMatrix:
    return _m([[1, 0, 0, 0], [0, t22, 0, 0], [0, 0, t33, t34], [0, 0, t43, t44]])


def tau_c(t31, t33, t41, t42, t43, swap=False) -> QMatrix:
    top = [[0, 1, 0, 0], [1, 0, 0, 0]] if swap else [[1, 0, 0, 0], [0, 1, 0, 0]]
    t31 = Q(t31)
    return _m(top + [[t31, -t31, t33, 0], [t41, t42, t43, 1]])


def tau_d(t11, t12, t21, t22, t31, t32, t33, t34, t41, t42, t43, t44) -> QMatrix:
    return _m([[t11, t12, 0, 0], [t21, t22, 0, 0], [t31, t32, t33, t34], [t41, t42, t43, t44]])


def tau_e(t22, t33, t31, t41, t42, t43, t11=1, t44=1) -> QMatrix:
    return _m([[t11, 0, 0, 0], [0, t22, 0, 0], [t31, 0, t33, 0], [t41, t42, t43, t44]])


def in_aut_q(tau: QMatrix) -> bool:
    """Does tau preserve V(x1 x2)?  Rows 1, 2 must be a diagonal or antidiagonal block."""
    r1, r2 = tau.row(0), tau.row(1)
    if any(r1[2:]) or any(r2[2:]):
        return False
    diag = r1[1] == 0 and r2[0] == 0
    anti = r1[0] == 0 and r2[1] == 0
    return (diag or anti) and tau.is_invertible()


# -- entries -----------------------------------------------------------------------

@dataclass
class CatalogInstance:
    id: str
    params: dict
    presentation: QuadraticPresentation
    tau: QMatrix
    quadric: QuadricSpec
    description: str
    central: list = field(default_factory=list)          # declared central (base after tau^-1)
    normal: list = field(default_factory=list)           # declared normal degree-1 elements
    lines: dict = field(default_factory=dict)            # "m1, m2" -> expected containment
    omega: TensorElement | None = None                   # declared quadric lift, if special

    @property
    def P(self) -> QuadraticPresentation:
        return self.presentation

    def metadata(self) -> dict:
        return {
            "id": self.id,
            "params": {k: (v.to_str() if isinstance(v, QMatrix) else str(v))
                       for k, v in self.params.items()},
            "tau": self.tau.to_str(),
            "quadric": str(self.quadric),
            "central": [list(map(str, v)) for v in self.central],
            "normal": [list(map(str, v)) for v in self.normal],
            "lines": self.lines,
            "description": self.description,
        }


@dataclass
class CatalogEntry:
    id: str
    params: dict                     # name -> default (None = required)
    build: Callable
    description: str


def _rational_eigvecs(m: QMatrix, basis: list) -> list:
    """Rational eigenvectors of m restricted to span(basis) (assumed invariant)."""
    k = len(basis)
    B = QMatrix.from_rows(basis).T            # columns = basis vectors
    BtB_inv = (B.T @ B).inverse()
    R = BtB_inv @ B.T @ m @ B                 # restriction in the basis
    if k == 1:
        return [tuple(basis[0])]
    if k != 2:
        return []
    tr = R[0, 0] + R[1, 1]
    dt = R.det()
    disc = tr * tr - 4 * dt
    if disc < 0:
        return []
    num, den = disc.numerator, disc.denominator
    rn, rd = _isqrt(num), _isqrt(den)
    if rn is None or rd is None:
        return []
    roots = sorted({(tr + Fraction(rn, rd)) / 2, (tr - Fraction(rn, rd)) / 2})
    out = []
    for lam in roots:
        for v in kernel_basis(R - QMatrix.identity(2) * lam):
            out.append(B @ list(v))
    return out


def _isqrt(n: int):
    import math
    r = math.isqrt(n)
    return r if r * r == n else None


def _std_q() -> QuadricSpec:
    return QuadricSpec.standard()


def _e(*c) -> tuple:
    return tuple(Q(x) for x in c)


def _b_poly4(p):
    return dict(presentation=poly4(), tau=QMatrix.identity(4),
                central=[_e(1, 0, 0, 0), _e(0, 1, 0, 0), _e(0, 0, 1, 0), _e(0, 0, 0, 1)],
                normal=[_e(1, 0, 0, 0), _e(0, 0, 1, 0)])


def _b_s_q(p):
    return dict(presentation=thcr_presentation(_std_q()), tau=QMatrix.identity(4))


def _b_notnormal(p):
    return dict(presentation=ex_notnormal(), tau=QMatrix.identity(4),
                omega=parse_expr("x2*x3 - x3*x2"))


def _b_quadric_only(p):
    return dict(presentation=ex_quadric_only(), tau=QMatrix.diag([1, -1, 1, 1]),
                lines={l: False for l in CANDIDATE_LINES})


def _check(cond: bool, msg: str):
    if not cond:
        raise CatalogError(msg)


def _b_plalg_b(p):
    a = p["alpha"]
    _check(a not in (0, 1, 2), "plalg_b requires alpha nonzero and alpha not in {1, 2}")
    lines = {"x3, x4": True}
    lines.update({l: False for l in PLALG_B_DECOYS})
    c = [_e(0, 0, 1, 0), _e(0, 0, 0, 1)]
    return dict(presentation=plalg_b_relations(a), tau=QMatrix.identity(4), central=c,
                normal=c, lines=lines)


def _b_plalg_c(p):
    a = p["alpha"]
    _check(a != 0, "plalg_c requires alpha nonzero")
    c = [_e(1, -1, 0, 0), _e(0, 0, 1, 0)]
    return dict(presentation=plalg_c_relations(a), tau=QMatrix.identity(4), central=c,
                normal=c, lines={"x1 - x2, x3": True, "x3, x4": False, "x1 + x2, x3": False})


def _b_plalg_d(p):
    a = p["alpha"]
    _check(a != 0, "plalg_d requires alpha nonzero")
    c = [_e(1, 0, 0, 0), _e(0, 1, 0, 0)]
    return dict(presentation=plalg_d_relations(a), tau=QMatrix.identity(4), central=c,
                normal=c, lines={"x1, x2": True, "x3, x4": False})


def _b_plalg_e(p):
    a = p["alpha"]
    _check(a != 0, "plalg_e requires alpha nonzero")
    c = [_e(1, 0, 0, 0), _e(0, 0, 1, 0)]
    return dict(presentation=plalg_e_relations(a), tau=QMatrix.identity(4), central=c,
                normal=c, lines={"x1, x3": True, "x3, x4": False})


def _twisted(base: dict, tau: QMatrix) -> dict:
    """Twist a plalg entry by tau; declared normal = tau-eigenvectors in the centre."""
    out = dict(base)
    out["presentation"] = zhang_twist(base["presentation"], tau)
    out["tau"] = tau
    out["normal"] = [tuple(v) for v in _rational_eigvecs(tau.T, [list(c) for c in base["central"]])]
    return out


def _b_pltwist_a(p):
    tau = p["tau"]
    _check(tau.is_invertible(), "pltwist_a requires an invertible tau")
    return _twisted(_b_poly4(p), tau)


def _b_pltwist_b(p):
    t = p
    _check(t["t22"] != 0, "pltwist_b requires t22 nonzero")
    _check(t["t33"] * t["t44"] - t["t34"] * t["t43"] != 0, "pltwist_b requires t33*t44 - t34*t43 nonzero")
    tau = tau_b(t["t22"], t["t33"], t["t34"], t["t43"], t["t44"])
    return _twisted(_b_plalg_b({"alpha": t["alpha"]}), tau)


def _b_pltwist_c(p):
    _check(p["t33"] != 0, "pltwist_c requires t33 nonzero")
    tau = tau_c(p["t31"], p["t33"], p["t41"], p["t42"], p["t43"], bool(p["swap"]))
    return _twisted(_b_plalg_c({"alpha": 1}), tau)


def _b_pltwist_d(p):
    t = {k: p[k] for k in ("t11", "t12", "t21", "t22", "t31", "t32", "t33", "t34",
                           "t41", "t42", "t43", "t44")}
    diag = t["t12"] == 0 and t["t21"] == 0
    anti = t["t11"] == 0 and t["t22"] == 0
    _check(diag or anti, "pltwist_d requires a diagonal or antidiagonal top block")
    lhs = t["t12"] * t["t21"] + t["t11"] * t["t22"]
    rhs = t["t33"] * t["t44"] - t["t34"] * t["t43"]
    _check(lhs == rhs and lhs != 0,
           "pltwist_d requires t12*t21 + t11*t22 = t33*t44 - t34*t43 nonzero")
    return _twisted(_b_plalg_d({"alpha": 1}), tau_d(**t))


def _b_pltwist_e(p):
    _check(p["t22"] != 0 and p["t33"] != 0, "pltwist_e requires t22, t33 nonzero")
    tau = tau_e(p["t22"], p["t33"], p["t31"], p["t41"], p["t42"], p["t43"])
    return _twisted(_b_plalg_e({"alpha": 1}), tau)


def _prop1_common(name, p):
    a, b, tau = p["alpha"], p["beta"], p["tau"]
    _check(in_aut_q(tau), f"{name} requires tau to preserve V(x1 x2)")
    return a, b, tau


def _b_prop1_a(p):
    a, b, tau = _prop1_common("prop1_a", p)
    _check(a != 0 and b != 0, "prop1_a requires alpha, beta nonzero")
    _check(a != 1, "prop1_a requires alpha != 1")
    return dict(presentation=prop1_a_relations(a, b, tau), tau=tau,
                lines={l: False for l in CANDIDATE_LINES})


def _b_prop1_b(p):
    a, b, tau = _prop1_common("prop1_b", p)
    _check(a != 0 and b != 0, "prop1_b requires alpha, beta nonzero")
    return dict(presentation=prop1_b_relations(a, b, tau), tau=tau,
                lines={l: False for l in CANDIDATE_LINES})


def _b_prop1_b0(p):
    a, tau = p["alpha"], p["tau"]
    _check(in_aut_q(tau), "prop1_b_beta0 requires tau to preserve V(x1 x2)")
    _check(a != 0, "prop1_b_beta0 requires alpha nonzero")
    return dict(presentation=prop1_b_relations(a, 0, tau), tau=tau,
                lines={"x1, x4": True, "x3, x4": False})


_ID = "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"
_PROP1_A_TAU = "1,0,0,0;0,2,0,0;0,0,-2,0;0,0,0,1"

ENTRIES = {e.id: e for e in [
    CatalogEntry("poly4", {}, _b_poly4, "polynomial ring in four variables"),
    CatalogEntry("plalg_a", {}, _b_poly4, "polynomial ring (point scheme all of P3)"),
    CatalogEntry("s_q", {}, _b_s_q, "quadratic part of the coordinate ring of V(x1 x2)"),
    CatalogEntry("ex_notnormal", {}, _b_notnormal,
                 "commutative-type algebra with x1 x2 = 0; the quadric lift is not normal"),
    CatalogEntry("ex_quadric_only", {}, _b_quadric_only, "point scheme exactly the rank-two quadric"),
    CatalogEntry("plalg_b", {"alpha": 3}, _b_plalg_b,
                 "P = Q u V(x3, x4), line meets Q in two points"),
    CatalogEntry("plalg_c", {"alpha": 1}, _b_plalg_c,
                 "P = Q u V(x1 - x2, x3), line tangent to Q"),
    CatalogEntry("plalg_d", {"alpha": 1}, _b_plalg_d,
                 "P = Q with a double structure on V(x1, x2)"),
    CatalogEntry("plalg_e", {"alpha": 1}, _b_plalg_e,
                 "P = Q with a double structure on V(x1, x3)"),
    CatalogEntry("pltwist_a", {"tau": _ID}, _b_pltwist_a, "twist of the polynomial ring"),
    CatalogEntry("pltwist_b", {"alpha": 3, "t22": 2, "t33": 3, "t34": 0, "t43": 1, "t44": 5},
                 _b_pltwist_b, "twist of plalg_b"),
    CatalogEntry("pltwist_c", {"t31": 1, "t33": 2, "t41": 1, "t42": 2, "t43": 3, "swap": 0},
                 _b_pltwist_c, "twist of plalg_c"),
    CatalogEntry("pltwist_d", {"t11": 1, "t12": 0, "t21": 0, "t22": 6, "t31": 1, "t32": 0,
                               "t33": 2, "t34": 1, "t41": 0, "t42": 1, "t43": 0, "t44": 3},
                 _b_pltwist_d, "twist of plalg_d"),
    CatalogEntry("pltwist_e", {"t22": 2, "t33": 3, "t31": 1, "t41": 1, "t42": 1, "t43": 2},
                 _b_pltwist_e, "twist of plalg_e"),
    CatalogEntry("prop1_a", {"alpha": -1, "beta": 2, "tau": _PROP1_A_TAU}, _b_prop1_a,
                 "point scheme Q; family with x2 x1 = alpha x1 x2"),
    CatalogEntry("prop1_b", {"alpha": 1, "beta": 1, "tau": _ID}, _b_prop1_b,
                 "point scheme Q; family with x1 x4 - x4 x1 = beta x1 x2"),
    CatalogEntry("prop1_b_beta0", {"alpha": 1, "tau": _ID}, _b_prop1_b0,
                 "degenerate member beta = 0; point scheme Q with an embedded line"),
]}

FIXED_INSTANCES = [
    ("plalg_b", {"alpha": 3}), ("plalg_c", {}), ("plalg_d", {}), ("plalg_e", {}),
    ("pltwist_b", {}), ("pltwist_c", {}), ("pltwist_d", {}), ("pltwist_e", {}),
    ("prop1_a", {}), ("prop1_b", {"alpha": 1, "beta": 1}),
]


def _coerce(name: str, value):
    if name == "tau":
        return value if isinstance(value, QMatrix) else QMatrix.parse(str(value))
    if isinstance(value, float):
        raise CatalogError(f"parameter {name} must be exact, not a float")
    try:
        return Q(value)
    except (ValueError, ZeroDivisionError):
        raise CatalogError(f"parameter {name}: cannot read {value!r} as a rational") from None


def parse_params(text: str | None) -> dict:
    """``"alpha=3,beta=1/2"``.  Pieces without ``=`` continue the previous value,
    so matrices can be passed inline: ``tau=1,0,0,0;0,1,0,0;...``."""
    if not text:
        return {}
    out = {}
    key = None
    for piece in text.split(","):
        if "=" in piece:
            key, val = piece.split("=", 1)
            key = key.strip()
            out[key] = val.strip()
        elif key is not None:
            out[key] += "," + piece.strip()
        else:
            raise CatalogError(f"malformed parameter list {text!r}")
    return out


def catalog(id: str, params: dict | None = None) -> CatalogInstance:
    if id not in ENTRIES:
        raise CatalogError(f"unknown catalog id {id!r}; known: {', '.join(sorted(ENTRIES))}")
    entry = ENTRIES[id]
    params = dict(params or {})
    unknown = set(params) - set(entry.params)
    if unknown:
        raise CatalogError(f"{id}: unknown parameter(s) {', '.join(sorted(unknown))}")
    full = {k: _coerce(k, params.get(k, d)) for k, d in entry.params.items()}
    built = entry.build(full)
    return CatalogInstance(
        id=id, params=full, presentation=built["presentation"], tau=built["tau"],
        quadric=_std_q(), description=entry.description,
        central=built.get("central", []), normal=built.get("normal", []),
        lines=built.get("lines", {}), omega=built.get("omega"))
