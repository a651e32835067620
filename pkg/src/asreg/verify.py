"""The verification suite: one function per check, grouped by criterion.

Every check returns ``(status, evidence)`` with status ``pass``, ``fail`` or
``abstain``.  Random instances come from ``random.Random(SEED)`` so reports
are reproducible.  ``flip_convention`` reads every relation with its tensor
factors swapped; it exists as a negative control and must make the
``sigma_direction`` check fail.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .catalog import (CANDIDATE_LINES, ENTRIES, FIXED_INSTANCES, PLALG_B_DECOYS, catalog,
                      ex_quadric_only, ex_notnormal, line_forms, plalg_b_relations, plalg_c_relations,
                      plalg_d_relations, plalg_e_relations, poly4, tau_b, tau_c, tau_d, tau_e)
from .coordinate_rings import (OmegaError, QuadricSpec, check_surjection, extract_omega,
                               omega_multiple_check, thcr_presentation)
from .linalg import QMatrix, SingularMatrix, Subspace
from .multiplicity import INF, K_line, L_line, line_multiplicity, multiplicity_report
from .point_scheme import (Line, NotOnScheme, PlanePair, SigmaUndetermined, contains_component,
                           grid_points, minors, multilinearize, projectively_equal, sigma_at,
                           verify_sigma_formula)
from .polynomials import CommPoly, LinearForm
from .rewriting import oracle_dims
from .structure import adapted_generators, central_space, is_normal_deg1, is_normal_deg2
from .tensor import QuadraticPresentation, TensorElement, hilbert_coefficients, right_ideal_dims
from .twisting import (OreData, hv_match_search, ore_presentation, sigma_derivation_check,
                       stabilizes, transform_relations, zhang_twist)

__all__ = ["CheckResult", "VerificationReport", "CHECKS", "CRITERIA", "SEED", "HV_PINNED",
           "DOMAIN_INPUTS", "family_member", "random_family_tau", "violating_tau",
           "verify_paper"]

SEED = 20240611
POLY4_DIMS = [1, 4, 10, 20, 35, 56]
SQ_DIMS = [1, 4, 9, 16, 25, 36]
# Regression value for the twisting-system search; None means "no match on
# the documented grids", which is what every run so far has produced.
HV_PINNED = None

# Ten domain inputs for the adapted-generators construction, covering the
# branches with x1 x2 = x2 x1 and with x1 x2 != x2 x1 (and the plane case).
DOMAIN_INPUTS = [("poly4", {}), ("plalg_b", {}), ("plalg_c", {}), ("plalg_d", {}),
                 ("plalg_e", {}), ("pltwist_b", {}), ("pltwist_c", {}), ("prop1_a", {}),
                 ("ex_quadric_only", {}), ("prop1_b_beta0", {})]


@dataclass
class CheckResult:
    id: str
    criterion: int | None
    status: str
    evidence: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"id": self.id, "criterion": self.criterion, "status": self.status,
                "evidence": self.evidence, "seconds": round(self.seconds, 3)}


@dataclass
class VerificationReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_json(self) -> dict:
        counts = {s: sum(c.status == s for c in self.checks) for s in ("pass", "fail", "abstain")}
        return {"ok": self.ok, "counts": counts, "checks": [c.to_json() for c in self.checks]}


@dataclass
class _Ctx:
    max_degree: int = 5
    flip: bool = False

    def view(self, P: QuadraticPresentation) -> QuadraticPresentation:
        """The presentation as the chosen convention reads it."""
        if not self.flip:
            return P
        n = P.n
        rows = [{(i % n) * n + i // n: c for i, c in r.items()} for r in P.relations.sparse_rows()]
        return QuadraticPresentation(P.gen_names, Subspace(n * n, rows))


def _s(ok: bool) -> str:
    return "pass" if ok else "fail"


def _pt(p) -> list:
    return [str(x) for x in p]


# -- criterion 1: Hilbert coefficients ---------------------------------------------------

def check_hilbert_poly4(ctx):
    h = hilbert_coefficients(poly4(), ctx.max_degree)
    return _s(h == POLY4_DIMS[:ctx.max_degree + 1]), {"dims": h}


def check_hilbert_catalog(ctx):
    want = POLY4_DIMS[:ctx.max_degree + 1]
    dims = {}
    for cid, p in FIXED_INSTANCES:
        inst = catalog(cid, p)
        dims[_label(cid, inst)] = hilbert_coefficients(inst.P, ctx.max_degree)
    bad = [k for k, v in dims.items() if v != want]
    return _s(not bad), {"dims": dims, "mismatch": bad}


def check_hilbert_sq(ctx):
    d = min(ctx.max_degree, 4)
    h = hilbert_coefficients(thcr_presentation(QuadricSpec.standard()), d)
    return _s(h == SQ_DIMS[:d + 1]), {"dims": h}


def _label(cid, inst) -> str:
    ps = ",".join(f"{k}={v.to_str() if isinstance(v, QMatrix) else v}"
                  for k, v in inst.params.items())
    return f"{cid}({ps})" if ps else cid


# -- criterion 2: the quadric lift --------------------------------------------------------

def check_omega_catalog(ctx):
    ev, ok = {}, True
    for cid, p in FIXED_INSTANCES:
        inst = catalog(cid, p)
        surj = check_surjection(inst.P, inst.quadric, inst.tau)
        try:
            om = extract_omega(inst.P, inst.quadric, inst.tau)
            mult = omega_multiple_check(inst.P, inst.tau, om)
            ev[cid] = {"surjection": surj, "omega": om.format(inst.P.gen_names),
                       "multiples": mult}
            ok &= surj and mult
        except (OmegaError, ValueError) as exc:
            ev[cid] = {"surjection": surj, "error": str(exc)}
            ok = False
    return _s(ok), ev


def check_omega_notnormal(ctx):
    try:
        om = extract_omega(ex_notnormal(), QuadricSpec.standard())
    except OmegaError as exc:
        return "pass", {"error": str(exc)}
    return "fail", {"omega": om.format()}


# -- criterion 3: normality ----------------------------------------------------------------

def _notnormal_omega() -> TensorElement:
    return TensorElement.word((1, 2), 4) - TensorElement.word((2, 1), 4)


def check_normality_notnormal(ctx):
    cert = is_normal_deg2(ex_notnormal(), _notnormal_omega())
    return _s(not cert.is_normal), cert.to_json()


def check_normality_catalog(ctx):
    ev = {}
    for cid, p in FIXED_INSTANCES:
        inst = catalog(cid, p)
        try:
            om = extract_omega(inst.P, inst.quadric, inst.tau)
            ev[cid] = is_normal_deg2(inst.P, om).is_normal
        except (OmegaError, ValueError) as exc:
            ev[cid] = f"error: {exc}"
    return _s(all(v is True for v in ev.values())), ev


def check_adapted_generators(ctx):
    ev, branches = {}, set()
    for cid, p in DOMAIN_INPUTS:
        inst = catalog(cid, p)
        try:
            ab = adapted_generators(inst.P, inst.quadric, inst.tau)
        except ValueError as exc:
            ev[cid] = f"error: {exc}"
            continue
        normal = is_normal_deg2(ab.transformed, ab.omega).is_normal
        branches.add(ab.branch)
        ev[cid] = {"branch": ab.branch, "a12": str(ab.alphas["a12"]), "omega_normal": normal}
    ok = (all(isinstance(v, dict) and v["omega_normal"] for v in ev.values())
          and {"two_lines_commutative", "two_lines_noncommutative"} <= branches)
    return _s(ok), ev


# -- criterion 4: point schemes ----------------------------------------------------------

def _Y(i) -> LinearForm:
    return LinearForm.coordinate(i)


def _line(text: str) -> Line:
    return Line(*line_forms(text))


def check_point_scheme_plalg_b(ctx):
    I = minors(multilinearize(ctx.view(plalg_b_relations(3))))
    quad = contains_component(I, PlanePair(_Y(0), _Y(1)))
    line = contains_component(I, _line("x3, x4"))
    decoys = {d: contains_component(I, _line(d)) for d in PLALG_B_DECOYS}
    ok = quad and line and not any(decoys.values())
    return _s(ok), {"quadric": quad, "V(Y3,Y4)": line, "decoys": decoys}


def check_point_scheme_quadric_only(ctx):
    ev, ok = {}, True
    for cid, p in [("ex_quadric_only", {}), ("prop1_a", {}), ("prop1_b", {})]:
        inst = catalog(cid, p)
        I = minors(multilinearize(ctx.view(inst.P)))
        quad = contains_component(I, PlanePair(_Y(0), _Y(1)))
        extra = {l: contains_component(I, _line(l)) for l in CANDIDATE_LINES}
        ev[cid] = {"quadric": quad, "candidates": extra}
        ok &= quad and not any(extra.values())
    return _s(ok), ev


def _sigma_samples(M, points, formula):
    rows, ok = [], True
    for p in points:
        try:
            s = sigma_at(M, p)
        except (NotOnScheme, SigmaUndetermined) as exc:
            rows.append({"p": _pt(p), "error": str(exc)})
            ok = False
            continue
        good = projectively_equal(s, formula(p))
        ok &= good
        rows.append({"p": _pt(p), "sigma": _pt(s), "match": good})
    return ok, rows


def check_sigma_direction(ctx):
    """sigma on L = V(x3, x4) for plalg_b is (x1, x2) -> ((alpha - 1) x1, x2)."""
    alpha = Fraction(3)
    M = multilinearize(ctx.view(plalg_b_relations(alpha)))
    pts = [(1, 1, 0, 0), (1, 2, 0, 0), (2, -1, 0, 0), (3, 1, 0, 0), (1, -3, 0, 0)]
    ok, rows = _sigma_samples(M, pts, lambda p: ((alpha - 1) * p[0], p[1], 0, 0))
    return _s(ok), {"alpha": "3", "samples": rows}


def check_sigma_plalg_c(ctx):
    M = multilinearize(ctx.view(plalg_c_relations()))
    pts = [(1, 1, 0, 1), (1, 1, 0, 2), (2, 2, 0, -1), (3, 3, 0, 1), (1, 1, 0, 0)]
    ok, rows = _sigma_samples(M, pts, lambda p: (p[0], p[0], 0, p[0] + p[3]))
    return _s(ok), {"samples": rows}


def check_sigma_charts(ctx):
    q = QuadricSpec.standard()
    Md = multilinearize(ctx.view(plalg_d_relations()))
    Me = multilinearize(ctx.view(plalg_e_relations()))
    pd = grid_points(10, lambda p: q.contains(p) and p[2] != 0)
    pe = grid_points(10, lambda p: q.contains(p) and p[1] != 0)
    # denominators cleared: chart 3 of (d) is (Y1, Y2, Y3, Y4 - Y1 Y2 / Y3)
    fd = lambda p: (p[0] * p[2], p[1] * p[2], p[2] * p[2], p[3] * p[2] - p[0] * p[1])
    fe = lambda p: (p[0], p[1], p[2], p[0] + p[3])
    try:
        okd = verify_sigma_formula(Md, 3, fd, pd)
        oke = verify_sigma_formula(Me, 2, fe, pe)
    except (NotOnScheme, SigmaUndetermined) as exc:
        return "fail", {"error": str(exc)}
    return _s(okd and oke), {"plalg_d_chart3": okd, "plalg_d_points": [_pt(p) for p in pd],
                             "plalg_e_chart2": oke, "plalg_e_points": [_pt(p) for p in pe]}


def check_sigma_commutes_tau(ctx):
    """sigma(tau p) = tau sigma(p) on sample points of the pltwist point schemes."""
    q = QuadricSpec.standard()
    ev, ok = {}, True
    for cid in ("pltwist_b", "pltwist_c", "pltwist_d", "pltwist_e"):
        inst = catalog(cid)
        M = multilinearize(ctx.view(inst.P))
        t = inst.tau
        n = tested = 0
        for p in grid_points(60, q.contains):
            try:
                lhs = sigma_at(M, t @ list(p))
                rhs = t @ list(sigma_at(M, p))
            except (NotOnScheme, SigmaUndetermined):
                continue
            tested += 1
            n += projectively_equal(lhs, rhs)
            if tested == 20:
                break
        ev[cid] = {"tested": tested, "commuting": n}
        ok &= tested == 20 and n == 20
    return _s(ok), ev


# -- criterion 5: stabilizers ---------------------------------------------------------------

def _r(rng, nonzero=False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-5, 5), rng.choice([1, 1, 2, 3]))
        if x or not nonzero:
            return x


def family_member(fam: str, m: QMatrix) -> bool:
    """Does m lie in the displayed stabilizer family (up to a nonzero scalar)?"""
    if not m.is_invertible():
        return False
    t = [m.row(i) for i in range(4)]
    zero = lambda *ij: all(t[i][j] == 0 for i, j in ij)
    if fam == "a":
        return True
    if fam == "b":
        return zero((0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 1))
    if fam == "c":
        s = t[3][3]
        diag = t[0][0] == s and t[1][1] == s and zero((0, 1), (1, 0))
        anti = t[0][1] == s and t[1][0] == s and zero((0, 0), (1, 1))
        return ((diag or anti) and zero((0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
                and t[2][1] == -t[2][0])
    if fam == "d":
        diag = zero((0, 1), (1, 0))
        anti = zero((0, 0), (1, 1))
        lhs = t[0][1] * t[1][0] + t[0][0] * t[1][1]
        rhs = t[2][2] * t[3][3] - t[2][3] * t[3][2]
        return (diag or anti) and zero((0, 2), (0, 3), (1, 2), (1, 3)) and lhs == rhs != 0
    if fam == "e":
        return (zero((0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (1, 3), (2, 1), (2, 3))
                and t[0][0] * t[1][1] == t[1][1] * t[3][3])
    raise ValueError(f"unknown family {fam!r}")


FAMILY_BASE = {"a": poly4, "b": lambda: plalg_b_relations(3), "c": plalg_c_relations,
               "d": plalg_d_relations, "e": plalg_e_relations}


def random_family_tau(fam: str, rng: random.Random) -> QMatrix:
    while True:
        s = _r(rng, True)
        if fam == "a":
            m = QMatrix.from_rows([[_r(rng) for _ in range(4)] for _ in range(4)])
        elif fam == "b":
            m = tau_b(_r(rng, True), _r(rng), _r(rng), _r(rng), _r(rng)) * s
        elif fam == "c":
            m = tau_c(_r(rng), _r(rng, True), _r(rng), _r(rng), _r(rng), rng.random() < 0.5) * s
        elif fam == "d":
            t33, t34, t43, t44 = (_r(rng) for _ in range(4))
            det = t33 * t44 - t34 * t43
            if det == 0:
                continue
            a = _r(rng, True)
            top = (0, a, det / a, 0) if rng.random() < 0.5 else (a, 0, 0, det / a)
            m = tau_d(*top, _r(rng), _r(rng), t33, t34, _r(rng), _r(rng), t43, t44)
        else:
            t11 = _r(rng, True)
            m = tau_e(_r(rng, True), _r(rng, True), _r(rng), _r(rng), _r(rng), _r(rng),
                      t11=t11, t44=t11)
        if m.is_invertible():
            return m


def violating_tau(fam: str, rng: random.Random, identity_only: bool = False) -> QMatrix:
    """Perturb a family member until it leaves the family.

    Family (a) is all of GL4, so its violations are singular matrices.  For (d) and (e) ``identity_only`` perturbs only entries that enter the
    displayed scalar identity, so the pattern survives and only the
    identity breaks.
    """
    targets = {"d": [(2, 2), (2, 3), (3, 2), (3, 3), (0, 0), (1, 1)], "e": [(0, 0), (3, 3)]}
    while True:
        base = random_family_tau(fam, rng)
        rows = [list(base.row(i)) for i in range(4)]
        if identity_only and fam in targets:
            i, j = rng.choice(targets[fam])
        else:
            i, j = rng.randrange(4), rng.randrange(4)
        rows[i][j] += _r(rng, True)
        m = QMatrix.from_rows(rows)
        if fam == "a":
            return _singular_from(rows, rng)
        if m.is_invertible() and not family_member(fam, m):
            return m


def _singular_from(rows, rng) -> QMatrix:
    """Make row 4 a combination of rows 1-3: every invertible matrix is in family (a)."""
    c = [_r(rng) for _ in range(3)]
    rows[3] = [sum(c[k] * rows[k][j] for k in range(3)) for j in range(4)]
    return QMatrix.from_rows(rows)


def check_stabilizers(ctx):
    rng = random.Random(SEED)
    ev, ok = {}, True
    for fam, base_fn in FAMILY_BASE.items():
        P = base_fn()
        good = [random_family_tau(fam, rng) for _ in range(20)]
        bad = [violating_tau(fam, rng, identity_only=(k < 10)) for k in range(20)]
        passed = sum(stabilizes(P, m) for m in good)
        rejected = 0
        for m in bad:
            try:
                rejected += not stabilizes(P, m)
            except SingularMatrix:
                rejected += 1
        ev[fam] = {"members_pass": passed, "violations_fail": rejected}
        ok &= passed == 20 and rejected == 20
    return _s(ok), ev


# -- criterion 6: twists ------------------------------------------------------------------

def _untwist(ctx, P, tau):
    if ctx.flip:
        return transform_relations(P, tau.inverse(), QMatrix.identity(P.n))
    return zhang_twist(P, tau.inverse())


def check_twist_roundtrip(ctx):
    ev, ok = {}, True
    for cid in ("pltwist_b", "pltwist_c", "pltwist_d", "pltwist_e"):
        inst = catalog(cid)
        back = _untwist(ctx, inst.P, inst.tau)
        C = central_space(back)
        inside = all(C.contains(list(c)) for c in inst.central)
        ev[cid] = {"central_dim": C.dim, "declared_central": inside}
        ok &= inside and len(inst.central) == 2
    return _s(ok), ev


def check_twist_invariance(ctx):
    rng = random.Random(SEED + 6)
    d = ctx.max_degree
    ev, ok = {}, True
    for fam, base_fn in FAMILY_BASE.items():
        P = base_fn()
        h0 = hilbert_coefficients(P, d)
        same = sum(hilbert_coefficients(zhang_twist(P, random_family_tau(fam, rng)), d) == h0
                   for _ in range(3))
        ev[fam] = {"dims": h0, "twists_equal": same}
        ok &= same == 3
    for cid in ("pltwist_b", "pltwist_c", "pltwist_d", "pltwist_e"):
        inst = catalog(cid)
        h = hilbert_coefficients(inst.P, d)
        hb = hilbert_coefficients(zhang_twist(inst.P, inst.tau.inverse()), d)
        ev[cid] = {"dims": h, "untwisted_equal": h == hb}
        ok &= h == hb
    return _s(ok), ev


# -- criterion 7: normalizing automorphisms ----------------------------------------------------

def check_normalizing_automorphism(ctx):
    ev, ok, count = {}, True, 0
    for cid in ENTRIES:
        inst = catalog(cid)
        for v in inst.normal:
            cert = is_normal_deg1(inst.P, v)
            prop = cert.is_normal and cert.phi.is_proportional_to(inst.tau)
            ev[f"{cid}:{','.join(map(str, v))}"] = {
                "normal": cert.is_normal, "phi": cert.phi.to_str() if cert.phi else None,
                "tau": inst.tau.to_str(), "proportional": prop}
            ok &= prop
            count += 1
    return _s(ok and count > 0), ev


# -- criterion 8: multiplicities ------------------------------------------------------------

def check_multiplicity(ctx):
    quad = [CommPoly.parse("Y1*Y2")]
    L = {str(n): line_multiplicity(quad, L_line(n), 0) for n in (0, 1, 2, INF)}
    b0 = catalog("prop1_b_beta0")
    I0 = minors(multilinearize(b0.P))
    m3 = line_multiplicity(I0.polys, L_line(0), 0)
    K = {str(n): line_multiplicity(I0.polys, K_line(n), 0) for n in (0, 1, 2)}
    cands = [_line(l) for l in CANDIDATE_LINES] + [_line("x1, x4")]
    b1 = catalog("prop1_b")
    r1 = multiplicity_report(b1.P, b1.quadric, cands, tau=b1.tau)
    r0 = multiplicity_report(b0.P, b0.quadric, cands, tau=b0.tau)
    qo = catalog("ex_quadric_only")
    rh = multiplicity_report(qo.P, qo.quadric, cands, tau=qo.tau)
    ok = (all(v == 2 for v in L.values()) and m3 == 3 and all(v == 2 for v in K.values())
          and r1["classification"] == "consistent_with_P_eq_Q"
          and r0["classification"] == "Q_uplus_L" and r0.get("line") == "V(Y1,Y4)"
          and rh["classification"] == "consistent_with_P_eq_Q")
    return _s(ok), {"quadric_L_n": L, "beta0_at_(0,0,1,0)": m3, "beta0_K_n": K,
                    "prop1_b": r1["classification"], "prop1_b_beta0": r0["classification"],
                    "prop1_b_beta0_line": r0.get("line"), "ex_quadric_only": rh["classification"]}


# -- criterion 9: twisting system -------------------------------------------------------------

def check_hv_remark(ctx):
    match = hv_match_search(ex_quadric_only(), "small", ("identity", "remark"))
    found = None if match is None else {k: str(v) for k, v in match.params.items()}
    ev = {"grid": "small", "match": found, "pinned": HV_PINNED}
    if match is None:
        return "fail", ev
    if HV_PINNED is not None and found != HV_PINNED:
        return "fail", ev
    return "pass", ev


# -- criterion 10: oracle and the right-ideal chain ------------------------------------------

def check_oracle_equivalence(ctx):
    ev, ok, compared = {}, True, 0
    for cid in ENTRIES:
        P = catalog(cid).P
        o = oracle_dims(P, range(ctx.max_degree + 1))
        if o is None:
            ev[cid] = "abstain"
            continue
        h = hilbert_coefficients(P, ctx.max_degree)
        same = o[3:] == h[3:]
        ev[cid] = {"oracle": o, "linear_algebra": h, "equal": same}
        ok &= same
        compared += 1
    return _s(ok and compared > 0), ev


def check_right_ideal_chain(ctx):
    P = ex_notnormal()
    top = max(6, ctx.max_degree)
    gens = [TensorElement.word((2,) * i + (1,), 4) for i in range(top)]
    dims = [right_ideal_dims(P, gens[:k + 1], top) for k in range(top)]
    strict = all(a < b for a, b in zip(dims, dims[1:]))
    return _s(strict), {"degree": top, "dims": dims}


# -- supporting checks ----------------------------------------------------------------------

def _poly3() -> QuadraticPresentation:
    rels = [TensorElement.word((i, j), 3) - TensorElement.word((j, i), 3)
            for i in range(3) for j in range(i + 1, 3)]
    return QuadraticPresentation.from_relations(rels, ("u1", "u2", "u3"))


def check_ore_derivations(ctx):
    B = _poly3()
    I3 = QMatrix.identity(3)
    w = lambda i, j: TensorElement.word((i, j), 3, Fraction(-1))
    data = {
        "plalg_b": (OreData(B, QMatrix.diag([2, 1, 1]), {}, "x2", 1), plalg_b_relations(3)),
        "plalg_c": (OreData(B, I3, {0: w(0, 1), 1: w(0, 1)}, "x4", 3), plalg_c_relations()),
        "plalg_d": (OreData(B, I3, {2: w(0, 1)}, "x4", 3), plalg_d_relations()),
        "plalg_e": (OreData(B, I3, {1: w(1, 0)}, "x4", 3), plalg_e_relations()),
    }
    ev, ok = {}, True
    for name, (o, target) in data.items():
        der = sigma_derivation_check(o)
        same = ore_presentation(o).relations == target.relations
        ev[name] = {"derivation": der, "presentation_matches": same}
        ok &= der and same
    return _s(ok), ev


def _rescaled(P, diag) -> QuadraticPresentation:
    G = QMatrix.diag(diag)
    out = transform_relations(P, G.T, G.T)
    return QuadraticPresentation(P.gen_names, out.relations)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    import math
    if x <= 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    return Fraction(n, d) if n * n == x.numerator and d * d == x.denominator else None


def check_sqrt_rescaling(ctx):
    """Pre-rescaled families against the normalized members.

    (c) uses x1 -> s x1, x2 -> s x2, x4 -> x4 / s and (d) x1 -> s x1,
    x2 -> s x2 with s^2 = 1/alpha; (e) needs no root.  Values of alpha that
    are not rational squares abstain.
    """
    ev, status = {}, "pass"
    for fam, fn, alphas in (("c", plalg_c_relations, (4, Fraction(9, 4), 2)),
                            ("d", plalg_d_relations, (4, Fraction(1, 9), 3)),
                            ("e", plalg_e_relations, (2, -3))):
        for a in alphas:
            a = Fraction(a)
            key = f"{fam}:alpha={a}"
            if fam == "e":
                diag = [1 / a, 1, 1, 1]
            else:
                s = _rational_sqrt(1 / a)
                if s is None:
                    ev[key] = "abstain: alpha is not a rational square"
                    continue
                diag = [s, s, 1, 1 / s] if fam == "c" else [s, s, 1, 1]
            same = _rescaled(fn(a), diag).relations == fn(1).relations
            ev[key] = same
            if not same:
                status = "fail"
    return status, ev


# -- registry -----------------------------------------------------------------------------

CHECKS: dict[str, tuple[int | None, Callable]] = {
    "hilbert_poly4": (1, check_hilbert_poly4),
    "hilbert_catalog": (1, check_hilbert_catalog),
    "hilbert_sq": (1, check_hilbert_sq),
    "omega_catalog": (2, check_omega_catalog),
    "omega_notnormal": (2, check_omega_notnormal),
    "normality_notnormal": (3, check_normality_notnormal),
    "normality_catalog": (3, check_normality_catalog),
    "adapted_generators": (3, check_adapted_generators),
    "point_scheme_plalg_b": (4, check_point_scheme_plalg_b),
    "point_scheme_quadric_only": (4, check_point_scheme_quadric_only),
    "sigma_direction": (4, check_sigma_direction),
    "sigma_plalg_c": (4, check_sigma_plalg_c),
    "sigma_charts": (4, check_sigma_charts),
    "stabilizers": (5, check_stabilizers),
    "twist_roundtrip": (6, check_twist_roundtrip),
    "twist_invariance": (6, check_twist_invariance),
    "normalizing_automorphism": (7, check_normalizing_automorphism),
    "multiplicity": (8, check_multiplicity),
    "hv_remark": (9, check_hv_remark),
    "oracle_equivalence": (10, check_oracle_equivalence),
    "right_ideal_chain": (10, check_right_ideal_chain),
    "sigma_commutes_tau": (None, check_sigma_commutes_tau),
    "ore_derivations": (None, check_ore_derivations),
    "sqrt_rescaling": (None, check_sqrt_rescaling),
}

CRITERIA: dict[int, list[str]] = {}
for _id, (_c, _) in CHECKS.items():
    if _c is not None:
        CRITERIA.setdefault(_c, []).append(_id)


def run_check(check_id: str, max_degree: int = 5, flip_convention: bool = False) -> CheckResult:
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}")
    crit, fn = CHECKS[check_id]
    ctx = _Ctx(max_degree, flip_convention)
    t0 = time.perf_counter()
    try:
        status, evidence = fn(ctx)
    except Exception as exc:          # a crash is a failed check, not a crashed report
        status, evidence = "fail", {"exception": f"{type(exc).__name__}: {exc}"}
    return CheckResult(check_id, crit, status, evidence, time.perf_counter() - t0)


def verify_paper(selection="all", max_degree: int = 5, flip_convention: bool = False
                 ) -> VerificationReport:
    ids = sorted(CHECKS) if selection == "all" else list(selection)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    return VerificationReport([run_check(i, max_degree, flip_convention) for i in sorted(ids)])
