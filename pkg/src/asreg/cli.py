"""Command line front end.

Every subcommand prints a JSON document.  Exit status: 0 when the command
succeeds (and, for yes/no questions, the answer is yes), 1 when a check
fails or a computation reports an error, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import CANDIDATE_LINES, CatalogError, catalog, line_forms, parse_params
from .coordinate_rings import (OmegaError, QuadricSpec, SurjectionError, check_surjection,
                               extract_omega, omega_scalars)
from .linalg import QMatrix, SingularMatrix, fmt_q
from .multiplicity import INF, LineContained, LineParam, line_multiplicity, multiplicity_report
from .parser import ParseError, format_presentation, parse_expr, parse_file, parse_form
from .point_scheme import Line, NotOnScheme, SigmaUndetermined, minors, multilinearize, \
    scheme_report, sigma_at
from .structure import central_space, is_normal_deg1, is_normal_deg2
from .tensor import QuadraticPresentation, TensorElement, hilbert_coefficients
from .twisting import (HV_GRIDS, NotAnAutomorphism, OreData, hv_match_search, ore_presentation,
                       sigma_derivation_check, stabilizes, zhang_twist)
from .verify import CHECKS, verify_paper


class UsageError(Exception):
    pass


class _Loaded:
    def __init__(self, P, quadric=None, tau=None, lines=(), label=""):
        self.P, self.quadric, self.tau, self.lines, self.label = P, quadric, tau, list(lines), label


def _load(args) -> _Loaded:
    if args.alg and args.family:
        raise UsageError("give either --alg or --family, not both")
    if args.alg:
        try:
            text = Path(args.alg).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.alg}: {exc.strerror}") from None
        pf = parse_file(text)
        q = QuadricSpec(*pf.quadric) if pf.quadric else None
        return _Loaded(pf.presentation, q, pf.tau, CANDIDATE_LINES, args.alg)
    if args.family:
        inst = catalog(args.family, parse_params(args.params))
        return _Loaded(inst.P, inst.quadric, inst.tau, list(inst.lines), args.family)
    raise UsageError("an algebra is required: --alg FILE or --family ID")


def _tau(args, loaded: _Loaded | None = None, required=False) -> QMatrix | None:
    if getattr(args, "tau", None):
        try:
            return QMatrix.parse(args.tau)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --tau: {exc}") from None
    if required:
        raise UsageError("--tau is required")
    return loaded.tau if loaded else None


def _quadric(loaded: _Loaded) -> QuadricSpec:
    return loaded.quadric or QuadricSpec.standard()


def _point(text: str, n: int = 4) -> tuple:
    try:
        p = tuple(QMatrix.parse(text).row(0))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None
    if len(p) != n:
        raise UsageError(f"point needs {n} coordinates")
    return p


# -- subcommands ------------------------------------------------------------------------

def cmd_hilbert(args):
    L = _load(args)
    return 0, {"algebra": L.label, "dims": hilbert_coefficients(L.P, args.max_degree)}


def cmd_central(args):
    L = _load(args)
    C = central_space(L.P)
    basis = [TensorElement.linear(v, L.P.n).format(L.P.gen_names) for v in C.vectors()]
    return 0, {"algebra": L.label, "dim": C.dim, "basis": basis}


def cmd_normal(args):
    L = _load(args)
    names = L.P.gen_names
    if args.omega:
        elem = extract_omega(L.P, _quadric(L), L.tau)
        cert = is_normal_deg2(L.P, elem)
    elif args.element is None:
        raise UsageError("give --element EXPR or --omega")
    else:
        try:
            cert = is_normal_deg1(L.P, list(parse_form(args.element, names)))
        except ParseError:
            cert = is_normal_deg2(L.P, parse_expr(args.element, names))
    out = cert.to_json(names)
    if cert.phi is not None and L.tau is not None:
        out["phi_proportional_to_tau"] = cert.phi.is_proportional_to(L.tau)
    return (0 if cert.is_normal else 1), out


def cmd_omega(args):
    L = _load(args)
    q, tau = _quadric(L), _tau(args, L)
    out = {"algebra": L.label, "surjection": check_surjection(L.P, q, tau)}
    om = extract_omega(L.P, q, tau)
    scal = omega_scalars(L.P, tau, om)
    out["omega"] = om.format(L.P.gen_names)
    out["multiples"] = all(c is not None for c in scal.values())
    out["scalars"] = {f"{L.P.gen_names[a]},{L.P.gen_names[b]}": (None if c is None else fmt_q(c))
                      for (a, b), c in scal.items()}
    return (0 if out["multiples"] else 1), out


def cmd_point_scheme(args):
    L = _load(args)
    lines = [Line(*line_forms(l)) for l in L.lines]
    rep = scheme_report(L.P, _quadric(L), lines)
    I = minors(multilinearize(L.P))
    out = {"algebra": L.label, "minors": [str(p) for p in I.polys]}
    out.update(rep.to_json())
    return 0, out


def cmd_sigma(args):
    L = _load(args)
    p = _point(args.point)
    s = sigma_at(multilinearize(L.P), p)
    return 0, {"point": [fmt_q(x) for x in p], "sigma": [fmt_q(x) for x in s]}


def cmd_twist(args):
    L = _load(args)
    tau = _tau(args, required=True)
    T = zhang_twist(L.P, tau)
    return 0, {"tau": tau.to_str(), "presentation": format_presentation(T),
               "dims": hilbert_coefficients(T, args.max_degree) if args.dims else None}


def cmd_stab(args):
    L = _load(args)
    tau = _tau(args, required=True)
    ok = stabilizes(L.P, tau)
    return (0 if ok else 1), {"tau": tau.to_str(), "stabilizes": ok}


def _parse_delta(text: str, gens) -> dict:
    out = {}
    if not text:
        return out
    for piece in text.split(";"):
        if not piece.strip():
            continue
        if ":" not in piece:
            raise UsageError(f"delta entries look like 'x3: -x1*x2', got {piece!r}")
        g, expr = piece.split(":", 1)
        g = g.strip()
        if g not in gens:
            raise UsageError(f"unknown base generator {g!r}")
        out[gens.index(g)] = parse_expr(expr, gens)
    return out


def _poly_ring(gens) -> QuadraticPresentation:
    n = len(gens)
    rels = [TensorElement.word((i, j), n) - TensorElement.word((j, i), n)
            for i in range(n) for j in range(i + 1, n)]
    return QuadraticPresentation.from_relations(rels, gens)


def cmd_ore_check(args):
    if args.base:
        base = parse_file(Path(args.base).read_text(encoding="utf-8")).presentation
    else:
        base = _poly_ring(tuple(args.gens.split(",")))
    gens = base.gen_names
    sigma = QMatrix.parse(args.sigma) if args.sigma else QMatrix.identity(base.n)
    o = OreData(base, sigma, _parse_delta(args.delta, gens), args.adjoint,
                None if args.position is None else args.position - 1)
    try:
        ok = sigma_derivation_check(o)
    except NotAnAutomorphism as exc:
        return 1, {"derivation": False, "error": str(exc)}
    E = ore_presentation(o)
    out = {"derivation": ok, "extension": format_presentation(E)}
    if args.alg or args.family:
        L = _load(args)
        out["matches"] = E.relations == L.P.relations
        ok = ok and out["matches"]
    return (0 if ok else 1), out


def cmd_multiplicity(args):
    L = _load(args)
    if args.line:
        line = LineParam.parse(args.line)
        at = INF if args.at.strip().lower() in ("inf", "infinity") else QMatrix.parse(args.at).row(0)[0]
        I = minors(multilinearize(L.P))
        try:
            m = line_multiplicity(I.polys, line, at)
        except LineContained:
            return 0, {"line": args.line, "at": args.at, "multiplicity": None,
                       "state": "line contained in the scheme"}
        return 0, {"line": args.line, "at": args.at, "multiplicity": m}
    lines = [Line(*line_forms(l)) for l in L.lines]
    return 0, multiplicity_report(L.P, _quadric(L), lines, tau=L.tau)


def cmd_hv_search(args):
    L = _load(args)
    taus = tuple(args.base_taus.split(","))
    m = hv_match_search(L.P, args.grid, taus)
    if m is None:
        return 1, {"grid": args.grid, "match": None}
    return 0, {"grid": args.grid, "match": {k: str(v) for k, v in m.params.items()},
               "base_tau": m.base_tau, "f": m.twist.f.to_str(), "g": m.twist.g.to_str()}


def cmd_verify_paper(args):
    sel = "all" if not args.checks else [c.strip() for c in args.checks.split(",")]
    if sel != "all":
        unknown = [c for c in sel if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    rep = verify_paper(sel, args.max_degree, args.flip_convention)
    return (0 if rep.ok else 1), rep.to_json()


# -- parser ------------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, algebra=True):
    if algebra:
        p.add_argument("--alg", metavar="FILE", help="presentation file")
        p.add_argument("--family", metavar="ID", help="catalog entry id")
        p.add_argument("--params", metavar="K=V,...", help="catalog parameters")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--json", metavar="PATH", help="also write the report here")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="asreg", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="graded dimensions")
    _common(p)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("central", help="degree-1 central elements")
    _common(p)
    p.set_defaults(fn=cmd_central)

    p = sub.add_parser("normal", help="normality of a degree-1 or degree-2 element")
    _common(p)
    p.add_argument("--element", help="e.g. 'x1' or 'x2*x3 - x3*x2'")
    p.add_argument("--omega", action="store_true", help="test the quadric lift")
    p.set_defaults(fn=cmd_normal)

    p = sub.add_parser("omega", help="surjection onto the coordinate ring and the lift")
    _common(p)
    p.add_argument("--tau")
    p.set_defaults(fn=cmd_omega)

    p = sub.add_parser("point-scheme", help="minors and component tests")
    _common(p)
    p.set_defaults(fn=cmd_point_scheme)

    p = sub.add_parser("sigma", help="the automorphism at a point")
    _common(p)
    p.add_argument("--point", required=True, help="e.g. 1,1,0,0")
    p.set_defaults(fn=cmd_sigma)

    p = sub.add_parser("twist", help="twist by an automorphism")
    _common(p)
    p.add_argument("--tau", required=True, help="rows joined by ';'")
    p.add_argument("--dims", action="store_true", help="also report graded dimensions")
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("stab", help="does tau preserve the relation span")
    _common(p)
    p.add_argument("--tau", required=True)
    p.set_defaults(fn=cmd_stab)

    p = sub.add_parser("ore-check", help="sigma-derivation compatibility")
    _common(p)
    p.add_argument("--base", metavar="FILE", help="base presentation (default: polynomial ring)")
    p.add_argument("--gens", default="x1,x2,x3", help="generators of the default base")
    p.add_argument("--sigma", help="row i = image of base generator i")
    p.add_argument("--delta", default="", help="e.g. 'x3: -x1*x2; x1: 0*x1*x1'")
    p.add_argument("--adjoint", default="x4")
    p.add_argument("--position", type=int, help="1-based slot of the new generator")
    p.set_defaults(fn=cmd_ore_check)

    p = sub.add_parser("multiplicity", help="line multiplicities and the classification")
    _common(p)
    p.add_argument("--line", help="base=..;dir=..")
    p.add_argument("--at", default="0", help="parameter or inf")
    p.set_defaults(fn=cmd_multiplicity)

    p = sub.add_parser("hv-search", help="twisting-system grid search")
    _common(p)
    p.add_argument("--grid", choices=sorted(HV_GRIDS), default="small")
    p.add_argument("--base-taus", default="identity,remark")
    p.set_defaults(fn=cmd_hv_search)

    p = sub.add_parser("verify-paper", help="run the verification suite")
    _common(p, algebra=False)
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.add_argument("--flip-convention", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_verify_paper)
    return ap


def _emit(doc, path):
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    print(text)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code, doc = args.fn(args)
    except (UsageError, ParseError, CatalogError, OSError) as exc:
        print(f"asreg: error: {exc}", file=sys.stderr)
        return 2
    except (OmegaError, SurjectionError, NotOnScheme, SigmaUndetermined, SingularMatrix,
            LineContained, ValueError) as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"}, args.json)
        return 1
    _emit(doc, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
