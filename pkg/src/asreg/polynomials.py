"""Sparse commutative polynomials over Q in the point-scheme variables.

A :class:`CommPoly` is a map from exponent tuples to nonzero Fractions.  The
variable list defaults to ``Y1..Y4``.  Only what the point-scheme and
multiplicity computations need is implemented: ring arithmetic, partial
derivatives, exact division by linear forms, evaluation and restriction to
parametrized lines.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Q, fmt_q

__all__ = [
    "CommPoly",
    "LinearForm",
    "DEFAULT_VARS",
    "poly_partial",
    "poly_divisible",
    "restrict_to_line",
    "det",
    "ProportionalLine",
]

DEFAULT_VARS = ("Y1", "Y2", "Y3", "Y4")


class ProportionalLine(ValueError):
    """Base point and direction do not span a line."""


def _grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class CommPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, terms: dict | None = None, variables: Sequence[str] = DEFAULT_VARS):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for e, c in (terms or {}).items():
            c = Q(c)
            if c:
                e = tuple(e)
                if len(e) != n:
                    raise ValueError("exponent length does not match variables")
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # construction -----------------------------------------------------------

    @classmethod
    def const(cls, c, variables=DEFAULT_VARS) -> "CommPoly":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name_or_index, variables=DEFAULT_VARS) -> "CommPoly":
        variables = tuple(variables)
        i = name_or_index if isinstance(name_or_index, int) else variables.index(name_or_index)
        e = [0] * len(variables)
        e[i] = 1
        return cls({tuple(e): 1}, variables)

    @classmethod
    def gens(cls, variables=DEFAULT_VARS) -> list["CommPoly"]:
        return [cls.var(i, variables) for i in range(len(variables))]

    def _lift(self, other) -> "CommPoly":
        if isinstance(other, CommPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variables")
            return other
        if isinstance(other, LinearForm):
            return other.to_poly(self.variables)
        return CommPoly.const(other, self.variables)

    # arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "CommPoly":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CommPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self) -> "CommPoly":
        return CommPoly({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other) -> "CommPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "CommPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "CommPoly":
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CommPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CommPoly":
        out = CommPoly.const(1, self.variables)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CommPoly.const(other, self.variables)
        if isinstance(other, LinearForm):
            other = other.to_poly(self.variables)
        return (isinstance(other, CommPoly) and self.variables == other.variables
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    # calculus and evaluation ------------------------------------------------

    def partial(self, var) -> "CommPoly":
        i = var if isinstance(var, int) else self._index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return CommPoly(out, self.variables)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __call__(self, point: Sequence) -> Fraction:
        point = [Q(x) for x in point]
        if len(point) != len(self.variables):
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x ** k
            total += t
        return total

    evaluate = __call__

    # printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}"
                            for v, k in zip(self.variables, e) if k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = fmt_q(a)
            elif a == 1:
                body = mono
            else:
                body = f"{fmt_q(a)}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"CommPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str, variables=DEFAULT_VARS) -> "CommPoly":
        """Inverse of ``str``: sums of ``c*Y1^2*Y3`` style terms."""
        variables = tuple(variables)
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls({}, variables)
        if s[0] not in "+-":
            s = "+" + s
        out = cls({}, variables)
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff = Fraction(1)
            e = [0] * len(variables)
            for factor in body.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in variables:
                    raise ValueError(f"unknown variable {name!r}")
                e[variables.index(name)] += int(power) if power else 1
            if sign == "-":
                coeff = -coeff
            out = out + cls({tuple(e): coeff}, variables)
        return out


class LinearForm:
    """Linear form ``sum c_i Y_i``; identified with a degree-1 CommPoly."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        self.coefficients = tuple(Q(c) for c in coefficients)

    @classmethod
    def coordinate(cls, i: int, n: int = 4) -> "LinearForm":
        return cls([1 if j == i else 0 for j in range(n)])

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __call__(self, point) -> Fraction:
        return sum((c * Q(x) for c, x in zip(self.coefficients, point) if c), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def to_poly(self, variables=DEFAULT_VARS) -> CommPoly:
        n = len(variables)
        return CommPoly({tuple(int(j == i) for j in range(n)): c
                         for i, c in enumerate(self.coefficients) if c}, variables)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(a + b for a, b in zip(self, other))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(a - b for a, b in zip(self, other))

    def __mul__(self, c):
        if isinstance(c, (LinearForm, CommPoly)):
            return self.to_poly() * c
        return LinearForm(Q(c) * a for a in self)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        return str(self.to_poly(tuple(f"Y{i + 1}" for i in range(len(self)))))

    def __repr__(self):
        return f"LinearForm({str(self)!r})"


def poly_partial(p: CommPoly, var) -> CommPoly:
    return p.partial(var)


def _divide_linear(p: CommPoly, form: CommPoly) -> tuple[CommPoly, CommPoly]:
    """Division of ``p`` by a linear form, eliminating its lead variable."""
    k = next(i for i in range(len(form.variables))
             if any(e[i] for e in form.terms))
    unit = tuple(int(j == k) for j in range(len(form.variables)))
    lead = form.terms[unit]
    rest = form - CommPoly({unit: lead}, form.variables)
    remainder = dict(p.terms)
    quotient: dict = {}
    while True:
        hits = [e for e in remainder if e[k]]
        if not hits:
            break
        e = max(hits, key=lambda f: f[k])
        c = remainder.pop(e) / lead
        f = tuple(x - (j == k) for j, x in enumerate(e))
        quotient[f] = quotient.get(f, 0) + c
        for g, d in rest.terms.items():
            h = tuple(a + b for a, b in zip(f, g))
            v = remainder.get(h, 0) - c * d
            if v:
                remainder[h] = v
            else:
                remainder.pop(h, None)
    return CommPoly(quotient, p.variables), CommPoly(remainder, p.variables)


def poly_divisible(p: CommPoly, forms: Sequence) -> tuple[bool, CommPoly | None]:
    """Divide ``p`` by the product of ``forms``, one form at a time.

    Returns ``(True, quotient)`` if every stage is exact, else ``(False, None)``.
    """
    current = p
    for f in forms:
        f = f if isinstance(f, CommPoly) else LinearForm(f).to_poly(p.variables)
        if f.is_zero():
            raise ValueError("cannot divide by the zero form")
        if f.degree != 1 or not f.is_homogeneous():
            raise ValueError("divisor must be a linear form")
        current, r = _divide_linear(current, f)
        if not r.is_zero():
            return False, None
    return True, current


def _proportional(a: Sequence, b: Sequence) -> bool:
    a = [Q(x) for x in a]
    b = [Q(x) for x in b]
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(len(a)))


def restrict_to_line(p: CommPoly, base: Sequence, direction: Sequence) -> list[Fraction]:
    """Coefficients (constant term first) of ``t -> p(base + t*direction)``.

    Trailing zeros are stripped, so the zero polynomial gives ``[]``.
    """
    base = [Q(x) for x in base]
    direction = [Q(x) for x in direction]
    if len(base) != len(p.variables) or len(direction) != len(p.variables):
        raise ValueError("point has wrong length")
    if _proportional(base, direction):
        raise ProportionalLine("base and direction are proportional")
    # powers[i][k] = coefficients of (base_i + t dir_i)^k
    deg = max(p.degree, 0)
    powers = []
    for b, d in zip(base, direction):
        pw = [[Fraction(1)]]
        for _ in range(deg):
            prev = pw[-1]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for j, c in enumerate(prev):
                nxt[j] += c * b
                nxt[j + 1] += c * d
            pw.append(nxt)
        powers.append(pw)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        acc = [c]
        for i, k in enumerate(e):
            if k:
                f = powers[i][k]
                nxt = [Fraction(0)] * (len(acc) + len(f) - 1)
                for a_i, a in enumerate(acc):
                    if a:
                        for b_i, b in enumerate(f):
                            if b:
                                nxt[a_i + b_i] += a * b
                acc = nxt
        for j, a in enumerate(acc):
            out[j] += a
    while out and out[-1] == 0:
        out.pop()
    return out


def det(matrix: Sequence[Sequence[CommPoly]]) -> CommPoly:
    """Determinant by Laplace expansion along the first row."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    variables = matrix[0][0].variables
    total = CommPoly({}, variables)
    for j in range(n):
        a = matrix[0][j]
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = a * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
