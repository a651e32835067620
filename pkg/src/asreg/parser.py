"""Presentation files.

Grammar::

    file     = line*
    line     = "generators:" name+ | "relation:" expr
             | "quadric:" "(" form "," form ")" | "tau:" matrix | comment
    expr     = ["-"] term (("+" | "-") term)*
    term     = [rational "*"] name "*" name
    form     = ["-"] lterm (("+" | "-") lterm)*,   lterm = [rational "*"] name
    rational = int ["/" posint]
    matrix   = rows of comma-separated rationals joined by ";"

Whitespace is ignored and ``#`` starts a comment.  Without a
``generators:`` line the generators are x1 x2 x3 x4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import QMatrix, fmt_q
from .polynomials import LinearForm
from .tensor import QuadraticPresentation, TensorElement

__all__ = ["ParseError", "PresentationFile", "parse_file", "parse_presentation",
           "parse_expr", "parse_form", "format_presentation"]

DEFAULT_GENS = ("x1", "x2", "x3", "x4")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {msg}" if line else msg)
        self.msg, self.line, self.col = msg, line, col


@dataclass
class PresentationFile:
    presentation: QuadraticPresentation
    quadric: tuple | None = None      # (LinearForm, LinearForm)
    tau: QMatrix | None = None


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*(),]))")


def _tokens(text: str, line: int, col0: int):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}",
                             line, col0 + pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1)
        kind = m.lastgroup
        out.append((kind, m.group(kind), col0 + m.start(kind) + 1))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, toks, line, end_col):
        self.toks, self.i, self.line, self.end_col = toks, 0, line, end_col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind=None, value=None):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.line, self.end_col)
        if (kind and t[0] != kind) or (value and t[1] != value):
            want = value or kind
            raise ParseError(f"expected {want}, found {t[1]!r}", self.line, t[2])
        self.i += 1
        return t

    def at(self, value) -> bool:
        t = self.peek()
        return t is not None and t[1] == value


def _products(cur: _Cursor, gens: tuple, max_factors: int):
    """Signed sum of [rational *] name (* name)*; returns list of (coef, word, col)."""
    terms = []
    sign = 1
    if cur.at("-"):
        cur.take()
        sign = -1
    elif cur.at("+"):
        cur.take()
    while True:
        t = cur.peek()
        if t is None:
            raise ParseError("expected a term", cur.line, cur.end_col)
        col = t[2]
        coef = Fraction(1)
        if t[0] == "num":
            cur.take()
            coef = Fraction(t[1])
            if coef.denominator == 0:
                raise ParseError("zero denominator", cur.line, col)
            cur.take("op", "*")
        word = []
        name = cur.take("name")
        if name[1] not in gens:
            raise ParseError(f"unknown generator {name[1]!r}", cur.line, name[2])
        word.append(gens.index(name[1]))
        while cur.at("*"):
            cur.take()
            name = cur.take("name")
            if name[1] not in gens:
                raise ParseError(f"unknown generator {name[1]!r}", cur.line, name[2])
            word.append(gens.index(name[1]))
        if len(word) != max_factors:
            what = "non-quadratic term" if max_factors == 2 else "non-linear term"
            raise ParseError(what, cur.line, col)
        terms.append((sign * coef, tuple(word), col))
        t = cur.peek()
        if t is None or t[1] not in "+-":
            return terms
        cur.take()
        sign = 1 if t[1] == "+" else -1


def parse_expr(text: str, gens=DEFAULT_GENS, line: int = 1, col0: int = 0) -> TensorElement:
    gens = tuple(gens)
    toks = _tokens(text, line, col0)
    cur = _Cursor(toks, line, col0 + len(text) + 1)
    terms = _products(cur, gens, 2)
    if cur.peek() is not None:
        t = cur.peek()
        raise ParseError(f"unexpected {t[1]!r}", line, t[2])
    n = len(gens)
    e = TensorElement(n, 2)
    for c, w, _ in terms:
        e = e + TensorElement.word(w, n, c)
    if e.is_zero():
        raise ParseError("zero relation", line, col0 + 1)
    return e


def parse_form(text: str, gens=DEFAULT_GENS, line: int = 1, col0: int = 0) -> LinearForm:
    gens = tuple(gens)
    cur = _Cursor(_tokens(text, line, col0), line, col0 + len(text) + 1)
    terms = _products(cur, gens, 1)
    if cur.peek() is not None:
        t = cur.peek()
        raise ParseError(f"unexpected {t[1]!r}", line, t[2])
    v = [Fraction(0)] * len(gens)
    for c, w, _ in terms:
        v[w[0]] += c
    if not any(v):
        raise ParseError("zero linear form", line, col0 + 1)
    return LinearForm(v)


def _split_top(text: str) -> list[tuple[str, int]]:
    """Split on commas outside parentheses, keeping offsets."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def parse_file(text: str) -> PresentationFile:
    gens = None
    rels = []          # (line, col0, body)
    quadric = tau = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = re.match(r"\s*(generators|relation|quadric|tau)\s*:", body)
        if not m:
            col = len(body) - len(body.lstrip()) + 1
            raise ParseError("expected generators:, relation:, quadric: or tau:", lineno, col)
        key, rest, off = m.group(1), body[m.end():], m.end()
        if key == "generators":
            names = rest.split()
            if not names:
                raise ParseError("no generator names", lineno, off + 1)
            for nm in names:
                if not re.fullmatch(r"[A-Za-z_]\w*", nm):
                    raise ParseError(f"bad generator name {nm!r}", lineno, off + rest.index(nm) + 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate generator name", lineno, off + 1)
            if gens is not None:
                raise ParseError("generators declared twice", lineno, 1)
            gens = tuple(names)
        elif key == "relation":
            rels.append((lineno, off, rest))
        elif key == "quadric":
            rels.append((lineno, off, ("quadric", rest)))
        else:
            try:
                tau = QMatrix.parse(rest)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad matrix: {exc}", lineno, off + 1) from None
    gens = gens or DEFAULT_GENS
    tensors = []
    for lineno, off, rest in rels:
        if isinstance(rest, tuple):
            s = rest[1]
            st = s.strip()
            lead = off + len(s) - len(s.lstrip())
            if not (st.startswith("(") and st.endswith(")")):
                raise ParseError("quadric must be written (form, form)", lineno, lead + 1)
            inner = st[1:-1]
            parts = _split_top(inner)
            if len(parts) != 2:
                raise ParseError("quadric needs exactly two linear forms", lineno, lead + 1)
            quadric = tuple(parse_form(p, gens, lineno, lead + 1 + o) for p, o in parts)
        else:
            tensors.append(parse_expr(rest, gens, lineno, off))
    if tau is not None and tau.shape != (len(gens), len(gens)):
        raise ParseError("tau has the wrong size")
    return PresentationFile(QuadraticPresentation.from_relations(tensors, gens), quadric, tau)


def parse_presentation(text: str) -> QuadraticPresentation:
    return parse_file(text).presentation


def _form_str(f: LinearForm, gens) -> str:
    return TensorElement.linear(list(f), len(gens)).format(gens)


def format_presentation(P: QuadraticPresentation, quadric=None, tau: QMatrix | None = None) -> str:
    """Canonical text: one relation per reduced basis row of W."""
    lines = ["generators: " + " ".join(P.gen_names)]
    lines += [f"relation: {r}" for r in P.format_relations()]
    if quadric is not None:
        lines.append(f"quadric: ({_form_str(quadric[0], P.gen_names)}, "
                     f"{_form_str(quadric[1], P.gen_names)})")
    if tau is not None:
        lines.append(f"tau: {tau.to_str()}")
    return "\n".join(lines) + "\n"
