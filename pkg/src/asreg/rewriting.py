"""Independent rewriting oracle for quadratic algebras.

Relations are oriented by their leading word in graded-lex order (for some
ordering of the generators).  When every degree-3 overlap resolves, the
diamond lemma says the words avoiding all leading words form a basis, so
``count_normal_words`` gives the graded dimensions.  Nothing here shares
code with the linear-algebra engine on purpose; tests compare the two.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .tensor import QuadraticPresentation

__all__ = ["RewritingSystem", "orient", "confluent_orientation", "count_normal_words",
           "oracle_dims"]


def _rank_key(word: tuple, order: tuple) -> tuple:
    return tuple(order.index(x) for x in word)


def _echelon(rows: list[dict], key) -> list[dict]:
    """Fully reduced rows; each row's largest word (by ``key``) has coefficient 1."""
    basis: list[dict] = []
    for r in rows:
        r = {w: Fraction(c) for w, c in r.items() if c}
        for b in basis:
            lead = max(b, key=key)
            c = r.get(lead)
            if c:
                for w, x in b.items():
                    v = r.get(w, 0) - c * x
                    if v:
                        r[w] = v
                    else:
                        r.pop(w, None)
        if not r:
            continue
        lead = max(r, key=key)
        inv = 1 / r[lead]
        r = {w: x * inv for w, x in r.items()}
        for b in basis:
            c = b.get(lead)
            if c:
                for w, x in r.items():
                    v = b.get(w, 0) - c * x
                    if v:
                        b[w] = v
                    else:
                        b.pop(w, None)
        basis.append(r)
    return basis


@dataclass
class RewritingSystem:
    n: int
    order: tuple                 # generator ranks, smallest first
    rules: dict                  # leading word -> {smaller word: coeff}

    def key(self, word):
        return (len(word), _rank_key(word, self.order))

    def reduce(self, poly: dict) -> dict:
        """Rewrite until no leading word occurs."""
        poly = {w: c for w, c in poly.items() if c}
        out: dict = {}
        while poly:
            w = max(poly, key=self.key)
            c = poly.pop(w)
            hit = None
            for i in range(len(w) - 1):
                if w[i:i + 2] in self.rules:
                    hit = i
                    break
            if hit is None:
                out[w] = out.get(w, 0) + c
                if not out[w]:
                    del out[w]
                continue
            for tail, x in self.rules[w[hit:hit + 2]].items():
                nw = w[:hit] + tail + w[hit + 2:]
                v = poly.get(nw, 0) + c * x
                if v:
                    poly[nw] = v
                else:
                    poly.pop(nw, None)
        return out

    def overlaps(self):
        for (a, b), (b2, c) in itertools.product(self.rules, repeat=2):
            if b == b2:
                yield (a, b, c)

    def is_confluent(self) -> bool:
        for a, b, c in self.overlaps():
            left = {t + (c,): v for t, v in self.rules[(a, b)].items()}
            right = {(a,) + t: v for t, v in self.rules[(b, c)].items()}
            if self.reduce(left) != self.reduce(right):
                return False
        return True


def orient(P: QuadraticPresentation, order: Sequence[int] | None = None) -> RewritingSystem:
    n = P.n
    order = tuple(range(n)) if order is None else tuple(order)
    rows = []
    for r in P.relations.sparse_rows():
        rows.append({divmod(idx, n): c for idx, c in r.items()})
    key = lambda w: _rank_key(w, order)
    rules = {}
    for b in _echelon(rows, key):
        lead = max(b, key=key)
        rules[lead] = {w: -c for w, c in b.items() if w != lead}
    return RewritingSystem(n, order, rules)


def confluent_orientation(P: QuadraticPresentation) -> RewritingSystem | None:
    """First generator ordering (lexicographic over permutations) that resolves."""
    for order in itertools.permutations(range(P.n)):
        rs = orient(P, order)
        if rs.is_confluent():
            return rs
    return None


def count_normal_words(rs: RewritingSystem, d: int) -> int:
    """Words of length d avoiding every leading word (transfer matrix count)."""
    if d == 0:
        return 1
    ends = [1] * rs.n
    for _ in range(d - 1):
        ends = [sum(ends[a] for a in range(rs.n) if (a, b) not in rs.rules) for b in range(rs.n)]
    return sum(ends)


def oracle_dims(P: QuadraticPresentation, degrees=range(6)) -> list[int] | None:
    """Normal-word counts, or None when no ordering gives a confluent system."""
    rs = confluent_orientation(P)
    if rs is None:
        return None
    return [count_normal_words(rs, d) for d in degrees]
