"""Tensor algebra T(g) over the free framed Lie algebra.

Words are plain tuples of :class:`~framedlie.free_lie.Monomial`; the empty
tuple is the unit.  Elements of the left ideal J(g) are kept as combinations
of ``(prefix, x, y)`` triples meaning ``prefix (x) (x (x) y - y (x) x)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple

from .free_lie import GElement, LinComb, Monomial, _add_into, diamond_mono, scalar

Word = tuple  # tuple[Monomial, ...]
UNIT: Word = ()


def word_degree(w: Word) -> int:
    return sum(m.degree for m in w)


def word_key(w: Word) -> tuple:
    return tuple(m.key for m in w)


class TElement(LinComb):
    """An element of T(g): map from words to rational coefficients."""

    __slots__ = ()

    def words(self) -> list[Word]:
        return sorted(self.terms, key=lambda w: (-len(w), word_key(w)))

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {word_degree(w) for w in self.terms}

    def __repr__(self) -> str:
        from .exprio import format_element

        return f"TElement({format_element(self)})"


def t_word(w: Iterable[Monomial], coef: Fraction | int = 1) -> TElement:
    return TElement._raw({tuple(w): scalar(coef)} if coef else {})


def unit() -> TElement:
    return t_word(UNIT)


def from_g(a: GElement) -> TElement:
    """Embed g into T(g) as length-one words."""
    return TElement._raw({(m,): c for m, c in a.terms.items()})


def as_g(u: TElement) -> GElement:
    terms = {}
    for w, c in u.terms.items():
        if len(w) != 1:
            raise ValueError("element has words of tensor length != 1")
        terms[w[0]] = c
    return GElement._raw(terms)


def concat(u: TElement, v: TElement) -> TElement:
    acc: dict = {}
    for wu, cu in u.terms.items():
        for wv, cv in v.terms.items():
            w = wu + wv
            c = acc.get(w, 0) + cu * cv
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
    return TElement._raw(acc)


class SplitPair(NamedTuple):
    left: Word
    right: Word


@lru_cache(maxsize=None)
def coproduct_splits(w: Word) -> tuple[SplitPair, ...]:
    """All 2**len(w) order-preserving splits of ``w`` (Sweedler components)."""
    n = len(w)
    out = []
    for k in range(n + 1):
        for left_pos in combinations(range(n), k):
            chosen = set(left_pos)
            left = tuple(w[i] for i in left_pos)
            right = tuple(w[i] for i in range(n) if i not in chosen)
            out.append(SplitPair(left, right))
    return tuple(out)


def _nabla_word(x: Mapping, w: Word) -> dict:
    acc: dict = {}
    for i, letter in enumerate(w):
        head, tail = w[:i], w[i + 1:]
        for mx, cx in x.items():
            nw = head + (diamond_mono(mx, letter),) + tail
            c = acc.get(nw, 0) + cx
            if c:
                acc[nw] = c
            else:
                acc.pop(nw, None)
    return acc


def nabla(x: GElement, u: TElement) -> TElement:
    """The derivation of T(g) extending y -> x<>y."""
    acc: dict = {}
    for w, c in u.terms.items():
        _add_into(acc, _nabla_word(x.terms, w), c)
    return TElement._raw(acc)


def nabla_hom(u: TElement, target: TElement) -> TElement:
    """Apply the operator nabla(u), where a word x1..xk acts as nabla_x1 o ... o nabla_xk."""
    acc: dict = {}
    for w, c in u.terms.items():
        cur = target.terms
        for letter in reversed(w):
            nxt: dict = {}
            for tw, tc in cur.items():
                _add_into(nxt, _nabla_word({letter: 1}, tw), tc)
            cur = nxt
        _add_into(acc, cur, c)
    return TElement._raw(acc)


class JElement(LinComb):
    """Element of the left ideal J(g); keys are ``(prefix, x, y)`` with x < y."""

    __slots__ = ()

    def triples(self) -> list[tuple[Fraction, Word, Monomial, Monomial]]:
        return [(c, p, x, y) for (p, x, y), c in sorted(
            self.terms.items(), key=lambda t: (word_key(t[0][0]), t[0][1].key, t[0][2].key))]

    def __repr__(self) -> str:
        return "JElement(" + " + ".join(f"{c}*({p},{x},{y})" for c, p, x, y in self.triples()) + ")"


def _add_triple(acc: dict, prefix: Word, x: Monomial, y: Monomial, coef) -> None:
    if x is y or not coef:
        return
    if y < x:
        x, y, coef = y, x, -coef
    k = (prefix, x, y)
    v = acc.get(k, 0) + coef
    if v:
        acc[k] = v
    else:
        acc.pop(k, None)


def triple(prefix: Word, x: Monomial, y: Monomial, coef: Fraction | int = 1) -> JElement:
    acc: dict = {}
    _add_triple(acc, tuple(prefix), x, y, scalar(coef))
    return JElement._raw(acc)


def make_lambda(x: GElement, y: GElement) -> JElement:
    acc: dict = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            _add_triple(acc, UNIT, mx, my, cx * cy)
    return JElement._raw(acc)


def left_multiply(u: TElement, q: JElement) -> JElement:
    """u (x) q, which stays in the left ideal."""
    acc: dict = {}
    for w, cw in u.terms.items():
        for (p, x, y), c in q.terms.items():
            _add_triple(acc, w + p, x, y, cw * c)
    return JElement._raw(acc)


def j_embed(q: JElement) -> TElement:
    acc: dict = {}
    for (p, x, y), c in q.terms.items():
        _add_into(acc, {p + (x, y): c, p + (y, x): -c})
    return TElement._raw(acc)


def nabla_on_j_terms(z: Mapping, p: Word, x: Monomial, y: Monomial) -> dict:
    """nabla_z applied to the single triple (p, x, y); ``z`` is a monomial->coef map."""
    acc: dict = {}
    for w, c in _nabla_word(z, p).items():
        _add_triple(acc, w, x, y, c)
    for mz, cz in z.items():
        _add_triple(acc, p, diamond_mono(mz, x), y, cz)
        _add_triple(acc, p, x, diamond_mono(mz, y), cz)
    return acc


def nabla_on_j(z: GElement, q: JElement) -> JElement:
    acc: dict = {}
    for (p, x, y), c in q.terms.items():
        for k, v in nabla_on_j_terms(z.terms, p, x, y).items():
            _add_triple(acc, *k, c * v)
    return JElement._raw(acc)
