"""Canonical maps on T(g): K and its inverse, t, r, e, rho, kappa and the
PBW projection to U(g).

Every map on J(g) is computed triple by triple from its defining recursion
over the prefix, and the per-triple results are memoized.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import NamedTuple

from .free_lie import GElement, Monomial, _add_into, bracket_monomials, diamond_mono
from .tensor import (
    JElement,
    TElement,
    Word,
    _nabla_word,
    concat,
    coproduct_splits,
    j_embed,
    left_multiply,
    nabla_on_j_terms,
)

# -- K ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _k_word(w: Word) -> dict:
    if len(w) <= 1:
        return {w: 1}
    x, rest = w[0], w[1:]
    acc: dict = {}
    for rw, c in _k_word(rest).items():
        _add_into(acc, {(x,) + rw: c})
    for nw, c in _nabla_word({x: 1}, rest).items():
        _add_into(acc, _k_word(nw), -c)
    return acc


def K_map(u: TElement) -> TElement:
    """K(1) = 1 and K(x u) = x K(u) - K(nabla_x u)."""
    acc: dict = {}
    for w, c in u.terms.items():
        _add_into(acc, _k_word(w), c)
    return TElement._raw(acc)


def K_inverse(s: TElement) -> TElement:
    # K is the identity plus a strictly length-lowering part, so the
    # correction loop stops after at most max_length rounds.
    a = s
    residual = s - K_map(a)
    while residual:
        a = a + residual
        residual = s - K_map(a)
    return a


# -- t ----------------------------------------------------------------------


def _lambda_base(x: Monomial, y: Monomial) -> dict:
    acc = {diamond_mono(x, y): 1}
    _add_into(acc, {diamond_mono(y, x): 1}, -1)
    _add_into(acc, bracket_monomials(x, y), -1)
    return acc


@lru_cache(maxsize=None)
def _t_triple(p: Word, x: Monomial, y: Monomial) -> dict:
    if not p:
        return _lambda_base(x, y)
    z, rest = p[0], p[1:]
    acc: dict = {}
    for m, c in _t_triple(rest, x, y).items():
        _add_into(acc, {diamond_mono(z, m): c})
    for k, c in nabla_on_j_terms({z: 1}, rest, x, y).items():
        _add_into(acc, _t_triple(*k), -c)
    return acc


def t_map(q: JElement) -> GElement:
    acc: dict = {}
    for k, c in q.terms.items():
        _add_into(acc, _t_triple(*k), c)
    return GElement._raw(acc)


# -- r ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _r_letter(p: Word, x: Monomial, y: Monomial, m: Monomial) -> dict:
    """r(p, x, y) applied to the basis monomial m, as a g-valued combination."""
    if not p:
        acc = {diamond_mono(x, diamond_mono(y, m)): 1}
        _add_into(acc, {diamond_mono(y, diamond_mono(x, m)): 1}, -1)
        for b, c in bracket_monomials(x, y).items():
            _add_into(acc, {diamond_mono(b, m): c}, -1)
        return acc
    z, rest = p[0], p[1:]
    acc = {}
    for n, c in _r_letter(rest, x, y, m).items():
        _add_into(acc, {diamond_mono(z, n): c})
    _add_into(acc, _r_letter(rest, x, y, diamond_mono(z, m)), -1)
    for k, c in nabla_on_j_terms({z: 1}, rest, x, y).items():
        _add_into(acc, _r_letter(*k, m), -c)
    return acc


def _r_on_word(p: Word, x: Monomial, y: Monomial, w: Word) -> dict:
    acc: dict = {}
    for i, letter in enumerate(w):
        head, tail = w[:i], w[i + 1:]
        for n, c in _r_letter(p, x, y, letter).items():
            _add_into(acc, {head + (n,) + tail: c})
    return acc


def r_apply(q: JElement, v: TElement) -> TElement:
    """Action of the derivation r(q) on v."""
    acc: dict = {}
    for (p, x, y), cq in q.terms.items():
        for w, cv in v.terms.items():
            _add_into(acc, _r_on_word(p, x, y, w), cq * cv)
    return TElement._raw(acc)


# -- e ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _e_triple(p: Word, x: Monomial, y: Monomial) -> dict:
    if not p:
        acc = {(x, y): 1, (y, x): -1}
        for b, c in bracket_monomials(x, y).items():
            _add_into(acc, {(b,): c}, -1)
        return acc
    z, rest = p[0], p[1:]
    acc = {}
    for w, c in _e_triple(rest, x, y).items():
        _add_into(acc, {(z,) + w: c})
        _add_into(acc, {w + (z,): c}, -1)
    for k, c in nabla_on_j_terms({z: 1}, rest, x, y).items():
        _add_into(acc, _e_triple(*k), -c)
    return acc


def e_map(q: JElement) -> TElement:
    acc: dict = {}
    for k, c in q.terms.items():
        _add_into(acc, _e_triple(*k), c)
    return TElement._raw(acc)


# -- rho, kappa -------------------------------------------------------------


def rho_apply(q: JElement, v: TElement) -> TElement:
    """rho(u w) v = u_(1) (t(u_(2) w) v + r(u_(2) w) v)."""
    acc: dict = {}
    for (u, x, y), cq in q.terms.items():
        for u1, u2 in coproduct_splits(u):
            t_part = _t_triple(u2, x, y)
            for wv, cv in v.terms.items():
                c0 = cq * cv
                for m, ct in t_part.items():
                    _add_into(acc, {u1 + (m,) + wv: ct}, c0)
                for w, cr in _r_on_word(u2, x, y, wv).items():
                    _add_into(acc, {u1 + w: cr}, c0)
    return TElement._raw(acc)


def kappa_apply(q: JElement, v: TElement) -> TElement:
    """kappa(u w) v = e(u_(1) w) K(u_(2) v)."""
    acc: dict = {}
    for (u, x, y), cq in q.terms.items():
        for u1, u2 in coproduct_splits(u):
            e_part = _e_triple(u1, x, y)
            for wv, cv in v.terms.items():
                k_part = _k_word(u2 + wv)
                for we, ce in e_part.items():
                    for wk, ck in k_part.items():
                        _add_into(acc, {we + wk: ce * ck}, cq * cv)
    return TElement._raw(acc)


# -- PBW projection ---------------------------------------------------------


def _first_inversion(w: Word) -> int:
    for i in range(len(w) - 1):
        if w[i + 1] < w[i]:
            return i
    return -1


def _inversions(w: Word) -> list[int]:
    return [i for i in range(len(w) - 1) if w[i + 1] < w[i]]


def _rewrite(w: Word, i: int) -> dict:
    """One straightening step at position i: ...ab... -> ...ba... + ...[a,b]..."""
    a, b = w[i], w[i + 1]
    head, tail = w[:i], w[i + 2:]
    out = {head + (b, a) + tail: 1}
    for m, c in bracket_monomials(a, b).items():
        _add_into(out, {head + (m,) + tail: c})
    return out


@lru_cache(maxsize=None)
def _pbw_word(w: Word) -> dict:
    i = _first_inversion(w)
    if i < 0:
        return {w: 1}
    acc: dict = {}
    for nw, c in _rewrite(w, i).items():
        _add_into(acc, _pbw_word(nw), c)
    return acc


def _pbw_random(w: Word, rng: random.Random) -> dict:
    pending = {w: 1}
    acc: dict = {}
    while pending:
        cur = max(pending, key=lambda t: (len(t), [m.key for m in t]))
        c = pending.pop(cur)
        inv = _inversions(cur)
        if not inv:
            _add_into(acc, {cur: c})
            continue
        _add_into(pending, _rewrite(cur, rng.choice(inv)), c)
    return acc


class PBWNormalForm(NamedTuple):
    value: TElement

    def is_zero(self) -> bool:
        return not self.value


def is_sorted_word(w: Word) -> bool:
    return _first_inversion(w) < 0


def pbw_normal_form(u: TElement, strategy: str = "leftmost", seed: int | None = None) -> PBWNormalForm:
    """Straighten ``u`` to sorted words.

    ``strategy="leftmost"`` rewrites the leftmost inversion first and is
    memoized; ``strategy="random"`` picks inversions with a seeded RNG.
    """
    acc: dict = {}
    if strategy == "leftmost":
        for w, c in u.terms.items():
            _add_into(acc, _pbw_word(w), c)
    elif strategy == "random":
        rng = random.Random(seed)
        for w in sorted(u.terms, key=lambda t: [m.key for m in t]):
            _add_into(acc, _pbw_random(w, rng), u.terms[w])
    else:
        raise ValueError(f"unknown straightening strategy {strategy!r}")
    return PBWNormalForm(TElement._raw(acc))


# -- the commutation theorem ------------------------------------------------


class TheoremResult(NamedTuple):
    lhs: TElement
    is_zero: bool


def theorem_element(u: TElement, omega: JElement, v: TElement) -> TElement:
    """u w v + rho(u w) v, before applying K."""
    q = left_multiply(u, omega)
    return concat(j_embed(q), v) + rho_apply(q, v)


def theorem_check(u: TElement, omega: JElement, v: TElement) -> TheoremResult:
    if any(p for p, _, _ in omega.terms):
        raise ValueError("omega must have empty prefixes")
    lhs = K_map(theorem_element(u, omega, v))
    return TheoremResult(lhs, pbw_normal_form(lhs).is_zero())


def clear_caches() -> None:
    for f in (_k_word, _t_triple, _r_letter, _e_triple, _pbw_word):
        f.cache_clear()
