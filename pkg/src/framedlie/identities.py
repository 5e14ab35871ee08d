"""Commutation relations for iterated covariant derivatives.

For n vector slots and a transposition at positions (i, i+1), the identity

    v_1..v_i v_{i+1}..v_n - v_1..v_{i+1} v_i..v_n + rho(v_1..v_{i-1} w) v_{i+2}..v_n = 0

holds after applying the covariant-derivative symbol map (w is the
antisymmetrized pair).  Torsion and curvature symbols are kept opaque: a
``TSym`` stands for t(z_1..z_k w) and an ``RSym`` for r(z_1..z_k w) applied to
one slot.

Index rendering convention: free indices i, j, k, a, b, ... name the slots in
order; each torsion/curvature factor gets a fresh contracted index from
l, m, p, q, ... in order of first use within its term.  A symbol with k
derivative slots prints as ``(∇_a..∇_bT)_{xy}^l`` (resp. ``R``), the k-th
covariant derivative with derivative slots first.  For k >= 1 this reading is
a convention, flagged by a header line in the index and LaTeX output.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .free_lie import _add_into, gen
from .maps import _r_letter, _t_triple
from .tensor import TElement, _add_triple

FREE_INDICES = "ijkabcdefgh"
CONTRACTED_INDICES = "lmpqrstuvwxyz"


@dataclass(frozen=True)
class GenRef:
    position: int


@dataclass(frozen=True)
class TSym:
    args: tuple  # slot positions; the last two are the antisymmetrized pair

    def __post_init__(self):
        if len(self.args) < 2:
            raise ValueError("torsion symbol needs at least two arguments")
        if len(set(self.args)) != len(self.args):
            raise ValueError("torsion symbol arguments must be distinct slots")


@dataclass(frozen=True)
class RSym:
    args: tuple
    target: int

    def __post_init__(self):
        if len(self.args) < 2:
            raise ValueError("curvature symbol needs at least two arguments besides the target")
        if len(set(self.args + (self.target,))) != len(self.args) + 1:
            raise ValueError("curvature symbol arguments must be distinct slots")


SymbolicFactor = Union[GenRef, TSym, RSym]
Term = tuple  # (Fraction, tuple[SymbolicFactor, ...])


@dataclass(frozen=True)
class IdentityDocument:
    n: int
    i: int
    terms: tuple  # of Term

    def __post_init__(self):
        if len(self.terms) < 2 or self.terms[0][0] != 1 or self.terms[1][0] != -1:
            raise ValueError("an identity starts with the ordered and the transposed word")
        if any(len(word) >= self.n for _, word in self.terms[2:]):
            raise ValueError("remainder terms must be shorter than n")


def rho_opaque(prefix_len: int, suffix_len: int, offset: int = 0) -> list[Term]:
    """Expand rho(prefix w) suffix with t and r left symbolic.

    Slots are numbered ``offset+1 .. offset+prefix_len`` for the prefix, the
    next two for the pair and the rest for the suffix.
    """
    if prefix_len < 0 or suffix_len < 0:
        raise ValueError("lengths must be non-negative")
    prefix = tuple(range(offset + 1, offset + prefix_len + 1))
    x, y = offset + prefix_len + 1, offset + prefix_len + 2
    suffix = tuple(range(y + 1, y + 1 + suffix_len))
    one = Fraction(1)
    out: list[Term] = []
    for k in range(prefix_len + 1):
        for chosen in combinations(prefix, k):
            u1 = tuple(GenRef(p) for p in prefix if p not in chosen)
            sv = tuple(GenRef(p) for p in suffix)
            out.append((one, u1 + (TSym(chosen + (x, y)),) + sv))
            for pos, target in enumerate(suffix):
                out.append((one, u1 + sv[:pos] + (RSym(chosen + (x, y), target),) + sv[pos + 1:]))
    return out


def commutation_identity(n: int, i: int) -> IdentityDocument:
    if not 1 <= i < n:
        raise ValueError(f"position must satisfy 1 <= i < n, got n={n}, i={i}")
    slots = list(range(1, n + 1))
    ordered = tuple(GenRef(p) for p in slots)
    swapped = slots[:]
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    terms = [(Fraction(1), ordered), (Fraction(-1), tuple(GenRef(p) for p in swapped))]
    terms += rho_opaque(i - 1, n - i - 1)
    return IdentityDocument(n, i, tuple(terms))


# -- expansion in the free algebra ------------------------------------------


def expand_factor(f: SymbolicFactor) -> dict:
    """g-valued expansion with slot p mapped to generator p-1."""
    if isinstance(f, GenRef):
        return {gen(f.position - 1): Fraction(1)}
    if isinstance(f, TSym):
        *pre, a, b = f.args
        key = _triple_terms(pre, a, b)
        out: dict = {}
        for (p, x, y), c in key.items():
            _add_into(out, _t_triple(p, x, y), c)
        return out
    *pre, a, b = f.args
    out = {}
    for (p, x, y), c in _triple_terms(pre, a, b).items():
        _add_into(out, _r_letter(p, x, y, gen(f.target - 1)), c)
    return out


def _triple_terms(pre, a, b) -> dict:
    acc: dict = {}
    _add_triple(acc, tuple(gen(p - 1) for p in pre), gen(a - 1), gen(b - 1), Fraction(1))
    return acc


def expand_terms(terms) -> TElement:
    acc: dict = {}
    for coef, word in terms:
        cur: dict = {(): coef}
        for f in word:
            letter = expand_factor(f)
            nxt: dict = {}
            for w, c in cur.items():
                for m, cm in letter.items():
                    _add_into(nxt, {w + (m,): c * cm})
            cur = nxt
        _add_into(acc, cur)
    return TElement._raw(acc)


# -- rendering --------------------------------------------------------------


def _idx(p: int) -> str:
    if p > len(FREE_INDICES):
        raise ValueError(f"index rendering supports at most {len(FREE_INDICES)} slots")
    return FREE_INDICES[p - 1]


def _sub(s: str, latex: bool) -> str:
    return f"_{{{s}}}" if latex or len(s) > 1 else f"_{s}"


def _sup(s: str, latex: bool) -> str:
    return f"^{{{s}}}" if latex or len(s) > 1 else f"^{s}"


def _nab(latex: bool) -> str:
    return "\\nabla" if latex else "∇"


def _symbol(f: TSym | RSym, contracted: str, latex: bool) -> str:
    if isinstance(f, TSym):
        *ders, a, b = f.args
        letter, lower = "T", _idx(a) + _idx(b)
    else:
        *ders, a, b = f.args
        letter, lower = "R", _idx(a) + _idx(b) + _idx(f.target)
    head = letter
    if ders:
        head = "(" + "".join(_nab(latex) + _sub(_idx(d), latex) for d in ders) + letter + ")"
    return head + _sub(lower, latex) + _sup(contracted, latex)


def _coef_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_term(word, latex: bool) -> str:
    symbols, chain = [], []
    fresh = iter(CONTRACTED_INDICES)
    for f in word:
        if isinstance(f, GenRef):
            chain.append(_nab(latex) + _sub(_idx(f.position), latex))
        else:
            c = next(fresh)
            symbols.append(_symbol(f, c, latex))
            chain.append(_nab(latex) + _sub(c, latex))
    return "".join(symbols) + "".join(chain)


def _has_derivatives(doc: IdentityDocument) -> bool:
    return any(isinstance(f, (TSym, RSym)) and len(f.args) > 2 for _, w in doc.terms for f in w)


CONVENTION_NOTE = ("derivative slots of T and R are listed first; reading them as iterated "
                   "covariant derivatives of torsion and curvature is a convention")


def render(doc: IdentityDocument, fmt: str = "index") -> str:
    if fmt == "sexp":
        return render_sexp(doc)
    if fmt not in ("index", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    latex = fmt == "latex"
    minus = "-" if latex else "−"
    out = []
    for k, (coef, word) in enumerate(doc.terms):
        body = _render_term(word, latex)
        mag = abs(coef)
        if mag != 1:
            body = _coef_str(mag) + (" " if latex else "") + body
        if k == 0:
            out.append(("-" if coef < 0 else "") + body)
        else:
            sign = minus if coef < 0 else "+"
            out.append(f" {sign} {body}" if latex else sign + body)
    text = "".join(out) + (" = 0" if latex else "=0")
    if _has_derivatives(doc):
        text = ("% " if latex else "# ") + CONVENTION_NOTE + "\n" + text
    return text


# -- s-expressions ----------------------------------------------------------


def _factor_sexp(f: SymbolicFactor) -> str:
    if isinstance(f, GenRef):
        return f"(g {f.position})"
    if isinstance(f, TSym):
        return "(t " + " ".join(map(str, f.args)) + ")"
    return "(r " + " ".join(map(str, f.args + (f.target,))) + ")"


def render_sexp(doc: IdentityDocument) -> str:
    terms = " ".join(
        f"(term {_coef_str(c)}" + "".join(" " + _factor_sexp(f) for f in w) + ")" for c, w in doc.terms)
    return f"(identity (n {doc.n}) (pos {doc.i}) {terms})"


def _sexp_tokens(text: str) -> list:
    stack: list[list] = [[]]
    for tok in re.findall(r"\(|\)|[^\s()]+", text):
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) < 2:
                raise ValueError("unbalanced ')' in s-expression")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if len(stack) != 1 or len(stack[0]) != 1:
        raise ValueError("malformed s-expression")
    return stack[0][0]


def parse_sexp(text: str) -> IdentityDocument:
    tree = _sexp_tokens(text)
    try:
        head, (n_tag, n), (p_tag, pos), *terms = tree
        if (head, n_tag, p_tag) != ("identity", "n", "pos"):
            raise ValueError
        parsed = []
        for term in terms:
            tag, coef, *factors = term
            if tag != "term":
                raise ValueError
            word = []
            for kind, *args in factors:
                nums = tuple(int(a) for a in args)
                if kind == "g" and len(nums) == 1:
                    word.append(GenRef(nums[0]))
                elif kind == "t":
                    word.append(TSym(nums))
                elif kind == "r":
                    word.append(RSym(nums[:-1], nums[-1]))
                else:
                    raise ValueError
            parsed.append((Fraction(coef), tuple(word)))
        return IdentityDocument(int(n), int(pos), tuple(parsed))
    except (ValueError, TypeError) as exc:
        raise ValueError(f"not an identity s-expression: {exc}") from None
