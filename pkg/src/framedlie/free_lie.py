"""The free framed Lie algebra on finitely many generators.

Basis monomials are trees of three kinds: generators, diamond products of two
basis monomials (the product is free, so any two monomials give an atom) and
Hall bracket trees built over the resulting graded alphabet.  Monomials are
interned, so equality is identity and hashing is cheap.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

GEN, DIAMOND, BRACKET = 0, 1, 2

_DEFAULT_NAMES = ("x", "y", "z", "w")


def default_name(index: int) -> str:
    if index < len(_DEFAULT_NAMES):
        return _DEFAULT_NAMES[index]
    return f"g{index}"


class Monomial:
    """A canonical basis element.  Build with :func:`gen`, :func:`diamond_mono`
    or through :func:`bracket`; the raw constructor does no validation."""

    __slots__ = ("kind", "left", "right", "index", "degree", "key", "_hash", "__weakref__")

    def __init__(self, kind: int, left: Monomial | None, right: Monomial | None, index: int):
        self.kind = kind
        self.left = left
        self.right = right
        self.index = index
        if kind == GEN:
            self.degree = 1
            self.key = (1, GEN, index)
        else:
            self.degree = left.degree + right.degree
            self.key = (self.degree, kind, left.key, right.key)
        self._hash = hash(self.key)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self.key < other.key

    def __le__(self, other: Monomial) -> bool:
        return self.key <= other.key

    def __gt__(self, other: Monomial) -> bool:
        return self.key > other.key

    def __ge__(self, other: Monomial) -> bool:
        return self.key >= other.key

    def __reduce__(self):
        if self.kind == GEN:
            return (gen, (self.index,))
        return (_make, (self.kind, self.left, self.right))

    @property
    def is_atom(self) -> bool:
        return self.kind != BRACKET

    def generators(self) -> Iterator[int]:
        if self.kind == GEN:
            yield self.index
        else:
            yield from self.left.generators()
            yield from self.right.generators()

    def to_str(self, names: Mapping[int, str] | None = None) -> str:
        if self.kind == GEN:
            if names is not None and self.index in names:
                return names[self.index]
            return default_name(self.index)
        a, b = self.left.to_str(names), self.right.to_str(names)
        if self.kind == DIAMOND:
            return f"d({a},{b})"
        return f"[{a},{b}]"

    def __repr__(self) -> str:
        return self.to_str()


_INTERN: dict[tuple, Monomial] = {}


def _make(kind: int, left: Monomial | None, right: Monomial | None, index: int = -1) -> Monomial:
    k = (kind, left, right, index)
    m = _INTERN.get(k)
    if m is None:
        m = _INTERN.setdefault(k, Monomial(kind, left, right, index))
    return m


def gen(index: int) -> Monomial:
    if index < 0:
        raise ValueError("generator index must be non-negative")
    return _make(GEN, None, None, index)


def diamond_mono(a: Monomial, b: Monomial) -> Monomial:
    return _make(DIAMOND, a, b)


def is_hall(m: Monomial) -> bool:
    """Check the Hall criterion recursively: for [a,b], a < b and, when
    b = [c,d], c <= a."""
    if m.kind == GEN:
        return True
    if m.kind == DIAMOND:
        return is_hall(m.left) and is_hall(m.right)
    a, b = m.left, m.right
    if not (a < b and is_hall(a) and is_hall(b)):
        return False
    return b.kind != BRACKET or b.left <= a


def monomial_order(a: Monomial, b: Monomial) -> str:
    """Return ``"less"``, ``"equal"`` or ``"greater"``."""
    if a.key < b.key:
        return "less"
    if a.key == b.key:
        return "equal"
    return "greater"


def scalar(c) -> int | Fraction:
    """Exact rational; integral values are kept as ``int`` for speed."""
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _add_into(acc: dict, other: Mapping, scale: Fraction | int = 1) -> None:
    get = acc.get
    if scale == 1:
        for k, c in other.items():
            v = get(k, 0) + c
            if v:
                acc[k] = v
            else:
                del acc[k]
        return
    for k, c in other.items():
        v = get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            del acc[k]


class LinComb:
    """Finite linear combination with exact rational coefficients.

    ``terms`` must not be mutated after construction.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: scalar(c) for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # terms already clean: exact scalars, no zeros
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return self._raw(acc)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms, -1)
        return self._raw(acc)

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        s = scalar(k)
        if not s:
            return self._raw({})
        return self._raw({k: s * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, 0)


class GElement(LinComb):
    """An element of the free framed Lie algebra."""

    __slots__ = ()

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms, key=lambda m: m.key)

    def __repr__(self) -> str:
        if not self.terms:
            return "GElement(0)"
        return "GElement(" + " + ".join(f"{c}*{m}" for m, c in sorted(self.terms.items(), key=lambda t: t[0].key)) + ")"


def g(m: Monomial, coef: Fraction | int = 1) -> GElement:
    return GElement._raw({m: scalar(coef)} if coef else {})


def generators(n: int) -> list[GElement]:
    return [g(gen(i)) for i in range(n)]


def diamond(a: GElement, b: GElement) -> GElement:
    """Bilinear free product; no rewriting happens."""
    acc: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = diamond_mono(ma, mb)
            v = acc.get(m, 0) + ca * cb
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
    return GElement._raw(acc)


@lru_cache(maxsize=None)
def bracket_monomials(a: Monomial, b: Monomial) -> dict:
    """Hall expansion of [a,b] for basis monomials a, b.  Returned dict is shared."""
    if a is b:
        return {}
    if b < a:
        return {m: -c for m, c in bracket_monomials(b, a).items()}
    if b.kind != BRACKET or b.left <= a:
        return {_make(BRACKET, a, b): 1}
    # a < b = [c,d] with a < c: [a,[c,d]] = [[a,c],d] + [c,[a,d]]
    c, d = b.left, b.right
    acc: dict = {}
    for m, coef in bracket_monomials(a, c).items():
        _add_into(acc, bracket_monomials(m, d), coef)
    for m, coef in bracket_monomials(a, d).items():
        _add_into(acc, bracket_monomials(c, m), coef)
    return acc


def bracket(a: GElement, b: GElement) -> GElement:
    acc: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            _add_into(acc, bracket_monomials(ma, mb), ca * cb)
    return GElement._raw(acc)


def g_degree(a: GElement) -> int | str:
    if not a.terms:
        raise ValueError("degree of the zero element is undefined")
    degrees = {m.degree for m in a.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return "inhomogeneous"


def normalize(a: GElement) -> GElement:
    """Rebuild ``a`` from its monomials by re-running bracket/diamond."""
    acc: dict = {}
    for m, c in a.terms.items():
        _add_into(acc, _renormalize(m).terms, c)
    return GElement._raw(acc)


def _renormalize(m: Monomial) -> GElement:
    if m.kind == GEN:
        return g(m)
    left, right = _renormalize(m.left), _renormalize(m.right)
    if m.kind == DIAMOND:
        return diamond(left, right)
    return bracket(left, right)


@lru_cache(maxsize=None)
def hall_basis(n_gens: int, degree: int) -> tuple[Monomial, ...]:
    """All basis monomials of the given degree over ``n_gens`` generators, sorted."""
    if degree == 1:
        return tuple(gen(i) for i in range(n_gens))
    out = []
    for d in range(1, degree):
        lefts, rights = hall_basis(n_gens, d), hall_basis(n_gens, degree - d)
        for a, b in product(lefts, rights):
            out.append(diamond_mono(a, b))
            if a < b and (b.kind != BRACKET or b.left <= a):
                out.append(_make(BRACKET, a, b))
    return tuple(sorted(out, key=lambda m: m.key))


def iter_basis(n_gens: int, max_degree: int) -> Iterable[Monomial]:
    for d in range(1, max_degree + 1):
        yield from hall_basis(n_gens, d)
