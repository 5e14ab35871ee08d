"""Finite-dimensional framed Lie algebras from structure constants.

This is an independent model for the symbolic kernel: the same maps are
recomputed with explicit coordinates over a fixed basis e_0 < ... < e_{d-1},
and the projection to U is done by straightening index words with the
bracket constants.  Everything is exact (``Fraction`` entries in numpy object
arrays).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .free_lie import BRACKET, DIAMOND, GElement, Monomial
from .tensor import TElement

ConcreteTensor = dict  # index word (tuple[int, ...]) -> Fraction


def _zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def _clean(t: Mapping) -> ConcreteTensor:
    return {k: v for k, v in t.items() if v}


def _acc(out: dict, key, value) -> None:
    if not value:
        return
    v = out.get(key, 0) + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass(eq=False)
class StructureTable:
    """``bracket[i, j, k]`` is the e_k coefficient of [e_i, e_j];
    ``diamond[i, j, k]`` likewise for e_i <> e_j.

    Construction checks antisymmetry and the Jacobi identity unless
    ``check=False``.
    """

    dim: int
    bracket: np.ndarray
    diamond: np.ndarray
    name: str = ""
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        d = self.dim
        if d <= 0:
            raise ValueError("dim must be positive")
        self.bracket = np.asarray(self.bracket, dtype=object)
        self.diamond = np.asarray(self.diamond, dtype=object)
        for arr in (self.bracket, self.diamond):
            if arr.shape != (d, d, d):
                raise ValueError(f"structure constants must have shape {(d, d, d)}, got {arr.shape}")
            for idx in np.ndindex(arr.shape):
                arr[idx] = Fraction(arr[idx])
        if self.check and not check_jacobi(self):
            raise ValueError(f"bracket of table {self.name or '<unnamed>'} is not a Lie bracket")

    def same_as(self, other: StructureTable) -> bool:
        return (self.dim == other.dim
                and bool(np.all(self.bracket == other.bracket))
                and bool(np.all(self.diamond == other.diamond)))

    def basis(self, i: int) -> np.ndarray:
        v = _zeros(self.dim)
        v[i] = Fraction(1)
        return v


def table_from_entries(dim: int, bracket: Iterable = (), diamond: Iterable = (),
                       name: str = "", check: bool = True) -> StructureTable:
    """Build a table from ``(i, j, k, coef)`` entries; bracket entries need i < j."""
    b, dm = _zeros(dim, dim, dim), _zeros(dim, dim, dim)
    for i, j, k, c in bracket:
        if not i < j:
            raise ValueError(f"bracket entry ({i}, {j}, {k}) must have i < j")
        b[i, j, k] += Fraction(c)
        b[j, i, k] -= Fraction(c)
    for i, j, k, c in diamond:
        dm[i, j, k] += Fraction(c)
    return StructureTable(dim, b, dm, name, check)


def check_jacobi(tbl: StructureTable) -> bool:
    c = tbl.bracket
    d = tbl.dim
    if any(c[i, j, k] != -c[j, i, k] for i, j, k in product(range(d), repeat=3)):
        return False
    # [e_i,[e_j,e_k]] + cyclic, coordinates m
    inner = np.einsum("jkl,ilm->ijkm", c, c)
    jac = inner + inner.transpose(1, 2, 0, 3) + inner.transpose(2, 0, 1, 3)
    return not any(v != 0 for v in jac.flat)


def abelian(d: int) -> StructureTable:
    return table_from_entries(d, name=f"abelian{d}")


def heisenberg3() -> StructureTable:
    return table_from_entries(3, [(0, 1, 2, 1)], name="heisenberg3")


def sl2() -> StructureTable:
    # e_0 = h, e_1 = e, e_2 = f
    return table_from_entries(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], name="sl2")


def builtin_tables() -> dict[str, StructureTable]:
    tables = {f"abelian{d}": abelian(d) for d in range(1, 5)}
    tables["heisenberg3"] = heisenberg3()
    tables["sl2"] = sl2()
    return tables


def random_diamond(tbl: StructureTable, seed: int) -> StructureTable:
    rng = np.random.default_rng(seed)
    ints = rng.integers(-9, 10, size=(tbl.dim,) * 3)
    dm = np.vectorize(Fraction, otypes=[object])(ints)
    name = f"{tbl.name}+diamond{seed}" if tbl.name else f"diamond{seed}"
    return StructureTable(tbl.dim, tbl.bracket.copy(), dm, name, check=False)


# -- JSON file format -------------------------------------------------------


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def table_to_json(tbl: StructureTable) -> str:
    d = tbl.dim
    br = [[i, j, k, _frac_str(tbl.bracket[i, j, k])]
          for i, j in combinations(range(d), 2) for k in range(d) if tbl.bracket[i, j, k]]
    dm = [[i, j, k, _frac_str(tbl.diamond[i, j, k])]
          for i, j, k in product(range(d), repeat=3) if tbl.diamond[i, j, k]]
    # one entry per line keeps the files diffable
    def block(entries):
        if not entries:
            return "[]"
        return "[\n" + ",\n".join("    " + json.dumps(e) for e in entries) + "\n  ]"

    return f'{{\n  "dim": {d},\n  "bracket": {block(br)},\n  "diamond": {block(dm)}\n}}'


def table_from_json(text: str, name: str = "") -> StructureTable:
    data = json.loads(text)
    try:
        dim = data["dim"]
        entries = {key: [(int(i), int(j), int(k), Fraction(str(c))) for i, j, k, c in data.get(key, [])]
                   for key in ("bracket", "diamond")}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed structure table: {exc}") from None
    if not isinstance(dim, int) or dim <= 0:
        raise ValueError("malformed structure table: dim must be a positive integer")
    for i, j, k, _ in entries["bracket"] + entries["diamond"]:
        if not all(0 <= n < dim for n in (i, j, k)):
            raise ValueError(f"malformed structure table: index out of range in ({i}, {j}, {k})")
    return table_from_entries(dim, entries["bracket"], entries["diamond"], name=name)


def load_table(path: str | Path) -> StructureTable:
    path = Path(path)
    return table_from_json(path.read_text(encoding="utf-8"), name=path.stem)


def save_table(tbl: StructureTable, path: str | Path) -> None:
    Path(path).write_text(table_to_json(tbl) + "\n", encoding="utf-8")


# -- the concrete algebra ---------------------------------------------------


class ConcreteAlgebra:
    """Concrete versions of nabla, K, t, r, e, rho, kappa and the PBW
    projection for one structure table.  Results are cached per instance."""

    def __init__(self, tbl: StructureTable):
        if not check_jacobi(tbl):
            raise ValueError(f"table {tbl.name or '<unnamed>'} violates the Jacobi identity")
        self.tbl = tbl
        self.dim = tbl.dim
        d = tbl.dim
        self._br = {(i, j): {k: tbl.bracket[i, j, k] for k in range(d) if tbl.bracket[i, j, k]}
                    for i in range(d) for j in range(d)}
        self._dm = {(i, j): {k: tbl.diamond[i, j, k] for k in range(d) if tbl.diamond[i, j, k]}
                    for i in range(d) for j in range(d)}
        self._k = lru_cache(maxsize=None)(self._k_word)
        self._t = lru_cache(maxsize=None)(self._t_triple)
        self._r = lru_cache(maxsize=None)(self._r_letter)
        self._e = lru_cache(maxsize=None)(self._e_triple)
        self._p = lru_cache(maxsize=None)(self._pbw_word)

    # vectors are sparse dicts index -> Fraction

    def vec_bracket(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self._br[i, j].items():
                    _acc(out, k, ca * cb * c)
        return out

    def vec_diamond(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self._dm[i, j].items():
                    _acc(out, k, ca * cb * c)
        return out

    def tensor_of(self, vectors: Sequence[Mapping]) -> ConcreteTensor:
        out: dict = {(): Fraction(1)}
        for vec in vectors:
            nxt: dict = {}
            for w, c in out.items():
                for i, ci in vec.items():
                    _acc(nxt, w + (i,), c * ci)
            out = nxt
        return out

    def nabla_word(self, a: int, w: tuple) -> dict:
        out: dict = {}
        for pos, letter in enumerate(w):
            for k, c in self._dm[a, letter].items():
                _acc(out, w[:pos] + (k,) + w[pos + 1:], c)
        return out

    def nabla(self, x: Mapping, u: Mapping) -> ConcreteTensor:
        out: dict = {}
        for a, ca in x.items():
            for w, cw in u.items():
                for nw, c in self.nabla_word(a, w).items():
                    _acc(out, nw, ca * cw * c)
        return out

    def _k_word(self, w: tuple) -> dict:
        if len(w) <= 1:
            return {w: Fraction(1)}
        a, rest = w[0], w[1:]
        out: dict = {}
        for rw, c in self._k(rest).items():
            _acc(out, (a,) + rw, c)
        for nw, c in self.nabla_word(a, rest).items():
            for kw, ck in self._k(nw).items():
                _acc(out, kw, -c * ck)
        return out

    def K(self, u: Mapping) -> ConcreteTensor:
        """K on a sparse tensor.  Dense inputs go through the factorized
        recursion K(sum_a e_a u_a) = sum_a e_a K(u_a) - K(sum_a nabla_a u_a)."""
        out: dict = {}
        by_len: dict[int, dict] = {}
        for w, c in u.items():
            by_len.setdefault(len(w), {})[w] = c
        for n, part in by_len.items():
            if n <= 2 or len(part) * 4 < self.dim ** n:
                for w, c in part.items():
                    for kw, ck in self._k(w).items():
                        _acc(out, kw, c * ck)
            else:
                arr = _zeros(*(self.dim,) * n)
                for w, c in part.items():
                    arr[w] = c
                for m, res in self._k_dense(arr).items():
                    for idx in zip(*np.nonzero(res)):
                        _acc(out, tuple(int(i) for i in idx), res[idx])
        return out

    def _nabla_contract(self, u: np.ndarray) -> np.ndarray:
        # sum_a nabla_{e_a} u[a, ...]
        n = u.ndim
        out = None
        for p in range(1, n):
            part = np.tensordot(self.tbl.diamond, u, axes=([0, 1], [0, p]))
            part = np.moveaxis(part, 0, p - 1)
            out = part if out is None else out + part
        return out

    def _k_dense(self, u: np.ndarray) -> dict[int, np.ndarray]:
        n = u.ndim
        if n <= 1:
            return {n: u}
        res: dict[int, np.ndarray] = {}
        heads = [self._k_dense(u[a]) for a in range(self.dim)]
        for m in heads[0]:
            res[m + 1] = np.stack([h[m] for h in heads])
        for m, arr in self._k_dense(self._nabla_contract(u)).items():
            res[m] = res[m] - arr if m in res else -arr
        return res

    # J elements: (prefix, i, j) with i < j -> coef

    def lam(self, x: Mapping, y: Mapping, prefix: Mapping | None = None) -> dict:
        """(prefix) (x) (x (x) y - y (x) x) in triple form."""
        prefix = {(): Fraction(1)} if prefix is None else prefix
        out: dict = {}
        for i, ci in x.items():
            for j, cj in y.items():
                if i == j:
                    continue
                lo, hi, s = (i, j, 1) if i < j else (j, i, -1)
                for p, cp in prefix.items():
                    _acc(out, (p, lo, hi), s * ci * cj * cp)
        return out

    def _nabla_triple(self, a: int, p: tuple, i: int, j: int) -> dict:
        out: dict = {}
        for np_, c in self.nabla_word(a, p).items():
            _acc(out, (np_, i, j), c)
        for k, c in self._dm[a, i].items():
            if k != j:
                lo, hi, s = (k, j, 1) if k < j else (j, k, -1)
                _acc(out, (p, lo, hi), s * c)
        for k, c in self._dm[a, j].items():
            if k != i:
                lo, hi, s = (i, k, 1) if i < k else (k, i, -1)
                _acc(out, (p, lo, hi), s * c)
        return out

    def _t_triple(self, p: tuple, i: int, j: int) -> dict:
        if not p:
            out = dict(self._dm[i, j])
            for k, c in self._dm[j, i].items():
                _acc(out, k, -c)
            for k, c in self._br[i, j].items():
                _acc(out, k, -c)
            return out
        a, rest = p[0], p[1:]
        out = self.vec_diamond({a: Fraction(1)}, self._t(rest, i, j))
        for key, c in self._nabla_triple(a, rest, i, j).items():
            for k, ck in self._t(*key).items():
                _acc(out, k, -c * ck)
        return out

    def t(self, q: Mapping) -> dict:
        out: dict = {}
        for key, c in q.items():
            for k, ck in self._t(*key).items():
                _acc(out, k, c * ck)
        return out

    def _r_letter(self, p: tuple, i: int, j: int, m: int) -> dict:
        one = Fraction(1)
        if not p:
            ei, ej, em = {i: one}, {j: one}, {m: one}
            out = self.vec_diamond(ei, self.vec_diamond(ej, em))
            for k, c in self.vec_diamond(ej, self.vec_diamond(ei, em)).items():
                _acc(out, k, -c)
            for k, c in self.vec_diamond(self._br[i, j], em).items():
                _acc(out, k, -c)
            return out
        a, rest = p[0], p[1:]
        out = self.vec_diamond({a: one}, self._r(rest, i, j, m))
        for n, cn in self._dm[a, m].items():
            for k, c in self._r(rest, i, j, n).items():
                _acc(out, k, -cn * c)
        for key, c in self._nabla_triple(a, rest, i, j).items():
            for k, ck in self._r(*key, m).items():
                _acc(out, k, -c * ck)
        return out

    def r(self, q: Mapping, v: Mapping) -> ConcreteTensor:
        out: dict = {}
        for key, cq in q.items():
            for w, cw in v.items():
                for pos, letter in enumerate(w):
                    for k, c in self._r(*key, letter).items():
                        _acc(out, w[:pos] + (k,) + w[pos + 1:], cq * cw * c)
        return out

    def _e_triple(self, p: tuple, i: int, j: int) -> dict:
        if not p:
            out = {(i, j): Fraction(1), (j, i): Fraction(-1)}
            for k, c in self._br[i, j].items():
                _acc(out, (k,), -c)
            return out
        a, rest = p[0], p[1:]
        out: dict = {}
        for w, c in self._e(rest, i, j).items():
            _acc(out, (a,) + w, c)
            _acc(out, w + (a,), -c)
        for key, c in self._nabla_triple(a, rest, i, j).items():
            for w, cw in self._e(*key).items():
                _acc(out, w, -c * cw)
        return out

    def e(self, q: Mapping) -> ConcreteTensor:
        out: dict = {}
        for key, c in q.items():
            for w, cw in self._e(*key).items():
                _acc(out, w, c * cw)
        return out

    @staticmethod
    def _splits(w: tuple):
        n = len(w)
        for mask in range(1 << n):
            yield (tuple(w[i] for i in range(n) if not mask >> i & 1),
                   tuple(w[i] for i in range(n) if mask >> i & 1))

    def rho(self, q: Mapping, v: Mapping) -> ConcreteTensor:
        out: dict = {}
        for (p, i, j), cq in q.items():
            for u1, u2 in self._splits(p):
                for k, ct in self._t(u2, i, j).items():
                    for w, cw in v.items():
                        _acc(out, u1 + (k,) + w, cq * ct * cw)
                for w, c in self.r({(u2, i, j): Fraction(1)}, v).items():
                    _acc(out, u1 + w, cq * c)
        return out

    def kappa(self, q: Mapping, v: Mapping) -> ConcreteTensor:
        out: dict = {}
        for (p, i, j), cq in q.items():
            for u1, u2 in self._splits(p):
                e_part = self._e(u1, i, j)
                for w, cw in v.items():
                    for kw, ck in self._k(u2 + w).items():
                        for ew, ce in e_part.items():
                            _acc(out, ew + kw, cq * cw * ck * ce)
        return out

    def j_embed(self, q: Mapping) -> ConcreteTensor:
        out: dict = {}
        for (p, i, j), c in q.items():
            _acc(out, p + (i, j), c)
            _acc(out, p + (j, i), -c)
        return out

    def _pbw_word(self, w: tuple) -> dict:
        for pos in range(len(w) - 1):
            a, b = w[pos], w[pos + 1]
            if a > b:
                head, tail = w[:pos], w[pos + 2:]
                out = dict(self._p(head + (b, a) + tail))
                for k, c in self._br[a, b].items():
                    for nw, cn in self._p(head + (k,) + tail).items():
                        _acc(out, nw, c * cn)
                return out
        return {w: Fraction(1)}

    def pbw(self, u: Mapping) -> ConcreteTensor:
        out: dict = {}
        for w, c in u.items():
            for nw, cn in self._p(w).items():
                _acc(out, nw, c * cn)
        return out

    def theorem_lhs(self, u: Mapping, x: Mapping, y: Mapping, v: Mapping) -> ConcreteTensor:
        """K(u w v + rho(u w) v) with w = x (x) y - y (x) x."""
        q = self.lam(x, y, prefix=u)
        body = {}
        for w, c in self.j_embed(q).items():
            for wv, cv in v.items():
                _acc(body, w + wv, c * cv)
        for w, c in self.rho(q, v).items():
            _acc(body, w, c)
        return self.K(body)


# -- evaluation of free elements --------------------------------------------


Assignment = Mapping[int, Sequence]  # generator index -> coordinate vector


def basis_assignment(tbl: StructureTable, n_gens: int) -> dict[int, list[Fraction]]:
    """Generator i goes to e_{i mod dim}."""
    return {i: [Fraction(int(k == i % tbl.dim)) for k in range(tbl.dim)] for i in range(n_gens)}


def random_assignment(tbl: StructureTable, n_gens: int, seed: int) -> dict[int, list[Fraction]]:
    rng = np.random.default_rng(seed)
    nums = rng.integers(-5, 6, size=(n_gens, tbl.dim))
    dens = rng.integers(1, 4, size=(n_gens, tbl.dim))
    return {i: [Fraction(int(nums[i, k]), int(dens[i, k])) for k in range(tbl.dim)] for i in range(n_gens)}


class Evaluator:
    """The framed Lie homomorphism from the free algebra fixed by an assignment."""

    def __init__(self, alg: ConcreteAlgebra | StructureTable, asg: Assignment):
        self.alg = alg if isinstance(alg, ConcreteAlgebra) else ConcreteAlgebra(alg)
        dim = self.alg.dim
        self.asg = {}
        for i, vec in asg.items():
            if len(vec) != dim:
                raise ValueError(f"assignment of generator {i} has length {len(vec)}, expected {dim}")
            self.asg[i] = {k: Fraction(c) for k, c in enumerate(vec) if c}
        self._cache: dict = {}

    def monomial(self, m: Monomial) -> dict:
        got = self._cache.get(m)
        if got is not None:
            return got
        if m.kind == DIAMOND:
            val = self.alg.vec_diamond(self.monomial(m.left), self.monomial(m.right))
        elif m.kind == BRACKET:
            val = self.alg.vec_bracket(self.monomial(m.left), self.monomial(m.right))
        else:
            if m.index not in self.asg:
                raise KeyError(f"generator {m.to_str()} (index {m.index}) is not assigned")
            val = self.asg[m.index]
        self._cache[m] = val
        return val

    def g(self, a: GElement) -> dict:
        out: dict = {}
        for m, c in a.terms.items():
            for k, ck in self.monomial(m).items():
                _acc(out, k, c * ck)
        return out

    def tensor(self, u: TElement) -> ConcreteTensor:
        out: dict = {}
        for w, c in u.terms.items():
            for iw, ci in self.alg.tensor_of([self.monomial(m) for m in w]).items():
                _acc(out, iw, c * ci)
        return out

    def j(self, q) -> dict:
        """Evaluate a JElement into concrete triple form."""
        out: dict = {}
        for (p, x, y), c in q.terms.items():
            pre = self.alg.tensor_of([self.monomial(m) for m in p])
            for key, ck in self.alg.lam(self.monomial(x), self.monomial(y), prefix=pre).items():
                _acc(out, key, c * ck)
        return out


def _dense(vec: Mapping, dim: int) -> np.ndarray:
    out = _zeros(dim)
    for k, c in vec.items():
        out[k] = c
    return out


def eval_g(a: GElement, tbl: StructureTable, asg: Assignment) -> np.ndarray:
    return _dense(Evaluator(tbl, asg).g(a), tbl.dim)


def eval_tensor(u: TElement, tbl: StructureTable, asg: Assignment) -> ConcreteTensor:
    return Evaluator(tbl, asg).tensor(u)


def oracle_lhs(alg: ConcreteAlgebra, asg: Assignment, u_word: Sequence[int],
               pair: tuple[int, int], v_word: Sequence[int]) -> ConcreteTensor:
    """Concrete Theorem left-hand side for generator words u, v and pair (x, y)."""
    vecs = {i: {k: Fraction(c) for k, c in enumerate(vec) if c} for i, vec in asg.items()}
    missing = [i for i in (*u_word, *pair, *v_word) if i not in vecs]
    if missing:
        raise KeyError(f"generator index {missing[0]} is not assigned")
    u = alg.tensor_of([vecs[i] for i in u_word])
    v = alg.tensor_of([vecs[i] for i in v_word])
    return alg.theorem_lhs(u, vecs[pair[0]], vecs[pair[1]], v)


def oracle_theorem(tbl: StructureTable | ConcreteAlgebra, asg: Assignment, u_word: Sequence[int],
                   pair: tuple[int, int], v_word: Sequence[int]) -> bool:
    alg = tbl if isinstance(tbl, ConcreteAlgebra) else ConcreteAlgebra(tbl)
    return not alg.pbw(oracle_lhs(alg, asg, u_word, pair, v_word))
