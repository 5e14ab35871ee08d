"""Exhaustive checks of the commutation theorem and its supporting identities.

Each check enumerates all inputs within a degree bound over a few generators
and compares two independently assembled sides exactly.  The helpers
``_lam`` (left multiplication plus nabla) and ``_eta`` mirror the machinery
used to prove the theorem; they are private to this module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .free_lie import GElement, Monomial, diamond, g, gen, hall_basis
from .maps import (
    K_inverse,
    K_map,
    e_map,
    kappa_apply,
    pbw_normal_form,
    r_apply,
    rho_apply,
    t_map,
    theorem_check,
)
from .tensor import (
    JElement,
    TElement,
    concat,
    coproduct_splits,
    from_g,
    j_embed,
    left_multiply,
    make_lambda,
    nabla,
    nabla_hom,
    nabla_on_j,
    t_word,
    triple,
    word_degree,
)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def gen_words(n_gens: int, max_len: int, min_len: int = 0) -> Iterator[tuple]:
    for k in range(min_len, max_len + 1):
        yield from (tuple(gen(i) for i in idx) for idx in product(range(n_gens), repeat=k))


def letters(n_gens: int, max_degree: int) -> list[Monomial]:
    return [m for d in range(1, max_degree + 1) for m in hall_basis(n_gens, d)]


def basis_words(n_gens: int, budget: int, max_letter: int = 1) -> Iterator[tuple]:
    """Words of total degree <= budget whose letters have degree <= max_letter."""
    yield ()
    for m in letters(n_gens, min(budget, max_letter)):
        for rest in basis_words(n_gens, budget - m.degree, max_letter):
            yield (m,) + rest


def basis_triples(n_gens: int, budget: int, max_letter: int = 1,
                  with_prefix: bool = True) -> Iterator[JElement]:
    """Triples (p, a, b) with a < b and total degree <= budget."""
    for a in letters(n_gens, min(budget - 1, max_letter)):
        for b in letters(n_gens, min(budget - a.degree, max_letter)):
            if not a < b:
                continue
            rest = budget - a.degree - b.degree
            for p in (basis_words(n_gens, rest, max_letter) if with_prefix else [()]):
                yield triple(p, a, b)


def triple_degree(q: JElement) -> int:
    (p, a, b), = q.terms
    return word_degree(p) + a.degree + b.degree


def operator_letters(n_gens: int, max_degree: int, max_letter: int = 1) -> list[Monomial]:
    """Letters for the derivation slot z: basis monomials of degree <= max(2, max_letter)."""
    return letters(n_gens, min(max_degree, max(2, max_letter)))


def _lam(z: GElement, u: TElement) -> TElement:
    return concat(from_g(z), u) + nabla(z, u)


def _lam_j(z: GElement, q: JElement) -> JElement:
    return left_multiply(from_g(z), q) + nabla_on_j(z, q)


def _eta(q: JElement, v: TElement) -> TElement:
    return concat(from_g(t_map(q)), v) + r_apply(q, v)


def _coproduct(u: TElement) -> dict:
    acc: dict = {}
    for w, c in u.terms.items():
        for left, right in coproduct_splits(w):
            k = (left, right)
            acc[k] = acc.get(k, 0) + c
    return {k: c for k, c in acc.items() if c}


def _pair_sum(*parts: dict) -> dict:
    acc: dict = {}
    for part in parts:
        for k, c in part.items():
            acc[k] = acc.get(k, 0) + c
    return {k: c for k, c in acc.items() if c}


def _tensor_right(a: dict, z: GElement, side: str) -> dict:
    """Apply lambda_z to one side of a T (x) T element given as a split dict."""
    out: dict = {}
    for (l, r), c in a.items():
        target = t_word(l if side == "left" else r)
        for w, cw in _lam(z, target).terms.items():
            k = (w, r) if side == "left" else (l, w)
            out[k] = out.get(k, 0) + c * cw
    return {k: c for k, c in out.items() if c}


def _cases_zqv(n_gens: int, max_degree: int, max_letter: int, with_v: bool = True):
    """(z, Q, v) with deg z + deg Q + deg v <= max_degree."""
    for zm in operator_letters(n_gens, max_degree - 2, max_letter):
        for q in basis_triples(n_gens, max_degree - zm.degree, max_letter):
            rest = max_degree - zm.degree - triple_degree(q)
            for v in (basis_words(n_gens, rest, max_letter) if with_v else [()]):
                yield g(zm), q, t_word(v)


def _record(res: CheckResult, ok: bool, desc) -> None:
    res.cases += 1
    if not ok:
        res.failures.append(desc)


def check_k_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """K(x u) = x K(u) - K(nabla_x u)."""
    res = CheckResult("K recursion")
    for xm in operator_letters(n_gens, max_degree, max_letter):
        x = g(xm)
        for w in basis_words(n_gens, max_degree - xm.degree, max_letter):
            u = t_word(w)
            lhs = K_map(concat(from_g(x), u))
            rhs = concat(from_g(x), K_map(u)) - K_map(nabla(x, u))
            _record(res, lhs == rhs, (xm, w))
    return res


def check_t_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """t(x Q) = x<>t(Q) - t(nabla_x Q)."""
    res = CheckResult("t recursion")
    for z, q, _ in _cases_zqv(n_gens, max_degree, max_letter, with_v=False):
        lhs = t_map(left_multiply(from_g(z), q))
        rhs = diamond(z, t_map(q)) - t_map(nabla_on_j(z, q))
        _record(res, lhs == rhs, (z, q))
    return res


def check_r_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """r(x Q + nabla_x Q) v = nabla_x(r(Q) v) - r(Q)(nabla_x v)."""
    res = CheckResult("r recursion")
    for z, q, v in _cases_zqv(n_gens, max_degree, max_letter):
        lhs = r_apply(_lam_j(z, q), v)
        rhs = nabla(z, r_apply(q, v)) - r_apply(q, nabla(z, v))
        _record(res, lhs == rhs, (z, q, v))
    return res


def check_e_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """e(x Q + nabla_x Q) = x e(Q) - e(Q) x."""
    res = CheckResult("e recursion")
    for z, q, _ in _cases_zqv(n_gens, max_degree, max_letter, with_v=False):
        eq = e_map(q)
        zt = from_g(z)
        _record(res, e_map(_lam_j(z, q)) == concat(zt, eq) - concat(eq, zt), (z, q))
    return res


def check_r_is_nabla_e(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """r = nabla o e, including [nabla_x, nabla_y] - nabla_[x,y] for empty prefixes."""
    res = CheckResult("r = nabla o e")
    for q in basis_triples(n_gens, max_degree, max_letter):
        for w in basis_words(n_gens, max_degree - triple_degree(q), max_letter):
            v = t_word(w)
            _record(res, r_apply(q, v) == nabla_hom(e_map(q), v), (q, w))
    return res


def check_pbw_kills_e(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    res = CheckResult("p o e = 0")
    for q in basis_triples(n_gens, max_degree, max_letter):
        _record(res, pbw_normal_form(e_map(q)).is_zero(), q)
    return res


def check_kappa_base(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """K(w v + rho(w) v) = kappa(w) v for w in Lambda."""
    res = CheckResult("kappa on Lambda")
    for q in basis_triples(n_gens, max_degree, max_letter, with_prefix=False):
        for w in basis_words(n_gens, max_degree - triple_degree(q), max_letter):
            v = t_word(w)
            lhs = K_map(concat(j_embed(q), v) + rho_apply(q, v))
            _record(res, lhs == kappa_apply(q, v), (q, w))
    return res


def check_rho_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """rho(z Q + nabla_z Q) v = z rho(Q) v + nabla_z(rho(Q) v) - rho(Q)(nabla_z v)."""
    res = CheckResult("rho recursion")
    for z, q, v in _cases_zqv(n_gens, max_degree, max_letter):
        rq = rho_apply(q, v)
        rhs = concat(from_g(z), rq) + nabla(z, rq) - rho_apply(q, nabla(z, v))
        _record(res, rho_apply(_lam_j(z, q), v) == rhs, (z, q, v))
    return res


def check_lambda_multiplication(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """L_{lambda_z u} = lambda_z L_u - L_u nabla_z, applied to v."""
    res = CheckResult("lambda left multiplication")
    for zm in operator_letters(n_gens, max_degree, max_letter):
        z = g(zm)
        budget = max_degree - zm.degree
        for wu in basis_words(n_gens, budget, max_letter):
            for wv in basis_words(n_gens, budget - word_degree(wu), max_letter):
                u, v = t_word(wu), t_word(wv)
                lhs = concat(_lam(z, u), v)
                rhs = _lam(z, concat(u, v)) - concat(u, nabla(z, v))
                _record(res, lhs == rhs, (zm, wu, wv))
    return res


def check_lambda_coproduct(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """Coproduct of lambda_z u = (lambda_z u_1) u_2 + u_1 (lambda_z u_2)."""
    res = CheckResult("lambda coproduct")
    for zm in operator_letters(n_gens, max_degree, max_letter):
        z = g(zm)
        for wu in basis_words(n_gens, max_degree - zm.degree, max_letter):
            cop = _coproduct(t_word(wu))
            lhs = _coproduct(_lam(z, t_word(wu)))
            rhs = _pair_sum(_tensor_right(cop, z, "left"), _tensor_right(cop, z, "right"))
            _record(res, lhs == rhs, (zm, wu))
    return res


def check_eta_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """eta(z Q + nabla_z Q) = [nabla_z, eta(Q)] with eta(Q) v = t(Q) v + r(Q) v."""
    res = CheckResult("eta recursion")
    for z, q, v in _cases_zqv(n_gens, max_degree, max_letter):
        rhs = nabla(z, _eta(q, v)) - _eta(q, nabla(z, v))
        _record(res, _eta(_lam_j(z, q), v) == rhs, (z, q, v))
    return res


def check_kappa_recursion(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """kappa(z Q + nabla_z Q) v = z kappa(Q) v - kappa(Q)(nabla_z v)."""
    res = CheckResult("kappa recursion")
    for z, q, v in _cases_zqv(n_gens, max_degree, max_letter):
        rhs = concat(from_g(z), kappa_apply(q, v)) - kappa_apply(q, nabla(z, v))
        _record(res, kappa_apply(_lam_j(z, q), v) == rhs, (z, q, v))
    return res


def check_kappa_identity(n_gens: int, max_degree: int, max_letter: int = 1) -> CheckResult:
    """K(Q v + rho(Q) v) = kappa(Q) v."""
    res = CheckResult("K = kappa on J")
    for q in basis_triples(n_gens, max_degree, max_letter):
        for w in basis_words(n_gens, max_degree - triple_degree(q), max_letter):
            v = t_word(w)
            lhs = K_map(concat(j_embed(q), v) + rho_apply(q, v))
            _record(res, lhs == kappa_apply(q, v), (q, w))
    return res


def check_k_inverse(n_gens: int, max_len: int) -> CheckResult:
    res = CheckResult("K inverse")
    for w in gen_words(n_gens, max_len):
        u = t_word(w)
        _record(res, K_inverse(K_map(u)) == u and K_map(K_inverse(u)) == u, w)
    return res


LEMMA_CHECKS: dict[str, Callable[[int, int], CheckResult]] = {
    "k_recursion": check_k_recursion,
    "t_recursion": check_t_recursion,
    "r_recursion": check_r_recursion,
    "e_recursion": check_e_recursion,
    "r_is_nabla_e": check_r_is_nabla_e,
    "pbw_kills_e": check_pbw_kills_e,
    "kappa_base": check_kappa_base,
    "rho_recursion": check_rho_recursion,
    "lambda_multiplication": check_lambda_multiplication,
    "lambda_coproduct": check_lambda_coproduct,
    "eta_recursion": check_eta_recursion,
    "kappa_recursion": check_kappa_recursion,
    "kappa_identity": check_kappa_identity,
}


def theorem_sweep(n_gens: int, max_u: int, max_v: int, kappa: bool = False) -> list[CheckResult]:
    """The theorem (and optionally the exact kappa equality) over all generator
    words u, v within the bounds and all ordered generator pairs.  The length
    drop of rho is checked on every case as well."""
    thm = CheckResult("commutation theorem")
    lem = CheckResult("K = kappa on J (sweep)")
    drop = CheckResult("rho lowers tensor length")
    gens = [g(gen(i)) for i in range(n_gens)]
    for wu in gen_words(n_gens, max_u):
        u = t_word(wu)
        for a, b in product(range(n_gens), repeat=2):
            omega = make_lambda(gens[a], gens[b])
            q = left_multiply(u, omega)
            for wv in gen_words(n_gens, max_v):
                v = t_word(wv)
                result = theorem_check(u, omega, v)
                _record(thm, result.is_zero, (wu, a, b, wv))
                _record(drop, rho_apply(q, v).max_length() < len(wu) + 2 + len(wv), (wu, a, b, wv))
                if kappa:
                    _record(lem, result.lhs == kappa_apply(q, v), (wu, a, b, wv))
    return [thm, lem, drop] if kappa else [thm, drop]


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  {'cases':>7}  status"]
    for r in results:
        status = "pass" if r.passed else f"FAIL ({len(r.failures)})"
        lines.append(f"{r.name:<{width}}  {r.cases:>7}  {status}")
    return "\n".join(lines)


@dataclass
class OracleCase:
    seed: int
    assignment: str
    u: tuple
    pair: tuple
    v: tuple
    theorem: bool
    matches_symbolic: bool

    @property
    def passed(self) -> bool:
        return self.theorem and self.matches_symbolic


def oracle_cases(base, seed: int, n_gens: int = 3, max_len: int = 2,
                 modes: tuple = ("basis", "random"), randomize_diamond: bool = True) -> list[OracleCase]:
    """One random (u, pair, v) per combination of lengths <= max_len, checked in
    the concrete algebra and against the evaluated symbolic left-hand side."""
    import random as _random

    from .oracle import ConcreteAlgebra, Evaluator, basis_assignment, oracle_lhs, random_assignment, random_diamond

    tbl = random_diamond(base, seed) if randomize_diamond else base
    alg = ConcreteAlgebra(tbl)
    rng = _random.Random(seed)
    gens = [g(gen(i)) for i in range(n_gens)]
    out = []
    for mode in modes:
        asg = basis_assignment(tbl, n_gens) if mode == "basis" else random_assignment(tbl, n_gens, seed)
        ev = Evaluator(alg, asg)
        for lu, lv in product(range(max_len + 1), repeat=2):
            u = tuple(rng.randrange(n_gens) for _ in range(lu))
            v = tuple(rng.randrange(n_gens) for _ in range(lv))
            a, b = rng.sample(range(n_gens), 2)
            concrete = oracle_lhs(alg, asg, u, (a, b), v)
            symbolic = theorem_check(t_word(gen(i) for i in u), make_lambda(gens[a], gens[b]),
                                     t_word(gen(i) for i in v)).lhs
            out.append(OracleCase(seed, mode, u, (a, b), v, not alg.pbw(concrete),
                                  ev.tensor(symbolic) == concrete))
    return out
