from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import X, Y, Z, g_sums, letters, words
from framedlie.free_lie import bracket, diamond, gen
from framedlie.maps import K_map, e_map, kappa_apply, pbw_normal_form, r_apply, rho_apply, t_map
from framedlie.oracle import (
    ConcreteAlgebra,
    Evaluator,
    abelian,
    basis_assignment,
    builtin_tables,
    check_jacobi,
    eval_g,
    eval_tensor,
    heisenberg3,
    load_table,
    oracle_theorem,
    random_assignment,
    random_diamond,
    save_table,
    sl2,
    table_from_entries,
    table_from_json,
    table_to_json,
)
from framedlie.tensor import concat, nabla, t_word, triple, unit

x, y, z = gen(0), gen(1), gen(2)


def _brute_jacobi(tbl) -> bool:
    d = tbl.dim
    c = tbl.bracket

    def br(u, v):
        return [sum(u[i] * v[j] * c[i, j, k] for i in range(d) for j in range(d)) for k in range(d)]

    basis = [[Fraction(int(i == k)) for k in range(d)] for i in range(d)]
    for a, b, e in product(basis, repeat=3):
        terms = [br(a, br(b, e)), br(b, br(e, a)), br(e, br(a, b))]
        if any(sum(t[k] for t in terms) for k in range(d)):
            return False
    return True


def test_jacobi_examples():
    assert check_jacobi(abelian(3))
    assert check_jacobi(sl2())
    bad = table_from_entries(3, [(0, 1, 0, 1), (0, 2, 2, 1)], check=False)
    assert check_jacobi(bad) == _brute_jacobi(bad) is False
    with pytest.raises(ValueError):
        table_from_entries(3, [(0, 1, 0, 1), (0, 2, 2, 1)])


def test_sl2_relations():
    tbl = sl2()
    assert tbl.dim == 3
    h, e, f = (tbl.basis(i) for i in range(3))
    assert tbl.bracket[0, 1, 1] == 2 and tbl.bracket[0, 2, 2] == -2 and tbl.bracket[1, 2, 0] == 1
    assert check_jacobi(tbl) == _brute_jacobi(tbl)


def test_builtin_tables():
    tables = builtin_tables()
    assert {"abelian4", "heisenberg3", "sl2"} <= set(tables)
    assert check_jacobi(heisenberg3())
    assert not any(tables["abelian4"].bracket.flat)
    assert all(not any(t.diamond.flat) for t in tables.values())


@pytest.mark.parametrize("seed", [0, 1, 42])
def test_random_diamond(seed):
    base = sl2()
    a, b = random_diamond(base, seed), random_diamond(base, seed)
    assert a.same_as(b)
    assert not a.same_as(random_diamond(base, seed + 1))
    assert check_jacobi(a)
    assert np.all(a.bracket == base.bracket)
    assert all(v.denominator == 1 and -9 <= v <= 9 for v in a.diamond.flat)


def test_eval_examples():
    tbl = sl2()
    asg = basis_assignment(tbl, 3)
    assert list(eval_g(X, tbl, asg)) == [1, 0, 0]
    assert not any(eval_g(diamond(X, Y), tbl, asg))
    assert eval_tensor(unit(), tbl, asg) == {(): 1}
    assert eval_tensor(t_word((x, y)), tbl, asg) == {(0, 1): 1}


def test_unassigned_generator_is_named():
    tbl = sl2()
    with pytest.raises(KeyError, match="z"):
        eval_g(Z, tbl, {0: [1, 0, 0]})


@pytest.fixture(scope="module")
def framed():
    tbl = random_diamond(sl2(), 7)
    alg = ConcreteAlgebra(tbl)
    return alg, Evaluator(alg, random_assignment(tbl, 3, 7))


@given(g_sums(), g_sums())
def test_eval_is_a_homomorphism(a, b):
    tbl = random_diamond(sl2(), 3)
    alg = ConcreteAlgebra(tbl)
    ev = Evaluator(alg, random_assignment(tbl, 3, 3))
    assert ev.g(bracket(a, b)) == alg.vec_bracket(ev.g(a), ev.g(b))
    assert ev.g(diamond(a, b)) == alg.vec_diamond(ev.g(a), ev.g(b))


@given(words(max_len=2), words(max_len=2), g_sums(max_depth=1))
def test_eval_commutes_with_tensor_ops(framed, u, v, a):
    alg, ev = framed
    tu, tv = t_word(u), t_word(v)
    prod = {}
    for wu, cu in ev.tensor(tu).items():
        for wv, cv in ev.tensor(tv).items():
            prod[wu + wv] = prod.get(wu + wv, 0) + cu * cv
    assert ev.tensor(concat(tu, tv)) == {k: c for k, c in prod.items() if c}
    assert ev.tensor(nabla(a, tu)) == alg.nabla(ev.g(a), ev.tensor(tu))
    assert ev.tensor(K_map(tu)) == alg.K(ev.tensor(tu))


@given(words(max_len=2), letters(max_degree=1), letters(max_degree=1), words(max_len=2))
def test_eval_commutes_with_maps_on_j(framed, p, a, b, v):
    alg, ev = framed
    q, tv = triple(p, a, b), t_word(v)
    cq, cv = ev.j(q), ev.tensor(tv)
    assert ev.g(t_map(q)) == alg.t(cq)
    assert ev.tensor(r_apply(q, tv)) == alg.r(cq, cv)
    assert ev.tensor(e_map(q)) == alg.e(cq)
    assert ev.tensor(rho_apply(q, tv)) == alg.rho(cq, cv)
    assert ev.tensor(kappa_apply(q, tv)) == alg.kappa(cq, cv)


@given(words(max_len=3, max_degree=2))
def test_eval_commutes_with_pbw(framed, w):
    alg, ev = framed
    u = t_word(w)
    assert alg.pbw(ev.tensor(pbw_normal_form(u).value)) == alg.pbw(ev.tensor(u))


@given(words(max_len=2), letters(max_degree=1), letters(max_degree=1), words(max_len=1))
def test_lemmas_hold_concretely(framed, p, a, b, v):
    alg, ev = framed
    cq, cv = ev.j(triple(p, a, b)), ev.tensor(t_word(v))
    assert not alg.pbw(alg.e(cq))
    body = {}
    for wj, cj in alg.j_embed(cq).items():
        for wv, c2 in cv.items():
            body[wj + wv] = body.get(wj + wv, 0) + cj * c2
    for wr, cr in alg.rho(cq, cv).items():
        body[wr] = body.get(wr, 0) + cr
    assert alg.K({k: c for k, c in body.items() if c}) == alg.kappa(cq, cv)


def test_oracle_examples():
    ab = abelian(3)
    assert oracle_theorem(ab, basis_assignment(ab, 3), (0,), (1, 2), (0, 2))
    tbl = random_diamond(sl2(), 42)
    assert oracle_theorem(tbl, basis_assignment(tbl, 3), (), (0, 1), (2,))


@given(st.integers(0, 10_000))
def test_oracle_random_cases(seed):
    tbl = random_diamond(sl2(), seed)
    asg = random_assignment(tbl, 3, seed)
    assert oracle_theorem(tbl, asg, (seed % 3,), (0, 2), (1,))


def test_oracle_rejects_non_lie_tables():
    bad = table_from_entries(3, [(0, 1, 0, 1), (0, 2, 2, 1)], check=False)
    with pytest.raises(ValueError):
        oracle_theorem(bad, basis_assignment(bad, 3), (), (0, 1), ())


def test_json_roundtrip(tmp_path):
    tbl = random_diamond(heisenberg3(), 5)
    path = tmp_path / "t.json"
    save_table(tbl, path)
    back = load_table(path)
    assert back.same_as(tbl) and back.name == "t"
    assert table_from_json(table_to_json(sl2())).same_as(sl2())


@pytest.mark.parametrize("text", [
    '{"dim": 0}',
    '{"dim": 2, "bracket": [[1, 0, 0, "1"]]}',
    '{"dim": 2, "diamond": [[0, 0, 5, "1"]]}',
    '{"bracket": []}',
    '{"dim": 2, "bracket": [[0, 1, 0, "x"]]}',
])
def test_json_rejects_bad_tables(text):
    with pytest.raises(ValueError):
        table_from_json(text)


def test_json_fractions():
    tbl = table_from_json('{"dim": 1, "diamond": [[0, 0, 0, "-3/6"]]}')
    assert tbl.diamond[0, 0, 0] == Fraction(-1, 2)
    assert '"-1/2"' in table_to_json(tbl)
