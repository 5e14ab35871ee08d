from itertools import combinations

import numpy as np
import pytest
from hypothesis import given

from conftest import X, Y, Z, g_sums, g_trees
from framedlie.free_lie import (
    BRACKET,
    GElement,
    bracket,
    diamond,
    diamond_mono,
    g,
    g_degree,
    gen,
    hall_basis,
    is_hall,
    monomial_order,
    normalize,
)
from framedlie.tensor import TElement, concat, from_g, t_word

x, y, z = gen(0), gen(1), gen(2)


def test_order_examples():
    assert monomial_order(x, y) == "less"
    assert monomial_order(x, diamond_mono(x, y)) == "less"
    (bxy,) = bracket(X, Y).terms
    assert monomial_order(diamond_mono(x, y), bxy) == "less"
    assert monomial_order(y, y) == "equal"
    assert monomial_order(z, x) == "greater"


def test_diamond_examples():
    assert diamond(X, Y) == g(diamond_mono(x, y))
    assert diamond(X + Y, Z) == g(diamond_mono(x, z)) + g(diamond_mono(y, z))
    (bxy,) = bracket(X, Y).terms
    assert diamond(bracket(X, Y), Z) == g(diamond_mono(bxy, z))


def test_bracket_examples():
    assert bracket(X, X) == 0
    assert bracket(Y, X) == bracket(X, Y) * -1
    jac = bracket(bracket(X, Y), Z) + bracket(bracket(Y, Z), X) + bracket(bracket(Z, X), Y)
    assert jac == 0


def test_degree_examples():
    assert g_degree(X) == 1
    assert g_degree(diamond(X, bracket(Y, Z))) == 3
    assert g_degree(X + diamond(X, Y)) == "inhomogeneous"
    with pytest.raises(ValueError):
        g_degree(GElement())


def test_diamond_is_not_symmetric():
    for a, b in combinations([X, Y, Z], 2):
        assert diamond(a, b) - diamond(b, a) != 0


@given(g_sums(), g_sums())
def test_antisymmetry(a, b):
    assert bracket(a, b) + bracket(b, a) == 0


@given(g_trees(), g_trees(), g_trees())
def test_jacobi(a, b, c):
    total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    assert total == 0


@given(g_sums(max_depth=3))
def test_normalize_is_identity_on_canonical_elements(a):
    assert normalize(a) == a
    assert all(is_hall(m) for m in a.terms)


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
def test_order_is_strict_total(degree):
    basis = hall_basis(3, degree)
    keys = [m.key for m in basis]
    assert len(set(keys)) == len(keys)
    assert all(monomial_order(a, b) == "less" for a, b in zip(basis, basis[1:]))
    for a, b in combinations(basis[:40], 2):
        assert (monomial_order(a, b), monomial_order(b, a)) == ("less", "greater")


def _commutator_expansion(m) -> TElement:
    if m.kind != BRACKET:
        return t_word((m,))
    a, b = _commutator_expansion(m.left), _commutator_expansion(m.right)
    return concat(a, b) - concat(b, a)


@pytest.mark.parametrize("n_gens,degree", [(2, 2), (2, 3), (2, 4), (3, 3)])
def test_hall_monomials_are_independent(n_gens, degree):
    # diamond atoms act as free letters, so the bracket monomials must be
    # independent in the tensor algebra over all atoms
    basis = [m for m in hall_basis(n_gens, degree) if m.kind == BRACKET]
    rows = [_commutator_expansion(m).terms for m in basis]
    cols = sorted({w for r in rows for w in r}, key=lambda w: [l.key for l in w])
    mat = np.array([[float(r.get(w, 0)) for w in cols] for r in rows])
    assert np.linalg.matrix_rank(mat) == len(basis)


@pytest.mark.parametrize("n_gens,degree,expected", [(2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 5, 6), (3, 3, 8)])
def test_pure_lie_part_has_witt_dimension(n_gens, degree, expected):
    pure = [m for m in hall_basis(n_gens, degree) if "d(" not in m.to_str()]
    assert len(pure) == expected


@given(g_trees(max_depth=3))
def test_homogeneous_trees_keep_degree(a):
    if a:
        degrees = {m.degree for m in a.terms}
        assert len(degrees) == 1


def test_brackets_of_basis_expand_in_basis():
    basis = [m for d in (1, 2) for m in hall_basis(3, d)]
    for a in basis:
        for b in basis:
            out = bracket(g(a), g(b))
            assert all(is_hall(m) for m in out.terms)
            assert set(out.terms) <= set(hall_basis(3, a.degree + b.degree))


def test_embedding_into_tensor_words():
    assert from_g(X + Y) == t_word((x,)) + t_word((y,))
