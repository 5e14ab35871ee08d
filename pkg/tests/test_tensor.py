from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import X, Y, Z, g_sums, letters, t_elements, words
from framedlie.free_lie import GElement, diamond, diamond_mono, gen
from framedlie.tensor import (
    JElement,
    SplitPair,
    TElement,
    as_g,
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
    unit,
    word_degree,
)

x, y, z, w = (gen(i) for i in range(4))


def test_concat_examples():
    assert concat(from_g(X), from_g(Y)) == t_word((x, y))
    v = t_word((z, x)) + t_word((y,), 3)
    assert concat(unit(), v) == v == concat(v, unit())
    assert concat(from_g(X + Y), from_g(Z)) == t_word((x, z)) + t_word((y, z))


def test_split_examples():
    assert coproduct_splits((x,)) == (SplitPair((), (x,)), SplitPair((x,), ()))
    assert coproduct_splits(()) == (SplitPair((), ()),)
    assert coproduct_splits((x, y)) == (
        SplitPair((), (x, y)), SplitPair((x,), (y,)), SplitPair((y,), (x,)), SplitPair((x, y), ()))


def _split_counter(w):
    return Counter(coproduct_splits(w))


@given(words(max_len=3), words(max_len=3))
def test_splits_are_multiplicative(u, v):
    prod = Counter()
    for a, b in coproduct_splits(u):
        for c, d in coproduct_splits(v):
            prod[(a + c, b + d)] += 1
    assert _split_counter(u + v) == prod


@given(words(max_len=4))
def test_splits_cocommutative_and_counital(u):
    cnt = _split_counter(u)
    assert cnt == Counter({(b, a): k for (a, b), k in cnt.items()})
    assert len(coproduct_splits(u)) == 2 ** len(u)
    assert sum(k for (a, b), k in cnt.items() if a == u and not b) == 1


def test_nabla_examples():
    assert nabla(X, unit()) == 0
    assert nabla(X, t_word((y,))) == t_word((diamond_mono(x, y),))
    expected = (t_word((diamond_mono(x, y), z, w)) + t_word((y, diamond_mono(x, z), w))
                + t_word((y, z, diamond_mono(x, w))))
    assert nabla(X, t_word((y, z, w))) == expected


@given(g_sums(), t_elements(), t_elements())
def test_nabla_is_a_derivation(a, u, v):
    assert nabla(a, concat(u, v)) == concat(nabla(a, u), v) + concat(u, nabla(a, v))


@given(letters(), t_elements())
def test_nabla_keeps_length_and_shifts_degree(a, u):
    out = nabla(GElement({a: 1}), u)
    for wd in out.terms:
        assert any(len(wd) == len(src) and word_degree(wd) == word_degree(src) + a.degree
                   for src in u.terms)


def test_nabla_hom_examples():
    v = t_word((z, w)) + t_word((y,), 2)
    assert nabla_hom(unit(), v) == v
    assert nabla_hom(t_word((x,)), v) == nabla(X, v)
    assert nabla_hom(t_word((x, y)), t_word((z,))) == t_word((diamond_mono(x, diamond_mono(y, z)),))


def test_lambda_examples():
    assert make_lambda(X, Y) == triple((), x, y)
    assert make_lambda(Y, X) == triple((), x, y, -1)
    assert make_lambda(X, X) == 0
    (key,) = make_lambda(Y, X).terms
    assert key[1] < key[2]


def test_j_embed_examples():
    assert j_embed(triple((), x, y)) == t_word((x, y)) - t_word((y, x))
    assert j_embed(triple((z,), x, y)) == t_word((z, x, y)) - t_word((z, y, x))
    assert j_embed(JElement()) == 0


def test_nabla_on_j_examples():
    zx, zy = diamond_mono(z, x), diamond_mono(z, y)
    assert nabla_on_j(Z, triple((), x, y)) == triple((), zx, y) + triple((), x, zy)
    assert nabla_on_j(X, JElement()) == 0


@given(g_sums(), st.lists(words(max_len=2), min_size=1, max_size=3), letters(), letters())
def test_nabla_on_j_commutes_with_embedding(a, prefixes, p, q):
    qj = JElement()
    for i, pre in enumerate(prefixes):
        qj = qj + triple(pre, p, q, i + 1)
    assert j_embed(nabla_on_j(a, qj)) == nabla(a, j_embed(qj))


@given(t_elements(), g_sums(), g_sums())
def test_left_multiply_matches_embedding(u, a, b):
    q = make_lambda(a, b)
    assert j_embed(left_multiply(u, q)) == concat(u, j_embed(q))


def test_as_g_rejects_longer_words():
    assert as_g(from_g(X + diamond(Y, Z))) == X + diamond(Y, Z)
    with pytest.raises(ValueError):
        as_g(t_word((x, y)))


def test_coefficients_stay_exact():
    u = t_word((x,), "1/3") * 3
    assert u == t_word((x,))
    assert TElement({(x,): 0.5}).terms[(x,)] == Fraction(1, 2)
    assert type((t_word((x,), Fraction(4, 2))).terms[(x,)]) is int
