import itertools

import numpy as np
import pytest

from skewbrace.errors import ArityMismatch, PreconditionViolated
from skewbrace.terms import (
    Bar,
    Const,
    Neg,
    Star,
    Sum,
    Var,
    Zero,
    arity,
    check_translation_lemma,
    circ_term,
    eval_term,
    random_term,
    size,
    star_free_in,
    translation_coefficient,
    variables,
)

X0, X1, X2 = Var(0), Var(1), Var(2)


def test_star_on_trivial_brace_is_zero(TZ4):
    t = Star(X0, X1)
    for x, y in itertools.product(range(4), repeat=2):
        assert eval_term(TZ4, t, [x, y]) == 0


def test_circ_elimination_exhaustive(corpus):
    t = circ_term(X0, X1)
    for B in corpus:
        xs, ys = np.meshgrid(np.arange(B.order), np.arange(B.order), indexing="ij")
        assert (eval_term(B, t, [xs, ys]) == B.circ.op).all()


def test_bar_const(B4):
    for c in range(4):
        assert eval_term(B4, Bar(Const(c)), []) == B4.bar[c]
        assert B4.circ.op[c, B4.bar[c]] == 0


def test_eval_arity_mismatch(B4):
    with pytest.raises(ArityMismatch):
        eval_term(B4, Sum(X0, X2), [1, 2])


def test_star_free_examples():
    assert star_free_in(Sum(X0, Star(X1, X2)), 0)
    assert not star_free_in(Star(X0, X1), 0)
    assert star_free_in(Neg(Bar(X0)), 0)


def test_term_helpers():
    t = Sum(Neg(X0), Star(X2, Const(1)))
    assert arity(t) == 3 and variables(t) == {0, 2} and size(t) == 6
    assert str(t) == "(-(x0) + (x2 * c1))"


def test_translation_examples(B4, OpS3, TZ4):
    assert check_translation_lemma(B4, X0, 0) == 1
    assert check_translation_lemma(TZ4, X0, 0) == 1
    assert check_translation_lemma(TZ4, Neg(X0), 0) == 3  # -1 mod 4
    assert check_translation_lemma(B4, Neg(X0), 0) == 1  # -1 mod 2
    # trivial center: every k acts as 0
    assert check_translation_lemma(OpS3, X0, 0) == 0
    # unreduced coefficient is 2; modulo exp(zeta(B4)) = 2 it is 0
    t = Sum(X0, Sum(X1, X0))
    assert translation_coefficient(t, 0) == 2
    assert check_translation_lemma(B4, t, 0) == 0


def test_negative_coefficient_mod_exponent(corpus):
    # Heisenberg of order 27 has a center of exponent 3, so -1 is reported as 2
    H27 = next(B for B in corpus if B.name == "Heis27")
    assert check_translation_lemma(H27, Neg(X0), 0) == 2
    assert check_translation_lemma(H27, Bar(Sum(X0, X0)), 0) == 1


def test_translation_rejects_star(B4):
    with pytest.raises(PreconditionViolated):
        check_translation_lemma(B4, Star(X0, X1), 0)


def test_translation_with_given_assignments(B4):
    rows = np.array([[0, 1], [2, 3], [3, 3]])
    assert check_translation_lemma(B4, Sum(X1, X0), 0, rows) == 1
    with pytest.raises(ArityMismatch):
        check_translation_lemma(B4, Sum(X1, X0), 0, rows[:, :1])


def test_random_term_determinism():
    assert random_term(0, 2, 3) == random_term(0, 2, 3)
    leaf = random_term(1, 1, 1)
    assert size(leaf) == 1
    for seed in range(50):
        assert not variables(random_term(seed, 0, 2))
    with pytest.raises(ValueError):
        random_term(0, 2, 13)


def test_random_star_free_terms_respect_variable():
    for seed in range(200):
        t = random_term(seed, 3, 6, order=4, star_free_var=0)
        assert star_free_in(t, 0)


def test_translation_fuzz_small(corpus):
    for B in corpus:
        if B.order > 8:
            continue
        for seed in range(60):
            t = random_term(seed, 3, 5, order=B.order, star_free_var=0)
            check_translation_lemma(B, t, 0)


def test_zero_term(B4):
    assert eval_term(B4, Zero(), []) == 0
