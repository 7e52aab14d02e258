import itertools

import numpy as np
import pytest

import oracles as O
from skewbrace.brace import trivial_brace
from skewbrace.commutator import (
    PairAlgebra,
    absorbing_lower_bound,
    congruence_generated,
    conjecture_commutator_equality,
    is_abelian_brace,
    is_central_ideal,
    largest_central_ideal,
    smith_commutator,
)
from skewbrace.errors import NotAnIdeal
from skewbrace.groups import ElementSet, closure, cyclic_group, group_commutator_set
from skewbrace.substructures import all_ideals, distinguished_sets, ideal_closure, is_ideal

A3 = (0, 3, 4)


def test_congruence_examples(B4, S3):
    assert congruence_generated(B4, []).classes() == [(0,), (1,), (2,), (3,)]
    assert congruence_generated(B4, [(1, 0)]).classes() == [(0, 1), (2, 3)]
    T = trivial_brace(S3)
    assert congruence_generated(T, [(0, 3)]).classes() == [(0, 3, 4), (1, 2, 5)]


def test_congruence_classes_are_ideal_cosets(corpus):
    for B in corpus:
        if B.order > 9:
            continue
        for x in range(B.order):
            part = congruence_generated(B, [(0, x)])
            I = ideal_closure(B, [x])
            cls = [c for c in part.classes() if 0 in c][0]
            assert set(cls) == set(I)


def test_pair_algebra_closed(B4, OpS3):
    for B in (B4, OpS3):
        for J in all_ideals(B):
            P = PairAlgebra(B, J)
            P.verify_closed()
            assert P.size == B.order * len(J)


def test_commutator_examples(TZ4, B4, OpS3):
    assert smith_commutator(TZ4, TZ4.whole(), TZ4.whole()).is_trivial()
    assert smith_commutator(B4, B4.whole(), B4.whole()).members == (0, 1)
    assert smith_commutator(OpS3, OpS3.whole(), OpS3.whole()).members == A3


def test_commutator_requires_ideals(B4):
    with pytest.raises(NotAnIdeal):
        smith_commutator(B4, ElementSet.of(4, [0, 2]), B4.whole())


def test_commutator_matches_pair_ideal_oracle(corpus):
    for B in corpus:
        if B.order > 8:
            continue
        for I, J in itertools.product(all_ideals(B), repeat=2):
            assert set(smith_commutator(B, I, J)) == O.pair_algebra_commutator(B, I, J), B.name


def test_commutator_matches_absorbing_clone_oracle(corpus):
    for B in corpus:
        if B.order > 4:
            continue
        clone = O.binary_polynomial_clone(B)
        assert clone is not None
        for I, J in itertools.product(all_ideals(B), repeat=2):
            assert set(smith_commutator(B, I, J)) == O.absorbing_commutator(B, I, J, clone)


def test_commutator_properties(corpus):
    for B in corpus:
        ideals = all_ideals(B)
        comm = {(I, J): smith_commutator(B, I, J) for I in ideals for J in ideals}
        for (I, J), C in comm.items():
            assert C <= (I & J) and is_ideal(B, C)
            assert C == comm[(J, I)]
        for (I, J), (I2, J2) in itertools.product(comm, repeat=2):
            if I <= I2 and J <= J2:
                assert comm[(I, J)] <= comm[(I2, J2)]


def test_group_like_braces_give_group_commutators(corpus):
    for B in corpus:
        if not (B.is_trivial_brace or np.array_equal(B.circ.op, B.add.op.T)):
            continue
        for I, J in itertools.product(all_ideals(B), repeat=2):
            gc = ElementSet.from_mask(closure(B.add.op, group_commutator_set(B.add, I, J).array))
            assert smith_commutator(B, I, J) == ideal_closure(B, gc)
            assert ideal_closure(B, gc) == gc  # normal subgroups: already an ideal


def test_central_ideal_examples(B4, OpS3):
    assert is_central_ideal(B4, distinguished_sets(B4).zeta)
    assert not is_central_ideal(OpS3, ElementSet.of(6, A3))
    for B in (B4, OpS3):
        assert is_central_ideal(B, B.zero())


def test_abelian_examples(TZ4, B4, OpS3):
    assert is_abelian_brace(TZ4)
    assert not is_abelian_brace(B4)
    assert not is_abelian_brace(OpS3)


def test_absorbing_bound(TZ4, B4, corpus):
    assert absorbing_lower_bound(TZ4, TZ4.whole(), TZ4.whole()).result.is_trivial()
    r = absorbing_lower_bound(B4, B4.whole(), B4.whole(), cap=10 ** 5)
    assert r.result.members == (0, 1) and not r.capped and r.functions == 128
    for B in corpus:
        if B.order > 6:
            continue
        A = B.whole()
        bound = absorbing_lower_bound(B, A, A, cap=5000)
        assert bound.result <= smith_commutator(B, A, A)
        if not bound.capped:
            assert bound.result == smith_commutator(B, A, A)


def test_conjecture_report_examples(TZ4, B4, OpS3):
    rep = conjecture_commutator_equality(B4)
    assert len(rep.pairs) == 9 and rep.equality_holds
    assert conjecture_commutator_equality(TZ4).equality_holds
    rep = conjecture_commutator_equality(OpS3)
    for p in rep.pairs:
        gc = ElementSet.from_mask(closure(OpS3.add.op, group_commutator_set(OpS3.add, p.I, p.J).array))
        assert p.lower == p.upper == gc


def test_largest_central_ideal(TZ4, B4, OpS3, corpus):
    assert largest_central_ideal(B4).members == (0, 1)
    assert largest_central_ideal(OpS3).is_trivial()
    assert largest_central_ideal(TZ4).is_whole()
    for B in corpus:
        assert largest_central_ideal(B) == distinguished_sets(B).zeta


def test_central_ideals_by_brute_force(corpus):
    # biggest ideal I with [A, I] = 0, scanning every ideal
    for B in corpus:
        central = [I for I in all_ideals(B) if smith_commutator(B, B.whole(), I).is_trivial()]
        biggest = max(central, key=len)
        assert all(I <= biggest for I in central)
        assert biggest == distinguished_sets(B).zeta


def test_abelian_iff_groups_coincide(corpus):
    for B in corpus:
        expected = B.add.is_abelian and np.array_equal(B.add.op, B.circ.op)
        assert is_abelian_brace(B) == expected


def test_trivial_ideals_commute(corpus):
    for B in corpus:
        for I in all_ideals(B):
            assert smith_commutator(B, B.zero(), I).is_trivial()


def test_cyclic_trivial_brace_is_abelian():
    assert is_abelian_brace(trivial_brace(cyclic_group(6)))
