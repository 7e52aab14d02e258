import itertools

import pytest

import oracles as O
from skewbrace.brace import trivial_brace
from skewbrace.groups import ElementSet, cyclic_group
from skewbrace.series import (
    KINDS,
    left_star_series,
    lower_central_series,
    mixed_star_series,
    nilpotency_report,
    right_star_series,
    series,
    star_series,
    upper_central_series,
)
from skewbrace.substructures import all_ideals, distinguished_sets, is_ideal, star_product

A3 = (0, 3, 4)


def members(rep):
    return [s.members for s in rep.stages]


def test_upper_examples(TZ4, B4, OpS3):
    u = upper_central_series(TZ4)
    assert members(u)[:2] == [(0,), (0, 1, 2, 3)] and u.class_index == 1
    u = upper_central_series(B4)
    assert members(u)[:3] == [(0,), (0, 1), (0, 1, 2, 3)] and u.class_index == 2
    u = upper_central_series(OpS3)
    assert u.limit.is_trivial() and u.class_index is None


def test_lower_examples(TZ4, B4, OpS3):
    g = lower_central_series(TZ4)
    assert members(g)[:2] == [(0, 1, 2, 3), (0,)] and g.class_index == 1
    g = lower_central_series(B4)
    assert members(g)[:3] == [(0, 1, 2, 3), (0, 1), (0,)] and g.class_index == 2
    g = lower_central_series(OpS3)
    assert g.limit.members == A3 and g.class_index is None


def test_star_series_examples(B4, S3):
    for G in (cyclic_group(4), S3):
        for s in star_series(trivial_brace(G)):
            assert s.stage(2).is_trivial() and s.class_index == 2
    left, right, mixed = star_series(B4)
    for s in (left, right, mixed):
        assert s.stage(2).members == (0, 1)
        assert s.stage(3).is_trivial() and s.class_index == 3


def test_trivial_s3_star_nilpotent_not_central(S3):
    rep = nilpotency_report(trivial_brace(S3))
    assert rep.star_nilpotent and not rep.centrally_nilpotent


def test_report_examples(B4, OpS3):
    rep = nilpotency_report(B4)
    assert rep.centrally_nilpotent_class == 2
    assert None not in (rep.left_star_class, rep.right_star_class, rep.mixed_star_class)
    assert rep.circ_nilpotent and rep.circ_group_class == 1
    rep = nilpotency_report(OpS3)
    assert not rep.centrally_nilpotent and not rep.nilpotent_type
    rep = nilpotency_report(trivial_brace(cyclic_group(1)))
    assert rep.centrally_nilpotent_class == 0


def test_series_match_naive_oracle(corpus):
    for B in corpus:
        o = O.Ops(*O.tables(B))
        up = O.naive_upper_series(o)
        lo = O.naive_gamma_series(o)
        assert [set(s) for s in upper_central_series(B).stages] == up
        assert [set(s) for s in lower_central_series(B).stages] == lo
        assert upper_central_series(B).class_index == O.class_from(up, frozenset(range(B.order)))
        assert lower_central_series(B).class_index == O.class_from(lo, frozenset({0}))


def test_zeta_stages_are_ideals(corpus):
    for B in corpus:
        for s in upper_central_series(B).stages:
            assert is_ideal(B, s)


def test_star_terms_inside_gamma(corpus):
    for B in corpus:
        g = lower_central_series(B)
        left, right, _ = star_series(B)
        for n in range(1, len(left.stages) + len(g.stages) + 2):
            assert left.stage(n) <= g.stage(n - 1)
            assert right.stage(n) <= g.stage(n - 1)


def test_class_equality_and_finite_case(corpus):
    for B in corpus:
        rep = nilpotency_report(B)
        assert upper_central_series(B).class_index == lower_central_series(B).class_index
        assert len(set(rep.finite_case)) == 1


def test_center_meets_every_ideal(corpus):
    for B in corpus:
        rep = nilpotency_report(B)
        if rep.star_nilpotent and rep.nilpotent_type:
            z = distinguished_sets(B).zeta
            for I in all_ideals(B):
                if not I.is_trivial():
                    assert not (z & I).is_trivial()


def test_abelian_type_conditions(corpus):
    for B in corpus:
        if not B.add.is_abelian:
            continue
        rep = nilpotency_report(B)
        i = rep.star_nilpotent
        ii = rep.right_star_class is not None and rep.circ_nilpotent
        iii = rep.centrally_nilpotent
        assert i == ii == iii
        assert (rep.mixed_star_class is not None) == i


def naive_mixed(B):
    """A^[1] = A and A^[n] generated by all A^[i] * A^[n-i], computed for 3n terms."""
    A = B.whole()
    terms = [None, A]
    n = B.order
    for k in range(2, 3 * n + 3):
        vals = set()
        for i in range(1, k):
            vals |= set(star_product(B, terms[i], terms[k - i]))
        terms.append(ElementSet.of(n, O.generated_subgroup(B.add.op.tolist(), vals)))
    return terms


def test_mixed_series_against_long_run(corpus):
    for B in corpus:
        if B.order > 9:
            continue
        ref = naive_mixed(B)
        m = mixed_star_series(B)
        for k in range(1, len(ref)):
            assert m.stage(k) == ref[k], (B.name, k)


def test_series_dispatch(B4):
    for kind in KINDS:
        assert series(B4, kind).kind == kind
    with pytest.raises(ValueError):
        series(B4, "sideways")


def test_left_and_right_differ_somewhere(corpus):
    # the two recursions are genuinely different operations on some corpus brace
    diffs = [B.name for B in corpus
             if members(left_star_series(B)) != members(right_star_series(B))]
    assert diffs


def test_lower_series_from_ideal(B4):
    g = lower_central_series(B4, ElementSet.of(4, [0, 1]))
    assert g.stages[0].members == (0, 1) and g.stage(1).is_trivial()


def test_gamma_zeta_containment(corpus):
    for B in corpus:
        u, g = upper_central_series(B), lower_central_series(B)
        A = B.whole()
        for n, k in itertools.product(range(5), repeat=2):
            assert (g.stage(n) <= u.stage(k)) == (A <= u.stage(n + k))
