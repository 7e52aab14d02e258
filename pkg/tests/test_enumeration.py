import itertools

import numpy as np
import pytest

import oracles as O
from skewbrace.brace import make_brace, trivial_brace
from skewbrace.catalog import SMALL_GROUPS, b4, braces_of_order
from skewbrace.constructions import braces_isomorphic
from skewbrace.enumeration import (
    BraceFamily,
    automorphisms,
    brute_force_braces_on,
    classify_up_to_iso,
    enumerate_braces_on,
)
from skewbrace.errors import TooLarge
from skewbrace.groups import builtin_group, cyclic_group, relabel_table


def table_set(family):
    return {tuple(map(tuple, B.circ.op.tolist())) for B in family.braces}


@pytest.mark.parametrize("name,count", [("Z4", 2), ("Z2xZ2", 6), ("S3", 6), ("Z1", 1), ("Q8", 24)])
def test_automorphism_counts(name, count):
    auts = automorphisms(builtin_group(name))
    assert len(auts) == count
    assert (auts[0] == np.arange(len(auts[0]))).all()


def test_automorphisms_are_automorphisms():
    G = builtin_group("D4")
    for a in automorphisms(G):
        assert (a[G.op] == G.op[np.ix_(a, a)]).all()


def test_z2_has_one_brace():
    fam = enumerate_braces_on(cyclic_group(2))
    assert len(fam.braces) == 1 and fam.braces[0].is_trivial_brace


def test_z4_and_klein_families():
    fam = enumerate_braces_on(cyclic_group(4))
    assert any(B.is_trivial_brace for B in fam.braces)
    assert any(not B.is_trivial_brace for B in fam.braces)
    fam = enumerate_braces_on(builtin_group("Z2xZ2"))
    assert any(B.is_trivial_brace for B in fam.braces)
    assert any(braces_isomorphic(B, b4()) is not None for B in fam.braces)


@pytest.mark.parametrize("name", ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"])
def test_lambda_search_matches_latin_oracle(name):
    G = builtin_group(name)
    fam = enumerate_braces_on(G)
    assert table_set(fam) == O.latin_braces(G.op.tolist())


@pytest.mark.parametrize("name", ["Z5", "Z6", "S3"])
def test_lambda_search_matches_library_oracle(name):
    G = builtin_group(name)
    mine = table_set(enumerate_braces_on(G))
    assert mine == {tuple(map(tuple, t.tolist())) for t in brute_force_braces_on(G)}


def test_enumerated_lambda_satisfies_condition():
    G = builtin_group("Z2xZ4")
    for B in enumerate_braces_on(G).braces:
        lam = B.lam
        for x, y in itertools.product(range(8), repeat=2):
            assert (lam[B.add.op[x, lam[x, y]]] == lam[x][lam[y]]).all()


def test_size_limits():
    with pytest.raises(TooLarge):
        enumerate_braces_on(cyclic_group(9))
    with pytest.raises(TooLarge):
        brute_force_braces_on(cyclic_group(7))


def test_classification_examples():
    one = BraceFamily(cyclic_group(2), [trivial_brace(cyclic_group(2))])
    assert len(classify_up_to_iso(one).iso_classes) == 1
    B = b4()
    perm = [0, 1, 3, 2]
    copy = make_brace(relabel_table(B.add.op, perm), relabel_table(B.circ.op, perm))
    perm = [0, 2, 1, 3]
    other = make_brace(relabel_table(B.add.op, perm), relabel_table(B.circ.op, perm))
    fam = classify_up_to_iso(BraceFamily(B.add, [B, copy, other]))
    assert len(fam.iso_classes) == 1


def test_classification_is_partition():
    for name in ("Z2xZ2", "S3", "Z6", "Z2xZ2xZ2"):
        fam = classify_up_to_iso(enumerate_braces_on(builtin_group(name)))
        reps = fam.representatives()
        for a, b in itertools.combinations(reps, 2):
            assert braces_isomorphic(a, b) is None
        for i, B in enumerate(fam.braces):
            rep = reps[fam.class_of[i]]
            assert braces_isomorphic(rep, B) is not None
            assert braces_isomorphic(B, rep) is not None


def test_classes_separated_by_circ_type():
    fam = classify_up_to_iso(enumerate_braces_on(builtin_group("Z2xZ2")))
    kinds = sorted(sorted(B.circ.element_orders.tolist()) for B in fam.representatives())
    assert kinds == [[1, 2, 2, 2], [1, 2, 4, 4]]


def test_class_counts():
    # derived by our own enumeration and cross-checked against brute force up to order 6
    counts = {n: len(braces_of_order(n)) for n in range(1, 8)}
    assert counts == {1: 1, 2: 1, 3: 1, 4: 4, 5: 1, 6: 6, 7: 1}
    per_group = {g: len(classify_up_to_iso(enumerate_braces_on(builtin_group(g))).iso_classes)
                 for g in SMALL_GROUPS[8]}
    assert per_group == {"Z8": 5, "Z2xZ4": 14, "Z2xZ2xZ2": 8, "D4": 12, "Q8": 8}


def test_brute_force_iso_classes_order_six():
    for name in ("Z6", "S3"):
        G = builtin_group(name)
        braces = [make_brace(G, t) for t in brute_force_braces_on(G)]
        classes = []
        for B in braces:
            if not any(O.brute_isomorphic(B, R) for R in classes):
                classes.append(B)
        fam = classify_up_to_iso(enumerate_braces_on(G))
        assert len(classes) == len(fam.iso_classes)
