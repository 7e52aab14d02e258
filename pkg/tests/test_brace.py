import numpy as np
import pytest

import oracles as O
from skewbrace.brace import (
    fix_ker_meet,
    lambda_of,
    make_brace,
    opposite_brace,
    star_of,
    trivial_brace,
    verify_identities,
)
from skewbrace.errors import AxiomFails, MismatchedIdentity, NoIdentity
from skewbrace.groups import builtin_group, cyclic_group, quaternion_group, symmetric_group

# B4 element (k, h) has index k + 2h
K0H0, K1H0, K0H1, K1H1 = 0, 1, 2, 3


def xor4():
    return [[a ^ b for b in range(4)] for a in range(4)]


def z4():
    return [[(a + b) % 4 for b in range(4)] for a in range(4)]


def test_trivial_from_tables():
    B = make_brace(z4(), z4())
    assert B.is_trivial_brace and B.order == 4


def test_b4_tables(B4):
    # (k1,h1) o (k2,h2) = (k1 + k2 + h1 h2, h1 + h2)
    for x in range(4):
        for y in range(4):
            k1, h1, k2, h2 = x % 2, x // 2, y % 2, y // 2
            k, h = (k1 + k2 + h1 * h2) % 2, (h1 + h2) % 2
            assert B4.circ.op[x, y] == k + 2 * h
            assert B4.add.op[x, y] == x ^ y
    assert sorted(B4.circ.element_orders.tolist()) == [1, 2, 4, 4]


def z4_generated_by_2():
    s = (0, 2, 1, 3)
    return [[s[(s.index(a) + s.index(b)) % 4] for b in range(4)] for a in range(4)]


def test_klein_circle_on_z4_is_a_brace():
    # x o y = x + y + 2xy on Z4 is the Klein group written as XOR
    B = make_brace(z4(), xor4())
    assert all(B.circ.op[x, y] == (x + y + 2 * x * y) % 4 for x in range(4) for y in range(4))


def test_mismatched_tables_fail_axiom():
    with pytest.raises(AxiomFails) as exc:
        make_brace(z4(), z4_generated_by_2())
    x, y, z = exc.value.witness
    add, circ, neg = z4(), z4_generated_by_2(), [0, 3, 2, 1]
    assert circ[x][add[y][z]] != add[add[circ[x][y]][neg[x]]][circ[x][z]]


def test_identity_errors():
    with pytest.raises(MismatchedIdentity):
        make_brace(z4(), [[a ^ b for b in range(2)] for a in range(2)])
    with pytest.raises(NoIdentity):
        make_brace(z4(), [[1] * 4] * 4)
    shifted = [[(a + b + 1) % 4 for b in range(4)] for a in range(4)]  # identity 3
    with pytest.raises(MismatchedIdentity):
        make_brace(z4(), shifted)


def test_shared_nonzero_identity_is_moved():
    shifted = [[(a + b + 1) % 4 for b in range(4)] for a in range(4)]
    B = make_brace(shifted, shifted)
    assert (B.add.op[0] == np.arange(4)).all() and B.is_trivial_brace


def test_lambda_examples(B4, OpS3):
    T = trivial_brace(symmetric_group(3))
    for x in range(6):
        assert (lambda_of(T, x) == np.arange(6)).all()
    lam = lambda_of(B4, K0H1)
    assert lam[K0H1] == K1H1 and lam[K1H1] == K0H1
    assert lam[K0H0] == K0H0 and lam[K1H0] == K1H0
    G = OpS3.add
    for x in range(6):
        conj = [G.op[G.op[G.inv[x], y], x] for y in range(6)]
        assert lambda_of(OpS3, x).tolist() == conj


def test_star_examples(B4):
    T = trivial_brace(cyclic_group(4))
    assert (T.star == 0).all()
    assert star_of(B4, K0H1, K0H1) == K1H0
    nonzero = {(x, y) for x in range(4) for y in range(4) if B4.star[x, y]}
    assert nonzero == {(a, b) for a in (K0H1, K1H1) for b in (K0H1, K1H1)}
    assert all(B4.star[x, y] == K1H0 for x, y in nonzero)


def test_trivial_braces(S3):
    T = trivial_brace(S3)
    assert (T.star == 0).all()
    assert (T.bracket != 0).any()
    one = trivial_brace(cyclic_group(1))
    assert one.order == 1 and verify_identities(one).all_passed


def test_opposite_braces():
    Z4 = cyclic_group(4)
    assert opposite_brace(Z4) == trivial_brace(Z4)
    Q = opposite_brace(quaternion_group())
    assert verify_identities(Q).all_passed


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "S4"])
def test_opposite_star_is_commutator(name):
    G = builtin_group(name)
    B = opposite_brace(G)
    # x*y = [x, -y] with [a, b] = -a - b + a + b
    assert (B.star == B.bracket[:, B.neg]).all()


def test_verify_identities_examples(B4, OpS3):
    for B in (B4, OpS3, trivial_brace(symmetric_group(3))):
        rep = verify_identities(B)
        assert rep.all_passed, rep.witnesses


def test_brace_laws_against_naive_ops(corpus):
    for B in corpus:
        if B.order > 9:
            continue
        o = O.Ops(*O.tables(B))
        n = B.order
        for x in range(n):
            assert B.bar[x] == o.bar[x] and B.neg[x] == o.neg[x]
            for y in range(n):
                assert B.lam[x, y] == o.lam(x, y)
                assert B.star[x, y] == o.star(x, y)
                # x o y = x + (x*y) + y
                assert B.circ.op[x, y] == o.add(o.add(x, o.star(x, y)), y)
                # lambda_{x o y} = lambda_x lambda_y
                for z in range(n):
                    assert o.lam(o.circ(x, y), z) == o.lam(x, o.lam(y, z))


def test_fix_ker_meet(B4, OpS3):
    assert fix_ker_meet(B4).members == (0, 1)
    assert fix_ker_meet(OpS3).members == (0,)


def test_equality_and_labels(B4):
    assert B4 == make_brace(B4.add.op, B4.circ.op)
    assert B4.label(2) == (0, 1)
