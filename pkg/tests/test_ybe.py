import numpy as np
import pytest

import oracles as O
from skewbrace.ybe import (
    Solution,
    canonical_solution,
    check_nondegenerate_involutive,
    check_ybe,
    flip,
)


def corrupted(s, seed):
    rng = np.random.default_rng(seed)
    n = s.size
    x, y = rng.integers(0, n, size=2)
    s.first[x, y] = (s.first[x, y] + 1) % n
    return s


def test_flip_is_solution():
    for n in (1, 2, 5):
        assert check_ybe(flip(n))
        assert check_nondegenerate_involutive(flip(n)) == (True, True)


def test_shifted_flip_is_a_solution():
    # r(x, y) = (y, x + 1): both sides send (x, y, z) to (z, y + 1, x + 2)
    for n in (2, 3, 5):
        s = Solution.from_function(n, lambda x, y: (y, (x + 1) % n))
        assert check_ybe(s)
        assert O.naive_ybe(s.first.tolist(), s.second.tolist())


def test_corrupted_solution_rejected_with_witness(OpS3, B4):
    for B in (OpS3, B4):
        for seed in range(10):
            s = corrupted(canonical_solution(B), seed)
            res = check_ybe(s)
            assert not res and res.witness is not None
            assert not O.naive_ybe(s.first.tolist(), s.second.tolist())


def test_one_entry_change_of_flip_can_survive():
    # r(x, y) = (y, x) with r(0, 1) changed to (2, 0) is still a (degenerate) solution
    s = flip(4)
    s.first[0, 1] = 2
    assert check_ybe(s) and O.naive_ybe(s.first.tolist(), s.second.tolist())
    assert check_nondegenerate_involutive(s)[0] is False


def test_checker_agrees_with_naive_on_random_maps():
    rng = np.random.default_rng(3)
    verdicts = []
    for _ in range(200):
        s = Solution(rng.integers(0, 3, (3, 3)), rng.integers(0, 3, (3, 3)))
        ok = bool(check_ybe(s))
        assert ok == O.naive_ybe(s.first.tolist(), s.second.tolist())
        verdicts.append(ok)
    assert not all(verdicts)


def test_constant_map_degenerate():
    s = Solution.from_function(2, lambda x, y: (0, x))
    assert check_nondegenerate_involutive(s) == (False, False)


def test_canonical_examples(TZ4, B4, OpS3):
    s = canonical_solution(TZ4)
    f = flip(4)
    assert (s.first == f.first).all() and (s.second == f.second).all()
    assert check_ybe(canonical_solution(B4))
    assert check_nondegenerate_involutive(canonical_solution(B4)) == (True, True)
    assert check_nondegenerate_involutive(canonical_solution(OpS3)) == (True, False)


def test_canonical_all_corpus(corpus):
    for B in corpus:
        s = canonical_solution(B)
        assert check_ybe(s)
        nondeg, invol = check_nondegenerate_involutive(s)
        assert nondeg
        if B.add.is_abelian:
            assert invol
        if B.order <= 8:
            assert O.naive_ybe(s.first.tolist(), s.second.tolist())


def test_solution_validation():
    with pytest.raises(ValueError):
        Solution(np.zeros((2, 3)), np.zeros((2, 3)))
    with pytest.raises(ValueError):
        Solution(np.full((2, 2), 2), np.zeros((2, 2)))
    s = flip(3)
    assert s(1, 2) == (2, 1)
    assert (s.tau == s.second.T).all()
