"""Set-theoretic solutions of the Yang-Baxter equation on finite sets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace
from .errors import InternalInconsistency


@dataclass
class Solution:
    """``r(x, y) = (first[x, y], second[x, y])`` on ``0..n-1``.

    ``sigma[x, y] = first[x, y]`` and ``tau[y, x] = second[x, y]``.
    """

    first: np.ndarray
    second: np.ndarray

    def __post_init__(self):
        self.first = np.asarray(self.first, dtype=np.int64)
        self.second = np.asarray(self.second, dtype=np.int64)
        n = self.first.shape[0]
        if self.first.shape != (n, n) or self.second.shape != (n, n):
            raise ValueError("r must be given by two n x n tables")
        if n and (min(self.first.min(), self.second.min()) < 0
                  or max(self.first.max(), self.second.max()) >= n):
            raise ValueError("r takes values outside the set")

    @property
    def size(self) -> int:
        return self.first.shape[0]

    @property
    def sigma(self) -> np.ndarray:
        return self.first

    @property
    def tau(self) -> np.ndarray:
        return self.second.T

    @classmethod
    def from_function(cls, n: int, r) -> Solution:
        first = np.empty((n, n), dtype=np.int64)
        second = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(n):
                first[x, y], second[x, y] = r(x, y)
        return cls(first, second)

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return int(self.first[x, y]), int(self.second[x, y])


def flip(n: int) -> Solution:
    ar = np.arange(n)
    return Solution(np.broadcast_to(ar[None, :], (n, n)).copy(),
                    np.broadcast_to(ar[:, None], (n, n)).copy())


@dataclass
class YBECheck:
    holds: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.holds


def check_ybe(s: Solution) -> YBECheck:
    """Compare ``r12 r23 r12`` with ``r23 r12 r23`` on every triple."""
    n = s.size
    f, g = s.first, s.second
    x = np.broadcast_to(np.arange(n)[:, None, None], (n, n, n))
    y = np.broadcast_to(np.arange(n)[None, :, None], (n, n, n))
    z = np.broadcast_to(np.arange(n)[None, None, :], (n, n, n))

    def r12(a, b, c):
        return f[a, b], g[a, b], c

    def r23(a, b, c):
        return a, f[b, c], g[b, c]

    lhs = r12(*r23(*r12(x, y, z)))
    rhs = r23(*r12(*r23(x, y, z)))
    bad = np.zeros((n, n, n), dtype=bool)
    for u, v in zip(lhs, rhs):
        bad |= u != v
    hits = np.argwhere(bad)
    if len(hits):
        return YBECheck(False, tuple(int(i) for i in hits[0]))
    return YBECheck(True)


def _is_perm_rows(t: np.ndarray) -> bool:
    return bool((np.sort(t, axis=1) == np.arange(t.shape[1])[None, :]).all())


def check_nondegenerate_involutive(s: Solution) -> tuple[bool, bool]:
    nondeg = _is_perm_rows(s.sigma) and _is_perm_rows(s.tau)
    f, g = s.first, s.second
    involutive = bool((f[f, g] == np.arange(s.size)[:, None]).all()
                      and (g[f, g] == np.arange(s.size)[None, :]).all())
    return nondeg, involutive


def canonical_solution(B: SkewBrace) -> Solution:
    """``r(x, y) = (lambda_x(y), bar(lambda_x(y)) o x o y)``, checked before returning."""
    n = B.order
    lam = B.lam
    circ = B.circ.op
    xy = circ[np.arange(n)[:, None], np.arange(n)[None, :]]
    second = circ[B.bar[lam], xy]
    s = Solution(lam.copy(), second)
    res = check_ybe(s)
    if not res:
        raise InternalInconsistency("canonical solution fails YBE", witness=res.witness)
    if not check_nondegenerate_involutive(s)[0]:
        raise InternalInconsistency("canonical solution is degenerate")
    return s
