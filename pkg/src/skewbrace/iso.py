"""Backtracking search for structure-preserving bijections between table algebras."""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .groups import generating_set


def _extend(op1, op2, gens, images, n):
    """Extend ``gens[i] -> images[i]`` to a hom on the generated subgroup, or None."""
    img = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    img[0] = 0
    used[0] = True
    queue = [0]
    while queue:
        d = queue.pop()
        for g, h in zip(gens, images):
            e = op1[d, g]
            im = op2[img[d], h]
            if img[e] < 0:
                if used[im]:
                    return None
                img[e] = im
                used[im] = True
                queue.append(int(e))
            elif img[e] != im:
                return None
    return img


def _partial_ok(tables1, tables2, img) -> bool:
    dom = np.flatnonzero(img >= 0)
    for t1, t2 in zip(tables1, tables2):
        prod = t1[np.ix_(dom, dom)]
        known = img[prod] >= 0
        lhs = img[prod][known]
        rhs = t2[np.ix_(img[dom], img[dom])][known]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def isomorphisms(tables1: Sequence[np.ndarray], tables2: Sequence[np.ndarray],
                 inv1: np.ndarray, inv2: np.ndarray) -> Iterator[np.ndarray]:
    """Yield every bijection ``f`` with ``f[t1[a,b]] = t2[f[a], f[b]]`` for all tables.

    The first table of each side must be a group table (identity 0); its
    generators drive the search and the others are checked as the map grows.
    ``inv1``/``inv2`` are per-element invariant rows: images must match them.
    """
    n = tables1[0].shape[0]
    if tables2[0].shape[0] != n:
        return
    if sorted(map(tuple, inv1)) != sorted(map(tuple, inv2)):
        return
    gens = generating_set(tables1[0])
    key2 = {}
    for y in range(n):
        key2.setdefault(tuple(inv2[y]), []).append(y)
    candidates = [key2.get(tuple(inv1[g]), []) for g in gens]

    def search(i, chosen):
        img = _extend(tables1[0], tables2[0], gens[:i], chosen, n)
        if img is None or not _partial_ok(tables1[1:], tables2[1:], img):
            return
        if i == len(gens):
            if (img >= 0).all():
                yield img
            return
        for h in candidates[i]:
            if h in chosen:
                continue
            yield from search(i + 1, chosen + [h])

    yield from search(0, [])


def first_isomorphism(tables1, tables2, inv1, inv2) -> np.ndarray | None:
    return next(isomorphisms(tables1, tables2, inv1, inv2), None)
