"""Enumerate all skew braces with a given additive group.

A brace with additive group G is the same thing as a map
``lambda: G -> Aut(G)`` with ``lambda_0 = id`` and
``lambda_{x + lambda_x(y)} = lambda_x lambda_y``; the multiplication is then
``x o y = x + lambda_x(y)``. The search assigns automorphisms element by
element and propagates the functional equation to force further values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace, make_brace
from .constructions import braces_isomorphic, element_invariants
from .errors import TooLarge
from .groups import FiniteGroup, associativity_witness
from .iso import isomorphisms


def automorphisms(G: FiniteGroup, max_order: int = 12) -> list[np.ndarray]:
    """All automorphisms as image arrays, identity first, then lexicographic."""
    if G.order > max_order:
        raise TooLarge(f"automorphism search limited to order {max_order}")
    inv = G.element_orders[:, None]
    auts = [tuple(int(v) for v in a) for a in isomorphisms([G.op], [G.op], inv, inv)]
    auts.sort()
    return [np.array(a, dtype=np.int64) for a in auts]


@dataclass
class BraceFamily:
    base_group: FiniteGroup
    braces: list[SkewBrace]
    iso_classes: list[int] = field(default_factory=list)   # representative indices
    class_of: list[int] = field(default_factory=list)      # brace index -> position in iso_classes

    def representatives(self) -> list[SkewBrace]:
        return [self.braces[i] for i in self.iso_classes]


def _lambda_maps(G: FiniteGroup, auts: list[np.ndarray]):
    n = G.order
    A = np.array(auts)
    k = len(auts)
    index = {a.tobytes(): i for i, a in enumerate(A)}
    comp = np.array([[index[A[i][A[j]].tobytes()] for j in range(k)] for i in range(k)])
    add = G.op

    def propagate(lam, pending):
        assigned = [x for x in range(n) if lam[x] >= 0]
        while pending:
            x = pending.pop()
            for y in assigned:
                for u, v in ((x, y), (y, x)):
                    z = add[u, A[lam[u], v]]
                    need = comp[lam[u], lam[v]]
                    if lam[z] < 0:
                        lam[z] = need
                        pending.append(int(z))
                        assigned.append(int(z))
                    elif lam[z] != need:
                        return False
            if x not in assigned:
                assigned.append(x)
        return True

    def search(lam):
        free = np.flatnonzero(lam < 0)
        if not len(free):
            yield lam.copy()
            return
        x = int(free[0])
        for a in range(k):
            trial = lam.copy()
            trial[x] = a
            if propagate(trial, [x]):
                yield from search(trial)

    root = np.full(n, -1, dtype=np.int64)
    root[0] = 0  # identity automorphism
    if propagate(root, [0]):
        for lam in search(root):
            yield A[lam]


def enumerate_braces_on(G: FiniteGroup, max_order: int = 8) -> BraceFamily:
    """Every brace (as a pair of tables) whose additive group is exactly ``G``."""
    if G.order > max_order:
        raise TooLarge(f"exhaustive enumeration limited to order {max_order}")
    auts = automorphisms(G, max_order=max(max_order, 12))
    n = G.order
    braces = []
    seen = set()
    for lam in _lambda_maps(G, auts):
        circ = G.op[np.arange(n)[:, None], lam]   # x + lambda_x(y)
        key = circ.tobytes()
        if key in seen:
            continue
        seen.add(key)
        braces.append(make_brace(G, circ, labels=G.labels))
    braces.sort(key=_table_key)
    return BraceFamily(G, braces)


def _table_key(B: SkewBrace):
    return tuple(B.add.op.ravel()) + tuple(B.circ.op.ravel())


def _group_tables(n: int):
    """All group tables on ``0..n-1`` with identity 0 (reduced Latin squares, then associativity)."""
    t = np.full((n, n), -1, dtype=np.int64)
    t[0] = np.arange(n)
    t[:, 0] = np.arange(n)
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def fill(c):
        if c == len(cells):
            if associativity_witness(t) is None:
                yield t.copy()
            return
        i, j = cells[c]
        row = set(t[i, :j].tolist())
        col = set(t[:i, j].tolist())
        for v in range(n):
            if v not in row and v not in col:
                t[i, j] = v
                yield from fill(c + 1)
        t[i, j] = -1

    yield from fill(0)


def brute_force_braces_on(G: FiniteGroup, max_order: int = 6) -> list[np.ndarray]:
    """Oracle: every group table on the carrier that forms a brace with ``G``."""
    if G.order > max_order:
        raise TooLarge(f"brute force limited to order {max_order}")
    n = G.order
    add, neg = G.op, G.inv
    x = np.arange(n)[:, None, None]
    out = []
    for circ in _group_tables(n):
        lhs = circ[x, add[None, :, :]]
        rhs = add[add[circ, neg[:, None]][:, :, None], circ[:, None, :]]
        if (lhs == rhs).all():
            out.append(circ)
    return out


def _signature(B: SkewBrace):
    inv = element_invariants(B)
    return tuple(sorted(map(tuple, inv.tolist())))


def classify_up_to_iso(family: BraceFamily) -> BraceFamily:
    """Fill ``iso_classes``; each representative is the least (add, circ) pair in its class."""
    order = sorted(range(len(family.braces)), key=lambda i: _table_key(family.braces[i]))
    reps: list[int] = []
    by_sig: dict[tuple, list[int]] = {}
    class_of = [-1] * len(family.braces)
    for i in order:
        B = family.braces[i]
        sig = _signature(B)
        bucket = by_sig.setdefault(sig, [])
        for r in bucket:
            if braces_isomorphic(family.braces[reps[r]], B) is not None:
                class_of[i] = r
                break
        else:
            class_of[i] = len(reps)
            bucket.append(len(reps))
            reps.append(i)
    return BraceFamily(family.base_group, family.braces, reps, class_of)
