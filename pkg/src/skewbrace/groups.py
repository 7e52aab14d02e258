"""Finite groups given by Cayley tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
Tables are read-only ``numpy`` integer arrays, so every group can be shared
freely between threads and processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    GroupInvalid,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotNormal,
    TooLarge,
)

MAX_ORDER = 64


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``range(parent_order)``, stored as a sorted tuple."""

    parent_order: int
    members: tuple[int, ...]

    def __post_init__(self):
        m = self.members
        if any(b <= a for a, b in zip(m, m[1:])):
            raise ValueError("members must be strictly increasing")
        if m and (m[0] < 0 or m[-1] >= self.parent_order):
            raise ValueError("member outside the carrier")

    @classmethod
    def of(cls, n: int, items: Iterable[int]) -> ElementSet:
        return cls(n, tuple(sorted({int(i) for i in items})))

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> ElementSet:
        return cls(len(mask), tuple(int(i) for i in np.flatnonzero(mask)))

    @classmethod
    def whole(cls, n: int) -> ElementSet:
        return cls(n, tuple(range(n)))

    @classmethod
    def zero(cls, n: int) -> ElementSet:
        return cls(n, (0,))

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent_order, dtype=bool)
        m[list(self.members)] = True
        return m

    @property
    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return int(x) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)

    def issubset(self, other: ElementSet) -> bool:
        return self._lookup <= other._lookup

    def __le__(self, other: ElementSet) -> bool:
        return self.issubset(other)

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet.of(self.parent_order, self._lookup & other._lookup)

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet.of(self.parent_order, self._lookup | other._lookup)

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def is_whole(self) -> bool:
        return len(self.members) == self.parent_order

    def __repr__(self):
        return f"ElementSet({self.parent_order}, {list(self.members)})"


class FiniteGroup:
    """A group on ``0..n-1`` with identity ``0``.

    Build instances through :func:`make_group` (validating) or the library
    constructors below. ``relabeling`` records the permutation ``old -> new``
    applied by :func:`make_group` when the input identity was not ``0``.
    """

    def __init__(self, op, inv=None, labels: Sequence | None = None, relabeling=None):
        self.op = _frozen(op)
        n = self.op.shape[0]
        if n > MAX_ORDER:
            raise TooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
        if inv is None:
            inv = np.argmax(self.op == 0, axis=1)
        self.inv = _frozen(inv)
        self.labels = tuple(labels) if labels is not None else None
        self.relabeling = tuple(relabeling) if relabeling is not None else None
        self._n = n

    @property
    def order(self) -> int:
        return self._n

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def label(self, a: int):
        return self.labels[a] if self.labels is not None else a

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.op, self.op.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self._n
        orders = np.ones(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        pending = cur != 0
        while pending.any():
            k += 1
            cur = self.op[cur, np.arange(n)]
            hit = pending & (cur == 0)
            orders[hit] = k
            pending &= ~hit
        orders[0] = 1
        return _frozen(orders)

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def whole(self) -> ElementSet:
        return ElementSet.whole(self._n)

    def __repr__(self):
        return f"FiniteGroup(order={self._n}, abelian={self.is_abelian})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.op, other.op)

    def __hash__(self):
        return hash(self.op.tobytes())


def _as_table(table) -> np.ndarray:
    try:
        a = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise GroupInvalid(f"table is not an integer matrix: {exc}") from None
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise GroupInvalid(f"table must be a non-empty square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if a.min() < 0 or a.max() >= n:
        bad = tuple(int(i) for i in np.argwhere((a < 0) | (a >= n))[0])
        raise GroupInvalid(f"entry at {bad} outside 0..{n - 1}", witness=bad)
    return a


def find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar):
            return e
    return None


def relabel_table(table: np.ndarray, perm: Sequence[int]) -> np.ndarray:
    """Transport ``table`` along the bijection ``old -> perm[old]``."""
    perm = np.asarray(perm)
    out = np.empty_like(table)
    out[np.ix_(perm, perm)] = perm[table]
    return out


def swap_to_zero(n: int, e: int) -> np.ndarray:
    perm = np.arange(n)
    perm[0], perm[e] = e, 0
    return perm


def associativity_witness(op: np.ndarray) -> tuple[int, int, int] | None:
    n = op.shape[0]
    lhs = op[op]  # [a,b,c] -> op[op[a,b], c]
    rhs = op[np.arange(n)[:, None, None], op[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(i) for i in bad[0])
    return None


def make_group(table, labels: Sequence | None = None) -> FiniteGroup:
    """Validate a Cayley table and return a :class:`FiniteGroup`.

    If the identity is not at index 0 it is swapped with 0; the permutation
    used is available as ``group.relabeling``.
    """
    a = _as_table(table)
    n = a.shape[0]
    e = find_identity(a)
    if e is None:
        raise NoIdentity("table has no two-sided identity")
    relabeling = None
    if e != 0:
        perm = swap_to_zero(n, e)
        a = relabel_table(a, perm)
        if labels is not None:
            labels = [labels[i] for i in np.argsort(perm)]
        relabeling = perm
    w = associativity_witness(a)
    if w is not None:
        x, y, z = w
        raise NotAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})", witness=w)
    inv = np.empty(n, dtype=np.int64)
    for x in range(n):
        right = np.flatnonzero(a[x] == 0)
        if len(right) != 1 or a[right[0], x] != 0:
            raise NoInverse(f"element {x} has no two-sided inverse", witness=x)
        inv[x] = right[0]
    return FiniteGroup(a, inv, labels=labels, relabeling=relabeling)


# ---------------------------------------------------------------- closures


def closure(op: np.ndarray, seeds: Iterable[int]) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``seeds`` under ``op``.

    Finite groups need no inverses for this: closing under right
    multiplication by the generators already gives the subgroup.
    """
    n = op.shape[0]
    gens = np.unique(np.fromiter((int(s) for s in seeds), dtype=np.int64))
    gens = gens[gens != 0]
    mask = np.zeros(n, dtype=bool)
    mask[0] = True
    if len(gens) == 0:
        return mask
    frontier = np.array([0], dtype=np.int64)
    while len(frontier):
        cand = np.unique(op[np.ix_(frontier, gens)].ravel())
        cand = cand[~mask[cand]]
        mask[cand] = True
        frontier = cand
    return mask


def subgroup_closure(G: FiniteGroup, gens: ElementSet | Iterable[int]) -> ElementSet:
    return ElementSet.from_mask(closure(G.op, gens))


def is_subgroup(G: FiniteGroup, S: ElementSet | Iterable[int]) -> bool:
    m = np.zeros(G.order, dtype=bool)
    m[list(S)] = True
    if not m[0]:
        return False
    idx = np.flatnonzero(m)
    return bool(m[G.op[np.ix_(idx, idx)]].all())


def is_normal_subgroup(G: FiniteGroup, S: ElementSet) -> bool:
    if not is_subgroup(G, S):
        raise NotASubgroup(f"{S} is not a subgroup")
    m = S.mask
    s = S.array
    g = np.arange(G.order)
    conj = G.op[G.op[g[:, None], s[None, :]], G.inv[g][:, None]]
    return bool(m[conj].all())


def quotient_group(G: FiniteGroup, N: ElementSet) -> tuple[FiniteGroup, np.ndarray]:
    """Quotient by a normal subgroup.

    Cosets are numbered in order of their least member, so the coset of 0
    gets index 0. Returns the quotient and the projection array.
    """
    if not is_normal_subgroup(G, N):
        raise NotNormal(f"{N} is not normal")
    n = G.order
    proj = np.full(n, -1, dtype=np.int64)
    reps = []
    s = N.array
    for x in range(n):
        if proj[x] < 0:
            proj[G.op[x, s]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    q = proj[G.op[np.ix_(reps, reps)]]
    return FiniteGroup(q), _frozen(proj)


def commutator(G: FiniteGroup, a: int, b: int) -> int:
    """``[a, b] = -a - b + a + b`` written multiplicatively as a^-1 b^-1 a b."""
    op, inv = G.op, G.inv
    return int(op[op[op[inv[a], inv[b]], a], b])


def commutator_table(G: FiniteGroup) -> np.ndarray:
    op, inv = G.op, G.inv
    return op[op[op[inv[:, None], inv[None, :]], np.arange(G.order)[:, None]], np.arange(G.order)[None, :]]


def group_commutator_set(G: FiniteGroup, S: ElementSet, T: ElementSet) -> ElementSet:
    if not len(S) or not len(T):
        return ElementSet.zero(G.order)
    vals = commutator_table(G)[np.ix_(S.array, T.array)]
    return subgroup_closure(G, vals.ravel())


def center(G: FiniteGroup) -> ElementSet:
    return ElementSet.from_mask((G.op == G.op.T).all(axis=1))


def lower_central_series(G: FiniteGroup) -> list[ElementSet]:
    stages = [G.whole()]
    while True:
        nxt = group_commutator_set(G, stages[-1], G.whole())
        if nxt == stages[-1]:
            return stages
        stages.append(nxt)


def group_nilpotency_class(G: FiniteGroup) -> int | None:
    """Length of the lower central series, or None if it stalls above {0}."""
    stages = lower_central_series(G)
    if not stages[-1].is_trivial():
        return None
    return len(stages) - 1


def generating_set(op: np.ndarray) -> list[int]:
    """Greedy generating set: each generator lies outside the span of the previous ones."""
    gens: list[int] = []
    mask = closure(op, gens)
    while not mask.all():
        # prefer an element of maximal order among those still missing
        g = int(np.flatnonzero(~mask)[-1])
        best, best_len = g, 0
        for cand in np.flatnonzero(~mask):
            size = int(closure(op, [int(cand)]).sum())
            if size > best_len:
                best, best_len = int(cand), size
        gens.append(best)
        mask = closure(op, gens)
    return gens


# ----------------------------------------------------------- group library


def cyclic_group(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; element ``(c0, c1, ...)`` has index ``c0 + n0*(c1 + n1*(...))``."""
    sizes = [g.order for g in groups]
    coords = list(itertools.product(*[range(s) for s in reversed(sizes)]))
    coords = [tuple(reversed(c)) for c in coords]
    strides = np.cumprod([1] + sizes[:-1])
    n = len(coords)
    C = np.array(coords, dtype=np.int64).reshape(n, len(groups))
    op = np.zeros((n, n), dtype=np.int64)
    for k, g in enumerate(groups):
        op += g.op[C[:, k][:, None], C[:, k][None, :]] * strides[k]
    return FiniteGroup(op, labels=coords)


def permutation_group(perms: Sequence[Sequence[int]]) -> FiniteGroup:
    """Group of permutations under composition ``(p*q)(i) = p(q(i))``.

    ``perms`` must be closed under composition; the identity is moved to index 0.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    ident = tuple(range(len(perms[0])))
    if ident not in index:
        raise GroupInvalid("permutation list lacks the identity")
    table = [[index[tuple(p[q[i]] for i in range(len(q)))] for q in perms] for p in perms]
    g = make_group(table, labels=perms)
    return g


def symmetric_group(k: int) -> FiniteGroup:
    return permutation_group(list(itertools.permutations(range(k))))


def generate_permutation_group(gens: Sequence[Sequence[int]]) -> FiniteGroup:
    d = len(gens[0])
    ident = tuple(range(d))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        p = elems[i]
        for g in gens:
            q = tuple(p[g[j]] for j in range(d))
            if q not in seen:
                seen.add(q)
                elems.append(q)
        i += 1
    return permutation_group(elems)


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of the regular ``m``-gon (order ``2m``)."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return generate_permutation_group([rot, ref])


def quaternion_group() -> FiniteGroup:
    """Q8 as a permutation group on 8 points (left regular representation)."""
    # elements: 1,i,j,k,-1,-i,-j,-k encoded as (sign, unit)
    units = "1ijk"
    mult = {
        ("1", u): (1, u) for u in units
    }
    mult.update({(u, "1"): (1, u) for u in units})
    mult.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })
    elems = [(s, u) for s in (1, -1) for u in units]

    def times(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    table = [[elems.index(times(a, b)) for b in elems] for a in elems]
    names = [("" if s == 1 else "-") + u for s, u in elems]
    return make_group(table, labels=names)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def subgroup_as_group(G: FiniteGroup, S: ElementSet) -> tuple[FiniteGroup, np.ndarray]:
    """The subgroup ``S`` as a standalone group on ``0..|S|-1``.

    Returns the group and the embedding array (new index -> element of G).
    """
    if not is_subgroup(G, S):
        raise NotASubgroup(f"{S} is not a subgroup")
    emb = S.array
    back = np.full(G.order, -1, dtype=np.int64)
    back[emb] = np.arange(len(emb))
    return FiniteGroup(back[G.op[np.ix_(emb, emb)]]), _frozen(emb)


BUILTIN_GROUPS = {
    "Z1": lambda: cyclic_group(1),
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
    "D4": lambda: dihedral_group(4),
    "D8": lambda: dihedral_group(4),
    "Q8": quaternion_group,
}


def builtin_group(name: str) -> FiniteGroup:
    """Resolve names like ``Z4``, ``Z2xZ2``, ``S3``, ``D4`` (order 8), ``Q8``."""
    parts = name.split("x")
    if len(parts) > 1:
        return direct_product(*[builtin_group(p) for p in parts])
    if name in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[name]()
    if name.startswith("Z") and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic_group(int(name[1:]))
    if name.startswith("Dih") and name[3:].isdigit():
        return dihedral_group(int(name[3:]))
    raise KeyError(f"unknown group name {name!r}")
