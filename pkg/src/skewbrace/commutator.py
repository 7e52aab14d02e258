"""The term-condition commutator of ideals and the checks built on it.

Skew braces are expanded groups, so the variety is Mal'cev and the commutator
``[I, J]`` can be computed from a congruence on the algebra of pairs

    P = {(x, y) : -x + y in J}

generated by identifying the diagonal elements ``(a, a)`` and ``(b, b)``
whenever ``-a + b`` lies in I. The commutator is read off as all ``-y + x``
with ``(x, y)`` congruent to ``(y, y)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace
from .errors import InternalInconsistency
from .groups import ElementSet, commutator_table, closure
from .substructures import (
    all_ideals,
    distinguished_sets,
    ideal_closure,
    is_ideal,
    require_ideal,
    star_product,
    sumset,
)


class PairAlgebra:
    """Subalgebra ``{(x, y) : -x + y in J}`` of ``A x A`` with componentwise operations.

    Pair ``(x, y)`` gets index ``p``; ``first[p]``, ``second[p]`` recover it and
    ``code[x, y]`` maps back (``-1`` outside the universe).
    """

    def __init__(self, B: SkewBrace, J: ElementSet):
        self.brace = B
        self.J = J
        n = B.order
        x = np.repeat(np.arange(n), len(J))
        y = B.add.op[x, np.tile(J.array, n)]
        order = np.lexsort((y, x))
        self.first = x[order]
        self.second = y[order]
        self.code = np.full((n, n), -1, dtype=np.int64)
        self.code[self.first, self.second] = np.arange(len(self.first))
        self.size = len(self.first)
        self.zero_index = int(self.code[0, 0])

    def _pairwise(self, table, p, q):
        f, s = self.first, self.second
        return self.code[table[f[p], f[q]], table[s[p], s[q]]]

    def add(self, p, q):
        return self._pairwise(self.brace.add.op, p, q)

    def circ(self, p, q):
        return self._pairwise(self.brace.circ.op, p, q)

    def neg(self, p):
        B = self.brace
        return self.code[B.neg[self.first[p]], B.neg[self.second[p]]]

    def bar(self, p):
        B = self.brace
        return self.code[B.bar[self.first[p]], B.bar[self.second[p]]]

    def diagonal(self, a):
        return self.code[a, a]

    def verify_closed(self) -> None:
        p = np.arange(self.size)
        for name, img in (("+", self.add(p[:, None], p[None, :])),
                          ("o", self.circ(p[:, None], p[None, :])),
                          ("-", self.neg(p)), ("bar", self.bar(p))):
            if (img < 0).any():
                raise InternalInconsistency(f"pair algebra not closed under {name}")


@dataclass
class Partition:
    """Equivalence on ``0..size-1`` given by a class id per element."""

    labels: np.ndarray

    @property
    def size(self) -> int:
        return len(self.labels)

    def same(self, u, v):
        return self.labels[u] == self.labels[v]

    def classes(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.labels):
            out.setdefault(int(c), []).append(i)
        return sorted(tuple(v) for v in out.values())


class _BraceOps:
    """Adapter giving a brace the same vectorized interface as PairAlgebra."""

    def __init__(self, B: SkewBrace):
        self.brace = B
        self.size = B.order

    def add(self, p, q):
        return self.brace.add.op[p, q]

    def circ(self, p, q):
        return self.brace.circ.op[p, q]

    def neg(self, p):
        return self.brace.neg[p]

    def bar(self, p):
        return self.brace.bar[p]


def congruence_generated(alg, pairs) -> Partition:
    """Least congruence of ``alg`` (a SkewBrace or PairAlgebra) containing ``pairs``.

    Union-find over merge edges: every edge ``(u, v)`` that joins two classes
    is pushed through all basic translations ``w + _``, ``_ + w``, ``w o _``,
    ``_ o w``, ``-_`` and ``bar _``; the images become new candidate pairs.
    """
    ops = _BraceOps(alg) if isinstance(alg, SkewBrace) else alg
    size = ops.size
    labels = np.arange(size)
    members: dict[int, list[int]] = {i: [i] for i in range(size)}
    queue: list[tuple[int, int]] = []

    def merge(u, v):
        a, b = int(labels[u]), int(labels[v])
        if a == b:
            return
        if len(members[a]) < len(members[b]):
            a, b = b, a
        moved = members.pop(b)
        labels[moved] = a
        members[a].extend(moved)
        queue.append((int(u), int(v)))

    for u, v in pairs:
        merge(u, v)
    w = np.arange(size)
    while queue:
        u, v = queue.pop()
        uu = np.array([u])
        vv = np.array([v])
        images = (
            (ops.add(w, uu), ops.add(w, vv)),
            (ops.add(uu, w), ops.add(vv, w)),
            (ops.circ(w, uu), ops.circ(w, vv)),
            (ops.circ(uu, w), ops.circ(vv, w)),
            (ops.neg(uu), ops.neg(vv)),
            (ops.bar(uu), ops.bar(vv)),
        )
        for left, right in images:
            diff = np.flatnonzero(labels[left] != labels[right])
            for i in diff:
                merge(left[i], right[i])
    return Partition(labels)


def smith_commutator(B: SkewBrace, I: ElementSet, J: ElementSet, *,
                     check_symmetry: bool = True) -> ElementSet:
    """Commutator ``[I, J]`` of two ideals.

    The result is checked to be an ideal inside ``I & J``; with
    ``check_symmetry`` it is recomputed with I and J swapped.
    """
    require_ideal(B, I, "left argument")
    require_ideal(B, J, "right argument")
    result = _delta_commutator(B, I, J)
    if not is_ideal(B, result) or not result <= (I & J):
        raise InternalInconsistency(f"commutator {result} is not an ideal inside I & J")
    if check_symmetry:
        other = _delta_commutator(B, J, I)
        if other != result:
            raise InternalInconsistency(f"[I,J]={result} but [J,I]={other}", witness=(I, J))
    return result


def _delta_commutator(B: SkewBrace, I: ElementSet, J: ElementSet) -> ElementSet:
    if I.is_trivial() or J.is_trivial():
        return B.zero()
    P = PairAlgebra(B, J)
    n = B.order
    a = np.repeat(np.arange(n), len(I))
    b = B.add.op[a, np.tile(I.array, n)]
    pairs = zip(P.diagonal(a).tolist(), P.diagonal(b).tolist())
    delta = congruence_generated(P, pairs)
    x, y = P.first, P.second
    hit = delta.labels == delta.labels[P.diagonal(y)]
    vals = B.add.op[B.neg[y[hit]], x[hit]]
    return ElementSet.of(n, vals.tolist())


def is_central_ideal(B: SkewBrace, I: ElementSet) -> bool:
    require_ideal(B, I)
    return smith_commutator(B, B.whole(), I).is_trivial()


def is_abelian_brace(B: SkewBrace) -> bool:
    """All three descriptions of an abelian brace, which must agree."""
    A = B.whole()
    by_commutator = smith_commutator(B, A, A).is_trivial()
    by_groups = bool(np.array_equal(B.add.op, B.circ.op) and B.add.is_abelian)
    by_products = star_product(B, A, A).is_trivial() and bool((B.bracket == 0).all())
    if not by_commutator == by_groups == by_products:
        raise InternalInconsistency(
            f"abelianness criteria disagree: {(by_commutator, by_groups, by_products)}")
    return by_commutator


@dataclass
class AbsorbingBound:
    result: ElementSet
    functions: int
    absorbing: int
    capped: bool


def absorbing_lower_bound(B: SkewBrace, I: ElementSet, J: ElementSet,
                          cap: int = 100_000) -> AbsorbingBound:
    """Values of binary absorbing polynomials on ``I x J``, closed to an ideal.

    Polynomials are generated as value tables from the projections and all
    constants under pointwise ``+``, ``-``, ``o`` and ``bar``, stopping once
    ``cap`` distinct functions exist. A sound lower bound for the commutator.
    """
    n = B.order
    xs = np.repeat(np.arange(n), n)
    ys = np.tile(np.arange(n), n)
    seeds = [xs, ys] + [np.full(n * n, c) for c in range(n)]
    seen: dict[bytes, int] = {}
    funcs: list[np.ndarray] = []

    def push(f) -> bool:
        key = f.astype(np.int8 if n < 128 else np.int16).tobytes()
        if key in seen:
            return False
        seen[key] = len(funcs)
        funcs.append(f)
        return True

    for f in seeds:
        push(f)
    capped = False
    frontier = list(range(len(funcs)))
    while frontier and not capped:
        new_start = len(funcs)
        old = np.array(funcs)
        for i in frontier:
            f = funcs[i]
            for g in (B.neg[f], B.bar[f]):
                push(g)
            for table in (B.add.op, B.circ.op):
                for block in (table[f[None, :], old], table[old, f[None, :]]):
                    for row in block:
                        push(row)
                        if len(funcs) >= cap:
                            capped = True
                            break
                    if capped:
                        break
                if capped:
                    break
            if capped:
                break
        frontier = list(range(new_start, len(funcs)))
    F = np.array(funcs)
    Fm = F.reshape(len(F), n, n)
    absorbing = (Fm[:, 0, :] == 0).all(axis=1) & (Fm[:, :, 0] == 0).all(axis=1)
    vals = Fm[absorbing][:, I.array][:, :, J.array].ravel()
    result = ideal_closure(B, np.unique(vals).tolist() or [0])
    return AbsorbingBound(result, len(funcs), int(absorbing.sum()), capped)


@dataclass
class PairVerdict:
    I: ElementSet
    J: ElementSet
    raw: ElementSet          # element-wise I*J + J*I + [I,J]_+
    lower: ElementSet        # least ideal containing raw
    upper: ElementSet        # the commutator
    raw_is_ideal: bool

    @property
    def lower_equals_upper(self) -> bool:
        return self.lower == self.upper

    @property
    def raw_equals_upper(self) -> bool:
        return self.raw == self.upper


@dataclass
class CommutatorConjectureReport:
    pairs: list[PairVerdict] = field(default_factory=list)

    @property
    def equality_holds(self) -> bool:
        return all(p.lower_equals_upper for p in self.pairs)

    @property
    def raw_equality_holds(self) -> bool:
        return all(p.raw_equals_upper for p in self.pairs)


def conjecture_commutator_equality(B: SkewBrace,
                                   ideals: list[ElementSet] | None = None) -> CommutatorConjectureReport:
    """Compare the commutator with the ideal generated by ``I*J + J*I + [I,J]_+``.

    The containment ``lower <= upper`` is a theorem and is enforced; equality
    is only observed and reported.
    """
    ideals = ideals if ideals is not None else all_ideals(B)
    report = CommutatorConjectureReport()
    comm_tab = commutator_table(B.add)
    cache: dict[tuple, ElementSet] = {}
    for I in ideals:
        for J in ideals:
            key = tuple(sorted([I.members, J.members]))
            if key not in cache:
                cache[key] = smith_commutator(B, I, J)
            upper = cache[key]
            brk = ElementSet.from_mask(closure(B.add.op, comm_tab[np.ix_(I.array, J.array)].ravel()))
            raw = sumset(B, star_product(B, I, J), star_product(B, J, I), brk)
            lower = ideal_closure(B, raw)
            if not lower <= upper:
                raise InternalInconsistency(
                    f"ideal generated by I*J+J*I+[I,J] = {lower} is not inside [I,J] = {upper}",
                    witness=(I, J))
            report.pairs.append(PairVerdict(I, J, raw, lower, upper, is_ideal(B, raw)))
    return report


def largest_central_ideal(B: SkewBrace, ideals: list[ElementSet] | None = None) -> ElementSet:
    ideals = ideals if ideals is not None else all_ideals(B)
    central = [I for I in ideals if is_central_ideal(B, I)]
    join = ideal_closure(B, [x for I in central for x in I])
    z = distinguished_sets(B).zeta
    if join != z:
        raise InternalInconsistency(f"largest central ideal {join} differs from the center {z}")
    return join
