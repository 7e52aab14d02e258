"""Distinguished left ideals, ideal tests, star products and ideal enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .brace import SkewBrace, make_brace
from .errors import InternalInconsistency, NotAnIdeal
from .groups import ElementSet, FiniteGroup, center, closure, is_subgroup


@dataclass(frozen=True)
class DistinguishedSets:
    fix: ElementSet
    ker_lambda: ElementSet
    soc: ElementSet
    zeta: ElementSet


def distinguished_sets(B: SkewBrace) -> DistinguishedSets:
    n = B.order
    ar = np.arange(n)
    fix = (B.lam == ar[None, :]).all(axis=0)
    ker = (B.lam == ar[None, :]).all(axis=1)
    zadd = center(B.add).mask
    soc = ker & zadd
    zeta = soc & fix
    # element-wise descriptions of the center
    by_star = ((B.star == 0).all(axis=1) & (B.star == 0).all(axis=0)
               & (B.bracket == 0).all(axis=1))
    by_ops = ((B.add.op == B.add.op.T) & (B.add.op == B.circ.op)
              & (B.add.op == B.circ.op.T)).all(axis=1)
    if not (np.array_equal(zeta, by_star) and np.array_equal(zeta, by_ops)):
        raise InternalInconsistency("center: Soc & Fix differs from its element-wise description")
    return DistinguishedSets(ElementSet.from_mask(fix), ElementSet.from_mask(ker),
                             ElementSet.from_mask(soc), ElementSet.from_mask(zeta))


def zeta(B: SkewBrace) -> ElementSet:
    return distinguished_sets(B).zeta


def is_left_ideal(B: SkewBrace, S: ElementSet) -> bool:
    if not is_subgroup(B.add, S):
        return False
    m = S.mask
    return bool(m[B.lam[:, S.array]].all())


def _is_normal(G: FiniteGroup, S: ElementSet) -> bool:
    s = S.array
    g = np.arange(G.order)[:, None]
    return bool(S.mask[G.op[G.op[g, s[None, :]], G.inv[g]]].all())


def _ideal_direct(B: SkewBrace, S: ElementSet) -> bool:
    return (is_subgroup(B.add, S) and is_subgroup(B.circ, S)
            and _is_normal(B.add, S) and _is_normal(B.circ, S)
            and bool(S.mask[B.lam[:, S.array]].all()))


def _ideal_by_bracket(B: SkewBrace, S: ElementSet) -> bool:
    if not (is_subgroup(B.add, S) and _is_normal(B.add, S)):
        return False
    m, s = S.mask, S.array
    return bool(m[B.star[s, :]].all() and m[B.star[:, s]].all())


def is_ideal(B: SkewBrace, S: ElementSet) -> bool:
    """Ideal test, cross-checked against the star-bracket characterization."""
    direct = _ideal_direct(B, S)
    if direct != _ideal_by_bracket(B, S):
        raise InternalInconsistency(f"ideal criteria disagree on {S}", witness=S)
    return direct


def require_ideal(B: SkewBrace, S: ElementSet, what: str = "set") -> None:
    if not is_ideal(B, S):
        raise NotAnIdeal(f"{what} {S} is not an ideal", witness=S)


def star_product(B: SkewBrace, I: ElementSet, J: ElementSet) -> ElementSet:
    """``I*J``: additive subgroup generated by all ``i*j``."""
    if not len(I) or not len(J):
        return B.zero()
    return ElementSet.from_mask(closure(B.add.op, B.star[np.ix_(I.array, J.array)].ravel()))


def sumset(B: SkewBrace, *sets: ElementSet) -> ElementSet:
    """Element-wise sum ``S1 + S2 + ...`` (no closure)."""
    acc = np.array([0], dtype=np.int64)
    for S in sets:
        acc = np.unique(B.add.op[np.ix_(acc, S.array)].ravel())
    return ElementSet(B.order, tuple(int(a) for a in acc))


def sum_of_left_ideals(B: SkewBrace, S: ElementSet, T: ElementSet, *,
                       assert_sumset: bool = False) -> ElementSet:
    """Additive closure of ``S | T``.

    With ``assert_sumset`` the element-wise sum ``S + T`` must already be
    that closure; this holds when S and T are ``I*J`` and ``J*I`` for ideals.
    """
    joined = ElementSet.from_mask(closure(B.add.op, list(S) + list(T)))
    if assert_sumset and sumset(B, S, T) != joined:
        raise InternalInconsistency("S + T is not a subgroup", witness=(S, T))
    return joined


def star_sum(B: SkewBrace, I: ElementSet, J: ElementSet) -> ElementSet:
    """``I*J + J*I`` for ideals I, J."""
    return sum_of_left_ideals(B, star_product(B, I, J), star_product(B, J, I),
                              assert_sumset=True)


def ideal_closure(B: SkewBrace, S: Iterable[int]) -> ElementSet:
    """Least ideal containing ``S``."""
    add, circ, lam = B.add.op, B.circ.op, B.lam
    ag = np.array(B.add_generators, dtype=np.int64)
    cg = np.array(B.circ_generators, dtype=np.int64)
    mask = closure(add, S)
    while True:
        e = np.flatnonzero(mask)
        images = [
            lam[np.ix_(cg, e)].ravel(),
            add[add[ag[:, None], e[None, :]], B.neg[ag][:, None]].ravel(),
            circ[circ[cg[:, None], e[None, :]], B.bar[cg][:, None]].ravel(),
        ]
        new = np.unique(np.concatenate(images))
        new = new[~mask[new]]
        if not len(new):
            return ElementSet.from_mask(mask)
        mask = closure(add, np.concatenate([e, new]))


def all_ideals(B: SkewBrace) -> list[ElementSet]:
    """Every ideal, sorted by size then members.

    Each ideal is a join of principal ideals, so joining the known ideals with
    the principal ones until nothing new appears is complete.
    """
    principal = {ideal_closure(B, [x]) for x in range(B.order)}
    found = set(principal)
    frontier = list(principal)
    principal = sorted(principal, key=lambda s: (len(s), s.members))
    while frontier:
        nxt = []
        for I in frontier:
            for P in principal:
                if P <= I:
                    continue
                J = ideal_closure(B, list(I) + list(P))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s.members))


def quotient_brace(B: SkewBrace, I: ElementSet) -> tuple[SkewBrace, np.ndarray]:
    """``B/I`` for an ideal I; cosets are numbered by least member."""
    require_ideal(B, I)
    n = B.order
    proj = np.full(n, -1, dtype=np.int64)
    reps = []
    s = I.array
    for x in range(n):
        if proj[x] < 0:
            proj[B.add.op[x, s]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    qa = proj[B.add.op[np.ix_(reps, reps)]]
    qc = proj[B.circ.op[np.ix_(reps, reps)]]
    # x o I = x + I for ideals, so circ must respect the same partition
    if not np.array_equal(proj[B.circ.op[np.ix_(np.arange(n), s)]],
                          np.repeat(proj[:, None], len(s), axis=1)):
        raise InternalInconsistency("additive and multiplicative cosets differ")
    Q = make_brace(qa, qc)
    proj.setflags(write=False)
    return Q, proj
