"""Central and star series, and the nilpotency verdicts built on them.

Indexing: ``upper_zeta`` and ``lower_gamma`` stages start at index 0
(``zeta_0 = 0``, ``Gamma_0 = I``). Star series start at exponent 1
(``stages[0]`` is ``A^1 = A``) and their ``class_index`` is the exponent
``n`` of the first vanishing term ``A^n = 0``. Every stage list ends with a
repeated stage, which is how stabilization is detected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace
from .errors import InternalInconsistency
from .groups import ElementSet, closure, group_nilpotency_class
from .substructures import is_ideal, quotient_brace, star_product, zeta

KINDS = ("upper_zeta", "lower_gamma", "left_star", "right_star", "mixed_star")


@dataclass
class SeriesReport:
    kind: str
    stages: list[ElementSet]
    stabilized: bool = True
    class_index: int | None = None
    offset: int = 0  # index of stages[0] in the usual numbering

    def stage(self, i: int) -> ElementSet:
        """Stage with index ``i``, continued constantly past stabilization."""
        k = i - self.offset
        if k < 0:
            raise IndexError(i)
        return self.stages[min(k, len(self.stages) - 1)]

    @property
    def limit(self) -> ElementSet:
        return self.stages[-1]

    def sizes(self) -> list[int]:
        return [len(s) for s in self.stages]


def _first(stages, target, offset):
    for i, s in enumerate(stages):
        if s == target:
            return i + offset
    return None


def upper_central_series(B: SkewBrace, *, cross_check: bool = True) -> SeriesReport:
    """``zeta_0 = 0`` and ``zeta_n`` = all x with x*y, y*x, [x,y] in ``zeta_{n-1}``.

    With ``cross_check`` every stage is checked to be an ideal and the quotient
    step ``zeta_{n+1}/zeta_n = zeta(A/zeta_n)`` is recomputed independently.
    """
    stages = [B.zero()]
    while True:
        m = stages[-1].mask
        nxt = m[B.star].all(axis=1) & m[B.star].all(axis=0) & m[B.bracket].all(axis=1)
        nxt = ElementSet.from_mask(nxt)
        if cross_check:
            cur = stages[-1]
            if not is_ideal(B, cur):
                raise InternalInconsistency(f"zeta_{len(stages) - 1} is not an ideal", witness=cur)
            Q, proj = quotient_brace(B, cur)
            zq = zeta(Q).mask
            if ElementSet.from_mask(zq[proj]) != nxt:
                raise InternalInconsistency(
                    f"zeta_{len(stages)}/zeta_{len(stages) - 1} differs from the center of the quotient")
        stages.append(nxt)
        if nxt == stages[-2]:
            break
    return SeriesReport("upper_zeta", stages, True, _first(stages, B.whole(), 0))


def lower_central_series(B: SkewBrace, I: ElementSet | None = None) -> SeriesReport:
    """``Gamma_0 = I``; ``Gamma_n`` generated by ``Gamma*A``, ``A*Gamma`` and ``[Gamma, A]_+``."""
    if I is None:
        I = B.whole()
    stages = [I]
    while True:
        g = stages[-1].array
        vals = np.concatenate([B.star[g, :].ravel(), B.star[:, g].ravel(), B.bracket[g, :].ravel()])
        nxt = ElementSet.from_mask(closure(B.add.op, vals))
        stages.append(nxt)
        if nxt == stages[-2]:
            break
    return SeriesReport("lower_gamma", stages, True, _first(stages, B.zero(), 0))


def left_star_series(B: SkewBrace) -> SeriesReport:
    A = B.whole()
    stages = [A]
    while True:
        stages.append(star_product(B, A, stages[-1]))
        if stages[-1] == stages[-2]:
            break
    return SeriesReport("left_star", stages, True, _first(stages, B.zero(), 1), offset=1)


def right_star_series(B: SkewBrace) -> SeriesReport:
    A = B.whole()
    stages = [A]
    while True:
        stages.append(star_product(B, stages[-1], A))
        if stages[-1] == stages[-2]:
            break
    return SeriesReport("right_star", stages, True, _first(stages, B.zero(), 1), offset=1)


def mixed_star_series(B: SkewBrace) -> SeriesReport:
    """``A^[n+1]`` generated by all ``A^[i] * A^[n+1-i]``.

    A term depends on all earlier ones, so one repetition is not enough.
    Once ``A^[m] = ... = A^[2m]`` every later term is generated by the same
    products, and the sequence is constant from there on.
    """
    stages = [B.whole()]  # stages[k] = A^[k+1]
    cache: dict[tuple, ElementSet] = {}

    def prod(S, T):
        key = (S.members, T.members)
        if key not in cache:
            cache[key] = star_product(B, S, T)
        return cache[key]

    plateau_start = 1
    while True:
        n = len(stages)  # computing A^[n+1]
        vals = [0]
        for i in range(1, n + 1):
            vals.extend(prod(stages[i - 1], stages[n - i]).members)
        nxt = ElementSet.from_mask(closure(B.add.op, vals))
        if nxt != stages[-1]:
            plateau_start = n + 1
        stages.append(nxt)
        if n + 1 >= 2 * plateau_start and len(stages) >= 2 and stages[-1] == stages[-2]:
            break
    # keep the report compact: drop the redundant tail of the plateau
    first = plateau_start - 1
    stages = stages[:first + 2]
    return SeriesReport("mixed_star", stages, True, _first(stages, B.zero(), 1), offset=1)


def star_series(B: SkewBrace) -> tuple[SeriesReport, SeriesReport, SeriesReport]:
    return left_star_series(B), right_star_series(B), mixed_star_series(B)


def series(B: SkewBrace, kind: str) -> SeriesReport:
    fns = {
        "upper_zeta": upper_central_series,
        "lower_gamma": lower_central_series,
        "left_star": left_star_series,
        "right_star": right_star_series,
        "mixed_star": mixed_star_series,
    }
    if kind not in fns:
        raise ValueError(f"unknown series {kind!r}; expected one of {', '.join(KINDS)}")
    return fns[kind](B)


@dataclass
class NilpotencyReport:
    centrally_nilpotent_class: int | None
    left_star_class: int | None
    right_star_class: int | None
    mixed_star_class: int | None
    add_group_class: int | None
    circ_group_class: int | None
    nilpotent_type: bool
    circ_nilpotent: bool
    finite_case: tuple[bool, bool, bool] = field(default=(False, False, False))

    @property
    def centrally_nilpotent(self) -> bool:
        return self.centrally_nilpotent_class is not None

    @property
    def star_nilpotent(self) -> bool:
        return self.left_star_class is not None and self.right_star_class is not None


def nilpotency_report(B: SkewBrace, *, upper: SeriesReport | None = None,
                      gamma: SeriesReport | None = None) -> NilpotencyReport:
    """All nilpotency classes, with the equivalence theorems enforced.

    Raises :class:`InternalInconsistency` if the class read off the upper
    series differs from the one read off the lower series, if the three
    finite-case conditions disagree, or if ``Gamma_n <= zeta_k`` and
    ``A <= zeta_{n+k}`` disagree for some n, k.
    """
    upper = upper or upper_central_series(B)
    gamma = gamma or lower_central_series(B)
    left, right, mixed = star_series(B)
    if upper.class_index != gamma.class_index:
        raise InternalInconsistency(
            f"class from zeta ({upper.class_index}) != class from Gamma ({gamma.class_index})")
    A = B.whole()
    horizon = max(len(upper.stages), len(gamma.stages)) + 1
    for n in range(horizon):
        for k in range(horizon):
            if (gamma.stage(n) <= upper.stage(k)) != (A <= upper.stage(n + k)):
                raise InternalInconsistency(f"Gamma/zeta containment fails at n={n}, k={k}",
                                            witness=(n, k))
    add_cls = group_nilpotency_class(B.add)
    circ_cls = group_nilpotency_class(B.circ)
    nil_type = add_cls is not None
    circ_nil = circ_cls is not None
    cond_i = left.class_index is not None and right.class_index is not None and nil_type
    cond_ii = right.class_index is not None and nil_type and circ_nil
    cond_iii = upper.class_index is not None
    if not cond_i == cond_ii == cond_iii:
        raise InternalInconsistency(f"finite-case conditions disagree: {(cond_i, cond_ii, cond_iii)}")
    return NilpotencyReport(
        centrally_nilpotent_class=upper.class_index,
        left_star_class=left.class_index,
        right_star_class=right.class_index,
        mixed_star_class=mixed.class_index,
        add_group_class=add_cls,
        circ_group_class=circ_cls,
        nilpotent_type=nil_type,
        circ_nilpotent=circ_nil,
        finite_case=(cond_i, cond_ii, cond_iii),
    )
