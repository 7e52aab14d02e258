"""Skew braces as pairs of Cayley tables on a shared carrier."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import AxiomFails, InternalInconsistency, MismatchedIdentity, NoIdentity
from .groups import (
    ElementSet,
    FiniteGroup,
    _as_table,
    commutator_table,
    find_identity,
    generating_set,
    make_group,
    relabel_table,
    swap_to_zero,
)


class SkewBrace:
    """A skew brace ``(A, +, o)`` on ``0..n-1``.

    ``lam[x, y]`` is ``lambda_x(y) = -x + x o y`` and ``star[x, y]`` is
    ``lambda_x(y) - y``; both are computed once here. Use :func:`make_brace`
    to build a validated instance from raw tables.
    """

    def __init__(self, add: FiniteGroup, circ: FiniteGroup, *, name: str | None = None,
                 labels: Sequence | None = None):
        if add.order != circ.order:
            raise ValueError("additive and multiplicative groups differ in order")
        self.add = add
        self.circ = circ
        self.name = name
        self.labels = tuple(labels) if labels is not None else (
            add.labels if add.labels is not None else None)
        lam = add.op[add.inv[:, None], circ.op]
        lam.setflags(write=False)
        self.lam = lam
        star = add.op[lam, add.inv[None, :]]
        star.setflags(write=False)
        self.star = star

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def neg(self) -> np.ndarray:
        return self.add.inv

    @property
    def bar(self) -> np.ndarray:
        return self.circ.inv

    def whole(self) -> ElementSet:
        return ElementSet.whole(self.order)

    def zero(self) -> ElementSet:
        return ElementSet.zero(self.order)

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    @cached_property
    def add_generators(self) -> list[int]:
        return generating_set(self.add.op)

    @cached_property
    def circ_generators(self) -> list[int]:
        return generating_set(self.circ.op)

    @cached_property
    def bracket(self) -> np.ndarray:
        """Additive commutator table ``[x, y]_+ = -x - y + x + y``."""
        return commutator_table(self.add)

    @property
    def is_trivial_brace(self) -> bool:
        return bool(np.array_equal(self.add.op, self.circ.op))

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"<SkewBrace{nm} order={self.order}>"

    def __eq__(self, other):
        return (isinstance(other, SkewBrace) and np.array_equal(self.add.op, other.add.op)
                and np.array_equal(self.circ.op, other.circ.op))

    def __hash__(self):
        return hash((self.add.op.tobytes(), self.circ.op.tobytes()))


def _axiom_witness(add: np.ndarray, circ: np.ndarray, neg: np.ndarray):
    n = add.shape[0]
    x = np.arange(n)[:, None, None]
    lhs = circ[x, add[None, :, :]]                       # x o (y + z)
    left = add[circ, neg[:, None]]                       # (x o y) - x
    rhs = add[left[:, :, None], circ[:, None, :]]        # ((x o y) - x) + (x o z)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(i) for i in bad[0])
    return None


def _check_lambda(B: SkewBrace) -> None:
    lam, add = B.lam, B.add.op
    n = B.order
    x = np.arange(n)[:, None, None]
    # lambda_x is an additive automorphism
    if not (lam[x, add[None]] == add[lam[:, :, None], lam[:, None, :]]).all():
        raise InternalInconsistency("some lambda_x is not an automorphism of (A,+)")
    # lambda is a homomorphism (A,o) -> Aut(A,+)
    composed = lam[x, lam[None, :, :]]
    if not (lam[B.circ.op] == composed).all():
        w = tuple(int(i) for i in np.argwhere(lam[B.circ.op] != composed)[0])
        raise InternalInconsistency("lambda_{x o y} != lambda_x lambda_y", witness=w)


def make_brace(add_table, circ_table, *, name: str | None = None,
               labels: Sequence | None = None) -> SkewBrace:
    """Validate two tables on the same carrier and return a :class:`SkewBrace`.

    Accepts raw tables or :class:`FiniteGroup` objects. When both tables share
    an identity other than 0, both are relabeled by the same swap.
    """
    a = add_table.op if isinstance(add_table, FiniteGroup) else _as_table(add_table)
    c = circ_table.op if isinstance(circ_table, FiniteGroup) else _as_table(circ_table)
    if a.shape != c.shape:
        raise MismatchedIdentity(f"tables have different sizes {a.shape} and {c.shape}")
    ea, ec = find_identity(a), find_identity(c)
    if ea is None or ec is None:
        raise NoIdentity(f"{'additive' if ea is None else 'multiplicative'} table has no identity")
    if ea != ec:
        raise MismatchedIdentity(f"identities differ: {ea} for +, {ec} for o", witness=(ea, ec))
    if ea != 0:
        perm = swap_to_zero(a.shape[0], ea)
        a, c = relabel_table(a, perm), relabel_table(c, perm)
        if labels is not None:
            labels = [labels[i] for i in np.argsort(perm)]
    add = make_group(a, labels=labels)
    circ = make_group(c)
    w = _axiom_witness(add.op, circ.op, add.inv)
    if w is not None:
        x, y, z = w
        raise AxiomFails(f"x o (y + z) != (x o y) - x + (x o z) at x={x}, y={y}, z={z}", witness=w)
    B = SkewBrace(add, circ, name=name, labels=labels)
    _check_lambda(B)
    return B


def lambda_of(B: SkewBrace, x: int) -> np.ndarray:
    return B.lam[x]


def star_of(B: SkewBrace, x: int, y: int) -> int:
    return int(B.star[x, y])


def trivial_brace(G: FiniteGroup, name: str | None = None) -> SkewBrace:
    return SkewBrace(G, G, name=name)


def opposite_brace(G: FiniteGroup, name: str | None = None) -> SkewBrace:
    return make_brace(G, G.op.T, name=name, labels=G.labels)


def fix_ker_meet(B: SkewBrace) -> ElementSet:
    """``Fix(A) & ker(lambda)``: elements with ``x*y = y*x = 0`` for every y."""
    row = (B.star == 0).all(axis=1)
    col = (B.star == 0).all(axis=0)
    return ElementSet.from_mask(row & col)


@dataclass
class IdentityReport:
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(self.checks.values())

    def __str__(self):
        return "\n".join(f"{k}: {'pass' if v else 'FAIL ' + str(self.witnesses.get(k))}"
                         for k, v in self.checks.items())


def verify_identities(B: SkewBrace) -> IdentityReport:
    """Check the standard brace identities exhaustively."""
    add, circ, lam, star, neg = B.add.op, B.circ.op, B.lam, B.star, B.neg
    n = B.order
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    rep = IdentityReport()

    def record(name, lhs, rhs):
        bad = np.argwhere(np.broadcast_to(lhs != rhs, np.broadcast_shapes(np.shape(lhs), np.shape(rhs))))
        rep.checks[name] = not len(bad)
        if len(bad):
            rep.witnesses[name] = tuple(int(i) for i in bad[0])

    lhs = circ[x, add[y, z]]
    record("axiom", lhs, add[add[circ[x, y], neg[x]], circ[x, z]])
    record("axiom2", lhs, add[circ[x, y], lam[x, z]])
    # x*(y+z) = x*y + y + x*z - y
    record("star_distr", star[x, add[y, z]], add[add[add[star[x, y], y], star[x, z]], neg[y]])
    record("circ_via_star", circ, add[add[np.arange(n)[:, None], star], np.arange(n)[None, :]])
    record("lambda_hom", lam[circ[:, :, None], z], lam[x, lam[None, :, :]])
    # (a+u)*(b+v) = a*b for u, v in Fix & ker(lambda)
    F = fix_ker_meet(B).array
    a = np.arange(n)[:, None, None, None]
    b = np.arange(n)[None, :, None, None]
    u = F[None, None, :, None]
    v = F[None, None, None, :]
    record("comm1", star[add[a, u], add[b, v]], star[a, b])
    return rep
