"""Brace builders: bilinear central extensions, Heisenberg braces, and cocycle round trips."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace, make_brace
from .errors import (
    CocycleIdentityFails,
    CompatibilityFails,
    InternalInconsistency,
    KNotAbelian,
    NotBilinear,
    TrivialCenter,
)
from .groups import ElementSet, FiniteGroup, center, subgroup_as_group
from .iso import first_isomorphism
from .series import upper_central_series
from .substructures import distinguished_sets, quotient_brace


def _check_biadditive(G1: FiniteGroup, G2: FiniteGroup, K: FiniteGroup, form: np.ndarray,
                      what: str = "form"):
    """``form[x, y]`` must be additive in x along G1 and in y along G2."""
    n1, n2 = G1.order, G2.order
    if form.shape != (n1, n2):
        raise NotBilinear(f"{what} has shape {form.shape}, expected {(n1, n2)}")
    x = np.arange(n1)[:, None, None]
    y = np.arange(n1)[None, :, None]
    z = np.arange(n2)[None, None, :]
    bad = np.argwhere(form[G1.op[x, y], z] != K.op[form[x, z], form[y, z]])
    if len(bad):
        raise NotBilinear(f"{what} not additive in its first argument", witness=tuple(map(int, bad[0])))
    x = np.arange(n1)[:, None, None]
    y = np.arange(n2)[None, :, None]
    z = np.arange(n2)[None, None, :]
    bad = np.argwhere(form[x, G2.op[y, z]] != K.op[form[x, y], form[x, z]])
    if len(bad):
        raise NotBilinear(f"{what} not additive in its second argument", witness=tuple(map(int, bad[0])))


def product_form(n1: int, n2: int, m: int) -> np.ndarray:
    """``(a, b) -> a*b mod m`` on cyclic groups; bilinear when m divides n1 and n2."""
    return (np.arange(n1)[:, None] * np.arange(n2)[None, :]) % m


def bilinear_brace(H: SkewBrace, K: FiniteGroup, theta, *, name: str | None = None) -> SkewBrace:
    """Brace on ``K x H`` with componentwise ``+`` and
    ``(k1, h1) o (k2, h2) = (k1 + k2 + theta(h1, h2), h1 o h2)``.

    Element ``(k, h)`` has index ``k + |K| * h``.
    """
    if not K.is_abelian:
        raise KNotAbelian("kernel group must be abelian")
    theta = np.asarray(theta, dtype=np.int64)
    if theta.shape != (H.order, H.order) or theta.min() < 0 or theta.max() >= K.order:
        raise NotBilinear(f"theta must be a {H.order}x{H.order} table into 0..{K.order - 1}")
    _check_biadditive(H.add, H.add, K, theta, "theta (w.r.t. +)")
    _check_biadditive(H.circ, H.circ, K, theta, "theta (w.r.t. o)")
    m, h = K.order, H.order
    N = m * h
    k_of = np.arange(N) % m
    h_of = np.arange(N) // m
    add = K.op[k_of[:, None], k_of[None, :]] + m * H.add.op[h_of[:, None], h_of[None, :]]
    twist = theta[h_of[:, None], h_of[None, :]]
    circ = (K.op[K.op[k_of[:, None], k_of[None, :]], twist]
            + m * H.circ.op[h_of[:, None], h_of[None, :]])
    labels = [(int(k), H.label(int(hh))) for k, hh in zip(k_of, h_of)]
    A = make_brace(add, circ, name=name, labels=labels)

    kernel = ElementSet.of(N, range(m))
    ds = distinguished_sets(A)
    if not kernel <= (ds.ker_lambda & ds.fix & center(A.add)):
        raise InternalInconsistency("K x {0} is not inside ker(lambda) & Fix & Z(A,+)")
    h_cls = upper_central_series(H, cross_check=False).class_index
    if h_cls is not None:
        a_cls = upper_central_series(A, cross_check=False).class_index
        if a_cls is None or a_cls > h_cls + 1:
            raise InternalInconsistency(f"class {a_cls} exceeds class(H)+1 = {h_cls + 1}")
    return A


def heisenberg_brace(E: FiniteGroup, F: FiniteGroup, A: FiniteGroup, omega, *,
                     name: str | None = None) -> SkewBrace:
    """Direct product ``E x F x A`` for ``+`` and the generalized Heisenberg product
    ``(e1, f1, a1) o (e2, f2, a2) = (e1 + e2, f1 + f2, a1 + a2 + omega(e1, f2))``.

    Element ``(e, f, a)`` has index ``e + |E| * (f + |F| * a)``.
    """
    for G, nm in ((E, "E"), (F, "F"), (A, "A")):
        if not G.is_abelian:
            raise KNotAbelian(f"{nm} must be abelian")
    omega = np.asarray(omega, dtype=np.int64)
    if omega.shape != (E.order, F.order) or omega.min() < 0 or omega.max() >= A.order:
        raise NotBilinear(f"omega must be an {E.order}x{F.order} table into 0..{A.order - 1}")
    _check_biadditive(E, F, A, omega, "omega")
    ne, nf, na = E.order, F.order, A.order
    N = ne * nf * na
    idx = np.arange(N)
    e, f, a = idx % ne, (idx // ne) % nf, idx // (ne * nf)

    def pack(ee, ff, aa):
        return ee + ne * (ff + nf * aa)

    E2 = E.op[e[:, None], e[None, :]]
    F2 = F.op[f[:, None], f[None, :]]
    A2 = A.op[a[:, None], a[None, :]]
    add = pack(E2, F2, A2)
    circ = pack(E2, F2, A.op[A2, omega[e[:, None], f[None, :]]])
    labels = [(int(x), int(y), int(z)) for x, y, z in zip(e, f, a)]
    B = make_brace(add, circ, name=name, labels=labels)
    cls = upper_central_series(B, cross_check=False).class_index
    trivial = not omega.any()
    if cls is None or cls > 2 or (cls == 1) != trivial and N > 1:
        raise InternalInconsistency(f"Heisenberg brace has class {cls}")
    return B


@dataclass
class Cocycles:
    """Central-extension data ``B ~ B/zeta x zeta``.

    ``theta``/``phi`` are ``q x q`` tables into the kernel group (indices of
    ``kernel``); ``transversal[x]`` is the chosen element of coset ``x``;
    ``embedding[a]`` is the brace element for kernel index ``a``.
    """

    quotient: SkewBrace
    kernel: FiniteGroup
    theta: np.ndarray
    phi: np.ndarray
    transversal: np.ndarray
    embedding: np.ndarray

    @property
    def quotient_order(self) -> int:
        return self.quotient.order

    @property
    def kernel_order(self) -> int:
        return self.kernel.order


def validate_cocycles(Q: SkewBrace, K: FiniteGroup, theta: np.ndarray, phi: np.ndarray) -> None:
    """Normalization, both cocycle identities and the compatibility equation."""
    if not K.is_abelian:
        raise KNotAbelian("kernel group must be abelian")
    q = Q.order
    for nm, c in (("theta", theta), ("phi", phi)):
        if c.shape != (q, q) or c.min() < 0 or c.max() >= K.order:
            raise CocycleIdentityFails(f"{nm} must be a {q}x{q} table into the kernel")
        if c[0].any() or c[:, 0].any():
            bad = np.argwhere(np.concatenate([c[:1], c[:, :1].T]) != 0)[0]
            raise CocycleIdentityFails(f"{nm} is not normalized", witness=tuple(map(int, bad)))
    kop = K.op
    x = np.arange(q)[:, None, None]
    y = np.arange(q)[None, :, None]
    z = np.arange(q)[None, None, :]
    for nm, c, G in (("theta", theta, Q.add.op), ("phi", phi, Q.circ.op)):
        lhs = kop[c[x, y], c[G[x, y], z]]
        rhs = kop[c[y, z], c[x, G[y, z]]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise CocycleIdentityFails(f"{nm} fails the cocycle identity",
                                       witness=tuple(map(int, bad[0])))
    add, circ, neg = Q.add.op, Q.circ.op, Q.neg
    kneg = K.inv
    # phi(x, y+z) - phi(x, y) - phi(x, z)
    lhs = kop[kop[phi[x, add[y, z]], kneg[phi[x, y]]], kneg[phi[x, z]]]
    # theta((x o y) - x, x o z) + theta(x o y, -x) - theta(x, -x) - theta(y, z)
    xy = circ[x, y]
    t1 = theta[add[xy, neg[x]], circ[x, z]]
    t2 = theta[xy, neg[x]]
    t3 = kneg[theta[x, neg[x]]]
    t4 = kneg[theta[y, z]]
    rhs = kop[kop[kop[t1, t2], t3], t4]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        raise CompatibilityFails("cocycles violate the brace compatibility equation",
                                 witness=tuple(map(int, bad[0])))


def rebuild_from_cocycles(Q: SkewBrace, K: FiniteGroup, c: Cocycles | tuple) -> SkewBrace:
    """Brace on ``Q x K`` with ``(x,a)+(y,b) = (x+y, a+b+theta(x,y))`` and
    ``(x,a)o(y,b) = (x o y, a+b+phi(x,y))``; ``(x, a)`` has index ``x + |Q| a``."""
    theta, phi = (c.theta, c.phi) if isinstance(c, Cocycles) else c
    theta = np.asarray(theta, dtype=np.int64)
    phi = np.asarray(phi, dtype=np.int64)
    validate_cocycles(Q, K, theta, phi)
    q, m = Q.order, K.order
    idx = np.arange(q * m)
    x, a = idx % q, idx // q
    X, Y = x[:, None], x[None, :]
    Aa, Bb = a[:, None], a[None, :]
    add = Q.add.op[X, Y] + q * K.op[K.op[Aa, Bb], theta[X, Y]]
    circ = Q.circ.op[X, Y] + q * K.op[K.op[Aa, Bb], phi[X, Y]]
    labels = [(int(i), int(j)) for i, j in zip(x, a)]
    R = make_brace(add, circ, labels=labels)
    kernel = ElementSet.of(q * m, [q * j for j in range(m)])
    if not kernel <= distinguished_sets(R).zeta:
        raise InternalInconsistency("{0} x K is not central in the rebuilt brace")
    return R


def extract_cocycles(B: SkewBrace, *, verify: bool = True) -> Cocycles:
    """Cocycles of ``B`` over its center, using least coset representatives.

    With ``verify`` the rebuilt brace is checked to be isomorphic to ``B``,
    both through the explicit map ``(x, a) -> t(x) + a`` and by search.
    """
    z = distinguished_sets(B).zeta
    if z.is_trivial():
        raise TrivialCenter("the center is trivial; there is nothing to split off")
    Q, proj = quotient_brace(B, z)
    q = Q.order
    t = np.array([int(np.flatnonzero(proj == i)[0]) for i in range(q)], dtype=np.int64)
    K, emb = subgroup_as_group(B.add, z)
    back = np.full(B.order, -1, dtype=np.int64)
    back[emb] = np.arange(len(emb))
    X, Y = np.arange(q)[:, None], np.arange(q)[None, :]
    ta, tc = t[Q.add.op[X, Y]], t[Q.circ.op[X, Y]]
    tx, ty = t[X], t[Y]
    theta_el = B.add.op[B.add.op[B.neg[ta], tx], ty]            # -t(x+y) + t(x) + t(y)
    phi_el = B.circ.op[B.circ.op[B.bar[tc], tx], ty]            # bar t(x o y) o t(x) o t(y)
    theta, phi = back[theta_el], back[phi_el]
    if (theta < 0).any() or (phi < 0).any():
        raise InternalInconsistency("cocycle values fall outside the center")
    c = Cocycles(Q, K, theta, phi, t, emb)
    if verify:
        R = rebuild_from_cocycles(Q, K, c)
        m = K.order
        explicit = B.add.op[t[np.arange(q * m) % q], emb[np.arange(q * m) // q]]
        if not _is_isomorphism(R, B, explicit):
            raise InternalInconsistency("(x, a) -> t(x) + a is not an isomorphism")
        if braces_isomorphic(R, B) is None:
            raise InternalInconsistency("rebuilt brace is not isomorphic to the input")
    return c


def _is_isomorphism(B1: SkewBrace, B2: SkewBrace, f: np.ndarray) -> bool:
    if len(np.unique(f)) != B1.order or B1.order != B2.order:
        return False
    return (np.array_equal(f[B1.add.op], B2.add.op[np.ix_(f, f)])
            and np.array_equal(f[B1.circ.op], B2.circ.op[np.ix_(f, f)]))


def element_invariants(B: SkewBrace) -> np.ndarray:
    """Per-element isomorphism invariants used to prune the search."""
    n = B.order
    ar = np.arange(n)
    fixed = (B.lam == ar[None, :]).sum(axis=1)
    moved_by = (B.lam == ar[None, :]).sum(axis=0)
    star_zero_row = (B.star == 0).sum(axis=1)
    star_zero_col = (B.star == 0).sum(axis=0)
    centralizer = (B.add.op == B.add.op.T).sum(axis=1)
    return np.stack([B.add.element_orders, B.circ.element_orders, fixed, moved_by,
                     star_zero_row, star_zero_col, centralizer], axis=1)


def braces_isomorphic(B1: SkewBrace, B2: SkewBrace) -> np.ndarray | None:
    """A bijection ``f`` preserving both operations, or None."""
    if B1.order != B2.order:
        return None
    return first_isomorphism([B1.add.op, B1.circ.op], [B2.add.op, B2.circ.op],
                             element_invariants(B1), element_invariants(B2))
