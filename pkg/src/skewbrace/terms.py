"""Terms over ``{+, -, *, bar, 0}`` with variables and constants.

Evaluation is vectorized: each variable may be bound to an array of
elements, so one call evaluates a term on many assignments at once.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .brace import SkewBrace
from .errors import ArityMismatch, InternalInconsistency, PreconditionViolated
from .substructures import zeta


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Const:
    element: int

    def __str__(self):
        return f"c{self.element}"


@dataclass(frozen=True)
class Neg:
    arg: "Term"

    def __str__(self):
        return f"-({self.arg})"


@dataclass(frozen=True)
class Bar:
    arg: "Term"

    def __str__(self):
        return f"bar({self.arg})"


@dataclass(frozen=True)
class Sum:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Star:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} * {self.right})"


Term = Union[Zero, Var, Const, Neg, Bar, Sum, Star]


def circ_term(x: Term, y: Term) -> Term:
    """``x o y`` rewritten as ``x + (x*y) + y``."""
    return Sum(x, Sum(Star(x, y), y))


def arity(t: Term) -> int:
    """One more than the largest variable index (0 for closed terms)."""
    if isinstance(t, Var):
        return t.index + 1
    if isinstance(t, (Neg, Bar)):
        return arity(t.arg)
    if isinstance(t, (Sum, Star)):
        return max(arity(t.left), arity(t.right))
    return 0


def variables(t: Term) -> set[int]:
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, (Neg, Bar)):
        return variables(t.arg)
    if isinstance(t, (Sum, Star)):
        return variables(t.left) | variables(t.right)
    return set()


def size(t: Term) -> int:
    if isinstance(t, (Neg, Bar)):
        return 1 + size(t.arg)
    if isinstance(t, (Sum, Star)):
        return 1 + size(t.left) + size(t.right)
    return 1


def _eval(B: SkewBrace, t: Term, env: Sequence[np.ndarray], shape) -> np.ndarray:
    if isinstance(t, Zero):
        return np.zeros(shape, dtype=np.int64)
    if isinstance(t, Var):
        return env[t.index]
    if isinstance(t, Const):
        if not 0 <= t.element < B.order:
            raise ValueError(f"constant {t.element} outside the carrier")
        return np.full(shape, t.element, dtype=np.int64)
    if isinstance(t, Neg):
        return B.neg[_eval(B, t.arg, env, shape)]
    if isinstance(t, Bar):
        return B.bar[_eval(B, t.arg, env, shape)]
    if isinstance(t, Sum):
        return B.add.op[_eval(B, t.left, env, shape), _eval(B, t.right, env, shape)]
    if isinstance(t, Star):
        return B.star[_eval(B, t.left, env, shape), _eval(B, t.right, env, shape)]
    raise TypeError(f"not a term: {t!r}")


def eval_term(B: SkewBrace, t: Term, assignment: Sequence) -> int | np.ndarray:
    """Value of ``t`` with ``Var(i)`` bound to ``assignment[i]``.

    Scalars give a scalar; equally shaped arrays give an array of values.
    """
    if len(assignment) < arity(t):
        raise ArityMismatch(f"term needs {arity(t)} values, got {len(assignment)}")
    env = [np.asarray(a, dtype=np.int64) for a in assignment]
    shape = np.broadcast_shapes(*(e.shape for e in env)) if env else ()
    env = [np.broadcast_to(e, shape) for e in env]
    out = _eval(B, t, env, shape)
    return int(out) if out.ndim == 0 else out


def star_free_in(t: Term, var: int) -> bool:
    """True iff ``Var(var)`` never occurs below a ``Star`` node."""
    if isinstance(t, Star):
        return var not in variables(t)
    if isinstance(t, (Neg, Bar)):
        return star_free_in(t.arg, var)
    if isinstance(t, Sum):
        return star_free_in(t.left, var) and star_free_in(t.right, var)
    return True


def translation_coefficient(t: Term, var: int) -> int:
    """Integer k read off the syntax: +1 per occurrence, sign flipped by ``-`` and ``bar``.

    Only meaningful when :func:`star_free_in` holds; star subterms contribute 0.
    """
    if isinstance(t, Var):
        return 1 if t.index == var else 0
    if isinstance(t, (Neg, Bar)):
        return -translation_coefficient(t.arg, var)
    if isinstance(t, Sum):
        return translation_coefficient(t.left, var) + translation_coefficient(t.right, var)
    return 0


def _all_assignments(n: int, k: int, limit: int, seed: int) -> np.ndarray:
    if n ** k <= limit:
        rows = list(itertools.product(range(n), repeat=k))
        return np.array(rows, dtype=np.int64).reshape(len(rows), k)
    rng = np.random.default_rng(seed)
    return rng.integers(0, n, size=(limit, k))


def check_translation_lemma(B: SkewBrace, t: Term, var: int,
                            assignments: np.ndarray | None = None, *,
                            limit: int = 4096, seed: int = 0) -> int:
    """Find k with ``t(.., x_var + z, ..) = t(..) + k z`` for every z in the center.

    ``assignments`` is an (m, arity) array; by default every tuple is used when
    there are at most ``limit`` of them, otherwise a seeded sample. Returns k
    reduced modulo the exponent of the center. The observed k must also agree
    with :func:`translation_coefficient`.
    """
    if not star_free_in(t, var):
        raise PreconditionViolated(f"x{var} occurs under a star in {t}")
    k_arity = max(arity(t), var + 1)
    if assignments is None:
        assignments = _all_assignments(B.order, k_arity, limit, seed)
    assignments = np.asarray(assignments, dtype=np.int64)
    if assignments.ndim != 2 or assignments.shape[1] < k_arity:
        raise ArityMismatch(f"need assignments with {k_arity} columns")
    Z = zeta(B).array
    orders = B.add.element_orders[Z]
    exp = int(math.lcm(*[int(o) for o in orders])) if len(Z) else 1
    # multiples[k, z] = k*z
    multiples = np.zeros((exp, len(Z)), dtype=np.int64)
    for k in range(1, exp):
        multiples[k] = B.add.op[multiples[k - 1], Z]

    cols = [assignments[:, i][:, None] for i in range(assignments.shape[1])]
    base = eval_term(B, t, [np.broadcast_to(c, (len(assignments), len(Z))) for c in cols])
    shifted_cols = list(cols)
    shifted_cols[var] = B.add.op[cols[var], Z[None, :]]
    shifted = eval_term(B, t, [np.broadcast_to(c, (len(assignments), len(Z))) for c in shifted_cols])
    diff = B.add.op[B.neg[base], shifted]  # -t(x) + t(x + z)
    for k in range(exp):
        if (diff == multiples[k][None, :]).all():
            if (translation_coefficient(t, var) - k) % exp:
                raise InternalInconsistency(
                    f"observed k={k} but the term structure predicts "
                    f"{translation_coefficient(t, var)} mod {exp}", witness=t)
            return k
    raise InternalInconsistency(f"no translation coefficient for {t} in x{var}", witness=t)


def random_term(seed: int, arity: int, max_depth: int, *, order: int = 1,
                star_free_var: int | None = None) -> Term:
    """Deterministic pseudo-random term.

    Constants are drawn from ``range(order)``. With ``star_free_var`` set, that
    variable is never placed under a ``Star``. Depth 1 yields a leaf.
    """
    if max_depth > 12:
        raise ValueError("max_depth must be at most 12")
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    rng = random.Random(seed)

    def leaf(allowed):
        kinds = ["zero", "const"] + ["var"] * (2 if allowed else 0)
        kind = rng.choice(kinds)
        if kind == "var":
            return Var(rng.choice(allowed))
        if kind == "const" and order > 1:
            return Const(rng.randrange(order))
        return Zero()

    def build(depth, allowed):
        if depth <= 1 or rng.random() < 0.25:
            return leaf(allowed)
        kind = rng.choice(["neg", "bar", "sum", "sum", "star"])
        if kind == "neg":
            return Neg(build(depth - 1, allowed))
        if kind == "bar":
            return Bar(build(depth - 1, allowed))
        if kind == "sum":
            return Sum(build(depth - 1, allowed), build(depth - 1, allowed))
        inner = [v for v in allowed if v != star_free_var]
        return Star(build(depth - 1, inner), build(depth - 1, inner))

    return build(max_depth, list(range(arity)))
