"""Named braces and the standard desk-scale corpus."""

from __future__ import annotations

import numpy as np

from .brace import SkewBrace, opposite_brace, trivial_brace
from .constructions import bilinear_brace, heisenberg_brace, product_form
from .enumeration import classify_up_to_iso, enumerate_braces_on
from .groups import builtin_group, cyclic_group, dihedral_group, quaternion_group, symmetric_group

SMALL_GROUPS = {
    1: ["Z1"],
    2: ["Z2"],
    3: ["Z3"],
    4: ["Z4", "Z2xZ2"],
    5: ["Z5"],
    6: ["Z6", "S3"],
    7: ["Z7"],
    8: ["Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8"],
}


def b4() -> SkewBrace:
    """Order-4 brace on Z2 x Z2 with ``(k1,h1) o (k2,h2) = (k1+k2+h1 h2, h1+h2)``."""
    Z2 = cyclic_group(2)
    return bilinear_brace(trivial_brace(Z2), Z2, product_form(2, 2, 2), name="B4")


def op_s3() -> SkewBrace:
    return opposite_brace(symmetric_group(3), name="OpS3")


def heisenberg(p: int) -> SkewBrace:
    Zp = cyclic_group(p)
    return heisenberg_brace(Zp, Zp, Zp, product_form(p, p, p), name=f"Heis{p ** 3}")


def bilinear_examples() -> list[SkewBrace]:
    Z2, Z3 = cyclic_group(2), cyclic_group(3)
    out = [
        bilinear_brace(trivial_brace(Z2), Z2, product_form(2, 2, 2), name="Bil(Z2;Z2,xy)"),
        bilinear_brace(trivial_brace(Z3), Z3, product_form(3, 3, 3), name="Bil(Z3;Z3,xy)"),
    ]
    # over B4, with the form read off the second coordinate (a hom for + and o)
    H = b4()
    h = np.array([lab[1] for lab in H.labels])
    out.append(bilinear_brace(H, Z2, (h[:, None] * h[None, :]) % 2, name="Bil(B4;Z2,hh')"))
    return out


def braces_of_order(n: int) -> list[SkewBrace]:
    """Isomorphism-class representatives of all skew braces of order n (n <= 8)."""
    out = []
    for gname in SMALL_GROUPS[n]:
        fam = classify_up_to_iso(enumerate_braces_on(builtin_group(gname)))
        for k, B in enumerate(fam.representatives()):
            B.name = f"{gname}#{k}"
            out.append(B)
    return out


def standard_corpus(max_order: int = 6) -> list[SkewBrace]:
    """All braces up to ``max_order`` plus the named examples."""
    corpus = []
    for n in range(1, max_order + 1):
        corpus.extend(braces_of_order(n))
    corpus.append(b4())
    corpus.append(op_s3())
    corpus.append(opposite_brace(dihedral_group(4), name="OpD4"))
    corpus.append(opposite_brace(quaternion_group(), name="OpQ8"))
    corpus.append(heisenberg(2))
    corpus.append(heisenberg(3))
    corpus.extend(bilinear_examples())
    return corpus
