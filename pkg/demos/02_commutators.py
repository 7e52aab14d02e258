"""
Commutators of ideals
=====================

The commutator of two ideals, computed from the pair algebra, next to the
lower bound obtained from absorbing binary polynomials.
"""

import itertools

from skewbrace.catalog import b4
from skewbrace.commutator import absorbing_lower_bound, smith_commutator
from skewbrace.substructures import all_ideals

B = b4()
ideals = all_ideals(B)
print("ideals of", B.name, [I.members for I in ideals])

for I, J in itertools.product(ideals, repeat=2):
    print(f"[{I.members}, {J.members}] = {smith_commutator(B, I, J).members}")

# for a brace this small the clone can be enumerated outright
A = B.whole()
bound = absorbing_lower_bound(B, A, A, cap=10 ** 5)
print("absorbing bound on [A, A]:", bound.result.members, "from", bound.functions, "functions")
