"""
Central extensions and Yang-Baxter solutions
============================================

Split the Heisenberg brace of order 8 over its center, rebuild it from the
two cocycles, and check the set-theoretic solution it induces.
"""

from skewbrace.catalog import heisenberg
from skewbrace.constructions import braces_isomorphic, extract_cocycles, rebuild_from_cocycles
from skewbrace.ybe import canonical_solution, check_nondegenerate_involutive, check_ybe

H = heisenberg(2)
c = extract_cocycles(H)
print("quotient order", c.quotient_order, " kernel order", c.kernel_order)
print("theta\n", c.theta)
print("phi\n", c.phi)

R = rebuild_from_cocycles(c.quotient, c.kernel, c)
print("rebuilt brace isomorphic to original:", braces_isomorphic(R, H) is not None)

s = canonical_solution(H)
nondeg, invol = check_nondegenerate_involutive(s)
print("YBE:", bool(check_ybe(s)), " non-degenerate:", nondeg, " involutive:", invol)
