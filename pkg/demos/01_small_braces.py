"""
Small skew braces and their centers
===================================

Build the order-4 brace B4 and the opposite brace of S3, then compare their
distinguished subsets and central series.
"""

from skewbrace.catalog import b4, op_s3
from skewbrace.series import lower_central_series, upper_central_series
from skewbrace.substructures import distinguished_sets

for B in (b4(), op_s3()):
    d = distinguished_sets(B)
    print(B.name, "order", B.order)
    print("  Fix", d.fix.members, " ker", d.ker_lambda.members,
          " Soc", d.soc.members, " zeta", d.zeta.members)

    # zeta climbs from 0, Gamma falls from A; both stop at the same index
    up, down = upper_central_series(B), lower_central_series(B)
    print("  zeta stages ", [s.members for s in up.stages])
    print("  Gamma stages", [s.members for s in down.stages])
    print("  class", up.class_index, "/", down.class_index)
