"""Checking coefficient and reduction-number bounds over instance families.

Every inequality in bounds.py produces a BoundReport with exact lhs/rhs
integers and a status.  The instances module wires the checkers to random
families; this script runs a small sweep and prints the aggregate.
"""

import json

from idealkit import bounds as bd
from idealkit import instances as ins
from idealkit import invariants as iv
from idealkit import monomial as mo

# ---- a single report, inspected up close --------------------------------------
ctx = iv.poly_context(3)
J = mo.minimalize(3, [(7, 0, 0), (0, 7, 0), (0, 0, 7)])
I = mo.sum_ideals(J, mo.minimalize(3, [(2, 2, 2)]))
rep = bd.check_thm_2_2(ctx, J, I)
print("one report in full:")
print(json.dumps(rep.as_dict(), indent=2, sort_keys=True))

# ---- sweeps over the built-in families -----------------------------------------
for family, count in (("semigroup_small", 6),
                      ("random_monomial_d2", 8),
                      ("e0Ih", 2)):
    sw = ins.sweep(family, count=count, seed=7)
    print(f"\nfamily {family}, {len(sw['instances'])} instances:")
    for tid, slot in sorted(sw["aggregate"].items()):
        print(f"  {tid:16s} verified={slot['verified']:3d} "
              f"skipped={slot['skipped']:3d} "
              f"unresolved={slot['unresolved']:3d} "
              f"violated={slot['violated']:3d}")

# ---- the one-parameter family with a frozen claim table -------------------------
sw = ins.sweep("example_2_4")
print("\nfamily example_2_4 (claims recorded per quantity):")
for rec in sw["instances"]:
    agree = {k: v["agree"] for k, v in sorted(rec["claims"].items())}
    print(f"  {rec['id']}: {agree}")
