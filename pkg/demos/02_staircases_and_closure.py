"""Monomial staircases, Newton polyhedra and integral closures.

A monomial ideal is a staircase of exponent vectors.  Its integral closure
is the set of lattice points inside the Newton polyhedron, which we compute
exactly from the facet description.
"""

from idealkit import invariants as iv
from idealkit import monomial as mo

# ---- staircases and colengths -----------------------------------------------
I = mo.minimalize(2, [(5, 0), (3, 1), (1, 3), (0, 5)])
print(f"minimal generators of I: {I.gens}")
print(f"lambda(R/I) = {mo.colength(I)}, nu(I) = {mo.nu(I)}, "
      f"order = {mo.order(I)}")

# colon ideals peel layers off the staircase
m = mo.minimalize(2, [(1, 0), (0, 1)])
socle = mo.colon(I, m)
print(f"(I : m) = {socle.gens}, socle dimension = "
      f"{mo.colength(I) - mo.colength(socle)}")

# ---- Newton polyhedron -------------------------------------------------------
NP = mo.newton(I)
print(f"\nfacets of NP(I) (normal, threshold): {NP.halfspaces}")
for v in ((2, 2), (1, 4), (0, 4)):
    print(f"  {v} in NP(I)? {mo.np_contains(NP, v)}")

# ---- integral closure --------------------------------------------------------
Ibar = mo.integral_closure(I)
print(f"\nintegral closure gens: {Ibar.gens}")
print(f"lambda drops {mo.colength(I)} -> {mo.colength(Ibar)}")
print(f"closure is idempotent: "
      f"{mo.integral_closure(Ibar).gens == Ibar.gens}")

# normal coefficients come from lambda(R/closure(I^n))
ctx = iv.poly_context(2)
hil = iv.hilbert_coeffs(ctx, I)
nrm_h, nrm_f = iv.normal_coeffs(ctx, I)
print(f"\ne(I)    = {hil.e}")
print(f"ebar(I) = {nrm_h.e}   (e0 is unchanged by closure)")
print(f"fbar(I) = {nrm_f.f}")

# a worked 3-variable case: the cube with a corner cut off
J = mo.minimalize(3, [(7, 0, 0), (0, 7, 0), (0, 0, 7)])
K = mo.sum_ideals(J, mo.minimalize(3, [(2, 2, 2)]))
print(f"\nJ = (x^7, y^7, z^7), K = J + (x^2 y^2 z^2)")
print(f"e0(J) = {iv.hilbert_coeffs(iv.poly_context(3), J).e[0]}, "
      f"e0(K) = {iv.hilbert_coeffs(iv.poly_context(3), K).e[0]}")
print(f"(J : K) = {mo.colon(J, K).gens}, colength "
      f"{mo.colength(mo.colon(J, K))}")
