"""Numerical semigroup rings: one-dimensional local algebra by hand.

k[[t^a, t^b, ...]] is where every invariant can be read off from gap counts.
We walk through gaps, Apery sets, symmetry, canonical ideals and the e1
identity for principal reductions.
"""

from idealkit import invariants as iv
from idealkit import semigroup as sg

H = sg.semigroup((4, 7, 9))
print(f"H = <4, 7, 9>: gaps = {H.gaps()}, Frobenius = {H.frobenius}, "
      f"conductor = {H.conductor}")
print(f"multiplicity = {H.multiplicity}, symmetric? {sg.is_symmetric(H)}")

# Apery identity: lambda(R/(t^e)) = e for any nonzero element
for e in (4, 7, 9, 11):
    print(f"  lambda(R/(t^{e})) = {sg.colength(sg.ideal(H, [e]))}")

# ---- an ideal, its reduction and its coefficients ----------------------------
ctx = iv.semigroup_context(H)
I = sg.ideal(H, [11, 14])
Q = sg.ideal(H, [11])  # principal => a minimal reduction, certified
hil = iv.hilbert_coeffs(ctx, I)
red = iv.reduction_number(ctx, Q, I)
print(f"\nI = (t^11, t^14): e = {hil.e}, red_Q(I) = {red}")

# e1 has an independent series oracle: sum of lambda(I^{n+1} / Q I^n)
print(f"e1 from fit = {hil.e[1]}, e1 from series = "
      f"{iv.e1_series_check(ctx, Q, I)}")

# ---- canonical ideal and Gorenstein duality ----------------------------------
for gens in ((2, 3), (3, 4), (4, 7, 9)):
    G = sg.semigroup(gens)
    omega = sg.canonical_ideal(G)
    print(f"<{', '.join(map(str, gens))}>: nu(canonical) = {sg.nu(omega)}"
          f"  (1 iff Gorenstein: {sg.is_symmetric(G)})")

# in a Gorenstein semigroup ring, lambda(R/(Q:I)) = e0(I) - lambda(R/I)
G = sg.semigroup((3, 4))
gctx = iv.semigroup_context(G)
for gens in ([6, 7], [4, 9], [3, 8]):
    I = sg.ideal(G, gens)
    Q = sg.ideal(G, [min(I.gens)])
    lhs = sg.colength(sg.colon(Q, I))
    rhs = iv.hilbert_coeffs(gctx, I).e[0] - sg.colength(I)
    print(f"<3,4>, I = {I.gens}: lambda(R/(Q:I)) = {lhs} = e0 - lambda = {rhs}")
