"""Symbolic isotypical decompositions: Jacobians, intermediate quotients,
Pryms, and the classification of every factor.

Run:  python demos/04_jacobian_decomposition.py
"""

from isotypic import JacobianDecomposer, compute_character_table, galois_orbits
from isotypic.cli import describe_verdict
from isotypic.fixtures import corpus, order24_group, order80_group

# ----- S4: every factor is a Prym of an intermediate cover ------------------

S4 = corpus()["S4"]
dec = JacobianDecomposer(compute_character_table(S4))
jac, verdicts = dec.full_report()
print("S4 action:")
for f in jac.factors:
    if f.orbit_index == 0:
        print(f"  JW_G                      <- {f.label}")
        continue
    v = verdicts[f.orbit_index]
    desc = describe_verdict(dec, v)
    if v.kind == "intersection":
        desc = f"({desc})"
    if f.exponent != 1:
        desc = f"{desc}^{f.exponent}"
    print(f"  {desc}  <- {f.label}")

co = dec.find_prym_isogenies()
print(f"\n{len(co)} coincidences rho_S - rho_R = rho_X - rho_Y among distinct "
      "containment pairs (the order-(4,8)=(6,24) one recovers the trigonal "
      "construction)")

# ----- the order-80 worked example ------------------------------------------

G = order80_group()
table = compute_character_table(G)
orbits = galois_orbits(table)
quad = next(o for o in orbits if o.degree == 4 and len(o.char_indices) == 2)
dec = JacobianDecomposer(
    table, orbits=orbits,
    schur_assertions={tuple(i + 1 for i in quad.char_indices): 2},
)
jac, verdicts = dec.full_report()
print(f"\norder-80 action (Schur index 2 asserted for {quad.label()}):")
for f in jac.factors:
    if f.orbit_index == 0:
        print(f"  JW_G                      <- {f.label}")
        continue
    v = verdicts[f.orbit_index]
    desc = describe_verdict(dec, v)
    if v.kind == "intersection":
        desc = f"({desc})"
    if f.exponent != 1:
        desc = f"{desc}^{f.exponent}"
    print(f"  {desc}  <- {f.label}")

# ----- the order-24 example: a factor beyond Pryms and intersections ---------

G24 = order24_group()
dec24 = JacobianDecomposer(compute_character_table(G24))
w = next(i for i, o in enumerate(dec24.orbits)
         if o.degree == 2 and len(o.char_indices) == 1)
verdict = dec24.classify_factor(w)
print(f"\norder-24 action, factor {dec24.orbits[w].label()}:")
print("  no Prym realization:", dec24.find_prym_realizations(w) == [])
print("  no intersection realization (arity <= 4):",
      dec24.find_intersection_realizations(w) == [])
print("  classified as:", describe_verdict(dec24, verdict))
print("  (an orthogonal complement of Pryms inside a Prym: a quasi-Prym)")
