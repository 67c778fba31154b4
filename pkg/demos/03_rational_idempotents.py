"""From a matrix representation over L to primitive idempotents over Q.

The pipeline: diagonal matrix coefficients give primitive idempotents of
L[G]; a greedy scan selects one ideal per Galois-orbit block; solving for
the central idempotent in the assembled basis yields the primitive grid
u_s^h; summing over Gal(L/K) gives primitive idempotents of K[G], and over
Gal(L/Q) primitive idempotents of Q[G].

Run:  python demos/03_rational_idempotents.py
"""

from isotypic import (
    MatrixRep,
    NumField,
    assert_schur,
    compute_character_table,
    construct_primitive_system,
    diagonal_idempotents,
    galois_orbits,
    ideal_dim,
    symmetrize_to_rational,
    symmetrize_to_subfield,
    validate_schur_from_rep,
)
from isotypic.cli import render_element
from isotypic.fixtures import corpus

# The quaternion group over L = Q(i): the 2-dimensional representation has
# Schur index 2, so a single block carries the whole simple algebra.
Q8 = corpus()["Q8"]
table = compute_character_table(Q8)
orbit = next(o for o in galois_orbits(table) if o.degree == 2)

QI = NumField([1, 0, 1], [[0, 1], [0, -1]], subfield_fixers=(0, 1))
i = QI.gen()
rep = MatrixRep(Q8, QI, [[[i, 0], [0, -i]], [[0, 1], [-1, 0]]],
                table, orbit.char_indices[0])

m = validate_schur_from_rep(rep, orbit)
print(f"validated Schur index m = {m} from the declared representation")
orbit = assert_schur(orbit, m, "validated representation")

ells = diagonal_idempotents(rep)
print(f"\ndiagonal idempotents (each generates a minimal left ideal of dim "
      f"{ideal_dim(ells[0])}):")
for j, ell in enumerate(ells):
    print(f"  ell_{j + 1} =", render_element(Q8, ell))

system = construct_primitive_system(rep, orbit, ells=ells)
print(f"\nselected {system.blocks} block(s); the primitive grid u_s^h:")
for s, row in enumerate(system.u_grid):
    for h, u in enumerate(row):
        print(f"  u[{s + 1}][{h + 1}] =", render_element(Q8, u))

ks = symmetrize_to_subfield(system)
fs = symmetrize_to_rational(system)
print("\nK[G] idempotents (sums over Gal(L/K)):")
for s, k in enumerate(ks):
    print(f"  k{s + 1} =", render_element(Q8, k))
print("  (n/m = 1, so k1 equals the central idempotent itself)")
print("\nQ[G] idempotents (sums over Gal(L/Q)):")
for s, f in enumerate(fs):
    print(f"  f{s + 1} =", render_element(Q8, f),
          f"   [ideal dim {ideal_dim(f)} = m*n*[K:Q]]")
