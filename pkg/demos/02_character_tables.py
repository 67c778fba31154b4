"""Exact character tables, Galois orbits and Schur index bounds.

Run:  python demos/02_character_tables.py
"""

from isotypic import (
    compute_character_table,
    fixed_dim,
    galois_orbits,
    rational_character,
)
from isotypic.cyclotomic import render_cyc
from isotypic.fixtures import order80_group

G = order80_group()
table = compute_character_table(G)

print(f"character table of the order-{G.order} group "
      f"({len(table.chars)} irreducibles, values in Q(zeta_{table.level})):\n")
reps = [G.label_of(c.representative) for c in table.classes]
print("classes:", "  ".join(reps))
for i, ch in enumerate(table.chars):
    print(f"V{i + 1:<3} deg {ch.degree}:  " +
          "  ".join(render_cyc(v) for v in ch.values))

orbits = galois_orbits(table)
print("\nrational irreducibles (Galois orbits of the complex ones):")
for o in orbits:
    print(f"  {o.label():16} degree {o.degree}, [K:Q] = {o.field_degree}, "
          f"Schur status: {o.schur.describe()}")

# The quadratic orbit: its character field is Q(sqrt(-5)) and the gcd of the
# fixed-space dimensions over all subgroups bounds the Schur index.
quad = next(o for o in orbits if o.degree == 4 and len(o.char_indices) == 2)
chi = table.chars[quad.char_indices[0]]
print("\nfixed-space dimensions of the degree-4 irrational character:")
for s in G.subgroup_classes():
    d = fixed_dim(table, chi, s.members)
    if d:
        print(f"  subgroup of order {s.order:3}: dim V^H = {d}")
print("gcd over the lattice =", quad.schur.divisor_bound,
      "(so the Schur index is 1 or 2; the bundled representation certifies 2)")

values, scaled = rational_character(table, quad)
print("\ntrace character of the orbit (unscaled):",
      " ".join(str(v) for v in values))
