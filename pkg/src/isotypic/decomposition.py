"""Symbolic isotypical decomposition of Jacobians with a group action.

Everything here works at the multiplicity level: a "variety" is a label and
a factor is (rational irreducible, exponent).  The decomposer caches the
multiplicity vector of rho_H for every subgroup class and answers the
decomposition of the full Jacobian, of intermediate quotients, and of Pryms
of intermediate covers, plus the lattice searches that recognize each
isotypical factor as a Prym, an intersection of Pryms, or an orthogonal
complement inside a Prym.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    CharacterTable,
    assert_schur,
    galois_orbits,
    rho_decomposition,
)
from .errors import ValidationError
from .groups import Subgroup


@dataclass(frozen=True)
class Factor:
    orbit_index: int
    label: str
    exponent: int
    provenance: str
    conditional: bool


@dataclass(frozen=True)
class DecompositionReport:
    subject: str
    factors: tuple[Factor, ...]

    def exponents(self):
        return tuple(f.exponent for f in self.factors)


@dataclass(frozen=True)
class PrymWitness:
    inner: int                 # subgroup class index H
    outer: int                 # subgroup class index N
    conjugator: int            # a with a H a^-1 inside the stored N


@dataclass(frozen=True)
class IntersectionWitness:
    inner: int
    outers: tuple[int, ...]
    conjugators: tuple[int, ...]


@dataclass(frozen=True)
class ComplementWitness:
    inner: int
    outer: int
    conjugator: int
    relation: tuple[int, ...]  # multiplicity vector of rho_H - rho_N per orbit


@dataclass(frozen=True)
class RealizabilityVerdict:
    orbit_index: int
    kind: str                  # "prym" | "intersection" | "complement"
    witness: object


class JacobianDecomposer:
    """Cached multiplicity engine for one group action."""

    def __init__(self, table: CharacterTable, orbits=None, schur_assertions=None):
        self.table = table
        self.group = table.group
        orbits = tuple(orbits) if orbits is not None else galois_orbits(table)
        if schur_assertions:
            updated = list(orbits)
            for key, m in schur_assertions.items():
                idx = self._orbit_index_by_key(updated, key)
                updated[idx] = assert_schur(updated[idx], m)
            orbits = tuple(updated)
        self.orbits = orbits
        self.subgroups = self.group.subgroup_classes()
        self.rho = tuple(
            rho_decomposition(table, self.orbits, s.members) for s in self.subgroups
        )
        self._containment = {}

    # -- helpers ---------------------------------------------------------------

    @staticmethod
    def _orbit_index_by_key(orbits, key):
        """Resolve an orbit from a 1-based character index or an index tuple."""
        if isinstance(key, int):
            for i, o in enumerate(orbits):
                if key - 1 in o.char_indices:
                    return i
            raise ValidationError(f"no orbit contains character V{key}")
        key = tuple(sorted(k - 1 for k in key))
        for i, o in enumerate(orbits):
            if o.char_indices == key:
                return i
        raise ValidationError(f"no orbit with characters {key}")

    def orbit_index_of(self, key) -> int:
        return self._orbit_index_by_key(self.orbits, key)

    def subgroup_class_of(self, members) -> int:
        return self.group.find_class_of_subgroup(members)

    def conjugator(self, inner_idx: int, outer_idx: int):
        """Element conjugating class rep inner into class rep outer, or None."""
        key = (inner_idx, outer_idx)
        if key not in self._containment:
            inner = self.subgroups[inner_idx].members
            outer = self.subgroups[outer_idx].members
            if len(outer) % len(inner) != 0:
                self._containment[key] = None
            else:
                self._containment[key] = self.group.conjugator_into(inner, outer)
        return self._containment[key]

    def contains(self, inner_idx: int, outer_idx: int) -> bool:
        return self.conjugator(inner_idx, outer_idx) is not None

    def mult_vector(self, sub_idx: int):
        return self.rho[sub_idx].multiplicities

    def trivial_class(self) -> int:
        return self.subgroup_class_of((0,))

    def whole_class(self) -> int:
        return self.subgroup_class_of(tuple(range(self.group.order)))

    def subgroup_name(self, idx: int) -> str:
        s = self.subgroups[idx]
        if s.order == 1:
            return "1"
        if s.order == self.group.order:
            return "G"
        gens = self._subgroup_generators(s)
        return "<" + ",".join(self.group.label_of(g) for g in gens) + ">"

    def _subgroup_generators(self, s: Subgroup):
        gens = []
        reached = {0}
        for e in s.members:
            if e in reached:
                continue
            gens.append(e)
            reached = set(self.group._closure_of(gens))
            if len(reached) == s.order:
                break
        return gens

    def _factor(self, orbit_idx: int, exponent: int, provenance: str) -> Factor:
        orbit = self.orbits[orbit_idx]
        return Factor(
            orbit_index=orbit_idx,
            label=orbit.label(),
            exponent=exponent,
            provenance=provenance,
            conditional=orbit.schur.conditional and exponent != 0,
        )

    # -- decompositions -----------------------------------------------------------

    def decompose_jacobian(self) -> DecompositionReport:
        """JW ~ JW_G x prod B_j^(dim V_j / m_j)."""
        factors = []
        for i, orbit in enumerate(self.orbits):
            if i == 0:
                factors.append(self._factor(0, 1, "JW_G"))
                continue
            factors.append(self._factor(i, orbit.degree // orbit.multiplier, "dim V/m"))
        return DecompositionReport("JW", tuple(factors))

    def decompose_intermediate(self, members) -> DecompositionReport:
        """JW_H ~ JW_G x prod B_j^(dim V_j^H / m_j)."""
        rd = rho_decomposition(self.table, self.orbits, members)
        factors = [self._factor(0, 1, "JW_G")]
        for i in range(1, len(self.orbits)):
            factors.append(self._factor(i, rd.multiplicities[i], "dim V^H/m"))
        return DecompositionReport("JW_H", tuple(factors))

    def decompose_prym(self, inner_members, outer_members) -> DecompositionReport:
        """P(W_H/W_N) ~ prod B_j^(s_j), s_j = dim V_j^H/m - dim V_j^N/m >= 0."""
        inner_idx = self.subgroup_class_of(inner_members)
        outer_idx = self.subgroup_class_of(outer_members)
        if not self.contains(inner_idx, outer_idx):
            raise ValidationError(
                "no conjugate of the inner subgroup is contained in the outer subgroup"
            )
        a = self.mult_vector(inner_idx)
        b = self.mult_vector(outer_idx)
        factors = []
        for i in range(1, len(self.orbits)):
            s = a[i] - b[i]
            if s < 0:
                raise ValidationError("negative Prym exponent: subgroups not nested")
            factors.append(self._factor(i, s, "dim V^H/m - dim V^N/m"))
        return DecompositionReport("Prym", tuple(factors))

    # -- lattice searches ------------------------------------------------------------

    def _pair_sort_key(self, inner_idx, outer_idx):
        return (
            -self.subgroups[inner_idx].order,
            -self.subgroups[outer_idx].order,
            inner_idx,
            outer_idx,
        )

    def find_prym_realizations(self, orbit_index: int):
        """All (H, N) subgroup-class pairs with rho_H = W + rho_N exactly.

        orbit_index is a position in self.orbits; use orbit_index_of to
        resolve character selectors first.
        """
        w = orbit_index
        out = []
        r = len(self.orbits)
        for ih in range(len(self.subgroups)):
            a = self.mult_vector(ih)
            if a[w] == 0:
                continue
            for io in range(len(self.subgroups)):
                if io == ih:
                    continue
                b = self.mult_vector(io)
                ok = all((a[j] - b[j] == (1 if j == w else 0)) for j in range(r))
                if not ok:
                    continue
                conj = self.conjugator(ih, io)
                if conj is None:
                    continue
                out.append(PrymWitness(ih, io, conj))
        out.sort(key=lambda p: self._pair_sort_key(p.inner, p.outer))
        return out

    def find_intersection_realizations(self, orbit_index: int, max_arity: int = 4):
        """Tuples (H, [N_1..N_k]): each rho_H - rho_{N_k} contains W exactly
        once and the residues are pairwise disjoint, k from 2 to max_arity."""
        w = orbit_index
        r = len(self.orbits)
        out = []
        for ih in range(len(self.subgroups)):
            a = self.mult_vector(ih)
            if a[w] == 0:
                continue
            cands = []
            for io in range(len(self.subgroups)):
                if io == ih:
                    continue
                conj = self.conjugator(ih, io)
                if conj is None:
                    continue
                b = self.mult_vector(io)
                diff = [a[j] - b[j] for j in range(r)]
                if any(d < 0 for d in diff):
                    continue
                if diff[w] != 1:
                    continue
                residue = tuple(d if j != w else 0 for j, d in enumerate(diff))
                cands.append((io, conj, residue))
            cands.sort(key=lambda c: (-self.subgroups[c[0]].order, c[0]))
            for arity in range(2, max_arity + 1):
                out.extend(self._disjoint_tuples(ih, cands, arity, w))
        # ties between abstractly symmetric witnesses (subgroup classes swapped
        # by an outer automorphism) are broken by the inner subgroup whose
        # multiplicity vector is lexicographically greatest
        out.sort(key=lambda t: (
            -self.subgroups[t.inner].order,
            len(t.outers),
            tuple(-self.subgroups[i].order for i in t.outers),
            tuple(-x for x in self.mult_vector(t.inner)),
            t.inner,
            t.outers,
        ))
        return out

    def _disjoint_tuples(self, ih, cands, arity, w):
        found = []

        def disjoint(u, v):
            return all(min(x, y) == 0 for x, y in zip(u, v))

        def extend(start, chosen):
            if len(chosen) == arity:
                found.append(IntersectionWitness(
                    ih,
                    tuple(c[0] for c in chosen),
                    tuple(c[1] for c in chosen),
                ))
                return
            for idx in range(start, len(cands)):
                cand = cands[idx]
                if all(disjoint(cand[2], prev[2]) for prev in chosen):
                    extend(idx + 1, chosen + [cand])

        extend(0, [])
        return found

    def find_containments(self, orbit_index: int):
        """(H, N, multiplicity): W appears in rho_H, vanishes in rho_N, H <= N."""
        w = orbit_index
        out = []
        for ih in range(len(self.subgroups)):
            mult = self.mult_vector(ih)[w]
            if mult == 0:
                continue
            for io in range(len(self.subgroups)):
                if self.mult_vector(io)[w] != 0:
                    continue
                conj = self.conjugator(ih, io)
                if conj is None:
                    continue
                out.append((ih, io, mult))
        out.sort(key=lambda t: self._pair_sort_key(t[0], t[1]))
        return out

    def find_prym_isogenies(self):
        """Distinct containment pairs with identical rho differences."""
        diffs = {}
        for ih in range(len(self.subgroups)):
            for io in range(len(self.subgroups)):
                if ih == io:
                    continue
                if self.subgroups[ih].order >= self.subgroups[io].order:
                    continue
                if not self.contains(ih, io):
                    continue
                a = self.mult_vector(ih)
                b = self.mult_vector(io)
                diff = tuple(x - y for x, y in zip(a, b))
                diffs.setdefault(diff, []).append((ih, io))
        out = []
        for diff in sorted(diffs):
            pairs = diffs[diff]
            for i in range(len(pairs)):
                for j in range(i + 1, len(pairs)):
                    out.append((pairs[i], pairs[j]))
        out.sort()
        return out

    # -- classification -------------------------------------------------------------

    def classify_factor(self, orbit_index: int, max_arity: int = 4) -> RealizabilityVerdict:
        """First matching realization: Prym pair, then intersection, then the
        complement fallback (which always exists via the trivial subgroup)."""
        w = orbit_index
        pairs = self.find_prym_realizations(w)
        if pairs:
            return RealizabilityVerdict(w, "prym", pairs[0])
        inters = self.find_intersection_realizations(w, max_arity=max_arity)
        if inters:
            return RealizabilityVerdict(w, "intersection", inters[0])
        # minimal containment: smallest ambient Prym by rho-dimension difference
        best = None
        for ih, io, _ in self.find_containments(w):
            span = self.group.order // self.subgroups[ih].order \
                - self.group.order // self.subgroups[io].order
            key = (span, ih, io)
            if best is None or key < best:
                best = key
        _, ih, io = best
        a = self.mult_vector(ih)
        b = self.mult_vector(io)
        relation = tuple(x - y for x, y in zip(a, b))
        return RealizabilityVerdict(
            w, "complement",
            ComplementWitness(ih, io, self.conjugator(ih, io), relation),
        )

    def full_report(self, max_arity: int = 4):
        """Factor list with exponents and realization witnesses for every
        nontrivial rational irreducible."""
        jac = self.decompose_jacobian()
        verdicts = [None]
        for i in range(1, len(self.orbits)):
            verdicts.append(self.classify_factor(i, max_arity=max_arity))
        return jac, tuple(verdicts)
