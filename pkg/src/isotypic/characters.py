"""Exact character tables and rational irreducibles.

The table is computed by the classical modular method: class-sum structure
constants are split into common eigenspaces over a prime p = 1 (mod e) with
p > 2*sqrt(|G|), then character values are lifted to Q(zeta_e) by discrete
Fourier inversion on the power map.  Everything downstream of the lift is
exact cyclotomic arithmetic; both orthogonality relations are verified on
every computed or loaded table.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import CycValue, char_field_stabilizer, trace_to_rational, unit_group
from .errors import InvariantError, ValidationError
from .groups import FiniteGroup

Rat = Fraction


@dataclass(frozen=True)
class Character:
    values: tuple[CycValue, ...]   # one per conjugacy class
    degree: int

    def sort_key(self):
        return (self.degree, tuple(v.sort_key() for v in self.values))


class CharacterTable:
    def __init__(self, group: FiniteGroup, chars, validate: bool = True):
        self.group = group
        self.level = group.exponent
        self.classes = group.conjugacy_classes()
        self.chars = tuple(chars)
        if validate:
            self.validate()

    @property
    def class_sizes(self):
        return tuple(len(c.members) for c in self.classes)

    def value(self, char_index: int, g: int) -> CycValue:
        return self.chars[char_index].values[self.group.class_index(g)]

    def validate(self):
        n = self.group.order
        r = len(self.classes)
        if len(self.chars) != r:
            raise ValidationError(
                f"table has {len(self.chars)} rows but the group has {r} classes"
            )
        if sum(c.degree * c.degree for c in self.chars) != n:
            raise ValidationError("sum of squared degrees does not equal the group order")
        for i, c in enumerate(self.chars):
            if len(c.values) != r:
                raise ValidationError(f"row {i} has wrong length")
            ident = c.values[0]
            if not (ident.is_rational() and ident.as_rational() == c.degree > 0):
                raise ValidationError(f"row {i}: identity value does not match degree")
        sizes = self.class_sizes
        for i in range(r):
            for j in range(i, r):
                got = inner_product(self, self.chars[i].values, self.chars[j].values)
                want = 1 if i == j else 0
                if got != want:
                    raise ValidationError(
                        f"row orthogonality fails for rows ({i},{j}): <.,.> = {got!r}"
                    )
        for i in range(r):
            for j in range(i, r):
                total = CycValue.zero(self.level)
                for c in self.chars:
                    total = total + c.values[i] * c.values[j].conjugate()
                want = Rat(n, sizes[i]) if i == j else Rat(0)
                if total != want:
                    raise ValidationError(
                        f"column orthogonality fails for classes ({i},{j})"
                    )

    def __repr__(self):
        return f"CharacterTable({self.group!r}, {len(self.chars)} irreducibles)"


def inner_product(table: CharacterTable, a, b) -> CycValue:
    """(1/|G|) sum_g a(g) conj(b(g)) for class functions given per class."""
    total = CycValue.zero(table.level)
    for size, x, y in zip(table.class_sizes, a, b):
        total = total + x * y.conjugate() * size
    return total * Rat(1, table.group.order)


def fixed_dim(table: CharacterTable, char: Character, members) -> int:
    """dim of the subspace of the representation fixed by the subgroup,
    computed as the average of character values over the subgroup."""
    group = table.group
    total = CycValue.zero(table.level)
    for h in members:
        total = total + char.values[group.class_index(h)]
    total = total * Rat(1, len(members))
    if not total.is_rational():
        raise InvariantError("invalid character/subgroup data: fixed dimension not rational")
    q = total.as_rational()
    if q.denominator != 1 or q < 0:
        raise InvariantError(
            f"invalid character/subgroup data: fixed dimension {q} not a non-negative integer"
        )
    return int(q)


# ---------------------------------------------------------------------------
# Dixon-Burnside computation
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    p = max(2 * isqrt(order), 2)
    while True:
        p += 1
        if (p - 1) % exponent == 0 and _is_prime(p):
            return p


def _primitive_root(p: int) -> int:
    fac = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in fac):
            return w
    raise InvariantError("no primitive root found")  # pragma: no cover


def _nullspace_mod(matrix, p):
    """Row basis of the right nullspace of matrix over F_p."""
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-rows[r][fc]) % p
        basis.append(vec)
    return basis


def compute_character_table(group: FiniteGroup) -> CharacterTable:
    """Exact irreducible character table, rows sorted by (degree, values)."""
    classes = group.conjugacy_classes()
    r = len(classes)
    n = group.order
    e = group.exponent
    p = _dixon_prime(n, e)
    sizes = [len(c.members) for c in classes]
    reps = [c.representative for c in classes]
    inv_class = [group.class_index(group.inv(rep)) for rep in reps]

    # structure constants: mult[i][k][j] = #{u in C_i : u^-1 * w_k in C_j}
    mats = []
    for i in range(r):
        mat = [[0] * r for _ in range(r)]
        for k in range(r):
            wk = reps[k]
            row = mat[k]
            for u in classes[i].members:
                row[group.class_index(group.mul(group.inv(u), wk))] += 1
        mats.append(mat)

    # split F_p^r into common eigenspaces of all class-sum matrices
    subspaces = [[[1 if c == j else 0 for c in range(r)] for j in range(r)]]
    subspaces = [subspaces[0]]
    for i in range(1, r):
        if all(len(s) == 1 for s in subspaces):
            break
        mat = mats[i]
        new_spaces = []
        for basis in subspaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            d = len(basis)
            images = []
            for vec in basis:
                img = [sum(mat[k][j] * vec[j] for j in range(r)) % p for k in range(r)]
                images.append(img)
            # restricted action: images[a] = sum_b action[a][b] basis[b], so
            # coordinate vectors transform by the transpose of action
            action = _solve_action(basis, images, p)
            act_t = [[action[b][a] for b in range(d)] for a in range(d)]
            found = 0
            for lam in range(p):
                if found >= d:
                    break
                shifted = [
                    [(act_t[a][b] - (lam if a == b else 0)) % p for b in range(d)]
                    for a in range(d)
                ]
                null = _nullspace_mod(shifted, p)
                if not null:
                    continue
                sub = []
                for coefs in null:
                    vec = [0] * r
                    for c, bvec in zip(coefs, basis):
                        if c:
                            for t in range(r):
                                vec[t] = (vec[t] + c * bvec[t]) % p
                    sub.append(vec)
                new_spaces.append(sub)
                found += len(null)
            if found != d:
                raise InvariantError("splitting failure")  # pragma: no cover
        subspaces = new_spaces
    if any(len(s) != 1 for s in subspaces):
        raise InvariantError("splitting failure")  # pragma: no cover

    # recover normalized character values mod p from eigenvalues
    w = _primitive_root(p)
    z = pow(w, (p - 1) // e, p)  # fixed primitive e-th root of unity mod p
    power_class = []
    for j in range(r):
        g = reps[j]
        o = group.elem_orders[g]
        power_class.append([group.class_index(group.power(g, k)) for k in range(o)])

    chars = []
    for basis in subspaces:
        v = basis[0]
        j0 = next(j for j in range(r) if v[j] % p)
        omegas = []
        for i in range(r):
            num = sum(mats[i][j0][j] * v[j] for j in range(r)) % p
            omegas.append((num * pow(v[j0], p - 2, p)) % p)
        # chi(g_i)/chi(1) = omega_i / |C_i|
        ratio = [
            (omegas[i] * pow(sizes[i] % p, p - 2, p)) % p for i in range(r)
        ]
        denom = sum(
            ratio[i] * ratio[inv_class[i]] * sizes[i] for i in range(r)
        ) % p
        deg_sq = (n * pow(denom, p - 2, p)) % p
        deg = next(
            (s for s in range(1, p // 2 + 1) if (s * s) % p == deg_sq), None
        )
        if deg is None:
            raise InvariantError("splitting failure")  # pragma: no cover
        vals_mod = [(deg * ratio[i]) % p for i in range(r)]

        values = []
        for j in range(r):
            o = len(power_class[j])
            zo = pow(z, e // o, p)
            inv_o = pow(o % p, p - 2, p)
            coeffs = [Rat(0)] * e
            for i in range(o):
                c = 0
                zoi = pow(zo, (o - i) % o, p)  # zo^{-i}
                acc = 1
                for k in range(o):
                    c = (c + vals_mod[power_class[j][k]] * acc) % p
                    acc = (acc * zoi) % p
                c = (c * inv_o) % p
                if c:
                    coeffs[(i * (e // o)) % e] += c
            values.append(CycValue(e, coeffs))
        chars.append(Character(tuple(values), deg))

    chars.sort(key=Character.sort_key)
    return CharacterTable(group, chars)


def _solve_action(basis, images, p):
    """Matrix of the restricted action: images[a] = sum_b action[a][b] basis[b]."""
    d = len(basis)
    r = len(basis[0])
    # gaussian elimination with combo tracking over F_p
    rows = []
    pivots = []
    combos = []
    for idx, vec in enumerate(basis):
        vec = list(vec)
        combo = [0] * d
        combo[idx] = 1
        for row, piv, rc in zip(rows, pivots, combos):
            c = vec[piv] % p
            if c:
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
                combo = [(a - c * b) % p for a, b in zip(combo, rc)]
        piv = next((j for j in range(r) if vec[j] % p), None)
        if piv is None:
            raise InvariantError("splitting failure")  # pragma: no cover
        inv = pow(vec[piv], p - 2, p)
        rows.append([(x * inv) % p for x in vec])
        combos.append([(x * inv) % p for x in combo])
        pivots.append(piv)
    action = []
    for img in images:
        vec = list(img)
        combo = [0] * d
        for row, piv, rc in zip(rows, pivots, combos):
            c = vec[piv] % p
            if c:
                vec = [(a - c * b) % p for a, b in zip(vec, row)]
                combo = [(a - c * b) % p for a, b in zip(combo, rc)]
        if any(x % p for x in vec):
            raise InvariantError("splitting failure")  # pragma: no cover
        action.append([(-x) % p for x in combo])
    return action


# ---------------------------------------------------------------------------
# rational irreducibles: Galois orbits, Schur status, rho decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchurStatus:
    """Three-state knowledge about the Schur index of an orbit.

    exact:    m is certain (divisor bound 1, or stated by a trusted source).
    asserted: m passed the representation-based validation suite.
    bounded:  only 1 <= m | divisor_bound is known; the divisor bound is
              used as the working multiplier and results carry a
              conditional flag.
    """

    kind: str                 # "exact" | "asserted" | "bounded"
    m: int | None
    divisor_bound: int
    evidence: str = ""

    @property
    def effective(self) -> int:
        return self.m if self.m is not None else self.divisor_bound

    @property
    def conditional(self) -> bool:
        return self.kind == "bounded"

    def describe(self) -> str:
        if self.kind == "bounded":
            return f"bounded (working value {self.divisor_bound}, divides {self.divisor_bound})"
        return f"{self.kind} m = {self.m}"


@dataclass(frozen=True)
class RationalIrrep:
    """Galois orbit of complex irreducibles with its field and Schur data."""

    char_indices: tuple[int, ...]
    stabilizer: tuple[int, ...]    # units of Z/e fixing the character values
    degree: int                    # common degree n of the orbit members
    field_degree: int              # [K:Q] = orbit size
    schur: SchurStatus

    @property
    def multiplier(self) -> int:
        return self.schur.effective

    def rational_dim(self) -> int:
        """dim_Q of the rational irreducible: m * n * [K:Q]."""
        return self.multiplier * self.degree * self.field_degree

    def label(self) -> str:
        inner = " + ".join(f"V{i + 1}" for i in self.char_indices)
        if self.multiplier > 1:
            return f"{self.multiplier}({inner})" if len(self.char_indices) > 1 else f"{self.multiplier}{inner}"
        return f"({inner})" if len(self.char_indices) > 1 else inner


def schur_divisor_bound(table: CharacterTable, char_index: int) -> int:
    """gcd of <rho_H, V> over all subgroup classes: a multiple of the Schur index."""
    char = table.chars[char_index]
    g = 0
    for sub in table.group.subgroup_classes():
        g = gcd(g, fixed_dim(table, char, sub.members))
        if g == 1:
            return 1
    return g


def galois_orbits(table: CharacterTable):
    """Partition of the irreducibles into Galois orbits, trivial orbit first."""
    e = table.level
    r = len(table.chars)
    by_values = {tuple(v.sort_key() for v in c.values): i for i, c in enumerate(table.chars)}
    assigned = [False] * r
    orbits = []
    for i in range(r):
        if assigned[i]:
            continue
        members = set()
        for k in unit_group(e):
            img = tuple(v.galois(k).sort_key() for v in table.chars[i].values)
            j = by_values.get(img)
            if j is None:
                raise ValidationError("table is not closed under the Galois action")
            members.add(j)
        members = tuple(sorted(members))
        for j in members:
            assigned[j] = True
        orbits.append(members)

    units = len(unit_group(e))
    result = []
    for members in orbits:
        stab = char_field_stabilizer(list(table.chars[members[0]].values), level=e)
        for j in members[1:]:
            if char_field_stabilizer(list(table.chars[j].values), level=e) != stab:
                raise InvariantError("orbit members do not share a character field")
        field_degree = units // len(stab)
        if field_degree != len(members):
            raise InvariantError("orbit size does not match the character field degree")
        degrees = {table.chars[j].degree for j in members}
        if len(degrees) != 1:
            raise InvariantError("orbit members have different degrees")
        g = schur_divisor_bound(table, members[0])
        if g == 1:
            status = SchurStatus("exact", 1, 1, "multiplicity-one subgroup")
        else:
            status = SchurStatus("bounded", None, g)
        result.append(
            RationalIrrep(members, stab, degrees.pop(), field_degree, status)
        )

    def is_trivial(w: RationalIrrep) -> bool:
        c = table.chars[w.char_indices[0]]
        return c.degree == 1 and all(v == 1 for v in c.values)

    result.sort(key=lambda w: (not is_trivial(w), w.char_indices[0]))
    return tuple(result)


def assert_schur(orbit: RationalIrrep, m: int, evidence: str = "user assertion") -> RationalIrrep:
    """Upgrade an orbit's Schur status to an asserted value after sanity checks."""
    if m < 1 or orbit.degree % m != 0:
        raise ValidationError(f"asserted Schur index {m} must divide the degree {orbit.degree}")
    if orbit.schur.divisor_bound % m != 0:
        raise ValidationError(
            f"asserted Schur index {m} does not divide the multiplicity gcd "
            f"{orbit.schur.divisor_bound}"
        )
    kind = "exact" if m == 1 else "asserted"
    return replace(orbit, schur=SchurStatus(kind, m, orbit.schur.divisor_bound, evidence))


def rational_character(table: CharacterTable, orbit: RationalIrrep):
    """Rational-valued class function of the orbit: m * Tr_{K/Q}(chi).

    Returns (values, scaled): when the Schur status is only bounded the trace
    character is returned unscaled and scaled is False.
    """
    base = table.chars[orbit.char_indices[0]]
    traces = [
        Rat(trace_to_rational(v, orbit.stabilizer)) for v in
        (val.to_level(table.level) for val in base.values)
    ]
    if orbit.schur.kind == "bounded":
        return traces, False
    return [orbit.schur.m * t for t in traces], True


@dataclass(frozen=True)
class RhoDecomposition:
    """Multiplicities of the rational irreducibles in the permutation
    representation induced from the trivial representation of a subgroup."""

    subgroup_members: tuple[int, ...]
    fixed_dims: tuple[int, ...]        # <rho_H, V_j> per orbit
    multiplicities: tuple[int, ...]    # fixed_dims / m per orbit
    conditional: bool


def rho_decomposition(table: CharacterTable, orbits, members) -> RhoDecomposition:
    """Decompose rho_H over the rational irreducibles: a_j = <rho_H, V_j> / m_j."""
    members = tuple(sorted(members))
    dims = []
    mults = []
    conditional = False
    for orbit in orbits:
        d = fixed_dim(table, table.chars[orbit.char_indices[0]], members)
        m = orbit.multiplier
        if d % m != 0:
            raise InvariantError(
                f"Schur index inconsistent with the rho decomposition: "
                f"multiplicity {d} not divisible by m = {m}"
            )
        dims.append(d)
        mults.append(d // m)
        conditional = conditional or (d != 0 and orbit.schur.conditional)
    index = table.group.order // len(members)
    total = sum(
        a * orbit.rational_dim() for a, orbit in zip(mults, orbits)
    )
    if total != index:
        raise InvariantError(
            f"rho decomposition dimension count {total} != index {index}"
        )
    return RhoDecomposition(members, tuple(dims), tuple(mults), conditional)
