"""Galois number fields L = Q[t]/(p) declared by minimal polynomial and
explicit automorphisms, with exact quotient-ring arithmetic.

The toolkit never searches for splitting fields: L is always user supplied,
together with the images of t under every automorphism and the subset of
automorphisms whose fixed field is the distinguished subfield K.
Irreducibility of p is certified by Kronecker factorization, which is a
complete decision procedure at the small degrees used here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import (
    CycValue,
    poly_add,
    poly_compose_mod,
    poly_divmod,
    poly_ext_gcd,
    poly_mod,
    poly_mul,
    poly_trim,
)
from .errors import ValidationError
from .linalg import Echelon, solve_in_span

Rat = Fraction


# ---------------------------------------------------------------------------
# irreducibility over Q by Kronecker's method (desk-scale degrees)
# ---------------------------------------------------------------------------


def _int_divisors(n: int):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _to_primitive_int(poly):
    """Scale a rational polynomial to a primitive integer polynomial."""
    denom = 1
    for c in poly:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in poly]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def _interp_points(ipoly, count):
    pts = []
    x = 0
    while len(pts) < count:
        for cand in ([x] if x == 0 else [x, -x]):
            val = 0
            for c in reversed(ipoly):
                val = val * cand + c
            if val == 0:
                return None, cand  # rational root found
            pts.append((cand, val))
            if len(pts) == count:
                break
        x += 1
    return pts, None


def is_irreducible(poly) -> bool:
    """Exact irreducibility test over Q via Kronecker interpolation."""
    poly = [Rat(c) for c in poly]
    poly_trim(poly)
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    ipoly = _to_primitive_int(poly)
    for k in range(1, deg // 2 + 1):
        pts, root = _interp_points(ipoly, k + 1)
        if pts is None:
            return False
        xs = [p[0] for p in pts]
        divisor_lists = []
        for idx, (_, val) in enumerate(pts):
            divs = _int_divisors(val)
            if idx == 0:
                divisor_lists.append(divs)  # sign fixed: -q divides iff q does
            else:
                divisor_lists.append([d for dd in divs for d in (dd, -dd)])
        # Lagrange-interpolate every candidate value tuple and trial divide
        stack = [()]
        for divs in divisor_lists:
            stack = [tup + (d,) for tup in stack for d in divs]
        for values in stack:
            cand = _lagrange(xs, values)
            if cand is None or len(cand) - 1 < 1:
                continue
            if any(c.denominator != 1 for c in cand):
                continue
            q, r = poly_divmod(poly, cand)
            if not r and len(q) - 1 >= 1:
                return False
    return True


def _lagrange(xs, ys):
    n = len(xs)
    acc = []
    for i in range(n):
        num = [Rat(1)]
        den = Rat(1)
        for j in range(n):
            if j == i:
                continue
            num = poly_mul(num, [Rat(-xs[j]), Rat(1)])
            den *= Rat(xs[i] - xs[j])
        term = [c * Rat(ys[i]) / den for c in num]
        acc = poly_add(acc, term)
    return poly_trim(acc)


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------


class NumField:
    """Galois extension of Q with declared automorphisms.

    minpoly: monic rational coefficients, low degree first.
    automorphisms: images of t, each a polynomial of degree < deg(p); the
        identity need not come first in the input but is reordered to index 0.
    subfield_fixers: indices of the automorphisms generating Gal(L/K).
    """

    def __init__(self, minpoly, automorphisms, subfield_fixers=(0,), name="L"):
        minpoly = [Rat(c) for c in minpoly]
        poly_trim(minpoly)
        if not minpoly or minpoly[-1] != 1:
            raise ValidationError("minimal polynomial must be monic")
        self.degree = len(minpoly) - 1
        if self.degree < 1:
            raise ValidationError("minimal polynomial must have positive degree")
        if not is_irreducible(minpoly):
            raise ValidationError("not a field: minimal polynomial is reducible over Q")
        self.minpoly = tuple(minpoly)
        self.name = name

        autos = []
        for img in automorphisms:
            img = [Rat(c) for c in img]
            img = poly_mod(img, minpoly)
            autos.append(tuple(img))
        if len(autos) != self.degree:
            raise ValidationError(
                f"L/Q not Galois as declared: need {self.degree} automorphisms, got {len(autos)}"
            )
        if len(set(autos)) != len(autos):
            raise ValidationError("L/Q not Galois as declared: repeated automorphism")
        for img in autos:
            if poly_compose_mod(list(minpoly), list(img), list(minpoly)):
                raise ValidationError(
                    "L/Q not Galois as declared: image is not a root of the minimal polynomial"
                )
        ident = tuple([Rat(0), Rat(1)][: self.degree + 1]) if self.degree > 1 else None
        if self.degree == 1:
            autos = [tuple([Rat(0)])] if not autos else autos
            self.automorphisms = (autos[0],)
        else:
            if ident not in autos:
                raise ValidationError("L/Q not Galois as declared: identity missing")
            autos.remove(ident)
            self.automorphisms = (ident, *autos)

        # composition table; also certifies closure under composition.
        # _comp[i][j] = "apply sigma_i first, then sigma_j"; its image
        # polynomial is F_i(F_j(t)) since sigma(v) = v(F_sigma(t)) mod p.
        self._comp = []
        index = {img: i for i, img in enumerate(self.automorphisms)}
        for i, a in enumerate(self.automorphisms):
            row = []
            for j, b in enumerate(self.automorphisms):
                img = tuple(poly_compose_mod(list(a), list(b), list(minpoly)))
                if img not in index:
                    raise ValidationError(
                        "L/Q not Galois as declared: automorphisms not closed under composition"
                    )
                row.append(index[img])
            self._comp.append(tuple(row))

        fixers = tuple(sorted(set(int(i) for i in subfield_fixers)))
        if not fixers or fixers[0] != 0:
            fixers = tuple(sorted(set(fixers) | {0}))
        for i in fixers:
            if not 0 <= i < len(self.automorphisms):
                raise ValidationError("subfield fixer index out of range")
        for i in fixers:
            for j in fixers:
                if self._comp[i][j] not in fixers:
                    raise ValidationError("subfield fixers are not closed under composition")
        self.subfield_fixers = fixers

    # -- element constructors ----------------------------------------------

    def value(self, coeffs) -> "NumFieldValue":
        return NumFieldValue(self, coeffs)

    def zero(self) -> "NumFieldValue":
        return NumFieldValue(self, [])

    def one(self) -> "NumFieldValue":
        return NumFieldValue(self, [Rat(1)])

    def gen(self) -> "NumFieldValue":
        if self.degree == 1:
            return NumFieldValue(self, [-self.minpoly[0]])
        return NumFieldValue(self, [Rat(0), Rat(1)])

    def from_rational(self, q) -> "NumFieldValue":
        return NumFieldValue(self, [Rat(q)])

    # -- Galois action -------------------------------------------------------

    def apply_auto(self, index: int, v: "NumFieldValue") -> "NumFieldValue":
        if v.field is not self:
            raise ValidationError("value belongs to a different field")
        img = list(self.automorphisms[index])
        return NumFieldValue(
            self, poly_compose_mod(list(v.coeffs), img, list(self.minpoly))
        )

    def compose(self, i: int, j: int) -> int:
        """Index of the composite map "apply sigma_i first, then sigma_j"."""
        return self._comp[i][j]

    def coset_reps_mod_fixers(self):
        """Deterministic transversal of the left cosets sigma * Gal(L/K).

        Left cosets act consistently on elements fixed by the subfield
        fixers, which is what relative traces down to Q need.
        """
        seen = set()
        reps = []
        for i in range(len(self.automorphisms)):
            if i in seen:
                continue
            reps.append(i)
            for f in self.subfield_fixers:
                seen.add(self._comp[f][i])  # sigma_i composed after a fixer
        return tuple(reps)

    def __eq__(self, other):
        return (
            isinstance(other, NumField)
            and self.minpoly == other.minpoly
            and self.automorphisms == other.automorphisms
            and self.subfield_fixers == other.subfield_fixers
        )

    def __hash__(self):
        return hash((self.minpoly, self.automorphisms, self.subfield_fixers))

    def __repr__(self):
        return f"NumField(deg {self.degree}, {len(self.automorphisms)} autos)"


class NumFieldValue:
    """Element of a NumField: polynomial in t of degree < [L:Q]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumField, coeffs):
        coeffs = [Rat(c) for c in coeffs]
        if len(coeffs) > field.degree:
            coeffs = poly_mod(coeffs, list(field.minpoly))
        coeffs += [Rat(0)] * (field.degree - len(coeffs))
        self.field = field
        self.coeffs = tuple(coeffs[: field.degree])

    def _coerce(self, other) -> "NumFieldValue":
        if isinstance(other, NumFieldValue):
            if other.field is not self.field and other.field != self.field:
                raise ValidationError("mixing values from different number fields")
            return other
        return NumFieldValue(self.field, [Rat(other)])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Rat:
        if not self.is_rational():
            raise ValidationError("number field value is not rational")
        return self.coeffs[0] if self.coeffs else Rat(0)

    def __add__(self, other):
        other = self._coerce(other)
        return NumFieldValue(self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return NumFieldValue(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return NumFieldValue(
            self.field, poly_mul(list(self.coeffs), list(other.coeffs))
        )

    __rmul__ = __mul__

    def inverse(self) -> "NumFieldValue":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in number field")
        g, s, _ = poly_ext_gcd(list(self.coeffs), list(self.field.minpoly))
        if len(g) != 1:
            raise ValidationError("not a field: zero divisor encountered")
        return NumFieldValue(self.field, [c / g[0] for c in s])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rat)):
            return self.is_rational() and self.as_rational() == other
        if not isinstance(other, NumFieldValue):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.minpoly, self.coeffs))

    def __repr__(self):
        return f"NF({render_nf(self)})"


def render_nf(v: NumFieldValue) -> str:
    parts = []
    for i, c in enumerate(v.coeffs):
        if c == 0:
            continue
        mon = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if c == 1 and i > 0:
            term = mon
        elif c == -1 and i > 0:
            term = "-" + mon
        else:
            term = str(c) if i == 0 else f"{c}*{mon}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) or "0"


RATIONAL_FIELD = NumField([Rat(0), Rat(1)], [[Rat(0)]], (0,), name="Q")
"""Degree-1 field Q itself, for uniform treatment of the split case."""


# ---------------------------------------------------------------------------
# embedding of cyclotomic values into a declared number field
# ---------------------------------------------------------------------------


class CycEmbedding:
    """Q-linear embedding of the field generated by one cyclotomic value.

    Declared by a generator g (a CycValue) and its image in L; any value
    lying in Q(g) embeds by solving for its coordinates in the power basis
    of g and mapping.  Validated by checking the minimal polynomial of g
    annihilates the image.
    """

    def __init__(self, field: NumField, generator: CycValue | None, image: NumFieldValue | None):
        self.field = field
        self.generator = generator
        if generator is None:
            self.image = None
            self.powers = None
            return
        if image is None or image.field != field:
            raise ValidationError("embedding image must live in the target field")
        self.image = image
        # power basis of Q(g) inside the cyclotomic field
        level = generator.level
        zero, one = Rat(0), Rat(1)
        powers = [CycValue.one(level)]
        vectors = [list(powers[0].coeffs)]
        ech = Echelon(zero, one)
        ech.add(vectors[0])
        while True:
            nxt = powers[-1] * generator
            if ech.contains(list(nxt.coeffs)):
                break
            ech.add(list(nxt.coeffs))
            powers.append(nxt)
            vectors.append(list(nxt.coeffs))
        self.powers = powers
        self._vectors = vectors
        # minimal polynomial of g: express g^d in lower powers
        top = powers[-1] * generator
        coords = solve_in_span(vectors, list(top.coeffs), zero, one)
        minpoly = [-c for c in coords] + [one]
        # validate: minpoly(image) == 0 in L
        acc = field.zero()
        for c in reversed(minpoly):
            acc = acc * image + field.from_rational(c)
        if not acc.is_zero():
            raise ValidationError(
                "declared embedding is inconsistent: image is not a conjugate of the generator"
            )

    def embed(self, v: CycValue) -> NumFieldValue:
        if v.is_rational():
            return self.field.from_rational(v.as_rational())
        if self.generator is None:
            raise ValidationError("no embedding declared for irrational cyclotomic values")
        target = v.to_level(self.generator.level)
        coords = solve_in_span(
            self._vectors, list(target.coeffs), Rat(0), Rat(1)
        )
        if coords is None:
            raise ValidationError("value lies outside the declared embedded subfield")
        acc = self.field.zero()
        for c, p in zip(coords, _power_list(self.image, len(coords))):
            if c:
                acc = acc + p * c
        return acc


def _power_list(x: NumFieldValue, n: int):
    out = [x.field.one()]
    for _ in range(n - 1):
        out.append(out[-1] * x)
    return out
