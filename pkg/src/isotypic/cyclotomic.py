"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Values are stored in the power basis {zeta^0, ..., zeta^(phi(e)-1)} after
reduction modulo the e-th cyclotomic polynomial, with Fraction coefficients.
The Galois group of Q(zeta_e)/Q is identified with the units of Z/e acting by
zeta -> zeta^k; subfields are represented implicitly by their stabilizer
inside that unit group.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ValidationError

Rat = Fraction

# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a, b):
    n = max(len(a), len(b))
    out = [Rat(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Rat(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return poly_trim(out)


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Rat(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_divmod(a, b):
    """Quotient and remainder of a by b (b nonzero), exact over Q."""
    if not poly_trim(list(b)):
        raise ZeroDivisionError("polynomial division by zero")
    b = poly_trim(list(b))
    a = poly_trim(list(a))
    q = [Rat(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and poly_trim(a):
        if not a:
            break
        shift = len(a) - len(b)
        coef = a[-1] / lead
        q[shift] = coef
        for i, cb in enumerate(b):
            a[shift + i] -= coef * cb
        poly_trim(a)
    return poly_trim(q), a


def poly_mod(a, b):
    return poly_divmod(a, b)[1]


def poly_eval(p, x):
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose_mod(p, q, modulus):
    """p(q(t)) reduced mod modulus."""
    acc = []
    for c in reversed(p):
        acc = poly_mod(poly_add(poly_mul(acc, q), [Rat(c)] if c else []), modulus)
    return acc


def poly_ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic unless zero."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Rat(1)], []
    t0, t1 = [], [Rat(1)]
    while poly_trim(r1):
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        t0 = [c / lead for c in t0]
    return r0, s0, t0


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValidationError("cyclotomic level must be positive")
    # x^n - 1 divided by the product of cyclotomic polynomials of proper divisors
    num = [Rat(-1)] + [Rat(0)] * (n - 1) + [Rat(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def unit_group(e: int):
    """Units of Z/e in increasing order; the Galois group of Q(zeta_e)/Q."""
    return tuple(k for k in range(1, max(e, 2)) if gcd(k, e) == 1) or (1,)


# ---------------------------------------------------------------------------
# cyclotomic field elements
# ---------------------------------------------------------------------------


class CycValue:
    """Element of Q(zeta_e) in reduced power-basis form."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        phi = euler_phi(level)
        coeffs = [Rat(c) for c in coeffs]
        if len(coeffs) > phi:
            modulus = list(cyclotomic_polynomial(level))
            coeffs = poly_mod(coeffs, modulus)
        coeffs += [Rat(0)] * (phi - len(coeffs))
        self.level = level
        self.coeffs = tuple(coeffs[:phi])

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q, level: int = 1) -> "CycValue":
        return CycValue(level, [Rat(q)])

    @staticmethod
    def root_of_unity(level: int, power: int = 1) -> "CycValue":
        """zeta_level ** power."""
        power %= level
        return CycValue(level, [Rat(0)] * power + [Rat(1)])

    @staticmethod
    def zero(level: int = 1) -> "CycValue":
        return CycValue(level, [])

    @staticmethod
    def one(level: int = 1) -> "CycValue":
        return CycValue(level, [Rat(1)])

    # -- structure ---------------------------------------------------------

    def to_level(self, new_level: int) -> "CycValue":
        """Re-express at a level that the current level divides."""
        if new_level == self.level:
            return self
        if new_level % self.level != 0:
            raise ValidationError(
                f"cannot promote level {self.level} to non-multiple {new_level}"
            )
        step = new_level // self.level
        out = [Rat(0)] * (max(len(self.coeffs), 1) * step)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] += c
        return CycValue(new_level, out)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Rat:
        if not self.is_rational():
            raise ValidationError(f"value {self!r} is not rational")
        return self.coeffs[0] if self.coeffs else Rat(0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def galois(self, k: int) -> "CycValue":
        """Image under the automorphism zeta -> zeta^k, gcd(k, level) = 1."""
        e = self.level
        k %= e if e > 1 else 1
        if e > 1 and gcd(k, e) != 1:
            raise ValidationError(f"{k} is not a unit mod {e}")
        out = [Rat(0)] * e
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * k) % e] += c
        return CycValue(e, out)

    def conjugate(self) -> "CycValue":
        return self.galois(-1)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _common(a: "CycValue", b) -> tuple["CycValue", "CycValue"]:
        if not isinstance(b, CycValue):
            b = CycValue.from_rational(b)
        if a.level == b.level:
            return a, b
        lev = a.level * b.level // gcd(a.level, b.level)
        return a.to_level(lev), b.to_level(lev)

    def __add__(self, other):
        a, b = CycValue._common(self, other)
        return CycValue(a.level, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycValue(self.level, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycValue) else CycValue.from_rational(-Rat(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = CycValue._common(self, other)
        return CycValue(a.level, poly_mul(list(a.coeffs), list(b.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycValue":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        modulus = list(cyclotomic_polynomial(self.level))
        g, s, _ = poly_ext_gcd(list(self.coeffs), modulus)
        if len(g) != 1:
            raise ValidationError("non-invertible cyclotomic value")  # pragma: no cover
        return CycValue(self.level, [c / g[0] for c in s])

    def __truediv__(self, other):
        a, b = CycValue._common(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycValue.from_rational(other).to_level(self.level) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycValue.one(self.level)
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
        if not isinstance(other, CycValue):
            return NotImplemented
        a, b = CycValue._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self.level, self.coeffs))

    def sort_key(self):
        return self.coeffs

    def __repr__(self):
        return f"CycValue({self.level}, {render_cyc(self)!r})"


def render_cyc(v: CycValue) -> str:
    """Human form: integer/rational combination of powers of z<level>."""
    if v.is_rational():
        return str(v.as_rational())
    parts = []
    for i, c in enumerate(v.coeffs):
        if c == 0:
            continue
        mon = "1" if i == 0 else (f"z{v.level}" if i == 1 else f"z{v.level}^{i}")
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


# ---------------------------------------------------------------------------
# stabilizers and traces
# ---------------------------------------------------------------------------


def char_field_stabilizer(values, level: int | None = None):
    """Units of Z/e fixing every given value: the stabilizer of the field
    they generate.  Gal(K/Q) is the quotient of the unit group by the result."""
    values = list(values)
    if level is None:
        level = 1
        for v in values:
            level = level * v.level // gcd(level, v.level)
    values = [v.to_level(level) for v in values]
    fixers = []
    for k in unit_group(level):
        if all(v.galois(k) == v for v in values):
            fixers.append(k)
    return tuple(fixers)


def stabilizer_coset_reps(stabilizer, level: int):
    """Deterministic coset representatives of the stabilizer in the unit group."""
    stab = set(stabilizer)
    seen = set()
    reps = []
    for k in unit_group(level):
        if k in seen:
            continue
        reps.append(k)
        for s in stab:
            seen.add((k * s) % level if level > 1 else 1)
    return tuple(reps)


def trace_over_stabilizer(a: CycValue, stabilizer) -> CycValue:
    """Relative trace of a into the fixed field of the stabilizer."""
    total = CycValue.zero(a.level)
    for k in stabilizer:
        total = total + a.galois(k)
    return total


def trace_to_rational(a: CycValue, stabilizer) -> Rat:
    """Trace from the fixed field K of the stabilizer down to Q.

    Requires a to lie in K; the result is the sum of the [K:Q] distinct
    conjugates of a and is always rational.
    """
    for k in stabilizer:
        if a.galois(k) != a:
            raise ValidationError("value not in declared subfield")
    total = CycValue.zero(a.level)
    for rep in stabilizer_coset_reps(stabilizer, a.level):
        total = total + a.galois(rep)
    return total.as_rational()
