"""Manifest-driven verification of bundled or user-supplied elements.

A manifest is a self-contained JSON document: a group specification, an
optional field descriptor, a dictionary of named elements (serialized or
derived by expressions), and a list of checks.  Every check is an exact
assertion; the runner reports one (description, ok) pair per check in
manifest order.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import compute_character_table, galois_orbits, rho_decomposition
from .errors import ValidationError
from .groupalgebra import AlgebraElement, RATIONALS, ideal_dim
from .groups import FiniteGroup, generator_name
from .serialize import element_from_json, field_from_json, group_from_spec

Rat = Fraction


# -- word parsing ("x*y^2,x^10" style) ----------------------------------------


def parse_word(group: FiniteGroup, text: str) -> int:
    """Evaluate a word like "x*y^2" or "x^-1*y" to an element index."""
    text = text.strip()
    if text in ("", "1"):
        return 0
    letters = []
    for factor in text.split("*"):
        factor = factor.strip()
        if "^" in factor:
            name, exp = factor.split("^", 1)
            exp = int(exp)
        else:
            name, exp = factor, 1
        name = name.strip()
        idx = None
        for i in range(len(group.generators)):
            if generator_name(i) == name:
                idx = i
                break
        if idx is None:
            raise ValidationError(f"unknown generator name {name!r}")
        letter = idx + 1
        if exp < 0:
            letters.extend([-letter] * (-exp))
        else:
            letters.extend([letter] * exp)
    return group.evaluate_word(letters)


def parse_subgroup(group: FiniteGroup, spec) -> tuple[int, ...]:
    """Members of the subgroup generated by comma-separated words."""
    if isinstance(spec, str):
        words = [w for w in spec.split(",") if w.strip()]
    else:
        words = list(spec)
    gens = [parse_word(group, w) for w in words]
    return group.subgroup_generated(gens).members


# -- manifest evaluation ---------------------------------------------------------


class ManifestRunner:
    def __init__(self, manifest: dict):
        self.manifest = manifest
        self.group = group_from_spec(manifest["group"])
        self.field = field_from_json(manifest["field"]) if "field" in manifest else None
        self._elements = {}
        self._field_cache = {}
        for name, spec in manifest.get("elements", {}).items():
            if "derive" in spec:
                continue
            if spec.get("field") == "L":  # reference to the manifest-level field
                spec = dict(spec, field=manifest["field"])
            self._elements[name] = element_from_json(self.group, spec, self._field_cache)
        pending = {name: spec["derive"] for name, spec in
                   manifest.get("elements", {}).items() if "derive" in spec}
        while pending:
            progressed = False
            for name in sorted(pending):
                try:
                    self._elements[name] = self.eval_expr(pending[name])
                except ValidationError:
                    continue
                del pending[name]
                progressed = True
                break
            if not progressed:
                raise ValidationError(
                    f"cannot resolve derived elements {sorted(pending)} (cycle or unknown name)"
                )
        self._table = None
        self._orbits = None

    @property
    def table(self):
        if self._table is None:
            self._table = compute_character_table(self.group)
            self._orbits = galois_orbits(self._table)
        return self._table

    @property
    def orbits(self):
        self.table
        return self._orbits

    def eval_expr(self, expr) -> AlgebraElement:
        if isinstance(expr, str):
            if expr not in self._elements:
                raise ValidationError(f"unknown element {expr!r} in manifest expression")
            return self._elements[expr]
        op = expr.get("op")
        if op == "add":
            args = [self.eval_expr(a) for a in expr["args"]]
            acc = args[0]
            for a in args[1:]:
                acc = acc + a
            return acc
        if op == "mul":
            args = [self.eval_expr(a) for a in expr["args"]]
            acc = args[0]
            for a in args[1:]:
                acc = acc * a
            return acc
        if op == "galois":
            return self.eval_expr(expr["arg"]).apply_galois(int(expr["auto"]))
        if op == "scale":
            return self.eval_expr(expr["arg"]) * Rat(expr["by"])
        raise ValidationError(f"unknown manifest operation {op!r}")

    def _match_orbit(self, matcher) -> int:
        hits = []
        for i, o in enumerate(self.orbits):
            if o.degree != int(matcher["degree"]):
                continue
            if len(o.char_indices) != int(matcher["orbit_size"]):
                continue
            hits.append(i)
        if len(hits) != 1:
            raise ValidationError(f"orbit matcher {matcher} matched {len(hits)} orbits")
        return hits[0]

    def _rho_diff(self, check):
        minuend = parse_subgroup(self.group, check["minuend"])
        subtrahend = parse_subgroup(self.group, check["subtrahend"])
        a = rho_decomposition(self.table, self.orbits, minuend).multiplicities
        b = rho_decomposition(self.table, self.orbits, subtrahend).multiplicities
        return [x - y for x, y in zip(a, b)]

    def run_check(self, check: dict) -> tuple[str, bool]:
        kind = check["check"]
        label = check.get("label", kind)
        if kind == "idempotent":
            el = self.eval_expr(check["of"])
            return (f"{label}: {check['of']} is idempotent", el.is_idempotent())
        if kind == "zero":
            return (f"{label}", self.eval_expr(check["of"]).is_zero())
        if kind == "equal":
            left = self.eval_expr(check["left"])
            right = self.eval_expr(check["right"])
            return (f"{label}", left == right)
        if kind == "orthogonal":
            left = self.eval_expr(check["left"])
            right = self.eval_expr(check["right"])
            return (
                f"{label}: {check['left']} and {check['right']} are orthogonal",
                left.is_orthogonal_to(right),
            )
        if kind == "rational":
            return (f"{label}: {check['of']} has rational coefficients",
                    self.eval_expr(check["of"]).is_rational())
        if kind == "subfield_fixed":
            el = self.eval_expr(check["of"])
            if el.domain.kind != "numberfield":
                return (f"{label}", False)
            ok = all(el.fixed_by_galois(h) for h in el.domain.field.subfield_fixers)
            return (f"{label}: {check['of']} lies in the fixed subfield", ok)
        if kind == "central":
            return (f"{label}: {check['of']} is central", self.eval_expr(check["of"]).is_central())
        if kind == "bi_invariant":
            el = self.eval_expr(check["of"])
            members = parse_subgroup(self.group, check["subgroup"])
            ok = True
            for h in members:
                b = AlgebraElement.basis(self.group, h, el.domain)
                if b * el != el or el * b != el:
                    ok = False
                    break
            return (f"{label}: {check['of']} is two-sided invariant", ok)
        if kind == "ideal_dim":
            el = self.eval_expr(check["of"])
            if check.get("over") == "Q":
                el = el.to_domain(RATIONALS)
            d = ideal_dim(el)
            return (f"{label}: ideal dim of {check['of']} = {check['dim']} (got {d})",
                    d == int(check["dim"]))
        if kind == "rho_identity":
            diff = self._rho_diff(check)
            want = [0] * len(self.orbits)
            for matcher, mult in check["exact"]:
                want[self._match_orbit(matcher)] = int(mult)
            return (f"{label}", diff == want)
        if kind == "rho_component":
            diff = self._rho_diff(check)
            ok = all(
                diff[self._match_orbit(matcher)] == int(mult)
                for matcher, mult in check["contains"]
            ) and all(d >= 0 for d in diff)
            return (f"{label}", ok)
        raise ValidationError(f"unknown check type {kind!r}")

    def run(self):
        return [self.run_check(c) for c in self.manifest.get("checks", [])]
