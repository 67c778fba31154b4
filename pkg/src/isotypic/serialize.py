"""JSON round-tripping for groups, fields, tables, algebra elements and
representations.

Scalars serialize as exact strings ("3/4"), cyclotomic values as
{"level", "coeffs"}, number-field values as coefficient lists.  All writers
emit sorted, whitespace-stable JSON so identical inputs produce identical
bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .characters import Character, CharacterTable
from .cyclotomic import CycValue
from .errors import ValidationError
from .groups import FiniteGroup, from_cayley_table, from_permutations, from_presentation
from .groupalgebra import (
    AlgebraElement,
    CyclotomicDomain,
    FieldDomain,
    MatrixRep,
    RATIONALS,
)
from .numberfield import CycEmbedding, NumField

Rat = Fraction


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- scalars -----------------------------------------------------------------


def rat_to_json(q) -> str:
    return str(Rat(q))


def rat_from_json(s) -> Rat:
    return Rat(s)


def cyc_to_json(v: CycValue) -> dict:
    return {"level": v.level, "coeffs": [str(c) for c in v.coeffs]}


def cyc_from_json(d) -> CycValue:
    return CycValue(int(d["level"]), [Rat(c) for c in d["coeffs"]])


def nfv_to_json(v) -> list:
    return [str(c) for c in v.coeffs]


# -- fields ------------------------------------------------------------------


def field_to_json(nf: NumField) -> dict:
    return {
        "minpoly": [str(c) for c in nf.minpoly],
        "automorphisms": [[str(c) for c in img] for img in nf.automorphisms],
        "subfield_fixers": list(nf.subfield_fixers),
    }


def field_from_json(d) -> NumField:
    return NumField(
        [Rat(c) for c in d["minpoly"]],
        [[Rat(c) for c in img] for img in d["automorphisms"]],
        tuple(d.get("subfield_fixers", (0,))),
    )


# -- groups --------------------------------------------------------------------


def group_from_spec(d) -> FiniteGroup:
    """One of {"presentation": ...}, {"permutations": ...}, {"cayley": ...}."""
    keys = [k for k in ("presentation", "permutations", "cayley") if k in d]
    if len(keys) != 1:
        raise ValidationError(
            "group specification must contain exactly one of "
            "presentation/permutations/cayley"
        )
    kind = keys[0]
    if kind == "presentation":
        p = d[kind]
        return from_presentation(int(p["generators"]), [list(w) for w in p["relators"]],
                                 bound=int(p.get("bound", 10000)))
    if kind == "permutations":
        return from_permutations([list(p) for p in d[kind]])
    return from_cayley_table([list(r) for r in d[kind]])


def group_to_export(group: FiniteGroup) -> dict:
    return group.export()


# -- character tables -------------------------------------------------------------


def table_to_json(table: CharacterTable) -> dict:
    return {
        "level": table.level,
        "classes": [
            {"representative": c.representative, "size": len(c.members)}
            for c in table.classes
        ],
        "chars": [[cyc_to_json(v) for v in ch.values] for ch in table.chars],
    }


def table_from_json(group: FiniteGroup, d) -> CharacterTable:
    level = int(d["level"])
    if level != group.exponent:
        raise ValidationError(
            f"table level {level} does not match the group exponent {group.exponent}"
        )
    classes = group.conjugacy_classes()
    if len(d["classes"]) != len(classes):
        raise ValidationError("table class count does not match the group")
    for entry, cls in zip(d["classes"], classes):
        if int(entry["representative"]) != cls.representative or int(entry["size"]) != len(cls.members):
            raise ValidationError(
                f"table class data {entry} does not match the group's class "
                f"(rep {cls.representative}, size {len(cls.members)})"
            )
    chars = []
    for row in d["chars"]:
        values = tuple(cyc_from_json(v).to_level(level) for v in row)
        deg = values[0]
        if not deg.is_rational() or Rat(deg.as_rational()).denominator != 1:
            raise ValidationError("character degree is not an integer")
        chars.append(Character(values, int(deg.as_rational())))
    return CharacterTable(group, chars)  # validates orthogonality


# -- algebra elements ----------------------------------------------------------------


def domain_to_json(domain) -> object:
    if domain.kind == "Q":
        return "Q"
    if domain.kind == "cyclotomic":
        return {"cyclotomic": domain.level}
    return field_to_json(domain.field)


def domain_from_json(d, field_cache: dict | None = None):
    if d == "Q":
        return RATIONALS
    if isinstance(d, dict) and "cyclotomic" in d:
        return CyclotomicDomain(int(d["cyclotomic"]))
    if isinstance(d, dict) and "minpoly" in d:
        key = json.dumps(d, sort_keys=True)
        if field_cache is not None and key in field_cache:
            return FieldDomain(field_cache[key])
        nf = field_from_json(d)
        if field_cache is not None:
            field_cache[key] = nf
        return FieldDomain(nf)
    raise ValidationError(f"unknown coefficient field descriptor {d!r}")


def element_to_json(el: AlgebraElement) -> dict:
    dom = el.domain
    coeffs = []
    for g in sorted(el.coeffs):
        c = el.coeffs[g]
        if dom.kind == "Q":
            coeffs.append([g, str(c)])
        elif dom.kind == "cyclotomic":
            coeffs.append([g, cyc_to_json(c)])
        else:
            coeffs.append([g, nfv_to_json(c)])
    return {"field": domain_to_json(dom), "coeffs": coeffs}


def element_from_json(group: FiniteGroup, d, field_cache: dict | None = None) -> AlgebraElement:
    dom = domain_from_json(d["field"], field_cache)
    out = {}
    for g, c in d["coeffs"]:
        g = int(g)
        if not 0 <= g < group.order:
            raise ValidationError(f"element index {g} out of range")
        if dom.kind == "Q":
            out[g] = Rat(c)
        elif dom.kind == "cyclotomic":
            out[g] = cyc_from_json(c)
        else:
            out[g] = dom.field.value([Rat(x) for x in c])
    return AlgebraElement(group, dom, out)


# -- matrix representations --------------------------------------------------------------


def rep_to_json(rep: MatrixRep) -> dict:
    d = {
        "field": field_to_json(rep.field),
        "degree": rep.degree,
        "generators": [
            [[nfv_to_json(x) for x in row] for row in mat] for mat in rep.gen_matrices
        ],
        "character_values": [cyc_to_json(v) for v in rep.table.chars[rep.char_index].values],
    }
    if rep.embedding.generator is not None:
        d["embedding"] = {
            "generator": cyc_to_json(rep.embedding.generator),
            "image": nfv_to_json(rep.embedding.image),
        }
    return d


def rep_from_json(group: FiniteGroup, table: CharacterTable, d) -> MatrixRep:
    nf = field_from_json(d["field"])
    values = [cyc_from_json(v).to_level(table.level) for v in d["character_values"]]
    char_index = None
    for i, ch in enumerate(table.chars):
        if list(ch.values) == values:
            char_index = i
            break
    if char_index is None:
        raise ValidationError("character values in the file match no row of the table")
    if "embedding" in d:
        emb = CycEmbedding(
            nf,
            cyc_from_json(d["embedding"]["generator"]),
            nf.value([Rat(c) for c in d["embedding"]["image"]]),
        )
    else:
        emb = CycEmbedding(nf, None, None)
    gens = [
        [[nf.value([Rat(c) for c in x]) for x in row] for row in mat]
        for mat in d["generators"]
    ]
    return MatrixRep(group, nf, gens, table, char_index, emb)
