"""Regenerate the bundled JSON data files from the fixture transcriptions.

Run from the repository root:  python scripts/generate_data.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from isotypic import fixtures as fx
from isotypic.characters import compute_character_table
from isotypic.serialize import (
    dumps,
    element_to_json,
    field_to_json,
    rep_to_json,
    table_to_json,
)

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "isotypic" / "data"


def shared_field_ref(element_json, field_json):
    if element_json["field"] == field_json:
        element_json = dict(element_json, field="L")
    return element_json


def main():
    DATA.mkdir(exist_ok=True)
    written = []

    def write(name, obj):
        (DATA / name).write_text(dumps(obj))
        written.append(name)

    # group specification files
    for name in ["order80", "order24", "S3", "S4", "Q8"]:
        write(f"group_{name.lower()}.json", fx.presentation_spec(name))

    # character tables: the order-80 transcription and the classical small ones
    g80 = fx.order80_group()
    write("table_order80.json", table_to_json(fx.order80_table_transcription(g80)))
    for name in ["S3", "S4", "Q8", "SL23"]:
        group, table = fx.classical_table(name)
        write(f"table_{name.lower()}.json", table_to_json(table))

    # the degree-4 representation over L
    t80 = compute_character_table(g80)
    nf = fx.order80_field()
    rep = fx.order80_rep(g80, t80, nf)
    write("rep_order80.json", rep_to_json(rep))

    # verification manifest for the order-80 idempotents
    field_json = field_to_json(nf)
    elements = {}
    for name in ["eV", "eW", "l1", "u11", "u21", "k1", "f1", "f2"]:
        el = fx.order80_element(g80, nf, name)
        elements[name] = shared_field_ref(element_to_json(el), field_json)
    elements["pHeW"] = element_to_json(fx.order80_pHeW(g80))
    elements["u12"] = {"derive": {"op": "galois", "auto": 1, "arg": "u11"}}
    elements["u22"] = {"derive": {"op": "galois", "auto": 1, "arg": "u21"}}
    elements["k2"] = {"derive": {"op": "add", "args": ["u21", "u22"]}}

    checks = [
        {"check": "idempotent", "of": "eV", "label": "central element of the degree-4 pair"},
        {"check": "central", "of": "eV"},
        {"check": "idempotent", "of": "eW", "label": "rational central element"},
        {"check": "central", "of": "eW"},
        {"check": "rational", "of": "eW"},
        {"check": "idempotent", "of": "l1", "label": "first diagonal idempotent"},
        {"check": "ideal_dim", "of": "l1", "dim": 4},
        {"check": "idempotent", "of": "u11", "label": "primitive block idempotent u11"},
        {"check": "idempotent", "of": "u21", "label": "primitive block idempotent u21"},
        {"check": "orthogonal", "left": "u11", "right": "u21"},
        {"check": "orthogonal", "left": "u11", "right": "u12"},
        {"check": "orthogonal", "left": "u11", "right": "u22"},
        {"check": "orthogonal", "left": "u21", "right": "u12"},
        {"check": "orthogonal", "left": "u21", "right": "u22"},
        {"check": "equal", "label": "u-grid sums to the central element",
         "left": {"op": "add", "args": ["u11", "u12", "u21", "u22"]}, "right": "eV"},
        {"check": "equal", "label": "k1 is the galois sum of u11",
         "left": "k1", "right": {"op": "add", "args": ["u11", "u12"]}},
        {"check": "subfield_fixed", "of": "k1"},
        {"check": "idempotent", "of": "k1"},
        {"check": "ideal_dim", "of": "k1", "dim": 8},
        {"check": "equal", "label": "central element = k1 + k2",
         "left": {"op": "add", "args": ["k1", "k2"]}, "right": "eV"},
        {"check": "equal", "label": "f1 is the full galois sum of k1",
         "left": "f1", "right": {"op": "add", "args": ["k1", {"op": "galois", "auto": 2, "arg": "k1"}]}},
        {"check": "rational", "of": "f1"},
        {"check": "rational", "of": "f2"},
        {"check": "idempotent", "of": "f1"},
        {"check": "idempotent", "of": "f2"},
        {"check": "orthogonal", "left": "f1", "right": "f2"},
        {"check": "equal", "label": "f1 + f2 = rational central element",
         "left": {"op": "add", "args": ["f1", "f2"]}, "right": "eW"},
        {"check": "ideal_dim", "of": "f1", "dim": 16, "over": "Q"},
        {"check": "ideal_dim", "of": "f2", "dim": 16, "over": "Q"},
        {"check": "idempotent", "of": "pHeW", "label": "subgroup-invariant idempotent"},
        {"check": "bi_invariant", "of": "pHeW", "subgroup": "x*y^2"},
    ]
    write("manifest_order80.json", {
        "group": fx.presentation_spec("order80"),
        "field": field_json,
        "elements": elements,
        "checks": checks,
    })

    # verification manifest for the order-24 quasi-Prym example
    g24 = fx.order24_group()
    ew24 = fx.order24_eW(g24)
    w_match = {"degree": 2, "orbit_size": 1}
    w1_match = {"degree": 2, "orbit_size": 2}
    write("manifest_order24.json", {
        "group": fx.presentation_spec("order24"),
        "elements": {"eW": element_to_json(ew24)},
        "checks": [
            {"check": "idempotent", "of": "eW", "label": "rational central element"},
            {"check": "central", "of": "eW"},
            {"check": "rational", "of": "eW"},
            {"check": "rho_identity", "label": "rho_1 - rho_<x^2> = W + 2 W1",
             "minuend": "1", "subtrahend": "x^2",
             "exact": [[w_match, 1], [w1_match, 2]]},
            {"check": "rho_identity", "label": "rho_<z> - rho_<z,x^2> = W1",
             "minuend": "z", "subtrahend": "z,x^2",
             "exact": [[w1_match, 1]]},
            {"check": "rho_component", "label": "rho_1 - rho_<z> contains W + W1",
             "minuend": "1", "subtrahend": "z",
             "contains": [[w_match, 1], [w1_match, 1]]},
        ],
    })

    for name in written:
        print("wrote", DATA / name)


if __name__ == "__main__":
    main()
