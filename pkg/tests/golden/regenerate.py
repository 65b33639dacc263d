"""Rebuild the golden input files and their expected exit codes.

Run from the repository root:  python3 tests/golden/regenerate.py
"""
from __future__ import annotations

import json
import pathlib

from cosovereign import cli, forms, hopf_fd, hopf_pres, serialize
from cosovereign.exactmath import Matrix

HERE = pathlib.Path(__file__).parent


def _built(kind, **kw):
    return cli.build_workbench(kind, **kw)


def corpus() -> dict[str, tuple[serialize.Workbench, int]]:
    out = {}
    out["sweedler"] = (_built("sweedler"), 0)
    out["sweedler_presented"] = (_built("sweedler", presented=True), 0)
    out["sweedler_param3"] = (_built("sweedler", parameter="3"), 0)
    out["hf_identity"] = (_built("hf", F_text='[["1","0"],["0","1"]]', field_text="QQ"), 0)
    out["hf_diag_q"] = (_built("hf", F_text='[["1","0"],["0","q"]]'), 0)
    out["hf_swap"] = (_built("hf", F_text='[["0","1"],["1","0"]]', field_text="QQ"), 0)
    out["eq2"] = (_built("eq", n=2), 0)
    out["eq2_sqrt_q"] = (_built("eq", n=2, sqrt_q=True), 0)
    eq3 = _built("eq", n=3)
    # the second power of the antipode has degree 4; the identity is witnessed at 7
    eq3.degree_cap = 7
    out["eq3"] = (eq3, 2)
    out["hn1"] = (_built("hn", n=1), 0)
    out["hn2"] = (_built("hn", n=2), 0)

    for n in (2, 3):
        A = hopf_fd.builtin_group_algebra(hopf_fd.cyclic_group_table(n), name=f"k[Z/{n}]")
        wb = serialize.Workbench(A.field, "finite_hopf", A)
        wb.characters["epsilon"] = forms.counit_character(A)
        out[f"group_z{n}"] = (wb, 0)
    L = hopf_pres.builtin_laurent()
    wb = serialize.Workbench(L.field, "presentation_hopf", L)
    wb.characters["epsilon"] = forms.counit_character(L)
    out["laurent"] = (wb, 0)

    # negative controls
    wb = serialize.Workbench(L.field, "presentation_hopf", L)
    wb.characters["bad"] = forms.make_character(L, {"t": 2, "t_inv": 3}, "bad")
    out["laurent_not_a_character"] = (wb, 1)

    A = hopf_fd.builtin_sweedler()
    wb = serialize.Workbench(A.field, "finite_hopf", A)
    wb.characters["epsilon"] = forms.counit_character(A)
    out["sweedler_epsilon"] = (wb, 1)

    P = hopf_pres.builtin_sweedler_presented()
    wb = serialize.Workbench(P.field, "presentation_hopf", P)
    wb.characters["epsilon"] = forms.counit_character(P)
    out["sweedler_presented_epsilon"] = (wb, 1)

    bad = hopf_fd.FinHopf(A.gens.names, A.mult, A.unit, A.comult, A.counit_vec, Matrix.identity(A.field, 4),
                          field=A.field, name="sweedler, identity antipode")
    out["sweedler_identity_antipode"] = (serialize.Workbench(A.field, "finite_hopf", bad), 1)

    wb = serialize.Workbench(P.field, "presentation_hopf", P)
    wb.cobraiding = {"table": {("g", "g"): P.field(-1), ("g", "x"): P.field(1),
                               ("x", "g"): P.field(0), ("x", "x"): P.field(1)}}
    out["sweedler_bad_cobraiding"] = (wb, 1)

    wb = _built("sweedler")
    wb.cotwist = {"values": {"1": A.field(1), "g": A.field(2), "x": A.field(0), "gx": A.field(0)},
                  "inverse_values": {"1": A.field(1), "g": A.field(1) / 2, "x": A.field(0), "gx": A.field(0)}}
    out["sweedler_bad_cotwist"] = (wb, 1)

    H = hopf_pres.builtin_Hn(1)
    wb = serialize.Workbench(H.field, "presentation_hopf", H)
    wb.sovereign_elements["Phi"] = hopf_pres.GroupLikeElement(H["Phi"], H["Phi_inv"])
    out["hn1_wrong_sovereign_element"] = (wb, 1)

    wb = _built("hf", F_text='[["1","0"],["0","q"]]')
    wb.characters["epsilon"] = forms.counit_character(wb.hopf)
    out["hf_diag_q_epsilon"] = (wb, 2)
    return out


INVALID = {
    "invalid_json": "{ not json",
    "missing_field": json.dumps({"hf_matrix": {"F": [["1"]]}}),
    "two_objects": json.dumps({"field": "QQ", "hf_matrix": {"F": [["1"]]}, "sle_tensor": {}}),
    "bad_scalar": json.dumps({"field": "QQ", "hf_matrix": {"F": [["1/0"]]}}),
    "singular_F": json.dumps({"field": "QQ", "hf_matrix": {"F": [["1", "1"], ["1", "1"]]}}),
    "unknown_generator": json.dumps({"field": "QQ", "hf_matrix": {"F": [["1"]]},
                                     "characters": {"c": {"u11": "1", "w": "1"}}}),
}


def main():
    expected = {}
    for name, (wb, code) in corpus().items():
        (HERE / f"{name}.json").write_text(serialize.canonical(wb), encoding="utf-8")
        expected[name] = code
    inv = HERE / "invalid"
    inv.mkdir(exist_ok=True)
    for name, text in INVALID.items():
        (inv / f"{name}.json").write_text(text + "\n", encoding="utf-8")
        expected[f"invalid/{name}"] = 3
    (HERE / "expected.json").write_text(json.dumps(expected, sort_keys=True, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
