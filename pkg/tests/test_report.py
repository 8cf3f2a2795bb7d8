"""Comparison-table report: published constants, ledger arithmetic, flags."""

import json

from revadd import CostVector, build_table1, emit_table1, ledger_cost
from revadd.report import PUBLISHED_ROWS


def test_published_rows_are_fixed_constants():
    pub = {r.key: r for r in PUBLISHED_ROWS}
    assert pub["ftfa_mig"].cost == CostVector(6, 4, 2)
    assert pub["ftfa_ig"].cost == CostVector(8, 6, 2)
    assert pub["ftfa_frg"].cost == CostVector(8, 16, 4)
    assert pub["rca4_ig"].cost == CostVector(32, 24, 8)
    assert pub["rca4_frg"].cost == CostVector(32, 64, 16)
    assert pub["csa4_frg"].cost == CostVector(40, 80, 20)
    assert pub["csa4_frg"].constants == 11
    assert pub["csa4_frg"].garbage == 16
    assert pub["hsa16"].cost == CostVector(320, 112, 48)


def test_ledger_arithmetic_reproduces_reference_rows():
    assert ledger_cost({"IG": 2}) == CostVector(8, 6, 2)
    assert ledger_cost({"FRG": 4}) == CostVector(8, 16, 4)
    assert ledger_cost({"IG": 8}) == CostVector(32, 24, 8)
    assert ledger_cost({"FRG": 16}) == CostVector(32, 64, 16)
    assert ledger_cost({"FRG": 20}) == CostVector(40, 80, 20)


def test_only_hsa_cost_is_flagged():
    flagged = {r["key"]: r["mismatches"] for r in build_table1()
               if r["mismatches"]}
    assert flagged == {"hsa16": ["cost"]}


def test_report_rows_cover_all_designs():
    rows = build_table1()
    keys = [r["key"] for r in rows]
    assert keys == ["ftfa_mig", "ftfa_ig", "ftfa_frg", "rca4_mig", "rca4_ig",
                    "rca4_frg", "cla2", "csa4", "csa4_frg", "hsa16"]
    built = [r for r in rows if not r.get("reference_only")]
    assert len(built) == 5
    for rec in built:
        comp, pub = rec["computed"], rec["published"]
        assert comp["total_gates"] == pub["total_gates"]
        assert comp["constant_inputs"] == pub["constant_inputs"]
        assert comp["garbage_outputs"] == pub["garbage_outputs"]


def test_json_and_text_renderings_agree_on_flags():
    data = json.loads(emit_table1("json"))
    hsa = next(r for r in data["rows"] if r["key"] == "hsa16")
    assert hsa["mismatches"] == ["cost"]
    text = emit_table1("text")
    assert text.count("MISMATCH") == 1
