"""Regression report against the published comparison table.

Builds the five designs, computes their metrics, and prints them next to the
published reference values; for the three competing designs that this
package does not construct (IG- and FRG-based adders), the hardware cost is
recomputed from the gate-count multiset and the cost ledger alone.  Rows
where a computed value disagrees with the published one are flagged; the
16-bit adder's published alpha term is the one known discrepancy (the
published figure is not additive over the design's own four blocks).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import builders
from .gates import CostVector, GateKind, gate_cost
from .netlist import metrics


@dataclass(frozen=True)
class PublishedRow:
    key: str
    label: str
    gates: dict[str, int]       # published gate multiset
    cost: CostVector            # published hardware complexity
    constants: int
    garbage: int
    builder: str | None = None  # design name when this package builds it


# Verbatim reference values; never recomputed.
PUBLISHED_ROWS: tuple[PublishedRow, ...] = (
    PublishedRow("ftfa_mig", "1-bit FTFA", {"MIG": 2},
                 CostVector(6, 4, 2), 2, 3, builder="fa"),
    PublishedRow("ftfa_ig", "1-bit FTFA (IG)", {"IG": 2},
                 CostVector(8, 6, 2), 2, 3),
    PublishedRow("ftfa_frg", "1-bit FTFA (FRG)", {"FRG": 4},
                 CostVector(8, 16, 4), 2, 3),
    PublishedRow("rca4_mig", "4-bit RCA", {"MIG": 8},
                 CostVector(24, 16, 8), 8, 12, builder="rca:4"),
    PublishedRow("rca4_ig", "4-bit RCA (IG)", {"IG": 8},
                 CostVector(32, 24, 8), 8, 12),
    PublishedRow("rca4_frg", "4-bit RCA (FRG)", {"FRG": 16},
                 CostVector(32, 64, 16), 8, 12),
    PublishedRow("cla2", "2-bit CLA", {"MIG": 4, "F2G": 10, "NFT": 5},
                 CostVector(47, 23, 9), 26, 28, builder="cla2"),
    PublishedRow("csa4", "4-bit CSA", {"MIG": 8, "NFT": 4, "F2G": 2},
                 CostVector(40, 28, 12), 15, 19, builder="csa4"),
    PublishedRow("csa4_frg", "4-bit CSA (FRG, with fanout)", {"FRG": 20},
                 CostVector(40, 80, 20), 11, 16),
    PublishedRow("hsa16", "16-bit HSA", {"MIG": 32, "NFT": 16, "F2G": 8},
                 CostVector(320, 112, 48), 60, 76, builder="hsa16"),
)


def ledger_cost(gates: dict[str, int]) -> CostVector:
    """Hardware cost of a gate multiset straight from the cost ledger."""
    total = CostVector()
    for tag, count in gates.items():
        total = total + gate_cost(GateKind(tag)) * count
    return total


def build_table1() -> list[dict]:
    """One record per row: published values, computed values, mismatches."""
    records = []
    for row in PUBLISHED_ROWS:
        rec = {
            "key": row.key,
            "label": row.label,
            "published": {
                "gates": dict(row.gates),
                "total_gates": sum(row.gates.values()),
                "cost": row.cost.to_dict(),
                "constant_inputs": row.constants,
                "garbage_outputs": row.garbage,
            },
        }
        mismatches = []
        if row.builder is not None:
            m = metrics(builders.build_design(row.builder))
            rec["computed"] = m.to_dict()
            if m.gate_count_by_kind != row.gates:
                mismatches.append("gates")
            if m.cost != row.cost:
                mismatches.append("cost")
            if m.constant_inputs != row.constants:
                mismatches.append("constant_inputs")
            if m.garbage_outputs != row.garbage:
                mismatches.append("garbage_outputs")
        else:
            cost = ledger_cost(row.gates)
            rec["computed"] = {"cost": cost.to_dict()}
            rec["reference_only"] = True
            if cost != row.cost:
                mismatches.append("cost")
        rec["mismatches"] = mismatches
        records.append(rec)
    return records


_KIND_ORDER = ("MIG", "IG", "FRG", "NFT", "F2G", "PG", "TG", "FG")


def gates_str(gates: dict[str, int]) -> str:
    """Gate multiset in canonical kind order, e.g. ``8 MIG+4 NFT+2 F2G``."""
    tags = sorted(gates, key=_KIND_ORDER.index)
    return "+".join(f"{gates[tag]} {tag}" for tag in tags)


def emit_table1(fmt: str = "text") -> str:
    """Render the comparison report as aligned text or a JSON document."""
    records = build_table1()
    if fmt == "json":
        return json.dumps({"rows": records}, indent=2)
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    headers = ("design", "gates", "cost", "const", "garb", "status")
    rows = [headers]
    notes = []
    for rec in records:
        pub = rec["published"]
        comp = rec["computed"]
        if rec.get("reference_only"):
            shown_cost = CostVector(**pub["cost"]).pretty()
            gates = f"{pub['total_gates']} ({gates_str(pub['gates'])})"
            const, garb = str(pub["constant_inputs"]), str(pub["garbage_outputs"])
            status = "reference"
        else:
            shown_cost = CostVector(**comp["cost"]).pretty()
            gates = f"{comp['total_gates']} ({gates_str(comp['gate_count_by_kind'])})"
            const, garb = str(comp["constant_inputs"]), str(comp["garbage_outputs"])
            status = "ok"
        if rec["mismatches"]:
            status = "MISMATCH: " + ",".join(rec["mismatches"])
            for fieldname in rec["mismatches"]:
                if fieldname == "cost":
                    notes.append(
                        f"{rec['label']}: computed cost {shown_cost} vs "
                        f"published {CostVector(**pub['cost']).pretty()}")
                else:
                    notes.append(f"{rec['label']}: computed {fieldname} "
                                 f"differs from published value")
        rows.append((rec["label"], gates, shown_cost, const, garb, status))
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    out = []
    for r in rows:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if notes:
        out.append("")
        out.extend(f"note: {n}" for n in notes)
    return "\n".join(out) + "\n"
