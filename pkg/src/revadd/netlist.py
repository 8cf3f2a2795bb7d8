"""Fanout-free acyclic netlists: validation, simulation, tables, metrics.

A netlist is a list of gate instances over named lines.  Every line has
exactly one source (primary input, constant, or a gate output) and at most
one sink (a gate input); source lines that no gate consumes must be declared
either as named primary outputs or as garbage.  Equal boundary width
(inputs + constants == outputs + garbage) then follows from gates having as
many outputs as inputs, and is re-checked by :func:`validate`.

Simulation is word-parallel: every line carries a Python integer used as a
bitmask with one bit per test vector, and the gate expressions from
:mod:`revadd.gates` apply unchanged.  Scalar simulation is the one-vector
special case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .gates import ARITY, EVAL, CostVector, GateKind, gate_cost

EXHAUSTIVE_LIMIT = 20  # max primary-input width for exhaustive enumeration


class WidthLimitError(ValueError):
    """Exhaustive enumeration refused; the input space is too large."""


class NetlistError(ValueError):
    """Operation requires a structurally valid netlist."""


@dataclass(frozen=True)
class GateInstance:
    kind: GateKind
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]


@dataclass
class Netlist:
    """Treated as immutable once built; construct via :class:`NetlistBuilder`."""

    name: str
    inputs: list[str] = field(default_factory=list)
    constants: list[tuple[str, int]] = field(default_factory=list)
    gates: list[GateInstance] = field(default_factory=list)
    outputs: list[tuple[str, str]] = field(default_factory=list)  # (name, line)
    garbage: list[str] = field(default_factory=list)

    def all_lines(self) -> list[str]:
        """Every line id in deterministic source order."""
        ids = list(self.inputs)
        ids.extend(lid for lid, _ in self.constants)
        for g in self.gates:
            ids.extend(g.outputs)
        return ids

    def boundary_in_width(self) -> int:
        return len(self.inputs) + len(self.constants)

    def boundary_out_width(self) -> int:
        return len(self.outputs) + len(self.garbage)


@dataclass(frozen=True)
class Violation:
    category: str  # fanout | dangling | order | width | role
    message: str
    lines: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"[{self.category}] {self.message}"


@dataclass(frozen=True)
class SimResult:
    outputs: dict  # output name -> bit, in declared order
    garbage: tuple[int, ...]

    @property
    def output_bits(self) -> tuple[int, ...]:
        return tuple(self.outputs.values())


@dataclass(frozen=True)
class MetricsReport:
    gate_count_by_kind: dict  # kind tag -> count
    total_gates: int
    cost: CostVector
    constant_inputs: int
    garbage_outputs: int

    def to_dict(self) -> dict:
        return {
            "gate_count_by_kind": dict(self.gate_count_by_kind),
            "total_gates": self.total_gates,
            "cost": self.cost.to_dict(),
            "constant_inputs": self.constant_inputs,
            "garbage_outputs": self.garbage_outputs,
        }


class NetlistBuilder:
    """Accumulating constructor; gates only ever reference existing lines,
    which makes cycles unrepresentable and keeps instances topologically
    ordered by construction."""

    def __init__(self, name: str):
        self.name = name
        self._inputs: list[str] = []
        self._constants: list[tuple[str, int]] = []
        self._gates: list[GateInstance] = []
        self._defined: dict[str, None] = {}
        self._consumed: set[str] = set()

    def _define(self, lid: str) -> str:
        if lid in self._defined:
            raise ValueError(f"line {lid!r} already defined")
        self._defined[lid] = None
        return lid

    def input(self, lid: str) -> str:
        self._inputs.append(self._define(lid))
        return lid

    def const(self, lid: str, value: int = 0) -> str:
        if value not in (0, 1):
            raise ValueError(f"constant {lid!r} must be 0 or 1")
        self._constants.append((self._define(lid), value))
        return lid

    def gate(self, kind: GateKind, ins, outs) -> tuple[str, ...]:
        ins, outs = tuple(ins), tuple(outs)
        n = ARITY[kind]
        if len(ins) != n or len(outs) != n:
            raise ValueError(
                f"{kind.value} gate needs {n} inputs and {n} outputs")
        for lid in ins:
            if lid not in self._defined:
                raise ValueError(f"gate input {lid!r} is not defined yet")
            if lid in self._consumed:
                raise ValueError(f"fanout: line {lid!r} already consumed")
        self._consumed.update(ins)
        for lid in outs:
            self._define(lid)
        self._gates.append(GateInstance(kind, ins, outs))
        return outs

    def finish(self, outputs: list[tuple[str, str]]) -> Netlist:
        """Close the netlist; unconsumed lines not named as outputs become
        garbage, in definition order."""
        out_lines = set()
        for name, lid in outputs:
            if lid not in self._defined:
                raise ValueError(f"output {name}={lid!r} references unknown line")
            if lid in self._consumed:
                raise ValueError(f"output {name}={lid!r} is consumed by a gate")
            if lid in out_lines:
                raise ValueError(f"line {lid!r} declared as output twice")
            out_lines.add(lid)
        garbage = [lid for lid in self._defined
                   if lid not in self._consumed and lid not in out_lines]
        net = Netlist(self.name, list(self._inputs), list(self._constants),
                      list(self._gates), list(outputs), garbage)
        problems = validate(net)
        if problems:  # builder guards should make this unreachable
            raise NetlistError("; ".join(map(str, problems)))
        return net


def validate(net: Netlist) -> list[Violation]:
    """Structural check; an empty list means the netlist is well formed."""
    v: list[Violation] = []
    defined: set[str] = set()

    def define(lid: str, what: str):
        if lid in defined:
            v.append(Violation("role", f"line {lid!r} defined more than once "
                               f"(redefined as {what})", (lid,)))
        defined.add(lid)

    for lid in net.inputs:
        define(lid, "input")
    for lid, val in net.constants:
        define(lid, "constant")
        if val not in (0, 1):
            v.append(Violation("role", f"constant {lid!r} has polarity {val!r}",
                               (lid,)))

    sinks: dict[str, list[str]] = {}
    for idx, g in enumerate(net.gates):
        n = ARITY[g.kind]
        if len(g.inputs) != n or len(g.outputs) != n:
            v.append(Violation(
                "width", f"gate {idx} ({g.kind.value}) has {len(g.inputs)} "
                f"inputs/{len(g.outputs)} outputs, arity is {n}",
                g.inputs + g.outputs))
        for lid in g.inputs:
            if lid not in defined:
                v.append(Violation(
                    "order", f"gate {idx} ({g.kind.value}) reads {lid!r} "
                    "before any earlier source defines it", (lid,)))
            sinks.setdefault(lid, []).append(f"gate {idx} ({g.kind.value})")
        for lid in g.outputs:
            define(lid, f"gate {idx} output")

    for name, lid in net.outputs:
        if lid not in defined:
            v.append(Violation("dangling", f"output {name}={lid!r} references "
                               "an undefined line", (lid,)))
        sinks.setdefault(lid, []).append(f"output {name}")
    for lid in net.garbage:
        if lid not in defined:
            v.append(Violation("dangling", f"garbage {lid!r} references an "
                               "undefined line", (lid,)))
        sinks.setdefault(lid, []).append("garbage")

    for lid, where in sinks.items():
        if len(where) > 1:
            v.append(Violation("fanout", f"line {lid!r} feeds {len(where)} "
                               f"sinks: {', '.join(where)}", (lid,)))
    for lid in defined:
        if lid not in sinks:
            v.append(Violation("dangling", f"line {lid!r} has no sink; it must "
                               "be consumed, a primary output, or garbage",
                               (lid,)))

    out_set = {lid for _, lid in net.outputs}
    if out_set & set(net.garbage):
        both = sorted(out_set & set(net.garbage))
        v.append(Violation("role", f"lines declared both output and garbage: "
                           f"{', '.join(both)}", tuple(both)))
    if net.boundary_in_width() != net.boundary_out_width():
        v.append(Violation(
            "width", f"boundary width mismatch: {net.boundary_in_width()} "
            f"inputs+constants vs {net.boundary_out_width()} outputs+garbage"))
    return v


def _check_valid(net: Netlist):
    problems = validate(net)
    if problems:
        raise NetlistError(
            f"netlist {net.name!r} is not valid: " + "; ".join(map(str, problems)))


def evaluate_lines(net: Netlist, input_masks, one: int, fault=None) -> dict:
    """Word-parallel evaluation: map every line id to its value mask.

    ``input_masks`` aligns with ``net.inputs``; ``one`` is the all-ones mask
    (1 for scalar runs).  ``fault``, when given, is a
    :class:`revadd.faults.FaultSite`; the transform applies right after the
    faulted line's source produces its value, before any sink reads it.
    """
    fault_line = fault.line if fault is not None else None
    values: dict[str, int] = {}

    def place(lid: str, val: int):
        if lid == fault_line:
            if fault.model == "flip":
                val ^= one
            elif fault.model == "sa0":
                val = 0
            elif fault.model == "sa1":
                val = one
            else:
                raise ValueError(f"unknown fault model {fault.model!r}")
        values[lid] = val

    for lid, mask in zip(net.inputs, input_masks):
        place(lid, mask)
    for lid, pol in net.constants:
        place(lid, one if pol else 0)
    for g in net.gates:
        ins = tuple(values[lid] for lid in g.inputs)
        outs = EVAL[g.kind](ins, one)
        for lid, val in zip(g.outputs, outs):
            place(lid, val)
    return values


def simulate(net: Netlist, bits, check: bool = True) -> SimResult:
    """Evaluate one primary-input vector; constants take their declared
    polarity and gates run in topological order."""
    if check:
        _check_valid(net)
    bits = tuple(bits)
    if len(bits) != len(net.inputs):
        raise ValueError(f"netlist {net.name!r} has {len(net.inputs)} primary "
                         f"inputs, got {len(bits)} bits")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"non-binary value in input vector {bits!r}")
    values = evaluate_lines(net, bits, 1)
    outs = {name: values[lid] for name, lid in net.outputs}
    garb = tuple(values[lid] for lid in net.garbage)
    return SimResult(outs, garb)


def variable_masks(n: int) -> list[int]:
    """Packed enumeration masks: bit v of masks[i] is bit i of the vector
    index v, covering all 2^n vectors."""
    total = 1 << n
    masks = []
    for i in range(n):
        block = 1 << i
        chunk = ((1 << block) - 1) << block
        period = block << 1
        reps = total // period
        mask = chunk * (((1 << (period * reps)) - 1) // ((1 << period) - 1))
        masks.append(mask)
    return masks


def _require_exhaustive(net: Netlist, limit: int):
    n = len(net.inputs)
    if n > limit:
        raise WidthLimitError(
            f"netlist {net.name!r} has {n} primary inputs; exhaustive "
            f"enumeration is limited to {limit} (use a sampled check)")
    return n


def truth_table(net: Netlist, limit: int = EXHAUSTIVE_LIMIT):
    """Rows of (inputs, outputs, garbage) over all primary-input vectors in
    lexicographic order (vector index counts input 0 as the low bit)."""
    _check_valid(net)
    n = _require_exhaustive(net, limit)
    total = 1 << n
    values = evaluate_lines(net, variable_masks(n), (1 << total) - 1)
    out_masks = [values[lid] for _, lid in net.outputs]
    garb_masks = [values[lid] for lid in net.garbage]
    rows = []
    for v in range(total):
        ins = tuple((v >> i) & 1 for i in range(n))
        outs = tuple((m >> v) & 1 for m in out_masks)
        garb = tuple((m >> v) & 1 for m in garb_masks)
        rows.append((ins, outs, garb))
    return rows


def _boundary_parity_masks(net: Netlist, values: dict, one: int) -> tuple[int, int]:
    """Per-vector parity of (inputs incl. constants) and (outputs incl. garbage)."""
    pin = 0
    for lid in net.inputs:
        pin ^= values[lid]
    for lid, pol in net.constants:
        pin ^= one if pol else 0
    pout = 0
    for _, lid in net.outputs:
        pout ^= values[lid]
    for lid in net.garbage:
        pout ^= values[lid]
    return pin, pout


def is_parity_preserving_circuit(net: Netlist, limit: int = EXHAUSTIVE_LIMIT) -> bool:
    """Exhaustively check boundary parity conservation over all input vectors."""
    _check_valid(net)
    n = _require_exhaustive(net, limit)
    one = (1 << (1 << n)) - 1
    values = evaluate_lines(net, variable_masks(n), one)
    pin, pout = _boundary_parity_masks(net, values, one)
    return pin == pout


def is_parity_preserving_circuit_sampled(net: Netlist, samples: int,
                                         seed: int) -> tuple[bool, int]:
    """Monte-Carlo parity check for wide netlists; returns (verdict, samples)."""
    _check_valid(net)
    rng = Random(seed)
    one = (1 << samples) - 1
    masks = [rng.getrandbits(samples) for _ in net.inputs]
    values = evaluate_lines(net, masks, one)
    pin, pout = _boundary_parity_masks(net, values, one)
    return pin == pout, samples


def is_reversible_circuit(net: Netlist, limit: int = EXHAUSTIVE_LIMIT) -> bool:
    """True iff, with constants fixed, the boundary map from primary inputs
    to (outputs + garbage) is injective."""
    _check_valid(net)
    n = _require_exhaustive(net, limit)
    total = 1 << n
    values = evaluate_lines(net, variable_masks(n), (1 << total) - 1)
    masks = [values[lid] for _, lid in net.outputs]
    masks += [values[lid] for lid in net.garbage]
    seen = set()
    for v in range(total):
        image = 0
        for i, m in enumerate(masks):
            image |= ((m >> v) & 1) << i
        if image in seen:
            return False
        seen.add(image)
    return True


def metrics(net: Netlist) -> MetricsReport:
    """Gate counts, additive hardware cost, constants and garbage totals."""
    _check_valid(net)
    counts: dict[str, int] = {}
    cost = CostVector()
    for g in net.gates:
        counts[g.kind.value] = counts.get(g.kind.value, 0) + 1
        cost = cost + gate_cost(g.kind)
    return MetricsReport(counts, len(net.gates), cost,
                         len(net.constants), len(net.garbage))
