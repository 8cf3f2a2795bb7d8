"""Shared test utilities: bit packing, oracles, and small fixture netlists."""

from revadd import GateInstance, GateKind, Netlist, truth_table


def int_to_bits(value: int, width: int) -> list[int]:
    return [(value >> i) & 1 for i in range(width)]


def bits_to_int(bits) -> int:
    return sum(b << i for i, b in enumerate(bits))


def operand_vector(a: int, b: int, cin: int, width: int) -> list[int]:
    """Primary-input assignment for the adder builders (a bits, b bits, cin)."""
    return int_to_bits(a, width) + int_to_bits(b, width) + [cin]


def check_adder_exhaustive(net: Netlist, width: int) -> int:
    """Compare every truth-table row against integer addition; returns the
    number of rows checked."""
    rows = truth_table(net)
    assert len(rows) == 1 << (2 * width + 1)
    for ins, outs, _garb in rows:
        a = bits_to_int(ins[:width])
        b = bits_to_int(ins[width:2 * width])
        cin = ins[2 * width]
        s = bits_to_int(outs[:width])
        cout = outs[width]
        assert s + (cout << width) == a + b + cin, (
            f"{net.name}: {a}+{b}+{cin} gave sum={s} cout={cout}")
    return len(rows)


def passthrough(k: int, name: str = "wires") -> Netlist:
    """Zero-gate netlist: k inputs wired straight to k named outputs."""
    inputs = [f"w{i}" for i in range(k)]
    outputs = [(f"O{i}", f"w{i}") for i in range(k)]
    return Netlist(name, inputs, [], [], outputs, [])


def pg_full_adder() -> Netlist:
    """Twin-Peres full adder: correct arithmetic, but not parity-preserving.

    Useful as the counterexample circuit for fault-detection tests.
    """
    pg = GateKind.PG
    gates = [
        GateInstance(pg, ("a", "b", "k0"), ("at", "p", "g")),
        GateInstance(pg, ("p", "cin", "g"), ("pt", "s", "c")),
    ]
    return Netlist("pgfa", ["a", "b", "cin"], [("k0", 0)], gates,
                   [("Sum", "s"), ("Cout", "c")], ["at", "pt"])
