"""Boolean functions as explicit truth tables.

A function of ``n`` variables is stored as all ``2**n`` output bits, indexed
by the input read as a binary number with the first variable as the most
significant bit.  The natural enumeration 000, 001, 010, ... therefore
matches row order everywhere (tables, CSV files, witness reporting).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ARITY = 16

NAMED_FUNCTIONS = (
    "equality3",
    "pair_equality4",
    "constant0",
    "constant1",
    "majority",
    "majority_even",
)


def bit_string(index: int, arity: int) -> str:
    """The ``arity``-bit input string for a table row index."""
    return format(index, "b").zfill(arity) if arity else ""


def input_index(input_bits: str) -> int:
    """Row index of an input string (first variable is the high bit)."""
    return int(input_bits, 2) if input_bits else 0


def all_inputs(arity: int) -> Iterator[str]:
    """All inputs of the given arity in ascending (lexicographic) order."""
    for i in range(1 << arity):
        yield bit_string(i, arity)


def _check_input(input_bits: str, arity: int) -> None:
    if len(input_bits) != arity or any(c not in "01" for c in input_bits):
        raise ValueError(f"expected a {arity}-bit input of 0s and 1s, got {input_bits!r}")


@dataclass(frozen=True)
class TruthTable:
    """An ``arity``-variable Boolean function as a table of ``2**arity`` bits."""

    arity: int
    bits: bytes

    def __post_init__(self):
        if not 1 <= self.arity <= MAX_ARITY:
            raise ValueError(f"arity must be between 1 and {MAX_ARITY}, got {self.arity}")
        if not isinstance(self.bits, bytes):
            object.__setattr__(self, "bits", bytes(self.bits))
        if len(self.bits) != 1 << self.arity:
            raise ValueError(
                f"table for arity {self.arity} needs {1 << self.arity} bits, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("table entries must be 0 or 1")

    def evaluate(self, input_bits: str) -> int:
        """Value of the function on one input string."""
        _check_input(input_bits, self.arity)
        return self.bits[input_index(input_bits)]

    def complement(self) -> "TruthTable":
        """The pointwise flipped function."""
        return TruthTable(self.arity, bytes(1 - b for b in self.bits))

    def accepting_inputs(self) -> list[str]:
        """All inputs mapped to 1, in ascending order."""
        return [bit_string(i, self.arity) for i, b in enumerate(self.bits) if b]

    def as_hex(self) -> str:
        """Table packed as hex, first row as the most significant bit."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return format(value, f"0{(len(self.bits) + 3) // 4}x")


def from_accepting(arity: int, accepting: Iterable[str]) -> TruthTable:
    """Build a table from the set of accepted input strings."""
    bits = bytearray(1 << arity)
    for s in accepting:
        _check_input(s, arity)
        bits[input_index(s)] = 1
    return TruthTable(arity, bytes(bits))


def named_function(name: str, n: int | None = None) -> TruthTable:
    """One of the built-in functions; ``n`` parameterizes the last four.

    ``equality3`` accepts the two all-equal 3-bit inputs; ``pair_equality4``
    accepts 4-bit inputs whose first and second pairs are each equal;
    ``majority`` (odd ``n``) and ``majority_even`` (even ``n``, ties rejected)
    accept inputs with strictly more ones than zeros.
    """
    if name == "equality3":
        return from_accepting(3, ["000", "111"])
    if name == "pair_equality4":
        return from_accepting(4, ["0000", "0011", "1100", "1111"])
    if name in ("constant0", "constant1", "majority", "majority_even"):
        if n is None:
            raise ValueError(f"{name} needs an arity parameter")
        if not 1 <= n <= MAX_ARITY:
            raise ValueError(f"arity must be between 1 and {MAX_ARITY}, got {n}")
        if name == "majority" and n % 2 == 0:
            raise ValueError("majority needs an odd number of arguments")
        if name == "majority_even" and n % 2 == 1:
            raise ValueError("majority_even needs an even number of arguments")
        if name.startswith("constant"):
            value = int(name[-1])
            return TruthTable(n, bytes([value]) * (1 << n))
        bits = bytes(1 if bin(i).count("1") > n // 2 else 0 for i in range(1 << n))
        return TruthTable(n, bits)
    raise ValueError(f"unknown function name {name!r} (expected one of {NAMED_FUNCTIONS})")


@dataclass(frozen=True)
class SensitivityResult:
    """Maximum number of value-flipping single-bit changes, with a witness."""

    value: int
    witness_input: str


def sensitivity(f: TruthTable) -> SensitivityResult:
    """Exhaustive-scan sensitivity; the witness is the smallest maximizing input."""
    n = f.arity
    bits = np.frombuffer(f.bits, dtype=np.uint8)
    index = np.arange(1 << n)
    counts = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        counts += bits != bits[index ^ (1 << (n - 1 - v))]
    witness = int(counts.argmax())  # argmax returns the first, i.e. smallest, index
    return SensitivityResult(int(counts[witness]), bit_string(witness, n))


def combine_disjoint(f1: TruthTable, f2: TruthTable, op: str) -> TruthTable:
    """``f1(X1) op f2(X2)`` over concatenated variable blocks.

    The combined function reads ``f1`` on its first ``f1.arity`` variables and
    ``f2`` on the remaining ones.
    """
    if op not in ("and", "or"):
        raise ValueError(f"op must be 'and' or 'or', got {op!r}")
    n = f1.arity + f2.arity
    if n > MAX_ARITY:
        raise ValueError(f"combined arity {n} exceeds the {MAX_ARITY}-variable limit")
    a = np.frombuffer(f1.bits, dtype=np.uint8)[:, None]
    b = np.frombuffer(f2.bits, dtype=np.uint8)[None, :]
    table = (a & b) if op == "and" else (a | b)
    return TruthTable(n, table.reshape(-1).tobytes())


def majority_compose(fs: Sequence[TruthTable], even: bool) -> TruthTable:
    """1 iff strictly more than half of the ``fs`` accept their variable blocks.

    ``even=True`` expects ``2k`` functions (ties rejected), ``even=False``
    expects ``2k+1``.  Blocks are concatenated as in :func:`combine_disjoint`.
    """
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one function")
    if even and len(fs) % 2 == 1:
        raise ValueError(f"even majority needs an even number of functions, got {len(fs)}")
    if not even and len(fs) % 2 == 0:
        raise ValueError(f"odd majority needs an odd number of functions, got {len(fs)}")
    n = sum(f.arity for f in fs)
    if n > MAX_ARITY:
        raise ValueError(f"combined arity {n} exceeds the {MAX_ARITY}-variable limit")
    counts = np.zeros(1, dtype=np.int64)
    for f in fs:
        block = np.frombuffer(f.bits, dtype=np.uint8)
        counts = (counts[:, None] + block[None, :]).reshape(-1)
    table = (counts > len(fs) // 2).astype(np.uint8)
    return TruthTable(n, table.tobytes())


CSV_HEADER = ["input", "value"]


def table_to_csv(f: TruthTable, destination) -> None:
    """Write ``input,value`` rows for every input in ascending order."""
    if hasattr(destination, "write"):
        _write_csv(f, destination)
    else:
        with open(destination, "w", newline="") as handle:
            _write_csv(f, handle)


def _write_csv(f: TruthTable, handle) -> None:
    writer = csv.writer(handle)
    writer.writerow(CSV_HEADER)
    for i, b in enumerate(f.bits):
        writer.writerow([bit_string(i, f.arity), b])


def table_from_csv(source) -> TruthTable:
    """Read a table written by :func:`table_to_csv`; every input must appear once."""
    if hasattr(source, "read"):
        return _read_csv(source)
    with open(source, newline="") as handle:
        return _read_csv(handle)


def _read_csv(handle) -> TruthTable:
    rows = list(csv.reader(handle))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"expected header {','.join(CSV_HEADER)!r}")
    body = [r for r in rows[1:] if r]
    if not body:
        raise ValueError("no data rows")
    arity = len(body[0][0])
    if not 1 <= arity <= MAX_ARITY or len(body) != 1 << arity:
        raise ValueError(
            f"expected {1 << arity} rows of {arity}-bit inputs, got {len(body)} rows"
        )
    seen: dict[int, int] = {}
    for row in body:
        if len(row) != 2:
            raise ValueError(f"malformed row {row!r}")
        input_bits, value = row
        _check_input(input_bits, arity)
        if value not in ("0", "1"):
            raise ValueError(f"value must be 0 or 1 in row {row!r}")
        idx = input_index(input_bits)
        if idx in seen:
            raise ValueError(f"duplicate input {input_bits!r}")
        seen[idx] = int(value)
    bits = bytes(seen[i] for i in range(1 << arity))
    return TruthTable(arity, bits)
