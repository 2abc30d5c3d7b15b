"""Boolean oracle functions: truth tables, classification and compilers.

A truth table stores f(x) for every label x (same most-significant-bit
convention as the tree engine).  Compilers turn a table into a
``GateProgram`` whose leaf amplitudes carry the signs (-1)**f(x):

* ``compile_general`` handles any table with one phase mask per level,
  built from prefix differences of f.
* ``compile_affine`` handles XOR-affine functions with one uniform mask
  per level (a product-state program, n + 1 bits of information).
* ``canonical_balanced_program`` is the single phase plate on the first
  path qubit, sufficient for the balanced-vs-constant verdict once
  labels are allowed to be renamed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ContractError
from .tree import GateProgram, PhaseMaskOp


@dataclass
class TruthTable:
    """f as a bit per label, ``bits[x] = f(x)``, length 2**n."""

    n: int
    bits: np.ndarray

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=np.uint8)
        if self.n < 1:
            raise ContractError("register size must be >= 1")
        if self.bits.shape != (1 << self.n,):
            raise ContractError(
                f"n={self.n} needs {1 << self.n} bits, got {self.bits.shape}"
            )
        if self.bits.max(initial=0) > 1:
            raise ContractError("truth table entries must be 0 or 1")

    @classmethod
    def from_string(cls, bits: str) -> "TruthTable":
        n = (len(bits) - 1).bit_length()
        return cls(n, np.frombuffer(bits.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def constant(cls, n: int, value: int) -> "TruthTable":
        return cls(n, np.full(1 << n, value, dtype=np.uint8))

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    __hash__ = None

    def __str__(self):
        return "".join("01"[b] for b in self.bits)


class Tag(Enum):
    CONSTANT0 = "Constant0"
    CONSTANT1 = "Constant1"
    BALANCED = "Balanced"
    BIASED = "Biased"


@dataclass(frozen=True)
class FunctionClass:
    tag: Tag
    zeros: int
    ones: int

    @property
    def is_constant(self) -> bool:
        return self.tag in (Tag.CONSTANT0, Tag.CONSTANT1)


@dataclass(frozen=True)
class AffineSpec:
    """f(x) = c XOR a1*x1 XOR ... XOR an*xn (digit 1 = most significant)."""

    a: tuple[int, ...]
    c: int

    def table(self) -> TruthTable:
        n = len(self.a)
        labels = np.arange(1 << n)
        acc = np.full(labels.shape, self.c, dtype=np.uint8)
        for k, coeff in enumerate(self.a, start=1):
            if coeff:
                acc ^= ((labels >> (n - k)) & 1).astype(np.uint8)
        return TruthTable(n, acc)


def classify_table(table: TruthTable) -> FunctionClass:
    """Count zeros/ones and tag the function constant, balanced or biased."""
    ones = int(table.bits.sum())
    zeros = (1 << table.n) - ones
    if ones == 0:
        tag = Tag.CONSTANT0
    elif zeros == 0:
        tag = Tag.CONSTANT1
    elif zeros == ones:
        tag = Tag.BALANCED
    else:
        tag = Tag.BIASED
    return FunctionClass(tag, zeros, ones)


def compile_general(table: TruthTable) -> GateProgram:
    """Phase-only program writing (-1)**f(x) into every leaf.

    The level-k mask bit for parent prefix p is
    f(p,1,0,...,0) XOR f(p,0,0,...,0); the sign collected along the path
    to leaf x then telescopes to f(x) XOR f(0), with f(0) tracked as the
    global phase bit.
    """
    n = table.n
    bits = table.bits
    steps = []
    for k in range(1, n + 1):
        prefixes = np.arange(1 << (k - 1))
        child1 = ((prefixes << 1) | 1) << (n - k)
        child0 = (prefixes << 1) << (n - k)
        mask = bits[child1] ^ bits[child0]
        if mask.any():
            op = PhaseMaskOp(k, tuple(int(b) for b in mask))
            steps.append((k, (op,)))
    return GateProgram(n, tuple(steps), global_phase=int(bits[0]))


def compile_affine(spec: AffineSpec, n: int) -> GateProgram:
    """Uniform-mask program for an affine function; global phase is c."""
    if len(spec.a) != n:
        raise ContractError(f"affine spec has {len(spec.a)} coefficients, n={n}")
    steps = tuple(
        (k, (PhaseMaskOp(k, (coeff,) * (1 << (k - 1))),))
        for k, coeff in enumerate(spec.a, start=1)
    )
    return GateProgram(n, steps, global_phase=spec.c)


def is_affine(table: TruthTable):
    """Return the AffineSpec reproducing ``table``, or None.

    The only candidate is c = f(0), a_k = f(e_k) XOR c; accept iff it
    matches everywhere.
    """
    n = table.n
    bits = table.bits
    c = int(bits[0])
    a = tuple(int(bits[1 << (n - k)]) ^ c for k in range(1, n + 1))
    spec = AffineSpec(a, c)
    if spec.table() == table:
        return spec
    return None


def canonical_table(n: int) -> TruthTable:
    """The reference balanced function f*(x) = x1 (first label bit)."""
    labels = np.arange(1 << n)
    return TruthTable(n, ((labels >> (n - 1)) & 1).astype(np.uint8))


def relabel_to_canonical(table: TruthTable) -> np.ndarray:
    """Permutation sigma with ``table.bits[sigma[y]] == f*(y)`` for all y.

    f* is ``canonical_table``; sigma pairs the ascending zeros of f* with
    the ascending zeros of f, likewise for the ones, which makes it
    deterministic.  Only balanced tables can be relabeled this way.
    """
    if classify_table(table).tag is not Tag.BALANCED:
        raise ContractError("only balanced functions relabel to the canonical one")
    half = 1 << (table.n - 1)
    sigma = np.empty(1 << table.n, dtype=np.int64)
    sigma[:half] = np.flatnonzero(table.bits == 0)
    sigma[half:] = np.flatnonzero(table.bits == 1)
    return sigma


def canonical_balanced_program(n: int) -> GateProgram:
    """Single relative pi phase shift on the first path qubit."""
    if n < 1:
        raise ContractError("register size must be >= 1")
    return GateProgram(n, ((1, (PhaseMaskOp(1, (1,)),)),), global_phase=0)
