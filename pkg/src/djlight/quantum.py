"""Brute-force n-qubit register, the independent cross-check oracle.

Runs the textbook single-register Deutsch-Jozsa circuit
H -> phase oracle -> H on a dense state vector.  The Hadamard layer is
n butterfly passes (cost n * 2**n), so registers up to n ~ 20 stay
desk-scale.  Basis labels use the same bit convention as the tree
engine, although the Walsh-Hadamard kernel is symmetric under any bit
ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .oracles import TruthTable

_SQRT2 = math.sqrt(2.0)


@dataclass(eq=False)
class Register:
    """Dense amplitudes over the 2**n computational basis states."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=complex)
        if self.amps.shape != (1 << self.n,):
            raise ContractError(
                f"n={self.n} needs {1 << self.n} amplitudes, got {self.amps.shape}"
            )

    @classmethod
    def zeros_ket(cls, n: int) -> "Register":
        amps = np.zeros(1 << n, dtype=complex)
        amps[0] = 1.0
        return cls(n, amps)

    def total_power(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


def hadamard_all(reg: Register) -> Register:
    """Apply the Hadamard transform to every qubit (self-inverse)."""
    amps = reg.amps.copy()
    for b in range(reg.n):
        view = amps.reshape(-1, 2, 1 << b)
        top = view[:, 0, :].copy()
        bot = view[:, 1, :].copy()
        view[:, 0, :] = (top + bot) / _SQRT2
        view[:, 1, :] = (top - bot) / _SQRT2
    return Register(reg.n, amps)


def oracle_phase(reg: Register, table: TruthTable) -> Register:
    """Multiply each basis amplitude by (-1)**f(x)."""
    if table.n != reg.n:
        raise ContractError(
            f"table size {table.n} does not match register size {reg.n}"
        )
    amps = reg.amps.copy()
    amps[table.bits == 1] *= -1.0
    return Register(reg.n, amps)


def dj_output(table: TruthTable) -> Register:
    """Full circuit output H (-1)**f H applied to the all-zeros ket."""
    reg = hadamard_all(Register.zeros_ket(table.n))
    reg = oracle_phase(reg, table)
    return hadamard_all(reg)


def bias_amplitude(table: TruthTable) -> float:
    """Closed-form z=0 output amplitude, (N0 - N1) / 2**n.

    Independent of the circuit pipeline; exact in floating point because
    it is an integer divided by a power of two.
    """
    ones = int(table.bits.sum())
    zeros = (1 << table.n) - ones
    return (zeros - ones) / (1 << table.n)
