"""Cross-layer verification: quantum register vs tree engine vs optics.

The three computations of the on-axis amplitude must agree: the dense
register circuit, the closed-form bias sum (both exact references), and
the binary-tree run; optionally also the sampled optical model.  The
abstract layers are held to 1e-12, the optical intensity ratio to 1e-6.
"""

from __future__ import annotations

from dataclasses import dataclass

from .optics import OpticsParams, run_optical
from .oracles import TruthTable, compile_general
from .quantum import bias_amplitude, dj_output
from .report import fmt, run_abstract
from .tree import readout_amplitude, run_program

ABSTRACT_TOLERANCE = 1e-12
OPTICAL_TOLERANCE = 1e-6


@dataclass(frozen=True)
class CrossCheck:
    n: int
    closed_form: float
    quantum_z0: complex
    tree_readout: complex
    abstract_discrepancy: float
    optical_ratio: float | None = None
    optical_discrepancy: float | None = None

    @property
    def max_discrepancy(self) -> float:
        if self.optical_discrepancy is None:
            return self.abstract_discrepancy
        return max(self.abstract_discrepancy, self.optical_discrepancy)

    @property
    def passed(self) -> bool:
        if self.abstract_discrepancy > ABSTRACT_TOLERANCE:
            return False
        if self.optical_discrepancy is not None:
            return self.optical_discrepancy <= OPTICAL_TOLERANCE
        return True

    def lines(self) -> list[str]:
        out = [
            f"n = {self.n}",
            f"closed_form = {fmt(self.closed_form)}",
            f"quantum_z0_re = {fmt(self.quantum_z0.real)}",
            f"quantum_z0_im = {fmt(self.quantum_z0.imag)}",
            f"tree_readout_re = {fmt(self.tree_readout.real)}",
            f"tree_readout_im = {fmt(self.tree_readout.imag)}",
            f"abstract_discrepancy = {fmt(self.abstract_discrepancy)}",
            f"abstract_tolerance = {fmt(ABSTRACT_TOLERANCE)}",
        ]
        if self.optical_ratio is not None:
            out += [
                f"optical_ratio = {fmt(self.optical_ratio)}",
                f"optical_discrepancy = {fmt(self.optical_discrepancy)}",
                f"optical_tolerance = {fmt(OPTICAL_TOLERANCE)}",
            ]
        out.append(f"max_discrepancy = {fmt(self.max_discrepancy)}")
        out.append(f"verify = {'pass' if self.passed else 'fail'}")
        return out


def cross_check(table: TruthTable,
                params: OpticsParams | None = None) -> CrossCheck:
    """Compare every layer's on-axis amplitude for one function."""
    closed = bias_amplitude(table)
    quantum = complex(dj_output(table).amps[0])

    program = compile_general(table)
    tree = readout_amplitude(run_program(program))
    if program.global_phase:
        tree = -tree

    abstract = max(abs(quantum - tree), abs(quantum - closed), abs(tree - closed))
    if params is None:
        return CrossCheck(table.n, closed, quantum, tree, abstract)

    optical = run_optical(table, params)
    abstract_ratio = run_abstract(table).intensity_ratio
    return CrossCheck(
        table.n,
        closed,
        quantum,
        tree,
        abstract,
        optical_ratio=optical.intensity_ratio,
        optical_discrepancy=abs(optical.intensity_ratio - abstract_ratio),
    )
