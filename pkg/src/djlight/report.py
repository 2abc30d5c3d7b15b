"""Run reports: the measured readout, its classification and diagnostics."""

from __future__ import annotations

from dataclasses import dataclass, field

from .oracles import FunctionClass, TruthTable, classify_table, compile_general
from .tree import readout_amplitude, run_program


def verdict_for_ratio(ratio: float, epsilon: float = 1e-6) -> str:
    """Classify an on-axis intensity ratio against the detection threshold."""
    if ratio > 1.0 - epsilon:
        return "Constant"
    if ratio < epsilon:
        return "Balanced"
    return "Biased"


def fmt(value) -> str:
    """Render one report value; floats carry 15 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


@dataclass(frozen=True)
class RunReport:
    """Outcome of one simulated run (abstract engine or optical model).

    ``readout`` is the complex on-axis amplitude, normalized so a
    constant function gives magnitude 1; ``intensity_ratio`` is its
    squared magnitude (for optical runs: measured against the
    constant-function reference).  Warnings never alter the numbers.
    """

    n: int
    mode: str
    function_class: FunctionClass
    readout: complex
    intensity_ratio: float
    verdict: str
    rounds: int
    resolvable_rounds: int | None = None
    resolvable: bool | None = None
    on_axis: float | None = None
    reference_on_axis: float | None = None
    field_power: float | None = None
    reference_power: float | None = None
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def lines(self) -> list[str]:
        """Report as ``key = value`` lines, LF-terminated by the caller."""
        out = [
            f"n = {self.n}",
            f"mode = {self.mode}",
            f"class = {self.function_class.tag.value}",
            f"zeros = {self.function_class.zeros}",
            f"ones = {self.function_class.ones}",
            f"readout_re = {fmt(self.readout.real)}",
            f"readout_im = {fmt(self.readout.imag)}",
            f"intensity_ratio = {fmt(self.intensity_ratio)}",
            f"verdict = {self.verdict}",
            f"rounds = {self.rounds}",
        ]
        if self.resolvable_rounds is not None:
            out.append(f"resolvable_rounds = {self.resolvable_rounds}")
            out.append(f"resolvable = {fmt(self.resolvable)}")
        for key in ("on_axis", "reference_on_axis",
                    "field_power", "reference_power"):
            value = getattr(self, key)
            if value is not None:
                out.append(f"{key} = {fmt(value)}")
        for i, message in enumerate(self.warnings):
            out.append(f"warning_{i} = {message}")
        return out


def run_abstract(table: TruthTable, epsilon: float = 1e-6) -> RunReport:
    """Compile a table, run the tree engine and classify the readout."""
    program = compile_general(table)
    state = run_program(program)
    readout = readout_amplitude(state)
    if program.global_phase:
        readout = -readout
    ratio = abs(readout) ** 2
    return RunReport(
        n=table.n,
        mode="abstract",
        function_class=classify_table(table),
        readout=readout,
        intensity_ratio=ratio,
        verdict=verdict_for_ratio(ratio, epsilon),
        rounds=table.n,
    )
