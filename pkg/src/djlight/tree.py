"""Binary-decision-tree amplitude engine.

A register of n path qubits is held as one complex amplitude per path
label.  Labels are integers whose binary digits record the branch taken
at each split, with the digit of the *first* split as the most
significant bit; this convention is shared by every module and by the
program/function file formats.

Each cavity round trip is one ``split_step`` (every beam splits into a
"0" and a "1" child, amplitude scaled by 1/sqrt(2)), optionally followed
by phase masks (sign flips on the freshly created "1" branches) and
label swaps (NOT / controlled-NOT at a chosen depth).  All operations
are pure: inputs are never mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, ResourceError

_SQRT2 = math.sqrt(2.0)

#: Largest register supported by default (2**30 amplitudes).
MAX_LEVEL = 30


@dataclass(eq=False)
class PathState:
    """Amplitudes of all path labels after ``level`` completed splits."""

    level: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.level < 0:
            raise ContractError("level must be >= 0")
        if self.amplitudes.shape != (1 << self.level,):
            raise ContractError(
                f"level {self.level} needs {1 << self.level} amplitudes, "
                f"got {self.amplitudes.shape}"
            )

    def total_power(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@dataclass(frozen=True)
class PhaseMaskOp:
    """Sign flips on the "1" children created by split number ``level``.

    ``mask`` has one bit per parent prefix (the first ``level - 1`` label
    bits); where it is 1, the amplitude of the child label ``prefix,1``
    is multiplied by -1.
    """

    level: int
    mask: tuple[int, ...]

    def __post_init__(self):
        if self.level < 1:
            raise ContractError("phase mask level must be >= 1")
        if len(self.mask) != 1 << (self.level - 1):
            raise ContractError(
                f"level-{self.level} mask needs {1 << (self.level - 1)} bits, "
                f"got {len(self.mask)}"
            )
        if any(b not in (0, 1) for b in self.mask):
            raise ContractError("mask entries must be 0 or 1")

    def is_identity(self) -> bool:
        return not any(self.mask)


@dataclass(frozen=True)
class SwapOp:
    """Exchange of the two branches at depth ``level`` under matching parents.

    ``pattern`` is a string over ``0``, ``1`` and the wildcard ``*``
    matched against the first ``level - 1`` label bits.  Every label pair
    differing only in bit ``level`` whose prefix matches has its
    amplitudes exchanged, which moves whole subtrees when applied below
    the current depth (a NOT for level 1, a doubly controlled NOT for
    pattern "11" at level 3).
    """

    level: int
    pattern: str

    def __post_init__(self):
        if self.level < 1:
            raise ContractError("swap level must be >= 1")
        if len(self.pattern) != self.level - 1:
            raise ContractError(
                f"level-{self.level} swap needs a pattern of length "
                f"{self.level - 1}, got {len(self.pattern)!r}"
            )
        if any(c not in "01*" for c in self.pattern):
            raise ContractError("pattern characters must be 0, 1 or *")


GateOp = PhaseMaskOp | SwapOp


@dataclass(frozen=True)
class GateProgram:
    """Ordered per-round gate schedule for an n-qubit register.

    ``steps`` lists ``(round, ops)`` pairs; round r means "after the
    r-th split" (1-based).  Phase masks must act on the branches the
    round just created (level == round); swaps may act at any depth
    already present (level <= round).  ``global_phase`` records an
    overall -1; it is tracked as a bit and never applied to amplitudes.
    """

    n: int
    steps: tuple[tuple[int, tuple[GateOp, ...]], ...] = ()
    global_phase: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ContractError("register size must be >= 0")
        if self.global_phase not in (0, 1):
            raise ContractError("global_phase must be 0 or 1")

    def validate(self):
        """Raise ContractError unless the schedule is canonical."""
        last_round = 0
        for rnd, ops in self.steps:
            if rnd <= last_round:
                raise ContractError("rounds must be strictly increasing")
            if rnd > self.n:
                raise ContractError(f"round {rnd} exceeds register size {self.n}")
            last_round = rnd
            for op in ops:
                if isinstance(op, PhaseMaskOp):
                    if op.level != rnd:
                        raise ContractError(
                            f"phase mask of level {op.level} scheduled in "
                            f"round {rnd}; masks attach to the split that "
                            "creates their level"
                        )
                elif isinstance(op, SwapOp):
                    if op.level > rnd:
                        raise ContractError(
                            f"swap of level {op.level} scheduled before its "
                            f"branches exist (round {rnd})"
                        )
                else:
                    raise ContractError(f"unknown op type {type(op).__name__}")

    def canonical_steps(self):
        """Steps with identity phase masks dropped and empty rounds removed."""
        out = []
        for rnd, ops in self.steps:
            kept = tuple(
                op for op in ops
                if not (isinstance(op, PhaseMaskOp) and op.is_identity())
            )
            if kept:
                out.append((rnd, kept))
        return tuple(out)

    def __eq__(self, other):
        # Identity ops carry no information; compare canonical forms so a
        # program survives the round trip through the text format, which
        # omits all-zero masks.
        if not isinstance(other, GateProgram):
            return NotImplemented
        return (
            self.n == other.n
            and self.global_phase == other.global_phase
            and self.canonical_steps() == other.canonical_steps()
        )

    def __hash__(self):
        return hash((self.n, self.global_phase, self.canonical_steps()))


def init_state() -> PathState:
    """Single input beam before any split: one unit amplitude."""
    return PathState(0, np.ones(1, dtype=complex))


def split_step(state: PathState, max_level: int = MAX_LEVEL) -> PathState:
    """Split every beam into two children, each at amplitude/sqrt(2)."""
    if state.level >= max_level:
        raise ResourceError(
            f"splitting past level {state.level} exceeds the configured "
            f"maximum of {max_level}"
        )
    children = np.repeat(state.amplitudes, 2) / _SQRT2
    return PathState(state.level + 1, children)


def apply_phase_mask(state: PathState, op: PhaseMaskOp) -> PathState:
    """Flip the sign of each masked "1" child just created by the split."""
    if op.level != state.level:
        raise ContractError(
            f"level-{op.level} mask applied to a level-{state.level} state; "
            "masks act on the children of the most recent split"
        )
    amps = state.amplitudes.copy()
    flipped = (np.flatnonzero(np.asarray(op.mask)) << 1) | 1
    amps[flipped] = -amps[flipped]
    return PathState(state.level, amps)


def apply_phase_mask_at_depth(state: PathState, op: PhaseMaskOp) -> PathState:
    """Apply a mask of an earlier level to a deeper state.

    A phase plate left in a branch flips every path through it, so the
    masked sign lands on all descendants of each flagged "1" child.
    This is the explicit escape hatch; ``GateProgram`` schedules keep
    masks in the round that creates their level.
    """
    if op.level > state.level:
        raise ContractError(
            f"level-{op.level} mask applied to a level-{state.level} state"
        )
    depth = state.level
    labels = np.arange(1 << depth)
    prefix = labels >> (depth - op.level + 1)
    branch = (labels >> (depth - op.level)) & 1
    mask = np.asarray(op.mask, dtype=bool)
    flip = mask[prefix] & (branch == 1)
    amps = state.amplitudes.copy()
    amps[flip] = -amps[flip]
    return PathState(state.level, amps)


def apply_swap(state: PathState, op: SwapOp) -> PathState:
    """Exchange amplitudes across branch ``op.level`` under matching prefixes."""
    if op.level > state.level:
        raise ContractError(
            f"level-{op.level} swap applied to a level-{state.level} state"
        )
    depth = state.level
    labels = np.arange(1 << depth)
    match = np.ones(labels.shape, dtype=bool)
    for i, ch in enumerate(op.pattern):
        if ch == "*":
            continue
        match &= ((labels >> (depth - 1 - i)) & 1) == int(ch)
    branch_bit = 1 << (depth - op.level)
    lower = match & ((labels & branch_bit) == 0)
    src = labels[lower]
    dst = src | branch_bit
    amps = state.amplitudes.copy()
    amps[src], amps[dst] = state.amplitudes[dst], state.amplitudes[src]
    return PathState(state.level, amps)


def run_program(program: GateProgram, max_level: int = MAX_LEVEL) -> PathState:
    """Run ``program.n`` splits interleaved with the scheduled gates."""
    program.validate()
    scheduled = dict(program.steps)
    state = init_state()
    for rnd in range(1, program.n + 1):
        state = split_step(state, max_level=max_level)
        for op in scheduled.get(rnd, ()):
            if isinstance(op, PhaseMaskOp):
                state = apply_phase_mask(state, op)
            else:
                state = apply_swap(state, op)
    return state


def readout_amplitude(state: PathState) -> complex:
    """On-axis interference amplitude: the normalized sum over all paths.

    Equals (1/2**n) * sum_x (-1)**f(x) for a register carrying the signs
    of a Boolean f, i.e. +-1 for constant f and 0 for balanced f.
    """
    return complex(np.sum(state.amplitudes) / math.sqrt(1 << state.level))


def permute_leaves(state: PathState, sigma) -> PathState:
    """Relabel paths: the amplitude at label x moves to label sigma[x]."""
    sigma = np.asarray(sigma)
    count = 1 << state.level
    if sigma.shape != (count,) or not np.array_equal(
        np.sort(sigma), np.arange(count)
    ):
        raise ContractError(f"sigma is not a permutation of 0..{count - 1}")
    amps = np.empty_like(state.amplitudes)
    amps[sigma] = state.amplitudes
    return PathState(state.level, amps)
