"""Text formats: function files, gate-program files, field dumps.

Function files are ``key = value`` lines::

    n = 2
    type = truthtable        # or: affine, constant
    bits = 0110              # truthtable: 2**n chars, label-ascending
    a = 10                   # affine: n coefficient bits
    c = 0                    # affine: constant term
    value = 1                # constant: the function value

Program files list one operation per line::

    N <n>
    PHASE level=<k> mask=<2**(k-1) bits>
    SWAP level=<k> pattern=<k-1 chars over 01*>
    GLOBAL <0|1>

Lines run in order.  A PHASE line executes right after the split that
creates its level; a SWAP line executes after the split of its own
level unless an earlier line already advanced past it.  All-zero masks
are identities and are omitted on output (an all-zero mask is emitted
only when needed to anchor a SWAP to a later round).  Blank lines and
``#`` comments are allowed in both formats.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractError, ParseError
from .oracles import AffineSpec, TruthTable
from .optics import Field2D
from .tree import GateProgram, PhaseMaskOp, SwapOp


def _content_lines(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line


# ----------------------------------------------------------------------
# Function files
# ----------------------------------------------------------------------

_FUNCTION_KEYS = {"n", "type", "bits", "a", "c", "value"}


class FunctionSource:
    """Parsed function file: a truth table plus how it was written."""

    def __init__(self, kind: str, table: TruthTable, affine: AffineSpec | None = None):
        self.kind = kind
        self.table = table
        self.affine = affine

    @property
    def n(self) -> int:
        return self.table.n


def parse_function_text(text: str) -> FunctionSource:
    entries: dict[str, tuple[int, str]] = {}
    for num, line in _content_lines(text):
        if "=" not in line:
            raise ParseError("expected 'key = value'", line=num)
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if key not in _FUNCTION_KEYS:
            raise ParseError(f"unknown key {key!r}", line=num)
        if key in entries:
            raise ParseError(f"duplicate key {key!r}", line=num)
        entries[key] = (num, value)

    def need(key):
        if key not in entries:
            raise ParseError(f"missing required key {key!r}")
        return entries[key]

    num, raw_n = need("n")
    try:
        n = int(raw_n)
    except ValueError:
        raise ParseError(f"n must be an integer, got {raw_n!r}", line=num) from None
    if n < 1:
        raise ParseError("n must be >= 1", line=num)

    num, kind = need("type")
    if kind == "truthtable":
        num, bits = need("bits")
        if len(bits) != 1 << n or set(bits) - {"0", "1"}:
            raise ParseError(
                f"bits must be {1 << n} characters of 0/1", line=num
            )
        return FunctionSource("truthtable", TruthTable.from_string(bits))
    if kind == "affine":
        num_a, a = need("a")
        if len(a) != n or set(a) - {"0", "1"}:
            raise ParseError(f"a must be {n} bits", line=num_a)
        num_c, c = need("c")
        if c not in ("0", "1"):
            raise ParseError("c must be 0 or 1", line=num_c)
        spec = AffineSpec(tuple(int(b) for b in a), int(c))
        return FunctionSource("affine", spec.table(), affine=spec)
    if kind == "constant":
        num_v, value = need("value")
        if value not in ("0", "1"):
            raise ParseError("value must be 0 or 1", line=num_v)
        return FunctionSource("constant", TruthTable.constant(n, int(value)))
    raise ParseError(
        f"type must be truthtable, affine or constant, got {kind!r}", line=num
    )


def read_function_file(path) -> FunctionSource:
    with open(path, encoding="utf-8") as handle:
        return parse_function_text(handle.read())


# ----------------------------------------------------------------------
# Program files
# ----------------------------------------------------------------------

def emit_program_text(program: GateProgram) -> str:
    """Render a program in the line format (identity masks dropped)."""
    program.validate()
    lines = [f"N {program.n}"]
    cursor = 0  # the round a parser would be at after the emitted lines
    for rnd, ops in program.steps:
        for op in ops:
            if isinstance(op, PhaseMaskOp):
                if op.is_identity():
                    continue
                lines.append(
                    f"PHASE level={op.level} "
                    f"mask={''.join(str(b) for b in op.mask)}"
                )
                cursor = rnd
            else:
                if max(op.level, cursor) < rnd:
                    # Identity mask whose only job is to place the swap
                    # in the right round.
                    lines.append(f"PHASE level={rnd} mask={'0' * (1 << (rnd - 1))}")
                lines.append(f"SWAP level={op.level} pattern={op.pattern}")
                cursor = rnd
    lines.append(f"GLOBAL {program.global_phase}")
    return "\n".join(lines) + "\n"


def parse_program_text(text: str) -> GateProgram:
    n = None
    rounds: list[tuple[int, list]] = []
    global_phase = 0
    seen_global = False
    implied = 0

    def schedule(rnd, op, num):
        nonlocal implied
        if rnd > n:
            raise ParseError(f"round {rnd} exceeds N={n}", line=num)
        if rounds and rounds[-1][0] == rnd:
            rounds[-1][1].append(op)
        else:
            rounds.append((rnd, [op]))
        implied = rnd

    for num, line in _content_lines(text):
        fields = line.split()
        tag = fields[0].upper()
        if tag == "N":
            if n is not None:
                raise ParseError("duplicate N line", line=num)
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                raise ParseError("expected 'N <positive int>'", line=num)
            n = int(fields[1])
            continue
        if n is None:
            raise ParseError("N must come before any operation", line=num)
        if tag == "PHASE":
            args = _op_args(fields[1:], {"level", "mask"}, num)
            level = _int_arg(args, "level", num)
            mask = args["mask"]
            if set(mask) - {"0", "1"}:
                raise ParseError("mask must be over 0/1", line=num)
            try:
                op = PhaseMaskOp(level, tuple(int(b) for b in mask))
            except ContractError as err:
                raise ParseError(str(err), line=num) from None
            if level < implied:
                raise ParseError(
                    f"level-{level} phase mask after round {implied} "
                    "cannot act on its branches",
                    line=num,
                )
            schedule(level, op, num)
        elif tag == "SWAP":
            args = _op_args(fields[1:], {"level", "pattern"}, num)
            level = _int_arg(args, "level", num)
            try:
                op = SwapOp(level, args["pattern"])
            except ContractError as err:
                raise ParseError(str(err), line=num) from None
            schedule(max(level, implied), op, num)
        elif tag == "GLOBAL":
            if seen_global:
                raise ParseError("duplicate GLOBAL line", line=num)
            if len(fields) != 2 or fields[1] not in ("0", "1"):
                raise ParseError("expected 'GLOBAL 0' or 'GLOBAL 1'", line=num)
            global_phase = int(fields[1])
            seen_global = True
        else:
            raise ParseError(f"unknown directive {fields[0]!r}", line=num)

    if n is None:
        raise ParseError("missing N line")
    program = GateProgram(
        n, tuple((rnd, tuple(ops)) for rnd, ops in rounds), global_phase
    )
    try:
        program.validate()
    except ContractError as err:
        raise ParseError(str(err)) from None
    return program


def _op_args(fields, expected, num):
    args = {}
    for item in fields:
        key, eq, value = item.partition("=")
        if not eq or key not in expected:
            raise ParseError(f"bad argument {item!r}", line=num)
        args[key] = value
    if set(args) != expected:
        raise ParseError(
            f"expected arguments {sorted(expected)}", line=num
        )
    return args


def _int_arg(args, key, num):
    try:
        return int(args[key])
    except ValueError:
        raise ParseError(f"{key} must be an integer", line=num) from None


def read_program_file(path) -> GateProgram:
    with open(path, encoding="utf-8") as handle:
        return parse_program_text(handle.read())


def write_program_file(program: GateProgram, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(emit_program_text(program))


# ----------------------------------------------------------------------
# Field dumps
# ----------------------------------------------------------------------

def write_field_csv(field: Field2D, path, frequency: bool = False):
    """Dump a field row-major as ``x,y,re,im`` (``u,v,re,im`` after a lens)."""
    ax = field.axis()
    labels = ("u", "v") if frequency else ("x", "y")
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{labels[0]},{labels[1]},re,im\n")
        for iy in range(field.grid_size):
            y = ax[iy]
            for ix in range(field.grid_size):
                s = field.samples[iy, ix]
                handle.write(
                    f"{ax[ix]:.15g},{y:.15g},{s.real:.15g},{s.imag:.15g}\n"
                )


def write_intensity_pgm(field: Field2D, path):
    """16-bit PGM of |field|^2, peak-normalized; sidecar records the peak.

    The sidecar is ``<path>.txt`` and holds the normalization constant,
    so absolute intensities can be recovered from the image.
    """
    intensity = np.abs(field.samples) ** 2
    peak = float(intensity.max())
    scale = 65535.0 / peak if peak > 0 else 0.0
    image = np.round(intensity * scale).astype(">u2")
    with open(path, "wb") as handle:
        handle.write(f"P5\n{field.grid_size} {field.grid_size}\n65535\n".encode())
        handle.write(image.tobytes())
    with open(f"{path}.txt", "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"max_intensity = {peak:.15g}\n")
        handle.write("levels = 65535\n")
