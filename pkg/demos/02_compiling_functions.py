#!/usr/bin/env python3
"""Compile Boolean functions into phase-mask programs and verdict them.

A truth table with 2**n entries compiles into at most one phase mask
per round trip; XOR-affine functions need only uniform masks (one bit
per round).  The brute-force quantum register must agree with the tree
readout on every function.
"""

import numpy as np

from djlight import (
    AffineSpec,
    TruthTable,
    bias_amplitude,
    classify_table,
    compile_affine,
    compile_general,
    dj_output,
    emit_program_text,
    is_affine,
    readout_amplitude,
    run_program,
)


def report(table):
    cls = classify_table(table)
    program = compile_general(table)
    amp = readout_amplitude(run_program(program))
    if program.global_phase:
        amp = -amp
    reference = dj_output(table).amps[0]
    print(f"f = {table}  ({cls.tag.value}, zeros={cls.zeros}, ones={cls.ones})")
    print(f"  tree readout     = {amp.real:+.12f}")
    print(f"  quantum register = {reference.real:+.12f}")
    print(f"  closed form      = {bias_amplitude(table):+.12f}")
    affine = is_affine(table)
    if affine is not None:
        print(f"  affine form      = a={''.join(map(str, affine.a))} c={affine.c}")
    print()


for bits in ("0000", "1111", "0110", "0011", "0001"):
    report(TruthTable.from_string(bits))

print("compiled program for f = 0110 (XOR):")
print(emit_program_text(compile_general(TruthTable.from_string("0110"))))

print("the same function as a product-state program (uniform masks):")
spec = AffineSpec((1, 1), 0)
print(emit_program_text(compile_affine(spec, 2)))

print("a random 6-qubit balanced function still reads out exactly 0:")
rng = np.random.default_rng(7)
bits = np.zeros(64, dtype=np.uint8)
bits[rng.choice(64, size=32, replace=False)] = 1
report(TruthTable(6, bits))
