"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS criterion N`` line once its assertions
hold, so ``pytest tests/test_acceptance.py -v -s`` doubles as the
acceptance report.  Tolerances are pinned here and nowhere else.
"""

import csv
import math
import time
from itertools import combinations, product

import numpy as np
import pytest

from djlight import (
    AffineSpec,
    OpticsParams,
    TruthTable,
    canonical_table,
    compile_affine,
    compile_general,
    dj_output,
    dove_rotation_angle,
    initial_lattice,
    lens_fourier,
    permute_leaves,
    readout_amplitude,
    relabel_to_canonical,
    resolvable_rounds,
    round_trip_lattice,
    run_optical,
    run_program,
    synthesize_field,
)
from djlight.cli import main
from djlight.optics import SpotLattice

SEED = 20250811


def random_table(rng, n):
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def random_balanced(rng, n):
    bits = np.zeros(1 << n, dtype=np.uint8)
    bits[rng.choice(1 << n, size=1 << (n - 1), replace=False)] = 1
    return TruthTable(n, bits)


def signed_readout(table):
    program = compile_general(table)
    amp = readout_amplitude(run_program(program))
    return -amp if program.global_phase else amp


def test_criterion_1_oracle_equivalence():
    started = time.perf_counter()
    rng = np.random.default_rng(SEED)
    worst = 0.0
    checked = 0
    for bits in product((0, 1), repeat=8):
        table = TruthTable(3, np.array(bits, dtype=np.uint8))
        delta = abs(dj_output(table).amps[0] - signed_readout(table))
        worst = max(worst, delta)
        checked += 1
    for n in (6, 8, 10):
        for _ in range(1000):
            table = random_table(rng, n)
            delta = abs(dj_output(table).amps[0] - signed_readout(table))
            worst = max(worst, delta)
            checked += 1
    elapsed = time.perf_counter() - started
    assert worst < 1e-12
    assert elapsed < 30.0
    print(
        f"\nPASS criterion 1: oracle equivalence on {checked} tables, "
        f"max |quantum - tree| = {worst:.3g} < 1e-12, {elapsed:.1f}s < 30s"
    )


def test_criterion_2_deutsch_jozsa_verdicts():
    rng = np.random.default_rng(SEED + 1)
    worst_balanced = 0.0
    balanced_count = 0
    for n in (1, 2, 3):
        for ones in combinations(range(1 << n), 1 << (n - 1)):
            bits = np.zeros(1 << n, dtype=np.uint8)
            bits[list(ones)] = 1
            amp = signed_readout(TruthTable(n, bits))
            worst_balanced = max(worst_balanced, abs(amp))
            balanced_count += 1
    for _ in range(500):
        amp = signed_readout(random_balanced(rng, 10))
        worst_balanced = max(worst_balanced, abs(amp))
        balanced_count += 1
    assert worst_balanced < 1e-12

    worst_constant = 0.0
    for n in (1, 2, 3, 10):
        for value in (0, 1):
            amp = signed_readout(TruthTable.constant(n, value))
            worst_constant = max(worst_constant, abs(abs(amp) - 1.0))
    assert worst_constant < 1e-12
    print(
        f"PASS criterion 2: {balanced_count} balanced tables read out "
        f"< {worst_balanced:.3g} (tol 1e-12); constants at |1| within "
        f"{worst_constant:.3g} (tol 1e-12)"
    )


def test_criterion_3_bias_law(tmp_path):
    worst_abstract = 0.0
    for n in range(1, 7):
        out = tmp_path / f"abstract_{n}.csv"
        assert main(["sweep", "--n", str(n), "--out", str(out),
                     "--samples", "12", "--seed", "3"]) == 0
        for row in csv.DictReader(out.open()):
            worst_abstract = max(worst_abstract, float(row["abs_err"]))
    assert worst_abstract < 1e-12

    out = tmp_path / "optical.csv"
    assert main([
        "sweep", "--n", "3", "--mode", "optical", "--out", str(out),
        "--samples", "4", "--seed", "3",
        "--spacing", "1.0", "--spot-size", "0.5", "--grid", "256",
    ]) == 0
    worst_optical = 0.0
    for row in csv.DictReader(out.open()):
        predicted = float(row["predicted"])
        err = float(row["abs_err"])
        if predicted > 0:
            worst_optical = max(worst_optical, err / predicted)
        else:
            assert err < 1e-10
    assert worst_optical < 1e-6
    print(
        f"PASS criterion 3: abstract sweeps n<=6 max err "
        f"{worst_abstract:.3g} < 1e-12; optical sweep at spot=spacing/2 "
        f"max rel err {worst_optical:.3g} < 1e-6"
    )


def test_criterion_4_overlap_tolerance():
    started = time.perf_counter()
    rng = np.random.default_rng(SEED + 2)
    n = 5
    spacing = 1.0
    tables = [random_balanced(rng, n) for _ in range(50)]
    constants = [TruthTable.constant(n, v) for v in (0, 1)]

    balanced_ratios = {}
    worst_balanced = 0.0
    worst_constant = 0.0
    for rel in (0.1, 0.5, 2.0):
        params = OpticsParams(
            spacing=spacing, spot_size=rel * spacing, grid_size=1024
        )
        for i, table in enumerate(tables):
            ratio = run_optical(table, params).intensity_ratio
            worst_balanced = max(worst_balanced, ratio)
            balanced_ratios.setdefault(i, []).append(ratio)
        for table in constants:
            ratio = run_optical(table, params).intensity_ratio
            worst_constant = max(worst_constant, abs(ratio - 1.0))

    spread = max(
        max(ratios) - min(ratios) for ratios in balanced_ratios.values()
    )
    elapsed = time.perf_counter() - started
    assert worst_balanced < 1e-10
    assert worst_constant < 1e-6
    assert spread < 1e-6
    assert elapsed < 120.0
    print(
        f"PASS criterion 4: 50 balanced tables stay dark "
        f"(max ratio {worst_balanced:.3g} < 1e-10) for spot/spacing in "
        f"{{0.1, 0.5, 2.0}}; constants within {worst_constant:.3g} of 1; "
        f"cross-overlap spread {spread:.3g} < 1e-6; {elapsed:.1f}s < 120s"
    )


def test_criterion_5_geometry_formulas():
    params = OpticsParams(spacing=1.0, spot_size=0.01, grid_size=64)
    lat = initial_lattice(params)
    worst_extent = 0.0
    for _ in range(10):
        lat = round_trip_lattice(lat, params)
        worst_extent = max(worst_extent, abs(lat.extent - 2.0))
    assert worst_extent < 1e-9

    for k in range(1, 11):
        setting = dove_rotation_angle(k)
        assert setting.rotation == pytest.approx(math.atan(2.0**-k), abs=1e-15)
        assert setting.prism_setting == pytest.approx(
            math.atan(2.0**-k) / 2, abs=1e-15
        )

    ratios = [1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0,
              32.0, 50.0, 64.0, 100.0, 128.0, 200.0, 256.0, 500.0,
              512.0, 1000.0]
    scales = [1e-3, 0.02, 0.4, 1.0, 8.0]
    pairs = 0
    for i, ratio in enumerate(ratios):
        scale = scales[i % len(scales)]
        expected = math.floor(1.0 + math.log2(ratio))
        assert resolvable_rounds(ratio * scale, scale) == expected
        pairs += 1
    assert pairs == 20
    print(
        f"PASS criterion 5: extent 2d over 10 rounds (max dev "
        f"{worst_extent:.3g} < 1e-9); dove angles arctan(2^-k) for k<=10; "
        f"resolvable rounds match floor(1+log2(d/delta)) on 20 pairs"
    )


def test_criterion_6_fourier_readout():
    window = 16.0
    worst_gauss = 0.0
    for denom in (32, 64, 128):
        delta = window / denom
        params = OpticsParams(
            spacing=1.0, spot_size=delta, grid_size=512, window=window
        )
        field = synthesize_field(initial_lattice(params), [1.0], params)
        value = lens_fourier(field).center_value().real
        worst_gauss = max(
            worst_gauss, abs(value - math.pi * delta**2) / (math.pi * delta**2)
        )
    assert worst_gauss < 1e-6

    delta = window / 64
    params = OpticsParams(
        spacing=1.0, spot_size=delta, grid_size=512, window=window
    )
    reference = lens_fourier(
        synthesize_field(initial_lattice(params), [1.0], params)
    ).center_value()
    worst_shift = 0.0
    for shift in ((0.137, -0.101), (0.25, 0.0), (-0.333, 0.177)):
        lattice = SpotLattice(
            0,
            np.array([[shift[0] * window, shift[1] * window]]),
            2 * params.spacing,
        )
        moved = lens_fourier(
            synthesize_field(lattice, [1.0], params)
        ).center_value()
        worst_shift = max(worst_shift, abs(moved - reference) / abs(reference))
    assert worst_shift < 1e-9
    print(
        f"PASS criterion 6: single-Gaussian F(0,0) = pi*delta^2 within "
        f"{worst_gauss:.3g} (tol 1e-6); translation changes F(0,0) by "
        f"{worst_shift:.3g} relative (tol 1e-9)"
    )


def test_criterion_7_compiler_soundness():
    checked = 0
    for n in range(1, 5):
        uniform = run_program(compile_general(TruthTable.constant(n, 0)))
        magnitude = uniform.amplitudes.copy()
        for bits in product((0, 1), repeat=1 << n):
            table = TruthTable(n, np.array(bits, dtype=np.uint8))
            state = run_program(compile_general(table))
            signs = 1.0 - 2.0 * (table.bits ^ table.bits[0])
            assert np.array_equal(state.amplitudes, signs * magnitude)
            checked += 1

    for n in (2, 3, 4):
        programs = set()
        tables = set()
        for a in product((0, 1), repeat=n):
            for c in (0, 1):
                programs.add(compile_affine(AffineSpec(a, c), n))
                tables.add(str(AffineSpec(a, c).table()))
        assert len(programs) == 2 ** (n + 1)
        assert len(tables) == 2 ** (n + 1)
    print(
        f"PASS criterion 7: exact compile/run round trip on {checked} "
        f"tables (all n<=4); affine class has exactly 2^(n+1) distinct "
        f"programs and tables for n in {{2,3,4}}"
    )


def test_criterion_8_relabeling():
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 7))
        table = random_balanced(rng, n)
        sigma = relabel_to_canonical(table)
        assert np.array_equal(table.bits[sigma], canonical_table(n).bits)

        state = run_program(compile_general(table))
        shuffled = permute_leaves(state, rng.permutation(1 << n))
        worst = max(
            worst,
            abs(readout_amplitude(shuffled) - readout_amplitude(state)),
        )
    assert worst < 1e-15
    print(
        f"PASS criterion 8: 200 relabelings reproduce the canonical "
        f"first-bit function exactly; readout permutation-invariant "
        f"within {worst:.3g} (tol 1e-15)"
    )
