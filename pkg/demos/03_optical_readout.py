#!/usr/bin/env python3
"""Run the full optical model and image the Fourier plane.

The cavity output is a row of Gaussian spots carrying the signs
(-1)**f(x).  A lens integrates the field: the on-axis sample of its
Fourier transform.  Constant functions leave all the light in the
focal point, balanced functions leave none, and the verdict survives
spot overlap far beyond the resolvability bound.

Writes intensity images (16-bit PGM plus normalization sidecar) and a
field dump (CSV) into demos/output/.
"""

import pathlib

from djlight import (
    OpticsParams,
    TruthTable,
    build_lattice,
    lens_fourier,
    run_optical,
    synthesize_field,
    write_field_csv,
    write_intensity_pgm,
)

out_dir = pathlib.Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

params = OpticsParams(spacing=1.0, spot_size=0.25, grid_size=512)
print(f"grid {params.grid_size}^2, window {params.window}, "
      f"pitch {params.pitch:.4g}\n")

for bits in ("0000", "0110", "0001"):
    table = TruthTable.from_string(bits)
    report = run_optical(table, params)
    print(f"f = {bits}:")
    for line in report.lines():
        print(f"  {line}")
    print()

# The verdict is unchanged when the spots overlap heavily
# (spot radius twice the initial spacing).
blur = OpticsParams(spacing=1.0, spot_size=2.0, grid_size=512)
report = run_optical(TruthTable.from_string("0110"), blur)
print("same balanced function with spot_size = 2 * spacing "
      f"(resolvable for {report.resolvable_rounds} rounds):")
print(f"  intensity_ratio = {report.intensity_ratio:.3e}")
print(f"  verdict = {report.verdict}\n")

# Dump the cavity-plane field and both Fourier images for inspection.
lattice = build_lattice(params, 2)
signs = [1.0, -1.0, -1.0, 1.0]
field = synthesize_field(lattice, signs, params)
write_field_csv(field, out_dir / "balanced_field.csv")
write_intensity_pgm(field, out_dir / "balanced_field.pgm")
write_intensity_pgm(lens_fourier(field), out_dir / "balanced_fourier.pgm")

bright = synthesize_field(lattice, [1.0] * 4, params)
write_intensity_pgm(lens_fourier(bright), out_dir / "constant_fourier.pgm")

print(f"wrote field dumps to {out_dir}/")
print("(constant_fourier.pgm shows the bright focal spot; "
      "balanced_fourier.pgm is dark on axis)")
