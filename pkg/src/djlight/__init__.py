"""Classical-light ring-cavity simulation of the Deutsch-Jozsa algorithm.

Boolean functions compile into per-round phase-mask/swap programs, run
on a binary-tree path-amplitude engine and on a Gaussian spot-lattice
optics model, and are classified constant vs balanced from the on-axis
intensity behind a Fourier lens.  A dense quantum-register circuit
serves as the independent cross-check.
"""

from .crosscheck import (
    ABSTRACT_TOLERANCE,
    OPTICAL_TOLERANCE,
    CrossCheck,
    cross_check,
)
from .errors import ContractError, ParseError, ResourceError
from .fileio import (
    FunctionSource,
    emit_program_text,
    parse_function_text,
    parse_program_text,
    read_function_file,
    read_program_file,
    write_field_csv,
    write_intensity_pgm,
    write_program_file,
)
from .optics import (
    Field2D,
    OpticsParams,
    SpotLattice,
    build_lattice,
    dove_rotation_angle,
    initial_lattice,
    lens_fourier,
    on_axis_intensity,
    resolvable_rounds,
    round_trip_lattice,
    run_optical,
    synthesize_field,
)
from .oracles import (
    AffineSpec,
    FunctionClass,
    Tag,
    TruthTable,
    canonical_balanced_program,
    canonical_table,
    classify_table,
    compile_affine,
    compile_general,
    is_affine,
    relabel_to_canonical,
)
from .quantum import (
    Register,
    bias_amplitude,
    dj_output,
    hadamard_all,
    oracle_phase,
)
from .report import RunReport, run_abstract, verdict_for_ratio
from .tree import (
    GateProgram,
    PathState,
    PhaseMaskOp,
    SwapOp,
    apply_phase_mask,
    apply_phase_mask_at_depth,
    apply_swap,
    init_state,
    permute_leaves,
    readout_amplitude,
    run_program,
    split_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
