"""Five-color Hamilton decompositions of the directed 5-dimensional torus.

For every odd m >= 3 the directed Cayley graph on (Z_m)^5 with the five unit
generators splits into five directed Hamilton cycles.  This package builds
the decomposition from a cyclic layer schedule with one Latin-table layer and
machine-verifies every finite ingredient: the exact-cover matching
certificate, the transfer identities between colors, the first-return table
of the normalized return map, the induced-cycle and excursion identities, the
81-cycle certificate for m = 3, and full Hamiltonicity by direct walk.
"""

__version__ = "0.1.0"

from .certificates import (
    CoverReport,
    cell_signature,
    exact_cover_enumerate,
    exact_cover_symbolic,
    verify_m3_certificate,
)
from .firstreturn import (
    ReturnRecord,
    SectionPoint,
    closed_form_first_return,
    induced_cycle,
    long_wrap,
    simulate_first_return,
    total_excursion,
)
from .hamilton import (
    DecompositionReport,
    export_decomposition,
    return_criterion_crosscheck,
    verify_color_hamiltonian,
    verify_decomposition,
    verify_partition,
)
from .modring import displacement, root_point, rotate, zero_set
from .returnmap import (
    check_identities,
    color_return,
    cycle_structure,
    normalized_color_return,
    normalized_return,
)
from .schedule import ScheduleKind, arc_successor, kind_for, latin_row_check
from .selector import latin_row, selector, selector_table
from .verdicts import StructuralError, Verdict

__all__ = [
    "CoverReport",
    "DecompositionReport",
    "ReturnRecord",
    "ScheduleKind",
    "SectionPoint",
    "StructuralError",
    "Verdict",
    "arc_successor",
    "cell_signature",
    "check_identities",
    "closed_form_first_return",
    "color_return",
    "cycle_structure",
    "displacement",
    "exact_cover_enumerate",
    "exact_cover_symbolic",
    "export_decomposition",
    "induced_cycle",
    "kind_for",
    "latin_row",
    "latin_row_check",
    "long_wrap",
    "normalized_color_return",
    "normalized_return",
    "return_criterion_crosscheck",
    "root_point",
    "rotate",
    "selector",
    "selector_table",
    "simulate_first_return",
    "total_excursion",
    "verify_color_hamiltonian",
    "verify_decomposition",
    "verify_m3_certificate",
    "verify_partition",
    "zero_set",
]
