"""Trivializing numbers of knot diagrams.

The trivializing number of a diagram is computed from its chord diagram
as the fewest chords whose removal leaves no two chords interleaving.
The package also generates standard 2-bridge and pretzel diagrams, and
evaluates signature bounds and closed forms for them.
"""

from .chords import (
    ChordDiagram,
    RemovalWitness,
    brute_force_min_removal,
    interleaves,
    is_parallel,
    max_noncrossing,
    min_removal,
    trivializing_number,
)
from .codes import (
    GaussCode,
    ProjectionWord,
    chord_diagram,
    format_gauss,
    mirror,
    parse_gauss,
    parse_word,
    projection_of,
    trace_faces,
)
from .families import (
    DiagramClass,
    Kind,
    PretzelWord,
    TwoBridgeWord,
    box_kinds,
    build_pretzel,
    build_two_bridge,
    classify,
    decompose_bc,
    fraction,
    tr_closed_form_pretzel,
    tr_closed_form_two_bridge,
)
from .invariants import (
    BoundsReport,
    CheckerboardCounts,
    bounds_report,
    checkerboard,
    signature_alternating,
    signature_from_counts,
    writhe,
)

__version__ = "0.1.0"
