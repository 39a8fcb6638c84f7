"""Untangling lab for planar graph drawings.

Adversarial chain/square instances on convex point sets, certified upper
bounds on fixable vertices, exact Tutte-style untangling, the circular
block-sequence oracle behind the bounds, and a playable Planarity Game.

The CLI lives in `untangle.cli`, the HTTP service in `untangle.server`.
"""

from .bounds import (
    BoundCertificate,
    FixReport,
    certified_fixed_upper_bound,
    count_fixed,
    label_sequence,
    persistent_clusters,
    theorem_bound_table,
)
from .construction import (
    ClusteredInstance,
    ConvexPointSet,
    assign_bad_drawing,
    build_chain_graph,
    build_cluster_triangulation,
    build_square_graph,
    convex_positions,
    reference_embedding,
    standard_instance,
)
from .embed import (
    MoveSequence,
    barycentric_embed,
    extract_moves,
    untangle_fixing_face,
)
from .errors import (
    CapacityError,
    OccupiedPointError,
    UnsupportedInstanceError,
    UntangleError,
    ValidationError,
)
from .game import (
    GameState,
    apply_move,
    hint,
    new_game_from_drawing,
    new_game_from_instance,
    new_game_generated,
    score,
    scrambled_random,
    undo_move,
)
from .geometry import Point
from .graph import (
    Drawing,
    PlanarGraph,
    count_crossings,
    is_maximal_planar,
    is_planar,
    is_plane_drawing,
    is_three_connected,
)
from .sequences import (
    CircularSequence,
    contains_xyxy,
    make_block_sequence,
    max_xyxy_free_length,
    verify_circle_lemma,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CapacityError",
    "CircularSequence",
    "ClusteredInstance",
    "ConvexPointSet",
    "Drawing",
    "FixReport",
    "GameState",
    "MoveSequence",
    "OccupiedPointError",
    "PlanarGraph",
    "Point",
    "UnsupportedInstanceError",
    "UntangleError",
    "ValidationError",
    "apply_move",
    "assign_bad_drawing",
    "barycentric_embed",
    "build_chain_graph",
    "build_cluster_triangulation",
    "build_square_graph",
    "certified_fixed_upper_bound",
    "contains_xyxy",
    "convex_positions",
    "count_crossings",
    "count_fixed",
    "extract_moves",
    "hint",
    "is_maximal_planar",
    "is_planar",
    "is_plane_drawing",
    "is_three_connected",
    "label_sequence",
    "make_block_sequence",
    "max_xyxy_free_length",
    "new_game_from_drawing",
    "new_game_from_instance",
    "new_game_generated",
    "persistent_clusters",
    "reference_embedding",
    "score",
    "scrambled_random",
    "standard_instance",
    "theorem_bound_table",
    "undo_move",
    "untangle_fixing_face",
    "verify_circle_lemma",
]
