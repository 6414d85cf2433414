from .blossom import max_matching
from .brute import brute_force_matching, brute_force_matching_number
from .constructive import (
    augment_involutions,
    has_inverse_edges,
    inverse_pair_matching,
    normalize_matching,
    rematch_enhanced_to_power,
)
from .io import (
    MatchingDocument,
    dump_matching,
    dumps_matching,
    load_matching,
    parse_matching,
    to_document,
)
from .matching import Matching, deficiency, is_perfect, require_valid, verify_matching
