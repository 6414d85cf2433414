from .constructors import (
    compose,
    direct_product,
    format_cycles,
    from_permutation_generators,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    make_symmetric,
    parse_cycles,
)
from .io import (
    GroupDocument,
    dump_group,
    dumps_group,
    from_cayley_table,
    load_group,
    to_document,
)
from .predicates import (
    centralizer_of_set,
    commutes,
    even_order_elements,
    gk_graph,
    involutions,
    is_abelian,
    is_cyclic,
    is_cyclic_subset,
    is_elementary_abelian_2,
    is_eppo,
    is_nilpotent,
    is_two_group,
    lower_central_series,
    odd_order_elements,
    odd_part_of_centralizer,
    order_spectrum,
    square_roots_of_identity,
    subgroup_closure,
)
from .table import ElementSet, GkGraph, GroupTable
