from .builders import (
    c_t_class,
    commuting_graph,
    connected_components,
    enhanced_power_graph,
    induced_subgraph,
    power_graph,
)
from .export import (
    GraphDocument,
    dump_graph,
    dumps_graph,
    load_graph,
    parse_graph,
    to_dot,
    to_edge_document,
)
from .graph import ComponentPartition, GraphKind, SimpleGraph
