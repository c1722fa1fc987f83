from spexlab.graphs.canon import (
    IsoClassSet,
    canonical_form,
    canonical_graph,
    canonical_order,
    is_isomorphic,
)
from spexlab.graphs.covers import (
    chromatic_number,
    coverings_strictly_below,
    independent_covering_number,
    independent_coverings_of_size,
    matching_number,
    vertex_cover_number,
)
from spexlab.graphs.graph import (
    MAX_VERTICES,
    Graph,
    VertexSet,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    double_star,
    empty_graph,
    from_edges,
    induced_subgraph,
    join,
    matching_graph,
    path_graph,
    star_graph,
)
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.graphs.named import parse_graph
from spexlab.graphs.subgraph import contains_subgraph, is_free_of
