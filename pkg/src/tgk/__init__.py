"""Travel groupoids: axiom checking, tree-family enumeration and exact
counts on complete multipartite graphs."""

from .counting import (
    count_S,
    count_simple_travel_groupoids,
    count_travel_groupoids,
    multinomial,
)
from .enumeration import (
    enumerate_bruteforce,
    enumerate_nonconfusing,
    filter_enumeration,
)
from .graph import (
    Graph,
    MultipartitePartition,
    build_multipartite,
    classify_family,
    has_travel_groupoid,
    maximal_cliques,
    parse_graph,
    recognize_multipartite,
)
from .groupoid import (
    Groupoid,
    PropertyReport,
    associated_graph,
    check_exchange_property,
    classify,
    confusing_pairs,
    find_violation,
    is_associative,
    is_idempotent,
    is_semi_smooth,
    is_simple,
    is_smooth,
    is_travel,
    iterate,
    left_units,
    maximal_associative_subgroupoids,
    parse_table,
    path_sequence,
    satisfies_t1,
    satisfies_t2,
    satisfies_tcb,
    satisfies_tcm,
)
from .trees import (
    RootedSpanningTree,
    TreeFamily,
    count_v_trees,
    enumerate_v_trees,
    family_from_groupoid,
    groupoid_from_family,
    is_simple_family,
    next_hop,
)

__version__ = "0.1.0"
