import networkx as nx
import pytest

from powermatch.graphs import (
    GraphKind,
    SimpleGraph,
    c_t_class,
    commuting_graph,
    connected_components,
    dump_graph,
    dumps_graph,
    enhanced_power_graph,
    induced_subgraph,
    load_graph,
    parse_graph,
    power_graph,
    to_dot,
)
from powermatch.groups import (
    ElementSet,
    even_order_elements,
    involutions,
    is_eppo,
    make_cyclic,
    make_dihedral,
    make_elementary_abelian_2,
)
from powermatch.lab.catalog import default_catalog
from powermatch.utils.exceptions import ContractError, DocumentParseError, DomainError


def test_prime_power_cyclic_power_graphs_are_complete():
    for n in (1, 2, 3, 4, 5, 7, 8, 9, 16, 27):
        assert power_graph(make_cyclic(n)).is_complete(), n
    assert not power_graph(make_cyclic(6)).is_complete()


def test_power_graph_of_c6_misses_two_pairs(c6):
    graph = power_graph(c6)
    assert graph.edge_count == 13
    assert not graph.has_edge(3, 2)
    assert not graph.has_edge(3, 4)
    assert graph.kind is GraphKind.POWER


def test_elementary_abelian_power_graph_is_a_star():
    for k in range(1, 5):
        graph = power_graph(make_elementary_abelian_2(k))
        assert graph.edge_count == 2**k - 1
        assert graph.degree(0) == 2**k - 1


def test_identity_is_universal_in_power_graphs(s4, q8):
    for g in (s4, q8, make_dihedral(5)):
        graph = power_graph(g)
        assert graph.degree(g.identity) == g.order - 1


def test_enhanced_power_graph(c6, klein, s4):
    assert enhanced_power_graph(c6).is_complete()
    assert enhanced_power_graph(klein).edge_count == 3
    assert enhanced_power_graph(s4).same_edges(power_graph(s4))


def test_enhanced_strategies_agree(s4, q8, c2xc4):
    for g in (s4, q8, c2xc4, make_dihedral(6), make_cyclic(12)):
        assert enhanced_power_graph(g, "cover").same_edges(enhanced_power_graph(g, "closure"))
    with pytest.raises(DomainError):
        enhanced_power_graph(q8, "guess")


def test_commuting_graph(s3, q8, c2xc4):
    assert commuting_graph(c2xc4).is_complete()
    graph = commuting_graph(s3)
    assert set(graph.edges()) == {(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (3, 4)}
    q = commuting_graph(q8)
    assert not q.has_edge(1, 4)
    assert q.has_edge(1, 3)
    assert q.degree(2) == 7


def test_edge_chain_and_connectivity_on_the_catalog():
    for entry in default_catalog(64):
        g = entry.group
        power, enhanced, commuting = power_graph(g), enhanced_power_graph(g), commuting_graph(g)
        assert power.is_subgraph_of(enhanced), entry.name
        assert enhanced.is_subgraph_of(commuting), entry.name
        assert power.is_connected(), entry.name
        assert power.same_edges(enhanced) == is_eppo(g), entry.name


def test_cyclic_power_graph_joins_equal_orders():
    g = make_cyclic(36)
    graph = power_graph(g)
    for x in range(36):
        for y in range(x + 1, 36):
            if g.elt_order[x] == g.elt_order[y]:
                assert graph.has_edge(x, y)


def test_graph_validation():
    SimpleGraph.from_edges(3, [(0, 1), (1, 2)]).validate()
    with pytest.raises(ContractError):
        SimpleGraph(n=2, adj=(2, 0)).validate()
    with pytest.raises(ContractError):
        SimpleGraph(n=2, adj=(1, 0)).validate()
    with pytest.raises(ContractError):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ContractError):
        SimpleGraph.from_edges(2, [(0, 2)])


def test_induced_subgraph(c6):
    graph = power_graph(c6)
    same, vertices = induced_subgraph(graph, c6.all_elements)
    assert same.same_edges(graph)
    assert vertices == tuple(range(6))

    empty, vertices = induced_subgraph(graph, ElementSet())
    assert empty.n == 0 and vertices == ()

    sub, vertices = induced_subgraph(graph, ElementSet.from_indices([2, 3, 4]))
    assert vertices == (2, 3, 4)
    assert set(sub.edges()) == {(0, 2)}


def test_components_of_s4_even_elements(s4):
    partition = connected_components(power_graph(s4), even_order_elements(s4))
    assert len(partition) == 9
    assert sorted(partition.sizes) == [1, 1, 1, 1, 1, 1, 3, 3, 3]


def test_components_of_c2xc4_even_elements(c2xc4):
    partition = connected_components(power_graph(c2xc4), even_order_elements(c2xc4))
    assert sorted(partition.sizes) == [1, 1, 5]
    assert partition.component_of[0] == -1


def test_components_basic_cases(klein):
    assert len(connected_components(SimpleGraph.complete(5))) == 1
    star = power_graph(klein)
    partition = connected_components(star, klein.all_elements - ElementSet(1))
    assert partition.sizes == (1, 1, 1)


def test_components_agree_with_networkx(s4, d4):
    for g in (s4, d4, make_dihedral(6)):
        graph = power_graph(g)
        mask = even_order_elements(g)
        ours = {frozenset(c) for c in connected_components(graph, mask).components}
        reference = nx.Graph()
        reference.add_nodes_from(mask)
        reference.add_edges_from((u, v) for u, v in graph.edges() if u in mask and v in mask)
        assert ours == {frozenset(c) for c in nx.connected_components(reference)}


def test_c_t_classes(c4, klein, q8):
    assert c_t_class(c4, 2).indices() == (1, 2, 3)
    for t in involutions(klein):
        assert c_t_class(klein, t).indices() == (t,)
    assert c_t_class(q8, 2).cardinality == 7
    with pytest.raises(DomainError):
        c_t_class(c4, 1)


def test_c_t_classes_are_the_even_components():
    for entry in default_catalog(48):
        g = entry.group
        if g.order % 2:
            continue
        classes = [c_t_class(g, t) for t in involutions(g)]
        assert all(c.cardinality % 2 for c in classes), entry.name
        union = ElementSet()
        for c in classes:
            assert not (union & c).mask
            union = union | c
        partition = connected_components(power_graph(g), even_order_elements(g))
        assert {c.mask for c in partition.components} == {c.mask for c in classes}, entry.name


def test_edge_document(tmp_path, klein):
    graph = power_graph(klein)
    assert dumps_graph(graph) == '{"n":4,"kind":"power","edges":[[0,1],[0,2],[0,3]]}\n'
    path = tmp_path / "klein.json"
    dump_graph(graph, path)
    assert load_graph(path).same_edges(graph)
    assert load_graph(path).kind is GraphKind.POWER
    with pytest.raises(DocumentParseError):
        parse_graph('{"n": 2, "edges": [[0, 5]]}')
    with pytest.raises(DocumentParseError):
        parse_graph("[]")


def test_dot_export():
    graph = SimpleGraph.from_edges(4, [(1, 2), (0, 1)])
    # vertex 3 is isolated and gets no line
    assert to_dot(graph, "g") == "graph g {\n    0 -- 1;\n    1 -- 2;\n}\n"
    assert to_dot(SimpleGraph.empty(2), "e") == "graph e {\n}\n"
