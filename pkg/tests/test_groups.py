import json
from math import lcm

import numpy as np
import pytest

from powermatch.groups import (
    ElementSet,
    GroupTable,
    centralizer_of_set,
    direct_product,
    dump_group,
    dumps_group,
    format_cycles,
    from_cayley_table,
    from_permutation_generators,
    gk_graph,
    involutions,
    is_abelian,
    is_cyclic,
    is_elementary_abelian_2,
    is_eppo,
    is_nilpotent,
    is_two_group,
    load_group,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    make_symmetric,
    odd_order_elements,
    odd_part_of_centralizer,
    order_spectrum,
    parse_cycles,
    square_roots_of_identity,
    subgroup_closure,
)
from powermatch.lab import default_catalog
from powermatch.utils.exceptions import (
    DocumentParseError,
    DomainError,
    GroupSizeError,
    GroupValidationError,
)


def test_cyclic_basics():
    assert make_cyclic(1).order == 1
    c6 = make_cyclic(6)
    assert c6.elt_order[1] == 6
    assert c6.identity == 0
    assert involutions(make_cyclic(4)).indices() == (2,)
    assert c6.labels[:3] == ("1", "z", "z^2")


def test_cyclic_rejects_bad_orders():
    with pytest.raises(DomainError):
        make_cyclic(0)
    with pytest.raises(GroupSizeError):
        make_cyclic(10, cap=8)


def test_table_invariants_hold_for_constructors(s4, q8, d4):
    for g in (s4, q8, d4, make_dicyclic(3), make_elementary_abelian_2(3)):
        assert g.elt_order[g.identity] == 1
        for x in range(g.order):
            assert g.mul[x, g.inv[x]] == g.identity
            assert g.cyclic_subgroup(x).cardinality == g.elt_order[x]
            assert x in g.cyclic_subgroup(x)
            assert g.identity in g.cyclic_subgroup(x)
        # re-validating the finished table must succeed
        GroupTable(g.mul, validate=True)


def test_dihedral_shape():
    d5 = make_dihedral(5)
    assert d5.order == 10
    assert involutions(d5).cardinality == 5
    assert not is_abelian(d5)
    with pytest.raises(DomainError):
        make_dihedral(2)


def test_dicyclic_has_a_unique_involution(q8):
    assert q8.order == 8
    assert involutions(q8).indices() == (2,)
    assert order_spectrum(q8) == (1, 2, 4, 4, 4, 4, 4, 4)
    dic3 = make_dicyclic(3)
    assert involutions(dic3).cardinality == 1
    assert not is_abelian(dic3)


def test_elementary_abelian_2():
    g = make_elementary_abelian_2(3)
    assert g.order == 8
    assert involutions(g).cardinality == 7
    assert is_elementary_abelian_2(g)
    assert not is_elementary_abelian_2(make_cyclic(4))


def test_symmetric_groups(s3, s4):
    assert s3.order == 6
    assert s4.order == 24
    assert involutions(s4).cardinality == 9
    assert order_spectrum(s4).count(3) == 8
    with pytest.raises(DomainError):
        make_symmetric(9)


def test_direct_product_orders(c2xc4):
    assert c2xc4.order == 8
    assert involutions(c2xc4).indices() == (2, 4, 6)
    c6_like = direct_product(make_cyclic(2), make_cyclic(3))
    assert is_cyclic(c6_like)


def test_direct_product_order_is_lcm_of_component_orders():
    factors = [
        (make_cyclic(2), make_cyclic(4)),
        (make_cyclic(4), make_cyclic(6)),
        (make_symmetric(3), make_cyclic(5)),
        (make_dicyclic(2), make_cyclic(3)),
        (make_dihedral(4), make_elementary_abelian_2(2)),
        (make_cyclic(9), make_dihedral(3)),
    ]
    for a, b in factors:
        g = direct_product(a, b)
        assert g.order == a.order * b.order
        for x in range(a.order):
            for y in range(b.order):
                assert g.elt_order[x * b.order + y] == lcm(a.elt_order[x], b.elt_order[y])


def test_catalog_element_orders_and_square_root_parities():
    for entry in default_catalog(200):
        g = entry.group
        assert all(g.order % int(o) == 0 for o in g.elt_order), entry.name
        if g.order % 2 == 0:
            assert square_roots_of_identity(g).cardinality % 2 == 0, entry.name
            assert involutions(g).cardinality % 2 == 1, entry.name


def test_closure_of_a_transposition_and_a_three_cycle():
    g = from_permutation_generators([parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)])
    assert g.order == 6
    assert order_spectrum(g) == (1, 2, 2, 2, 3, 3)
    assert order_spectrum(g) == order_spectrum(make_dihedral(3)) == order_spectrum(make_symmetric(3))
    assert not is_abelian(g)


def test_alternating_group_from_generators():
    a4 = from_permutation_generators([parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)])
    assert a4.order == 12
    assert involutions(a4).cardinality == 3
    assert not is_nilpotent(a4)
    assert a4.labels[0] == "()"


def test_permutation_closure_cases():
    assert from_permutation_generators([]).order == 1
    assert from_permutation_generators([(1, 0)]).order == 2
    assert from_permutation_generators([(1, 2, 3, 4, 0)]).order == 5
    assert from_permutation_generators([(1, 0, 2), (0, 2, 1)]).order == 6
    with pytest.raises(GroupSizeError):
        from_permutation_generators([(1, 0, 2, 3), (1, 2, 3, 0)], cap=10)


def test_cycle_notation():
    assert parse_cycles("(1 2)(3 4)") == (1, 0, 3, 2)
    assert parse_cycles("(1 2 3)", 4) == (1, 2, 0, 3)
    assert parse_cycles("()") == ()
    assert format_cycles((1, 2, 0, 3)) == "(1 2 3)"
    assert format_cycles((0, 1, 2)) == "()"
    for bad in ("(1 2", "(1 1)", "(0 1)", "(a b)", "x(1 2)"):
        with pytest.raises(DomainError):
            parse_cycles(bad)


def test_element_sets(c6):
    assert square_roots_of_identity(c6).indices() == (0, 3)
    assert odd_order_elements(c6).indices() == (0, 2, 4)
    s = ElementSet.from_indices([1, 3])
    assert len(s) == 2
    assert (s | ElementSet.from_indices([5])).indices() == (1, 3, 5)
    assert (s - ElementSet.from_indices([3])).indices() == (1,)


def test_centralizer(s3, q8):
    assert centralizer_of_set(s3, ElementSet()) == s3.all_elements
    # a transposition commutes only with itself and the identity
    assert centralizer_of_set(s3, ElementSet.from_indices([1])).indices() == (0, 1)
    assert centralizer_of_set(q8, involutions(q8)) == q8.all_elements


def test_odd_part_of_centralizer(s3, c2xc4):
    assert odd_part_of_centralizer(s3).indices() == (0,)
    assert odd_part_of_centralizer(c2xc4).indices() == (0,)
    s3xc5 = direct_product(s3, make_cyclic(5))
    assert odd_part_of_centralizer(s3xc5).cardinality == 5


def test_subgroup_closure(s4, c6):
    assert subgroup_closure(c6, ElementSet()).indices() == (0,)
    assert subgroup_closure(c6, [2, 3]) == c6.all_elements
    transposition, three_cycle = 1, 3
    # both fix point 1, so they generate a copy of S3
    assert subgroup_closure(s4, [transposition, three_cycle]).cardinality == 6
    assert subgroup_closure(s4, [23]) == s4.cyclic_subgroup(23)


def test_nilpotency(s3, s4, q8, c2xc4, d4):
    assert not is_nilpotent(s3)
    assert not is_nilpotent(s4)
    assert is_nilpotent(q8)
    assert is_nilpotent(c2xc4)
    assert is_nilpotent(d4)
    assert is_nilpotent(make_cyclic(1))
    assert is_nilpotent(direct_product(q8, make_cyclic(3)))


def test_eppo_and_prime_graph(s4, c6):
    assert is_eppo(s4)
    assert gk_graph(s4).is_null
    assert gk_graph(s4).primes == (2, 3)
    assert not is_eppo(c6)
    assert gk_graph(c6).edges == frozenset({(2, 3)})
    assert is_eppo(make_cyclic(1))


def test_two_group_flag(q8, s3):
    assert is_two_group(q8)
    assert not is_two_group(s3)
    assert not is_two_group(make_cyclic(1))


def test_validation_rejects_broken_tables():
    with pytest.raises(GroupValidationError, match="out of range"):
        GroupTable([[0, 1], [1, 2]])
    with pytest.raises(GroupValidationError, match="no identity"):
        GroupTable([[1, 1], [1, 1]])
    with pytest.raises(GroupValidationError, match="no inverse"):
        GroupTable([[0, 1], [1, 1]])
    # identity at 0 and inverses exist, but (1 * 1) * 2 != 1 * (1 * 2)
    loop = [
        [0, 1, 2],
        [1, 0, 0],
        [2, 1, 0],
    ]
    with pytest.raises(GroupValidationError):
        GroupTable(loop)
    with pytest.raises(GroupValidationError, match="square"):
        GroupTable(np.zeros((2, 3), dtype=int))


def test_group_document_round_trip(tmp_path, s3):
    path = tmp_path / "nested" / "s3.json"
    dump_group(s3, path)
    loaded = load_group(path)
    assert np.array_equal(loaded.mul, s3.mul)
    assert loaded.labels == s3.labels
    text = dumps_group(make_cyclic(2))
    assert text == '{"order":2,"mul":[[0,1],[1,0]],"labels":["1","z"]}\n'


def test_group_document_errors():
    with pytest.raises(DocumentParseError):
        from_cayley_table("{not json")
    with pytest.raises(DocumentParseError):
        from_cayley_table({"order": 2, "mul": [[0, 1]]})
    with pytest.raises(DocumentParseError):
        from_cayley_table({"order": 2, "mul": [[0, 1], [1, 0]], "labels": ["1"]})
    with pytest.raises(GroupValidationError):
        from_cayley_table(json.dumps({"order": 2, "mul": [[0, 0], [0, 0]]}))
    with pytest.raises(GroupSizeError):
        from_cayley_table({"order": 2, "mul": [[0, 1], [1, 0]]}, cap=1)
