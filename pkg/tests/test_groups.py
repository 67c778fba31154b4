import pytest

from isotypic import (
    BoundExceededError,
    ValidationError,
    from_cayley_table,
    from_permutations,
    from_presentation,
)

def test_presentation_order80(g80):
    assert g80.order == 80
    assert len(g80.conjugacy_classes()) == 14
    assert g80.exponent == 40


def test_presentation_trivial():
    T = from_presentation(1, [[1]])
    assert T.order == 1
    assert len(T.rational_fusion_classes()) == 1


def test_presentation_order24(g24):
    assert g24.order == 24
    x, y = g24.generators[0], g24.generators[1]
    sub = g24.subgroup_generated([x, y])
    assert sub.order == 8
    assert g24.power(x, 2) == g24.power(y, 2)


def test_presentation_infinite_rejected():
    with pytest.raises(BoundExceededError, match="too large or infinite"):
        from_presentation(1, [])
    with pytest.raises(BoundExceededError, match="too large or infinite"):
        from_presentation(2, [[1, 2, -1, -2]], bound=40)  # Z x Z


def test_permutation_groups():
    S3 = from_permutations([[1, 0, 2], [1, 2, 0]])
    assert S3.order == 6
    Z4 = from_permutations([[1, 2, 3, 0]])
    assert Z4.order == 4
    S4 = from_permutations([[1, 0, 2, 3], [1, 2, 3, 0]])
    assert S4.order == 24
    assert len(S4.conjugacy_classes()) == 5


def test_permutation_validation():
    with pytest.raises(ValidationError, match="bijection"):
        from_permutations([[0, 0, 1]])


def test_cayley_table_valid():
    Z2 = from_cayley_table([[0, 1], [1, 0]])
    assert Z2.order == 2
    assert Z2.inv(1) == 1


def test_cayley_table_broken_associativity():
    # latin square with identity but not associative (order 5 loop)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ValidationError, match="associativity fails at"):
        from_cayley_table(table)


def test_cayley_table_missing_identity():
    with pytest.raises(ValidationError, match="identity"):
        from_cayley_table([[1, 0], [0, 1]])


def test_cayley_round_trip(g80):
    again = from_cayley_table(g80.export()["cayley"])
    assert again.order == g80.order
    assert again._mul == g80._mul
    assert again.elem_orders == g80.elem_orders


def test_conjugacy_classes_s4():
    S4 = from_permutations([[1, 0, 2, 3], [1, 2, 3, 0]])
    sizes = sorted(len(c.members) for c in S4.conjugacy_classes())
    assert sizes == [1, 3, 6, 6, 8]


def test_conjugacy_abelian_singletons():
    Z6 = from_permutations([[1, 2, 3, 4, 5, 0]])
    assert all(len(c.members) == 1 for c in Z6.conjugacy_classes())


def test_class_partition_invariants(small_groups):
    for group in small_groups.values():
        classes = group.conjugacy_classes()
        members = sorted(m for c in classes for m in c.members)
        assert members == list(range(group.order))
        for c in classes:
            assert c.representative == c.members[0]
            assert group.order % len(c.members) == 0


def test_subgroup_classes_q8(small_groups):
    sc = small_groups["Q8"].subgroup_classes()
    assert len(sc) == 6
    assert sorted(s.order for s in sc) == [1, 2, 4, 4, 4, 8]


def test_subgroup_classes_trivial():
    T = from_presentation(1, [[1]])
    assert [s.members for s in T.subgroup_classes()] == [(0,)]


def test_subgroup_classes_contain_worked_example_list(g80):
    words = [
        [[1, 1], [1, 2]], [[1, 1], [2]], [[2, 2], [1]], [[1, 1], [1, 2, 2]],
        [[1]], [[1, 1, 1, 1], [1, 2, 2]], [[1, 1, 1, 2, 2], [1, 2]], [[1, 2]],
        [[1, 2, 2]], [[1, 2, 2], [1] * 10],
    ]
    canon = {s.members for s in g80.subgroup_classes()}
    for gens in words:
        sub = g80.subgroup_generated([g80.evaluate_word(w) for w in gens])
        assert g80.canonical_form(sub.members) in canon


def test_subgroup_classes_closed_under_conjugation(small_groups):
    for group in small_groups.values():
        canon = {s.members for s in group.subgroup_classes()}
        for s in group.subgroup_classes():
            for a in range(group.order):
                conj = group.conjugate_subgroup(s.members, a)
                assert group.canonical_form(conj) in canon


def test_lattice_bound():
    S4 = from_permutations([[1, 0, 2, 3], [1, 2, 3, 0]])
    with pytest.raises(BoundExceededError):
        S4.subgroup_classes(bound=10)


def test_subgroup_generated_and_join(g80):
    x = g80.generators[0]
    y = g80.generators[1]
    x10 = g80.power(x, 10)
    central = g80.subgroup_generated([x10])
    assert central.order == 2
    assert all(g80.mul(x10, a) == g80.mul(a, x10) for a in range(g80.order))
    H = g80.subgroup_generated([x])
    assert g80.join(H, H).members == H.members
    full = g80.join(g80.subgroup_generated([x]), g80.subgroup_generated([y]))
    assert full.order == 80


def test_lagrange_for_all_subgroup_classes(small_groups):
    for group in small_groups.values():
        for s in group.subgroup_classes():
            assert group.order % s.order == 0
            members = set(s.members)
            assert 0 in members
            for a in s.members:
                assert group.inv(a) in members
                for b in s.members:
                    assert group.mul(a, b) in members


def test_exponent_divides_order(small_groups, g80, g24):
    for group in list(small_groups.values()) + [g80, g24]:
        assert group.order % group.exponent == 0
        assert group.elem_orders[0] == 1


def test_fusion_classes():
    Z5 = from_permutations([[1, 2, 3, 4, 0]])
    assert len(Z5.rational_fusion_classes()) == 2
    S4 = from_permutations([[1, 0, 2, 3], [1, 2, 3, 0]])
    assert len(S4.rational_fusion_classes()) == len(S4.conjugacy_classes()) == 5


def test_fusion_partition(small_groups):
    for group in small_groups.values():
        fused = group.rational_fusion_classes()
        members = sorted(m for c in fused for m in c)
        assert members == list(range(group.order))


def test_exhaustive_associativity_order80(g80):
    g80._check_associativity_full()


def test_labels_and_words(g24):
    assert g24.label_of(0) == "1"
    x = g24.generators[0]
    assert g24.label_of(x) == "x"
    assert g24.evaluate_word([1, 1]) == g24.power(x, 2)
    assert g24.evaluate_word([-1, 1]) == 0


def test_sl23_equals_order24(small_groups, g24):
    assert small_groups["SL23"].order == g24.order == 24
