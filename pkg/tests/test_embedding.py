"""Continuous rank utilities and existential multi-utility embeddings."""

import numpy as np
import pytest

from ordembed import (
    EXISTENTIAL,
    PARETO,
    EmptyFamily,
    GroundSetMismatch,
    MultiUtility,
    NotCompleteTransitive,
    NotContinuous,
    Relation,
    RelationPropertyError,
    ValidationError,
    build_multi_embedding,
    build_topology,
    debreu_utility,
    discrete_topology,
    ground_from,
    hasse_projection,
    identity,
    indiscrete_topology,
    polar,
    union,
    verify_existential_embedding,
)

from helpers import ground_of, strict_posets


def test_debreu_utility_ranks_a_chain():
    g = ground_of(3)
    weak = Relation(g, np.triu(np.ones((3, 3), dtype=bool)))
    assert debreu_utility(weak, discrete_topology(g)).tolist() == [2.0, 1.0, 0.0]


def test_debreu_utility_counts_classes_below_with_ties():
    g = ground_from(["a", "b", "c", "d"])
    # a is indifferent to b, both above c, which is above d
    weak = Relation.from_pairs(g, [
        ("a", "a"), ("b", "b"), ("c", "c"), ("d", "d"),
        ("a", "b"), ("b", "a"),
        ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "d")])
    assert debreu_utility(weak, discrete_topology(g)).tolist() == [2.0, 2.0, 1.0, 0.0]


def test_debreu_utility_validates_the_relation():
    g = ground_of(2)
    t = discrete_topology(g)
    with pytest.raises(NotCompleteTransitive) as info:
        debreu_utility(identity(g), t)
    assert info.value.property_name == "complete"

    cyclic = Relation.from_pairs(ground_of(3), [
        ("a", "a"), ("b", "b"), ("c", "c"),
        ("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(NotCompleteTransitive) as info:
        debreu_utility(cyclic, discrete_topology(ground_of(3)))
    assert info.value.property_name == "transitive"

    with pytest.raises(GroundSetMismatch):
        debreu_utility(Relation.full(g), discrete_topology(ground_from(["a", "b"])))


def test_debreu_utility_needs_a_closed_relation():
    g = ground_from(["a", "b"])
    t = build_topology(g, [["a"]])
    weak = Relation.from_pairs(g, [("a", "a"), ("b", "b"), ("b", "a")])
    with pytest.raises(NotContinuous):
        debreu_utility(weak, t)
    # total indifference is closed on every space, and only constant
    # utilities are continuous here
    assert debreu_utility(Relation.full(g), t).tolist() == [0.0, 0.0]


def test_multi_utility_validation_and_docs():
    g = ground_of(2)
    with pytest.raises(ValidationError):
        MultiUtility(g, np.zeros((2, 1)), "majority")
    with pytest.raises(ValidationError):
        MultiUtility(g, np.zeros((3, 1)), EXISTENTIAL)
    with pytest.raises(EmptyFamily):
        MultiUtility(g, np.zeros((2, 0)), EXISTENTIAL)

    v = MultiUtility(g, np.array([[1.0], [0.0]]), EXISTENTIAL)
    assert v.width == 1
    assert v.column(0).tolist() == [1.0, 0.0]
    assert v.as_doc() == {"semantics": "existential",
                          "columns": {"v0": {"a": 1.0, "b": 0.0}}}
    assert v.with_semantics(PARETO).semantics == PARETO
    with pytest.raises(AttributeError):
        v.values = np.zeros((2, 1))
    with pytest.raises(ValueError):
        v.values[0, 0] = 9.0


def test_build_multi_embedding_on_a_weak_total_order():
    g = ground_of(3)
    p = Relation(g, np.triu(np.ones((3, 3), dtype=bool)))
    v = build_multi_embedding(p, discrete_topology(g))
    assert v.width == 1
    assert v.values[:, 0].tolist() == [2.0, 1.0, 0.0]
    assert v.continuity_checked
    assert verify_existential_embedding(p, v)


def test_build_multi_embedding_single_strict_pair():
    """The realizer of the one-comparable-pair order has three distinct
    members, so the built family has three distinct rank columns."""
    g = ground_from(["a", "b", "c"])
    q = Relation.from_pairs(g, [("a", "c")])
    p = polar(q)
    v = build_multi_embedding(p, discrete_topology(g))
    assert v.values.T.tolist() == [[2.0, 1.0, 0.0],
                                   [1.0, 2.0, 0.0],
                                   [2.0, 0.0, 1.0]]
    assert verify_existential_embedding(p, v)


def test_two_hand_built_columns_also_represent_the_single_pair():
    """Width is not minimized by the builder; a two-column family chosen by
    hand passes verification for the same relation."""
    g = ground_from(["a", "b", "c"])
    p = polar(Relation.from_pairs(g, [("a", "c")]))
    v = MultiUtility(g, np.array([[1.0, 2.0], [2.0, 0.0], [0.0, 1.0]]), EXISTENTIAL)
    assert verify_existential_embedding(p, v)


def test_build_multi_embedding_total_indifference():
    g = ground_of(3)
    p = Relation.full(g)
    v = build_multi_embedding(p, discrete_topology(g))
    assert v.values.T.tolist() == [[2.0, 1.0, 0.0],
                                   [1.0, 2.0, 0.0],
                                   [0.0, 2.0, 1.0],
                                   [2.0, 0.0, 1.0]]
    assert verify_existential_embedding(p, v)

    flat = build_multi_embedding(p, indiscrete_topology(g))
    assert flat.width == 1
    assert np.ptp(flat.values) == 0.0
    assert verify_existential_embedding(p, flat)


def test_build_multi_embedding_validates_the_relation():
    g = ground_of(2)
    t = discrete_topology(g)
    with pytest.raises(RelationPropertyError) as info:
        build_multi_embedding(identity(g), t)
    assert info.value.property_name == "complete"

    g3 = ground_of(3)
    spin = Relation.from_pairs(g3, [
        ("a", "a"), ("b", "b"), ("c", "c"),
        ("a", "b"), ("b", "c"), ("c", "a")])
    with pytest.raises(RelationPropertyError) as info:
        build_multi_embedding(spin, discrete_topology(g3))
    assert info.value.property_name == "negatively_transitive"


def test_build_multi_embedding_needs_continuity():
    g = ground_from(["a", "b"])
    t = build_topology(g, [["a"]])
    p = Relation.from_pairs(g, [("a", "a"), ("b", "b"), ("b", "a")])
    with pytest.raises(NotContinuous):
        build_multi_embedding(p, t)


def test_embedding_on_a_non_discrete_space_can_collapse_to_a_constant():
    g = ground_from(["a", "b"])
    t = build_topology(g, [["a"]])
    p = Relation.full(g)
    v = build_multi_embedding(p, t)
    assert v.width == 1 and np.ptp(v.values) == 0.0
    assert verify_existential_embedding(p, v)


def test_verify_existential_embedding_checks_semantics_and_ground():
    g = ground_of(2)
    p = Relation.full(g)
    v = MultiUtility(g, np.zeros((2, 1)), PARETO)
    with pytest.raises(ValidationError):
        verify_existential_embedding(p, v)
    w = MultiUtility(ground_from(["a", "b"]), np.zeros((2, 1)), EXISTENTIAL)
    with pytest.raises(GroundSetMismatch):
        verify_existential_embedding(p, w)


def test_verify_existential_embedding_rejects_the_wrong_relation():
    g = ground_of(3)
    chain = Relation(g, np.triu(np.ones((3, 3), dtype=bool)))
    v = build_multi_embedding(chain, discrete_topology(g))
    assert not verify_existential_embedding(Relation.full(g), v)


def test_round_trip_exhaustive_on_three_points():
    g = ground_of(3)
    t = discrete_topology(g)
    for q in strict_posets(3):
        p = polar(q)
        v = build_multi_embedding(p, t)
        assert verify_existential_embedding(p, v)


def test_hasse_projection_of_a_chain_lies_on_the_axis():
    g = ground_of(3)
    p = Relation(g, np.triu(np.ones((3, 3), dtype=bool)))
    v = build_multi_embedding(p, discrete_topology(g))
    diagram = hasse_projection(v, polar(p))
    assert diagram.edges == [("a", "b"), ("b", "c")]
    assert all(d == 0.0 for _, d in diagram.points.values())
    xs = [diagram.points[e][0] for e in ("a", "b", "c")]
    assert xs[0] > xs[1] > xs[2]


def test_hasse_projection_keeps_only_covering_edges():
    g = ground_from(["top", "left", "right", "bottom"])
    q = Relation.from_pairs(g, [
        ("top", "left"), ("top", "right"), ("top", "bottom"),
        ("left", "bottom"), ("right", "bottom")])
    p = polar(q)
    v = build_multi_embedding(p, discrete_topology(g))
    diagram = hasse_projection(v, q)
    assert ("top", "bottom") not in diagram.edges
    assert set(diagram.edges) == {("top", "left"), ("top", "right"),
                                  ("left", "bottom"), ("right", "bottom")}
    doc = diagram.as_doc()
    assert sorted(doc["points"]) == ["bottom", "left", "right", "top"]
    assert ["top", "left"] in doc["edges"]


def test_hasse_projection_checks_the_ground():
    g = ground_of(2)
    v = MultiUtility(g, np.array([[1.0], [0.0]]), EXISTENTIAL)
    with pytest.raises(GroundSetMismatch):
        hasse_projection(v, Relation.empty(ground_from(["a", "b"])))
