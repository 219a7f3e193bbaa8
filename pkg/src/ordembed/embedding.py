"""Continuous multi-utility embeddings of complete preference relations.

``debreu_utility`` represents a single complete, transitive, closed weak
relation by ranking its indifference classes.  ``build_multi_embedding``
represents a complete, negatively transitive, closed weak relation P by a
finite family of such utilities: realize the partial order polar(P) + diagonal
by linear extensions, take the product-topology interior of each strict part,
and rank each interior's weak counterpart.  The family satisfies the
existential semantics

    (x, y) in P  iff  some column has  v(x) >= v(y)
    (x, y) in polar(P)  iff  every column has  v(x) > v(y)

which ``verify_existential_embedding`` checks pair by pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EmptyFamily,
    GroundSetMismatch,
    InternalContractViolation,
    NotCompleteTransitive,
    NotContinuous,
    RelationPropertyError,
    ValidationError,
)
from .realizer import Realizer, build_realizer
from .relation import GroundSet, Relation, identity, polar, properties, union
from .topology import FiniteTopology, closure_in_product, interior_in_product, is_continuous_map

EXISTENTIAL = "existential"
PARETO = "pareto"


class MultiUtility:
    """A finite family of utility columns over a ground set.

    ``values`` has one row per element and one column per utility.  The
    ``semantics`` tag records how the family encodes a relation: existential
    (some column weakly agrees / all columns strictly agree) or pareto
    (all columns weakly agree and some strictly).
    """

    __slots__ = ("ground", "values", "semantics", "continuity_checked")

    def __init__(self, ground: GroundSet, values: np.ndarray, semantics: str,
                 continuity_checked: bool = False):
        if semantics not in (EXISTENTIAL, PARETO):
            raise ValidationError(f"unknown semantics {semantics!r}")
        vals = np.array(values, dtype=float, copy=True)
        if vals.ndim != 2 or vals.shape[0] != len(ground):
            raise ValidationError(
                f"values must be ({len(ground)}, k), got {vals.shape}")
        if vals.shape[1] == 0:
            raise EmptyFamily("at least one utility column is required")
        vals.setflags(write=False)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "semantics", semantics)
        object.__setattr__(self, "continuity_checked", continuity_checked)

    def __setattr__(self, name, value):
        raise AttributeError("MultiUtility is immutable")

    @property
    def width(self) -> int:
        return self.values.shape[1]

    def column(self, j: int) -> np.ndarray:
        return self.values[:, j]

    def with_semantics(self, semantics: str) -> "MultiUtility":
        return MultiUtility(self.ground, self.values, semantics,
                            continuity_checked=self.continuity_checked)

    def as_doc(self) -> dict:
        cols = {}
        for j in range(self.width):
            cols[f"v{j}"] = {e: float(self.values[i, j])
                             for i, e in enumerate(self.ground.elements)}
        return {"semantics": self.semantics, "columns": cols}

    def __repr__(self) -> str:
        return f"MultiUtility(semantics={self.semantics}, k={self.width})"


def debreu_utility(p: Relation, t: FiniteTopology) -> np.ndarray:
    """Rank utility of a complete, transitive weak relation closed in the product.

    v(x) counts the indifference classes strictly below x's class, so
    (x, y) in p iff v(x) >= v(y).  Closedness of p makes v constant on minimal
    neighborhoods, hence continuous; both facts are re-checked as
    postconditions.
    """
    props = properties(p)
    if not props.complete:
        raise NotCompleteTransitive("complete", "relation is not complete")
    if not props.transitive:
        raise NotCompleteTransitive("transitive", "relation is not transitive")
    if p.ground is not t.ground:
        raise GroundSetMismatch()
    if closure_in_product(p, t) != p:
        raise NotContinuous()

    inc = p.incidence
    n = len(p.ground)
    equiv = inc & inc.T
    reps: list[int] = []
    class_of = [-1] * n
    for i in range(n):
        for ci, rep in enumerate(reps):
            if equiv[i, rep]:
                class_of[i] = ci
                break
        else:
            class_of[i] = len(reps)
            reps.append(i)
    below = np.zeros(len(reps), dtype=int)
    for ci, rep in enumerate(reps):
        below[ci] = sum(1 for other in reps
                        if inc[rep, other] and not inc[other, rep])
    v = np.array([float(below[class_of[i]]) for i in range(n)])

    for i in range(n):
        for j in range(n):
            if bool(inc[i, j]) != (v[i] >= v[j]):
                raise InternalContractViolation("rank utility does not represent the relation")
    if not is_continuous_map(v, t):
        raise InternalContractViolation("rank utility is not continuous")
    return v


def build_multi_embedding(p: Relation, t: FiniteTopology) -> MultiUtility:
    """Existential multi-utility for a complete, negatively transitive, closed P.

    Pipeline: Q := polar(P); realize Q + diagonal; take the product-topology
    interior of each member's strict part; rank each interior's weak
    counterpart.  Constant columns produced by empty interiors are kept only
    when no nonconstant column exists.

    On some non-discrete spaces a member's interior fails negative
    transitivity, so no single continuous utility represents it; that surfaces
    as InternalContractViolation.
    """
    props = properties(p)
    if not props.complete:
        raise RelationPropertyError("complete")
    if not props.negatively_transitive:
        raise RelationPropertyError("negatively_transitive")
    if p.ground is not t.ground:
        raise GroundSetMismatch()
    if closure_in_product(p, t) != p:
        raise NotContinuous()

    q = polar(p)
    base = union(q, identity(p.ground))
    realizer = build_realizer(base)

    interiors = []
    combined = np.ones_like(q.incidence)
    for o in realizer.orders:
        inner = interior_in_product(o.strict(), t)
        interiors.append(inner)
        combined = combined & inner.incidence
    if not np.array_equal(combined, q.incidence):
        raise InternalContractViolation(
            "interiors of the realizer do not intersect to the strict relation")

    columns = []
    for idx, inner in enumerate(interiors):
        weak = polar(inner)
        if not properties(weak).transitive:
            raise InternalContractViolation(
                f"interior of realizer member {idx} is not negatively transitive; "
                "no continuous rank utility exists for it on this topology")
        columns.append(debreu_utility(weak, t))

    kept: list[np.ndarray] = []
    for col in columns:
        if not any(np.array_equal(col, prev) for prev in kept):
            kept.append(col)
    nonconstant = [c for c in kept if np.ptp(c) > 0]
    if nonconstant:
        kept = nonconstant

    out = MultiUtility(p.ground, np.column_stack(kept), EXISTENTIAL,
                       continuity_checked=True)
    if not verify_existential_embedding(p, out):
        raise InternalContractViolation("constructed embedding failed verification")
    return out


def _existential_matrices(v: MultiUtility) -> tuple[np.ndarray, np.ndarray]:
    vals = v.values
    some_weak = (vals[:, None, :] >= vals[None, :, :]).any(axis=2)
    all_strict = (vals[:, None, :] > vals[None, :, :]).all(axis=2)
    return some_weak, all_strict


def verify_existential_embedding(p: Relation, v: MultiUtility) -> bool:
    """Check both displayed identities: P as the union of weak agreements and
    polar(P) as the intersection of strict agreements."""
    if v.semantics != EXISTENTIAL:
        raise ValidationError("multi-utility does not carry existential semantics")
    if v.ground is not p.ground:
        raise GroundSetMismatch()
    some_weak, all_strict = _existential_matrices(v)
    return (np.array_equal(some_weak, p.incidence)
            and np.array_equal(all_strict, polar(p).incidence))


@dataclass(frozen=True)
class HasseDiagram:
    """A drawing of a strict order: one planar point per element and the
    covering pairs as edges."""

    ground: GroundSet
    points: dict[str, tuple[float, float]]
    edges: list[tuple[str, str]]

    def as_doc(self) -> dict:
        return {
            "points": {e: [x, y] for e, (x, y) in self.points.items()},
            "edges": [[a, b] for a, b in self.edges],
        }


def hasse_projection(v: MultiUtility, q: Relation) -> HasseDiagram:
    """Project utility vectors to the plane spanned by the identity line and
    the first coordinate's deviation from the mean.

    The first coordinate s(x)/sqrt(k) is strictly monotone along q because
    every column strictly increases along q; chains (k = 1) land on the axis
    with zero deviation.  Edges are the covering pairs of q.
    """
    if v.ground is not q.ground:
        raise GroundSetMismatch()
    vals = v.values
    k = v.width
    s = vals.sum(axis=1) / np.sqrt(k)
    d = vals[:, 0] - vals.mean(axis=1)
    els = q.ground.elements
    points = {e: (float(s[i]), float(d[i])) for i, e in enumerate(els)}

    inc = q.incidence
    two_step = (inc.astype(np.int32) @ inc.astype(np.int32)) > 0
    cover = inc & ~two_step
    edges = [(els[i], els[j]) for i, j in np.argwhere(cover)]
    return HasseDiagram(ground=q.ground, points=points, edges=edges)
