"""Realizers: families of linear orders whose intersection recovers a partial order.

``build_realizer`` follows the classical recipe: for each ordered incomparable
pair (x, y) of a partial order P, extend P to a linear order that places x
above y.  The intersection of the extensions is exactly P, and every
incomparable pair is covered in both directions by construction.

``order_dimension`` brute-forces the least number of linear extensions whose
intersection is P; ``open_order_dimension`` restricts the search to extensions
whose strict parts are open in the product topology.  Both searches are
deterministic: extensions are enumerated in lexicographic permutation order
and subsets in colexicographic order, and the first witness wins.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AcyclicityViolation,
    GroundSetMismatch,
    InternalContractViolation,
    NotPartialOrder,
    SearchBudgetExceeded,
)
from .relation import (
    GroundSet,
    Relation,
    identity,
    intersection,
    properties,
    strict_part,
    transitive_closure,
    union,
)
from .topology import FiniteTopology, interior_in_product


class LinearOrder:
    """A linear order given as a permutation of element indices, highest first."""

    __slots__ = ("ground", "order", "relation")

    def __init__(self, ground: GroundSet, order: Sequence[int]):
        order = tuple(order)
        n = len(ground)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of element indices")
        pos = [0] * n
        for rank, i in enumerate(order):
            pos[i] = rank
        inc = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                inc[i, j] = pos[i] <= pos[j]
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "relation", Relation(ground, inc))

    def __setattr__(self, name, value):
        raise AttributeError("LinearOrder is immutable")

    def labels(self) -> tuple[str, ...]:
        els = self.ground.elements
        return tuple(els[i] for i in self.order)

    def strict(self) -> Relation:
        return strict_part(self.relation)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOrder):
            return NotImplemented
        return self.ground == other.ground and self.order == other.order

    def __repr__(self) -> str:
        return "LinearOrder(" + " > ".join(self.labels()) + ")"


@dataclass(frozen=True)
class Realizer:
    """A family of linear orders intended to intersect to ``target``."""

    target: Relation
    orders: tuple[LinearOrder, ...]

    def intersection(self) -> Relation:
        inc = np.ones_like(self.target.incidence)
        for o in self.orders:
            inc = inc & o.relation.incidence
        return Relation(self.target.ground, inc)

    def as_doc(self) -> dict:
        return {"orders": [list(o.labels()) for o in self.orders]}


def _incomparable_ordered_pairs(p: Relation) -> list[tuple[int, int]]:
    inc = p.incidence
    n = len(p.ground)
    return [(i, j) for i in range(n) for j in range(n)
            if i != j and not inc[i, j] and not inc[j, i]]


def linear_extension(p: Relation, forced: tuple[int, int] | None = None) -> LinearOrder:
    """Extend a partial order to a linear order, optionally forcing one pair.

    The forced pair is added before taking the transitive closure; if the
    closure stops being antisymmetric the forcing closed a cycle and
    AcyclicityViolation is raised.  Elements are then peeled off maximal-first,
    breaking ties by smallest index, which makes the output deterministic.
    """
    n = len(p.ground)
    inc = p.incidence | np.eye(n, dtype=bool)
    if forced is not None:
        inc = inc.copy()
        inc[forced[0], forced[1]] = True
    closed = transitive_closure(Relation(p.ground, inc))
    cinc = closed.incidence
    if (cinc & cinc.T & ~np.eye(n, dtype=bool)).any():
        raise AcyclicityViolation("forcing this pair closes a cycle")
    remaining = list(range(n))
    order: list[int] = []
    while remaining:
        for x in remaining:
            if not any(cinc[y, x] for y in remaining if y != x):
                order.append(x)
                remaining.remove(x)
                break
        else:  # pragma: no cover - impossible once antisymmetry holds
            raise InternalContractViolation("no maximal element found")
    out = LinearOrder(p.ground, order)
    if (p.incidence & ~out.relation.incidence).any():
        raise InternalContractViolation("extension does not contain the input order")
    return out


def build_realizer(p: Relation) -> Realizer:
    """One linear extension per ordered incomparable pair, duplicates removed."""
    if not properties(p).partial_order:
        raise NotPartialOrder()
    orders: list[LinearOrder] = []
    for pair in _incomparable_ordered_pairs(p):
        ext = linear_extension(p, pair)
        if ext not in orders:
            orders.append(ext)
    if not orders:
        orders.append(linear_extension(p))
    realizer = Realizer(target=p, orders=tuple(orders))
    if not verify_realizer(p, realizer):
        raise InternalContractViolation("constructed realizer failed verification")
    return realizer


def verify_realizer(p: Relation, realizer: Realizer) -> bool:
    """Intersection must equal p and every incomparable ordered pair must be
    placed upward by some member."""
    if realizer.target.ground is not p.ground:
        raise GroundSetMismatch()
    for o in realizer.orders:
        if o.ground is not p.ground:
            raise GroundSetMismatch()
    if realizer.intersection() != p:
        return False
    for i, j in _incomparable_ordered_pairs(p):
        if not any(o.relation.incidence[i, j] for o in realizer.orders):
            return False
    return True


def _weak_mask(perm: tuple[int, ...], n: int) -> int:
    pos = [0] * n
    for rank, i in enumerate(perm):
        pos[i] = rank
    mask = 0
    for i in range(n):
        for j in range(n):
            if pos[i] <= pos[j]:
                mask |= 1 << (i * n + j)
    return mask


def _relation_mask(r: Relation) -> int:
    n = len(r.ground)
    mask = 0
    inc = r.incidence
    for i in range(n):
        for j in range(n):
            if inc[i, j]:
                mask |= 1 << (i * n + j)
    return mask


def all_linear_extensions(p: Relation) -> list[LinearOrder]:
    """Every linear extension of p, in lexicographic permutation order."""
    n = len(p.ground)
    pairs = [(i, j) for i, j in np.argwhere(p.incidence) if i != j]
    out = []
    for perm in itertools.permutations(range(n)):
        pos = [0] * n
        for rank, i in enumerate(perm):
            pos[i] = rank
        if all(pos[i] <= pos[j] for i, j in pairs):
            out.append(LinearOrder(p.ground, perm))
    return out


def _colex_combinations(count: int, k: int):
    if k == 0:
        yield ()
        return
    for last in range(k - 1, count):
        for rest in _colex_combinations(last, k - 1):
            yield rest + (last,)


def _search_dimension(masks: list[int], target: int, max_k: int) -> int | None:
    for k in range(1, max_k + 1):
        for subset in _colex_combinations(len(masks), k):
            m = masks[subset[0]]
            for idx in subset[1:]:
                m &= masks[idx]
            if m == target:
                return k
    return None


def order_dimension(p: Relation, max_k: int = 4, max_n: int = 8) -> int:
    """Least number of linear extensions intersecting to p, by exhaustive search."""
    if not properties(p).partial_order:
        raise NotPartialOrder()
    n = len(p.ground)
    if n > max_n:
        raise SearchBudgetExceeded(f"ground set has {n} > max_n = {max_n} elements",
                                   max_k=max_k, max_n=max_n)
    extensions = all_linear_extensions(p)
    masks = [_weak_mask(o.order, n) for o in extensions]
    target = _relation_mask(p)
    found = _search_dimension(masks, target, max_k)
    if found is None:
        raise SearchBudgetExceeded(f"no realizer of size <= max_k = {max_k} found",
                                   max_k=max_k, max_n=max_n)
    return found


def open_order_dimension(p: Relation, t: FiniteTopology,
                         max_k: int = 4, max_n: int = 8) -> int | None:
    """Least realizer size using only extensions whose strict parts are open.

    Returns None when no family of open-strict extensions can intersect to p
    at any size; raises SearchBudgetExceeded when one exists but not within
    max_k.
    """
    if not properties(p).partial_order:
        raise NotPartialOrder()
    if p.ground is not t.ground:
        raise GroundSetMismatch()
    n = len(p.ground)
    if n > max_n:
        raise SearchBudgetExceeded(f"ground set has {n} > max_n = {max_n} elements",
                                   max_k=max_k, max_n=max_n)
    masks = []
    for o in all_linear_extensions(p):
        q = o.strict()
        if interior_in_product(q, t) == q:
            masks.append(_weak_mask(o.order, n))
    if not masks:
        return None
    everything = masks[0]
    for m in masks[1:]:
        everything &= m
    if everything != _relation_mask(p):
        return None
    found = _search_dimension(masks, _relation_mask(p), max_k)
    if found is None:
        raise SearchBudgetExceeded(f"no open realizer of size <= max_k = {max_k} found",
                                   max_k=max_k, max_n=max_n)
    return found
