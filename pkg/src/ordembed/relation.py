"""Finite binary relations stored as boolean incidence matrices.

A relation R over a ground set X of size n is an n-by-n boolean matrix with
``R[i, j]`` meaning "(x_i, x_j) is in R".  Weak relations read "x_i is at
least as good as x_j"; strict relations read "strictly better".  The two
presentations are exchanged by ``polar``, the complement of the dual, which
is an involution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GroundSetMismatch, ValidationError


@dataclass(frozen=True)
class GroundSet:
    """Ordered set of distinct labels; the label order fixes all indexing."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValidationError("elements: ground set must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError("elements: labels must be distinct")
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def index(self, label: str) -> int:
        try:
            return self._index[label]  # type: ignore[attr-defined]
        except KeyError:
            raise ValidationError(f"unknown element {label!r}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)


def ground_from(labels: Iterable[str]) -> GroundSet:
    return GroundSet(tuple(labels))


class Relation:
    """Immutable boolean incidence matrix bound to a ground set."""

    __slots__ = ("ground", "incidence")

    def __init__(self, ground: GroundSet, incidence: np.ndarray):
        inc = np.array(incidence, dtype=bool, copy=True)
        n = len(ground)
        if inc.shape != (n, n):
            raise ValidationError(f"incidence must be {n}x{n}, got {inc.shape}")
        inc.setflags(write=False)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "incidence", inc)

    def __setattr__(self, name, value):
        raise AttributeError("Relation is immutable")

    @classmethod
    def from_pairs(cls, ground: GroundSet, pairs: Iterable[tuple[str, str]]) -> "Relation":
        inc = np.zeros((len(ground), len(ground)), dtype=bool)
        for a, b in pairs:
            inc[ground.index(a), ground.index(b)] = True
        return cls(ground, inc)

    @classmethod
    def empty(cls, ground: GroundSet) -> "Relation":
        return cls(ground, np.zeros((len(ground), len(ground)), dtype=bool))

    @classmethod
    def full(cls, ground: GroundSet) -> "Relation":
        return cls(ground, np.ones((len(ground), len(ground)), dtype=bool))

    def pairs(self) -> list[tuple[str, str]]:
        """All related pairs as labels, in row-major index order."""
        els = self.ground.elements
        return [(els[i], els[j]) for i, j in np.argwhere(self.incidence)]

    def has(self, a: str, b: str) -> bool:
        return bool(self.incidence[self.ground.index(a), self.ground.index(b)])

    def count(self) -> int:
        return int(self.incidence.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self.incidence, other.incidence)

    def __hash__(self):  # pragma: no cover - relations are not hashed
        raise TypeError("Relation is unhashable")

    def __repr__(self) -> str:
        return f"Relation({list(self.ground.elements)}, pairs={self.pairs()})"


def _same_ground(a: Relation, b: Relation) -> None:
    if a.ground is not b.ground:
        raise GroundSetMismatch()


def identity(ground: GroundSet) -> Relation:
    return Relation(ground, np.eye(len(ground), dtype=bool))


def dual(r: Relation) -> Relation:
    """Transpose: (x, y) related iff (y, x) was."""
    return Relation(r.ground, r.incidence.T)


def complement(r: Relation) -> Relation:
    return Relation(r.ground, ~r.incidence)


def polar(r: Relation) -> Relation:
    """Complement of the dual; swaps weak and strict presentations."""
    return Relation(r.ground, ~r.incidence.T)


def union(a: Relation, b: Relation) -> Relation:
    _same_ground(a, b)
    return Relation(a.ground, a.incidence | b.incidence)


def intersection(a: Relation, b: Relation) -> Relation:
    _same_ground(a, b)
    return Relation(a.ground, a.incidence & b.incidence)


def difference(a: Relation, b: Relation) -> Relation:
    _same_ground(a, b)
    return Relation(a.ground, a.incidence & ~b.incidence)


def strict_part(r: Relation) -> Relation:
    """Drop the diagonal."""
    return Relation(r.ground, r.incidence & ~np.eye(len(r.ground), dtype=bool))


def _close(inc: np.ndarray) -> np.ndarray:
    cur = inc.copy()
    while True:
        nxt = cur | ((cur.astype(np.int32) @ cur.astype(np.int32)) > 0)
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def transitive_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing r."""
    return Relation(r.ground, _close(r.incidence))


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    asymmetric: bool
    antisymmetric: bool
    transitive: bool
    negatively_transitive: bool
    complete: bool
    partial_order: bool
    linear_order: bool

    def as_doc(self) -> dict[str, bool]:
        return {
            "reflexive": self.reflexive,
            "asymmetric": self.asymmetric,
            "antisymmetric": self.antisymmetric,
            "transitive": self.transitive,
            "negatively_transitive": self.negatively_transitive,
            "complete": self.complete,
            "partial_order": self.partial_order,
            "linear_order": self.linear_order,
        }


def _is_transitive(inc: np.ndarray) -> bool:
    two_step = (inc.astype(np.int32) @ inc.astype(np.int32)) > 0
    return not (two_step & ~inc).any()


def properties(r: Relation) -> PropertyReport:
    """Full property report; negative transitivity is transitivity of the complement."""
    inc = r.incidence
    n = len(r.ground)
    diag = np.eye(n, dtype=bool)
    reflexive = bool(inc[diag].all())
    asymmetric = not (inc & inc.T).any()
    antisymmetric = not (inc & inc.T & ~diag).any()
    transitive = _is_transitive(inc)
    negatively_transitive = _is_transitive(~inc)
    complete = bool((inc | inc.T).all())
    partial_order = reflexive and antisymmetric and transitive
    return PropertyReport(
        reflexive=reflexive,
        asymmetric=asymmetric,
        antisymmetric=antisymmetric,
        transitive=transitive,
        negatively_transitive=negatively_transitive,
        complete=complete,
        partial_order=partial_order,
        linear_order=partial_order and complete,
    )


@dataclass(frozen=True)
class LoadedRelation:
    """A parsed relation document: the stored form plus its polar counterpart."""

    ground: GroundSet
    kind: str
    weak: Relation
    strict: Relation


def parse_relation_document(doc: object) -> LoadedRelation:
    """Parse ``{"elements": [...], "pairs": [[a, b], ...], "kind": "weak"|"strict"}``.

    Whichever form the document stores, the other is derived via ``polar``.
    """
    if not isinstance(doc, dict):
        raise ValidationError("relation document must be a JSON object")
    try:
        elements = doc["elements"]
    except KeyError:
        raise ValidationError("elements: field is required") from None
    if (not isinstance(elements, list) or not elements
            or not all(isinstance(e, str) for e in elements)):
        raise ValidationError("elements: must be a nonempty list of strings")
    ground = GroundSet(tuple(elements))

    try:
        raw_pairs = doc["pairs"]
    except KeyError:
        raise ValidationError("pairs: field is required") from None
    if not isinstance(raw_pairs, list):
        raise ValidationError("pairs: must be a list of [a, b] pairs")
    pairs = []
    for k, item in enumerate(raw_pairs):
        if not (isinstance(item, list) and len(item) == 2
                and all(isinstance(s, str) for s in item)):
            raise ValidationError(f"pairs[{k}]: must be a two-element list of labels")
        a, b = item
        for label in (a, b):
            if label not in ground.elements:
                raise ValidationError(f"pairs[{k}]: unknown element {label!r}")
        pairs.append((a, b))

    kind = doc.get("kind")
    if kind not in ("weak", "strict"):
        raise ValidationError('kind: must be "weak" or "strict"')

    stored = Relation.from_pairs(ground, pairs)
    if kind == "weak":
        return LoadedRelation(ground=ground, kind=kind, weak=stored, strict=polar(stored))
    return LoadedRelation(ground=ground, kind=kind, weak=polar(stored), strict=stored)


def load_relation_file(path: str) -> LoadedRelation:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from None
    return parse_relation_document(doc)


def relation_to_doc(r: Relation, kind: str) -> dict:
    return {
        "elements": list(r.ground.elements),
        "pairs": [[a, b] for a, b in r.pairs()],
        "kind": kind,
    }
