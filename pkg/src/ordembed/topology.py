"""Finite topologies and relation closure/interior in the product space.

Opens are stored as integer bitmasks over ground-set indices.  Every finite
topology assigns each point x a minimal open neighborhood U_x (the
intersection of all opens containing x), and the product-space closure and
interior of a relation reduce to neighborhood checks:

    (x, y) in cl(S)   iff  (U_x x U_y) meets S
    (x, y) in int(S)  iff  (U_x x U_y) is contained in S
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import GroundSetMismatch, ValidationError
from .relation import GroundSet, Relation


def _mask_to_indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


class FiniteTopology:
    """Immutable family of open sets over a ground set."""

    __slots__ = ("ground", "opens", "min_nbhd", "_nbhd_matrix")

    def __init__(self, ground: GroundSet, opens: Iterable[int]):
        n = len(ground)
        full = (1 << n) - 1
        family = set(opens) | {0, full}
        if any(m < 0 or m > full for m in family):
            raise ValidationError("open set mask out of range")
        for a in family:
            for b in family:
                if a | b not in family or a & b not in family:
                    raise ValidationError("opens are not closed under union/intersection")
        ordered = tuple(sorted(family, key=lambda m: (m.bit_count(), _mask_to_indices(m))))
        nbhd = []
        for x in range(n):
            u = full
            for m in ordered:
                if m >> x & 1:
                    u &= m
            nbhd.append(u)
        matrix = np.zeros((n, n), dtype=bool)
        for x in range(n):
            for i in _mask_to_indices(nbhd[x]):
                matrix[x, i] = True
        matrix.setflags(write=False)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "opens", ordered)
        object.__setattr__(self, "min_nbhd", tuple(nbhd))
        object.__setattr__(self, "_nbhd_matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteTopology is immutable")

    def neighborhood_matrix(self) -> np.ndarray:
        """Boolean matrix N with N[x, i] iff i lies in U_x."""
        return self._nbhd_matrix

    def neighborhood_labels(self, label: str) -> tuple[str, ...]:
        x = self.ground.index(label)
        els = self.ground.elements
        return tuple(els[i] for i in _mask_to_indices(self.min_nbhd[x]))

    def opens_as_labels(self) -> list[list[str]]:
        els = self.ground.elements
        return [[els[i] for i in _mask_to_indices(m)] for m in self.opens]

    def is_discrete(self) -> bool:
        return all(u == 1 << x for x, u in enumerate(self.min_nbhd))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteTopology):
            return NotImplemented
        return self.ground == other.ground and self.opens == other.opens

    def __repr__(self) -> str:
        return f"FiniteTopology(opens={self.opens_as_labels()})"


def build_topology(ground: GroundSet, generators: Iterable[Iterable[str]]) -> FiniteTopology:
    """Close the generator subsets under pairwise union and intersection."""
    n = len(ground)
    full = (1 << n) - 1
    family = {0, full}
    for gen in generators:
        mask = 0
        for label in gen:
            mask |= 1 << ground.index(label)
        family.add(mask)
    while True:
        new = set()
        members = list(family)
        for i, a in enumerate(members):
            for b in members[i:]:
                for c in (a | b, a & b):
                    if c not in family:
                        new.add(c)
        if not new:
            break
        family |= new
    return FiniteTopology(ground, family)


def discrete_topology(ground: GroundSet) -> FiniteTopology:
    return build_topology(ground, [[e] for e in ground.elements])


def indiscrete_topology(ground: GroundSet) -> FiniteTopology:
    return build_topology(ground, [])


def _check_ground(r: Relation, t: FiniteTopology) -> None:
    if r.ground is not t.ground:
        raise GroundSetMismatch()


def closure_in_product(s: Relation, t: FiniteTopology) -> Relation:
    """Closure of the relation viewed as a subset of the product space."""
    _check_ground(s, t)
    nb = t.neighborhood_matrix().astype(np.int32)
    hit = (nb @ s.incidence.astype(np.int32)) > 0
    return Relation(s.ground, (hit.astype(np.int32) @ nb.T) > 0)


def interior_in_product(s: Relation, t: FiniteTopology) -> Relation:
    """Interior in the product space: complement of the closure of the complement."""
    _check_ground(s, t)
    nb = t.neighborhood_matrix().astype(np.int32)
    miss = (nb @ (~s.incidence).astype(np.int32)) > 0
    return Relation(s.ground, ~((miss.astype(np.int32) @ nb.T) > 0))


@dataclass(frozen=True)
class TopologyReport:
    is_closed: bool
    is_open: bool
    closure: Relation
    interior: Relation

    def as_doc(self) -> dict:
        return {
            "is_closed": self.is_closed,
            "is_open": self.is_open,
            "closure_pairs": [[a, b] for a, b in self.closure.pairs()],
            "interior_pairs": [[a, b] for a, b in self.interior.pairs()],
        }


def relation_topology_report(s: Relation, t: FiniteTopology) -> TopologyReport:
    cl = closure_in_product(s, t)
    it = interior_in_product(s, t)
    return TopologyReport(is_closed=(cl == s), is_open=(it == s), closure=cl, interior=it)


def is_continuous_map(values: Mapping[str, float] | Sequence[float] | np.ndarray,
                      t: FiniteTopology) -> bool:
    """A real-valued map on a finite space is continuous iff it is constant
    on every minimal open neighborhood."""
    vec = _as_value_vector(values, t.ground)
    n = len(t.ground)
    for x in range(n):
        for i in _mask_to_indices(t.min_nbhd[x]):
            if vec[i] != vec[x]:
                return False
    return True


def _as_value_vector(values, ground: GroundSet) -> np.ndarray:
    if isinstance(values, Mapping):
        missing = [e for e in ground.elements if e not in values]
        if missing:
            raise ValidationError(f"values missing for elements {missing}")
        return np.array([float(values[e]) for e in ground.elements])
    vec = np.asarray(values, dtype=float)
    if vec.shape != (len(ground),):
        raise ValidationError(f"values must have length {len(ground)}")
    return vec


def parse_topology_document(doc: object, ground: GroundSet) -> FiniteTopology:
    """Parse ``{"opens_generators": [["a"], ...]}``; a missing document means discrete."""
    if doc is None:
        return discrete_topology(ground)
    if not isinstance(doc, dict):
        raise ValidationError("topology document must be a JSON object")
    gens = doc.get("opens_generators")
    if gens is None:
        raise ValidationError("opens_generators: field is required")
    if not isinstance(gens, list):
        raise ValidationError("opens_generators: must be a list of label lists")
    parsed: list[list[str]] = []
    for k, gen in enumerate(gens):
        if not (isinstance(gen, list) and all(isinstance(s, str) for s in gen)):
            raise ValidationError(f"opens_generators[{k}]: must be a list of labels")
        for label in gen:
            if label not in ground.elements:
                raise ValidationError(f"opens_generators[{k}]: unknown element {label!r}")
        parsed.append(gen)
    return build_topology(ground, parsed)


def load_topology_file(path: str | None, ground: GroundSet) -> FiniteTopology:
    if path is None:
        return discrete_topology(ground)
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: not valid JSON ({exc})") from None
    return parse_topology_document(doc, ground)
