"""Pareto semantics: representing strict partial orders by coordinatewise dominance.

A strict partial order Q is realized by the rank utilities of any covering
realizer of Q + diagonal, because

    Q = (union of the members' strict parts) intersect (intersection of the weaks)

which is exactly "every column weakly agrees and some column strictly agrees".
``decomposition_check`` tests that identity pair by pair and classifies each
failing pair by which step of the argument broke.

``continuous_pareto_probe`` plays the same identity against the threshold
order on a sampled real grid and reports the first pair where it fails; for
any finite family sampled from a continuous one the identity must fail
somewhere near the threshold boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .embedding import PARETO, MultiUtility
from .errors import (
    EmptyFamily,
    GroundSetMismatch,
    InternalContractViolation,
    LengthMismatch,
    NonpositiveEpsilon,
    NotStrictPartialOrder,
    ValidationError,
)
from .realizer import Realizer, build_realizer
from .relation import Relation, identity, properties, union
from .semiorder import GridSpec, v_alpha_array

#: Absolute slack for the probe's float comparisons, so that pairs sitting on
#: the threshold boundary up to rounding are classified the way exact reals
#: would classify them.
PROBE_TOLERANCE = 1e-9


def pareto_dominates(u: Sequence[float], w: Sequence[float]) -> bool:
    """Coordinatewise >= with at least one strict coordinate."""
    if len(u) != len(w):
        raise LengthMismatch(f"tuples have lengths {len(u)} and {len(w)}")
    ua = np.asarray(u, dtype=float)
    wa = np.asarray(w, dtype=float)
    return bool((ua >= wa).all() and (ua > wa).any())


def build_pareto_representation(q: Relation) -> MultiUtility:
    """Rank utilities of the covering realizer of q + diagonal, Pareto semantics.

    Purely order-theoretic: no topology enters and no continuity is claimed.
    """
    props = properties(q)
    if not (props.asymmetric and props.transitive):
        raise NotStrictPartialOrder()
    base = union(q, identity(q.ground))
    realizer = build_realizer(base)
    n = len(q.ground)
    columns: list[np.ndarray] = []
    for o in realizer.orders:
        ranks = np.zeros(n)
        for depth, i in enumerate(o.order):
            ranks[i] = float(n - 1 - depth)
        if not any(np.array_equal(ranks, prev) for prev in columns):
            columns.append(ranks)
    out = MultiUtility(q.ground, np.column_stack(columns), PARETO)
    if not verify_pareto_embedding(q, out):
        raise InternalContractViolation("constructed representation failed verification")
    return out


def _pareto_matrix(v: MultiUtility) -> np.ndarray:
    vals = v.values
    all_weak = (vals[:, None, :] >= vals[None, :, :]).all(axis=2)
    some_strict = (vals[:, None, :] > vals[None, :, :]).any(axis=2)
    return all_weak & some_strict


def verify_pareto_embedding(q: Relation, v: MultiUtility) -> bool:
    """Check q = {(x, y): every column >= and some column >} pair by pair."""
    if v.semantics != PARETO:
        raise ValidationError("multi-utility does not carry pareto semantics")
    if v.ground is not q.ground:
        raise GroundSetMismatch()
    return bool(np.array_equal(_pareto_matrix(v), q.incidence))


@dataclass(frozen=True)
class DecompositionFailure:
    """One pair where the union-intersection identity broke.

    Cases mirror the three steps of the pairwise argument:
      1. a pair of q missing from the right-hand side,
      2. a pair of the right-hand side whose reverse lies in q,
      3. a pair of the right-hand side incomparable in q (a coverage hole).
    """

    pair: tuple[str, str]
    case: int


def decomposition_failures(q: Relation, realizer: Realizer) -> list[DecompositionFailure]:
    if realizer.target.ground is not q.ground:
        raise GroundSetMismatch()
    strict_union = np.zeros_like(q.incidence)
    weak_inter = np.ones_like(q.incidence)
    for o in realizer.orders:
        if o.ground is not q.ground:
            raise GroundSetMismatch()
        strict_union |= o.strict().incidence
        weak_inter &= o.relation.incidence
    rhs = strict_union & weak_inter
    failures: list[DecompositionFailure] = []
    els = q.ground.elements
    n = len(els)
    for i in range(n):
        for j in range(n):
            if q.incidence[i, j] and not rhs[i, j]:
                failures.append(DecompositionFailure((els[i], els[j]), 1))
            elif rhs[i, j] and not q.incidence[i, j]:
                case = 2 if q.incidence[j, i] else 3
                failures.append(DecompositionFailure((els[i], els[j]), case))
    return failures


def decomposition_check(q: Relation, realizer: Realizer) -> bool:
    """True iff q equals (union of strict parts) intersect (intersection of weaks)."""
    return not decomposition_failures(q, realizer)


@dataclass(frozen=True)
class ProbeViolation:
    x: float
    y: float
    failed_side: str
    related: bool
    strict_union: bool
    weak_intersection: bool

    def as_doc(self) -> dict:
        return {"x": self.x, "y": self.y, "failed_side": self.failed_side}


@dataclass(frozen=True)
class ProbeReport:
    violation: ProbeViolation | None
    pairs_scanned: int

    def as_doc(self) -> dict:
        return {
            "violation": None if self.violation is None else self.violation.as_doc(),
            "pairs_scanned": self.pairs_scanned,
        }


def continuous_pareto_probe(columns: Sequence[Sequence[float]] | np.ndarray,
                            epsilon: float, grid: GridSpec,
                            tol: float = PROBE_TOLERANCE) -> ProbeReport:
    """Scan the grid for the first pair where Pareto semantics of the sampled
    columns disagrees with the strict threshold order x > y + epsilon.

    Pairs run in row-major grid order (x ascending, then y).  Comparisons use
    an absolute slack so that boundary pairs are classified as exact reals
    would be.  When the right-hand side wrongly includes a pair, the reported
    side is "weak_intersection": a family matching the order would have to
    break the weak agreement there.
    """
    if epsilon <= 0:
        raise NonpositiveEpsilon(f"epsilon must be positive, got {epsilon}")
    vals = np.asarray(columns, dtype=float)
    if vals.ndim != 2 or vals.shape[0] == 0:
        raise EmptyFamily("probe needs at least one sampled column")
    xs = grid.points()
    if vals.shape[1] != xs.shape[0]:
        raise ValidationError(
            f"columns sampled at {vals.shape[1]} points, grid has {xs.shape[0]}")

    scanned = 0
    for i, x in enumerate(xs):
        col_i = vals[:, i]
        strict_any = (col_i[:, None] > vals + tol).any(axis=0)
        weak_all = (col_i[:, None] >= vals - tol).all(axis=0)
        in_q = (float(x) - xs - epsilon) > tol
        rhs = strict_any & weak_all
        mismatch = rhs != in_q
        scanned += len(xs)
        if mismatch.any():
            j = int(np.argmax(mismatch))
            related = bool(in_q[j])
            if related:
                side = "weak_intersection" if not weak_all[j] else "strict_union"
            else:
                side = "weak_intersection"
            scanned -= len(xs) - j - 1
            return ProbeReport(
                violation=ProbeViolation(
                    x=float(x), y=float(xs[j]), failed_side=side, related=related,
                    strict_union=bool(strict_any[j]),
                    weak_intersection=bool(weak_all[j])),
                pairs_scanned=scanned)
    return ProbeReport(violation=None, pairs_scanned=scanned)


def probe_from_document(doc: object) -> ProbeReport:
    """Run the probe from ``{"epsilon": e, "grid": {...}, "family": [...]}``.

    Family members are either ``{"alpha": a}``, sampled from the shifted bump
    curve, or ``{"table": {"<x>": value, ...}}`` with one value per grid point.
    """
    if not isinstance(doc, dict):
        raise ValidationError("probe document must be a JSON object")
    try:
        epsilon = float(doc["epsilon"])
    except KeyError:
        raise ValidationError("epsilon: field is required") from None
    except (TypeError, ValueError):
        raise ValidationError("epsilon: must be a number") from None
    grid = GridSpec.from_doc(doc.get("grid"))
    family = doc.get("family")
    if not isinstance(family, list) or not family:
        raise EmptyFamily("family: must be a nonempty list")
    xs = grid.points()
    columns = []
    for k, member in enumerate(family):
        if not isinstance(member, dict):
            raise ValidationError(f"family[{k}]: must be an object")
        if "alpha" in member:
            columns.append(v_alpha_array(xs, float(member["alpha"]), epsilon))
        elif "table" in member:
            table = member["table"]
            if not isinstance(table, dict):
                raise ValidationError(f"family[{k}].table: must be an object")
            try:
                keyed = {float(key): float(val) for key, val in table.items()}
            except (TypeError, ValueError):
                raise ValidationError(
                    f"family[{k}].table: keys and values must be numbers") from None
            col = np.empty(len(xs))
            for idx, x in enumerate(xs):
                near = [v for key, v in keyed.items() if abs(key - x) <= 1e-9]
                if not near:
                    raise ValidationError(
                        f"family[{k}].table: no value for grid point {float(x)}")
                col[idx] = near[0]
            columns.append(col)
        else:
            raise ValidationError(f'family[{k}]: needs either "alpha" or "table"')
    return continuous_pareto_probe(np.stack(columns), epsilon, grid)
