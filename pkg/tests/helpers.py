"""Shared generators for the exhaustive and randomized suites."""

import functools
import itertools

import numpy as np

from ordembed import FiniteTopology, Relation, build_topology, ground_from

LABELS = "abcdefgh"


@functools.lru_cache(maxsize=None)
def ground_of(n):
    """One shared GroundSet per size; relation ops compare grounds by identity."""
    return ground_from(LABELS[:n])


def strict_poset_matrices(n):
    """Every transitive antisymmetric irreflexive incidence matrix, batched.

    Each unordered pair independently takes one of three states (unrelated,
    up, down), then a vectorized two-step check filters to the transitive
    ones.  Counts for n = 1..5 come out as 1, 3, 19, 219, 4231.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    if m == 0:
        return np.zeros((1, n, n), dtype=bool)
    states = np.array(list(itertools.product(range(3), repeat=m)), dtype=np.int8)
    batch = np.zeros((len(states), n, n), dtype=bool)
    for k, (i, j) in enumerate(pairs):
        batch[states[:, k] == 1, i, j] = True
        batch[states[:, k] == 2, j, i] = True
    b = batch.astype(np.int8)
    two_step = np.einsum("bij,bjk->bik", b, b) > 0
    keep = ~(two_step & ~batch).any(axis=(1, 2))
    return batch[keep]


def strict_posets(n):
    g = ground_of(n)
    return [Relation(g, inc) for inc in strict_poset_matrices(n)]


def weak_posets(n):
    """Reflexive closures of the strict posets."""
    g = ground_of(n)
    eye = np.eye(n, dtype=bool)
    return [Relation(g, inc | eye) for inc in strict_poset_matrices(n)]


def all_topologies(ground):
    """Every topology on the ground set, brute-forced over subset families."""
    n = len(ground)
    full = (1 << n) - 1
    proper = list(range(1, full))
    found = []
    for keep in itertools.product((False, True), repeat=len(proper)):
        fam = {0, full} | {m for m, k in zip(proper, keep) if k}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            found.append(FiniteTopology(ground, fam))
    return found


def random_strict_weak_order(rng, ground):
    """Strict part of a random complete preorder: compare ranks with ties.

    Always asymmetric and negatively transitive.
    """
    n = len(ground)
    ranks = rng.integers(0, n, size=n)
    return Relation(ground, ranks[:, None] > ranks[None, :])


def random_topology(rng, ground):
    n = len(ground)
    count = int(rng.integers(0, n + 2))
    gens = []
    for _ in range(count):
        mask = rng.random(n) < 0.5
        gens.append([ground.elements[i] for i in range(n) if mask[i]])
    return build_topology(ground, gens)


def random_relation(rng, ground, density=0.4):
    n = len(ground)
    return Relation(ground, rng.random((n, n)) < density)
