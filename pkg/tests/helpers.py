"""Shared test utilities: seeded generators and independent oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from umvue import (
    CategoricalModel,
    Matrix,
    Partition,
    Statistic,
    coefficient_matrix,
    is_rank_additive,
    rank_of_vectors,
)
from umvue.poly import Monomial, Polynomial, coeff_vector


def random_fraction(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_statistic(rng: random.Random, n: int) -> Statistic:
    return Statistic(tuple(random_fraction(rng) for _ in range(n)))


def block_constant_statistic(rng: random.Random, p: Partition) -> Statistic:
    values = [Fraction(0)] * p.n
    for block in p.blocks:
        c = random_fraction(rng)
        for k in block:
            values[k] = c
    return Statistic(tuple(values))


def is_block_constant(g: Statistic, p: Partition) -> bool:
    return all(len({g[k] for k in block}) == 1 for block in p.blocks)


def random_coarsening(rng: random.Random, p: Partition) -> Partition:
    """Randomly merge the blocks of p (result is coarser than or equal to p)."""
    group_count = rng.randint(1, len(p.blocks))
    merged: dict[int, list[int]] = {}
    for block in p.blocks:
        merged.setdefault(rng.randrange(group_count), []).extend(block)
    return Partition(merged.values())


def random_partition(rng: random.Random, n: int) -> Partition:
    blocks: dict[int, list[int]] = {}
    group_count = rng.randint(1, n)
    for k in range(n):
        blocks.setdefault(rng.randrange(group_count), []).append(k)
    return Partition(blocks.values())


def random_polynomial(rng: random.Random, names=("theta", "eta"), max_degree: int = 3,
                      max_terms: int = 4) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = {}
        for _ in range(rng.randint(0, max_degree)):
            name = rng.choice(names)
            exps[name] = exps.get(name, 0) + 1
        mono = Monomial(exps)
        terms[mono] = terms.get(mono, Fraction(0)) + random_fraction(rng)
    return Polynomial(terms)


def spans_equal(polys_a, polys_b) -> bool:
    """Exact mutual containment of the coefficient spans of two polynomial sets."""
    monos = set()
    for p in list(polys_a) + list(polys_b):
        monos.update(p.terms)
    basis = sorted(monos, key=Monomial.sort_key)
    vecs_a = [coeff_vector(p, basis) for p in polys_a]
    vecs_b = [coeff_vector(p, basis) for p in polys_b]
    joint = rank_of_vectors(vecs_a + vecs_b)
    return rank_of_vectors(vecs_a) == joint and rank_of_vectors(vecs_b) == joint


def proper_splits(block):
    """All unordered 2-part splits of a block into non-empty halves."""
    items = list(block)
    rest = items[1:]
    for size in range(len(items)):
        for chosen in combinations(rest, size):
            left = [items[0], *chosen]
            right = [k for k in items if k not in left]
            if right:
                yield left, right


def check_maximality(m: CategoricalModel, p: Partition) -> bool:
    """Oracle for maximality: splitting any block must break rank additivity."""
    _, c = coefficient_matrix(m)
    if not is_rank_additive(c, p):
        return False
    for j, block in enumerate(p.blocks):
        if len(block) < 2:
            continue
        for left, right in proper_splits(block):
            others = [b for i, b in enumerate(p.blocks) if i != j]
            split = Partition(others + [left, right])
            if is_rank_additive(c, split):
                return False
    return True


def permuted_model(m: CategoricalModel, perm: list[int]) -> CategoricalModel:
    """Reorder the support by perm (new position i holds old cell perm[i])."""
    return CategoricalModel(
        support=[m.support[k] for k in perm],
        pmf=[m.pmf[k] for k in perm],
        parameters=m.parameters,
        domain=m.domain,
    )


def permuted_partition(p: Partition, perm: list[int]) -> Partition:
    """Image of p under the same reordering (old index k moves to perm^-1[k])."""
    inverse = {old: new for new, old in enumerate(perm)}
    return Partition([[inverse[k] for k in block] for block in p.blocks])


def matrix_of(rows) -> Matrix:
    return Matrix([[Fraction(x) for x in row] for row in rows])
