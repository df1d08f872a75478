"""The maximal direct-sum partition of the cell probability vectors.

The unique maximal partition whose blocks span linearly independent
subspaces is the partition into connected components of the linear matroid
on the coefficient columns. Components are computed from the fundamental
circuit graph with respect to the leftmost-pivot column basis; connectivity
does not depend on that basis choice.

Greedy pairwise merging by rank additivity would be wrong here: pairwise
direct sums do not imply a joint direct sum (three coplanar lines), which is
why only the circuit-graph construction is used.
"""

from __future__ import annotations

from typing import Sequence

from .errors import UmvueError
from .linalg import Matrix, rank, rref
from .model import CategoricalModel, Partition, coefficient_matrix


class ZeroColumn(UmvueError):
    def __init__(self, k: int):
        self.k = k
        super().__init__(f"column {k} is zero")


class GroundSetMismatch(UmvueError):
    pass


def fundamental_circuit_graph(c: Matrix) -> list[set[int]]:
    """Adjacency sets over columns; columns in a common circuit are connected.

    A column basis is chosen by leftmost pivots. Every non-basis column is
    joined to the basis columns appearing in its expansion, and those basis
    columns are joined pairwise (one clique per fundamental circuit).
    """
    for j in range(c.ncols):
        if all(x == 0 for x in c.column(j)):
            raise ZeroColumn(j)
    red, pivots, _ = rref(c)
    adjacency: list[set[int]] = [set() for _ in range(c.ncols)]

    def connect(a: int, b: int) -> None:
        adjacency[a].add(b)
        adjacency[b].add(a)

    pivot_set = set(pivots)
    for j in range(c.ncols):
        if j in pivot_set:
            continue
        support = [pivots[r] for r in range(len(pivots)) if red.rows[r][j] != 0]
        for a in support:
            connect(a, j)
        for i, a in enumerate(support):
            for b in support[i + 1:]:
                connect(a, b)
    return adjacency


def _components(adjacency: list[set[int]]) -> Partition:
    n = len(adjacency)
    seen = [False] * n
    blocks: list[list[int]] = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        blocks.append(block)
    return Partition(blocks)


def mve_partition(m: CategoricalModel) -> Partition:
    """The unique maximal partition with blockwise linearly independent spans.

    A statistic is a UMVUE exactly when it is constant on these blocks, so
    this partition generates the whole subalgebra of UMVUEs.
    """
    _, c = coefficient_matrix(m)
    return _components(fundamental_circuit_graph(c))


def is_rank_additive(c: Matrix, p: Partition) -> bool:
    """Direct-sum certificate: blockwise ranks add up to the total rank."""
    if p.n != c.ncols:
        raise GroundSetMismatch(f"partition covers {p.n} columns, matrix has {c.ncols}")
    total = rank(c)
    parts = sum(rank(c.select_columns(block)) for block in p.blocks)
    return parts == total


def refines(p: Partition, q: Partition) -> bool:
    """True iff every block of p is contained in some block of q."""
    if p.n != q.n:
        raise GroundSetMismatch(f"ground sets differ: {p.n} vs {q.n}")
    owner = {k: j for j, block in enumerate(q.blocks) for k in block}
    return all(len({owner[k] for k in block}) == 1 for block in p.blocks)


def common_refinement(p: Partition, q: Partition) -> Partition:
    """Coarsest partition refining both: all non-empty pairwise intersections."""
    if p.n != q.n:
        raise GroundSetMismatch(f"ground sets differ: {p.n} vs {q.n}")
    blocks = []
    for a in p.blocks:
        for b in q.blocks:
            inter = set(a) & set(b)
            if inter:
                blocks.append(inter)
    return Partition(blocks)


def common_coarsening(ps: Sequence[Partition]) -> Partition:
    """Finest partition coarser than every input (union-find over all blocks)."""
    if not ps:
        raise ValueError("need at least one partition")
    n = ps[0].n
    for p in ps:
        if p.n != n:
            raise GroundSetMismatch(f"ground sets differ: {p.n} vs {n}")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in ps:
        for block in p.blocks:
            root = find(block[0])
            for k in block[1:]:
                parent[find(k)] = root
    groups: dict[int, list[int]] = {}
    for k in range(n):
        groups.setdefault(find(k), []).append(k)
    return Partition(groups.values())
