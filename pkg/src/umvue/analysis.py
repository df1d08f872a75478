"""Statistical semantics: zero-mean statistics, UMVUE checks, estimation.

A statistic is a UMVUE iff it is uncorrelated with every unbiased estimator
of zero. On finite support all second moments are finite, so the classical
moment conditions are vacuous and the criterion is purely linear-algebraic:
g passes iff g*chi is again zero-mean for every chi in a basis of the
zero-mean space. Checking a basis suffices because the map
(g, chi) -> E(g*chi) is linear in chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import UmvueError
from .linalg import null_space, rank_of_vectors, solve_in_span
from .matroid import GroundSetMismatch, mve_partition
from .model import CategoricalModel, Partition, Statistic, coefficient_matrix
from .poly import Monomial, Polynomial, coeff_vector


class LengthMismatch(UmvueError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"statistic has {got} values, model has {expected} cells")


def _check_length(m: CategoricalModel, g: Statistic) -> None:
    if len(g) != m.n:
        raise LengthMismatch(m.n, len(g))


def expectation(m: CategoricalModel, g: Statistic) -> Polynomial:
    """E g as a polynomial in the parameters: sum_k g(k) * p_k."""
    _check_length(m, g)
    out = Polynomial.zero()
    for value, p in zip(g.values, m.pmf):
        out = out + p * value
    return out


def zero_mean_space(m: CategoricalModel) -> list[Statistic]:
    """Exact basis of the unbiased estimators of zero; empty iff complete."""
    _, c = coefficient_matrix(m)
    return [Statistic(vec) for vec in null_space(c)]


@dataclass(frozen=True)
class UmvueVerdict:
    is_umvue: bool
    witness: Statistic | None = None    # offending zero-mean statistic
    residual: Polynomial | None = None  # E(g * witness), nonzero on failure

    def __bool__(self) -> bool:
        return self.is_umvue


def is_umvue(m: CategoricalModel, g: Statistic) -> UmvueVerdict:
    """Zero-correlation test against a basis of the zero-mean space.

    cov(g, chi) = E(g*chi) for zero-mean chi, so g is a UMVUE iff g*chi is
    itself zero-mean for every basis vector chi.
    """
    _check_length(m, g)
    _, c = coefficient_matrix(m)
    for chi in zero_mean_space(m):
        product = g.pointwise_mul(chi)
        if any(x != 0 for x in c.mul_vector(product.values)):
            return UmvueVerdict(False, witness=chi, residual=expectation(m, product))
    return UmvueVerdict(True)


def umvue_functionals(m: CategoricalModel) -> list[Polynomial]:
    """Block sums of the cell probabilities over the maximal MVE partition.

    Their span is exactly the set of parametric functions possessing UMVUEs.
    """
    return [
        sum((m.pmf[k] for k in block), Polynomial.zero())
        for block in mve_partition(m).blocks
    ]


def _positively_proportional(p: Polynomial, q: Polynomial) -> bool:
    """True iff p = c*q identically for some rational c > 0."""
    if p.is_zero() or q.is_zero():
        return False
    if set(p.terms) != set(q.terms):
        return False
    lead = q.monomials()[0]
    c = p.coefficient(lead) / q.coefficient(lead)
    return c > 0 and p == q * c


def minimal_sufficient_partition(m: CategoricalModel) -> Partition:
    """Proportionality classes: k, l share a block iff p_k = c*p_l with c > 0."""
    blocks: list[list[int]] = []
    for k in range(m.n):
        for block in blocks:
            if _positively_proportional(m.pmf[k], m.pmf[block[0]]):
                block.append(k)
                break
        else:
            blocks.append([k])
    return Partition(blocks)


def is_sufficient(m: CategoricalModel, p: Partition) -> bool:
    """True iff every block's cells are pairwise positively proportional,
    i.e. the conditional distribution within each block is parameter-free."""
    if p.n != m.n:
        raise GroundSetMismatch(f"partition covers {p.n} cells, model has {m.n}")
    for block in p.blocks:
        first = m.pmf[block[0]]
        for k in block[1:]:
            if not _positively_proportional(m.pmf[k], first):
                return False
    return True


def is_complete(m: CategoricalModel, p: Partition) -> bool:
    """True iff the block-sum functionals are linearly independent, so no
    nonzero block-measurable statistic has identically zero mean."""
    if p.n != m.n:
        raise GroundSetMismatch(f"partition covers {p.n} cells, model has {m.n}")
    basis, _ = coefficient_matrix(m)
    sums = [
        coeff_vector(sum((m.pmf[k] for k in block), Polynomial.zero()), basis)
        for block in p.blocks
    ]
    return rank_of_vectors(sums) == len(p.blocks)


class Estimability(Enum):
    OK = "ok"
    NOT_ESTIMABLE = "not-estimable"  # target outside span{p_1..p_N}
    NO_UMVUE = "no-umvue"            # estimable, but no UMVUE exists


@dataclass(frozen=True)
class EstimateResult:
    status: Estimability
    statistic: Statistic | None = None
    coefficients: tuple[Fraction, ...] | None = None  # target = sum c_j * pi_j

    def __bool__(self) -> bool:
        return self.status is Estimability.OK


def umvue_for(m: CategoricalModel, target: Polynomial) -> EstimateResult:
    """The UMVUE of a parametric function, or a diagnosis.

    If the target lies in the span of the block functionals pi_j, the UMVUE
    is the statistic taking the (unique) coefficient c_j on block j.
    """
    partition = mve_partition(m)
    monos: set = set(target.terms)
    for p in m.pmf:
        monos.update(p.terms)
    basis = sorted(monos, key=Monomial.sort_key)
    t = coeff_vector(target, basis)

    cell_columns = [coeff_vector(p, basis) for p in m.pmf]
    if solve_in_span(cell_columns, t) is None:
        return EstimateResult(Estimability.NOT_ESTIMABLE)

    pi_columns = [
        coeff_vector(sum((m.pmf[k] for k in block), Polynomial.zero()), basis)
        for block in partition.blocks
    ]
    coeffs = solve_in_span(pi_columns, t)
    if coeffs is None:
        return EstimateResult(Estimability.NO_UMVUE)

    values = [Fraction(0)] * m.n
    for c, block in zip(coeffs, partition.blocks):
        for k in block:
            values[k] = c
    return EstimateResult(Estimability.OK, Statistic(tuple(values)), tuple(coeffs))
