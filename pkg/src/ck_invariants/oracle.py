"""Independent brute-force verification of the K-theory computations.

The oracle works straight off matrix entries: the defining map sends the
delta at i to (delta_i - row_i), so a finitely supported integer function
f lies in its kernel exactly when f(j) = sum_i f(i) A(i,j) for every j.
Restricted to functions supported in a window [0, N), eventual periodicity
turns the infinitely many coordinate constraints into finitely many
distinct rows, giving an exact finite linear system per window.

Kernel slabs and image membership are decided through that system with no
use of the product-generator reduction, which makes agreement with the
engine a genuine cross-check for the kernel direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

from .epseq import EpSeq, ZERO, combination, delta, finite_support_data
from .errors import InternalInvariantError
from .intlinalg import IntMatrix, kernel_basis, solve_linear
from .ktheory import k0_presentation, k_groups
from .presentation import EpPresentation, FiniteMatrix, MatrixPresentation


def _row_values(p: MatrixPresentation, count: int, horizon: int) -> list:
    """Entry table A(i, j) for i < count, j < horizon."""
    if isinstance(p, FiniteMatrix):
        return [[p.value(i, j) for j in range(horizon)] for i in range(count)]
    return [p.row(i).values(horizon) for i in range(count)]


def _horizon(p: MatrixPresentation, support: int, extra: Sequence[EpSeq] = ()) -> int:
    """Row window after which every constraint repeats an earlier one."""
    if isinstance(p, FiniteMatrix):
        return p.size
    n, period = p.pattern_alignment()
    for s in extra:
        n = max(n, len(s.prefix))
        period = lcm(period, len(s.period))
    return max(support, n) + period


def constraint_matrix(p: MatrixPresentation, support: int, horizon: int) -> IntMatrix:
    """Rows j < horizon of the defining map on functions supported in [0, support)."""
    a = _row_values(p, support, horizon)
    rows = [
        [(1 if i == j else 0) - a[i][j] for i in range(support)]
        for j in range(horizon)
    ]
    return IntMatrix.from_rows(rows, cols=support)


def slab_kernel(p: MatrixPresentation, n: int) -> IntMatrix:
    """Basis of the kernel restricted to functions supported in [0, n)."""
    if n < 1:
        raise ValueError("slab size must be at least 1")
    if isinstance(p, FiniteMatrix):
        n = min(n, p.size)
    return kernel_basis(constraint_matrix(p, n, _horizon(p, n)))


def default_slab_sizes(p: MatrixPresentation) -> list:
    """One, two, and three periods past every pattern prefix."""
    if isinstance(p, FiniteMatrix):
        return [p.size]
    n, period = p.pattern_alignment()
    return [n + k * period for k in (1, 2, 3)]


def image_membership(
    p: MatrixPresentation, target: EpSeq, support_bound: int
) -> Optional[list]:
    """Witness c with sum_{i < support_bound} c_i (delta_i - row_i) = target.

    Absence is only certified up to the given support bound: the result
    None means "not found with a witness supported in [0, support_bound)",
    a semi-decision by design.  Any returned witness is re-verified by
    exact sequence arithmetic.
    """
    if isinstance(p, FiniteMatrix):
        support_bound = min(support_bound, p.size)
    horizon = _horizon(p, support_bound, extra=(target,))
    matrix = constraint_matrix(p, support_bound, horizon)
    witness = solve_linear(matrix, target.values(horizon))
    if witness is None:
        return None
    image = ZERO
    for i, c in enumerate(witness):
        if c:
            image = image + c * (delta(i) - p.row(i))
    if image != target:
        raise InternalInvariantError("image witness failed exact re-verification")
    return witness


def verify_k0_relations(p: MatrixPresentation) -> bool:
    """Confirm every emitted K0 relation lands in the image of the map.

    For each tail-lattice basis vector a with finite correction h, the
    claimed relation says the ring element sum_S a_S q_S - sum_k sigma_k
    q_{k} is the image of the function h; the explicit witness c_i = h(i)
    is checked by exact sequence arithmetic, rebuilding both sides from
    row patterns alone.
    """
    if isinstance(p, FiniteMatrix):
        # Image generators are the columns delta_i - row_i themselves.
        mat = IntMatrix.from_rows(
            [[(1 if i == j else 0) - p.value(j, i) for j in range(p.size)] for i in range(p.size)],
            cols=p.size,
        )
        for i in range(p.size):
            col = EpSeq(mat.column(i), [0])
            if col != delta(i) - p.row(i):
                return False
        return True

    pres = k0_presentation(p, unital=False)
    gens = pres.generators
    for idx, a in enumerate(pres.lattice.basis_vectors()):
        # Rebuild the correction from raw pattern products.
        h = ZERO
        for coeff, classes in zip(a, gens.subsets):
            if coeff:
                prod = p.patterns[classes[0]]
                for k in classes[1:]:
                    prod = prod * p.patterns[k]
                h = h + coeff * prod
        data = finite_support_data(h)
        if not data.finitely_supported:
            return False
        recorded_h, sigma = pres.corrections[idx]
        if h != recorded_h:
            return False
        # Relation vector must match the engine's emission.
        vec = list(a)
        for k, s in enumerate(sigma):
            vec[gens.singleton_index(k)] -= s
        if vec != pres.relations.column(idx):
            return False
        # Explicit witness: sum_i h(i) (delta_i - row_i) equals the ring element.
        lhs = ZERO
        for i in data.support:
            lhs = lhs + h.value(i) * (delta(i) - p.row(i))
        rhs = h - combination(list(sigma), list(p.patterns))
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class SlabComparison:
    sizes: tuple
    ranks: tuple
    matches: bool


def slab_comparison(p: MatrixPresentation, n_list: Optional[Sequence[int]] = None) -> SlabComparison:
    """Slab kernels against the engine's K1 witnesses, with details.

    Checks that slab kernel ranks are nondecreasing and stabilize over the
    given window sizes, and that the stabilized slab lattice and the
    witness lattice contain each other (mutual membership through exact
    linear solving).
    """
    sizes = list(n_list) if n_list is not None else default_slab_sizes(p)
    if not sizes:
        raise ValueError("need at least one slab size")
    sizes = sorted(sizes)
    slabs = [slab_kernel(p, n) for n in sizes]
    ranks = tuple(b.cols for b in slabs)

    def verdict() -> bool:
        if any(ranks[i] > ranks[i + 1] for i in range(len(ranks) - 1)):
            return False
        if len(ranks) >= 2 and ranks[-1] != ranks[-2]:
            return False
        last = slabs[-1]
        width = last.rows
        witnesses = k_groups(p).k1_witnesses
        if last.cols != len(witnesses):
            return False
        witness_cols = []
        for w in witnesses:
            support = finite_support_data(w).support
            if support and max(support) >= width:
                return False
            witness_cols.append(w.values(width))
        witness_matrix = IntMatrix.from_columns(witness_cols, rows=width)
        for j in range(witness_matrix.cols):
            if solve_linear(last, witness_matrix.column(j)) is None:
                return False
        for j in range(last.cols):
            if solve_linear(witness_matrix, last.column(j)) is None:
                return False
        return True

    return SlabComparison(tuple(sizes), ranks, verdict())


def compare_k1(p: MatrixPresentation, n_list: Optional[Sequence[int]] = None) -> bool:
    return slab_comparison(p, n_list).matches
