"""Exact K-theory of Cuntz-Krieger algebras of 0-1 matrices.

For a finite matrix A the groups are the kernel and cokernel of the
integer matrix I - A^t.  For an eventually periodic infinite presentation
the same map is computed on a finite presentation of the row ring:

* K1 is the lattice of finitely supported integer combinations of the row
  patterns fixed by the class-sum map -- a combination f lies in the
  kernel exactly when f equals the sum over classes of (sum of f over the
  class) times the class pattern, pointwise.

* K0 is the free group on the product generators modulo one relation per
  tail-lattice basis vector: a combination with vanishing tail equals a
  finite delta sum, and every delta is identified with the singleton
  generator of its class by the image of the map.  The unital variant
  keeps the extra unit generator and its coordinate.

All outputs are canonical invariant-factor forms plus enough presentation
data (generator labels, relation matrices, kernel witnesses) for
downstream tools to rebuild classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .epseq import EpSeq, combination, finitely_supported, masked_sum
from .errors import InternalInvariantError
from .intlinalg import FgAbelianGroup, IntMatrix, cokernel_invariants, kernel_basis
from .presentation import EpPresentation, FiniteMatrix, MatrixPresentation
from .ringmodel import (
    ProductGenerators,
    TailLattice,
    correction_and_class_sums,
    product_generators,
    tail_lattice,
)


@dataclass(frozen=True)
class K0Presentation:
    """K0 as generators and relations, with the data that produced them."""

    generators: ProductGenerators
    lattice: TailLattice
    corrections: tuple  # (finite correction EpSeq, class-sum vector) per basis column
    relations: IntMatrix  # columns are relation vectors in generator coordinates
    group: FgAbelianGroup


@dataclass(frozen=True)
class K1Data:
    group: FgAbelianGroup
    witnesses: tuple  # finitely supported EpSeqs spanning the kernel
    pattern_coefficients: tuple  # the witness = combination of patterns with these coefficients


@dataclass(frozen=True)
class KTheoryResult:
    k0: FgAbelianGroup
    k1: FgAbelianGroup
    k0_unital: FgAbelianGroup
    k1_unital: FgAbelianGroup
    k0_generator_labels: tuple
    k0_relations: IntMatrix
    k0_unital_generator_labels: tuple
    k0_unital_relations: IntMatrix
    k1_witnesses: tuple


def one_minus_transpose(fm: FiniteMatrix) -> IntMatrix:
    """The matrix of delta_i -> delta_i - row_i on the finite index set."""
    n = fm.size
    return IntMatrix.from_rows(
        [[(1 if i == j else 0) - fm.value(j, i) for j in range(n)] for i in range(n)],
        cols=n,
    )


def k_groups_finite(fm: FiniteMatrix) -> KTheoryResult:
    mat = one_minus_transpose(fm)
    kern = kernel_basis(mat)
    witnesses = tuple(finitely_supported(kern.column(j)) for j in range(kern.cols))
    k0 = cokernel_invariants(mat)
    k1 = FgAbelianGroup(rank=kern.cols)
    labels = tuple(f"d{i}" for i in range(fm.size))
    # The unit is the sum of all deltas here, so the unitized ring adds
    # nothing: both unital groups coincide with the plain ones.
    return KTheoryResult(
        k0=k0,
        k1=k1,
        k0_unital=k0,
        k1_unital=k1,
        k0_generator_labels=labels,
        k0_relations=mat,
        k0_unital_generator_labels=labels,
        k0_unital_relations=mat,
        k1_witnesses=witnesses,
    )


def k0_presentation(p: EpPresentation, unital: bool) -> K0Presentation:
    """Generators-and-relations presentation of K0 (or its unital variant).

    Each tail-lattice basis vector a yields the relation
    a - sum_k sigma_k(h_a) e_{singleton k}, where h_a is the finite
    correction of a and sigma its class sums: modulo the image, every
    delta collapses onto the singleton generator of its class.
    """
    gens = product_generators(p, unital)
    lattice = tail_lattice(gens.seqs)
    indicators = p.class_indicators()
    corrections = []
    relation_cols = []
    for a in lattice.basis_vectors():
        h, sigma = correction_and_class_sums(gens, a, indicators)
        corrections.append((h, sigma))
        vec = list(a)
        for k, s in enumerate(sigma):
            vec[gens.singleton_index(k)] -= s
        relation_cols.append(vec)
    relations = IntMatrix.from_columns(relation_cols, rows=len(gens))
    return K0Presentation(
        generators=gens,
        lattice=lattice,
        corrections=tuple(corrections),
        relations=relations,
        group=cokernel_invariants(relations),
    )


def k1_data(p: EpPresentation) -> K1Data:
    """Kernel of the map as fixed points of the class-sum map.

    Restricted to combinations of patterns with vanishing tail, the map
    s -> (sum over class k of the combination) has the kernel elements as
    its fixed points; each one is emitted as an explicit finitely
    supported witness and re-verified in exact sequence arithmetic.
    """
    pats = list(p.patterns)
    m = len(pats)
    indicators = p.class_indicators()
    lattice = tail_lattice(pats)
    basis = lattice.basis  # m x r
    fixed_cols = []
    for j in range(basis.cols):
        s = basis.column(j)
        f = combination(s, pats)
        fixed_cols.append([masked_sum(f, indicators[k]) - s[k] for k in range(m)])
    fixed_map = IntMatrix.from_columns(fixed_cols, rows=m)
    coords = kernel_basis(fixed_map)  # r x d
    witnesses = []
    coefficient_vectors = []
    for j in range(coords.cols):
        s = basis.apply(coords.column(j))
        f = combination(s, pats)
        reconstructed = combination([masked_sum(f, indicators[k]) for k in range(m)], pats)
        if f != reconstructed:
            raise InternalInvariantError("K1 witness failed the fixed-point identity")
        coefficient_vectors.append(tuple(s))
        witnesses.append(f)
    return K1Data(
        group=FgAbelianGroup(rank=coords.cols),
        witnesses=tuple(witnesses),
        pattern_coefficients=tuple(coefficient_vectors),
    )


def k_groups_infinite(p: EpPresentation) -> KTheoryResult:
    plain = k0_presentation(p, unital=False)
    unital = k0_presentation(p, unital=True)
    k1 = k1_data(p)
    return KTheoryResult(
        k0=plain.group,
        k1=k1.group,
        k0_unital=unital.group,
        k1_unital=k1.group,  # unitization never changes K1
        k0_generator_labels=plain.generators.labels,
        k0_relations=plain.relations,
        k0_unital_generator_labels=unital.generators.labels,
        k0_unital_relations=unital.relations,
        k1_witnesses=k1.witnesses,
    )


def k_groups(p: MatrixPresentation) -> KTheoryResult:
    if isinstance(p, FiniteMatrix):
        return k_groups_finite(p)
    return k_groups_infinite(p)


def k0_infinite(p: EpPresentation):
    """K0 with its generator labels."""
    pres = k0_presentation(p, unital=False)
    return pres.group, pres.generators.labels


def k1_infinite(p: EpPresentation):
    """K1 with its finitely supported kernel witnesses."""
    data = k1_data(p)
    return data.group, data.witnesses


def k_groups_unital(p: EpPresentation):
    """The unitized algebra's (K0, K1); K1 is unchanged by unitization."""
    return k0_presentation(p, unital=True).group, k1_data(p).group
