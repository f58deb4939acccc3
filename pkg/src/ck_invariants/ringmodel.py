"""Finitely presented model of the function ring generated by the rows.

The additive group of that ring is spanned by the delta functions together
with all products of distinct row patterns (products of 0-1 sequences are
idempotent, so products over a subset of pattern classes suffice).  The
only relations are "tail collapses": an integer combination of the product
generators that is finitely supported equals the corresponding finite sum
of deltas.  The lattice of such combinations is the integer kernel of the
matrix of generator tails over one common period, which is exactly the
presentation data the K-theory computation consumes.

Generators are indexed by nonempty subsets of pattern classes in ascending
bitmask order, with the optional unit generator last; that fixed order is
the coordinate convention for all emitted K0 data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .epseq import ONE, EpSeq, combination, common_alignment, finite_support_data, masked_sum
from .errors import InternalInvariantError
from .intlinalg import IntMatrix, kernel_basis
from .presentation import EpPresentation


@dataclass(frozen=True)
class ProductGenerators:
    """Products of row patterns over nonempty class subsets, unit optional.

    ``subsets[g]`` lists the class indices multiplied into generator g;
    the empty tuple marks the unit (the empty product).
    """

    subsets: tuple  # tuple of tuples of class indices; () = unit
    labels: tuple  # parallel human-readable labels
    seqs: tuple  # parallel 0-1 EpSeq values
    unital: bool

    def __len__(self) -> int:
        return len(self.seqs)

    def singleton_index(self, k: int) -> int:
        """Coordinate of the generator for the single class k."""
        return (1 << k) - 1


def subset_label(classes: Sequence[int]) -> str:
    if not classes:
        return "u"
    return "q{" + ",".join(str(k) for k in classes) + "}"


def product_generators(p: EpPresentation, unital: bool) -> ProductGenerators:
    """All 2^m - 1 pattern products in ascending bitmask order.

    With ``unital`` set, the constant-one unit generator is appended last.
    """
    m = p.num_classes
    subsets = []
    seqs = []
    for mask in range(1, 1 << m):
        classes = tuple(k for k in range(m) if mask & (1 << k))
        prod = p.patterns[classes[0]]
        for k in classes[1:]:
            prod = prod * p.patterns[k]
        subsets.append(classes)
        seqs.append(prod)
    if unital:
        subsets.append(())
        seqs.append(ONE)
    labels = tuple(subset_label(s) for s in subsets)
    return ProductGenerators(tuple(subsets), labels, tuple(seqs), unital)


@dataclass(frozen=True)
class TailLattice:
    """Integer lattice of generator combinations with vanishing tail.

    ``basis`` has one column per lattice basis vector, indexed like the
    generators it was computed from; the spanned lattice is saturated.
    """

    basis: IntMatrix
    alignment: tuple  # (common prefix length, common period length)

    @property
    def rank(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list:
        return [self.basis.column(j) for j in range(self.basis.cols)]


def tail_matrix(seqs: Sequence[EpSeq]) -> Tuple[IntMatrix, tuple]:
    """Matrix of sequence values over one shared period past all prefixes."""
    n, p = common_alignment(seqs)
    rows = [[s.value(n + t) for s in seqs] for t in range(p)]
    return IntMatrix.from_rows(rows, cols=len(seqs)), (n, p)


def tail_lattice(seqs: Sequence[EpSeq]) -> TailLattice:
    """Saturated basis of {a : sum(a[g] * seqs[g]) is finitely supported}.

    A combination is finitely supported exactly when its values vanish on
    one full period window past every prefix, which is a finite integer
    kernel condition.
    """
    matrix, alignment = tail_matrix(seqs)
    return TailLattice(kernel_basis(matrix), alignment)


def correction_and_class_sums(
    generators: ProductGenerators,
    coeffs: Sequence[int],
    indicators: Sequence[EpSeq],
) -> Tuple[EpSeq, tuple]:
    """Finite correction of a tail-lattice vector and its per-class sums.

    For a lattice vector ``coeffs`` the combination h = sum(coeffs[g] * q_g)
    is finitely supported; returns h together with the vector of sums of h
    over each pattern class.
    """
    h = combination(list(coeffs), list(generators.seqs))
    if not finite_support_data(h).finitely_supported:
        raise InternalInvariantError(
            "tail-lattice vector produced a combination with nonzero tail"
        )
    sigma = tuple(masked_sum(h, chi) for chi in indicators)
    return h, sigma
