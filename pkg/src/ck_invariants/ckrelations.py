"""Generalized Cuntz-Krieger relation checking in the commutative model.

Relation (iv) states that whenever the coefficient function
j -> prod_{x in X} A(x,j) * prod_{y in Y} (1 - A(y,j)) is finitely
supported for finite index sets X and Y, the corresponding product of
range projections equals the finite sum of deltas it supports.  In the
function model both sides are exact sequences, so the check reduces to
sequence arithmetic; it must hold for every applicable pair, and a failure
flags a bug in the sequence algebra rather than a property of the matrix.

Coefficients depend on X and Y only through the pattern classes of their
elements (0-1 sequences are multiplicatively idempotent), so the instance
search ranges over one representative row per class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .epseq import ONE, ZERO, EpSeq, delta, finite_support_data
from .errors import GuardExceeded
from .presentation import EpPresentation, FiniteMatrix, MatrixPresentation

# The representative search is exponential in the class count; relation
# instances beyond this many classes are not enumerable at desk scale.
MAX_ENUM_CLASSES = 10


def _unit(p: MatrixPresentation) -> EpSeq:
    """Multiplicative unit of the function model.

    On a finite index set the constant one function is the indicator of
    the whole (finite) window, not the constant-one sequence.
    """
    if isinstance(p, FiniteMatrix):
        return EpSeq([1] * p.size, [0])
    return ONE


def _row(p: MatrixPresentation, i: int) -> EpSeq:
    return p.row(i)


def ck_coefficient(p: MatrixPresentation, xs: Iterable[int], ys: Iterable[int]) -> EpSeq:
    """The coefficient sequence j -> prod_X A(x,j) * prod_Y (1 - A(y,j))."""
    unit = _unit(p)
    out = unit
    for x in xs:
        out = out * _row(p, x)
    for y in ys:
        out = out * (unit - _row(p, y))
    return out


@dataclass(frozen=True)
class RelationCheck:
    applicable: bool
    holds: Optional[bool]
    support: Optional[tuple]


def verify_relation_iv(p: MatrixPresentation, xs: Iterable[int], ys: Iterable[int]) -> RelationCheck:
    """Check one relation (iv) instance.

    Applicable means the coefficient is finitely supported; in that case
    the product of rows and complements must equal the sum of deltas over
    the support, computed along an independent route through the support
    list.
    """
    coeff = ck_coefficient(p, xs, ys)
    data = finite_support_data(coeff)
    if not data.finitely_supported:
        return RelationCheck(False, None, None)
    rhs = ZERO
    for j in data.support:
        rhs = rhs + coeff.value(j) * delta(j)
    return RelationCheck(True, coeff == rhs, data.support)


def enumerate_relation_instances(
    p: MatrixPresentation, size_bound: Optional[int] = None
) -> list:
    """All applicable (X, Y) pairs over class representatives.

    Pairs are returned as (sorted X tuple, sorted Y tuple) with
    |X| + |Y| <= size_bound (default: twice the class count, i.e. no
    effective bound on representative subsets).
    """
    reps = p.representatives()
    m = len(reps)
    if m > MAX_ENUM_CLASSES:
        raise GuardExceeded(
            f"relation instance search over {m} classes exceeds the "
            f"limit of {MAX_ENUM_CLASSES}"
        )
    if size_bound is None:
        size_bound = 2 * m
    out = []
    for xmask in range(1 << m):
        xs = tuple(reps[k] for k in range(m) if xmask & (1 << k))
        if len(xs) > size_bound:
            continue
        for ymask in range(1 << m):
            ys = tuple(reps[k] for k in range(m) if ymask & (1 << k))
            if len(xs) + len(ys) > size_bound:
                continue
            if finite_support_data(ck_coefficient(p, xs, ys)).finitely_supported:
                out.append((xs, ys))
    return out


def verify_subring_lemma(vectors: Sequence[Sequence[int]]) -> bool:
    """Brute-force check that 0-1 vectors generate the expected ring.

    The additive group generated by all products of the given 0-1 vectors
    must equal the group of integer vectors that are constant on the atoms
    of the generated set algebra and vanish off the union of supports.
    Desk-scale only: at most 6 vectors over at most 12 indices.
    """
    vectors = [list(v) for v in vectors]
    if len(vectors) > 6:
        raise GuardExceeded("subring check limited to 6 vectors")
    if not vectors:
        return True
    width = len(vectors[0])
    if width > 12:
        raise GuardExceeded("subring check limited to 12 indices")
    for v in vectors:
        if len(v) != width:
            raise ValueError("vectors must share one index set")
        if any(x not in (0, 1) for x in v):
            raise ValueError("vectors must be 0-1 valued")

    products = []
    for size in range(1, len(vectors) + 1):
        for chosen in combinations(range(len(vectors)), size):
            prod = [1] * width
            for k in chosen:
                prod = [a * b for a, b in zip(prod, vectors[k])]
            products.append(prod)

    atoms = {}
    for i in range(width):
        signature = tuple(v[i] for v in vectors)
        if any(signature):
            atoms.setdefault(signature, []).append(i)
    indicators = [
        [1 if i in idxs else 0 for i in range(width)] for idxs in atoms.values()
    ]

    from .intlinalg import IntMatrix, lattices_equal

    generated = IntMatrix.from_columns([list(v) for v in products], rows=width)
    target = IntMatrix.from_columns(indicators, rows=width)
    return lattices_equal(generated, target)
