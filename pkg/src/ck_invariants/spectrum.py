"""Spectrum description: accumulation columns at infinity and unitality.

The closure of the column graph of an infinite 0-1 matrix adds one point
per accumulation column.  For eventually periodic presentations, columns
past every pattern prefix depend on the column index only through its
residue modulo the common pattern period, so each residue column is
realized infinitely often and those are exactly the accumulation points.

The algebra is unital exactly when the identically zero column is not
among them; equivalently, when the product of (1 - pattern) over all
patterns is finitely supported.  Both criteria are computed and compared;
disagreement is a bug, never a data condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .epseq import ONE, EpSeq, finite_support_data
from .errors import InternalInvariantError
from .presentation import EpPresentation, FiniteMatrix, MatrixPresentation


@dataclass(frozen=True)
class SpectrumDescription:
    """Boundary data of the column-graph compactification.

    ``accumulation_columns`` lists the distinct nonzero columns realized
    infinitely often; ``zero_at_infinity`` records whether the zero column
    is an accumulation point, which happens exactly when the algebra is
    not unital.
    """

    accumulation_columns: tuple
    zero_at_infinity: bool
    unital: bool


def residue_columns(p: EpPresentation) -> list:
    """Deduplicated columns at each residue past every pattern prefix."""
    n, period = p.pattern_alignment()
    seen = []
    for j in range(n, n + period):
        col = p.column(j)
        if col not in seen:
            seen.append(col)
    return seen


def accumulation_columns(p: MatrixPresentation) -> tuple:
    """The distinct nonzero accumulation columns, in residue order."""
    if isinstance(p, FiniteMatrix):
        return ()  # a finite index set is already compact
    return tuple(col for col in residue_columns(p) if not col.is_zero())


def is_unital(p: MatrixPresentation) -> bool:
    """Product criterion: prod(1 - pattern) over all patterns is finitely
    supported exactly when the algebra has a unit."""
    if isinstance(p, FiniteMatrix):
        return True
    prod = ONE
    for pat in p.patterns:
        prod = prod * (ONE - pat)
    return finite_support_data(prod).finitely_supported


def gamma_description(p: MatrixPresentation) -> SpectrumDescription:
    """Full spectrum description with the two unitality criteria cross-checked."""
    if isinstance(p, FiniteMatrix):
        return SpectrumDescription((), False, True)
    residues = residue_columns(p)
    zero_at_infinity = any(col.is_zero() for col in residues)
    unital_from_product = is_unital(p)
    if unital_from_product != (not zero_at_infinity):
        raise InternalInvariantError(
            "unitality criteria disagree: product criterion says "
            f"{unital_from_product}, zero accumulation column says "
            f"{not zero_at_infinity}"
        )
    return SpectrumDescription(
        tuple(col for col in residues if not col.is_zero()),
        zero_at_infinity,
        unital_from_product,
    )
