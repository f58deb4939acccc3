"""Request/response models and computation handlers.

This is the single entry layer for both front ends: the HTTP API binds
these handlers to routes, and the CLI calls them in process.  Handlers
take a JSON-decoded document plus options and return pydantic report
models; all validation and guard errors surface as the package exception
types, which the front ends map to exit codes or HTTP statuses.
"""

from __future__ import annotations

from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .ckrelations import enumerate_relation_instances, verify_relation_iv
from .intlinalg import FgAbelianGroup
from .ktheory import KTheoryResult, k_groups
from .oracle import slab_comparison, verify_k0_relations
from .presentation import EpPresentation, FiniteMatrix, parse_document
from .spectrum import gamma_description


# -- document schema ---------------------------------------------------------


class SequenceDoc(BaseModel):
    model_config = ConfigDict(extra="forbid")

    prefix: List[int]
    period: List[int]


class FiniteDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format: Literal["finite"]
    n: int
    matrix: List[List[int]]


class EpDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format: Literal["ep"]
    patterns: List[SequenceDoc]
    classmap: SequenceDoc


DocumentModel = Annotated[Union[FiniteDocument, EpDocument], Field(discriminator="format")]


# -- report models ------------------------------------------------------------


class GroupModel(BaseModel):
    """Finitely generated abelian group: free rank plus invariant factors."""

    rank: int
    torsion: List[int]

    @classmethod
    def of(cls, g: FgAbelianGroup) -> "GroupModel":
        return cls(rank=g.rank, torsion=list(g.torsion))

    def describe(self) -> str:
        return FgAbelianGroup(self.rank, tuple(self.torsion)).describe()


class KGroupsReport(BaseModel):
    k0: GroupModel
    k1: GroupModel
    k0_unital: Optional[GroupModel] = None
    k1_unital: Optional[GroupModel] = None
    unital: bool
    accumulation_columns: List[str]
    witnesses: List[str]


class SpectrumReport(BaseModel):
    accumulation_columns: List[str]
    zero_at_infinity: bool
    unital: bool


class RelationInstanceModel(BaseModel):
    x: List[int]
    y: List[int]
    support: List[int]
    holds: bool


class RelationsReport(BaseModel):
    instances: List[RelationInstanceModel]
    all_hold: bool


class OracleReport(BaseModel):
    slab_sizes: List[int]
    slab_ranks: List[int]
    k1_matches: bool
    k0_relations_verified: bool


class ValidateReport(BaseModel):
    valid: bool
    format: str
    n: Optional[int] = None
    num_patterns: Optional[int] = None


# -- handlers -----------------------------------------------------------------


def compute_kgroups(document: dict, unital: bool = True, canonicalize: bool = False) -> KGroupsReport:
    p = parse_document(document, canonicalize=canonicalize)
    result: KTheoryResult = k_groups(p)
    spectrum = gamma_description(p)
    report = KGroupsReport(
        k0=GroupModel.of(result.k0),
        k1=GroupModel.of(result.k1),
        unital=spectrum.unital,
        accumulation_columns=[c.render() for c in spectrum.accumulation_columns],
        witnesses=[w.render() for w in result.k1_witnesses],
    )
    if unital:
        report.k0_unital = GroupModel.of(result.k0_unital)
        report.k1_unital = GroupModel.of(result.k1_unital)
    return report


def compute_spectrum(document: dict, canonicalize: bool = False) -> SpectrumReport:
    p = parse_document(document, canonicalize=canonicalize)
    spectrum = gamma_description(p)
    return SpectrumReport(
        accumulation_columns=[c.render() for c in spectrum.accumulation_columns],
        zero_at_infinity=spectrum.zero_at_infinity,
        unital=spectrum.unital,
    )


def compute_relations(
    document: dict, size_bound: Optional[int] = None, canonicalize: bool = False
) -> RelationsReport:
    p = parse_document(document, canonicalize=canonicalize)
    instances = []
    for xs, ys in enumerate_relation_instances(p, size_bound):
        check = verify_relation_iv(p, xs, ys)
        instances.append(
            RelationInstanceModel(
                x=list(xs), y=list(ys), support=list(check.support), holds=bool(check.holds)
            )
        )
    return RelationsReport(
        instances=instances,
        all_hold=all(item.holds for item in instances),
    )


def compute_oracle(
    document: dict, slabs: Optional[List[int]] = None, canonicalize: bool = False
) -> OracleReport:
    p = parse_document(document, canonicalize=canonicalize)
    comparison = slab_comparison(p, slabs)
    return OracleReport(
        slab_sizes=list(comparison.sizes),
        slab_ranks=list(comparison.ranks),
        k1_matches=comparison.matches,
        k0_relations_verified=verify_k0_relations(p),
    )


def compute_validate(document: dict, canonicalize: bool = False) -> ValidateReport:
    p = parse_document(document, canonicalize=canonicalize)
    if isinstance(p, FiniteMatrix):
        return ValidateReport(valid=True, format="finite", n=p.size)
    assert isinstance(p, EpPresentation)
    return ValidateReport(valid=True, format="ep", num_patterns=p.num_classes)
