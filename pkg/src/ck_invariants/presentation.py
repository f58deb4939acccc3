"""Input model for 0-1 matrices.

Two kinds of input are accepted: a finite square 0-1 matrix, and an
infinite matrix given by an eventually periodic presentation -- a list of
distinct 0-1 row patterns together with an eventually periodic class map
assigning a pattern to every row index.  Rows may never be identically
zero; presentations must be reduced (patterns pairwise distinct, every
pattern used).

The JSON document format is strict: unknown fields are rejected and
validation failures carry the offending location.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .epseq import EpSeq, common_alignment
from .errors import GuardExceeded, InvalidPresentation
from .intlinalg import IntMatrix

# More patterns than this makes the 2^m product-generator stage of the
# K0 computation blow up; refuse early with a clear error.
MAX_PATTERNS = 20

_ZERO_ROW_MESSAGE = "no identically zero rows are allowed"


@dataclass(frozen=True)
class FiniteMatrix:
    """Finite square 0-1 matrix with no identically zero rows."""

    entries: tuple  # tuple of row tuples

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise InvalidPresentation("matrix: must have at least one row")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise InvalidPresentation(f"matrix[{i}]: expected {n} entries, got {len(row)}")
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise InvalidPresentation(f"matrix[{i}][{j}]: entries must be 0 or 1")
            if not any(row):
                raise InvalidPresentation(f"matrix[{i}]: {_ZERO_ROW_MESSAGE}")

    @property
    def size(self) -> int:
        return len(self.entries)

    def value(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def row(self, i: int) -> EpSeq:
        return EpSeq(self.entries[i], [0])

    def column(self, j: int) -> EpSeq:
        return EpSeq([self.entries[i][j] for i in range(self.size)], [0])

    def patterns(self) -> tuple:
        """Distinct rows as sequences, in order of first occurrence."""
        out = []
        for i in range(self.size):
            r = self.row(i)
            if r not in out:
                out.append(r)
        return tuple(out)

    def class_of(self, i: int) -> int:
        return self.patterns().index(self.row(i))

    def representatives(self) -> tuple:
        pats = self.patterns()
        reps = []
        for k in range(len(pats)):
            reps.append(next(i for i in range(self.size) if self.row(i) == pats[k]))
        return tuple(reps)


@dataclass(frozen=True)
class EpPresentation:
    """Infinite 0-1 matrix: distinct row patterns plus a class map.

    ``patterns[classmap(i)]`` is row i.  The presentation is reduced:
    patterns are pairwise distinct and every pattern index occurs in the
    class map.
    """

    patterns: tuple  # tuple of 0-1 EpSeq
    classmap: EpSeq

    def __post_init__(self) -> None:
        m = len(self.patterns)
        if m == 0:
            raise InvalidPresentation("patterns: must contain at least one pattern")
        if m > MAX_PATTERNS:
            raise GuardExceeded(
                f"patterns: {m} patterns exceed the limit of {MAX_PATTERNS} "
                "(product generators grow as 2^m)"
            )
        for k, pat in enumerate(self.patterns):
            if not pat.is_zero_one():
                raise InvalidPresentation(f"patterns[{k}]: patterns must be 0-1 valued")
            if pat.is_zero():
                raise InvalidPresentation(f"patterns[{k}]: {_ZERO_ROW_MESSAGE}")
            for prev in range(k):
                if self.patterns[prev] == pat:
                    raise InvalidPresentation(f"patterns[{k}]: duplicate of patterns[{prev}]")
        used = set(self.classmap.prefix) | set(self.classmap.period)
        for v in sorted(used):
            if not 0 <= v < m:
                raise InvalidPresentation(
                    f"classmap: value {v} out of range for {m} patterns"
                )
        for k in range(m):
            if k not in used:
                raise InvalidPresentation(f"classmap: pattern {k} never used")

    @property
    def num_classes(self) -> int:
        return len(self.patterns)

    def row(self, i: int) -> EpSeq:
        return self.patterns[self.classmap.value(i)]

    def column(self, j: int) -> EpSeq:
        """Column j as a sequence in the row index.

        Inherits the class map's prefix/period structure: the pattern of
        row i is eventually periodic in i, and each pattern contributes a
        constant at the fixed column j.
        """
        n = len(self.classmap.prefix)
        p = len(self.classmap.period)
        prefix = [self.patterns[self.classmap.value(i)].value(j) for i in range(n)]
        period = [self.patterns[self.classmap.value(n + t)].value(j) for t in range(p)]
        return EpSeq(prefix, period)

    def class_indicator(self, k: int) -> EpSeq:
        return EpSeq(
            [1 if v == k else 0 for v in self.classmap.prefix],
            [1 if v == k else 0 for v in self.classmap.period],
        )

    def class_indicators(self) -> tuple:
        return tuple(self.class_indicator(k) for k in range(self.num_classes))

    def representatives(self) -> tuple:
        """First row index of each pattern class."""
        horizon = len(self.classmap.prefix) + len(self.classmap.period)
        reps = []
        for k in range(self.num_classes):
            reps.append(next(i for i in range(horizon) if self.classmap.value(i) == k))
        return tuple(reps)

    def pattern_alignment(self) -> tuple:
        """Common (prefix length, period length) for all patterns."""
        return common_alignment(self.patterns)


MatrixPresentation = Union[FiniteMatrix, EpPresentation]


@dataclass(frozen=True)
class Classification:
    is_edge_matrix: bool
    is_row_finite: bool


def classify(p: MatrixPresentation) -> Classification:
    """Edge-matrix and row-finiteness flags.

    A matrix is an edge matrix when its rows are pairwise equal or
    orthogonal, i.e. when distinct patterns multiply to zero.
    """
    pats = p.patterns() if isinstance(p, FiniteMatrix) else p.patterns
    edge = all(
        (pats[a] * pats[b]).is_zero()
        for a in range(len(pats))
        for b in range(a + 1, len(pats))
    )
    row_finite = all(pat.is_finitely_supported() for pat in pats)
    return Classification(is_edge_matrix=edge, is_row_finite=row_finite)


def truncate(p: MatrixPresentation, n: int) -> IntMatrix:
    """Top-left n-by-n corner of the matrix.

    Truncations feed the brute-force oracle and may legitimately contain
    zero rows, so the result is a plain matrix rather than a validated
    presentation.  Finite inputs are clipped at their own size.
    """
    if n < 1:
        raise ValueError("truncation size must be at least 1")
    if isinstance(p, FiniteMatrix):
        n = min(n, p.size)
        return IntMatrix.from_rows([list(p.entries[i][:n]) for i in range(n)], cols=n)
    return IntMatrix.from_rows(
        [[p.row(i).value(j) for j in range(n)] for i in range(n)], cols=n
    )


# -- JSON document parsing --------------------------------------------------


def _require_mapping(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise InvalidPresentation(f"{where}: expected an object")
    return obj


def _check_fields(obj: dict, allowed: Sequence[str], where: str) -> None:
    for key in obj:
        if key not in allowed:
            raise InvalidPresentation(f"{where}: unknown field {key!r}")
    for key in allowed:
        if key not in obj:
            raise InvalidPresentation(f"{where}: missing field {key!r}")


def _int_list(obj, where: str, allow_empty: bool = True) -> list:
    if not isinstance(obj, list):
        raise InvalidPresentation(f"{where}: must be a list of integers")
    out = []
    for k, v in enumerate(obj):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidPresentation(f"{where}[{k}]: must be an integer")
        out.append(v)
    if not allow_empty and not out:
        raise InvalidPresentation(f"{where}: must be nonempty")
    return out


def _parse_epseq(obj, where: str) -> EpSeq:
    data = _require_mapping(obj, where)
    _check_fields(data, ("prefix", "period"), where)
    prefix = _int_list(data["prefix"], f"{where}.prefix")
    period = _int_list(data["period"], f"{where}.period", allow_empty=False)
    return EpSeq(prefix, period)


def _reduce_presentation(patterns: list, classmap: EpSeq) -> tuple:
    """Merge duplicate patterns and drop unused ones, remapping the class map."""
    canonical = []
    remap = []
    for pat in patterns:
        if pat in canonical:
            remap.append(canonical.index(pat))
        else:
            remap.append(len(canonical))
            canonical.append(pat)

    def mapped(v: int) -> int:
        if not 0 <= v < len(remap):
            raise InvalidPresentation(
                f"classmap: value {v} out of range for {len(remap)} patterns"
            )
        return remap[v]

    cm = EpSeq([mapped(v) for v in classmap.prefix], [mapped(v) for v in classmap.period])
    used = sorted(set(cm.prefix) | set(cm.period))
    keep = [canonical[k] for k in used]
    reindex = {old: new for new, old in enumerate(used)}
    cm = EpSeq([reindex[v] for v in cm.prefix], [reindex[v] for v in cm.period])
    return keep, cm


def parse_document(data, canonicalize: bool = False) -> MatrixPresentation:
    """Parse and validate an input document (already JSON-decoded).

    With ``canonicalize`` set, a non-reduced eventually periodic
    presentation (duplicate or unused patterns) is reduced instead of
    rejected.
    """
    doc = _require_mapping(data, "document")
    fmt = doc.get("format")
    if fmt == "finite":
        _check_fields(doc, ("format", "n", "matrix"), "document")
        n = doc["n"]
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InvalidPresentation("n: must be a positive integer")
        matrix = doc["matrix"]
        if not isinstance(matrix, list) or len(matrix) != n:
            raise InvalidPresentation(f"matrix: expected {n} rows")
        rows = []
        for i, row in enumerate(matrix):
            entries = _int_list(row, f"matrix[{i}]")
            if len(entries) != n:
                raise InvalidPresentation(f"matrix[{i}]: expected {n} entries, got {len(entries)}")
            rows.append(tuple(entries))
        return FiniteMatrix(tuple(rows))
    if fmt == "ep":
        _check_fields(doc, ("format", "patterns", "classmap"), "document")
        if not isinstance(doc["patterns"], list) or not doc["patterns"]:
            raise InvalidPresentation("patterns: must be a nonempty list")
        patterns = [
            _parse_epseq(item, f"patterns[{k}]") for k, item in enumerate(doc["patterns"])
        ]
        classmap = _parse_epseq(doc["classmap"], "classmap")
        if canonicalize:
            patterns, classmap = _reduce_presentation(patterns, classmap)
        return EpPresentation(tuple(patterns), classmap)
    raise InvalidPresentation("format: must be 'finite' or 'ep'")
