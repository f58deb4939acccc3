"""Exact arithmetic for eventually periodic integer sequences on N.

An ``EpSeq`` stores a finite prefix and a nonempty repeating period; the
value at index ``i`` is ``prefix[i]`` for ``i < len(prefix)`` and
``period[(i - len(prefix)) % len(period)]`` afterwards.  Every instance is
kept in canonical form (minimal period length, then minimal prefix length),
so structural equality coincides with pointwise equality of the sequences.

These sequences carry all ring elements of the calculator: rows and columns
of a 0-1 matrix, delta functions, their products and integer combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from .errors import GuardExceeded

# Pointwise operations align both operands to the lcm of their period
# lengths; the guard turns a pathological blowup into an explicit error
# instead of a silent slowdown.
LCM_BOUND = 10 ** 6


def _lcm_guarded(a: int, b: int) -> int:
    out = a // gcd(a, b) * b
    if out > LCM_BOUND:
        raise GuardExceeded(
            f"aligned period length {out} exceeds the bound {LCM_BOUND}; "
            "presentation too large"
        )
    return out


def _minimal_period(period: Sequence[int]) -> list:
    length = len(period)
    for d in range(1, length + 1):
        if length % d == 0 and all(period[i] == period[i % d] for i in range(length)):
            return list(period[:d])
    return list(period)


class EpSeq:
    """Eventually periodic integer sequence, always stored canonically."""

    __slots__ = ("prefix", "period")

    def __init__(self, prefix: Iterable[int] = (), period: Iterable[int] = (0,)):
        pre = [int(x) for x in prefix]
        per = [int(x) for x in period]
        if not per:
            raise ValueError("period must be nonempty")
        per = _minimal_period(per)
        # Roll the prefix back while its last entry matches the incoming
        # period value at that index; rotating keeps the tail aligned.
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per.insert(0, per.pop())
        self.prefix: Tuple[int, ...] = tuple(pre)
        self.period: Tuple[int, ...] = tuple(per)

    def value(self, i: int) -> int:
        if i < 0:
            raise ValueError("index must be nonnegative")
        n = len(self.prefix)
        if i < n:
            return self.prefix[i]
        return self.period[(i - n) % len(self.period)]

    def values(self, count: int) -> list:
        """First ``count`` values, as a list."""
        return [self.value(i) for i in range(count)]

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.prefix and self.period == (0,)

    def is_finitely_supported(self) -> bool:
        return self.period == (0,)

    def is_zero_one(self) -> bool:
        return all(v in (0, 1) for v in self.prefix + self.period)

    # -- ring operations --------------------------------------------------

    def _pointwise(self, other: "EpSeq", op) -> "EpSeq":
        n = max(len(self.prefix), len(other.prefix))
        p = _lcm_guarded(len(self.period), len(other.period))
        prefix = [op(self.value(i), other.value(i)) for i in range(n)]
        period = [op(self.value(n + t), other.value(n + t)) for t in range(p)]
        return EpSeq(prefix, period)

    def __add__(self, other: "EpSeq") -> "EpSeq":
        if not isinstance(other, EpSeq):
            return NotImplemented
        return self._pointwise(other, lambda a, b: a + b)

    def __sub__(self, other: "EpSeq") -> "EpSeq":
        if not isinstance(other, EpSeq):
            return NotImplemented
        return self._pointwise(other, lambda a, b: a - b)

    def __neg__(self) -> "EpSeq":
        return EpSeq([-v for v in self.prefix], [-v for v in self.period])

    def __mul__(self, other):
        if isinstance(other, EpSeq):
            return self._pointwise(other, lambda a, b: a * b)
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, k: int) -> "EpSeq":
        return EpSeq([k * v for v in self.prefix], [k * v for v in self.period])

    # -- equality and rendering -------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EpSeq)
            and self.prefix == other.prefix
            and self.period == other.period
        )

    def __hash__(self) -> int:
        return hash((self.prefix, self.period))

    def render(self) -> str:
        """Textual form "prefix|period", e.g. "[1,0]|[0]"."""
        pre = ",".join(str(v) for v in self.prefix)
        per = ",".join(str(v) for v in self.period)
        return f"[{pre}]|[{per}]"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"EpSeq({self.render()})"


ZERO = EpSeq((), (0,))
ONE = EpSeq((), (1,))


def delta(i: int) -> EpSeq:
    """The indicator of the single index i."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    return EpSeq([0] * i + [1], [0])


def periodic(values: Iterable[int]) -> EpSeq:
    return EpSeq((), values)


def finitely_supported(values: Iterable[int]) -> EpSeq:
    return EpSeq(values, [0])


@dataclass(frozen=True)
class FiniteSupportData:
    finitely_supported: bool
    total_sum: Optional[int]
    support: Optional[tuple]


def finite_support_data(s: EpSeq) -> FiniteSupportData:
    """Support data of ``s``: sum and support list when finitely supported.

    A canonical sequence is finitely supported exactly when its period
    is [0], in which case the support sits inside the prefix.
    """
    if not s.is_finitely_supported():
        return FiniteSupportData(False, None, None)
    support = tuple(i for i, v in enumerate(s.prefix) if v != 0)
    return FiniteSupportData(True, sum(s.prefix), support)


def masked_sum(f: EpSeq, mask: EpSeq) -> int:
    """Sum of f over the indices where the 0-1 sequence ``mask`` is 1."""
    data = finite_support_data(f)
    if not data.finitely_supported:
        raise ValueError("masked_sum requires a finitely supported sequence")
    if not mask.is_zero_one():
        raise ValueError("mask must be 0-1 valued")
    return sum(f.value(i) for i in data.support if mask.value(i) == 1)


def common_alignment(seqs: Sequence[EpSeq]) -> tuple:
    """Shared (prefix length, period length) aligning all of ``seqs``."""
    n = max((len(s.prefix) for s in seqs), default=0)
    p = 1
    for s in seqs:
        p = _lcm_guarded(p, len(s.period))
    return n, p


def combination(coeffs: Sequence[int], seqs: Sequence[EpSeq]) -> EpSeq:
    """Integer linear combination sum(coeffs[k] * seqs[k])."""
    if len(coeffs) != len(seqs):
        raise ValueError("coefficient/sequence length mismatch")
    out = ZERO
    for c, s in zip(coeffs, seqs):
        if c:
            out = out + c * s
    return out
