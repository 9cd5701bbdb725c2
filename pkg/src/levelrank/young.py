"""Young diagram arithmetic for SU(N)_K representation labels.

Diagrams are stored as non-increasing tuples of positive row lengths; the
empty tuple is the identity representation.  Diagrams are never auto-reduced:
column removal is always an explicit :func:`reduce` call, because the
cominimal-shift box-count diagnostic refers to pre-reduction row lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    InconsistentFusionTripleError,
    InvalidRepresentationError,
    ShapeViolationError,
)

__all__ = [
    "YoungDiagram",
    "TheoryParams",
    "transpose",
    "reduce",
    "box_count",
    "delta",
    "sigma_delta",
    "sigma_delta_box_check",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """A partition-shaped representation label.

    ``rows`` is a non-increasing tuple of positive integers; trailing zeros
    are dropped on construction.
    """

    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows if r != 0)
        if any(r < 0 for r in rows):
            raise InvalidRepresentationError(f"negative row length in {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise InvalidRepresentationError(f"rows not non-increasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "YoungDiagram":
        return cls(tuple(rows))

    @classmethod
    def from_twice_spin(cls, twice_j: int) -> "YoungDiagram":
        """SU(2) color: spin j stored as a single row of 2j boxes."""
        if twice_j < 0:
            raise InvalidRepresentationError(f"negative twice-spin {twice_j}")
        return cls((twice_j,)) if twice_j else cls(())

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def first_row(self) -> int:
        return self.rows[0] if self.rows else 0

    def to_json(self) -> list[int]:
        return list(self.rows)

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self.rows) + "]"


@dataclass(frozen=True, order=True)
class TheoryParams:
    """The pair (N, K) fixing the theory SU(N)_K."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise InvalidRepresentationError(
                f"need N >= 1 and K >= 1, got ({self.n}, {self.k})"
            )

    @property
    def height(self) -> int:
        """N + K, the denominator of the root of unity."""
        return self.n + self.k

    def dual(self) -> "TheoryParams":
        return TheoryParams(self.k, self.n)

    def __str__(self) -> str:
        return f"SU({self.n})_{self.k}"


def transpose(d: YoungDiagram) -> YoungDiagram:
    """Conjugate partition: column lengths become row lengths."""
    if not d.rows:
        return YoungDiagram(())
    cols = tuple(
        sum(1 for r in d.rows if r > c) for c in range(d.rows[0])
    )
    return YoungDiagram(cols)


def reduce(d: YoungDiagram, n: int) -> YoungDiagram:
    """Delete all full columns of height ``n``.

    A diagram with more than ``n`` rows has a column taller than ``n`` and is
    not an SU(n) representation label at all.
    """
    if n < 1:
        raise InvalidRepresentationError(f"rank parameter must be positive, got {n}")
    if d.num_rows > n:
        raise InvalidRepresentationError(
            f"{d} has a column taller than {n}; not an SU({n}) label"
        )
    if d.num_rows < n:
        return d
    cut = d.rows[-1]
    return YoungDiagram(tuple(r - cut for r in d.rows))


def box_count(d: YoungDiagram) -> int:
    return sum(d.rows)


def delta(a: YoungDiagram, b: YoungDiagram, c: YoungDiagram, n: int) -> int:
    """Number of columns removed when reducing the fusion product a x b -> c."""
    diff = box_count(a) + box_count(b) - box_count(c)
    if diff % n != 0:
        raise InconsistentFusionTripleError(
            f"r(a)+r(b)-r(c) = {diff} not divisible by N = {n}"
        )
    dlt = diff // n
    if dlt < 0:
        raise InconsistentFusionTripleError(
            f"negative column count {dlt} for triple ({a}, {b}, {c})"
        )
    return dlt


def _prepend_row(d: YoungDiagram, length: int) -> YoungDiagram:
    if d.rows and length < d.rows[0]:
        raise ShapeViolationError(
            f"cannot prepend row of length {length} above first row {d.rows[0]}"
        )
    return YoungDiagram((length,) + d.rows)


def sigma_delta(c: YoungDiagram, params: TheoryParams, dlt: int) -> YoungDiagram:
    """Cominimal image of the transposed diagram in the dual theory SU(K)_N.

    Transpose, reduce modulo K, then ``dlt`` times: prepend a row of N boxes
    and reduce modulo K again.  ``dlt`` counts the total number of row
    prepends, matching ``dlt`` applications of the outer-automorphism shift.
    """
    if dlt < 0:
        raise InconsistentFusionTripleError(f"negative shift count {dlt}")
    out = reduce(transpose(c), params.k)
    for _ in range(dlt):
        out = reduce(_prepend_row(out, params.n), params.k)
    return out


def sigma_delta_box_check(
    c: YoungDiagram, params: TheoryParams, dlt: int
) -> tuple[Optional[int], int, Optional[bool]]:
    """Diagnostic for the predicted box count of the cominimal image.

    The prediction is r(c) + N*dlt - K*l_i where l_i is row (K - dlt) of the
    transposed, unreduced diagram (rows past the end count as zero).  Returns
    ``(expected, actual, ok)``; ``expected`` and ``ok`` are None when
    K - dlt < 1, where the row index is meaningless.  Mismatches are reported,
    never silently accepted and never fatal.
    """
    actual = box_count(sigma_delta(c, params, dlt))
    idx = params.k - dlt
    if idx < 1:
        return None, actual, None
    tilde_rows = transpose(c).rows
    l_i = tilde_rows[idx - 1] if idx <= len(tilde_rows) else 0
    expected = box_count(c) + params.n * dlt - params.k * l_i
    return expected, actual, expected == actual
