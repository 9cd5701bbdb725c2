"""Scalar WZW data for SU(N)_K: root of unity, quantum integers, Casimirs,
conformal weights, and central charges.

All values are evaluated numerically at the root of unity q = exp(2*pi*i/(N+K)).
The quadratic Casimir is normalized as Q = 2*C2 with C2(fund SU(N)) =
(N^2-1)/(2N), so that h = Q/(2(K+N)) reproduces the familiar SU(2) spectrum
h_j = j(j+1)/(K+2).
"""

from __future__ import annotations

import cmath
import math

from .errors import InvalidRepresentationError
from .young import TheoryParams, YoungDiagram, box_count, transpose

__all__ = [
    "root_of_unity",
    "quantum_integer",
    "casimir",
    "conformal_weight",
    "weight_duality_sum",
    "central_charge",
    "minimal_central_charge",
    "is_integrable",
    "twice_spin_of",
]


def root_of_unity(params: TheoryParams) -> complex:
    """q = exp(2*pi*i/(N+K))."""
    return cmath.exp(2j * math.pi / params.height)


def quantum_integer(x: float, params: TheoryParams) -> float:
    """[x] = sin(pi*x/(N+K)) / sin(pi/(N+K))."""
    h = params.height
    return math.sin(math.pi * x / h) / math.sin(math.pi / h)


def casimir(d: YoungDiagram, n: int) -> float:
    """Q = 2*C2 for the SU(n) representation with reduced diagram ``d``."""
    if d.num_rows >= n and d.rows:
        raise InvalidRepresentationError(
            f"{d} is not reduced for SU({n}); reduce before computing the Casimir"
        )
    r = box_count(d)
    s = sum(row * (row + 1 - 2 * (i + 1)) for i, row in enumerate(d.rows))
    return r * n + s - r * r / n


def conformal_weight(d: YoungDiagram, params: TheoryParams) -> float:
    """h = Q/(2(K+g)) with dual Coxeter number g = N."""
    if not is_integrable(d, params):
        raise InvalidRepresentationError(f"{d} is not integrable in {params}")
    return casimir(d, params.n) / (2.0 * (params.k + params.n))


def weight_duality_sum(
    d: YoungDiagram, params: TheoryParams
) -> tuple[float, float, float]:
    """Both sides of the conformal-weight duality sum.

    Returns ``(lhs, rhs_paper, rhs_corrected)`` where lhs = h(a) + h~(a~),
    rhs_paper = r/2 * (1 - r/(2NK)) verbatim, and rhs_corrected =
    r/2 - r^2/(2NK).  Direct evaluation at (N,K) = (2,2), r = 1 shows only the
    corrected form can be right; both are reported.
    """
    from .young import reduce as reduce_diagram

    lhs = conformal_weight(d, params)
    dual = reduce_diagram(transpose(d), params.k)
    lhs += conformal_weight(dual, params.dual())
    r = box_count(d)
    nk = params.n * params.k
    rhs_paper = 0.5 * r * (1.0 - r / (2.0 * nk))
    rhs_corrected = 0.5 * r - r * r / (2.0 * nk)
    return lhs, rhs_paper, rhs_corrected


def central_charge(params: TheoryParams) -> float:
    """c = (N^2-1)K/(N+K)."""
    return (params.n**2 - 1) * params.k / params.height


def minimal_central_charge(k: int) -> float:
    """c = 1 - 6/((K+2)(K+3)), the unitary minimal-model series."""
    return 1.0 - 6.0 / ((k + 2) * (k + 3))


def is_integrable(d: YoungDiagram, params: TheoryParams) -> bool:
    """Reduced diagram with fewer than N rows and first row at most K."""
    return d.num_rows < params.n and d.first_row <= params.k


def twice_spin_of(d: YoungDiagram) -> int:
    """Box count read as twice-spin for SU(2) single-row labels."""
    if d.num_rows > 1:
        raise InvalidRepresentationError(f"{d} is not an SU(2) label")
    return d.first_row
