"""Degrees of Segre classes via residual degrees.

For a k-dimensional scheme X = V(I) in P^n and m the maximum generator
degree, d random degree-m elements of I cut out X together with a residual
scheme of pure codimension d, for d = n-k, ..., n.  The degrees of those
residuals determine the Segre class degrees through a unit upper-triangular
linear system:

    deg s_p = m^d - deg R_d - sum_{i<p} C(d, p-i) m^(p-i) deg s_i,
    p = d - (n-k).

The symbolic backend computes deg R_d as the degree of the saturation
(f_1..f_d : I^infinity), checking that its codimension is exactly d and
resampling on failure.  The numeric backend (homotopy module) counts
non-solutions of sliced systems instead; both share the output format.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass

from .errors import DomainError, GenericityError
from .ideals import Ideal, dimension_and_degree, random_element_of_degree, saturation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidualDegrees:
    """deg R_d for d = n-k..n, plus the element degree m used to cut."""

    n: int
    k: int
    m: int
    degrees: dict  # d -> deg(R_d) >= 0

    def levels(self):
        return range(self.n - self.k, self.n + 1)


@dataclass(frozen=True)
class SegreDegrees:
    """deg s_0(X, P^n) .. deg s_k(X, P^n) as signed integers."""

    n: int
    k: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.k + 1:
            raise DomainError("Segre degree vector has wrong length")


def residual_degrees_symbolic(
    I: Ideal, rng=None, m: int | None = None, retries: int = 3
) -> ResidualDegrees:
    """Residual degrees of X = V(I) by saturation, one level per codimension.

    m defaults to the maximum generator degree and may only be raised.
    Levels whose saturation is the unit ideal contribute degree 0; otherwise
    the saturation must have codimension exactly d, else the random cut is
    resampled (bounded retries).
    """
    rng = rng or random.Random()
    n = I.ring.nvars - 1
    stats = dimension_and_degree(I)
    k = stats.dim
    if k < 0:
        raise DomainError("residual degrees need a nonempty scheme")
    mmax = I.max_degree() if not I.is_zero else 1
    if m is None:
        m = mmax
    elif m < mmax:
        raise DomainError(f"degree bound {m} below maximum generator degree {mmax}")
    degrees = {}
    for d in range(n - k, n + 1):
        if d == 0:
            # X is all of P^n; nothing is cut and nothing is residual
            degrees[0] = 0
            continue
        for attempt in range(retries):
            cuts = [random_element_of_degree(I, m, rng) for _ in range(d)]
            J = Ideal(I.ring, cuts)
            R = saturation(J, I)
            if R.is_unit:
                degrees[d] = 0
                break
            rstats = dimension_and_degree(R)
            if rstats.dim == n - d:
                degrees[d] = rstats.degree
                break
            log.debug(
                "level %d attempt %d: residual dimension %s != %d, resampling",
                d, attempt, rstats.dim, n - d,
            )
        else:
            raise GenericityError(
                f"residual at level {d} failed the dimension check "
                f"{retries} times (nongeneric randomness)"
            )
    return ResidualDegrees(n, k, m, degrees)


def segre_from_residuals(R: ResidualDegrees) -> SegreDegrees:
    """Solve the triangular relations for deg s_0 .. deg s_k."""
    n, k, m = R.n, R.k, R.m
    values = []
    for p in range(k + 1):
        d = p + (n - k)
        s = m ** d - R.degrees[d]
        for i in range(p):
            s -= math.comb(d, p - i) * m ** (p - i) * values[i]
        values.append(s)
    return SegreDegrees(n, k, tuple(values))


def segre_degrees(
    I: Ideal,
    backend: str = "symbolic",
    rng=None,
    m: int | None = None,
    cfg=None,
    verify: bool = False,
) -> SegreDegrees:
    """Degrees of the Segre classes of V(I) in P^n.

    backend: "symbolic" (saturation) or "numeric" (homotopy non-solution
    counts).  With verify=True the residuals are recomputed with fresh
    randomness and must agree exactly.
    """
    rng = rng or random.Random()
    if dimension_and_degree(I).dim < 0:
        raise DomainError("Segre degrees need a nonempty scheme")
    R = _residuals(I, backend, rng, m, cfg)
    if verify:
        R2 = _residuals(I, backend, rng, m, cfg)
        if R2 != R:
            raise GenericityError(
                f"verification mismatch: residual degrees {R.degrees} vs {R2.degrees}"
            )
    out = segre_from_residuals(R)
    if out.values and out.values[0] < 1:
        raise GenericityError(
            f"deg s_0 = {out.values[0]} < 1 for a nonempty scheme; residuals suspect"
        )
    return out


def _residuals(I, backend, rng, m, cfg):
    if backend == "symbolic":
        return residual_degrees_symbolic(I, rng, m)
    if backend == "numeric":
        from . import homotopy

        return homotopy.residual_degrees_numeric(I, rng, cfg, m)
    raise DomainError(f"unknown backend {backend!r}")
