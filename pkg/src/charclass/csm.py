"""Chern-Schwartz-MacPherson class degrees, Euler characteristics and
maximum likelihood degrees.

The pipeline for a hypersurface V(f) in P^n:

  1. replace f by its squarefree part (the answer only sees the support),
  2. take the Jacobian ideal; its generators share degree r = deg f - 1,
  3. get the Segre class degrees of the singular scheme (segre module),
  4. pad them into integers s~_0..s~_n and convert to the shadow
         g_j = sum_i C(j,i) r^(j-i) s~_i,
  5. push forward:  i_* c_SM = (1+H)^(n+1) - sum_j g_j (-H)^j (1+H)^(n-j)
     in Z[H]/(H^(n+1)).

The same degrees also come straight from the s~_i by an explicit double
sum (csm_degrees_from_segre); the hypersurface routine cross-checks both.
Arbitrary subschemes go through inclusion-exclusion over products of
generators; the top coefficient of the pushforward is the topological Euler
characteristic of the support, which feeds the affine and ML-degree
conveniences.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field

from .errors import DomainError, ResourceError
from .ideals import Ideal, dimension_and_degree, jacobian_ideal
from .poly import Polynomial, homogenize, insert_variable
from .segre import SegreDegrees, segre_degrees
from .squarefree import squarefree_part

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassExpr:
    """An integer class c_0 + c_1 H + ... + c_n H^n in Z[H]/(H^(n+1))."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise DomainError("coefficient vector must have length n+1")

    @staticmethod
    def zero(n: int) -> "ClassExpr":
        return ClassExpr(n, (0,) * (n + 1))

    @staticmethod
    def monomial(n: int, j: int, c: int = 1) -> "ClassExpr":
        v = [0] * (n + 1)
        if j <= n:
            v[j] = c
        return ClassExpr(n, tuple(v))

    def __add__(self, other):
        self._check(other)
        return ClassExpr(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return ClassExpr(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return ClassExpr(self.n, tuple(a * other for a in self.coeffs))
        self._check(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b and i + j <= self.n:
                        out[i + j] += a * b
        return ClassExpr(self.n, tuple(out))

    __rmul__ = __mul__

    def _check(self, other):
        if self.n != other.n:
            raise DomainError("ambient dimensions differ")

    def coefficient(self, j: int) -> int:
        return self.coeffs[j]

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                h = "H" if j == 1 else f"H^{j}"
                if c == 1:
                    parts.append(h)
                elif c == -1:
                    parts.append(f"-{h}")
                else:
                    parts.append(f"{c}*{h}")
        if not parts:
            return "0"
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text


def hyperplane_power(n: int, base_shift: int, power: int) -> ClassExpr:
    """(1+H)^power truncated, optionally shifted by H^base_shift."""
    out = [0] * (n + 1)
    for j in range(0, n + 1 - base_shift):
        if j <= power:
            out[j + base_shift] = math.comb(power, j)
    return ClassExpr(n, tuple(out))


@dataclass(frozen=True)
class SegreProfile:
    """Padded Segre data s~_0..s~_n of a singular locus with generator degree r.

    s~_0 = 1, s~_i = 0 for 0 < i < n-k, and s~_i = -deg s_{i-(n-k)} above;
    an empty locus (k = -1) pads to (1, 0, ..., 0).
    """

    n: int
    k: int
    r: int
    stilde: tuple

    def __post_init__(self):
        if len(self.stilde) != self.n + 1:
            raise DomainError("padded Segre vector must have length n+1")
        if self.stilde[0] != 1:
            raise DomainError("padded Segre vector must start with 1")

    @staticmethod
    def from_segre(n: int, r: int, segre: SegreDegrees | None) -> "SegreProfile":
        pad = [0] * (n + 1)
        pad[0] = 1
        if segre is None:
            return SegreProfile(n, -1, r, tuple(pad))
        k = segre.k
        for i, s in enumerate(segre.values):
            pad[i + n - k] = -s
        return SegreProfile(n, k, r, tuple(pad))


@dataclass(frozen=True)
class CsmResult:
    """Pushforward of c_SM, its degree list, and the Euler characteristic."""

    pushforward: ClassExpr
    degrees: tuple
    euler: int
    dim: int


def shadow_from_segre(sp: SegreProfile) -> ClassExpr:
    """Shadow G = sum g_j H^j with g_j = sum_i C(j,i) r^(j-i) s~_i."""
    n, r, st = sp.n, sp.r, sp.stilde
    coeffs = []
    for j in range(n + 1):
        coeffs.append(sum(math.comb(j, i) * r ** (j - i) * st[i] for i in range(j + 1)))
    return ClassExpr(n, tuple(coeffs))


def segre_from_shadow(G: ClassExpr, r: int, n: int, k: int) -> SegreProfile:
    """Inverse of shadow_from_segre: s~_i = sum_t C(i,t) (-r)^(i-t) g_t."""
    st = []
    for i in range(n + 1):
        st.append(sum(math.comb(i, t) * (-r) ** (i - t) * G.coeffs[t] for t in range(i + 1)))
    return SegreProfile(n, k, r, tuple(st))


def csm_from_shadow(G: ClassExpr) -> ClassExpr:
    """Pushforward of c_SM from the shadow of the singular-locus graph."""
    n = G.n
    acc = hyperplane_power(n, 0, n + 1)
    for j in range(n + 1):
        g = G.coeffs[j]
        if not g:
            continue
        term = hyperplane_power(n, j, n - j) * ((-1) ** j * g)
        acc = acc - term
    return acc


def csm_degrees_from_segre(sp: SegreProfile) -> tuple:
    """deg (c_SM)_p for p = 0..n-1 straight from the padded Segre integers."""
    n, r, st = sp.n, sp.r, sp.stilde
    dim_x = n - 1
    out = []
    for p in range(dim_x + 1):
        q = n - dim_x + p
        total = math.comb(n + 1, q)
        for i in range(q + 1):
            if not st[i]:
                continue
            inner = sum(
                (-1) ** j * math.comb(j, i) * math.comb(n - j, q - j) * r ** (j - i)
                for j in range(i, q + 1)
            )
            total -= st[i] * inner
        out.append(total)
    return tuple(out)


def csm_hypersurface(
    f: Polynomial,
    backend: str = "symbolic",
    rng=None,
    m: int | None = None,
    cfg=None,
    verify: bool = False,
) -> CsmResult:
    """CSM class data of the hypersurface V(f) in P^n.

    f is replaced by its squarefree part before the Jacobian ideal is taken.
    The shadow route and the direct degree formula are cross-checked.
    """
    rng = rng or random.Random()
    if f.is_zero() or f.is_constant():
        raise DomainError("hypersurface needs a nonconstant polynomial")
    if not f.is_homogeneous():
        raise DomainError("hypersurface polynomial must be homogeneous")
    n = f.ring.nvars - 1
    if n < 1:
        raise DomainError("ambient P^0 has no hypersurfaces")
    fred = squarefree_part(f, rng)
    r = fred.total_degree() - 1
    jac = jacobian_ideal(fred)
    if dimension_and_degree(jac).dim < 0:
        segre = None  # smooth hypersurface
    else:
        segre = segre_degrees(jac, backend=backend, rng=rng, m=m, cfg=cfg, verify=verify)
    profile = SegreProfile.from_segre(n, r, segre)
    push = csm_from_shadow(shadow_from_segre(profile))
    degrees = tuple(push.coeffs[1:])
    check = csm_degrees_from_segre(profile)
    if degrees != check:
        raise DomainError(
            f"internal cross-check failed: shadow route {degrees} vs formula {check}"
        )
    return CsmResult(push, degrees, push.coeffs[n], n - 1)


def csm_subscheme(
    I: Ideal,
    backend: str = "symbolic",
    rng=None,
    cfg=None,
    verify: bool = False,
    max_generators: int = 16,
) -> CsmResult:
    """CSM class data of V(I) by inclusion-exclusion over generator products.

    Costs 2^s - 1 hypersurface computations for s generators (memoized on
    subsets).  The zero ideal returns c_SM(P^n); the unit ideal is a domain
    error (empty scheme).
    """
    rng = rng or random.Random()
    n = I.ring.nvars - 1
    if I.is_zero:
        push = hyperplane_power(n, 0, n + 1)
        # truncation drops the H^(n+1) coefficient; top coefficient is n+1
        return CsmResult(push, tuple(push.coeffs[0:]), push.coeffs[n], n)
    stats = dimension_and_degree(I)
    if stats.dim < 0:
        raise DomainError("empty scheme: CSM classes are not defined")
    s = len(I.gens)
    if s > max_generators:
        raise ResourceError(
            f"inclusion-exclusion over {s} generators needs 2^{s}-1 "
            "hypersurface computations; refusing"
        )
    if s > 10:
        log.warning("inclusion-exclusion over %d generators: 2^%d - 1 terms", s, s)
    total = ClassExpr.zero(n)
    cache = {}
    for size in range(1, s + 1):
        for subset in itertools.combinations(range(s), size):
            prod = I.gens[subset[0]]
            for idx in subset[1:]:
                prod = prod * I.gens[idx]
            result = cache.get(subset)
            if result is None:
                result = csm_hypersurface(
                    prod, backend=backend, rng=rng, cfg=cfg, verify=verify
                )
                cache[subset] = result
            sign = 1 if size % 2 == 1 else -1
            total = total + sign * result.pushforward
    dim = stats.dim
    degrees = tuple(total.coeffs[n - dim + p] for p in range(dim + 1))
    return CsmResult(total, degrees, total.coeffs[n], dim)


def euler_characteristic(I: Ideal, backend: str = "symbolic", rng=None, cfg=None) -> int:
    """Topological Euler characteristic of the support of V(I)."""
    return csm_subscheme(I, backend=backend, rng=rng, cfg=cfg).euler


def affine_euler(
    gens,
    ring=None,
    backend: str = "symbolic",
    rng=None,
    cfg=None,
    homvar: str | None = None,
) -> int:
    """Euler characteristic of an affine scheme V(gens) in A^n.

    Homogenizes every generator with a fresh leading variable x_0 and returns
    chi(projective closure ideal) - chi(same + (x_0)).  With `homvar` naming
    a variable of an already homogeneous input, that variable plays x_0
    instead and no new variable is added.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise DomainError("affine Euler characteristic needs a ring or generators")
        ring = gens[0].ring
    if homvar is not None:
        if homvar not in ring.names:
            raise DomainError(f"homogenizing variable {homvar!r} not in ring")
        hgens = gens
        hring = ring
        hv = ring.var(ring.names.index(homvar))
    else:
        name = _fresh_name(ring.names)
        hring = insert_variable(ring, name, 0)
        hgens = [homogenize(g, name, 0) for g in gens if not g.is_zero()]
        hv = hring.var(0)
    closure = Ideal(hring, hgens)
    chi_closure = euler_characteristic(closure, backend=backend, rng=rng, cfg=cfg)
    at_infinity = Ideal(hring, list(closure.gens) + [hv])
    chi_inf = euler_characteristic(at_infinity, backend=backend, rng=rng, cfg=cfg)
    return chi_closure - chi_inf


def _fresh_name(names):
    for cand in itertools.chain(("x0", "h0", "w0"), (f"v{i}" for i in itertools.count())):
        if cand not in names:
            return cand


@dataclass(frozen=True)
class MlResult:
    """ML degree with the two Euler characteristics behind it."""

    ml_degree: int
    chi_model: int
    chi_cut: int
    dim: int
    warnings: tuple = field(default_factory=tuple)


def ml_degree(I: Ideal, backend: str = "symbolic", rng=None, cfg=None) -> MlResult:
    """Maximum likelihood degree of the model X = V(I) in probability
    coordinates p_0..p_n.

    Computes chi of X and of X cut by p_0 * ... * p_n * (p_0 + ... + p_n),
    and returns (-1)^{dim X} (chi(X) - chi(cut)).  Assumes the open part U is
    dense in X and smooth (surfaced in the warnings, not checked).
    """
    ring = I.ring
    stats = dimension_and_degree(I)
    if stats.dim < 0:
        raise DomainError("ML degree of an empty model")
    g = ring.one()
    for j in range(ring.nvars):
        g = g * ring.var(j)
    g = g * sum(ring.gens(), ring.zero())
    chi_model = euler_characteristic(I, backend=backend, rng=rng, cfg=cfg)
    cut = Ideal(ring, list(I.gens) + [g])
    chi_cut = euler_characteristic(cut, backend=backend, rng=rng, cfg=cfg)
    chi_u = chi_model - chi_cut
    warnings = ["assumes U = X \\ V(g) is smooth, very affine and dense in X"]
    if chi_u == 0:
        warnings.append("chi(U) = 0: U may be empty or the model degenerate")
    mld = (-1) ** stats.dim * chi_u
    return MlResult(mld, chi_model, chi_cut, stats.dim, tuple(warnings))
