"""Numeric backend: residual degrees as non-solution counts of sliced systems.

For each level d the square system is

    F_d = [f_1, ..., f_d, L_{d+1}, ..., L_n, patch]

in the n+1 homogeneous coordinates, where the f_i are random complex
degree-m elements of the ideal, the L_j random linear forms, and the patch
a random affine chart equation c.x = 1.  The m^d solutions of the
total-degree start system [a_i y_i^{deg_i} - b_i, patch] are tracked along
the gamma-trick straight-line homotopy (Euler predictor, Newton corrector,
adaptive step halving).  Converged endpoints that do not lie on V(I) and
have a nonsingular Jacobian are the non-solutions; their count, after
merging duplicates, is deg(R_d).

No information flows between levels (no cascade reuse): each level gets
fresh random data.
"""

from __future__ import annotations

import cmath
import itertools
import logging
import random
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericBackendError
from .ideals import Ideal, dimension_and_degree
from .segre import ResidualDegrees

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrackerConfig:
    """Tolerances and limits for the predictor-corrector tracker."""

    corrector_tol: float = 1e-10
    on_variety_tol: float = 1e-8
    cluster_tol: float = 1e-6
    max_step_halvings: int = 48
    newton_iters: int = 3
    endpoint_newton: int = 14
    initial_step: float = 0.05
    max_step: float = 0.2
    min_step: float = 1e-14
    blowup: float = 1e10
    singular_cond: float = 1e10
    level_retries: int = 3
    seed: int | None = None

    def __post_init__(self):
        for name in ("corrector_tol", "on_variety_tol", "cluster_tol"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")


@dataclass
class PathEndpoint:
    """Endpoint of one tracked path in chart coordinates."""

    point: np.ndarray
    status: str                      # converged | diverged | singular
    residual: float | None = None    # max scaled |h(point)| over generators
    classification: str | None = None  # solution | non-solution (converged only)


class _Ambiguous(Exception):
    """Endpoint too close to the classification threshold; rerun the level."""


# -- numeric polynomials -------------------------------------------------------


class _NPoly:
    """Dense-array complex polynomial: exponent matrix + coefficient vector."""

    __slots__ = ("E", "c", "nv")

    def __init__(self, E, c, nv):
        self.E = np.asarray(E, dtype=np.int64).reshape(-1, nv)
        self.c = np.asarray(c, dtype=np.complex128)
        self.nv = nv

    @staticmethod
    def from_terms(terms, nv):
        terms = [(e, c) for e, c in terms.items() if c != 0]
        if not terms:
            return _NPoly(np.zeros((0, nv)), np.zeros(0), nv)
        E = np.array([e for e, _ in terms], dtype=np.int64)
        c = np.array([c for _, c in terms], dtype=np.complex128)
        return _NPoly(E, c, nv)

    def eval(self, x):
        if len(self.c) == 0:
            return 0j
        with np.errstate(divide="ignore", invalid="ignore"):
            mons = np.prod(x[None, :] ** self.E, axis=1)
        return complex(np.dot(self.c, mons))

    def partial(self, j):
        mask = self.E[:, j] > 0
        if not mask.any():
            return _NPoly(np.zeros((0, self.nv)), np.zeros(0), self.nv)
        E = self.E[mask].copy()
        c = self.c[mask] * E[:, j]
        E[:, j] -= 1
        return _NPoly(E, c, self.nv)

    def coeff_norm(self):
        return float(np.sqrt(np.sum(np.abs(self.c) ** 2))) or 1.0

    def degree(self):
        return int(self.E.sum(axis=1).max()) if len(self.c) else 0


def _lift(f, nv) -> _NPoly:
    """Exact polynomial -> complex arrays via symmetric lift of GF(p) coeffs."""
    terms = {e: complex(c) for e, c in f.lift_terms()}
    return _NPoly.from_terms(terms, nv)


def _dict_mul(a, b, nv):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0j) + ca * cb
    return out


class _Square:
    """A square complex polynomial system with a precomputed Jacobian."""

    def __init__(self, polys):
        self.polys = polys
        self.nv = polys[0].nv
        self.jac = [[f.partial(j) for j in range(self.nv)] for f in polys]

    def F(self, x):
        return np.array([f.eval(x) for f in self.polys])

    def J(self, x):
        n = self.nv
        out = np.empty((n, n), dtype=np.complex128)
        for i, row in enumerate(self.jac):
            for j, d in enumerate(row):
                out[i, j] = d.eval(x)
        return out


class StraightLineHomotopy:
    """H(x, t) = (1-t) F(x) + t gamma G(x), with shared t-independent rows.

    Rows whose index appears in `fixed` (the chart patch) enter both systems
    without the gamma factor, so paths stay inside the chart.
    """

    def __init__(self, target: _Square, start: _Square, gamma: complex, fixed=()):
        self.target = target
        self.start = start
        self.gamma = gamma
        self.fixed = frozenset(fixed)
        self.n = target.nv

    def H(self, x, t):
        f = self.target.F(x)
        g = self.start.F(x)
        out = (1 - t) * f + t * self.gamma * g
        for i in self.fixed:
            out[i] = f[i]
        return out

    def Hx(self, x, t):
        jf = self.target.J(x)
        jg = self.start.J(x)
        out = (1 - t) * jf + t * self.gamma * jg
        for i in self.fixed:
            out[i] = jf[i]
        return out

    def Ht(self, x, t):
        f = self.target.F(x)
        g = self.start.F(x)
        out = self.gamma * g - f
        for i in self.fixed:
            out[i] = 0
        return out


def _solve(A, b):
    try:
        return np.linalg.solve(A, b)
    except np.linalg.LinAlgError:
        return np.linalg.lstsq(A, b, rcond=None)[0]


def _newton(system_F, system_J, x, tol, iters):
    """Plain Newton iteration; returns (x, converged, last_residual)."""
    res = float(np.max(np.abs(system_F(x))))
    for _ in range(iters):
        if res <= tol:
            return x, True, res
        dx = _solve(system_J(x), -system_F(x))
        x = x + dx
        res = float(np.max(np.abs(system_F(x))))
    return x, res <= tol, res


def track_path(start, homotopy: StraightLineHomotopy, cfg: TrackerConfig) -> PathEndpoint:
    """Track one start solution from t=1 to t=0.

    Euler predictor and Newton corrector with adaptive step halving and
    doubling; the endpoint is polished by extra Newton steps on the target
    system.  Step underflow or a norm blowup yields status "diverged"; an
    endpoint where Newton stalls yields "singular".
    """
    x = np.asarray(start, dtype=np.complex128)
    t = 1.0
    dt = cfg.initial_step
    halvings = 0
    streak = 0
    while t > 0:
        step = min(dt, t)
        tn = t - step
        v = _solve(homotopy.Hx(x, t), -homotopy.Ht(x, t))
        xp = x - v * step  # dx/dt = -Hx^{-1} Ht, moving t by -step
        ok = True
        xn = xp
        for _ in range(cfg.newton_iters):
            h = homotopy.H(xn, tn)
            res = float(np.max(np.abs(h)))
            scale = max(1.0, float(np.max(np.abs(xn))))
            if res <= cfg.corrector_tol * scale:
                break
            xn = xn + _solve(homotopy.Hx(xn, tn), -h)
        else:
            h = homotopy.H(xn, tn)
            res = float(np.max(np.abs(h)))
            scale = max(1.0, float(np.max(np.abs(xn))))
            ok = res <= cfg.corrector_tol * scale
        if ok:
            x, t = xn, tn
            streak += 1
            if streak >= 4:
                dt = min(dt * 2, cfg.max_step)
                streak = 0
        else:
            streak = 0
            dt /= 2
            halvings += 1
            if dt < cfg.min_step or halvings > cfg.max_step_halvings:
                return PathEndpoint(x, "diverged")
        if float(np.max(np.abs(x))) > cfg.blowup:
            return PathEndpoint(x, "diverged")
    x, converged, res = _newton(
        homotopy.target.F, homotopy.target.J, x, cfg.corrector_tol, cfg.endpoint_newton
    )
    if converged:
        return PathEndpoint(x, "converged")
    if res < 1e-4:
        return PathEndpoint(x, "singular")
    return PathEndpoint(x, "diverged")


def classify_endpoint(point, gens: list, square: _Square, cfg: TrackerConfig):
    """Classify a converged endpoint as solution / non-solution w.r.t. V(I).

    The point is normalized to unit norm; each generator is evaluated and
    scaled by its coefficient norm.  Non-solutions additionally need a
    numerically nonsingular Jacobian of the square system.  A residual
    within a factor 10 of the tolerance raises for a level rerun.
    """
    x = np.asarray(point, dtype=np.complex128)
    xhat = x / np.linalg.norm(x)
    residual = max(abs(g.eval(xhat)) / g.coeff_norm() for g in gens)
    tol = cfg.on_variety_tol
    if tol / 10 <= residual <= tol * 10:
        raise _Ambiguous(f"on-variety residual {residual:.3e} near tolerance {tol:.1e}")
    if residual < tol:
        return "solution", residual
    cond = np.linalg.cond(square.J(x))
    if not np.isfinite(cond) or cond > cfg.singular_cond:
        return "singular", residual
    return "non-solution", residual


def residual_degrees_numeric(
    I: Ideal, rng=None, cfg: TrackerConfig | None = None, m: int | None = None
) -> ResidualDegrees:
    """Residual degrees of V(I) by counting non-solutions per level.

    Level ranges and m follow the symbolic backend; the counts come from
    tracking the m^d total-degree paths of each sliced system.  Levels are
    rerun with fresh randomness on ambiguity, and a persistent failure is a
    NumericBackendError.
    """
    cfg = cfg or TrackerConfig()
    if rng is None:
        rng = random.Random(cfg.seed)
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
    nv = n + 1
    gens = [_lift(g, nv) for g in I.gens]
    gen_dicts = [{e: complex(c) for e, c in g.lift_terms()} for g in I.gens]
    gen_degs = [g.total_degree() for g in I.gens]
    degrees = {}
    for d in range(n - k, n + 1):
        if d == 0:
            degrees[0] = 0
            continue
        err = None
        for attempt in range(cfg.level_retries):
            try:
                degrees[d] = _count_level(gen_dicts, gen_degs, gens, n, d, m, rng, cfg)
                break
            except (_Ambiguous, NumericBackendError) as exc:
                err = exc
                log.debug("level %d attempt %d rerun: %s", d, attempt, exc)
        else:
            raise NumericBackendError(
                f"level {d} stayed ambiguous after {cfg.level_retries} reruns: {err}"
            )
    return ResidualDegrees(n, k, m, degrees)


def _gauss(rng):
    return complex(rng.gauss(0, 1), rng.gauss(0, 1)) / 1.4142135623730951


def _random_combination(gen_dicts, gen_degs, m, nv, rng):
    """A random complex degree-m element of the ideal: sum lambda_i h_i."""
    out = {}
    for gd, deg in zip(gen_dicts, gen_degs):
        lam = {
            e: _gauss(rng)
            for e in _exponents_of_degree(m - deg, nv)
        }
        for e, c in _dict_mul(lam, gd, nv).items():
            out[e] = out.get(e, 0j) + c
    return {e: c for e, c in out.items() if abs(c) > 1e-300}


def _exponents_of_degree(d, nv):
    for bars in itertools.combinations(range(d + nv - 1), nv - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nv - 2 - prev)
        yield tuple(exps)


def _linear_form(nv, rng):
    return {tuple(1 if j == i else 0 for j in range(nv)): _gauss(rng) for i in range(nv)}


def _normalize_row(row):
    scale = sum(abs(c) ** 2 for c in row.values()) ** 0.5
    return {e: c / scale for e, c in row.items()} if scale else row


def _count_level(gen_dicts, gen_degs, gens, n, d, m, rng, cfg) -> int:
    nv = n + 1
    # target rows: d ideal elements, n-d linear slices, affine patch;
    # rows are normalized to unit coefficient norm so the absolute
    # tolerances stay meaningful for large integer generators
    rows = [_random_combination(gen_dicts, gen_degs, m, nv, rng) for _ in range(d)]
    rows += [_linear_form(nv, rng) for _ in range(n - d)]
    rows = [_normalize_row(r) for r in rows]
    patch = _linear_form(nv, rng)
    patch[(0,) * nv] = patch.get((0,) * nv, 0j) - 1.0
    rows.append(patch)
    target = _Square([_NPoly.from_terms(r, nv) for r in rows])

    # start rows: a_i y_{i+1}^{deg_i} - b_i (same patch row)
    degs = [m] * d + [1] * (n - d)
    start_rows = []
    roots_per_row = []
    for i, deg in enumerate(degs):
        a, b = _gauss(rng), _gauss(rng)
        e_hi = tuple(deg if j == i + 1 else 0 for j in range(nv))
        start_rows.append({e_hi: a, (0,) * nv: -b})
        base = (b / a) ** (1.0 / deg)
        roots_per_row.append(
            [base * cmath.exp(2j * cmath.pi * r / deg) for r in range(deg)]
        )
    start_rows.append(patch)
    start = _Square([_NPoly.from_terms(r, nv) for r in start_rows])

    gamma = cmath.exp(2j * cmath.pi * rng.random())
    hom = StraightLineHomotopy(target, start, gamma, fixed=(n,))

    # assemble start points: y_0 solved from the patch equation
    c_patch = np.array(
        [patch.get(tuple(1 if j == i else 0 for j in range(nv)), 0j) for i in range(nv)]
    )
    starts = []
    for combo in itertools.product(*roots_per_row):
        x = np.empty(nv, dtype=np.complex128)
        x[1:] = combo
        x[0] = (1.0 - np.dot(c_patch[1:], x[1:])) / c_patch[0]
        starts.append(x)
    assert len(starts) == m ** d

    non_solutions = []
    for x0 in starts:
        res0 = float(np.max(np.abs(start.F(x0))))
        if res0 > cfg.corrector_tol * max(1.0, float(np.max(np.abs(x0)))):
            raise NumericBackendError(f"start point residual {res0:.2e} too large")
        ep = track_path(x0, hom, cfg)
        if ep.status != "converged":
            continue
        cls, residual = classify_endpoint(ep.point, gens, target, cfg)
        ep.classification = cls if cls in ("solution", "non-solution") else None
        ep.residual = residual
        if cls == "non-solution":
            non_solutions.append(ep.point / np.linalg.norm(ep.point))
    return _count_clusters(non_solutions, cfg.cluster_tol)


def _count_clusters(points, tol) -> int:
    """Distinct projective points among unit vectors, chordal metric."""
    reps = []
    for x in points:
        for r in reps:
            ip = abs(np.vdot(r, x))
            if (2 * max(0.0, 1 - min(ip, 1.0))) ** 0.5 < tol:
                break
        else:
            reps.append(x)
    return len(reps)
