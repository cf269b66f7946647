"""Finite positive Borel measures on [0,1] with log-domain moment queries.

Variants: atomic measures (positions and weights both kept as logarithms,
so atoms like ``1 - 1e-35`` remain meaningful), power tails with density
``C*alpha*(1-x)**(alpha-1)``, piecewise-constant densities, scalings and
finite sums.  Atoms at exactly 1 are rejected at construction: embedding
measures must satisfy ``mu({1}) = 0``.

Moments ``integral x**s dmu`` are exact closed forms in the log domain for
every variant (incomplete-Beta form for truncated power tails), safe for
``s`` up to ~1e12.  Generic integrals against user functions are delegated
to quadrature in the tail variable ``t = 1 - x``.

Restrictions produced by :func:`restrict_tail` may carry zero mass (the
embedding of an empty measure is the zero operator); explicit constructors
still require positive mass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import betaincc, betaln

from . import quadrature
from .errors import HypothesisViolationError, InvalidParameterError
from .logdomain import NEG_INF, log_power_interval, log_sum

_DEFAULT_GRID_LEVELS = 40


# ---------------------------------------------------------------------------
# variants
# ---------------------------------------------------------------------------

class Measure:
    """Common interface of all measure variants.  Values are immutable and
    all operations are pure, so instances are safe to share across threads."""

    # -- mass / moments ---------------------------------------------------

    def log_moment(self, s: float) -> float:
        """log of ``integral x**s dmu``; -inf encodes a zero moment."""
        if s < 0.0:
            raise InvalidParameterError("moment order s must be >= 0")
        return self._log_moment(s)

    def moment(self, s: float) -> float:
        return math.exp(self.log_moment(s))

    @property
    def log_total_mass(self) -> float:
        return self.log_moment(0.0)

    @property
    def total_mass(self) -> float:
        return self.moment(0.0)

    def tail_mass(self, eps: float) -> float:
        """mu([1-eps, 1])."""
        if not 0.0 < eps <= 1.0:
            raise InvalidParameterError("eps must lie in (0, 1]")
        return self._tail_mass(eps)

    def mass_above(self, b: float) -> float:
        """mu((b, 1]); zero exactly when the support lies in [0, b]."""
        return self._mass_above(b)

    # -- structure ---------------------------------------------------------

    def restricted_to_tail(self, eps: float) -> "Measure":
        """Restriction to [1-eps, 1], keeping the variant structure."""
        if not 0.0 < eps <= 1.0:
            raise InvalidParameterError("eps must lie in (0, 1]")
        return self._restricted(eps)

    def bounded_density_sup(self) -> float | None:
        """Essential sup of the density when mu = h dm with bounded h, else None."""
        return None

    def sublinear_norm_exact(self) -> float | None:
        """Analytic sup of mu(J_eps)/eps when available, else None."""
        return None

    def flattened(self) -> "FlatMeasure":
        """Atoms plus density pieces in the tail variable, scales applied."""
        flat = FlatMeasure()
        self._flatten_into(flat, 0.0)
        flat.freeze()
        return flat

    def to_config(self) -> dict:
        raise NotImplementedError

    # hooks implemented per variant
    def _log_moment(self, s: float) -> float:
        raise NotImplementedError

    def _tail_mass(self, eps: float) -> float:
        raise NotImplementedError

    def _mass_above(self, b: float) -> float:
        raise NotImplementedError

    def _restricted(self, eps: float) -> "Measure":
        raise NotImplementedError

    def _flatten_into(self, flat: "FlatMeasure", log_scale: float) -> None:
        raise NotImplementedError


@dataclass
class FlatMeasure:
    """Flattened view: atom logs and tail density pieces ``(t_lo, t_hi, h(t))``.

    ``t = 1 - x``; each piece callable is vectorized over t-arrays and already
    includes any scaling.  ``singular`` marks pieces whose density is unbounded
    as t -> 0 (power tails with alpha < 1).
    """

    log_positions: list = field(default_factory=list)
    log_weights: list = field(default_factory=list)
    pieces: list = field(default_factory=list)   # (t_lo, t_hi, callable, singular)

    def freeze(self):
        self.log_positions = np.asarray(self.log_positions, dtype=float)
        self.log_weights = np.asarray(self.log_weights, dtype=float)

    @property
    def has_atoms(self) -> bool:
        return len(self.log_positions) > 0

    @property
    def has_density(self) -> bool:
        return len(self.pieces) > 0


@dataclass(frozen=True)
class AtomicMeasure(Measure):
    """sum_k c_k * delta_{a_k} with log a_k < 0 (all atoms strictly inside (0,1))."""

    log_positions: np.ndarray
    log_weights: np.ndarray

    def __post_init__(self):
        la = np.array(self.log_positions, dtype=float)
        lc = np.array(self.log_weights, dtype=float)
        if la.shape != lc.shape or la.ndim != 1:
            raise InvalidParameterError("atom position/weight arrays must match")
        if np.any(la >= 0.0) or not np.all(np.isfinite(la)):
            raise InvalidParameterError(
                "atoms must lie strictly inside (0, 1); an atom at 1 is not "
                "an embedding measure")
        if np.any(np.isnan(lc)) or np.any(lc == math.inf):
            raise InvalidParameterError("atom weights must be finite")
        order = np.argsort(la)
        la, lc = la[order], lc[order]
        la.setflags(write=False)
        lc.setflags(write=False)
        object.__setattr__(self, "log_positions", la)
        object.__setattr__(self, "log_weights", lc)

    @property
    def positions(self) -> np.ndarray:
        return np.exp(self.log_positions)

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    def _log_moment(self, s: float) -> float:
        return log_sum(self.log_weights + s * self.log_positions)

    def _tail_mass(self, eps: float) -> float:
        # atom at a is in J_eps iff a >= 1-eps iff log a >= log1p(-eps)
        cutoff = math.log1p(-eps) if eps < 1.0 else NEG_INF
        mask = self.log_positions >= cutoff
        return math.exp(log_sum(self.log_weights[mask])) if mask.any() else 0.0

    def _mass_above(self, b: float) -> float:
        if b <= 0.0:
            return self.total_mass
        cutoff = math.log(b)
        mask = self.log_positions > cutoff
        return math.exp(log_sum(self.log_weights[mask])) if mask.any() else 0.0

    def _restricted(self, eps: float) -> "AtomicMeasure":
        cutoff = math.log1p(-eps) if eps < 1.0 else NEG_INF
        mask = self.log_positions >= cutoff
        return AtomicMeasure(self.log_positions[mask], self.log_weights[mask])

    def sublinear_norm_exact(self) -> float | None:
        if self.log_positions.size == 0:
            return 0.0
        # sup over eps of mu(J_eps)/eps is attained at eps = 1 - a_k
        best = 0.0
        for k in range(self.log_positions.size):
            eps_k = -math.expm1(self.log_positions[k])  # 1 - a_k, exact
            mass = math.exp(log_sum(self.log_weights[k:]))
            best = max(best, mass / eps_k)
        return best

    def _flatten_into(self, flat: FlatMeasure, log_scale: float) -> None:
        flat.log_positions.extend(self.log_positions)
        flat.log_weights.extend(self.log_weights + log_scale)

    def to_config(self) -> dict:
        return {"kind": "atomic",
                "atoms": [[float(a), float(c)]
                          for a, c in zip(self.positions, self.weights)]}


def atomic(atoms) -> AtomicMeasure:
    """Atomic measure from ``[(a_k, c_k), ...]`` pairs in the linear domain."""
    if not atoms:
        raise InvalidParameterError("atomic measure needs at least one atom")
    pos, wts = zip(*atoms)
    pos = np.asarray(pos, dtype=float)
    wts = np.asarray(wts, dtype=float)
    if np.any(pos <= 0.0) or np.any(pos >= 1.0):
        raise InvalidParameterError("atom positions must lie in (0, 1)")
    if np.any(wts <= 0.0):
        raise InvalidParameterError("atom weights must be positive")
    if np.unique(pos).size != pos.size:
        raise InvalidParameterError("atom positions must be distinct")
    return AtomicMeasure(np.log(pos), np.log(wts))


def atomic_from_logs(log_positions, log_weights) -> AtomicMeasure:
    """Atomic measure directly from log positions/weights (construction use)."""
    return AtomicMeasure(np.asarray(log_positions, float),
                         np.asarray(log_weights, float))


def point_mass(a: float, c: float = 1.0) -> AtomicMeasure:
    return atomic([(a, c)])


@dataclass(frozen=True)
class PowerTailMeasure(Measure):
    """Density ``C*alpha*(1-x)**(alpha-1)`` on [x0, 1); mass C*(1-x0)**alpha."""

    coefficient: float
    alpha: float
    x0: float = 0.0

    def __post_init__(self):
        if self.coefficient <= 0.0:
            raise InvalidParameterError("power tail coefficient must be positive")
        if self.alpha <= 0.0:
            raise InvalidParameterError("power tail alpha must be positive")
        if not 0.0 <= self.x0 < 1.0:
            raise InvalidParameterError("x0 must lie in [0, 1)")

    @property
    def width(self) -> float:
        return 1.0 - self.x0

    def _log_moment(self, s: float) -> float:
        # C*alpha*B(s+1, alpha) times the regularized upper tail at x0
        v = math.log(self.coefficient) + math.log(self.alpha) + betaln(s + 1.0, self.alpha)
        if self.x0 > 0.0:
            upper = float(betaincc(s + 1.0, self.alpha, self.x0))
            if upper <= 0.0:
                return NEG_INF
            v += math.log(upper)
        return v

    def _tail_mass(self, eps: float) -> float:
        return self.coefficient * min(eps, self.width) ** self.alpha

    def _mass_above(self, b: float) -> float:
        if b >= 1.0:
            return 0.0
        return self.coefficient * min(1.0 - b, self.width) ** self.alpha

    def _restricted(self, eps: float) -> "PowerTailMeasure":
        return PowerTailMeasure(self.coefficient, self.alpha,
                                x0=max(self.x0, 1.0 - eps))

    def bounded_density_sup(self) -> float | None:
        if self.alpha < 1.0:
            return None
        if self.alpha == 1.0:
            return self.coefficient
        return self.coefficient * self.alpha * self.width ** (self.alpha - 1.0)

    def sublinear_norm_exact(self) -> float | None:
        if self.alpha < 1.0:
            return math.inf          # mu(J_eps)/eps = C eps^(alpha-1) blows up
        if self.alpha == 1.0:
            return self.coefficient
        return self.coefficient * self.width ** (self.alpha - 1.0)

    def _flatten_into(self, flat: FlatMeasure, log_scale: float) -> None:
        c = math.exp(log_scale) * self.coefficient * self.alpha
        a = self.alpha
        flat.pieces.append(
            (0.0, self.width, lambda t, c=c, a=a: c * t ** (a - 1.0), a < 1.0))

    def to_config(self) -> dict:
        return {"kind": "powertail", "C": float(self.coefficient),
                "alpha": float(self.alpha), "x0": float(self.x0)}


@dataclass(frozen=True)
class PiecewiseDensityMeasure(Measure):
    """Constant density per piece: density[i] on [breakpoints[i], breakpoints[i+1])."""

    breakpoints: np.ndarray
    densities: np.ndarray

    def __post_init__(self):
        bp = np.array(self.breakpoints, dtype=float)
        de = np.array(self.densities, dtype=float)
        if bp.ndim != 1 or bp.size < 2 or de.size != bp.size - 1:
            raise InvalidParameterError(
                "need k+1 breakpoints for k densities")
        if not np.all(np.diff(bp) > 0.0):
            raise InvalidParameterError("breakpoints must be strictly increasing")
        if bp[0] < 0.0 or bp[-1] > 1.0:
            raise InvalidParameterError("breakpoints must lie in [0, 1]")
        if np.any(de < 0.0) or not np.any(de > 0.0):
            raise InvalidParameterError("densities must be >= 0 with positive mass")
        bp.setflags(write=False)
        de.setflags(write=False)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "densities", de)

    def _log_moment(self, s: float) -> float:
        terms = []
        for lo, hi, h in zip(self.breakpoints[:-1], self.breakpoints[1:],
                             self.densities):
            if h <= 0.0:
                continue
            log_lo = math.log(lo) if lo > 0.0 else NEG_INF
            terms.append(math.log(h) + log_power_interval(s, log_lo, math.log(hi)))
        return log_sum(terms)

    def _tail_mass(self, eps: float) -> float:
        lo_cut = 1.0 - eps
        total = 0.0
        for lo, hi, h in zip(self.breakpoints[:-1], self.breakpoints[1:],
                             self.densities):
            seg = min(hi, 1.0) - max(lo, lo_cut)
            if seg > 0.0:
                total += h * seg
        return total

    def _mass_above(self, b: float) -> float:
        return self._tail_mass(1.0 - b) if b < 1.0 else 0.0

    def _restricted(self, eps: float) -> "Measure":
        lo_cut = 1.0 - eps
        bp = [lo_cut]
        de = []
        for lo, hi, h in zip(self.breakpoints[:-1], self.breakpoints[1:],
                             self.densities):
            lo2, hi2 = max(lo, lo_cut), hi
            if hi2 > lo2:
                if hi2 > bp[-1]:
                    bp.append(hi2)
                    de.append(h)
        if not de or not any(d > 0.0 for d in de):
            # empty restriction: represent as a zero atomic measure
            return AtomicMeasure(np.array([]), np.array([]))
        return PiecewiseDensityMeasure(np.array(bp), np.array(de))

    def bounded_density_sup(self) -> float:
        return float(self.densities.max())

    def sublinear_norm_exact(self) -> float:
        # mu(J_eps)/eps is monotone between breakpoints; sup over candidates
        # eps = 1 - b_i and the eps -> 0 limit (density of the last piece,
        # zero if the support ends before 1)
        candidates = [self.densities[-1] if self.breakpoints[-1] >= 1.0 else 0.0]
        for b in self.breakpoints[:-1]:
            eps = 1.0 - b
            if 0.0 < eps <= 1.0:
                candidates.append(self._tail_mass(eps) / eps)
        candidates.append(self._tail_mass(1.0))
        return max(candidates)

    def _flatten_into(self, flat: FlatMeasure, log_scale: float) -> None:
        scale = math.exp(log_scale)
        for lo, hi, h in zip(self.breakpoints[:-1], self.breakpoints[1:],
                             self.densities):
            if h > 0.0:
                val = scale * h
                flat.pieces.append(
                    (1.0 - hi, 1.0 - lo, lambda t, v=val: np.full_like(
                        np.asarray(t, dtype=float), v), False))

    def to_config(self) -> dict:
        return {"kind": "piecewise",
                "breakpoints": [float(b) for b in self.breakpoints],
                "densities": [float(d) for d in self.densities]}


def lebesgue() -> PiecewiseDensityMeasure:
    """Lebesgue measure on [0, 1]."""
    return PiecewiseDensityMeasure(np.array([0.0, 1.0]), np.array([1.0]))


@dataclass(frozen=True)
class ScaledMeasure(Measure):
    """c * inner for c > 0."""

    scale: float
    inner: Measure

    def __post_init__(self):
        if self.scale <= 0.0:
            raise InvalidParameterError("scale must be positive")

    def _log_moment(self, s: float) -> float:
        return math.log(self.scale) + self.inner.log_moment(s)

    def _tail_mass(self, eps: float) -> float:
        return self.scale * self.inner.tail_mass(eps)

    def _mass_above(self, b: float) -> float:
        return self.scale * self.inner.mass_above(b)

    def _restricted(self, eps: float) -> "ScaledMeasure":
        return ScaledMeasure(self.scale, self.inner.restricted_to_tail(eps))

    def bounded_density_sup(self) -> float | None:
        inner = self.inner.bounded_density_sup()
        return None if inner is None else self.scale * inner

    def sublinear_norm_exact(self) -> float | None:
        inner = self.inner.sublinear_norm_exact()
        return None if inner is None else self.scale * inner

    def _flatten_into(self, flat: FlatMeasure, log_scale: float) -> None:
        self.inner._flatten_into(flat, log_scale + math.log(self.scale))

    def to_config(self) -> dict:
        return {"kind": "scaled", "c": float(self.scale),
                "inner": self.inner.to_config()}


@dataclass(frozen=True)
class SumMeasure(Measure):
    """mu_1 + ... + mu_k."""

    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise InvalidParameterError("sum measure needs at least one part")
        object.__setattr__(self, "parts", tuple(self.parts))

    def _log_moment(self, s: float) -> float:
        return log_sum([p.log_moment(s) for p in self.parts])

    def _tail_mass(self, eps: float) -> float:
        return math.fsum(p.tail_mass(eps) for p in self.parts)

    def _mass_above(self, b: float) -> float:
        return math.fsum(p.mass_above(b) for p in self.parts)

    def _restricted(self, eps: float) -> "SumMeasure":
        return SumMeasure(tuple(p.restricted_to_tail(eps) for p in self.parts))

    def bounded_density_sup(self) -> float | None:
        sups = [p.bounded_density_sup() for p in self.parts]
        if any(s is None for s in sups):
            return None
        return math.fsum(sups)

    def _flatten_into(self, flat: FlatMeasure, log_scale: float) -> None:
        for p in self.parts:
            p._flatten_into(flat, log_scale)

    def to_config(self) -> dict:
        return {"kind": "sum", "parts": [p.to_config() for p in self.parts]}


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def moment(mu: Measure, s: float) -> float:
    """integral x**s dmu, log-represented internally (may underflow to 0)."""
    return mu.moment(s)


def tail_mass(mu: Measure, eps: float) -> float:
    """mu(J_eps) with J_eps = [1-eps, 1]."""
    return mu.tail_mass(eps)


def restrict_tail(mu: Measure, m: int) -> Measure:
    """The tail part mu'_m: the restriction of mu to J_{1/m}."""
    if m < 2:
        raise InvalidParameterError("m must be >= 2")
    return mu.restricted_to_tail(1.0 / m)


def default_epsilon_grid(levels: int = _DEFAULT_GRID_LEVELS) -> np.ndarray:
    """Geometric grid eps = 2**-j, j = 0..levels."""
    return 2.0 ** -np.arange(0, levels + 1, dtype=float)


@dataclass(frozen=True)
class PowerFit:
    """Least-squares fit of log mu(J_eps) = log C + alpha*log eps."""

    coefficient: float
    alpha: float
    residual: float
    trusted: bool        # alpha claim only when residual < RESIDUAL_THRESHOLD


RESIDUAL_THRESHOLD = 1e-3


@dataclass(frozen=True)
class ModulusReport:
    """Near-1 behavior of a measure sampled on a geometric eps-grid."""

    sublinear_norm: float
    sup_is_exact: bool       # False means grid-sup, a lower estimate
    vanishing: bool
    grid: np.ndarray
    ratios: np.ndarray
    power_fit: PowerFit | None


def modulus_report(mu: Measure, grid=None) -> ModulusReport:
    """Sublinear norm estimate, vanishing-trend flag and power-modulus fit.

    The sublinear norm is the analytic supremum of ``mu(J_eps)/eps`` where a
    closed form exists; otherwise it is the grid supremum, flagged as a lower
    estimate.  The vanishing flag is a monotone-decrease test of the tail
    ratios over the fine half of the grid.
    """
    grid = default_epsilon_grid() if grid is None else np.asarray(grid, float)
    if grid.size < 8:
        raise InvalidParameterError("eps grid needs at least 8 points")
    if np.any(grid <= 0.0) or np.any(grid > 1.0):
        raise InvalidParameterError("eps grid must lie in (0, 1]")
    grid = np.sort(grid)[::-1]           # decreasing eps
    masses = np.array([mu.tail_mass(e) for e in grid])
    ratios = masses / grid

    exact = mu.sublinear_norm_exact()
    if exact is not None:
        norm, is_exact = exact, True
    else:
        norm, is_exact = float(ratios.max()), False

    half = grid.size // 2
    tail_ratios = ratios[half:]
    nonincreasing = bool(np.all(np.diff(tail_ratios) <= 1e-12 * ratios.max()))
    vanishing = nonincreasing and (
        tail_ratios[-1] == 0.0
        or tail_ratios[-1] < tail_ratios[0] * (1.0 - 1e-9))

    fit = None
    positive = masses > 0.0
    if positive.sum() >= 3:
        x = np.log(grid[positive])
        y = np.log(masses[positive])
        slope, intercept = np.polyfit(x, y, 1)
        resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
        fit = PowerFit(coefficient=math.exp(intercept), alpha=float(slope),
                       residual=resid, trusted=resid < RESIDUAL_THRESHOLD)
    return ModulusReport(sublinear_norm=norm, sup_is_exact=is_exact,
                         vanishing=vanishing, grid=grid, ratios=ratios,
                         power_fit=fit)


@dataclass(frozen=True)
class RhoFunction:
    """Increasing C^1 majorant rho with rho(0) = 0, given with its derivative."""

    fn: object           # rho(eps)
    derivative: object   # rho'(u)
    label: str = "rho"


def power_rho(coefficient: float, alpha: float) -> RhoFunction:
    """rho(eps) = C * eps**alpha (alpha > 0)."""
    if coefficient <= 0.0 or alpha <= 0.0:
        raise InvalidParameterError("power rho needs positive C and alpha")
    return RhoFunction(
        fn=lambda e: coefficient * e ** alpha,
        derivative=lambda u: coefficient * alpha * np.asarray(u) ** (alpha - 1.0),
        label=f"{coefficient:g}*eps^{alpha:g}")


@dataclass(frozen=True)
class MajorizationCheck:
    lhs: float
    rhs: float
    holds: bool
    slack: float
    quadrature_error: float


def integrate_against(mu: Measure, g, *, order: int = 24) -> tuple[float, float]:
    """integral g dmu for a continuous g given as a vectorized callable of x.

    Atoms are evaluated directly (positions materialized from their logs, so
    extreme near-1 atoms lose position precision here; moment-type queries
    should use :meth:`Measure.log_moment` instead).  Density parts integrate
    in the tail variable with dyadic refinement toward 1.
    """
    flat = mu.flattened()
    total = 0.0
    err = 0.0
    if flat.has_atoms:
        pos = np.exp(flat.log_positions)
        wts = np.exp(flat.log_weights)
        total += float(np.dot(wts, np.asarray(g(pos), dtype=float)))
    for t_lo, t_hi, h, singular in flat.pieces:
        def integrand(t, h=h):
            return np.asarray(g(1.0 - np.asarray(t)), dtype=float) * h(t)
        if t_lo == 0.0:
            v, e = quadrature.integrate_refined_at_zero(integrand, t_hi, order=order)
        else:
            v, e = quadrature.integrate(integrand, t_lo, t_hi, order=order)
        total += v
        err += e
    return total, err


def rho_majorization_check(mu: Measure, rho: RhoFunction, g, *,
                           grid=None, tol: float = 1e-9) -> MajorizationCheck:
    """Check ``integral g dmu <= integral_0^1 g(x) rho'(1-x) dx``.

    The hypothesis ``mu(J_eps) <= rho(eps)`` is verified on the eps-grid
    first; failure raises :class:`HypothesisViolationError`.  ``g`` must be
    continuous, positive and increasing on [0, 1).
    """
    grid = default_epsilon_grid() if grid is None else np.asarray(grid, float)
    for eps in grid:
        bound = float(rho.fn(eps))
        if mu.tail_mass(eps) > bound * (1.0 + 1e-12) + 1e-300:
            raise HypothesisViolationError(
                f"mu(J_eps) = {mu.tail_mass(eps):.6g} exceeds rho(eps) = "
                f"{bound:.6g} at eps = {eps:.3g}")
    lhs, lhs_err = integrate_against(mu, g)

    def integrand(t):
        return np.asarray(g(1.0 - np.asarray(t)), dtype=float) \
            * np.asarray(rho.derivative(t), dtype=float)

    rhs, rhs_err = quadrature.integrate_refined_at_zero(integrand, 1.0)
    slack = rhs - lhs
    scale = max(1.0, abs(rhs))
    return MajorizationCheck(lhs=lhs, rhs=rhs,
                             holds=bool(lhs <= rhs + tol * scale),
                             slack=slack, quadrature_error=lhs_err + rhs_err)


def measure_from_config(spec: dict) -> Measure:
    """Build a measure from its config-file form.

    Accepted kinds: ``atomic``, ``powertail``, ``lebesgue``, ``piecewise``,
    ``scaled``, ``sum``.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InvalidParameterError("measure spec must be an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "atomic":
            return atomic([tuple(pair) for pair in spec["atoms"]])
        if kind == "powertail":
            return PowerTailMeasure(spec["C"], spec["alpha"],
                                    x0=spec.get("x0", 0.0))
        if kind == "lebesgue":
            return lebesgue()
        if kind == "piecewise":
            return PiecewiseDensityMeasure(np.asarray(spec["breakpoints"], float),
                                           np.asarray(spec["densities"], float))
        if kind == "scaled":
            return ScaledMeasure(spec["c"], measure_from_config(spec["inner"]))
        if kind == "sum":
            return SumMeasure(tuple(measure_from_config(p) for p in spec["parts"]))
    except KeyError as exc:
        raise InvalidParameterError(
            f"measure spec missing field {exc.args[0]!r}") from exc
    raise InvalidParameterError(f"unknown measure kind {kind!r}")
