"""Kerov-profile calculus: dispersive and convex action profiles.

A profile is a 1-Lipschitz function f(c) with slopes +-1 almost everywhere
and f(c) ~ |c - a| at infinity.  Piecewise-linear profiles are stored
through their interlaced local extrema; convex profiles (which generically
have absolutely continuous Rayleigh measure) are stored through a sampled
pushforward of the uniform measure on the circle.  The two representations
share the T-up observable

    T(u) = prod_i (u - S_i_max) / prod_j (u - S_j_min)   (discrete case)
    T(u) = exp( (1/2pi) int log(1/(u - v(x))) dx )       (convex case)

which is the Stieltjes transform of the transition measure and the basis of
the Markov-Krein correspondence and of the weak distance used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .symbol import FourierSymbol, evaluate_on_grid, mean as symbol_mean

POLE_TOL = 1e-12
DISTANCE_IMAG_MIN = 0.5
TRANSITION_MASS_TOL = 1e-10


class ProfileError(ValueError):
    """Extrema data that does not describe a profile."""


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    """Atoms (location, weight), kept sorted by location.

    Serves both for transition measures (positive weights, unit mass) and
    for the +-1 jump measures of spectral shift functions.
    """

    locations: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        locs = np.asarray(self.locations, dtype=float)
        wts = np.asarray(self.weights, dtype=float)
        if locs.shape != wts.shape or locs.ndim != 1:
            raise ProfileError("locations and weights must be 1-d and matching")
        order = np.argsort(locs, kind="stable")
        locs = locs[order].copy()
        wts = wts[order].copy()
        locs.flags.writeable = False
        wts.flags.writeable = False
        object.__setattr__(self, "locations", locs)
        object.__setattr__(self, "weights", wts)

    def total_mass(self) -> float:
        return float(math.fsum(self.weights))

    def cumulative(self, c):
        """Sum of weights at locations <= c (the step function of the atoms)."""
        csum = np.concatenate(([0.0], np.cumsum(self.weights)))
        idx = np.searchsorted(self.locations, np.asarray(c, dtype=float),
                              side="right")
        out = csum[idx]
        return float(out) if np.isscalar(c) else out

    def moment(self, p: int) -> float:
        return float(np.sum(self.weights * self.locations ** p))

    def stieltjes(self, u: complex) -> complex:
        """sum w_i / (u - x_i)."""
        return complex(np.sum(self.weights / (u - self.locations)))


@dataclass(frozen=True, eq=False)
class Profile:
    """Piecewise-linear profile through descending interlaced extrema.

    ``minima`` holds the local minima S_up (one more entry than ``maxima``,
    the local maxima S_down); descending order with strict interlacing
    minima[0] > maxima[0] > minima[1] > ... is enforced.  ``truncated``
    marks a finite window of a possibly infinite extrema set, as produced
    from truncated Lax spectra.
    """

    center: float
    maxima: np.ndarray
    minima: np.ndarray
    truncated: bool

    def __post_init__(self):
        mx = np.asarray(self.maxima, dtype=float).copy()
        mn = np.asarray(self.minima, dtype=float).copy()
        if len(mn) != len(mx) + 1:
            raise ProfileError(
                f"need one more minimum than maxima, got {len(mn)} vs {len(mx)}"
            )
        merged = np.empty(len(mn) + len(mx))
        merged[0::2] = mn
        merged[1::2] = mx
        if len(merged) > 1 and not np.all(np.diff(merged) < 0):
            raise ProfileError("extrema must strictly interlace in descending "
                               "order: S0_min > S1_max > S1_min > ...")
        mx.flags.writeable = False
        mn.flags.writeable = False
        object.__setattr__(self, "maxima", mx)
        object.__setattr__(self, "minima", mn)
        object.__setattr__(self, "center", float(self.center))

    @property
    def gap_count(self) -> int:
        return len(self.maxima)

    def gaps(self) -> list[tuple[float, float]]:
        """Open intervals (S_i_min, S_i_max) of slope +1, widest first order
        following the extrema: gap i is (minima[i], maxima[i-1])."""
        return [(float(self.minima[i]), float(self.maxima[i - 1]))
                for i in range(1, len(self.minima))]

    def bands(self) -> list[tuple[float, float]]:
        """Finite closed intervals [S_i_max, S_{i-1}_min] of slope -1."""
        return [(float(self.maxima[i - 1]), float(self.minima[i - 1]))
                for i in range(1, len(self.minima))]

    def heights(self, c):
        """The piecewise-linear f(c), reconstructed from the extrema.

        Above the top minimum f follows the asymptote c - center exactly;
        below the last recorded minimum the slope -1 band continues.
        """
        nodes = np.empty(len(self.minima) + len(self.maxima))
        nodes[0::2] = self.minima
        nodes[1::2] = self.maxima
        fvals = np.empty_like(nodes)
        fvals[0] = nodes[0] - self.center
        steps = -np.diff(nodes)  # positive spacings walking down
        signs = np.where(np.arange(len(steps)) % 2 == 0, +1.0, -1.0)
        fvals[1:] = fvals[0] + np.cumsum(signs * steps)
        xs = nodes[::-1]
        ys = fvals[::-1]
        c_arr = np.asarray(c, dtype=float)
        out = np.interp(c_arr, xs, ys)
        out = np.where(c_arr > nodes[0], c_arr - self.center, out)
        out = np.where(c_arr < nodes[-1], fvals[-1] + (nodes[-1] - c_arr), out)
        return float(out) if np.isscalar(c) else out

    def t_up(self, u: complex) -> complex:
        u = complex(u)
        if np.min(np.abs(u - self.minima)) < POLE_TOL:
            raise ProfileError(f"u = {u:g} is within {POLE_TOL:g} of a pole")
        num = np.prod(u - self.maxima) if len(self.maxima) else 1.0
        return complex(num / np.prod(u - self.minima))


def profile_from_spectra(sp, mean: float, delta_gap: float) -> Profile:
    """Dispersive action profile of interlaced Lax spectra.

    Pairs (C_h_up, C_h_down) narrower than delta_gap cancel, mirroring the
    exact cancellation of matched eigenvalues; survivors become the gap
    extrema.  The top eigenvalue C_0_up always survives as the first
    minimum, and the result is flagged as a truncated window.
    """
    up = np.asarray(sp.up, dtype=float)
    down = np.asarray(sp.down, dtype=float)
    keep = (down - up[1:]) >= delta_gap
    minima = np.concatenate(([up[0]], up[1:][keep]))
    maxima = down[keep]
    return Profile(center=float(mean), maxima=maxima, minima=minima,
                   truncated=True)


def t_up_observable(p, u: complex) -> complex:
    """T(u) for either profile representation (|Im u| > 0 required)."""
    u = complex(u)
    if u.imag == 0.0:
        raise ProfileError("T(u) requires u off the real axis")
    return p.t_up(u)


def transition_measure(p: Profile) -> DiscreteMeasure:
    """Partial-fraction residues of T(u): atoms at the minima.

    Only complete profiles carry a discrete transition measure here; the
    residues are positive exactly when the extrema interlace, and they sum
    to one because u*T(u) -> 1.
    """
    if p.truncated:
        raise ProfileError("transition measure needs a complete profile, "
                           "not a truncated window")
    weights = np.empty(len(p.minima))
    for i, s in enumerate(p.minima):
        num = np.prod(s - p.maxima) if len(p.maxima) else 1.0
        den = np.prod(np.delete(s - p.minima, i))
        weights[i] = num / den
    if np.any(weights <= 0):
        raise ProfileError("negative residue: extrema do not interlace")
    if abs(math.fsum(weights) - 1.0) > TRANSITION_MASS_TOL:
        raise ProfileError(
            f"transition weights sum to {math.fsum(weights):.15f}, not 1"
        )
    return DiscreteMeasure(locations=p.minima, weights=weights)


def profile_from_transition_measure(m: DiscreteMeasure) -> Profile:
    """Markov-Krein inverse for finitely supported probability measures.

    The Stieltjes transform sum w_i / (u - s_i) is P(u)/Q(u) with monic
    Q(u) = prod (u - s_i) and monic P of one degree less than Q times the
    total mass; the profile has minima at the atoms and maxima at the roots
    of P, which interlace whenever the weights are positive.
    """
    if np.any(m.weights <= 0):
        raise ProfileError("transition measure must have positive weights")
    if abs(m.total_mass() - 1.0) > TRANSITION_MASS_TOL:
        raise ProfileError(
            f"transition measure has mass {m.total_mass():.15f}, not 1"
        )
    minima = m.locations[::-1]  # descending
    if len(minima) == 1:
        return Profile(center=float(minima[0]), maxima=np.array([]),
                       minima=minima, truncated=False)
    numer = np.zeros(len(minima))
    for i in range(len(minima)):
        numer = np.polyadd(numer, m.weights[::-1][i]
                           * np.poly(np.delete(minima, i)))
    roots = np.roots(numer)
    if np.abs(roots.imag).max() > 1e-8 * max(1.0, np.abs(roots).max()):
        raise ProfileError("numerator roots are not real: measure is not a "
                           "transition measure of an interlacing profile")
    maxima = np.sort(roots.real)[::-1]
    center = float(np.sum(m.weights * m.locations))
    return Profile(center=center, maxima=maxima, minima=minima,
                   truncated=False)


def exp_series_from_logmoments(o: np.ndarray) -> np.ndarray:
    """Coefficients E_0..E_p of exp(sum_k o_k x^k / k) as a power series.

    Newton's recurrence: n E_n = sum_{k=1}^{n} o_k E_{n-k}.
    """
    o = np.asarray(o, dtype=float)
    e = np.zeros(len(o) + 1)
    e[0] = 1.0
    for n in range(1, len(o) + 1):
        e[n] = np.dot(o[:n], e[n - 1::-1]) / n
    return e


def moments_and_logmoments(p: Profile, pmax: int):
    """Transition-measure moments T_l and log moments O_p, l, p <= pmax.

    T_l is the l-th moment of the transition measure; O_p is the p-th power
    sum of the shifted Rayleigh jumps, sum minima^p - sum maxima^p.  They are
    tied by u*T(u) = exp(sum O_p u^{-p} / p), which is re-verified here as a
    formal series before returning.
    """
    if pmax > 20:
        raise ProfileError("moment order above 20 is not numerically reliable")
    tm = transition_measure(p)
    t_moments = np.array([tm.moment(el) for el in range(pmax + 1)])
    o_moments = np.array([
        float(np.sum(p.minima ** q) - np.sum(p.maxima ** q))
        for q in range(1, pmax + 1)
    ])
    exp_side = exp_series_from_logmoments(o_moments)
    scale = np.maximum(1.0, np.abs(t_moments))
    worst = float(np.max(np.abs(exp_side - t_moments) / scale))
    if worst > 1e-6:
        raise ProfileError(
            f"moment / log-moment consistency failed at relative {worst:.3e}"
        )
    return t_moments, o_moments


@dataclass(frozen=True, eq=False)
class ConvexProfile:
    """Convex profile sampled as a weighted value cloud.

    ``values`` are samples of the symbol (or of an evolved field) and
    ``weights`` the quadrature weights of the pushforward, summing to one.
    The Rayleigh function, the height function, and the T-up observable are
    all read from this cloud:

        F(c) = sum of weights at values <= c      (monotone, 0 to 1)
        f(c) = sum_j w_j |c - v_j|                (convex, slope +-1 outside)
        T(u) = exp(-sum_j w_j log(u - v_j))       (geometric mean of 1/(u-v))
    """

    center: float
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        wts = np.asarray(self.weights, dtype=float)
        if vals.shape != wts.shape or vals.ndim != 1 or len(vals) == 0:
            raise ProfileError("values and weights must be matching 1-d arrays")
        if np.any(wts <= 0):
            raise ProfileError("pushforward weights must be positive")
        total = math.fsum(wts)
        if abs(total - 1.0) > 1e-8:
            raise ProfileError(f"weights sum to {total:.12f}, expected 1")
        wts = wts / total
        order = np.argsort(vals, kind="stable")
        vals = vals[order].copy()
        wts = wts[order].copy()
        vals.flags.writeable = False
        wts.flags.writeable = False
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", wts)
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "_cum_w",
                           np.concatenate(([0.0], np.cumsum(wts))))
        object.__setattr__(self, "_cum_wv",
                           np.concatenate(([0.0], np.cumsum(wts * vals))))

    @property
    def support(self) -> tuple[float, float]:
        return float(self.values[0]), float(self.values[-1])

    def rayleigh(self, c):
        """F(c): pushforward mass of {v <= c}."""
        idx = np.searchsorted(self.values, np.asarray(c, dtype=float),
                              side="right")
        out = self._cum_w[idx]
        return float(out) if np.isscalar(c) else out

    def heights(self, c):
        """f(c) = sum_j w_j |c - v_j|, evaluated by prefix sums."""
        c_arr = np.asarray(c, dtype=float)
        idx = np.searchsorted(self.values, c_arr, side="right")
        below_w = self._cum_w[idx]
        below_wv = self._cum_wv[idx]
        total_wv = self._cum_wv[-1]
        out = (c_arr * below_w - below_wv) + (total_wv - below_wv) \
            - c_arr * (1.0 - below_w)
        return float(out) if np.isscalar(c) else out

    def t_up(self, u: complex) -> complex:
        u = complex(u)
        if u.imag == 0.0:
            raise ProfileError("T(u) requires u off the real axis")
        return complex(np.exp(-np.sum(self.weights * np.log(u - self.values))))


def convex_profile_from_symbol(v: FourierSymbol, grid: int) -> ConvexProfile:
    """Convex action profile of v: pushforward of uniform measure along v.

    Uniform x-quadrature with ``grid`` points; the height and Rayleigh
    functions inherit an O(grid^-2) quadrature error from the kinks of
    |c - v(x)|, the T-up observable is spectrally accurate.
    """
    if grid < 256:
        raise ProfileError("need at least 256 quadrature points")
    vals = evaluate_on_grid(v, grid)
    wts = np.full(grid, 1.0 / grid)
    return ConvexProfile(center=symbol_mean(v), values=vals, weights=wts)


def convex_profile_from_samples(values, weights) -> ConvexProfile:
    """Convex profile of a weighted sample cloud (e.g. an evolved field)."""
    values = np.asarray(values, dtype=float)
    weights = np.asarray(weights, dtype=float)
    center = float(np.sum(values * weights) / math.fsum(weights))
    return ConvexProfile(center=center, values=values, weights=weights)


def profile_distance(p, q, test_points) -> float:
    """max_u |log(u T_p(u)) - log(u T_q(u))| over the test points.

    Well-defined with principal logs because u*T(u) tends to 1 at infinity
    and never vanishes off the real axis.  Test points must satisfy
    |Im u| >= 0.5 to stay clear of the spectra.
    """
    worst = 0.0
    for u in test_points:
        u = complex(u)
        if abs(u.imag) < DISTANCE_IMAG_MIN:
            raise ProfileError(
                f"distance test points need |Im u| >= {DISTANCE_IMAG_MIN}, "
                f"got {u:g}"
            )
        lp = np.log(u * t_up_observable(p, u))
        lq = np.log(u * t_up_observable(q, u))
        worst = max(worst, abs(lp - lq))
    return float(worst)


# --- JSON schema -----------------------------------------------------------
#
# {"center": float, "maxima": [...], "minima": [...], "truncated": bool}


def profile_to_json_dict(p: Profile) -> dict:
    return {
        "center": p.center,
        "maxima": [float(x) for x in p.maxima],
        "minima": [float(x) for x in p.minima],
        "truncated": bool(p.truncated),
    }


def profile_from_json_dict(data: dict) -> Profile:
    try:
        return Profile(
            center=float(data["center"]),
            maxima=np.asarray(data["maxima"], dtype=float),
            minima=np.asarray(data["minima"], dtype=float),
            truncated=bool(data["truncated"]),
        )
    except KeyError as exc:
        raise ProfileError(f"profile JSON missing field {exc}") from exc
