"""Small-dispersion limit toolkit.

Three independent oracles meet here: the Szego geometric mean of 1/(u - v)
(the small-dispersion limit of the conserved resolvent averages), the
method-of-characteristics conservation of sublevel measures for the
dispersionless equation, and the closed forms of the sinusoidal case (the
Jacobi difference equation and the Vershik-Kerov / Logan-Shepp curve).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import lax
from .profiles import ConvexProfile, convex_profile_from_samples
from .symbol import FourierSymbol, cosine, derivative_on_grid, \
    evaluate_on_grid, _grid_extremum

SZEGO_MIN_POINTS = 512
BREAKING_MARGIN = 0.9
RECURRENCE_IMAG_MIN = 2.0


class BreakingTimeError(ValueError):
    """Requested time at or beyond the estimated characteristic crossing."""

    def __init__(self, t: float, estimate: float):
        self.estimate = estimate
        super().__init__(
            f"time {t:g} is beyond the usable window "
            f"{BREAKING_MARGIN:g} * {estimate:g} before characteristics cross"
        )


def szego_geometric_mean(v: FourierSymbol, u: complex,
                         quad_points: int = 2048) -> complex:
    """exp( (1/2pi) int log(1/(u - v(theta))) dtheta ).

    Trapezoid quadrature on a uniform grid; the integrand is smooth and
    periodic for u off the real axis, so the rule converges spectrally.
    """
    u = complex(u)
    if u.imag == 0.0:
        raise ValueError("geometric mean requires u off the real axis")
    if quad_points < SZEGO_MIN_POINTS:
        raise ValueError(f"need at least {SZEGO_MIN_POINTS} quadrature points")
    vals = evaluate_on_grid(v, quad_points)
    return complex(np.exp(-np.mean(np.log(u - vals))))


@dataclass(frozen=True, eq=False)
class DispersionSweep:
    """A symbol, a decreasing ladder of eps values, and resolvent test
    points off the real axis."""

    symbol: FourierSymbol
    eps_list: tuple
    u_grid: tuple

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps_list)
        us = tuple(complex(u) for u in self.u_grid)
        if not eps or any(e <= 0 for e in eps):
            raise ValueError("eps_list must hold positive values")
        if len(eps) > 1 and not all(a > b for a, b in zip(eps, eps[1:])):
            raise ValueError("eps_list must be strictly decreasing")
        if any(abs(u.imag) < 0.5 for u in us):
            raise ValueError("sweep test points need |Im u| >= 0.5")
        object.__setattr__(self, "eps_list", eps)
        object.__setattr__(self, "u_grid", us)


@dataclass(frozen=True)
class SweepRow:
    eps: float
    u: complex
    phi: complex
    target: complex
    abs_err: float
    converged: bool


@dataclass(frozen=True)
class SweepResult:
    rows: list
    eps_list: tuple
    u_grid: tuple
    monotone: dict = field(default_factory=dict)

    def errors(self) -> np.ndarray:
        """abs_err as an (eps, u) table in sweep order."""
        out = np.array([r.abs_err for r in self.rows])
        return out.reshape(len(self.eps_list), len(self.u_grid))


def dispersion_sweep(sweep: DispersionSweep, trunc_tol: float = 1e-8,
                     m: int = 10, n_start: int = 128,
                     n_cap: int = 4096) -> SweepResult:
    """Tabulate |phi(u; eps) - geometric mean| down the eps ladder.

    For every eps the Lax truncation is chosen adaptively; the limit target
    is the Szego geometric mean, which does not depend on eps.  A per-u flag
    records whether the error column decreases monotonically.
    """
    targets = {u: szego_geometric_mean(sweep.symbol, u)
               for u in sweep.u_grid}
    rows = []
    for eps in sweep.eps_list:
        tr = lax.adaptive_truncation(sweep.symbol, eps, trunc_tol, m=m,
                                     n_start=n_start, n_cap=n_cap)
        for u in sweep.u_grid:
            phi = lax.baker_akhiezer_average(tr.pair, u)
            rows.append(SweepRow(
                eps=eps, u=u, phi=phi, target=targets[u],
                abs_err=abs(phi - targets[u]), converged=tr.converged,
            ))
    monotone = {}
    for j, u in enumerate(sweep.u_grid):
        col = [rows[i * len(sweep.u_grid) + j].abs_err
               for i in range(len(sweep.eps_list))]
        monotone[u] = all(a >= b for a, b in zip(col, col[1:]))
    return SweepResult(rows=rows, eps_list=sweep.eps_list,
                       u_grid=sweep.u_grid, monotone=monotone)


def breaking_time_estimate(v: FourierSymbol, grid: int = 4096) -> float:
    """1 / max(-v'), the time when characteristics of v_t + v v_x = 0 cross."""
    slope = -derivative_on_grid(v, max(grid, 4 * v.max_mode + 1))
    peak = _grid_extremum(slope, +1.0)
    if peak <= 0.0:
        return float("inf")
    return 1.0 / peak


@dataclass(frozen=True)
class BurgersReport:
    """Moment table of the dispersionless evolution along characteristics."""

    drift: float
    moments: np.ndarray  # shape (len(times), l_max)
    times: list
    l_max: int
    breaking_time: float


def burgers_conservation_check(v0: FourierSymbol, t_list, l_max: int,
                               grid: int = 4096) -> BurgersReport:
    """Moments int v(x,t)^l dx / 2pi along the characteristic flow.

    The evolved field is v(x0 + t v0(x0), t) = v0(x0); the change of
    variables turns each moment into a fixed-grid quadrature with Jacobian
    weight 1 + t v0'(x0), which the trapezoid rule evaluates exactly for
    trigonometric polynomials.  Every requested time must sit below the
    estimated breaking time with a 10 percent safety margin.
    """
    if l_max > 8:
        raise ValueError("moment order above 8 is not supported")
    t_break = breaking_time_estimate(v0)
    times = [float(t) for t in t_list]
    for t in times:
        if t >= BREAKING_MARGIN * t_break:
            raise BreakingTimeError(t, t_break)
    m = max(grid, 4 * v0.max_mode + 1)
    vals = evaluate_on_grid(v0, m)
    slope = derivative_on_grid(v0, m)
    table = np.empty((len(times), l_max))
    for i, t in enumerate(times):
        jac = 1.0 + t * slope
        for el in range(1, l_max + 1):
            table[i, el - 1] = np.mean(vals ** el * jac)
    drift = float(np.max(table.max(axis=0) - table.min(axis=0))) \
        if len(times) > 1 else 0.0
    return BurgersReport(drift=drift, moments=table, times=times,
                         l_max=l_max, breaking_time=t_break)


def evolved_convex_profile(v0: FourierSymbol, t: float,
                           grid: int = 4096) -> ConvexProfile:
    """Convex action profile of the characteristic-evolved field at time t."""
    t_break = breaking_time_estimate(v0)
    if t >= BREAKING_MARGIN * t_break:
        raise BreakingTimeError(t, t_break)
    m = max(grid, 4 * v0.max_mode + 1)
    vals = evaluate_on_grid(v0, m)
    jac = 1.0 + t * derivative_on_grid(v0, m)
    return convex_profile_from_samples(vals, jac / m)


@dataclass(frozen=True)
class RecurrenceRow:
    eps: float
    u: complex
    t_value: complex
    residual: float          # |T(u+eps) + 1/T(u) - u|
    residual_flipped: float  # |T(u+eps) + 1/T(u) + u|
    n_used: int


def sinusoidal_functional_equation(eps: float, trunc_tol: float = 1e-8,
                                   u_grid=(2j, 3j), n_start: int = 1024,
                                   n_cap: int = 4096) -> list[RecurrenceRow]:
    """Residuals of the Jacobi difference equation for the 2 cos x symbol.

    The truncated Lax matrix of 2 cos x is the tridiagonal Jacobi matrix
    with diagonal -h*eps and off-diagonal 1, whose resolvent average obeys
    T(u + eps) + 1/T(u) - u = 0 in the truncation limit; that convention is
    fixed by expanding the resolvent of explicit 2x2 and 3x3 truncations.
    The residual of the opposite sign (+u) is tabulated alongside.
    """
    us = [complex(u) for u in u_grid]
    for u in us:
        if u.imag < RECURRENCE_IMAG_MIN:
            raise ValueError(
                f"recurrence test points need Im u >= {RECURRENCE_IMAG_MIN:g}"
            )
    tr = lax.adaptive_truncation(cosine(2.0), eps, trunc_tol, m=10,
                                 n_start=n_start, n_cap=n_cap)
    rows = []
    for u in us:
        t_u = lax.baker_akhiezer_average(tr.pair, u)
        t_ue = lax.baker_akhiezer_average(tr.pair, u + eps)
        if abs(t_u) < 1e-12:
            raise ZeroDivisionError(f"|T({u:g})| below 1e-12")
        rows.append(RecurrenceRow(
            eps=float(eps), u=u, t_value=t_u,
            residual=abs(t_ue + 1.0 / t_u - u),
            residual_flipped=abs(t_ue + 1.0 / t_u + u),
            n_used=tr.n,
        ))
    return rows


def vkls_profile(c):
    """The Vershik-Kerov / Logan-Shepp curve.

    (2/pi)(c arcsin(c/2) + sqrt(4 - c^2)) on [-2, 2], |c| outside: the
    convex action profile of 2 cos x and the weak limit of its dispersive
    action profiles.
    """
    c_arr = np.asarray(c, dtype=float)
    inside = np.abs(c_arr) <= 2.0
    c_in = np.where(inside, c_arr, 0.0)
    curve = (2.0 / np.pi) * (c_in * np.arcsin(0.5 * c_in)
                             + np.sqrt(np.maximum(4.0 - c_in ** 2, 0.0)))
    out = np.where(inside, curve, np.abs(c_arr))
    return float(out) if np.isscalar(c) else out
