"""Periodic multi-phase waves and their finite-gap verification.

The n-phase solutions are rational functions of n exponential phases built
from 2n+1 interlaced singularity parameters

    s_n_up < s_n_dn < ... < s_1_up < s_1_dn < s_0_up

and n phase shifts chi_i.  The wave is assembled from an n x n matrix of
phase exponentials through the log-derivative of its determinant; its
dispersive action profile collapses onto the piecewise-linear profile with
minima {s_i_up} and maxima {s_i_dn} (the Dobrokhotov-Krichever profile),
which is what :func:`verify_finite_gap` checks numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lax
from .profiles import Profile, profile_from_spectra
from .symbol import FourierSymbol, evaluate as symbol_evaluate, \
    symbol_from_samples, mean as symbol_mean

WAVENUMBER_TOL = 1e-9
DET_FLOOR = 1e-13
FIT_RESIDUAL_TOL = 1e-8


class MultiPhaseError(ValueError):
    """Invalid singularity parameters."""


class NearSingularWaveError(ArithmeticError):
    """The phase determinant collapsed; retry with a perturbed x."""


@dataclass(frozen=True, eq=False)
class MultiPhaseParams:
    """eps, the 2n+1 ordered singularities s, and the n phases chi.

    ``s`` is stored ascending, from s_n_up to s_0_up.  Periodicity of the
    wave requires every wavenumber k_i = (s_{i-1}_up - s_i_dn)/eps to be a
    positive integer; quasi-periodic parameter choices are rejected.
    """

    eps: float
    s: np.ndarray
    chi: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float).copy()
        chi = np.asarray(self.chi, dtype=float).copy()
        if self.eps <= 0:
            raise MultiPhaseError("eps must be positive")
        if s.ndim != 1 or len(s) % 2 == 0:
            raise MultiPhaseError("s must hold 2n+1 ordered reals")
        if len(chi) != (len(s) - 1) // 2:
            raise MultiPhaseError(
                f"need {(len(s) - 1) // 2} phases for {len(s)} singularities"
            )
        if len(s) > 1 and not np.all(np.diff(s) > 0):
            raise MultiPhaseError("singularities must be strictly increasing "
                                  "as written: s_n_up < s_n_dn < ... < s_0_up")
        s.flags.writeable = False
        chi.flags.writeable = False
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "eps", float(self.eps))
        for i in range(1, self.n + 1):
            k = (self.s_up(i - 1) - self.s_down(i)) / self.eps
            if abs(k - round(k)) > WAVENUMBER_TOL or round(k) < 1:
                raise MultiPhaseError(
                    f"wavenumber k_{i} = {k:.12g} is not a positive integer; "
                    "the wave would not be 2*pi-periodic"
                )

    @property
    def n(self) -> int:
        return (len(self.s) - 1) // 2

    def s_up(self, i: int) -> float:
        """Local-minimum parameter s_i_up, i = 0..n."""
        return float(self.s[2 * (self.n - i)])

    def s_down(self, i: int) -> float:
        """Local-maximum parameter s_i_dn, i = 1..n."""
        return float(self.s[2 * (self.n - i) + 1])

    def wavenumbers(self) -> np.ndarray:
        """Integer k_i = (s_{i-1}_up - s_i_dn)/eps, i = 1..n."""
        return np.array([
            round((self.s_up(i - 1) - self.s_down(i)) / self.eps)
            for i in range(1, self.n + 1)
        ], dtype=float)

    def wavespeeds(self) -> np.ndarray:
        """(s_i_dn + s_{i-1}_up)/2: the band midpoints of the profile."""
        return np.array([
            0.5 * (self.s_down(i) + self.s_up(i - 1))
            for i in range(1, self.n + 1)
        ])

    def amplitudes(self) -> np.ndarray:
        """The positive phase amplitudes Z_i; every radicand is checked."""
        z = np.empty(self.n)
        for i in range(1, self.n + 1):
            lead = (self.s_up(i - 1) - self.s_up(self.n)) \
                / (self.s_down(i) - self.s_up(self.n))
            if lead <= 0:
                raise MultiPhaseError(f"non-positive radicand in Z_{i}")
            acc = np.sqrt(lead)
            for j in range(1, self.n + 1):
                if j == i:
                    continue
                ratio = ((self.s_down(i) - self.s_down(j))
                         * (self.s_up(i - 1) - self.s_up(j - 1))) \
                    / ((self.s_up(i - 1) - self.s_down(j))
                       * (self.s_down(i) - self.s_up(j - 1)))
                if ratio <= 0:
                    raise MultiPhaseError(f"non-positive radicand in Z_{i}")
                acc *= np.sqrt(ratio)
            z[i - 1] = acc
        return z

    @property
    def center(self) -> float:
        """s_n_up plus the total band length: the profile asymptote center."""
        return self.s_up(self.n) + sum(
            self.s_up(i - 1) - self.s_down(i) for i in range(1, self.n + 1)
        )


def dk_profile(params: MultiPhaseParams) -> Profile:
    """The complete profile with maxima {s_i_dn} and minima {s_i_up}."""
    n = params.n
    maxima = np.array([params.s_down(i) for i in range(1, n + 1)])
    minima = np.array([params.s_up(i) for i in range(0, n + 1)])
    return Profile(center=params.center, maxima=maxima, minima=minima,
                   truncated=False)


def evaluate_wave(params: MultiPhaseParams, x, t: float):
    """The n-phase wave v(x, t), for scalar or array x.

    v = s_n_up - sum_i (s_{i-1}_up - s_i_dn) + 2 eps Im tr(M^{-1} dM/dx)
    with M_ij = (-1 + delta_ij Z_i e^{i theta_i}) / (s_{i-1}_up - s_j_dn) and
    theta_i = k_i (x - chi_i - speed_i t).  The x-derivative is analytic
    (each diagonal phase differentiates to i k_i times itself).  The sign of
    the Im term is oriented so the spatial mean equals the profile center.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    n = params.n
    if n == 0:
        out = np.full(x_arr.shape, params.s_up(0))
        return float(out[0]) if np.isscalar(x) else out.reshape(np.shape(x))

    k = params.wavenumbers()
    speeds = params.wavespeeds()
    z = params.amplitudes()
    s_up_prev = np.array([params.s_up(i - 1) for i in range(1, n + 1)])
    s_dn = np.array([params.s_down(i) for i in range(1, n + 1)])

    base = -1.0 / (s_up_prev[:, None] - s_dn[None, :])
    theta = k[None, :] * (x_arr[:, None] - params.chi[None, :]
                          - speeds[None, :] * t)
    diag = (z[None, :] / (s_up_prev - s_dn)[None, :]) * np.exp(1j * theta)

    m = np.broadcast_to(base, (len(x_arr), n, n)).astype(complex).copy()
    idx = np.arange(n)
    m[:, idx, idx] += diag

    dets = np.linalg.det(m)
    if np.min(np.abs(dets)) < DET_FLOOR:
        raise NearSingularWaveError(
            f"|det M| = {np.min(np.abs(dets)):.3e} below {DET_FLOOR:g}; "
            "retry with a perturbed x"
        )
    inv = np.linalg.inv(m)
    trace = np.sum(inv[:, idx, idx] * (1j * k[None, :]) * diag, axis=1)

    const = params.s_up(n) - float(np.sum(s_up_prev - s_dn))
    out = const + 2.0 * params.eps * trace.imag
    return float(out[0]) if np.isscalar(x) else out.reshape(np.shape(x))


def fit_wave_symbol(params: MultiPhaseParams, t: float,
                    keep_tol: float = 1e-12,
                    residual_tol: float = FIT_RESIDUAL_TOL,
                    m_cap: int = 1 << 14):
    """Fourier symbol of the wave at time t, with the fit residual.

    Multi-phase waves are rational in e^{ix}, so their Fourier tails decay
    geometrically but are not finitely supported; the sample count doubles
    until the reconstruction residual on a twice-finer grid drops below
    ``residual_tol`` (or the cap is reached, leaving the residual to the
    caller to judge).
    """
    kmax = int(params.wavenumbers().max()) if params.n else 1
    m = 256
    while m < 16 * kmax:
        m *= 2
    while True:
        xs = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
        sym = symbol_from_samples(evaluate_wave(params, xs, t), keep_tol)
        fine = np.linspace(0.0, 2.0 * np.pi, 2 * m, endpoint=False)
        residual = float(np.max(np.abs(
            evaluate_wave(params, fine, t) - symbol_evaluate(sym, fine)
        )))
        if residual <= residual_tol or m >= m_cap:
            return sym, residual
        m *= 2


@dataclass(frozen=True)
class FiniteGapReport:
    """Outcome of checking the profile of a multi-phase wave against its
    predicted extrema."""

    passes: bool
    conclusive: bool
    fit_residual: float
    endpoint_error: float
    spurious_gap_width: float
    n_used: int
    truncation_converged: bool
    delta_gap: float
    gaps: list
    predicted_gaps: list

    def to_json_dict(self) -> dict:
        return {
            "passes": self.passes,
            "conclusive": self.conclusive,
            "fit_residual": self.fit_residual,
            "endpoint_error": self.endpoint_error,
            "spurious_gap_width": self.spurious_gap_width,
            "n_used": self.n_used,
            "truncation_converged": self.truncation_converged,
            "delta_gap": self.delta_gap,
            "gaps": [[lo, hi] for lo, hi in self.gaps],
            "predicted_gaps": [[lo, hi] for lo, hi in self.predicted_gaps],
        }


def _match_gaps(computed, predicted, top_error):
    """Greedy nearest-midpoint matching; returns (endpoint_err, spurious)."""
    remaining = list(computed)
    endpoint_err = top_error
    for plo, phi in predicted:
        if not remaining:
            endpoint_err = max(endpoint_err, phi - plo)
            continue
        pmid = 0.5 * (plo + phi)
        j = min(range(len(remaining)),
                key=lambda q: abs(0.5 * (remaining[q][0] + remaining[q][1])
                                  - pmid))
        clo, chi = remaining.pop(j)
        endpoint_err = max(endpoint_err, abs(clo - plo), abs(chi - phi))
    spurious = max((hi - lo for lo, hi in remaining), default=0.0)
    return endpoint_err, spurious


def verify_finite_gap(params: MultiPhaseParams, tol: float = 1e-6,
                      trunc_tol: float = 1e-8, n_cap: int = 2048,
                      top: int = 48) -> FiniteGapReport:
    """Check that the wave's dispersive action profile has exactly the
    predicted gaps (s_i_up, s_i_dn), to within tol.

    Samples the wave at t = 0, fits it as a Fourier symbol (inconclusive if
    the fit residual exceeds 1e-8), truncates the Lax operator adaptively,
    assembles the profile, and compares non-empty gaps against the
    prediction: matched endpoints must agree within tol and the widest
    unmatched (spurious) gap must stay below tol.
    """
    sym, residual = fit_wave_symbol(params, 0.0)
    dk = dk_profile(params)
    if residual > FIT_RESIDUAL_TOL:
        return FiniteGapReport(
            passes=False, conclusive=False, fit_residual=residual,
            endpoint_error=float("inf"), spurious_gap_width=float("inf"),
            n_used=0, truncation_converged=False, delta_gap=float("nan"),
            gaps=[], predicted_gaps=dk.gaps(),
        )
    tr = lax.adaptive_truncation(sym, params.eps, trunc_tol, m=top,
                                 n_cap=n_cap)
    delta = lax.gap_threshold(sym)
    prof = profile_from_spectra(tr.spectra, symbol_mean(sym), delta)
    endpoint_err, spurious = _match_gaps(
        prof.gaps(), dk.gaps(),
        top_error=abs(float(prof.minima[0]) - params.s_up(0)),
    )
    passes = bool(tr.converged and endpoint_err <= tol and spurious <= tol)
    return FiniteGapReport(
        passes=passes, conclusive=True, fit_residual=residual,
        endpoint_error=float(endpoint_err), spurious_gap_width=float(spurious),
        n_used=tr.n, truncation_converged=tr.converged, delta_gap=delta,
        gaps=prof.gaps(), predicted_gaps=dk.gaps(),
    )


def reflected_gap_counts(params: MultiPhaseParams, n_list,
                         width: float = 1e-6) -> list[int]:
    """Gap counts of the reflected wave -v at each truncation in n_list.

    Reflected multi-phase data are not finite gap; the count of gaps wider
    than ``width`` exceeds the phase count and does not decrease as the
    truncation grows.
    """
    xs = np.linspace(0.0, 2.0 * np.pi, 2048, endpoint=False)
    sym = symbol_from_samples(-evaluate_wave(params, xs, 0.0))
    counts = []
    for n in n_list:
        sp = lax.spectra(lax.build_lax_pair(sym, params.eps, n))
        gaps = sp.down - sp.up[1:]
        counts.append(int(np.sum(gaps > width)))
    return counts


@dataclass(frozen=True)
class ConservationReport:
    """Drift of the top Lax eigenvalues across the sampled times."""

    passes: bool
    conclusive: bool
    drift: float
    times: list
    m_top: int
    n_used: int
    worst_fit_residual: float
    eigenvalues: dict

    def to_json_dict(self) -> dict:
        return {
            "passes": self.passes,
            "conclusive": self.conclusive,
            "drift": self.drift,
            "times": list(self.times),
            "m_top": self.m_top,
            "n_used": self.n_used,
            "worst_fit_residual": self.worst_fit_residual,
            "eigenvalues": {str(t): vals for t, vals in
                            self.eigenvalues.items()},
        }


def conservation_check(params: MultiPhaseParams, times, m_top: int = 10,
                       tol: float = 1e-6, trunc_tol: float = 1e-8,
                       n_cap: int = 2048) -> ConservationReport:
    """Rebuild the symbol from wave samples at each time and compare the top
    eigenvalues of the truncated Lax operator; they are conserved quantities
    of the flow, so the drift across times must stay below tol."""
    times = [float(t) for t in times]
    sym0, res0 = fit_wave_symbol(params, times[0])
    tr = lax.adaptive_truncation(sym0, params.eps, trunc_tol,
                                 m=max(m_top, 10), n_cap=n_cap)
    n = tr.n
    worst_res = res0
    tops = {times[0]: tr.spectra.up[:m_top].tolist()}
    for t in times[1:]:
        sym, res = fit_wave_symbol(params, t)
        worst_res = max(worst_res, res)
        sp = lax.spectra(lax.build_lax_pair(sym, params.eps, n))
        tops[t] = sp.up[:m_top].tolist()
    table = np.array([tops[t] for t in times])
    drift = float(np.max(table.max(axis=0) - table.min(axis=0)))
    conclusive = worst_res <= FIT_RESIDUAL_TOL
    return ConservationReport(
        passes=bool(conclusive and drift <= tol), conclusive=conclusive,
        drift=drift, times=times, m_top=m_top, n_used=n,
        worst_fit_residual=worst_res, eigenvalues=tops,
    )


# --- JSON schema -----------------------------------------------------------
#
# {"eps": float, "s": [s_n_up, ..., s_0_up], "chi": [...]}


def params_to_json_dict(params: MultiPhaseParams) -> dict:
    return {
        "eps": params.eps,
        "s": [float(x) for x in params.s],
        "chi": [float(x) for x in params.chi],
    }


def params_from_json_dict(data: dict) -> MultiPhaseParams:
    try:
        return MultiPhaseParams(
            eps=float(data["eps"]),
            s=np.asarray(data["s"], dtype=float),
            chi=np.asarray(data.get("chi", []), dtype=float),
        )
    except KeyError as exc:
        raise MultiPhaseError(f"params JSON missing field {exc}") from exc
