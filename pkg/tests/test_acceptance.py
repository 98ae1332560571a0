"""Acceptance suite.

One test per criterion; each prints a single pass/fail line (run with -s to
see them) and asserts at the stated tolerance.  Random inputs are drawn from
a fixed seed so every run checks the same instances.
"""

import time

import numpy as np
import pytest

from bospectra import lax, linalg, multiphase as mp, profiles as pr, \
    smalldisp as sd, symbol as sym

SEED = 20260808
U_POINTS = [2j, -2j, 0.5 + 1j, -1 + 0.75j, 3j, 1.5 - 2j, -2.5 + 0.5j,
            0.25 + 3j, -0.75 - 1.5j, 2 + 0.5j]


def _criterion(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def _random_symbol(rng, degree: int) -> sym.FourierSymbol:
    coeffs = {0: rng.uniform(-1.0, 1.0)}
    for k in range(1, degree + 1):
        c = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        coeffs[k] = c
        coeffs[-k] = np.conj(c)
    return sym.symbol_from_fourier(coeffs)


def one_phase() -> mp.MultiPhaseParams:
    return mp.MultiPhaseParams(eps=1.0, s=np.array([-2.0, -1.0, 0.0]),
                               chi=np.array([0.0]))


def two_phase() -> mp.MultiPhaseParams:
    return mp.MultiPhaseParams(
        eps=1.0, s=np.array([-3.25, -2.5, -1.5, -1.0, 0.0]),
        chi=np.array([0.3, -0.2]),
    )


@pytest.fixture(scope="module")
def random_suite():
    """20 random symbols (degree <= 8, |coeff| <= 1) at eps 0.1 and 1, N=256."""
    rng = np.random.default_rng(SEED)
    start = time.monotonic()
    entries = []
    for _ in range(20):
        v = _random_symbol(rng, degree=8)
        for eps in (0.1, 1.0):
            pair = lax.build_lax_pair(v, eps, 256)
            sp = lax.spectra(pair)
            entries.append((v, eps, pair, sp))
    elapsed = time.monotonic() - start
    return entries, elapsed


def test_interlacing_suite(random_suite):
    entries, elapsed = random_suite
    worst = 0.0
    for _, _, _, sp in entries:
        norm = sp.spectral_norm()
        low = np.max(sp.up[1:] - sp.down) / norm
        high = np.max(sp.down - sp.up[:-1]) / norm
        worst = max(worst, low, high)
    ok = worst < 1e-9 and elapsed < 60.0
    _criterion("interlacing suite",
               ok, f"worst relative violation {worst:.2e}, "
                   f"built in {elapsed:.1f}s")


def test_cramer_identity(random_suite):
    entries, _ = random_suite
    worst = 0.0
    for _, _, pair, sp in entries:
        for u in U_POINTS:
            a = lax.baker_akhiezer_average(pair, u)
            b = lax.product_formula(sp, u)
            worst = max(worst, abs(a - b) / abs(a))
    _criterion("Cramer identity", worst <= 1e-8,
               f"worst relative mismatch {worst:.2e} over "
               f"{len(entries) * len(U_POINTS)} evaluations")


def test_trace_identity(random_suite):
    entries, _ = random_suite
    worst = max(abs(pair.relative_trace() - sym.mean(v))
                for v, _, pair, _ in entries)
    _criterion("trace identity", worst < 1e-12,
               f"worst |trace difference - V_0| = {worst:.2e}")


def test_shift_relation(random_suite):
    entries, _ = random_suite
    symbols = [v for v, eps, _, _ in entries if eps == 1.0]
    worst = 0.0
    for v in symbols:
        eps, n = 1.0, 512
        minor = lax.build_lax_pair(v, eps, n).minor_block
        down = linalg.hermitian_eigenvalues(minor)
        shifted_up = lax.spectra(
            lax.build_lax_pair(sym.shifted(v, -eps), eps, n)).up
        worst = max(worst, float(np.max(np.abs(
            down[:n // 2] - shifted_up[:n // 2]))))
    _criterion("shift relation", worst <= 1e-6,
               f"top-{512 // 2} agreement {worst:.2e} over "
               f"{len(symbols)} symbols at N=512")


def test_finite_gap_theorem():
    start = time.monotonic()
    rep1 = mp.verify_finite_gap(one_phase(), tol=1e-6, n_cap=2048)
    rep2 = mp.verify_finite_gap(two_phase(), tol=1e-6, n_cap=2048)
    elapsed = time.monotonic() - start
    ok = (rep1.passes and rep2.passes and elapsed < 120.0
          and rep1.n_used <= 2048 and rep2.n_used <= 2048)
    _criterion("finite gap", ok,
               f"endpoint errors {rep1.endpoint_error:.2e} / "
               f"{rep2.endpoint_error:.2e}, spurious "
               f"{rep1.spurious_gap_width:.2e} / "
               f"{rep2.spurious_gap_width:.2e}, "
               f"N = {rep1.n_used} / {rep2.n_used}, {elapsed:.1f}s")


def test_reflection_not_finite_gap():
    counts = mp.reflected_gap_counts(one_phase(), [256, 512, 1024, 2048],
                                     width=1e-6)
    ok = counts[0] > 1 and all(b >= a for a, b in zip(counts, counts[1:]))
    _criterion("reflection", ok, f"gap counts over doubling N: {counts}")


def test_conservation():
    report = mp.conservation_check(one_phase(), [0.0, 0.3, 0.7], m_top=10,
                                   tol=1e-6, n_cap=2048)
    _criterion("conservation", report.passes,
               f"top-10 eigenvalue drift {report.drift:.2e} at "
               f"N = {report.n_used}")


def test_frozen_region(random_suite):
    entries, _ = random_suite
    worst = -np.inf
    for v, _, _, sp in entries:
        worst = max(worst, float(sp.up[0] - sym.sup_estimate(v)))
    v_fit, _ = mp.fit_wave_symbol(one_phase(), 0.0)
    sp = lax.spectra(lax.build_lax_pair(v_fit, 1.0, 512))
    worst = max(worst, float(sp.up[0] - sym.sup_estimate(v_fit)))
    _criterion("frozen region", worst <= 1e-8,
               f"max eigenvalue excess over sup v: {worst:.2e}")


def test_small_dispersion_limit():
    sweep = sd.DispersionSweep(sym.cosine(2.0),
                               (1.0, 0.5, 0.25, 0.125, 0.0625), (2j,))
    result = sd.dispersion_sweep(sweep, n_cap=4096)
    errs = result.errors()[:, 0]
    ok = bool(np.all(np.diff(errs) < 0) and errs[-1] < 0.05)

    rng = np.random.default_rng(SEED + 1)
    v4 = _random_symbol(rng, degree=4)
    tr = lax.adaptive_truncation(v4, 1 / 32, 1e-8, m=10, n_cap=4096)
    err4 = abs(lax.baker_akhiezer_average(tr.pair, 3j)
               - sd.szego_geometric_mean(v4, 3j))
    ok = ok and err4 < 0.05
    _criterion("small dispersion", ok,
               f"sinusoidal errors {np.array2string(errs, precision=4)} "
               f"(final {errs[-1]:.4f}); degree-4 error {err4:.4f}")


def test_markov_krein_roundtrips():
    rng = np.random.default_rng(SEED + 2)
    worst_st, worst_t0, worst_t1, worst_series = 0.0, 0.0, 0.0, 0.0
    for _ in range(10):
        n = int(rng.integers(1, 6))
        pts = np.sort(rng.uniform(-3, 3, 2 * n + 1))
        while np.min(np.diff(pts)) < 1e-2:
            pts = np.sort(rng.uniform(-3, 3, 2 * n + 1))
        minima = pts[::2][::-1]
        maxima = pts[1::2][::-1]
        center = minima[-1] + np.sum(np.abs(maxima - minima[:-1]))
        p = pr.Profile(center=center, maxima=maxima, minima=minima,
                       truncated=False)
        measure = pr.transition_measure(p)
        for u in U_POINTS:
            worst_st = max(worst_st, abs(measure.stieltjes(u)
                                         - pr.t_up_observable(p, u)))
        t_m, o_m = pr.moments_and_logmoments(p, 8)
        worst_t0 = max(worst_t0, abs(t_m[0] - 1.0))
        worst_t1 = max(worst_t1, abs(t_m[1] - center))
        series = pr.exp_series_from_logmoments(o_m)
        worst_series = max(worst_series, float(np.max(np.abs(series - t_m))))
    ok = (worst_st <= 1e-10 and worst_t0 <= 1e-10 and worst_t1 <= 1e-10
          and worst_series < 1e-8)
    _criterion("Markov-Krein round trips", ok,
               f"stieltjes {worst_st:.2e}, T0 {worst_t0:.2e}, "
               f"T1 {worst_t1:.2e}, series {worst_series:.2e}")


def test_vkls_oracle():
    conv = pr.convex_profile_from_symbol(sym.cosine(2.0), 1 << 21)
    cs = np.linspace(-2.5, 2.5, 251)
    sup_err = float(np.max(np.abs(sd.vkls_profile(cs) - conv.heights(cs))))
    mid_err = abs(conv.heights(0.0) - 4 / np.pi)
    ok = sup_err < 1e-8 and mid_err < 1e-12
    _criterion("VKLS oracle", ok,
               f"sup error {sup_err:.2e} on [-2.5, 2.5], "
               f"f(0) error {mid_err:.2e}")


def test_burgers_conservation():
    report = sd.burgers_conservation_check(sym.cosine(2.0), [0.0, 0.2, 0.4],
                                           l_max=6)
    _criterion("Burgers conservation", report.drift < 1e-8,
               f"moment drift {report.drift:.2e} below breaking time "
               f"{report.breaking_time:.2f}")


def test_sinusoidal_recurrence():
    rows = sd.sinusoidal_functional_equation(1.0, u_grid=(2j, 3j, 1 + 2j),
                                             n_start=1024, n_cap=4096)
    worst = max(r.residual for r in rows)
    ok = worst < 1e-6 and all(r.n_used >= 1024 for r in rows)
    _criterion("sinusoidal recurrence", ok,
               f"worst residual {worst:.2e} at N = {rows[0].n_used}")
