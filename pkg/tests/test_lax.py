import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bospectra import lax
from bospectra import symbol as sym


def _random_symbol(rng, kmax=4):
    coeffs = {0: rng.uniform(-1, 1)}
    for k in range(1, kmax + 1):
        c = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))
        coeffs[k] = c
        coeffs[-k] = np.conj(c)
    return sym.symbol_from_fourier(coeffs)


def test_sinusoidal_matrix_is_tridiagonal():
    pair = lax.build_lax_pair(sym.cosine(2.0), 1.0, 3)
    assert np.array_equal(pair.full,
                          np.array([[0., 1, 0], [1, -1, 1], [0, 1, -2]]))
    assert np.array_equal(pair.minor_block, pair.full[1:, 1:])


def test_constant_matrix_is_diagonal():
    a, eps = 0.8, 0.25
    pair = lax.build_lax_pair(sym.constant(a), eps, 3)
    assert np.allclose(pair.full, np.diag([a, a - eps, a - 2 * eps]), atol=0)


def test_direct_entry_formula():
    v = sym.symbol_from_fourier({0: 1.0, 1: 1.0, -1: 1.0})  # 1 + 2 cos x
    pair = lax.build_lax_pair(v, 0.5, 2)
    assert np.allclose(pair.full, [[1.0, 1.0], [1.0, 0.5]], atol=0)


def test_preconditions():
    with pytest.raises(ValueError):
        lax.build_lax_pair(sym.cosine(2.0), -1.0, 4)
    with pytest.raises(ValueError):
        lax.build_lax_pair(sym.cosine(2.0), 1.0, 1)


def test_trace_identity_exact():
    rng = np.random.default_rng(0)
    for _ in range(5):
        v = _random_symbol(rng)
        pair = lax.build_lax_pair(v, rng.uniform(0.1, 2.0), 64)
        assert pair.relative_trace() == pytest.approx(sym.mean(v), abs=1e-12)


def test_sinusoidal_spectra_n3():
    sp = lax.spectra(lax.build_lax_pair(sym.cosine(2.0), 1.0, 3))
    assert np.allclose(sp.up, [-1 + np.sqrt(3), -1, -1 - np.sqrt(3)],
                       atol=1e-12)
    assert np.allclose(sp.down, [(-3 + np.sqrt(5)) / 2, (-3 - np.sqrt(5)) / 2],
                       atol=1e-12)
    assert sp.checked


def test_constant_spectra_and_empty_gaps():
    a, eps = 0.8, 0.25
    sp = lax.spectra(lax.build_lax_pair(sym.constant(a), eps, 16))
    assert np.allclose(sp.up, a - eps * np.arange(16), atol=1e-13)
    assert np.allclose(sp.down, a - eps * np.arange(1, 16), atol=1e-13)
    assert np.max(sp.down - sp.up[1:]) < 1e-13


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([0.1, 0.5, 1.0]))
def test_cauchy_interlacing(seed, eps):
    rng = np.random.default_rng(seed)
    sp = lax.spectra(lax.build_lax_pair(_random_symbol(rng), eps, 24))
    norm = sp.spectral_norm()
    assert np.max(sp.up[1:] - sp.down) <= 1e-9 * norm
    assert np.max(sp.down - sp.up[:-1]) <= 1e-9 * norm


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_frozen_region_bound(seed):
    # no eigenvalue above the essential range of the symbol
    rng = np.random.default_rng(seed)
    v = _random_symbol(rng)
    sp = lax.spectra(lax.build_lax_pair(v, 0.5, 24))
    assert sp.up[0] <= sym.sup_estimate(v) + 1e-8


def test_baker_akhiezer_constant_resolvent():
    pair = lax.build_lax_pair(sym.constant(0.7), 0.5, 32)
    u = 1.3 + 0.9j
    assert lax.baker_akhiezer_average(pair, u) == pytest.approx(
        1 / (u - 0.7), abs=1e-12)


def test_baker_akhiezer_sinusoidal_2x2():
    pair = lax.build_lax_pair(sym.cosine(2.0), 1.0, 2)
    assert lax.baker_akhiezer_average(pair, 1j) == pytest.approx(
        (-1 - 3j) / 5, abs=1e-12)


def test_resolvent_near_axis_rejected():
    pair = lax.build_lax_pair(sym.cosine(2.0), 1.0, 8)
    with pytest.raises(lax.ResolventDomainError):
        lax.baker_akhiezer_average(pair, 1.0 + 1e-9j)


def test_stieltjes_normalization():
    pair = lax.build_lax_pair(sym.cosine(2.0), 1.0, 64)
    u = 1e6j
    assert abs(u * lax.baker_akhiezer_average(pair, u) - 1) < 1e-4


def test_product_formula_telescopes_for_constant():
    sp = lax.spectra(lax.build_lax_pair(sym.constant(0.7), 0.5, 32))
    u = -0.2 + 1.7j
    assert lax.product_formula(sp, u) == pytest.approx(1 / (u - 0.7),
                                                       abs=1e-12)


def test_product_formula_matches_resolvent():
    rng = np.random.default_rng(7)
    for _ in range(5):
        v = _random_symbol(rng)
        pair = lax.build_lax_pair(v, 1.0, 48)
        sp = lax.spectra(pair)
        for u in (2j, -1 + 0.5j, 3 - 2j):
            a = lax.baker_akhiezer_average(pair, u)
            b = lax.product_formula(sp, u)
            assert abs(a - b) <= 1e-8 * abs(a)


def test_product_formula_pole_guard():
    sp = lax.spectra(lax.build_lax_pair(sym.cosine(2.0), 1.0, 8))
    with pytest.raises(lax.ResolventDomainError):
        lax.product_formula(sp, complex(sp.up[0], 0.0))


def test_herglotz_sign():
    rng = np.random.default_rng(9)
    for _ in range(5):
        pair = lax.build_lax_pair(_random_symbol(rng), 0.7, 32)
        for u in (1j, 2 + 0.5j, -3 + 4j):
            assert lax.baker_akhiezer_average(pair, u).imag < 0


def test_spectral_shift_constant_symbol():
    # v = 0.7, eps = 1: xi is -1 on (0, 0.7) and 0 elsewhere
    sp = lax.spectra(lax.build_lax_pair(sym.constant(0.7), 1.0, 12))
    xi = lax.spectral_shift(sp)
    assert xi.cumulative(0.3) == pytest.approx(-1.0, abs=1e-12)
    assert xi.cumulative(0.69) == pytest.approx(-1.0, abs=1e-12)
    assert xi.cumulative(-0.1) == pytest.approx(0.0, abs=1e-12)
    assert xi.cumulative(0.8) == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_spectral_shift_bounded_by_one(seed):
    rng = np.random.default_rng(seed)
    sp = lax.spectra(lax.build_lax_pair(_random_symbol(rng), 0.5, 24))
    xi = lax.spectral_shift(sp)
    probes = np.linspace(sp.up[-1] - 1, sp.up[0] + 1, 301)
    assert np.max(np.abs(xi.cumulative(probes))) <= 1.0 + 1e-12


def test_spectral_shift_first_moment_is_mean():
    # sum of jump * location telescopes to the relative trace V_0
    rng = np.random.default_rng(13)
    v = _random_symbol(rng)
    sp = lax.spectra(lax.build_lax_pair(v, 0.5, 48))
    xi = lax.spectral_shift(sp)
    assert xi.moment(1) == pytest.approx(sym.mean(v), abs=1e-9)
    assert xi.total_mass() == pytest.approx(0.0, abs=1e-12)


def test_minor_is_shifted_symbol_matrix():
    rng = np.random.default_rng(17)
    v = _random_symbol(rng)
    eps, n = 0.3, 32
    pair = lax.build_lax_pair(v, eps, n)
    shifted_pair = lax.build_lax_pair(sym.shifted(v, -eps), eps, n - 1)
    scale = np.abs(pair.full).max()
    assert np.max(np.abs(pair.minor_block - shifted_pair.full)) < 1e-13 * scale


def test_adaptive_truncation_constant_converges_immediately():
    res = lax.adaptive_truncation(sym.constant(0.7), 1.0, 1e-8, m=10)
    assert res.converged
    assert res.n == 128
    assert res.movement == 0.0


def test_adaptive_truncation_sinusoidal():
    res = lax.adaptive_truncation(sym.cosine(2.0), 1.0, 1e-8, m=10)
    assert res.converged
    # the accepted dimension is stable against one more doubling
    bigger = lax.spectra(lax.build_lax_pair(sym.cosine(2.0), 1.0, 2 * res.n))
    assert np.max(np.abs(res.spectra.up[:10] - bigger.up[:10])) < 1e-8


def test_adaptive_truncation_small_eps_needs_no_fewer_modes():
    res_big = lax.adaptive_truncation(sym.cosine(2.0), 1.0, 1e-8, m=10,
                                      n_start=16)
    res_small = lax.adaptive_truncation(sym.cosine(2.0), 1.0 / 64, 1e-8, m=10,
                                        n_start=16)
    assert res_small.n >= res_big.n


def test_adaptive_truncation_cap_flagged():
    res = lax.adaptive_truncation(sym.cosine(2.0), 1.0 / 64, 1e-30, m=10,
                                  n_start=16, n_cap=64)
    assert not res.converged
    assert res.n == 64
    assert np.isfinite(res.movement)
