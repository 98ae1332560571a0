"""Truncated Benjamin-Ono Lax pairs and their interlaced spectra.

The Lax operator acts on Hardy space in the basis |h> = e^{ihx}, h >= 0, as
the generalized Toeplitz matrix with entries

    L(v; eps)[h, h'] = V_{h-h'} - delta(h-h') * h * eps,

so the Galerkin truncation to the leading N x N block is a Toeplitz matrix
plus the diagonal drift -eps*h.  The embedded principal minor removes row
and column 0 and keeps a zero eigenvalue in their place.  Everything
downstream (profiles, conserved quantities, spectral shift data) is read off
the pair of interlaced spectra of these two matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import linalg
from .profiles import DiscreteMeasure
from .symbol import FourierSymbol, sup_estimate, inf_estimate

INTERLACING_TOL = 1e-9
RESOLVENT_IMAG_MIN = 1e-8
POLE_TOL = 1e-12
GAP_THRESHOLD_SCALE = 1e-8


class InterlacingError(RuntimeError):
    """Cauchy interlacing violated beyond tolerance (eigensolver defect)."""


class ResolventDomainError(ValueError):
    """Resolvent point too close to the real axis or to a pole."""


class TruncationError(RuntimeError):
    """Adaptive truncation hit its cap without converging."""


@dataclass(frozen=True)
class TruncatedLaxPair:
    """N x N Galerkin matrix of the Lax operator plus its principal minor."""

    eps: float
    dim: int
    full: np.ndarray
    minor_block: np.ndarray

    def relative_trace(self) -> float:
        """trace(full) - trace(embedded minor), associated so it is exact.

        The embedded minor shares every diagonal entry of ``full`` except the
        (0,0) one, so the difference telescopes to V_0 exactly in floating
        point when computed entrywise.
        """
        d_full = np.diag(self.full)
        d_minor = np.concatenate(([0.0], np.diag(self.minor_block)))
        return float(math.fsum((d_full - d_minor).real))


@dataclass(frozen=True)
class InterlacedSpectra:
    """Descending eigenvalues C_h of the pair, plus the embedded zero.

    ``up`` has length N (full matrix), ``down`` length N-1 (minor block).
    The zero eigenvalue the embedding adds to the minor is kept apart: it
    cancels the 1/u prefactor of the resolvent average and never enters the
    interlacing chain.
    """

    up: np.ndarray
    down: np.ndarray
    embedded_zero: float = 0.0
    checked: bool = False

    @property
    def dim(self) -> int:
        return len(self.up)

    def spectral_norm(self) -> float:
        return float(np.abs(self.up).max())


def build_lax_pair(v: FourierSymbol, eps: float, n: int) -> TruncatedLaxPair:
    """Galerkin truncation of the Lax operator of symbol v at dimension n."""
    if eps <= 0:
        raise ValueError("dispersion coefficient eps must be positive")
    if n < 2:
        raise ValueError("truncation dimension must be at least 2")
    col = np.array([v.coeff(h) for h in range(n)])
    row = np.array([v.coeff(-h) for h in range(n)])
    full = scipy.linalg.toeplitz(col, row)
    if np.abs(full.imag).max() == 0.0:
        full = full.real.copy()
    full[np.arange(n), np.arange(n)] -= eps * np.arange(n)
    full.flags.writeable = False
    minor = full[1:, 1:]
    return TruncatedLaxPair(eps=float(eps), dim=n, full=full, minor_block=minor)


def spectra(pair: TruncatedLaxPair) -> InterlacedSpectra:
    """Eigenvalues of the pair with the Cauchy interlacing check attached.

    C_h(up) <= C_h(down) <= C_{h-1}(up) must hold for h = 1..N-1; violations
    beyond INTERLACING_TOL times the spectral norm signal an eigensolver
    defect and raise :class:`InterlacingError`.
    """
    up = linalg.hermitian_eigenvalues(pair.full)
    down = linalg.hermitian_eigenvalues(pair.minor_block)
    norm = float(np.abs(up).max())
    tol = INTERLACING_TOL * max(norm, 1e-300)
    low = np.max(up[1:] - down) if len(down) else 0.0
    high = np.max(down - up[:-1]) if len(down) else 0.0
    if max(low, high) > tol:
        raise InterlacingError(
            f"interlacing violated by {max(low, high):.3e} at dim {pair.dim} "
            f"(tolerance {tol:.3e})"
        )
    return InterlacedSpectra(up=up, down=down, checked=True)


def baker_akhiezer_average(pair: TruncatedLaxPair, u: complex) -> complex:
    """<0| (u - L)^{-1} |0> on the truncation: the conserved resolvent average.

    This is the generating function of the conserved hierarchy; off the real
    axis it is the Stieltjes transform of the spectral measure at |0>, so
    u * phi(u) -> 1 at infinity and Im phi < 0 in the upper half plane.
    """
    u = complex(u)
    if abs(u.imag) < RESOLVENT_IMAG_MIN:
        raise ResolventDomainError(
            f"resolvent point must satisfy |Im u| >= {RESOLVENT_IMAG_MIN:g}, "
            f"got Im u = {u.imag:g}"
        )
    n = pair.dim
    a = u * np.eye(n) - pair.full
    e0 = np.zeros(n, dtype=complex)
    e0[0] = 1.0
    return complex(linalg.complex_solve(a, e0)[0])


def product_formula(sp: InterlacedSpectra, u: complex) -> complex:
    """The same average as a ratio of characteristic polynomials.

    prod_{h=1}^{N-1} (u - C_h(down)) / (u - C_{h-1}(up)) * 1/(u - C_{N-1}(up)),
    the finite-truncation Cramer identity.  Exactly equal to the resolvent
    path in exact arithmetic.
    """
    u = complex(u)
    if u.imag == 0.0:
        raise ResolventDomainError("resolvent point must be off the real axis")
    if np.min(np.abs(u - sp.up)) < POLE_TOL:
        raise ResolventDomainError(f"u = {u:g} is within {POLE_TOL:g} of a pole")
    value = np.prod((u - sp.down) / (u - sp.up[:-1])) if len(sp.down) else 1.0
    return complex(value / (u - sp.up[-1]))


def spectral_shift(sp: InterlacedSpectra) -> DiscreteMeasure:
    """Jump measure of the spectral shift function of the pair.

    xi(c) = (number of eigenvalue jumps at or below c): +1 at every C_h(up),
    -1 at every minor C_h(down) and at the embedded zero.  Pairs that
    coincide cancel, interlacing bounds |xi| by 1, and the first moment of
    the jumps telescopes to the relative trace V_0.

    Minor eigenvalues are clipped into their interlacing slots before the
    atoms are assembled (a move below eigensolver tolerance), which makes
    |xi| <= 1 structural rather than statistical.
    """
    down = sp.down
    if len(down):
        down = np.minimum(np.maximum(down, sp.up[1:]), sp.up[:-1])
    locs = np.concatenate([sp.up, down, [sp.embedded_zero]])
    wts = np.concatenate([np.ones(len(sp.up)), -np.ones(len(down)), [-1.0]])
    order = np.argsort(locs, kind="stable")
    return DiscreteMeasure(locations=locs[order], weights=wts[order])


def gap_threshold(v: FourierSymbol) -> float:
    """Width below which a gap is declared empty: 1e-8 * max(1, sup|v|)."""
    bound = max(abs(sup_estimate(v)), abs(inf_estimate(v)))
    return GAP_THRESHOLD_SCALE * max(1.0, bound)


@dataclass(frozen=True)
class TruncationResult:
    """Outcome of the doubling heuristic: the pair at the accepted dimension.

    ``movement`` is the largest change of the tracked top eigenvalues between
    the accepted dimension and its doubling; ``converged`` is False when the
    cap was reached first, in which case the pair at the cap is returned.
    """

    pair: TruncatedLaxPair
    spectra: InterlacedSpectra
    n: int
    movement: float
    converged: bool


def adaptive_truncation(
    v: FourierSymbol,
    eps: float,
    tol: float,
    m: int,
    n_start: int = 128,
    n_cap: int = 4096,
) -> TruncationResult:
    """Double N until the top m eigenvalues move less than tol.

    Accepts the first dimension whose top-m eigenvalues agree with those of
    the doubled dimension to within tol.  The spectrum of the accepted pair
    is returned alongside it (it was computed for the comparison anyway).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if m < 1:
        raise ValueError("must track at least one eigenvalue")
    n = max(2, n_start)
    pair = build_lax_pair(v, eps, n)
    sp = spectra(pair)
    movement = float("inf")
    while 2 * n <= n_cap:
        pair_next = build_lax_pair(v, eps, 2 * n)
        sp_next = spectra(pair_next)
        movement = float(np.abs(sp.up[:m] - sp_next.up[:m]).max())
        if movement < tol:
            return TruncationResult(pair, sp, n, movement, True)
        n *= 2
        pair, sp = pair_next, sp_next
    return TruncationResult(pair, sp, n, movement, False)
