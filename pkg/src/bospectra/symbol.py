"""Bounded real 2pi-periodic symbols as truncated Fourier series.

A symbol is a real trigonometric polynomial

    v(x) = sum_{k=-K}^{K} V_{-k} e^{+ikx},    V_k = (1/2pi) int e^{ikx} v(x) dx,

stored through its complex Fourier coefficients V_k.  Reality of v is the
constraint V_{-k} = conj(V_k) with V_0 real; it is validated once at
construction so that every downstream evaluation is real by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

REALITY_TOL = 1e-12


class SymbolError(ValueError):
    """Fourier data that cannot represent a bounded real symbol."""


@dataclass(frozen=True)
class FourierSymbol:
    """Real trigonometric polynomial held as coefficients V_{-K}..V_{K}.

    ``coeffs[k + max_mode]`` stores V_k.  Instances are immutable; build them
    with :func:`symbol_from_fourier` or the convenience constructors below.
    """

    max_mode: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.shape != (2 * self.max_mode + 1,):
            raise SymbolError(
                f"coefficient array must have length {2 * self.max_mode + 1}"
            )
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    def coeff(self, k: int) -> complex:
        """V_k, zero for |k| > max_mode."""
        if abs(k) > self.max_mode:
            return 0.0 + 0.0j
        return complex(self.coeffs[k + self.max_mode])

    def __call__(self, x):
        return evaluate(self, x)


def symbol_from_fourier(coeffs) -> FourierSymbol:
    """Build a symbol from (k, V_k) pairs, rejecting non-real data.

    Every supplied mode must come with its conjugate partner: (-k, conj(c))
    present, or k = 0 with c real.  Violations beyond ``REALITY_TOL``
    (relative to the largest supplied magnitude) are rejected with the
    offending mode index.  The stored coefficients have the reality
    constraint enforced exactly by symmetrization.
    """
    supplied = {}
    for k, c in dict(coeffs).items():
        supplied[int(k)] = complex(c)
    if not supplied:
        supplied = {0: 0.0}
    scale = max(abs(c) for c in supplied.values())
    tol = REALITY_TOL * max(1.0, scale)
    for k, c in supplied.items():
        if k == 0:
            if abs(c.imag) > tol:
                raise SymbolError("mode 0 must be real, got imaginary part "
                                  f"{c.imag:g}")
            continue
        if -k not in supplied:
            raise SymbolError(f"mode {k} supplied without its conjugate "
                              f"mode {-k}")
        if abs(supplied[-k] - np.conj(c)) > tol:
            raise SymbolError(f"modes {k} and {-k} violate reality by "
                              f"{abs(supplied[-k] - np.conj(c)):g}")
    kmax = max(abs(k) for k in supplied)
    arr = np.zeros(2 * kmax + 1, dtype=complex)
    arr[kmax] = supplied.get(0, 0.0).real
    for k in range(1, kmax + 1):
        if k in supplied:
            # exact symmetrization makes V_{-k} == conj(V_k) to the last bit
            v = 0.5 * (supplied[k] + np.conj(supplied[-k]))
            arr[kmax + k] = v
            arr[kmax - k] = np.conj(v)
    return FourierSymbol(kmax, arr)


def constant(a: float) -> FourierSymbol:
    """The constant symbol v(x) = a."""
    return symbol_from_fourier({0: float(a)})


def cosine(amplitude: float) -> FourierSymbol:
    """v(x) = amplitude * cos x, i.e. V_{+-1} = amplitude / 2."""
    h = 0.5 * float(amplitude)
    return symbol_from_fourier({1: h, -1: h})


def shifted(v: FourierSymbol, delta: float) -> FourierSymbol:
    """The symbol v(x) + delta."""
    arr = v.coeffs.copy()
    arr[v.max_mode] += float(delta)
    return FourierSymbol(v.max_mode, arr)


def negated(v: FourierSymbol) -> FourierSymbol:
    """The reflected symbol -v(x)."""
    return FourierSymbol(v.max_mode, -v.coeffs)


def evaluate(v: FourierSymbol, x):
    """v(x) for scalar or array x.

    Written as V_0 + 2 sum_{k>=1} Re(V_{-k} e^{ikx}), which is real term by
    term, so no imaginary residue survives to be discarded.
    """
    x_arr = np.asarray(x, dtype=float)
    out = np.full(x_arr.shape, v.coeff(0).real, dtype=float)
    for k in range(1, v.max_mode + 1):
        c = v.coeff(-k)
        if c == 0:
            continue
        out += 2.0 * (c.real * np.cos(k * x_arr) - c.imag * np.sin(k * x_arr))
    if np.isscalar(x) or x_arr.ndim == 0:
        return float(out)
    return out


def evaluate_on_grid(v: FourierSymbol, m: int) -> np.ndarray:
    """v at the m uniform points 2*pi*j/m, computed by inverse FFT (exact)."""
    if m < 2 * v.max_mode + 1:
        raise SymbolError(f"grid of {m} points cannot hold modes up to "
                          f"{v.max_mode}")
    spec = np.zeros(m, dtype=complex)
    for k in range(-v.max_mode, v.max_mode + 1):
        spec[(-k) % m] += v.coeff(k)
    return np.fft.ifft(spec).real * m


def derivative_on_grid(v: FourierSymbol, m: int) -> np.ndarray:
    """v'(x) at the m uniform grid points, from i*k-scaled coefficients."""
    if m < 2 * v.max_mode + 1:
        raise SymbolError(f"grid of {m} points cannot hold modes up to "
                          f"{v.max_mode}")
    spec = np.zeros(m, dtype=complex)
    for k in range(-v.max_mode, v.max_mode + 1):
        # the mode at position (-k)%m multiplies e^{-ikx}, so d/dx brings -ik
        spec[(-k) % m] += -1j * k * v.coeff(k)
    return np.fft.ifft(spec).real * m


def mean(v: FourierSymbol) -> float:
    """The spatial average (1/2pi) int v dx, exactly V_0."""
    return v.coeff(0).real


def _grid_extremum(values: np.ndarray, sign: float) -> float:
    """Parabolic refinement of the grid extremum of a periodic sample set."""
    j = int(np.argmax(sign * values))
    m = len(values)
    f0 = values[j]
    fm = values[(j - 1) % m]
    fp = values[(j + 1) % m]
    denom = fm - 2.0 * f0 + fp
    if abs(denom) < 1e-300 * max(1.0, abs(f0)):
        return float(f0)
    # vertex of the parabola through the three neighbors
    delta = 0.5 * (fm - fp) / denom
    return float(f0 - 0.25 * (fm - fp) * delta)


def sup_estimate(v: FourierSymbol, grid_size: int | None = None) -> float:
    """sup_x v(x) from a dense grid with one parabolic refinement."""
    need = 4 * v.max_mode + 1
    if grid_size is None:
        grid_size = max(need, 4096)
    if grid_size < need:
        raise SymbolError(f"grid_size must be at least {need}")
    return _grid_extremum(evaluate_on_grid(v, grid_size), +1.0)


def inf_estimate(v: FourierSymbol, grid_size: int | None = None) -> float:
    """inf_x v(x), same scheme as :func:`sup_estimate`."""
    need = 4 * v.max_mode + 1
    if grid_size is None:
        grid_size = max(need, 4096)
    if grid_size < need:
        raise SymbolError(f"grid_size must be at least {need}")
    return -_grid_extremum(-evaluate_on_grid(v, grid_size), +1.0)


def symbol_from_samples(samples, keep_tol: float = 1e-12) -> FourierSymbol:
    """Recover a symbol from uniform samples over one period.

    Discrete Fourier analysis of the samples; modes with |V_k| <= keep_tol
    are dropped.  The caller is responsible for supplying enough samples
    that aliasing is below keep_tol (check the fit residual afterwards).
    """
    vals = np.asarray(samples, dtype=float)
    m = len(vals)
    spec = np.fft.ifft(vals)  # spec[k % m] = V_k for |k| < m/2
    kmax = 0
    half = (m - 1) // 2
    for k in range(1, half + 1):
        if abs(spec[k]) > keep_tol or abs(spec[-k]) > keep_tol:
            kmax = k
    coeffs = {0: spec[0].real}
    for k in range(1, kmax + 1):
        vk = 0.5 * (spec[k] + np.conj(spec[-k]))
        coeffs[k] = vk
        coeffs[-k] = np.conj(vk)
    return symbol_from_fourier(coeffs)


# --- JSON schema -----------------------------------------------------------
#
# {"type": "fourier", "modes": [{"k": int, "re": float, "im": float}, ...]}
# {"type": "cosine", "amplitude": float}


def symbol_to_json_dict(v: FourierSymbol) -> dict:
    modes = []
    for k in range(-v.max_mode, v.max_mode + 1):
        c = v.coeff(k)
        if c != 0:
            modes.append({"k": k, "re": c.real, "im": c.imag})
    return {"type": "fourier", "modes": modes}


def symbol_from_json_dict(data: dict) -> FourierSymbol:
    if not isinstance(data, dict) or "type" not in data:
        raise SymbolError("symbol JSON must be an object with a 'type' field")
    if data["type"] == "cosine":
        return cosine(float(data["amplitude"]))
    if data["type"] == "fourier":
        try:
            pairs = {int(m["k"]): complex(float(m["re"]), float(m.get("im", 0.0)))
                     for m in data["modes"]}
        except (KeyError, TypeError) as exc:
            raise SymbolError(f"malformed mode entry: {exc}") from exc
        return symbol_from_fourier(pairs)
    raise SymbolError(f"unknown symbol type {data['type']!r}")
