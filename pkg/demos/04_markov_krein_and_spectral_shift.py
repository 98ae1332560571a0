"""Transition measures, log moments, and the spectral shift function.

The Markov-Krein correspondence pairs each profile with a probability
measure whose Stieltjes transform is the profile's T-up observable.  For
the Lax pair the same object appears a third way, as Krein's spectral shift
function of operator and embedded minor, whose jump measure telescopes to
the symbol mean.

Run:  python demos/04_markov_krein_and_spectral_shift.py
"""

import numpy as np

from bospectra import (
    Profile, build_lax_pair, exp_series_from_logmoments,
    moments_and_logmoments, spectra, spectral_shift, symbol_from_fourier,
    t_up_observable, transition_measure,
)

p = Profile(center=-1.0, maxima=np.array([-1.0]),
            minima=np.array([0.0, -2.0]), truncated=False)
print("profile with extrema (-2, -1, 0):")
m = transition_measure(p)
print(f"  transition measure: atoms at {m.locations} with weights {m.weights}")
for u in (1j, 2 + 1j):
    print(f"  stieltjes({u}) = {m.stieltjes(u):.6f}   "
          f"T(u) = {t_up_observable(p, u):.6f}")

t_m, o_m = moments_and_logmoments(p, 8)
print(f"  T moments: {np.array2string(t_m, precision=6)}")
print(f"  O moments: {np.array2string(o_m, precision=6)}")
print(f"  exp-series reconstruction error: "
      f"{np.max(np.abs(exp_series_from_logmoments(o_m) - t_m)):.2e}")

v = symbol_from_fourier({0: 0.4, 1: 0.3 + 0.2j, -1: 0.3 - 0.2j,
                         2: -0.1j, -2: 0.1j})
sp = spectra(build_lax_pair(v, 0.5, 256))
xi = spectral_shift(sp)
# sample inside the top few spectral gaps, where xi sits at -1, and outside
cs = np.concatenate([0.5 * (sp.up[1:5] + sp.down[0:4]), [0.2, sp.up[0] + 0.5]])
print("\nspectral shift function of a random-ish symbol (eps = 0.5, N = 256):")
print("  c:  " + " ".join(f"{c:8.3f}" for c in cs))
print("  xi: " + " ".join(f"{xi.cumulative(c):8.3f}" for c in cs))
print(f"  first moment of the jumps: {xi.moment(1):.12f} "
      f"(symbol mean {0.4})")
print(f"  |xi| bounded by one: "
      f"{np.max(np.abs(xi.cumulative(np.linspace(-130, 2, 2001)))) <= 1.0}")
