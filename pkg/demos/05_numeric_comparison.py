"""Direct integration vs the renormalized expansion, CSV + gnuplot output.

Reproduces the slow-modulation comparison for the nonautonomous
oscillator: eps = 0.25, R(0) = 0.2, theta(0) = -0.1.  At amplitude-flow
order 1 the two curves visibly drift apart; order 2 closes most of the
gap.  The envelope R(t) shows a single peak over the run.
"""

import math

from rgpert.registry import example_expansion
from rgpert.rg import derive_rg, to_polar
from rgpert import numeric as nm

EPS, R0, THETA0 = 0.25, 0.2, -0.1
T_MAX = 25 * 2 * math.pi

system = derive_rg(example_expansion("nonauto", 4))
polar = to_polar(system)

Ar0 = R0 * complex(math.cos(THETA0), math.sin(THETA0))
y0, dy0 = nm.expansion_initial_conditions(system, EPS, 1, 1,
                                          Ar0=Ar0, Br0=Ar0.conjugate())
ode = nm.integrate_ode(system.potential, y0, dy0, EPS, T_MAX)

for order in (1, 2):
    amplitudes = nm.integrate_rg(polar, EPS, order, T_MAX,
                                 R0=R0, theta0=THETA0)
    y_rg = nm.evaluate_expansion(polar, amplitudes, EPS, 1)
    metrics, rows = nm.compare(ode, y_rg)
    print(f"amplitude-flow order {order}: "
          f"max|diff| = {metrics['max_abs_diff']:.4f}, "
          f"rms = {metrics['rms_diff']:.4f}")
    if order == 1:
        peaks = nm.count_envelope_peaks(amplitudes.column("R"))
        print(f"  envelope peaks over the run: {peaks}")
        nm.write_csv("comparison.csv", rows)
        nm.write_gnuplot("comparison.gp", "comparison.csv")
        print("  wrote comparison.csv and comparison.gp "
              "(render with: gnuplot -p comparison.gp)")
