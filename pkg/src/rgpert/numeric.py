"""Fixed-step RK4 integration and the numeric-vs-RG comparison.

Everything is deliberately deterministic: fixed step, no adaptivity, both
systems sampled on the same uniform grid so comparisons never interpolate.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ComplexPotential, NotReal, GridMismatch
from .rg import PolarRG, RGSystem, PHASE

DEFAULT_STEP = 2 * math.pi / 200
DIVERGENCE_LIMIT = 1e8
IMAG_TOL_POTENTIAL = 1e-12
IMAG_TOL_EXPANSION = 1e-10


@dataclass
class Trajectory:
    """Uniformly sampled numeric solution."""
    t: np.ndarray
    columns: tuple
    values: np.ndarray          # shape (len(t), len(columns))
    meta: dict = field(default_factory=dict)
    truncated: bool = False

    def column(self, name):
        return self.values[:, self.columns.index(name)]

    def __len__(self):
        return len(self.t)


def _grid(t_max, h):
    n = int(round(t_max / h))
    return np.arange(n + 1) * h


def _rk4(f, state0, grid):
    """Classical RK4 over a uniform grid; state is a tuple of floats."""
    h = grid[1] - grid[0]
    out = [state0]
    state = state0
    for i in range(len(grid) - 1):
        t = grid[i]
        k1 = f(t, state)
        k2 = f(t + h / 2, _axpy(state, k1, h / 2))
        k3 = f(t + h / 2, _axpy(state, k2, h / 2))
        k4 = f(t + h, _axpy(state, k3, h))
        state = tuple(s + h / 6 * (a + 2 * b + 2 * c + d)
                      for s, a, b, c, d in zip(state, k1, k2, k3, k4))
        out.append(state)
        if any(abs(x) > DIVERGENCE_LIMIT for x in state):
            return out, True
    return out, False


def _axpy(state, deriv, a):
    return tuple(s + a * d for s, d in zip(state, deriv))


def _compile_potential(V, eps):
    """[(k, l, m, complex coefficient incl. eps^n factor)] for numeric use."""
    if V.params:
        raise ValueError(
            f"unbound parameters {V.params}; bind them to numbers first")
    out = []
    for (k, l, m, n), c in V.coeffs.items():
        cval = c.as_constant()
        out.append((k, l, m, cval.to_complex() * eps ** n))
    return out


def integrate_ode(V, y0, dy0, eps, t_max, h=DEFAULT_STEP):
    """RK4 on y'' + y = eps*V for real initial data."""
    if h <= 0:
        raise ValueError("step must be positive")
    terms = _compile_potential(V, eps)

    def f(t, state):
        y, yp = state
        v = 0j
        for k, l, m, c in terms:
            v += c * cmath.exp(1j * k * t) * (y ** l) * (yp ** m)
        if abs(v.imag) > IMAG_TOL_POTENTIAL * max(1.0, abs(v.real)):
            raise ComplexPotential(
                f"potential is not real on real states at t={t}: {v}")
        return (yp, -y + eps * v.real)

    grid = _grid(t_max, h)
    states, truncated = _rk4(f, (float(y0), float(dy0)), grid)
    values = np.array(states)
    return Trajectory(grid[:len(values)], ("y", "dy"), values,
                      meta={"eps": eps, "h": h, "kind": "ode"},
                      truncated=truncated)


def _polar_rhs(polar, eps, order):
    """Numeric (dlogR/dt, dtheta/dt) callables truncated at eps^order."""
    def compile_series(series):
        rows = []
        for k in range(min(order, series.cap) + 1):
            c = series.coeffs[k].compact()
            terms = []
            for exps, coeff in c.terms.items():
                r = exps[c.vars.index("R")] if "R" in c.vars else 0
                w = exps[c.vars.index(PHASE)] if PHASE in c.vars else 0
                terms.append((r, w, coeff.to_complex()))
            if terms:
                rows.append((eps ** k, terms))
        return rows

    rows_logR = compile_series(polar.dlogR_dt)
    rows_theta = compile_series(polar.dtheta_dt)

    def evaluate(rows, R, theta):
        out = 0j
        for epsk, terms in rows:
            acc = 0j
            for r, wexp, c in terms:
                acc += c * (R ** r) * cmath.exp(1j * wexp * theta)
            out += epsk * acc
        return out

    def f(t, state):
        R, theta = state
        v1 = evaluate(rows_logR, R, theta)
        v2 = evaluate(rows_theta, R, theta)
        return (R * v1.real, v2.real)

    return f


def integrate_rg(system, eps, order, t_max, h=DEFAULT_STEP,
                 R0=None, theta0=None, Ar0=None, Br0=None):
    """RK4 on the truncated amplitude equation.

    Polar systems take (R0, theta0); Cartesian systems take a complex
    conjugate pair (Ar0, Br0).
    """
    grid = _grid(t_max, h)
    if isinstance(system, PolarRG):
        if R0 is None or theta0 is None:
            raise ValueError("polar integration needs R0 and theta0")
        f = _polar_rhs(system, eps, order)
        states, truncated = _rk4(f, (float(R0), float(theta0)), grid)
        values = np.array(states)
        return Trajectory(grid[:len(values)], ("R", "theta"), values,
                          meta={"eps": eps, "order": order, "h": h,
                                "kind": "rg-polar"},
                          truncated=truncated)
    if not isinstance(system, RGSystem):
        raise TypeError("system must be a PolarRG or RGSystem")
    if Ar0 is None or Br0 is None:
        raise ValueError("cartesian integration needs Ar0 and Br0")

    def compile_cart(series):
        rows = []
        for k in range(min(order, series.cap) + 1):
            c = series.coeffs[k].compact()
            terms = []
            for exps, coeff in c.terms.items():
                a = exps[c.vars.index("Ar")] if "Ar" in c.vars else 0
                b = exps[c.vars.index("Br")] if "Br" in c.vars else 0
                terms.append((a, b, coeff.to_complex()))
            if terms:
                rows.append((eps ** k, terms))
        return rows

    rows_a = compile_cart(system.rhs_A)
    rows_b = compile_cart(system.rhs_B)

    def f(t, state):
        ar_re, ar_im, br_re, br_im = state
        A = complex(ar_re, ar_im)
        B = complex(br_re, br_im)
        va = sum(e * sum(c * A ** p * B ** q for p, q, c in terms)
                 for e, terms in rows_a)
        vb = sum(e * sum(c * A ** p * B ** q for p, q, c in terms)
                 for e, terms in rows_b)
        return (va.real, va.imag, vb.real, vb.imag)

    A0, B0 = complex(Ar0), complex(Br0)
    states, truncated = _rk4(
        f, (A0.real, A0.imag, B0.real, B0.imag), grid)
    values = np.array(states)
    return Trajectory(grid[:len(values)],
                      ("Ar_re", "Ar_im", "Br_re", "Br_im"), values,
                      meta={"eps": eps, "order": order, "h": h,
                            "kind": "rg-cartesian"},
                      truncated=truncated)


def _compile_table(table, eps, order, polar):
    """[(n, [(eps^k, [(p_or_r, q_or_w, complexcoeff)])])] per harmonic."""
    out = []
    va, vb = ("R", PHASE) if polar else ("Ar", "Br")
    for n, series in sorted(table.items()):
        rows = []
        for k in range(min(order, series.cap) + 1):
            c = series.coeffs[k].compact()
            terms = []
            for exps, coeff in c.terms.items():
                p = exps[c.vars.index(va)] if va in c.vars else 0
                q = exps[c.vars.index(vb)] if vb in c.vars else 0
                terms.append((p, q, coeff.to_complex()))
            if terms:
                rows.append((eps ** k, terms))
        if rows:
            out.append((n, rows))
    return out


def evaluate_expansion(system, amplitudes, eps, expansion_order):
    """y_RG(t) from the secular-free expansion along the amplitude flow."""
    polar = isinstance(system, PolarRG)
    compiled = _compile_table(system.coeff_table, eps, expansion_order, polar)
    t = amplitudes.t
    if polar:
        R = amplitudes.column("R")
        theta = amplitudes.column("theta")
        base = np.exp(1j * theta)
        amp1 = R * base        # stands for Ar = R e^{i theta}
    else:
        amp1 = amplitudes.column("Ar_re") + 1j * amplitudes.column("Ar_im")
        amp2 = amplitudes.column("Br_re") + 1j * amplitudes.column("Br_im")
    y = np.zeros(len(t), dtype=complex)
    for n, rows in compiled:
        pn = np.zeros(len(t), dtype=complex)
        for epsk, terms in rows:
            acc = np.zeros(len(t), dtype=complex)
            for p, q, c in terms:
                if polar:
                    acc += c * (R ** p) * np.exp(1j * q * theta)
                else:
                    acc += c * (amp1 ** p) * (amp2 ** q)
            pn += epsk * acc
        y += pn * np.exp(1j * n * t)
    resid = np.max(np.abs(y.imag)) if len(y) else 0.0
    if resid > IMAG_TOL_EXPANSION * max(1.0, np.max(np.abs(y.real))):
        raise NotReal(f"imaginary residue {resid} in reconstructed signal")
    return Trajectory(t, ("y",), y.real.reshape(-1, 1),
                      meta={"eps": eps, "expansion_order": expansion_order,
                            "kind": "rg-expansion"})


def expansion_initial_conditions(system, eps, rhs_order, expansion_order,
                                 R0=None, theta0=None, Ar0=None, Br0=None):
    """(y(0), y'(0)) of the truncated expansion, including amplitude drift.

    Lets the direct ODE integration start from exactly the same state as
    the RG reconstruction.
    """
    polar = isinstance(system, PolarRG)
    if polar:
        Ar = R0 * cmath.exp(1j * theta0)
        Br = R0 * cmath.exp(-1j * theta0)
    else:
        Ar, Br = complex(Ar0), complex(Br0)

    def num(series, order, dt=False, dA=False, dB=False):
        out = 0j
        for k in range(min(order, series.cap) + 1):
            c = series.coeffs[k]
            if dA:
                c = c.diff("Ar")
            if dB:
                c = c.diff("Br")
            out += eps ** k * c.eval_complex({"Ar": Ar, "Br": Br})
        return out

    if polar:
        # convert once to cartesian coefficients for the drift computation
        raise ValueError("pass the cartesian RGSystem here")
    rhs_a = num(system.rhs_A, rhs_order)
    rhs_b = num(system.rhs_B, rhs_order)
    y = 0j
    dy = 0j
    for n, series in sorted(system.coeff_table.items()):
        pn = num(series, expansion_order)
        dpn = (num(series, expansion_order, dA=True) * rhs_a +
               num(series, expansion_order, dB=True) * rhs_b)
        y += pn
        dy += dpn + 1j * n * pn
    return y.real, dy.real


def compare(a, b):
    """Metrics and CSV rows for two trajectories on the same grid."""
    if len(a.t) != len(b.t) or not np.allclose(a.t, b.t, rtol=0, atol=1e-12):
        raise GridMismatch("trajectories use different time grids")
    ya = a.values[:, 0]
    yb = b.values[:, 0]
    diff = ya - yb
    metrics = {"max_abs_diff": float(np.max(np.abs(diff))),
               "rms_diff": float(np.sqrt(np.mean(diff ** 2)))}
    return metrics, np.column_stack([a.t, ya, yb, diff])


def write_csv(path, rows, header="t,y_numeric,y_rg,diff"):
    with open(path, "w") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(repr(float(x)) for x in row) + "\n")


def write_gnuplot(path, csv_path):
    """Minimal gnuplot script plotting the comparison CSV."""
    with open(path, "w") as fh:
        fh.write(
            "set datafile separator ','\n"
            "set key autotitle columnhead\n"
            f"plot '{csv_path}' using 1:2 with lines, "
            f"'{csv_path}' using 1:3 with lines\n")


def count_envelope_peaks(R, tol=1e-12):
    """Strict interior local maxima of a sampled envelope."""
    peaks = 0
    for i in range(1, len(R) - 1):
        if R[i] - R[i - 1] > tol and R[i] - R[i + 1] > tol:
            peaks += 1
    return peaks


def peak_amplitude(traj, t_min):
    """Max |y| for t >= t_min with parabolic refinement at the peak."""
    y = np.abs(traj.column("y"))
    mask = traj.t >= t_min
    idx = np.argmax(y * mask)
    if idx == 0 or idx == len(y) - 1:
        return float(y[idx])
    y0, y1, y2 = y[idx - 1], y[idx], y[idx + 1]
    denom = y0 - 2 * y1 + y2
    if denom == 0:
        return float(y1)
    delta = 0.5 * (y0 - y2) / denom
    return float(y1 - 0.25 * (y0 - y2) * delta)
