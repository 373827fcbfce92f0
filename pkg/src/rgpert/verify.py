"""Finite-cap machine checks of the engine's exact identities.

Every check returns an IdentityReport; a failure carries the first
offending (harmonic, eps-order, monomial) as a concrete counterexample.
"""

import random
from dataclasses import dataclass

from .algebra import (GaussianRational, ParamPolynomial, EpsilonSeries,
                      substitute, P, grq, gr)
from .potential import Potential, HarmonicSeries, eval_potential
from .errors import TrivialLinear

_ZP = ParamPolynomial.zero()


@dataclass(frozen=True)
class IdentityReport:
    name: str
    cap: int
    passed: bool
    counterexample: tuple | None = None

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        extra = ""
        if not self.passed and self.counterexample is not None:
            n, k, mono = self.counterexample
            extra = f"  (harmonic {n}, eps^{k}, monomial {mono})"
        return f"{self.name} @K={self.cap}: {status}{extra}"


def _first_offense(n, diff):
    """(n, eps-order, monomial) of the first nonzero term of a series."""
    for k, c in enumerate(diff.coeffs):
        c = c.compact()
        if not c.is_zero():
            exps, coeff = c.sorted_terms()[0]
            mono = "*".join(f"{v}^{e}" for v, e in zip(c.vars, exps) if e)
            return (n, k, f"{coeff}*{mono}" if mono else str(coeff))
    return None


def _report(name, K, offenses):
    for off in offenses:
        if off is not None:
            return IdentityReport(name, K, False, off)
    return IdentityReport(name, K, True)


def check_functional_relation(Y, K=None):
    """P_n(eps,t,A,B) == P_n(eps,t-s, P_1(eps,s,A,B), P_-1(eps,s,A,B))
    as an exact identity mod eps^{K+1}, with symbolic s."""
    if K is None:
        K = Y.cap
    shift = {"t": P("s")}
    p1_s = Y.secular_coefficient(1).truncate(K).subs_poly(shift)
    pm1_s = Y.secular_coefficient(-1).truncate(K).subs_poly(shift)
    t_minus_s = P("t") - P("s")
    offenses = []
    for n in Y.harmonics():
        lhs = Y.secular_coefficient(n).truncate(K)
        rhs = substitute(lhs, {"t": t_minus_s, "A": p1_s, "B": pm1_s})
        offenses.append(_first_offense(n, lhs - rhs))
    return _report("functional_relation", K, offenses)


def check_inversion(Y, K=None):
    """P_{+-1}(eps,t, P_1(eps,-t,A,B), P_-1(eps,-t,A,B)) == (A, B)."""
    if K is None:
        K = Y.cap
    neg_t = {"t": -P("t")}
    p1_neg = Y.secular_coefficient(1).truncate(K).subs_poly(neg_t)
    pm1_neg = Y.secular_coefficient(-1).truncate(K).subs_poly(neg_t)
    offenses = []
    for n, target in ((1, P("A")), (-1, P("B"))):
        lhs = substitute(Y.secular_coefficient(n).truncate(K),
                         {"A": p1_neg, "B": pm1_neg})
        offenses.append(
            _first_offense(n, lhs - EpsilonSeries.from_poly(target, K)))
    return _report("inversion", K, offenses)


def check_residual(Y, K=None):
    """Harmonic-wise residual of y'' + y - eps*V vanishes mod eps^{K+1}."""
    if K is None:
        K = Y.cap
    table = Y.table.truncate(K)
    rhs = eval_potential(Y.potential, table, K - 1) if K >= 1 else None
    harmonics = set(table.harmonics())
    if rhs is not None:
        harmonics.update(rhs.harmonics())
    offenses = []
    i2 = lambda m: GaussianRational(0, 2 * m)
    for m in sorted(harmonics):
        pm = table.harmonic(m)
        lhs = (pm.map_coeffs(lambda c: c.diff("t").diff("t")) +
               pm.map_coeffs(lambda c, m=m: c.diff("t") * i2(m)) +
               pm * GaussianRational(1 - m * m))
        if rhs is not None:
            lhs = lhs - rhs.harmonic(m).extend(K).shift(1)
        offenses.append(_first_offense(m, lhs))
    return _report("residual", K, offenses)


def check_secular_free(rgsys):
    """Every stored renormalized-expansion coefficient is t-free."""
    offenses = []
    for n, series in sorted(rgsys.coeff_table.items()):
        for k, c in enumerate(series.coeffs):
            if c.degree_in("t") > 0:
                exps, coeff = c.sorted_terms()[0]
                offenses.append((n, k, str(coeff)))
                break
        else:
            offenses.append(None)
    return _report("secular_free", rgsys.cap, offenses)


def run_identity_suite(Y, rgsys=None, K=None):
    """All applicable checks; list of IdentityReports."""
    out = [check_functional_relation(Y, K),
           check_inversion(Y, K),
           check_residual(Y, K)]
    if rgsys is not None:
        out.append(check_secular_free(rgsys))
    return out


# ---------------------------------------------------------------------------
# Randomized in-class potentials (for the regression oracle)
# ---------------------------------------------------------------------------

_COEFF_CHOICES = (gr(1), gr(-1), gr(0, 1), gr(0, -1), grq(1, 2), grq(-1, 2))


def random_potential(seed):
    """Seeded random admissible potential: <=3 quartets, |k|<=2, l+m<=2,
    n<=1, coefficients in {+-1, +-i, +-1/2}."""
    rng = random.Random(seed)
    while True:
        coeffs = {}
        for _ in range(rng.randint(1, 3)):
            l = rng.randint(0, 2)
            m = rng.randint(0, 2 - l)
            key = (rng.randint(-2, 2), l, m, rng.randint(0, 1))
            coeffs[key] = ParamPolynomial.const(rng.choice(_COEFF_CHOICES))
        try:
            return Potential(coeffs)
        except TrivialLinear:
            continue
