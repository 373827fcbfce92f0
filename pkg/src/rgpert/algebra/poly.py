"""Sparse multivariate polynomials over Gaussian rationals.

Variables are named strings.  Each polynomial carries its own ordered
variable tuple; arithmetic on mismatched tuples unions them.  Exponents
are integers and may be negative (Laurent monomials in the polar phase
variable), although most of the engine only ever produces ordinary
polynomials.

Term order is graded lexicographic with the fixed variable precedence

    t < A < B < Ar < Br < R < (everything else, alphabetically)

which makes every text rendering deterministic.
"""

from .rationals import GaussianRational, ZERO, ONE, Rat

_CORE_PRECEDENCE = {"t": 0, "A": 1, "B": 2, "Ar": 3, "Br": 4, "R": 5}


def var_sort_key(name):
    if name in _CORE_PRECEDENCE:
        return (0, _CORE_PRECEDENCE[name], "")
    return (1, 0, name)


def order_vars(names):
    return tuple(sorted(set(names), key=var_sort_key))


class ParamPolynomial:
    """Immutable sparse polynomial: exponent tuple -> GaussianRational."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[exps] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, vars, terms):
        obj = object.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return _ZERO_POLY

    @classmethod
    def const(cls, c):
        if isinstance(c, int):
            c = GaussianRational(c)
        if not c:
            return _ZERO_POLY
        return cls._raw((), {(): c})

    @classmethod
    def var(cls, name, exp=1, coeff=ONE):
        if not coeff:
            return _ZERO_POLY
        if exp == 0:
            return cls.const(coeff)
        return cls._raw((name,), {(exp,): coeff})

    @classmethod
    def monomial(cls, coeff, **exps):
        """monomial(gr(1,2), A=2, t=1) == (1+2i) * A^2 * t."""
        if not coeff:
            return _ZERO_POLY
        names = order_vars(n for n, e in exps.items() if e)
        key = tuple(exps[n] for n in names)
        return cls._raw(names, {key: coeff})

    # -- alignment --------------------------------------------------------

    def reindexed(self, vars):
        """Same polynomial over the (super)set ``vars``."""
        if vars == self.vars:
            return self
        pos = {n: i for i, n in enumerate(vars)}
        width = len(vars)
        own = [pos[n] for n in self.vars]
        terms = {}
        for exps, c in self.terms.items():
            key = [0] * width
            for i, e in zip(own, exps):
                key[i] = e
            terms[tuple(key)] = c
        return ParamPolynomial._raw(tuple(vars), terms)

    def _aligned(self, other):
        if self.vars == other.vars:
            return self, other
        union = order_vars(self.vars + other.vars)
        return self.reindexed(union), other.reindexed(union)

    def compact(self):
        """Drop variables that no longer occur."""
        if not self.terms:
            return _ZERO_POLY
        used = [i for i in range(len(self.vars))
                if any(exps[i] for exps in self.terms)]
        if len(used) == len(self.vars):
            return self
        vars = tuple(self.vars[i] for i in used)
        terms = {}
        for exps, c in self.terms.items():
            key = tuple(exps[i] for i in used)
            terms[key] = terms.get(key, ZERO) + c
        return ParamPolynomial(vars, terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exps, c in b.terms.items():
            s = terms.get(exps)
            if s is None:
                terms[exps] = c
            else:
                s = s + c
                if s:
                    terms[exps] = s
                else:
                    del terms[exps]
        return ParamPolynomial._raw(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPolynomial._raw(
            self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is GaussianRational:
            return self.scaled(other)
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        terms = {}
        get = terms.get
        bt = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bt:
                key = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = get(key)
                if s is None:
                    terms[key] = c
                else:
                    s = s + c
                    if s:
                        terms[key] = s
                    else:
                        del terms[key]
        return ParamPolynomial._raw(a.vars, terms)

    __rmul__ = __mul__

    def scaled(self, c):
        if not c:
            return _ZERO_POLY
        return ParamPolynomial._raw(
            self.vars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = _ONE_POLY
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus in one variable ----------------------------------------

    def diff(self, name):
        if name not in self.vars:
            return _ZERO_POLY
        i = self.vars.index(name)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1:]
                terms[key] = terms.get(key, ZERO) + c * e
        return ParamPolynomial(self.vars, terms)

    def integrate(self, name):
        """Antiderivative in ``name`` with zero constant term."""
        p = self if name in self.vars else self.reindexed(
            order_vars(self.vars + (name,)))
        i = p.vars.index(name)
        terms = {}
        for exps, c in p.terms.items():
            e = exps[i]
            if e == -1:
                raise ValueError("cannot integrate 1/x term")
            key = exps[:i] + (e + 1,) + exps[i + 1:]
            terms[key] = c * GaussianRational(Rat(1, e + 1))
        return ParamPolynomial._raw(p.vars, terms)

    # -- substitution and extraction -------------------------------------

    def subs(self, bindings):
        """Substitute variables by polynomials/GaussianRationals/ints.

        Bound variables with negative exponents are only allowed when the
        binding is an invertible monomial.
        """
        bindings = {n: _as_poly(v) for n, v in bindings.items()
                    if n in self.vars}
        if not bindings:
            return self
        idx = {n: self.vars.index(n) for n in bindings}
        keep = [i for i, n in enumerate(self.vars) if n not in bindings]
        keep_vars = tuple(self.vars[i] for i in keep)
        out = _ZERO_POLY
        powcache = {}
        for exps, c in self.terms.items():
            residual = ParamPolynomial._raw(
                keep_vars, {tuple(exps[i] for i in keep): c})
            factor = residual
            for name, i in idx.items():
                e = exps[i]
                if not e:
                    continue
                key = (name, e)
                p = powcache.get(key)
                if p is None:
                    p = _poly_int_power(bindings[name], e)
                    powcache[key] = p
                factor = factor * p
            out = out + factor
        return out.compact()

    def rename(self, mapping):
        """Rename variables (bijective on the occurring names)."""
        vars = tuple(mapping.get(n, n) for n in self.vars)
        order = order_vars(vars)
        return ParamPolynomial._raw(vars, dict(self.terms)).reindexed(order) \
            if vars != order else ParamPolynomial._raw(vars, dict(self.terms))

    def coefficient(self, name, power):
        """Polynomial coefficient of name**power (name removed)."""
        if name not in self.vars:
            return self if power == 0 else _ZERO_POLY
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] == power:
                terms[exps[:i] + exps[i + 1:]] = c
        return ParamPolynomial(rest, terms).compact()

    def degree_in(self, name):
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_degree_in(self, name):
        if name not in self.vars or not self.terms:
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def divide_by_var(self, name, power=1):
        """Exact division by name**power; every term must carry it."""
        if self.is_zero():
            return self
        p = self if name in self.vars else None
        if p is None or p.min_degree_in(name) < power:
            from ..errors import NotDivisible
            raise NotDivisible(f"not divisible by {name}^{power}")
        i = p.vars.index(name)
        terms = {e[:i] + (e[i] - power,) + e[i + 1:]: c
                 for e, c in p.terms.items()}
        return ParamPolynomial._raw(p.vars, terms).compact()

    def conjugated(self):
        """Conjugate every coefficient (variables are treated as real)."""
        return ParamPolynomial._raw(
            self.vars, {e: c.conjugate() for e, c in self.terms.items()})

    def constant_term(self):
        width = len(self.vars)
        return self.terms.get((0,) * width, ZERO)

    def as_constant(self):
        """The value of a constant polynomial, or None."""
        p = self.compact()
        if not p.terms:
            return ZERO
        if p.vars:
            return None
        return p.terms[()]

    def eval_complex(self, values):
        """Floating evaluation; ``values`` maps every occurring var."""
        out = 0j
        vals = [complex(values[n]) for n in self.vars]
        for exps, c in self.terms.items():
            m = c.to_complex()
            for v, e in zip(vals, exps):
                m *= v ** e
            out += m
        return out

    # -- predicates and hashing ------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.compact(), other.compact()
        return a.vars == b.vars and a.terms == b.terms

    def __hash__(self):
        p = self.compact()
        return hash((p.vars, frozenset(p.terms.items())))

    # -- rendering --------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        def key(item):
            exps = item[0]
            return (sum(exps), exps)
        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        p = self.compact()
        if not p.terms:
            return "0"
        parts = []
        for exps, c in p.sorted_terms():
            mono = "*".join(
                (n if e == 1 else f"{n}^{e}")
                for n, e in zip(p.vars, exps) if e)
            cs = str(c)
            if mono:
                if cs == "1":
                    body = mono
                elif cs == "-1":
                    body = f"-{mono}"
                else:
                    body = f"{cs}*{mono}"
            else:
                body = cs
            parts.append(body)
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __repr__(self):
        return f"<ParamPolynomial {self}>"

    def to_json(self):
        p = self.compact()
        return {
            "vars": list(p.vars),
            "terms": [[list(exps), *c.json_parts()]
                      for exps, c in p.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        vars = tuple(data["vars"])
        terms = {}
        for exps, re_s, im_s in data["terms"]:
            rn, rd = re_s.split("/")
            im, imd = im_s.split("/")
            terms[tuple(exps)] = GaussianRational(
                Rat(int(rn), int(rd)), Rat(int(im), int(imd)))
        return cls(vars, terms).compact()


def _poly_int_power(p, e):
    if e >= 0:
        return p ** e
    # Laurent case: only invertible monomials can be raised negatively.
    if len(p.terms) != 1:
        raise ValueError("negative power of a non-monomial substitution")
    (exps, c), = p.terms.items()
    inv = ParamPolynomial._raw(p.vars, {tuple(-x for x in exps): c.inverse()})
    return inv ** (-e)


def _as_poly(x):
    if type(x) is ParamPolynomial:
        return x
    if isinstance(x, (int, GaussianRational)):
        return ParamPolynomial.const(x)
    if type(x) is type(Rat(0)):
        return ParamPolynomial.const(GaussianRational(x))
    return NotImplemented


_ZERO_POLY = ParamPolynomial._raw((), {})
_ONE_POLY = ParamPolynomial._raw((), {(): ONE})


def P(name):
    """Variable shorthand: P('A') is the polynomial A."""
    return ParamPolynomial.var(name)
