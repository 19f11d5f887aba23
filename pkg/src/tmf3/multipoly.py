"""Sparse multivariate polynomials with exact rational coefficients.

The default variable set is (a1, a3) carrying modular-form weights (1, 3);
an extended set a1, a2, a3, a4, a6 (weights 1, 2, 3, 4, 6) is used by the
Weierstrass invariant polynomials, and ad-hoc sets like (u, v) by the
binomial lemma checks.

Also provides:

* ``GF2Poly`` -- the mod-2 reduction, as a set of exponent vectors;
* ``LocElem`` -- canonical elements of the localization inverting
  Delta = a3^3 * (a1^3 - 27*a3); denominators are tracked as the pair
  (power of a3, power of a1^3 - 27*a3) since Delta is reducible.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import val_p_int

DEFAULT_VARS = ("a1", "a3")
STANDARD_WEIGHTS = {"a1": 1, "a2": 2, "a3": 3, "a4": 4, "a6": 6}


def _weights_for(vars):
    return tuple(STANDARD_WEIGHTS.get(v, 1) for v in vars)


class MultiPoly:
    """Sparse polynomial: dict {exponent tuple: nonzero Fraction}."""

    __slots__ = ("vars", "weights", "terms")

    def __init__(self, terms=None, vars=DEFAULT_VARS, weights=None):
        self.vars = tuple(vars)
        self.weights = tuple(weights) if weights is not None else _weights_for(self.vars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def _make(cls, terms, vars, weights):
        """Internal: build from an already-clean dict of Fractions."""
        self = cls.__new__(cls)
        self.vars = vars
        self.weights = weights
        self.terms = {e: c for e, c in terms.items() if c}
        return self

    @classmethod
    def zero(cls, vars=DEFAULT_VARS, weights=None):
        return cls({}, vars, weights)

    @classmethod
    def const(cls, c, vars=DEFAULT_VARS, weights=None):
        n = len(vars)
        return cls({(0,) * n: Fraction(c)}, vars, weights)

    @classmethod
    def gen(cls, name, vars=DEFAULT_VARS, weights=None):
        i = tuple(vars).index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls({tuple(e): Fraction(1)}, vars, weights)

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.vars, self.weights)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def _wrap(self, x):
        if isinstance(x, MultiPoly):
            return x
        return MultiPoly.const(x, self.vars, self.weights)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._wrap(other)
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly._make(t, self.vars, self.weights)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._make({e: -c for e, c in self.terms.items()},
                               self.vars, self.weights)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return MultiPoly._make({e: c * c0 for e, c in self.terms.items()},
                                   self.vars, self.weights)
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly._make(t, self.vars, self.weights)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(1, self.vars, self.weights)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    # -- queries -----------------------------------------------------------

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def weight_of(self) -> int:
        """Common weight of all terms; raises if inhomogeneous or zero."""
        if not self.terms:
            raise ValueError("weight of the zero polynomial is undefined")
        ws = {sum(x * w for x, w in zip(e, self.weights)) for e in self.terms}
        if len(ws) != 1:
            raise ValueError(f"inhomogeneous polynomial, weights {sorted(ws)}")
        return ws.pop()

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        ws = {sum(x * w for x, w in zip(e, self.weights)) for e in self.terms}
        return len(ws) == 1

    def content_val2(self):
        """2-adic valuation of the gcd of the (integer) coefficients."""
        if not self.terms:
            raise ValueError("content of zero polynomial")
        vals = []
        for c in self.terms.values():
            if c.denominator % 2 == 0:
                raise ValueError("coefficient with even denominator")
            vals.append(val_p_int(c.numerator, 2))
        return min(vals)

    def eval_at(self, values: dict):
        """Evaluate at a dict {var name: Fraction}; returns a Fraction."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for name, x in zip(self.vars, e):
                if x:
                    v *= Fraction(values[name]) ** x
            total += v
        return total

    def map_vars(self, images: dict):
        """Ring-map substitution: each variable goes to a MultiPoly/scalar.

        All images must share one variable set, which becomes the result's.
        """
        tpl = next(p for p in images.values() if isinstance(p, MultiPoly))
        out = MultiPoly.zero(tpl.vars, tpl.weights)
        for e, c in self.terms.items():
            term = MultiPoly.const(c, tpl.vars, tpl.weights)
            for name, x in zip(self.vars, e):
                if x:
                    img = images[name]
                    if not isinstance(img, MultiPoly):
                        img = MultiPoly.const(img, tpl.vars, tpl.weights)
                    term = term * img ** x
            out = out + term
        return out

    # -- printing ----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms sorted by descending lex exponents."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            factors = [str(c)]
            for name, x in zip(self.vars, e):
                if x == 1:
                    factors.append(name)
                elif x > 1:
                    factors.append(f"{name}^{x}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


# -- fixed polynomials in (a1, a3) ----------------------------------------

def a1():
    return MultiPoly.gen("a1")


def a3():
    return MultiPoly.gen("a3")


def disc_factor():
    """a1^3 - 27*a3, the non-monomial factor of Delta."""
    return a1() ** 3 - 27 * a3()


def delta_poly():
    """Delta = a3^3 * (a1^3 - 27*a3) = a1^3*a3^3 - 27*a3^4."""
    return a3() ** 3 * disc_factor()


# -- exact division ---------------------------------------------------------

def divide_exact(p: MultiPoly, d: MultiPoly):
    """Exact quotient p / d, or None if d does not divide p.

    Division is performed univariately in the first variable of ``d`` whose
    degree is positive, which suffices for the two fixed divisors a3 and
    a1^3 - 27*a3 (their leading coefficients in that variable are units).
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.vars, p.weights)
    p._check(d)
    pivot = next(i for i, name in enumerate(d.vars) if d.degree_in(name) > 0)
    ddeg = max(e[pivot] for e in d.terms)
    lead = {e: c for e, c in d.terms.items() if e[pivot] == ddeg}
    if len(lead) != 1:
        raise ValueError("divisor leading coefficient is not a monomial")
    (le, lc), = lead.items()
    if len(d.terms) == 1:
        # monomial divisor: exponent shift
        q = {}
        for e, c in p.terms.items():
            qe = tuple(x - y for x, y in zip(e, le))
            if any(x < 0 for x in qe):
                return None
            q[qe] = c / lc
        return MultiPoly._make(q, p.vars, p.weights)
    q = {}
    r = dict(p.terms)
    while r:
        e = max(r, key=lambda t: (t[pivot], t))
        if e[pivot] < ddeg or any(x < y for x, y in zip(e, le)):
            return None
        qe = tuple(x - y for x, y in zip(e, le))
        qc = r[e] / lc
        q[qe] = qc
        for e2, c2 in d.terms.items():
            ke = tuple(x + y for x, y in zip(qe, e2))
            nc = r.get(ke, 0) - qc * c2
            if nc:
                r[ke] = nc
            else:
                r.pop(ke, None)
    return MultiPoly._make(q, p.vars, p.weights)


# -- mod 2 -------------------------------------------------------------------

class GF2Poly:
    """Polynomial over F2: frozenset of exponent tuples."""

    __slots__ = ("vars", "monos")

    def __init__(self, monos=(), vars=DEFAULT_VARS):
        acc = set()
        for e in monos:
            e = tuple(e)
            if e in acc:
                acc.discard(e)
            else:
                acc.add(e)
        self.vars = tuple(vars)
        self.monos = frozenset(acc)

    def is_zero(self):
        return not self.monos

    def __eq__(self, other):
        return (isinstance(other, GF2Poly) and self.vars == other.vars
                and self.monos == other.monos)

    def __hash__(self):
        return hash((self.vars, self.monos))

    def __add__(self, other):
        return GF2Poly(self.monos ^ other.monos, self.vars)

    def __mul__(self, other):
        acc = set()
        for e1 in self.monos:
            for e2 in other.monos:
                e = tuple(i + j for i, j in zip(e1, e2))
                if e in acc:
                    acc.discard(e)
                else:
                    acc.add(e)
        return GF2Poly(acc, self.vars)

    def __pow__(self, n: int):
        result = GF2Poly([(0,) * len(self.vars)], self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            # squaring over F2 is the Frobenius: double every exponent
            base = GF2Poly([tuple(2 * x for x in e) for e in base.monos], base.vars)
            n >>= 1
        return result

    def to_text(self):
        if not self.monos:
            return "0"
        parts = []
        for e in sorted(self.monos, reverse=True):
            factors = []
            for name, x in zip(self.vars, e):
                if x == 1:
                    factors.append(name)
                elif x > 1:
                    factors.append(f"{name}^{x}")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"GF2Poly({self.to_text()})"


def mod2(p: MultiPoly) -> GF2Poly:
    """Reduce coefficients mod 2; denominators must be odd (3 maps to 1)."""
    monos = []
    for e, c in p.terms.items():
        if c.denominator % 2 == 0:
            raise ValueError(f"coefficient {c} has even denominator")
        if c.numerator % 2 == 1:
            monos.append(e)
    return GF2Poly(monos, p.vars)


def min_a1_term(p):
    """The unique term of minimal a1-exponent of a nonzero (GF2)poly.

    For a MultiPoly, returns (exponent tuple, coefficient); for a GF2Poly,
    returns the exponent tuple.  Ties broken by minimal full exponent tuple
    (impossible for homogeneous input).
    """
    if isinstance(p, GF2Poly):
        if not p.monos:
            raise ValueError("min_a1_term of zero polynomial")
        i = p.vars.index("a1")
        return min(p.monos, key=lambda e: (e[i], e))
    if not p.terms:
        raise ValueError("min_a1_term of zero polynomial")
    i = p.vars.index("a1")
    e = min(p.terms, key=lambda t: (t[i], t))
    return e, p.terms[e]


# -- localization at Delta ---------------------------------------------------

class LocElem:
    """num / (a3^e3 * (a1^3 - 27*a3)^e9), stored in canonical form."""

    __slots__ = ("num", "e3", "e9")

    def __init__(self, num: MultiPoly, e3: int = 0, e9: int = 0):
        if e3 < 0 or e9 < 0:
            raise ValueError("denominator exponents must be >= 0")
        num, e3, e9 = _loc_reduce(num, e3, e9)
        self.num = num
        self.e3 = e3
        self.e9 = e9

    @classmethod
    def from_poly(cls, p):
        if isinstance(p, LocElem):
            return p
        if isinstance(p, (int, Fraction)):
            p = MultiPoly.const(p)
        return cls(p, 0, 0)

    @classmethod
    def delta_inverse(cls, k: int = 1):
        """Delta^-k as a LocElem; sugar for exponents (3k, k)."""
        return cls(MultiPoly.const(1), 3 * k, k)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        other = LocElem.from_poly(other)
        return (self.num, self.e3, self.e9) == (other.num, other.e3, other.e9)

    def __hash__(self):
        return hash((self.num, self.e3, self.e9))

    def __add__(self, other):
        other = LocElem.from_poly(other)
        e3 = max(self.e3, other.e3)
        e9 = max(self.e9, other.e9)
        f = disc_factor()
        n1 = self.num * a3() ** (e3 - self.e3) * f ** (e9 - self.e9)
        n2 = other.num * a3() ** (e3 - other.e3) * f ** (e9 - other.e9)
        return LocElem(n1 + n2, e3, e9)

    __radd__ = __add__

    def __neg__(self):
        return LocElem(-self.num, self.e3, self.e9)

    def __sub__(self, other):
        return self + (-LocElem.from_poly(other))

    def __rsub__(self, other):
        return LocElem.from_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocElem(self.num * other, self.e3, self.e9)
        other = LocElem.from_poly(other)
        return LocElem(self.num * other.num, self.e3 + other.e3, self.e9 + other.e9)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = self.inverse()
            return inv ** (-n)
        return LocElem(self.num ** n, self.e3 * n, self.e9 * n)

    def inverse(self):
        """Inverse, defined only when num is a unit of the localization,
        i.e. a scalar times a3^i * (a1^3-27*a3)^j."""
        num, i, j = self.num, 0, 0
        while True:
            q = divide_exact(num, a3())
            if q is None:
                break
            num, i = q, i + 1
        f = disc_factor()
        while True:
            q = divide_exact(num, f)
            if q is None:
                break
            num, j = q, j + 1
        if len(num.terms) != 1 or any(x != 0 for x in next(iter(num.terms))):
            raise ValueError("element is not invertible in the localization")
        c = next(iter(num.terms.values()))
        inv_num = (a3() ** self.e3) * (f ** self.e9) * (Fraction(1) / c)
        return LocElem(inv_num, i, j)

    def as_poly(self) -> MultiPoly:
        if self.e3 or self.e9:
            raise ValueError("element has a nontrivial denominator")
        return self.num

    def weight_of(self) -> int:
        return self.num.weight_of() - 3 * self.e3 - 3 * self.e9

    def to_text(self):
        s = self.num.to_text()
        den = []
        if self.e3 == 1:
            den.append("a3")
        elif self.e3 > 1:
            den.append(f"a3^{self.e3}")
        if self.e9 == 1:
            den.append("(a1^3 - 27*a3)")
        elif self.e9 > 1:
            den.append(f"(a1^3 - 27*a3)^{self.e9}")
        if den:
            return f"({s}) / ({' * '.join(den)})"
        return s

    def __repr__(self):
        return f"LocElem({self.to_text()})"


def _loc_reduce(num, e3, e9):
    if num.is_zero():
        return num, 0, 0
    while e3 > 0:
        q = divide_exact(num, a3())
        if q is None:
            break
        num, e3 = q, e3 - 1
    f = disc_factor()
    while e9 > 0:
        q = divide_exact(num, f)
        if q is None:
            break
        num, e9 = q, e9 - 1
    return num, e3, e9


def loc_normalize(num: MultiPoly, e3: int, e9: int) -> LocElem:
    """Canonical form of num / (a3^e3 (a1^3-27a3)^e9)."""
    return LocElem(num, e3, e9)
