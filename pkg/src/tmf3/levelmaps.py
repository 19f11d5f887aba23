"""Modular forms of level 1 and level 3, and the four ring maps between them.

Level-1 forms live in Z[1/3][c4, c6, Delta, Delta^-1]/(c4^3 - c6^2 - 1728 Delta)
with basis monomials c4^a * c6^eps * Delta^d (eps in {0, 1}, d in Z); level-3
forms are LocElems in the even subring of Z[1/3][a1, a3] localized at Delta.

The maps:

* fstar -- forget the subgroup: c_i evaluated on the universal curve
  (a1, 0, a3, 0, 0);
* qstar -- quotient by the subgroup: c_i evaluated on the quotient curve
  (a1, 0, 3a3, -6a1a3, -(9a3^2 + a1^3 a3));
* hstar -- quotient by the full 3-torsion: multiplication by 3^weight;
* tstar -- residual-subgroup swap, determined on the generators
  a1^2, a1a3, a3^2 and extended as a ring map using t*(f* Delta) = q* Delta
  for the denominators.

Also houses the building cochain complex D0, D1 and the 2-adic valuation
analyses of delta = qstar - fstar.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .multipoly import (MultiPoly, LocElem, GF2Poly, a1, a3, delta_poly,
                        disc_factor, mod2, min_a1_term)
from .rationals import val_p_int
from .weierstrass import WCurve

# images of c4, c6, Delta under fstar and qstar, recomputed from the
# invariant polynomials of the two universal curves
_ZERO = MultiPoly.zero()
_CURVE_F = WCurve(a1(), _ZERO, a3(), _ZERO, _ZERO)
_CURVE_Q = WCurve(a1(), _ZERO, 3 * a3(), -6 * a1() * a3(),
                  -(9 * a3() ** 2 + a1() ** 3 * a3()))

F4, F6, FDELTA = _CURVE_F.c4(), _CURVE_F.c6(), _CURVE_F.disc()
Q4, Q6, QDELTA = _CURVE_Q.c4(), _CURVE_Q.c6(), _CURVE_Q.disc()

# t* on the generators of the even subring
T_A = -3 * a1() ** 2                                        # t*(a1^2)
T_B = Fraction(1, 3) * a1() ** 4 - 9 * a1() * a3()          # t*(a1 a3)
T_C = (Fraction(-1, 27) * a1() ** 6 + 2 * a1() ** 3 * a3()  # t*(a3^2)
       - 27 * a3() ** 2)


class LevelOneForm:
    """Element of MF* in the basis c4^a c6^eps Delta^d, eps in {0,1}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (ca, eps, d), c in terms.items():
                c = Fraction(c)
                if c != 0:
                    key = (ca, eps, d)
                    clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: c for k, c in clean.items() if c != 0}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, ca, eps, d, coef=1):
        if eps not in (0, 1):
            raise ValueError("c6-exponent must be 0 or 1 in the basis")
        return cls({(ca, eps, d): Fraction(coef)})

    @classmethod
    def c4(cls):
        return cls.monomial(1, 0, 0)

    @classmethod
    def c6(cls):
        return cls.monomial(0, 1, 0)

    @classmethod
    def delta(cls, d=1):
        return cls.monomial(0, 0, d)

    # -- structure --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelOneForm.const(other)
        return isinstance(other, LevelOneForm) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def weight_of(self):
        if not self.terms:
            raise ValueError("weight of zero form is undefined")
        ws = {4 * ca + 6 * eps + 12 * d for (ca, eps, d) in self.terms}
        if len(ws) != 1:
            raise ValueError(f"inhomogeneous form, weights {sorted(ws)}")
        return ws.pop()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelOneForm.const(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, Fraction(0)) + c
        return LevelOneForm(t)

    __radd__ = __add__

    def __neg__(self):
        return LevelOneForm({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LevelOneForm.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LevelOneForm.const(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return LevelOneForm({k: c * c0 for k, c in self.terms.items()})
        out = LevelOneForm.zero()
        for (a1_, e1, d1), c1 in self.terms.items():
            for (a2_, e2, d2), c2 in other.terms.items():
                ca, eps, d, c = a1_ + a2_, e1 + e2, d1 + d2, c1 * c2
                if eps == 2:
                    # c6^2 = c4^3 - 1728 Delta
                    out = out + LevelOneForm({(ca + 3, 0, d): c,
                                              (ca, 0, d + 1): -1728 * c})
                else:
                    out = out + LevelOneForm({(ca, eps, d): c})
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a level-1 form")
        result = LevelOneForm.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for (ca, eps, d) in sorted(self.terms, reverse=True):
            c = self.terms[(ca, eps, d)]
            factors = [str(c)]
            for name, x in (("c4", ca), ("c6", eps), ("Delta", d)):
                if x == 1:
                    factors.append(name)
                elif x != 0:
                    factors.append(f"{name}^{x}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"LevelOneForm({self.to_text()})"


# -- the four maps -----------------------------------------------------------

@lru_cache(maxsize=None)
def _cached_pow(which: str, n: int) -> LocElem:
    base = {"F4": F4, "F6": F6, "FD": FDELTA, "Q4": Q4, "Q6": Q6,
            "QD": QDELTA}.get(which)
    if base is not None:
        return LocElem.from_poly(base) ** n
    base = {"FDi": LocElem(MultiPoly.const(1), 3, 1),
            "QDi": LocElem(MultiPoly.const(1), 1, 3)}[which]
    return base ** n


def _image(m: LevelOneForm, k4, k6, kd, kdi) -> LocElem:
    out = LocElem.from_poly(0)
    for (ca, eps, d), c in m.terms.items():
        term = _cached_pow(k4, ca)
        if eps:
            term = term * _cached_pow(k6, 1)
        if d >= 0:
            term = term * _cached_pow(kd, d)
        else:
            term = term * _cached_pow(kdi, -d)
        out = out + c * term
    return out


def fstar(m: LevelOneForm) -> LocElem:
    """Pullback along forgetting the level structure."""
    return _image(m, "F4", "F6", "FD", "FDi")


def qstar(m: LevelOneForm) -> LocElem:
    """Pullback along the degree-3 quotient."""
    return _image(m, "Q4", "Q6", "QD", "QDi")


def hstar(m: LevelOneForm) -> LevelOneForm:
    """Quotient by the full 3-torsion: 3^weight on weight-w parts."""
    return LevelOneForm({(ca, eps, d): c * Fraction(3) ** (4 * ca + 6 * eps + 12 * d)
                         for (ca, eps, d), c in m.terms.items()})


def is_gamma03(g: LocElem) -> bool:
    """Fixed by a1 -> -a1, a3 -> -a3: numerator parity matches denominator."""
    par = (g.e3 + g.e9) % 2
    return all((i + j) % 2 == par for (i, j) in g.num.terms)


@lru_cache(maxsize=None)
def _tpow_cached(which: int, n: int) -> MultiPoly:
    return (T_A, T_B, T_C)[which] ** n


def _tpow(base: MultiPoly, n: int) -> MultiPoly:
    return _tpow_cached((T_A, T_B, T_C).index(base), n)


def _tstar_poly(p: MultiPoly) -> MultiPoly:
    """t* on a polynomial in the even subring of Z[1/3][a1, a3]."""
    out = MultiPoly.zero()
    for (i, j), c in p.terms.items():
        if (i + j) % 2 != 0:
            raise ValueError(f"monomial a1^{i}*a3^{j} is not sigma-invariant")
        k = min(i, j)
        term = MultiPoly.const(c) * _tpow(T_B, k)
        if i > j:
            term = term * _tpow(T_A, (i - j) // 2)
        elif j > i:
            term = term * _tpow(T_C, (j - i) // 2)
        out = out + term
    return out


def tstar(g: LocElem) -> LocElem:
    """The residual-subgroup swap, as a ring map on the localized even ring.

    Denominators are cleared to a Delta-power first; t*(Delta-power) is a
    power of q*(Delta) = a3 (a1^3 - 27 a3)^3 by t* f* = q*.
    """
    if not is_gamma03(g):
        raise ValueError("tstar requires a sigma-invariant element")
    m = max(math.ceil(g.e3 / 3), g.e9)
    extra = a3() ** (3 * m - g.e3) * disc_factor() ** (m - g.e9)
    return LocElem(_tstar_poly(g.num * extra), m, 3 * m)


def delta_map(m: LevelOneForm) -> LocElem:
    """delta = qstar - fstar, the degree-1 part of the building complex."""
    return qstar(m) - fstar(m)


# -- building cochain complex ------------------------------------------------

def cochain_D0(m: LevelOneForm):
    """D0(m) = (q* m - f* m, h* m - m), the alternating sum of cofaces
    TMF -> TMF(Gamma_0(3)) x TMF."""
    return (delta_map(m), hstar(m) - m)


def cochain_D1(u: LocElem, v: LevelOneForm) -> LocElem:
    """D1(u, v) = t* u + u - f* v into the top cosimplicial degree."""
    return tstar(u) + u - fstar(v)


def basis_monomials(max_weight: int, d_range=(-4, 4)):
    """All basis monomials c4^a c6^eps Delta^d with 0 <= weight <= max_weight
    and d in the given window."""
    out = []
    for d in range(d_range[0], d_range[1] + 1):
        for eps in (0, 1):
            ca = 0
            while True:
                w = 4 * ca + 6 * eps + 12 * d
                if w > max_weight:
                    break
                if w >= 0:
                    out.append(LevelOneForm.monomial(ca, eps, d))
                ca += 1
    return out


# -- 2-adic valuation analyses (the building-complex theorems) ---------------

def val2_delta_c4pow(k: int) -> dict:
    """nu_2 of the content of delta(c4^k), checked against 4 + nu_2(k),
    with the reduced coefficient on a1^(4k-3) a3 checked odd."""
    if k < 1:
        raise ValueError("k >= 1 required")
    p = Q4 ** k - F4 ** k
    v = p.content_val2()
    expected = 4 + val_p_int(k, 2)
    lead = p.coeff((4 * k - 3, 1)) / Fraction(2) ** expected
    ok = (v == expected and lead.denominator == 1 and lead.numerator % 2 == 1)
    return {"input": f"delta(c4^{k})", "valuation": v, "expected": expected,
            "leading_term": f"{lead}*a1^{4 * k - 3}*a3", "pass": ok}


def val_delta_c4c6(k: int) -> dict:
    """Content valuation of delta(c4^k c6) is 3, odd coefficient on
    a1^(4k+3) a3."""
    if k < 0:
        raise ValueError("k >= 0 required")
    p = Q4 ** k * Q6 - F4 ** k * F6
    v = p.content_val2()
    lead = p.coeff((4 * k + 3, 1)) / 8
    ok = (v == 3 and lead.denominator == 1 and lead.numerator % 2 == 1)
    return {"input": f"delta(c4^{k}*c6)", "valuation": v, "expected": 3,
            "leading_term": f"{lead}*a1^{4 * k + 3}*a3", "pass": ok}


def delta_mod2_Delta_pow(N: int) -> dict:
    """min_a1_term of delta(Delta^N) mod 2, checked against
    a1^(3*2^(r+1)) a3^(2^(r+1)(4k+1)) for N = 2^r (2k+1)."""
    if N < 1:
        raise ValueError("N >= 1 required")
    d = mod2(QDELTA) ** N + mod2(FDELTA) ** N
    lead = min_a1_term(d)
    r = val_p_int(N, 2)
    kk = ((N >> r) - 1) // 2
    expected = (3 * 2 ** (r + 1), 2 ** (r + 1) * (4 * kk + 1))
    ok = lead == expected
    return {"input": f"delta(Delta^{N}) mod 2",
            "leading_term": f"a1^{lead[0]}*a3^{lead[1]}",
            "expected": f"a1^{expected[0]}*a3^{expected[1]}", "pass": ok}


def lemma_binomial_check(d: int, k: int) -> dict:
    """(u + 2^d v)^k = u^k + 2^(d + nu_2(k)) g(u, v) with g having an odd
    coefficient on u^(k-1) v and otherwise only higher powers of v."""
    if d <= 1:
        raise ValueError("d > 1 required")
    if k < 1:
        raise ValueError("k >= 1 required")
    uv = ("u", "v")
    u = MultiPoly.gen("u", uv)
    v = MultiPoly.gen("v", uv)
    p = (u + 2 ** d * v) ** k - u ** k
    e = d + val_p_int(k, 2)
    divisible = p.content_val2() >= e
    g = p * Fraction(1, 2 ** e)
    lead = g.coeff((k - 1, 1))
    lead_odd = lead.denominator == 1 and lead.numerator % 2 == 1
    higher_v = all(exps == (k - 1, 1) or exps[1] >= 2 for exps in g.terms)
    ok = divisible and lead_odd and higher_v
    return {"input": f"(u + 2^{d} v)^{k}", "valuation": p.content_val2(),
            "expected": e, "pass": ok}
