"""Exact q-expansions of modular forms and Eisenstein series.

A QSeries is a truncated power series in q with Fraction coefficients and an
explicit precision: coefficients are known for q^0 .. q^(prec-1).  Arithmetic
truncates to the minimum precision of the operands, so precision tracking is
automatic and pessimistic.

Provides c4, c6, Delta, the Eisenstein series G_2k, and exact expression of
G_2k in the c4/c6/Delta monomial basis by linear algebra over Q.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import bernoulli, sigma_pow


class QSeries:
    """sum coeffs[n] q^n, exact up to (not including) q^prec."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec=None):
        coeffs = [Fraction(c) for c in coeffs]
        if prec is None:
            prec = len(coeffs)
        if prec < 1:
            raise ValueError("precision must be >= 1")
        coeffs = coeffs[:prec]
        coeffs += [Fraction(0)] * (prec - len(coeffs))
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def zero(cls, prec):
        return cls([], prec)

    @classmethod
    def one(cls, prec):
        return cls([1], prec)

    @classmethod
    def q(cls, prec):
        return cls([0, 1], prec)

    def __getitem__(self, n):
        if not 0 <= n < self.prec:
            raise IndexError(f"coefficient of q^{n} beyond precision {self.prec}")
        return self.coeffs[n]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        """Equality of the known coefficients, to the common precision."""
        if isinstance(other, (int, Fraction)):
            other = QSeries([other], self.prec)
        n = min(self.prec, other.prec)
        return self.coeffs[:n] == other.coeffs[:n]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries([other], self.prec)
        n = min(self.prec, other.prec)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries([other], self.prec)
        return self + (-other)

    def __rsub__(self, other):
        return QSeries([other], self.prec) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self.coeffs], self.prec)
        n = min(self.prec, other.prec)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QSeries.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; requires a unit constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("inverse of a q-series with zero constant term")
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * (self.prec - 1)
        for n in range(1, self.prec):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self.coeffs[k] * out[n - k] if k < self.prec else 0
            out[n] = -inv0 * acc
        return QSeries(out, self.prec)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def shift(self, k: int):
        """Multiply by q^k (k >= 0 keeps precision window at prec)."""
        if k < 0:
            if any(self.coeffs[i] != 0 for i in range(min(-k, self.prec))):
                raise ValueError("negative shift of a series with low-order terms")
            return QSeries(self.coeffs[-k:], self.prec)
        return QSeries([Fraction(0)] * k + self.coeffs, self.prec)

    def truncate(self, prec):
        if prec > self.prec:
            raise ValueError("cannot extend precision by truncation")
        return QSeries(self.coeffs, prec)

    def to_text(self, terms=8):
        parts = []
        for n, c in enumerate(self.coeffs[:terms]):
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            elif n == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{n}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{min(terms, self.prec)})"

    def __repr__(self):
        return f"QSeries({self.to_text()})"


# -- the standard level-1 forms ----------------------------------------------

def eisenstein_G(k: int, prec: int) -> QSeries:
    """G_k = -B_k/(2k) + sum_{n>=1} sigma_(k-1)(n) q^n, for even k >= 4."""
    if k < 4 or k % 2 != 0:
        raise ValueError("eisenstein_G needs even weight >= 4")
    coeffs = [-bernoulli(k) / (2 * k)]
    coeffs += [Fraction(sigma_pow(k - 1, n)) for n in range(1, prec)]
    return QSeries(coeffs, prec)


def series_c4(prec: int) -> QSeries:
    """c4 = 1 + 240 sum sigma_3(n) q^n."""
    coeffs = [Fraction(1)] + [240 * Fraction(sigma_pow(3, n))
                              for n in range(1, prec)]
    return QSeries(coeffs, prec)


def series_c6(prec: int) -> QSeries:
    """c6 = 1 - 504 sum sigma_5(n) q^n."""
    coeffs = [Fraction(1)] + [-504 * Fraction(sigma_pow(5, n))
                              for n in range(1, prec)]
    return QSeries(coeffs, prec)


def series_delta(prec: int) -> QSeries:
    """Delta = q prod (1 - q^n)^24, by the product expansion."""
    prod = QSeries.one(prec)
    for n in range(1, prec):
        factor = QSeries([1] + [0] * (n - 1) + [-1], prec)
        prod = prod * factor ** 24
    return prod.shift(1).truncate(prec)


# -- expressing Eisenstein series in c4, c6, Delta ---------------------------

def _holomorphic_basis(weight: int):
    """Monomials c4^a c6^eps Delta^d of the given weight with a, d >= 0 and
    eps in {0, 1} -- a Q-basis of the weight-w modular forms."""
    basis = []
    for eps in (0, 1):
        for d in range(weight // 12 + 1):
            rem = weight - 6 * eps - 12 * d
            if rem >= 0 and rem % 4 == 0:
                basis.append((rem // 4, eps, d))
    return sorted(basis)


def _solve_exact(rows, rhs):
    """Solve the (possibly overdetermined, consistent) system over Q by
    Gaussian elimination; returns the solution or raises ValueError."""
    m, n = len(rows), len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        scale = aug[row][col]
        aug[row] = [x / scale for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    if len(pivots) < n:
        raise ValueError("underdetermined system")
    for i in range(row, m):
        if aug[i][n] != 0:
            raise ValueError("inconsistent system")
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    return sol


def eisenstein_in_c4c6(k: int) -> dict:
    """Exact expression of G_k as a polynomial in c4, c6, Delta.

    Returns {(a, eps, d): coefficient} with G_k = sum c * c4^a c6^eps Delta^d,
    determined by matching q-expansions at precision len(basis) + 10.
    """
    basis = _holomorphic_basis(k)
    if not basis:
        raise ValueError(f"no holomorphic forms of weight {k}")
    prec = len(basis) + 10
    c4s, c6s, ds = series_c4(prec), series_c6(prec), series_delta(prec)
    cols = []
    for (a, eps, d) in basis:
        s = c4s ** a
        if eps:
            s = s * c6s
        s = s * ds ** d
        cols.append(s.coeffs)
    g = eisenstein_G(k, prec)
    rows = [[cols[j][i] for j in range(len(basis))] for i in range(prec)]
    sol = _solve_exact(rows, g.coeffs)
    return {basis[j]: sol[j] for j in range(len(basis)) if sol[j] != 0}


def e_alpha(k: int):
    """The explicit building 1-cocycle on G_k: the pair
    (u (q* - f*) G_k, u (3^k - 1) G_k) with u = 1 for k = 0 mod 4 and
    u = 2 for k = 2 mod 4, returned as (LocElem, LevelOneForm)."""
    from .levelmaps import LevelOneForm, delta_map, cochain_D1

    if k < 4 or k % 2 != 0:
        raise ValueError("e_alpha needs even weight >= 4")
    u = 1 if k % 4 == 0 else 2
    expr = eisenstein_in_c4c6(k)
    G = LevelOneForm({key: c for key, c in expr.items()})
    first = u * delta_map(G)
    second = (u * (3 ** k - 1)) * G
    return first, second
