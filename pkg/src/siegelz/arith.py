"""Exact base arithmetic.

Prime-field elements, quadratic residue symbols, Gaussian integers,
truncated Fourier series with quarter-integer exponent unit, and integer
polynomials in one variable.  Everything here is exact: no floats enter
until a series or polynomial is explicitly evaluated.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass


# ---------------------------------------------------------------------------
# primes and quadratic symbols

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def odd_primes(bound: int) -> list[int]:
    """Odd primes p <= bound, ascending."""
    return [p for p in range(3, bound + 1, 2) if is_prime(p)]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: +1, -1, or 0 when p | a."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus {p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def kronecker_char(d: int, n: int) -> int:
    """The quadratic character chi_d(n) for d in {-1, 2, -2} and odd n.

    chi_{-1}(n) = (-1)^((n-1)/2), chi_2(n) = (-1)^((n^2-1)/8), and
    chi_{-2} = chi_{-1} * chi_2.  All three depend only on n mod 8.
    """
    if n % 2 == 0:
        raise ValueError(f"chi_{d} is only defined at odd arguments, got {n}")
    n = abs(n) if d > 0 else n
    n %= 8
    if d == -1:
        return 1 if n % 4 == 1 else -1
    if d == 2:
        return 1 if n in (1, 7) else -1
    if d == -2:
        return kronecker_char(-1, n) * kronecker_char(2, n)
    raise ValueError(f"unsupported discriminant {d}")


@dataclass(frozen=True)
class FpElement:
    """An element of the prime field F_p, p an odd prime."""

    value: int
    p: int

    def __post_init__(self):
        if self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FpElement"):
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other):
        self._check(other)
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other):
        self._check(other)
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other):
        self._check(other)
        return FpElement(self.value * other.value, self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def is_square(self) -> bool:
        return legendre(self.value, self.p) >= 0


# ---------------------------------------------------------------------------
# Gaussian integers

@dataclass(frozen=True)
class GaussInt:
    """An element re + im*sqrt(-1) of Z[i]."""

    re: int = 0
    im: int = 0

    def __add__(self, other):
        other = _as_gauss(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_gauss(other) - self

    def __mul__(self, other):
        other = _as_gauss(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = GaussInt(other, 0)
        if not isinstance(other, GaussInt):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divides(self, other: "GaussInt") -> bool:
        n = self.norm()
        z = other * self.conj()
        return n != 0 and z.re % n == 0 and z.im % n == 0

    def exact_div(self, other: "GaussInt") -> "GaussInt":
        """self / other, raising if the quotient is not in Z[i]."""
        n = other.norm()
        z = self * other.conj()
        if n == 0 or z.re % n or z.im % n:
            raise ValueError(f"{other} does not divide {self}")
        return GaussInt(z.re // n, z.im // n)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"


def _as_gauss(x) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    raise TypeError(f"cannot coerce {x!r} to GaussInt")


ONE = GaussInt(1, 0)
I_UNIT = GaussInt(0, 1)


def i_power(k: int) -> GaussInt:
    """i^k as an exact Gaussian integer."""
    return (ONE, I_UNIT, GaussInt(-1, 0), GaussInt(0, -1))[k % 4]


def gauss_primary_decompose(p: int) -> GaussInt:
    """A Gaussian prime of norm p, p = 1 mod 4, in primary form.

    Primary means congruent to 1 modulo (1+i)^3; exactly one associate of
    any odd Gaussian integer is primary, which pins the normalization used
    for Hecke eigenvalues downstream.
    """
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"{p} does not split in Z[i]")
    for x in range(1, p):
        y2 = p - x * x
        if y2 < x * x:
            break
        y = round(y2 ** 0.5)
        if y * y == y2:
            pi = GaussInt(x, y)
            break
    else:  # pragma: no cover - unreachable for split p
        raise AssertionError(f"no two-square decomposition found for {p}")
    modulus = GaussInt(-2, 2)  # (1+i)^3
    for cand in (pi, pi * I_UNIT, -pi, -(pi * I_UNIT)):
        if modulus.divides(cand - ONE):
            return cand
    raise AssertionError(f"no primary associate of {pi}")  # pragma: no cover


# ---------------------------------------------------------------------------
# truncated quarter-exponent series
#
# Genus 1: index e means exp(pi*i*tau*e/4); truncation keeps e <= order.
# Genus 2: index (e1, e2, e3) means exp(pi*i*(e1*tau1 + e2*tau2 + e3*tau3)/4);
# truncation keeps e1 + e3 <= order (e2 is controlled by positive
# semidefiniteness, |e2| <= e1 + e3, for every series built from thetas).

class QuarterSeries:
    """Exact truncated Fourier series with exponent unit pi*i*tau/4."""

    __slots__ = ("genus", "order", "coeffs")

    def __init__(self, genus: int, order: int, coeffs: dict | None = None):
        if genus not in (1, 2):
            raise ValueError(f"genus must be 1 or 2, got {genus}")
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.genus = genus
        self.order = order
        clean: dict = {}
        for key, val in (coeffs or {}).items():
            val = _as_gauss(val)
            if not val:
                continue
            if not self._fits(key):
                raise ValueError(f"index {key} exceeds truncation order {order}")
            clean[key] = val
        self.coeffs = clean

    def _fits(self, key) -> bool:
        if self.genus == 1:
            return isinstance(key, int) and key <= self.order
        return (
            isinstance(key, tuple)
            and len(key) == 3
            and key[0] + key[2] <= self.order
        )

    # -- constructors

    @classmethod
    def zero(cls, genus: int, order: int) -> "QuarterSeries":
        return cls(genus, order, {})

    @classmethod
    def one(cls, genus: int, order: int) -> "QuarterSeries":
        key = 0 if genus == 1 else (0, 0, 0)
        return cls(genus, order, {key: ONE})

    # -- basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, key) -> GaussInt:
        return self.coeffs.get(key, GaussInt(0, 0))

    def truncate(self, order: int) -> "QuarterSeries":
        if order >= self.order:
            return QuarterSeries(self.genus, order, dict(self.coeffs))
        if self.genus == 1:
            kept = {e: c for e, c in self.coeffs.items() if e <= order}
        else:
            kept = {e: c for e, c in self.coeffs.items() if e[0] + e[2] <= order}
        return QuarterSeries(self.genus, order, kept)

    def scale(self, factor) -> "QuarterSeries":
        factor = _as_gauss(factor)
        return QuarterSeries(
            self.genus, self.order, {k: factor * v for k, v in self.coeffs.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, QuarterSeries):
            return NotImplemented
        return (
            self.genus == other.genus
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.genus, self.order, frozenset(self.coeffs.items())))

    def __repr__(self):
        n = len(self.coeffs)
        return f"QuarterSeries(genus={self.genus}, order={self.order}, {n} terms)"

    # -- evaluation

    def evaluate(self, tau) -> complex:
        """Numeric value at tau (complex scalar for genus 1, 2x2 for genus 2)."""
        quarter = cmath.pi * 1j / 4
        if self.genus == 1:
            t = complex(tau)
            return sum(
                c.to_complex() * cmath.exp(quarter * e * t)
                for e, c in self.coeffs.items()
            )
        t1, t2, t3 = complex(tau[0][0]), complex(tau[0][1]), complex(tau[1][1])
        total = 0j
        for (e1, e2, e3), c in self.coeffs.items():
            total += c.to_complex() * cmath.exp(quarter * (e1 * t1 + e2 * t2 + e3 * t3))
        return total


def series_combine(a: QuarterSeries, b: QuarterSeries, op: str,
                   order: int | None = None) -> QuarterSeries:
    """Exact sum or truncated convolution of two series of equal genus."""
    if a.genus != b.genus:
        raise ValueError(f"genus mismatch: {a.genus} vs {b.genus}")
    if order is None:
        order = min(a.order, b.order)
    if op == "add":
        if order > min(a.order, b.order):
            raise ValueError("sum not valid beyond the smaller input order")
        out = dict(a.truncate(order).coeffs)
        for key, val in b.truncate(order).coeffs.items():
            out[key] = out.get(key, GaussInt(0, 0)) + val
        return QuarterSeries(a.genus, order, out)
    if op == "mul":
        if order > min(a.order, b.order):
            raise ValueError("product not valid beyond the smaller input order")
        if a.genus == 1:
            return _mul_genus1(a, b, order)
        return _mul_genus2(a, b, order)
    raise ValueError(f"unknown op {op!r}")


def series_add(a: QuarterSeries, b: QuarterSeries,
               order: int | None = None) -> QuarterSeries:
    return series_combine(a, b, "add", order)


def series_mul(a: QuarterSeries, b: QuarterSeries,
               order: int | None = None) -> QuarterSeries:
    return series_combine(a, b, "mul", order)


_DICT_MUL_CUTOFF = 250_000


def _mul_genus1(a: QuarterSeries, b: QuarterSeries, order: int) -> QuarterSeries:
    if len(a.coeffs) * len(b.coeffs) <= _DICT_MUL_CUTOFF:
        out: dict = {}
        for e1, c1 in a.coeffs.items():
            if e1 > order:
                continue
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                if e > order:
                    continue
                prev = out.get(e)
                out[e] = c1 * c2 if prev is None else prev + c1 * c2
        return QuarterSeries(1, order, out)
    return _mul_genus1_packed(a, b, order)


def _mul_genus1_packed(a: QuarterSeries, b: QuarterSeries,
                       order: int) -> QuarterSeries:
    """Dense genus-1 product via big-integer packing (Kronecker substitution)."""
    are, aim = _coeff_arrays(a, order)
    bre, bim = _coeff_arrays(b, order)
    bound = min(order + 1, max(len(a.coeffs), 1)) * _max_abs(are, aim) * _max_abs(bre, bim)
    bits = max(8, 2 * bound.bit_length() + 4)
    rr = _conv(are, bre, bits, order)
    ii = _conv(aim, bim, bits, order)
    ri = _conv(are, bim, bits, order)
    ir = _conv(aim, bre, bits, order)
    out = {}
    for e in range(order + 1):
        re = rr[e] - ii[e]
        im = ri[e] + ir[e]
        if re or im:
            out[e] = GaussInt(re, im)
    return QuarterSeries(1, order, out)


def _coeff_arrays(s: QuarterSeries, order: int):
    re = [0] * (order + 1)
    im = [0] * (order + 1)
    for e, c in s.coeffs.items():
        if e <= order:
            re[e] = c.re
            im[e] = c.im
    return re, im


def _max_abs(*arrays) -> int:
    m = 1
    for arr in arrays:
        for v in arr:
            if abs(v) > m:
                m = abs(v)
    return m


def _pack(arr: list[int], bits: int) -> int:
    total = 0
    for v in reversed(arr):
        total = (total << bits) | v
    return total


def _unpack(n: int, bits: int, count: int) -> list[int]:
    mask = (1 << bits) - 1
    return [(n >> (bits * k)) & mask for k in range(count)]


def _conv(a: list[int], b: list[int], bits: int, order: int) -> list[int]:
    """Exact integer convolution, truncated to indices <= order."""
    apos = [max(v, 0) for v in a]
    aneg = [max(-v, 0) for v in a]
    bpos = [max(v, 0) for v in b]
    bneg = [max(-v, 0) for v in b]
    pp = _pack(apos, bits) * _pack(bpos, bits)
    nn = _pack(aneg, bits) * _pack(bneg, bits)
    pn = _pack(apos, bits) * _pack(bneg, bits)
    np_ = _pack(aneg, bits) * _pack(bpos, bits)
    plus = _unpack(pp + nn, bits, order + 1)
    minus = _unpack(pn + np_, bits, order + 1)
    return [x - y for x, y in zip(plus, minus)]


def _mul_genus2(a: QuarterSeries, b: QuarterSeries, order: int) -> QuarterSeries:
    small, big = (a, b) if len(a.coeffs) <= len(b.coeffs) else (b, a)
    out: dict = {}
    big_items = list(big.coeffs.items())
    for (f1, f2, f3), cs in small.coeffs.items():
        room = order - f1 - f3
        if room < 0:
            continue
        for (e1, e2, e3), cb in big_items:
            if e1 + e3 > room:
                continue
            key = (e1 + f1, e2 + f2, e3 + f3)
            prod = cs * cb
            prev = out.get(key)
            out[key] = prod if prev is None else prev + prod
    return QuarterSeries(2, order, out)


# ---------------------------------------------------------------------------
# integer polynomials in one formal variable T

class IntPolynomial:
    """A polynomial in T with exact coefficients (rational or Gaussian integers).

    Coefficients are stored low degree first with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, GaussInt) else int(c) for c in coeffs]
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls([0])

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls([1])

    def degree(self) -> int:
        if len(self.coeffs) == 1 and not self.coeffs[0]:
            return -1
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[k] - other[k] for k in range(n)])

    def __mul__(self, other):
        if isinstance(other, (int, GaussInt)):
            return IntPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return self.degree() == -1

    def substitute_scaled(self, factor: int) -> "IntPolynomial":
        """T -> factor * T, exactly."""
        return IntPolynomial([c * factor ** k for k, c in enumerate(self.coeffs)])

    def __call__(self, t: complex) -> complex:
        total = 0j
        for c in reversed(self.coeffs):
            cval = c.to_complex() if isinstance(c, GaussInt) else complex(c)
            total = total * t + cval
        return total

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"
