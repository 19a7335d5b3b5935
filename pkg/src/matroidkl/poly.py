"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are stored ascending by degree with no trailing zeros; the zero
polynomial has an empty coefficient tuple.  Integer values stay Python ints,
everything else is a fractions.Fraction, so all arithmetic is exact and
arbitrary precision.  The degree of the zero polynomial is float("-inf"),
never -1, so accidental arithmetic on it fails loudly.
"""

from __future__ import annotations

from fractions import Fraction

NEG_INF = float("-inf")


def _norm_coeff(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class Poly:
    """Immutable dense polynomial in one variable t over Z or Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_integer(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def integerized(self):
        """Return self with int coefficients, or raise if any is non-integral."""
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                raise ArithmeticError(f"non-integer coefficient {c}")
            out.append(c)
        return Poly(out)

    def rationalized(self):
        return Poly([Fraction(c) for c in self.coeffs])

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer power required")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return "Poly(" + " + ".join(parts) + ")"


ZERO = Poly()
ONE = Poly([1])
T = Poly([0, 1])


def eval_at(p, x):
    """Exact Horner evaluation of p at a rational point x."""
    return p(x)


def reverse_scaled(p, r):
    """Return t^r * p(1/t); requires r >= deg(p)."""
    if not isinstance(r, int) or r < 0:
        raise ValueError("nonnegative integer exponent required")
    if p.degree > r:
        raise ValueError(f"reverse_scaled needs r >= deg(p), got r={r}, deg={p.degree}")
    return Poly([p.coeff(r - k) for k in range(r + 1)])


def compose_rational(p, num, den, clear_power):
    """Return den^clear_power * p(num/den) as an exact polynomial.

    clear_power must be at least deg(p) so every denominator clears.
    """
    if not isinstance(clear_power, int) or clear_power < 0:
        raise ValueError("nonnegative clear_power required")
    if p.degree > clear_power:
        raise ValueError("clear_power below deg(p): cleared expression is not a polynomial")
    if p.is_zero():
        return ZERO
    den_pows = [ONE]
    for _ in range(clear_power):
        den_pows.append(den_pows[-1] * den)
    result = ZERO
    num_pow = ONE
    for k, pk in enumerate(p.coeffs):
        if pk:
            result = result + num_pow * den_pows[clear_power - k] * pk
        num_pow = num_pow * num
    return result


def poly_divmod(a, b):
    """Exact rational polynomial division: a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.rationalized().coeffs)
    qlen = len(r) - len(b.coeffs) + 1
    if qlen <= 0:
        return ZERO, Poly(r)
    q = [Fraction(0)] * qlen
    bl = Fraction(b.leading)
    bc = b.coeffs
    for i in range(qlen - 1, -1, -1):
        c = r[i + len(bc) - 1] / bl
        q[i] = c
        if c:
            for j, bj in enumerate(bc):
                r[i + j] -= c * bj
    return Poly(q), Poly(r)


def divexact(a, b):
    """Exact division a / b; raises ArithmeticError when b does not divide a."""
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q


def content(p):
    """Positive rational c with p/c primitive integer (zero poly -> 1)."""
    if p.is_zero():
        return Fraction(1)
    from math import gcd, lcm

    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    num = 0
    for c in p.coeffs:
        num = gcd(num, int(c * den))
    return Fraction(num, den)


def primitive_part(p):
    """p divided by its content: primitive integer coefficients, sign kept."""
    if p.is_zero():
        return p
    c = content(p)
    return Poly([int(x / c) for x in p.rationalized().coeffs])


def poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    a, b = a.rationalized(), b.rationalized()
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return ZERO
    g = primitive_part(a)
    return -g if g.leading < 0 else g
