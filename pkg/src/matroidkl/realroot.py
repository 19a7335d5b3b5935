"""Exact root-location certificates via Sturm sequences over the rationals.

Counting uses the right-continuous variation function V (zero entries are
skipped), so N(x) = V(-inf) - V(x) is exactly the number of distinct real
roots <= x and no endpoint perturbation is ever needed.  Multiplicities come
from Yun's squarefree decomposition.  Infinite endpoints are handled through
leading-coefficient signs, never through large finite stand-ins.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .poly import Poly, compose_rational, divexact, poly_divmod, poly_gcd, primitive_part
from . import kl as _kl

NEG_INF = object()
POS_INF = object()


@dataclass(frozen=True)
class SturmChain:
    polys: tuple
    squarefree_part: Poly


@dataclass(frozen=True)
class RootInterval:
    """One distinct real root: in (lo, hi] when lo < hi, exactly at lo when
    lo == hi."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def is_exact(self):
        return self.lo == self.hi


def squarefree_part(p):
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Poly([1])
    g = poly_gcd(p, p.derivative())
    return primitive_part(divexact(p, g))


def sturm_chain(p):
    """Signed-remainder chain of the squarefree part, content-stripped."""
    q = squarefree_part(p)
    chain = [q]
    if q.degree >= 1:
        chain.append(primitive_part(q.derivative()))
        while chain[-1].degree >= 1:
            rem = poly_divmod(chain[-2], chain[-1])[1]
            if rem.is_zero():
                raise ArithmeticError("squarefree part produced a degenerate chain")
            chain.append(primitive_part(-rem))
    return SturmChain(tuple(chain), q)


def _sign(x):
    return (x > 0) - (x < 0)


def _variations(signs):
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, x):
    if x is NEG_INF:
        return _variations(
            [_sign(c.leading) * (-1) ** (len(c.coeffs) - 1) for c in chain.polys]
        )
    if x is POS_INF:
        return _variations([_sign(c.leading) for c in chain.polys])
    return _variations([_sign(c(x)) for c in chain.polys])


def _roots_le(chain, x):
    """Distinct real roots of the squarefree part in (-inf, x]."""
    return _variations_at(chain, NEG_INF) - _variations_at(chain, x)


def count_real_roots(p, lo=None, hi=None):
    """Distinct real roots of p in the half-open interval (lo, hi]; None
    endpoints mean -inf / +inf."""
    chain = sturm_chain(p)
    upper = _roots_le(chain, POS_INF if hi is None else Fraction(hi))
    lower = 0 if lo is None else _roots_le(chain, Fraction(lo))
    return upper - lower


def squarefree_decomposition(p):
    """Yun's algorithm: [(factor, multiplicity)] with p = lead * prod f_i^i."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    w = divexact(p, g)
    y = divexact(p.derivative(), g)
    z = y - w.derivative()
    i = 1
    while w.degree >= 1:
        a = poly_gcd(w, z)
        if a.degree >= 1:
            out.append((a, i))
        w = divexact(w, a)
        y = divexact(z, a)
        z = y - w.derivative()
        i += 1
    return out


def _root_bound(q):
    lead = abs(Fraction(q.leading))
    m = max((abs(Fraction(c)) for c in q.coeffs[:-1]), default=Fraction(0))
    b = 1 + m / lead
    return Fraction(b.numerator // b.denominator + 1)


def _isolate_squarefree(chain):
    """Disjoint (lo, hi] pieces, one distinct root each; exact roots become
    points.  A root sitting exactly at a bisection midpoint stays the hi
    endpoint of its piece until that piece reaches count one."""
    q = chain.squarefree_part
    if q.degree <= 0:
        return []
    b = _root_bound(q)
    total = _roots_le(chain, POS_INF)
    found = []
    stack = [(-b, b, total)]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            if q(hi) == 0:
                found.append((hi, hi))
            else:
                found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _roots_le(chain, mid) - _roots_le(chain, lo)
        stack.append((lo, mid, left))
        stack.append((mid, hi, k - left))
    found.sort()
    return found


def isolate_real_roots(p):
    """Disjoint rational intervals, one per distinct real root, with
    multiplicities; sorted ascending."""
    chain = sturm_chain(p)
    raw = _isolate_squarefree(chain)
    factor_chains = [(sturm_chain(f), m) for f, m in squarefree_decomposition(p)]
    out = []
    for lo, hi in raw:
        mult = 0
        for fchain, fm in factor_chains:
            if lo == hi:
                if fchain.squarefree_part(lo) == 0:
                    mult = fm
                    break
            elif _roots_le(fchain, hi) - _roots_le(fchain, lo) == 1:
                mult = fm
                break
        if mult == 0:
            raise ArithmeticError("isolated root not matched to a squarefree factor")
        out.append(RootInterval(lo, hi, mult))
    return out


def refine(p, iv, predicate):
    """Bisect a root interval until predicate(iv) holds or the root is exact."""
    chain = sturm_chain(p)
    while not predicate(iv) and not iv.is_exact():
        mid = (iv.lo + iv.hi) / 2
        if chain.squarefree_part(mid) == 0:
            iv = RootInterval(mid, mid, iv.multiplicity)
        elif _roots_le(chain, mid) - _roots_le(chain, iv.lo) == 1:
            iv = RootInterval(iv.lo, mid, iv.multiplicity)
        else:
            iv = RootInterval(mid, iv.hi, iv.multiplicity)
    return iv


def is_real_rooted(p):
    """True when every zero of p (counted with multiplicity) is real."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return True
    return sum(iv.multiplicity for iv in isolate_real_roots(p)) == p.degree


def all_zeros_negative(p):
    """Certify that deg(p) zeros counted with multiplicity all lie in
    (-inf, 0); returns (verdict, isolation certificate)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return True, []
    roots = isolate_real_roots(p)
    if sum(iv.multiplicity for iv in roots) != p.degree:
        return False, roots
    if p.coeff(0) == 0:
        return False, roots
    chain = sturm_chain(p)
    if _roots_le(chain, POS_INF) - _roots_le(chain, Fraction(0)) != 0:
        return False, roots
    refined = [refine(p, iv, lambda r: r.hi < 0) for iv in roots]
    return True, refined


def interleaves(g, f):
    """Exact check that g is an interleaver of f (weak inequalities, shared
    roots allowed); requires real-rooted inputs with positive leading
    coefficients and deg f - deg g in {0, 1}."""
    for p in (f, g):
        if p.is_zero():
            raise ValueError("zero polynomial")
        if p.leading <= 0:
            raise ValueError("positive leading coefficient required")
        if not is_real_rooted(p):
            raise ValueError("interleaves requires real-rooted polynomials")
    gap = f.degree - g.degree
    if gap not in (0, 1):
        raise ValueError("degree gap must be 0 or 1")

    fs = squarefree_part(f)
    gs = squarefree_part(g)
    union = primitive_part(divexact(fs * gs, poly_gcd(fs, gs)))
    union_chain = sturm_chain(union)
    # descending global order of all distinct roots of f and g together
    global_order = sorted(_isolate_squarefree(union_chain), reverse=True)

    def side_positions(p):
        sf_chain = sturm_chain(p)
        sf = sf_chain.squarefree_part
        out = []
        for iv in isolate_real_roots(p):
            placed = None
            for pos, (lo, hi) in enumerate(global_order):
                if lo == hi:
                    if iv.is_exact():
                        ok = iv.lo == lo
                    else:
                        ok = iv.lo < lo <= iv.hi and sf(lo) == 0
                elif iv.is_exact():
                    ok = lo < iv.lo <= hi
                else:
                    a, b = max(lo, iv.lo), min(hi, iv.hi)
                    ok = a < b and _roots_le(sf_chain, b) - _roots_le(sf_chain, a) == 1
                if ok:
                    placed = pos
                    break
            if placed is None:
                raise ArithmeticError("root not aligned with the union isolation")
            out.extend([placed] * iv.multiplicity)
        out.sort()
        return out  # ascending positions = roots in descending order

    u = side_positions(f)
    v = side_positions(g)
    n = len(u)
    seq = []
    if gap == 0:
        for i in range(n):
            seq.append(u[i])
            seq.append(v[i])
    else:
        for i in range(n - 1):
            seq.append(u[i])
            seq.append(v[i])
        if n:
            seq.append(u[n - 1])
    return all(seq[i] <= seq[i + 1] for i in range(len(seq) - 1))


def n_sequence_check(gamma, n):
    """Transformed-binomial criterion: admissible iff
    sum(gamma_k * C(n,k) * t^k) has only real zeros, all of one sign."""
    if len(gamma) != n + 1:
        raise ValueError("gamma must have length n+1")
    p = Poly([Fraction(gamma[k]) * comb(n, k) for k in range(n + 1)])
    if p.is_zero() or p.degree == 0:
        return True
    if not is_real_rooted(p):
        return False
    if p.coeff(0) == 0:
        return False
    chain = sturm_chain(p)
    nonpos = _roots_le(chain, Fraction(0))
    pos = _roots_le(chain, POS_INF) - nonpos
    return nonpos == 0 or pos == 0


def narayana_polynomial(n):
    """Classical Narayana polynomial."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return Poly(
        [Fraction(comb(n, k) * comb(n, k + 1), n) for k in range(n)]
    ).integerized()


def lucas_polynomial(n):
    """Lucas polynomial by its defining recurrence."""
    if n < 0:
        raise ValueError("needs n >= 0")
    a, b = Poly([2]), Poly([0, 1])
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, Poly([0, 1]) * b + a
    return b


def fibonacci_polynomial(n):
    """Fibonacci polynomial by its defining recurrence."""
    if n < 1:
        raise ValueError("needs n >= 1")
    a, b = Poly([1]), Poly([0, 1])
    if n == 1:
        return a
    for _ in range(n - 2):
        a, b = b, Poly([0, 1]) * b + a
    return b


def verify_narayana_identity(n):
    """N_n(t) == (1+t)^(n-1) * P_fan(t/(1+t)^2), and the fan Z-polynomial one
    index down is that same Narayana polynomial."""
    if n < 1:
        raise ValueError("needs n >= 1")
    nara = narayana_polynomial(n)
    p = _kl.kl_closed("fan", n)
    d = len(p.coeffs) - 1
    substituted = (
        compose_rational(p, Poly([0, 1]), Poly([1, 2, 1]), d)
        * Poly([1, 1]) ** (n - 1 - 2 * d)
    )
    if substituted != nara:
        return False
    if n >= 2 and _kl.z_closed("fan", n - 1) != nara:
        return False
    return True


def _wheel_lucas_coeff(n, k):
    return Fraction(
        (n - 1) * factorial(n - 2 - k), factorial(k) * factorial(n - 1 - 2 * k)
    )


def verify_lucas_fibonacci(n):
    """Coefficient identities mapping the wheel factorial sum onto the Lucas
    polynomial and the whirl binomial sum onto the Fibonacci polynomial, plus
    negativity of both image polynomials.  No fractional powers appear: the
    t^k coefficient corresponds to the x^(n-1-2k) coefficient."""
    if n < 3:
        raise ValueError("needs n >= 3")
    m = (n - 1) // 2
    f_n = Poly([_wheel_lucas_coeff(n, k) for k in range(m + 1)]).integerized()
    recon = [0] * n
    for k in range(m + 1):
        recon[n - 1 - 2 * k] = f_n.coeff(k)
    if Poly(recon) != lucas_polynomial(n - 1):
        return False
    g_n = Poly([comb(n - k - 1, k) for k in range(m + 1)])
    recon = [0] * n
    for k in range(m + 1):
        recon[n - 1 - 2 * k] = g_n.coeff(k)
    if Poly(recon) != fibonacci_polynomial(n):
        return False
    return all_zeros_negative(f_n)[0] and all_zeros_negative(g_n)[0]


def verify_wheel_z_quadratic(n):
    """The binomial-weighted wheel Z core factors as
    n * ((n+1)t^2 + (n^2-n+4)t + (n+1)) * (1+t)^(n-2) with positive
    discriminant, and multiplied back by the multiplier-sequence weights it
    reproduces the wheel Z closed form."""
    if n < 3:
        raise ValueError("needs n >= 3")
    gammas = [(1 + k) * n**2 + (1 - 2 * k - k**2) * n + 2 * k**2 for k in range(n + 1)]
    h = Poly([gammas[k] * comb(n, k) for k in range(n + 1)])
    quad = Poly([n + 1, n**2 - n + 4, n + 1])
    if h != n * quad * Poly([1, 1]) ** (n - 2):
        return False
    disc = (n**2 - n + 4) ** 2 - 4 * (n + 1) ** 2
    if disc != (n - 1) * (n - 2) * (n**2 + n + 6) or disc <= 0:
        return False
    z = Poly(
        [
            Fraction(gammas[k] * factorial(n - 1) * comb(n, k))
            / (factorial(k + 1) * factorial(n + 1 - k))
            for k in range(n + 1)
        ]
    ).integerized()
    return z == _kl.z_closed("wheel", n)
