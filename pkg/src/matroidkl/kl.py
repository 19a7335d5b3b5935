"""Kazhdan-Lusztig and Z-polynomials of matroids.

kl_poly computes P_M from the defining recursion
    t^(rk M) * P_M(1/t) = sum over flats F of chi_{M_F}(t) * P_{M^F}(t),
working directly on the lattice of flats: the upper interval [F, top] is the
flat lattice of the simplified contraction M^F, and P depends on the lattice
alone, so the recursion never rebuilds rank oracles.  Results are memoized
across isomorphic lattices, keyed by an isomorphism-invariant fingerprint and
confirmed by an exact lattice-isomorphism search on every fingerprint hit.

The module also evaluates the closed forms, the P-recursive recurrences and
the Hadamard coefficient factorization for the fan / square-of-path / wheel /
whirl families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .poly import ONE, Poly, divexact, reverse_scaled
from . import graphs as _graphs
from . import matroids as _matroids

FAMILIES = ("fan", "square", "wheel", "whirl")


# ---------------------------------------------------------------------------
# flat-lattice engine


class FlatLattice:
    """A graded lattice given by rank list and below-relation bitsets.

    Index 0 is the bottom (rank 0), the last index the unique top.  below[i]
    holds bit j exactly when flat j <= flat i (including j == i).
    """

    __slots__ = ("ranks", "below", "n", "top_rank", "_rank_sets", "_fingerprint")

    def __init__(self, ranks, below):
        self.ranks = tuple(ranks)
        self.below = tuple(below)
        self.n = len(self.ranks)
        self.top_rank = self.ranks[-1] if self.ranks else 0
        self._rank_sets = None
        self._fingerprint = None

    def rank_sets(self):
        if self._rank_sets is None:
            sets = [0] * (self.top_rank + 1)
            for i, r in enumerate(self.ranks):
                sets[r] |= 1 << i
            self._rank_sets = sets
        return self._rank_sets

    def fingerprint(self):
        """Isomorphism invariant: level sizes, adjacent-level zeta counts and
        the per-flat (rank, atoms-below) profile."""
        if self._fingerprint is None:
            sets = self.rank_sets()
            levels = tuple(s.bit_count() for s in sets)
            adjacent = []
            for r in range(self.top_rank):
                upper = sets[r + 1]
                lower = sets[r]
                count = 0
                u = upper
                while u:
                    j = (u & -u).bit_length() - 1
                    u &= u - 1
                    count += (self.below[j] & lower).bit_count()
                adjacent.append(count)
            atoms = sets[1] if self.top_rank >= 1 else 0
            profile = sorted(
                (self.ranks[i], (self.below[i] & atoms).bit_count())
                for i in range(self.n)
            )
            self._fingerprint = (
                self.n,
                self.top_rank,
                levels,
                tuple(adjacent),
                tuple(profile),
            )
        return self._fingerprint

    def upper_sets(self):
        """For each index i, the bitset of indices j with flat i <= flat j."""
        up = [0] * self.n
        for j in range(self.n):
            b = self.below[j]
            bit_j = 1 << j
            while b:
                i = (b & -b).bit_length() - 1
                b &= b - 1
                up[i] |= bit_j
        return up

    def extract(self, sel_mask):
        """Standalone sublattice on the selected indices, ranks renormalized.

        Intended for upper intervals: the selected set must contain the top
        and be upward closed, with a unique minimal element.
        """
        idxs = []
        s = sel_mask
        while s:
            idxs.append((s & -s).bit_length() - 1)
            s &= s - 1
        pos = {}
        for p, i in enumerate(idxs):
            pos[i] = p
        base = self.ranks[idxs[0]]
        ranks = [self.ranks[i] - base for i in idxs]
        below = []
        for i in idxs:
            b = self.below[i] & sel_mask
            nb = 0
            while b:
                j = (b & -b).bit_length() - 1
                b &= b - 1
                nb |= 1 << pos[j]
            below.append(nb)
        return FlatLattice(ranks, below)

    def covers(self):
        """Hasse diagram: covers[i] lists j of rank+1 with i below j."""
        sets = self.rank_sets()
        out = [[] for _ in range(self.n)]
        for j in range(self.n):
            r = self.ranks[j]
            if r == 0:
                continue
            b = self.below[j] & sets[r - 1]
            while b:
                i = (b & -b).bit_length() - 1
                b &= b - 1
                out[i].append(j)
        return out

    def mobius_from_bottom(self):
        """mu(bottom, F) for every flat F."""
        mu = [0] * self.n
        mu[0] = 1
        for i in range(1, self.n):
            acc = 0
            b = self.below[i] & ~(1 << i)
            while b:
                j = (b & -b).bit_length() - 1
                b &= b - 1
                acc += mu[j]
            mu[i] = -acc
        return mu


def lattice_of(matroid):
    """The flat lattice of a rank-oracle matroid, cached on the oracle."""
    if matroid._kl_lattice is None:
        flats = matroid.flats()
        n = len(flats)
        masks = [f.elements for f in flats]
        ranks = [f.rank for f in flats]
        below = []
        for i in range(n):
            mi = masks[i]
            b = 1 << i
            for j in range(i):
                if masks[j] & mi == masks[j]:
                    b |= 1 << j
            below.append(b)
        matroid._kl_lattice = FlatLattice(ranks, below)
    return matroid._kl_lattice


def lattice_isomorphic(a, b, budget=2_000_000):
    """Exact isomorphism test between two graded lattices.

    Returns True/False, or None when the backtracking budget is exhausted
    (callers must then treat the pair as distinct).
    """
    if a.n != b.n or a.ranks != b.ranks:
        return False
    n = a.n
    sides = []
    for lat in (a, b):
        covers = lat.covers()
        cocovers = [[] for _ in range(n)]
        for i, cs in enumerate(covers):
            for j in cs:
                cocovers[j].append(i)
        sides.append((lat, covers, cocovers))

    # iterated refinement of vertex colors over the Hasse diagram
    colors = [
        [
            (lat.ranks[i], len(cov[i]), len(coc[i]))
            for i in range(n)
        ]
        for (lat, cov, coc) in sides
    ]
    for _ in range(8):
        canon = {}
        new_colors = []
        for (lat, cov, coc), col in zip(sides, colors):
            nc = []
            for i in range(n):
                sig = (
                    col[i],
                    tuple(sorted(col[j] for j in cov[i])),
                    tuple(sorted(col[j] for j in coc[i])),
                )
                code = canon.setdefault(sig, len(canon))
                nc.append(code)
            new_colors.append(nc)
        ca, cb = new_colors
        if sorted(ca) != sorted(cb):
            return False
        if new_colors[0] == colors[0] and new_colors[1] == colors[1]:
            colors = new_colors
            break
        colors = new_colors
    ca, cb = colors

    candidates = {}
    for j in range(n):
        candidates.setdefault(cb[j], []).append(j)
    order = sorted(range(n), key=lambda i: (len(candidates.get(ca[i], ())), ca[i], i))
    below_a, below_b = a.below, b.below
    assigned = []
    used = [False] * n
    steps = 0

    def consistent(i, j):
        bi = below_a[i]
        bj = below_b[j]
        for i2, j2 in assigned:
            if (bi >> i2 & 1) != (bj >> j2 & 1):
                return False
            if (below_a[i2] >> i & 1) != (below_b[j2] >> j & 1):
                return False
        return True

    # iterative backtracking: frame k holds the candidate iterator for order[k]
    iters = [None] * n
    k = 0
    while True:
        if k == n:
            return True
        if iters[k] is None:
            iters[k] = iter(candidates.get(ca[order[k]], ()))
        i = order[k]
        advanced = False
        for j in iters[k]:
            if used[j]:
                continue
            steps += 1
            if steps > budget:
                return None
            if consistent(i, j):
                used[j] = True
                assigned.append((i, j))
                k += 1
                advanced = True
                break
        if advanced:
            continue
        iters[k] = None
        if k == 0:
            return False
        k -= 1
        _, j_prev = assigned.pop()
        used[j_prev] = False


class KlContext:
    """Shared memo for KL computations: fingerprint -> [(lattice, P)].

    Inserts are idempotent, so concurrent use can at worst recompute a value.
    """

    def __init__(self, iso_budget=2_000_000):
        self.memo = {}
        self.iso_budget = iso_budget
        self.stats = {"hits": 0, "expansions": 0, "iso_checks": 0, "iso_giveups": 0}


_default_context = KlContext()


ISO_SHARING_LIMIT = 2000  # above this size, only syntactic-identity sharing


def _memo_lookup(lat, ctx):
    bucket = ctx.memo.get(lat.fingerprint())
    if not bucket:
        return None
    for rep, p in bucket:
        if rep.ranks == lat.ranks and rep.below == lat.below:
            ctx.stats["hits"] += 1
            return p
    if lat.n > ISO_SHARING_LIMIT:
        return None
    for rep, p in bucket:
        ctx.stats["iso_checks"] += 1
        verdict = lattice_isomorphic(lat, rep, ctx.iso_budget)
        if verdict is True:
            ctx.stats["hits"] += 1
            return p
        if verdict is None:
            ctx.stats["iso_giveups"] += 1
    return None


def _memo_store(lat, p, ctx):
    ctx.memo.setdefault(lat.fingerprint(), []).append((lat, p))


def _chi_from_bottom(lat):
    """Characteristic polynomial of every lower interval [bottom, F]."""
    mu = lat.mobius_from_bottom()
    chis = []
    for i in range(lat.n):
        ri = lat.ranks[i]
        coeffs = [0] * (ri + 1)
        b = lat.below[i]
        while b:
            j = (b & -b).bit_length() - 1
            b &= b - 1
            coeffs[ri - lat.ranks[j]] += mu[j]
        chis.append(Poly(coeffs))
    return chis


def _p_of_lattice(lat, ctx):
    r = lat.top_rank
    if r == 0:
        return ONE
    hit = _memo_lookup(lat, ctx)
    if hit is not None:
        return hit
    ctx.stats["expansions"] += 1
    chis = _chi_from_bottom(lat)
    up = lat.upper_sets()
    s = Poly()
    for i in range(1, lat.n):
        child = lat.extract(up[i])
        s = s + chis[i] * _p_of_lattice(child, ctx)
    # mirror extraction: coefficients of degree > r/2 of S are the mirrored
    # low coefficients of P, since deg P < r/2
    p = Poly([s.coeff(r - j) for j in range((r - 1) // 2 + 1)])
    if reverse_scaled(p, r) != p + s:
        raise ArithmeticError(
            "defining recursion is inconsistent; rank oracle or lattice bug"
        )
    if p.coeff(0) != 1:
        raise ArithmeticError("KL polynomial must have constant term 1")
    _memo_store(lat, p, ctx)
    return p


def kl_poly(matroid, ctx=None):
    """KL polynomial of a loopless matroid by the defining recursion."""
    ctx = ctx if ctx is not None else _default_context
    return _p_of_lattice(lattice_of(matroid), ctx)


def z_poly(matroid, ctx=None):
    """Z-polynomial: sum over flats F of t^(rk F) * P_{M^F}(t)."""
    ctx = ctx if ctx is not None else _default_context
    lat = lattice_of(matroid)
    up = lat.upper_sets()
    total = Poly()
    for i in range(lat.n):
        child = lat if i == 0 else lat.extract(up[i])
        total = total + Poly.monomial(lat.ranks[i]) * _p_of_lattice(child, ctx)
    return total


# ---------------------------------------------------------------------------
# closed forms


def _multinomial(n, *parts):
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def _comb(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def _family_key(family):
    if family == "square_of_path":
        return "square"
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return family


def kl_closed(family, n):
    """Closed-form KL polynomial: fan/square n>=1, wheel n>=2, whirl n>=3.

    The wheel formula is established for n >= 3; n=2 is an informational
    extension that evaluates to 1, the 3-cycle value.
    """
    family = _family_key(family)
    terms = []
    if family in ("fan", "square"):
        if n < 1:
            raise ValueError("fan/square closed form needs n >= 1")
        for k in range((n - 1) // 2 + 1):
            terms.append(Fraction(1, k + 1) * _multinomial(n - 1, k, k, n - 2 * k - 1))
    elif family == "wheel":
        if n < 2:
            raise ValueError("wheel closed form needs n >= 2")
        for k in range((n - 1) // 2 + 1):
            w = (
                Fraction(k + 1, n - k)
                + Fraction(k, n - k + 1)
                - Fraction(k, n - k - 1)
            )
            terms.append(w * _multinomial(n, k, k + 1, n - 2 * k - 1))
    else:  # whirl
        if n < 3:
            raise ValueError("whirl closed form needs n >= 3")
        for k in range((n - 1) // 2 + 1):
            terms.append(Fraction(n, n - k) * _multinomial(n - 1, k, k, n - 2 * k - 1))
    return Poly(terms).integerized()


def z_closed(family, n):
    """Closed-form Z-polynomial: fan n>=1 (Narayana), wheel n>=2, whirl n>=1."""
    family = _family_key(family)
    terms = []
    if family in ("fan", "square"):
        if n < 1:
            raise ValueError("fan/square Z closed form needs n >= 1")
        for k in range(n + 1):
            terms.append(Fraction(comb(n + 1, k + 1) * comb(n + 1, k), n + 1))
    elif family == "wheel":
        if n < 2:
            raise ValueError("wheel Z closed form needs n >= 2")
        for k in range(n + 1):
            terms.append(
                comb(n, k) ** 2 - Fraction(2 * _comb(n, k + 1) * _comb(n, k - 1), n)
            )
    else:  # whirl
        if n < 1:
            raise ValueError("whirl Z closed form needs n >= 1")
        for k in range(n + 1):
            terms.append(comb(n, k) ** 2)
    return Poly(terms).integerized()


# ---------------------------------------------------------------------------
# P-recursive recurrences, stored as data tables of coefficient polynomials:
# each entry lists, per power of t, the integer coefficients of a polynomial
# in the recurrence index n (ascending).  See tests for the frozen
# transcription digests.

_FAN_REC = {
    "seeds": ((1,), (1,)),
    # (n+3) a[n+2] = (2n+3) a[n+1] + n(4t-1) a[n]
    "lead": ((3, 1),),
    "rhs": {
        1: ((3, 2),),
        0: ((0, -1), (0, 4)),
    },
}

_WHEEL_REC = {
    # a[m] = P of the wheel on m+2 rim vertices
    "seeds": ((1,), (1, 1), (1, 5)),
    # (7+n) * B(n,t) * a[n+3] =
    #     (3+n) t (4t-1) C(n,t) a[n] + D(n,t) a[n+1] - A(n,t) a[n+2]
    "lead_linear": (7, 1),
    "lead": ((6,), (-150, -85, -21, -2), (12, 22, 12, 2)),
    "a0_linear": (3, 1),
    "a0_inner": ((6,), (-258, -133, -27, -2), (48, 52, 18, 2)),
    "a1": (
        (-18, -6),
        (906, 693, 214, 33, 2),
        (-4956, -4198, -1408, -224, -14),
        (264, 952, 618, 146, 12),
    ),
    "a2": (
        (-60, -12),
        (1758, 1372, 446, 68, 4),
        (-738, -881, -426, -85, -6),
        (84, 166, 106, 26, 2),
    ),
}

_WHIRL_REC = {
    # a[m] = P of the whirl of order m+1
    "seeds": ((1,), (1,), (1, 3)),
    # (4+n) * (-5-2n+(4+2n)t) * a[n+3] =
    #     (2+n) t (4t-1) (-7-2n+(6+2n)t) a[n] + D(n,t) a[n+1] - E(n,t) a[n+2]
    "lead_linear": (4, 1),
    "lead": ((-5, -2), (4, 2)),
    "a0_linear": (2, 1),
    "a0_inner": ((-7, -2), (6, 2)),
    "a1": ((14, 11, 2), (-102, -78, -14), (74, 62, 12)),
    "a2": ((34, 24, 4), (-46, -35, -6), (16, 12, 2)),
}

_T_4T_MINUS_1 = Poly([0, -1, 4])  # t(4t-1)


def _nt_poly(table, n):
    return Poly([sum(c * n**j for j, c in enumerate(row)) for row in table])


def _linear(pair, n):
    return pair[0] + pair[1] * n


_rec_cache = {"fan": [], "wheel": [], "whirl": []}


def _rec_sequence(family, length):
    """First `length` entries of the recurrence-defined sequence a[0], a[1], ..."""
    cache = _rec_cache[family]
    if not cache:
        data = {"fan": _FAN_REC, "wheel": _WHEEL_REC, "whirl": _WHIRL_REC}[family]
        cache.extend(Poly(s) for s in data["seeds"])
    data = {"fan": _FAN_REC, "wheel": _WHEEL_REC, "whirl": _WHIRL_REC}[family]
    while len(cache) < length:
        m = len(cache)
        if family == "fan":
            n = m - 2
            num = _nt_poly(data["rhs"][1], n) * cache[m - 1] + _nt_poly(
                data["rhs"][0], n
            ) * cache[m - 2]
            lead = _nt_poly(data["lead"], n)
        else:
            n = m - 3
            num = (
                _linear(data["a0_linear"], n)
                * _T_4T_MINUS_1
                * _nt_poly(data["a0_inner"], n)
                * cache[m - 3]
                + _nt_poly(data["a1"], n) * cache[m - 2]
                - _nt_poly(data["a2"], n) * cache[m - 1]
            )
            lead = _linear(data["lead_linear"], n) * _nt_poly(data["lead"], n)
        try:
            cache.append(divexact(num, lead).integerized())
        except ArithmeticError as exc:
            raise ArithmeticError(
                f"{family} recurrence step {m}: inexact division "
                f"(transcription error)"
            ) from exc
    return cache[:length]


def kl_recurrence(family, n):
    """Evaluate the printed P-recursive recurrences with their printed seeds.

    Index conventions: fan n>=0 gives P of the fan on n path vertices; wheel
    n>=2; whirl n>=1.
    """
    if family == "fan":
        if n < 0:
            raise ValueError("fan recurrence needs n >= 0")
        return _rec_sequence("fan", n + 1)[n]
    if family == "wheel":
        if n < 2:
            raise ValueError("wheel recurrence needs n >= 2")
        return _rec_sequence("wheel", n - 1)[n - 2]
    if family == "whirl":
        if n < 1:
            raise ValueError("whirl recurrence needs n >= 1")
        return _rec_sequence("whirl", n)[n - 1]
    raise ValueError("recurrences exist for fan, wheel and whirl only")


def hadamard_wheel_coeff(n, k):
    """Three-sequence factorization of the wheel KL coefficients:
    a_k * b_k * c_k equals the t^k coefficient of the wheel polynomial."""
    if n < 3:
        raise ValueError("needs n >= 3")
    if not 0 <= k <= (n - 1) // 2:
        raise ValueError("k out of range")
    a = (k + 1) * n**2 - (2 * k**2 + 4 * k) * n + (k**3 + 3 * k**2 - k - 1)
    b = Fraction(factorial(n), (n - 1) * factorial(k + 1) * factorial(n + 1 - k))
    c = Fraction((n - 1) * factorial(n - 2 - k), factorial(k) * factorial(n - 1 - 2 * k))
    return a, b, c


def multiplicative_kl(g, ctx=None):
    """KL polynomial of a graph as the product over its biconnected blocks."""
    result = ONE
    for block in _graphs.biconnected_components(g):
        result = result * kl_poly(_matroids.graphic_matroid(block), ctx)
    return result


def chromatic_closed(family, n):
    """Closed-form chromatic polynomial of the fan or wheel graph."""
    family = _family_key(family)
    t = Poly([0, 1])
    if family == "fan":
        if n < 1:
            raise ValueError("fan needs n >= 1")
        return t * Poly([-1, 1]) * Poly([-2, 1]) ** (n - 1)
    if family == "wheel":
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        return t * (Poly([-2, 1]) ** n - (-1) ** (n - 1) * Poly([-2, 1]))
    raise ValueError(f"no chromatic closed form for {family}")


def characteristic_closed(family, n):
    """Closed-form characteristic polynomial of the family matroid."""
    family = _family_key(family)
    if family in ("fan", "square"):
        if n < 1:
            raise ValueError("fan/square needs n >= 1")
        return Poly([-1, 1]) * Poly([-2, 1]) ** (n - 1)
    if family == "wheel":
        if n < 3:
            raise ValueError("wheel needs n >= 3")
        return Poly([-2, 1]) ** n - (-1) ** (n - 1) * Poly([-2, 1])
    if n < 3:
        raise ValueError("whirl needs n >= 3")
    return Poly([-2, 1]) ** n - Poly([(-1) ** n])


# ---------------------------------------------------------------------------
# family-level entry points


@dataclass(frozen=True)
class KlResult:
    family: str
    n: int
    method: str
    poly: Poly


@dataclass(frozen=True)
class ZResult:
    family: str
    n: int
    method: str
    poly: Poly


def family_graph(family, n):
    family = _family_key(family)
    if family == "whirl":
        raise ValueError("the whirl is not a graph")
    name = {"fan": "fan", "square": "square_of_path", "wheel": "wheel"}[family]
    return _graphs.make_family(name, n)


def family_matroid(family, n):
    family = _family_key(family)
    if family == "whirl":
        return _matroids.whirl_matroid(n)
    return _matroids.graphic_matroid(family_graph(family, n))


def family_rank(family, n):
    return n


def compute_kl(family, n, method, ctx=None):
    family = _family_key(family)
    if method == "brute":
        poly = kl_poly(family_matroid(family, n), ctx)
    elif method == "closed":
        poly = kl_closed(family, n)
    elif method == "recurrence":
        if family == "square":
            raise ValueError("no printed recurrence for square-of-path; use fan")
        poly = kl_recurrence(family, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    rank = family_rank(family, n)
    if rank > 0 and not poly.degree < rank / 2:
        raise ArithmeticError("degree bound violated")
    return KlResult(family, n, method, poly)


def compute_z(family, n, method, ctx=None):
    family = _family_key(family)
    if method == "brute":
        poly = z_poly(family_matroid(family, n), ctx)
    elif method == "closed":
        poly = z_closed(family, n)
    else:
        raise ValueError(f"Z-polynomials support methods brute and closed only")
    if poly.degree != family_rank(family, n):
        raise ArithmeticError("Z-polynomial degree must equal the rank")
    return ZResult(family, n, method, poly)
