"""Supercommutative coordinate algebra of the general linear supergroup GL(m|n).

The algebra A(m|n) is generated by the matrix coordinates c_ij for
1 <= i, j <= m+n.  An index i is even when i <= m and odd otherwise; the
generator c_ij carries parity |i|+|j| (mod 2).  Odd generators square to
zero and homogeneous elements supercommute: a*b = (-1)^{|a||b|} b*a.

Monomials are stored in a canonical form: the even generators as a packed
exponent vector (one 16-bit field per generator, row-major order), the odd
generators as a bitmask whose ascending bit order is the ascending (row, col)
order.  Any constructor that receives odd factors out of order returns the
sorted monomial together with the sign of the sorting permutation.

Elements of the localization A(m|n)[D^{-1}], where D = det of the even
m x m block, are pairs (numerator, k) standing for numerator / D^k.  There
is no canonical reduction of such pairs; equality is decided by cross
multiplication, which is sound because D is central and regular (it lives
in the even polynomial subring, over which the whole algebra is a free
module).
"""

from __future__ import annotations

from fractions import Fraction

# Packed even-exponent layout: field width 16 bits, generator index 0 in the
# most significant field so that integer comparison of keys is lexicographic
# comparison of exponent vectors.
SHIFT = 16
FIELD_MASK = (1 << SHIFT) - 1


def validate_characteristic(p) -> int:
    """Check that p is 0 or an odd prime and return it normalized to int."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"characteristic must be an integer, got {p!r}")
    if p == 0:
        return 0
    if p < 2:
        raise ValueError(f"characteristic must be 0 or a prime > 2, got {p}")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"characteristic must be 0 or a prime > 2, got {p}")
        d += 1
    return p


class RingContext:
    """Shape (m, n) and coefficient characteristic for one algebra A(m|n).

    Two contexts compare equal when they carry the same (m, n, characteristic);
    every element remembers its context and mixing contexts raises ValueError.
    The context also owns a cache used by derived structures (determinants,
    adjugates, powers of D) so repeated verification runs stay cheap.
    """

    __slots__ = (
        "m", "n", "characteristic", "size",
        "even_gens", "odd_gens", "even_index", "odd_index", "odd_bit",
        "even_by_col", "odd_by_col", "_shifts", "cache", "_zero", "_one",
    )

    def __init__(self, m: int, n: int, characteristic: int = 0):
        if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
            raise ValueError(f"need integers m >= 1 and n >= 1, got m={m!r}, n={n!r}")
        self.m = m
        self.n = n
        self.characteristic = validate_characteristic(characteristic)
        self.size = m + n
        even = []
        odd = []
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                (even if self.gen_parity(i, j) == 0 else odd).append((i, j))
        self.even_gens = tuple(even)
        self.odd_gens = tuple(odd)
        self.even_index = {g: t for t, g in enumerate(even)}
        self.odd_index = {g: t for t, g in enumerate(odd)}
        self.odd_bit = {g: 1 << t for t, g in enumerate(odd)}
        ne = len(even)
        self._shifts = tuple(SHIFT * (ne - 1 - t) for t in range(ne))
        self.even_by_col = {}
        self.odd_by_col = {}
        for (i, j), t in self.even_index.items():
            self.even_by_col.setdefault(j, []).append((i, t))
        for (i, j), t in self.odd_index.items():
            self.odd_by_col.setdefault(j, []).append((i, 1 << t))
        self.cache = {}
        self._zero = None
        self._one = None

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and (self.m, self.n, self.characteristic)
                == (other.m, other.n, other.characteristic))

    def __hash__(self):
        return hash((self.m, self.n, self.characteristic))

    def __repr__(self):
        return f"RingContext(m={self.m}, n={self.n}, characteristic={self.characteristic})"

    def parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError(f"index {i} out of range 1..{self.size}")
        return 0 if i <= self.m else 1

    def gen_parity(self, i: int, j: int) -> int:
        return (self.parity(i) + self.parity(j)) & 1

    def normalize_coeff(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ValueError(f"denominator of {c} vanishes mod {p}")
                return c.numerator * pow(c.denominator, -1, p) % p
            return c % p
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    # -- element constructors ------------------------------------------------

    def zero(self) -> "SuperPolynomial":
        if self._zero is None:
            self._zero = SuperPolynomial(self, {})
        return self._zero

    def one(self) -> "SuperPolynomial":
        if self._one is None:
            self._one = SuperPolynomial(self, {(0, 0): 1})
        return self._one

    def scalar(self, c) -> "SuperPolynomial":
        c = self.normalize_coeff(c)
        return SuperPolynomial(self, {(0, 0): c} if c else {})

    def gen(self, i: int, j: int) -> "SuperPolynomial":
        """The generator c_ij as a polynomial."""
        self.parity(i), self.parity(j)
        if self.gen_parity(i, j) == 0:
            key = (1 << self._shifts[self.even_index[(i, j)]], 0)
        else:
            key = (0, self.odd_bit[(i, j)])
        return SuperPolynomial(self, {key: 1})

    def monomial(self, factors) -> tuple:
        """Canonical form of a product of generators given in any order.

        Returns (sign, (ekey, omask)); sign is 0 and the monomial None when an
        odd generator repeats.
        """
        ekey = 0
        obits = []
        for (i, j) in factors:
            if self.gen_parity(i, j) == 0:
                ekey += 1 << self._shifts[self.even_index[(i, j)]]
            else:
                obits.append(self.odd_index[(i, j)])
        sign = 1
        omask = 0
        for b in obits:
            bit = 1 << b
            if omask & bit:
                return 0, None
            # factors already placed that sort after b flip the sign
            if (omask >> (b + 1)).bit_count() & 1:
                sign = -sign
            omask |= bit
        return sign, (ekey, omask)

    def poly(self, terms) -> "SuperPolynomial":
        """Build a polynomial from (coefficient, factor-list) pairs."""
        acc = {}
        for c, factors in terms:
            sign, mono = self.monomial(factors)
            if sign:
                acc[mono] = acc.get(mono, 0) + sign * c
        return SuperPolynomial(self, self._normalize(acc))

    def _normalize(self, terms: dict) -> dict:
        p = self.characteristic
        if p:
            out = {}
            for k, c in terms.items():
                c = self.normalize_coeff(c)
                if c:
                    out[k] = c
            return out
        return {k: c for k, c in terms.items() if c}

    # -- monomial helpers ----------------------------------------------------

    def mono_factors(self, mono) -> list:
        """Factor list [((i, j), exponent), ...] sorted by (row, col)."""
        ekey, omask = mono
        out = []
        for t, g in enumerate(self.even_gens):
            e = (ekey >> self._shifts[t]) & FIELD_MASK
            if e:
                out.append((g, e))
        for t, g in enumerate(self.odd_gens):
            if omask & (1 << t):
                out.append((g, 1))
        out.sort()
        return out

    def mono_degree(self, mono) -> int:
        ekey, omask = mono
        deg = omask.bit_count()
        while ekey:
            deg += ekey & FIELD_MASK
            ekey >>= SHIFT
        return deg

    def mono_parity(self, mono) -> int:
        return mono[1].bit_count() & 1

    def mono_weight(self, mono) -> tuple:
        """Column-count vector: entry j-1 counts factors with column index j."""
        w = [0] * self.size
        for (i, j), e in self.mono_factors(mono):
            w[j - 1] += e
        return tuple(w)

    def mono_exponent_vector(self, mono) -> tuple:
        """Exponents in row-major generator order (render tiebreak key)."""
        exps = {g: e for g, e in self.mono_factors(mono)}
        return tuple(exps.get((i, j), 0)
                     for i in range(1, self.size + 1)
                     for j in range(1, self.size + 1))

    def render_mono(self, mono) -> str:
        factors = self.mono_factors(mono)
        if not factors:
            return "1"
        return "*".join(f"c[{i},{j}]" + (f"^{e}" if e > 1 else "")
                        for (i, j), e in factors)


def mono_mul(ctx: RingContext, a, b) -> tuple:
    """Product of canonical monomials: (sign, monomial) or (0, None).

    The sign counts transpositions needed to merge the two sorted odd words;
    a shared odd generator kills the product.
    """
    ea, oa = a
    eb, ob = b
    if oa & ob:
        return 0, None
    sign = 1
    w = ob
    while w:
        low = w & -w
        if (oa >> low.bit_length()).bit_count() & 1:
            sign = -sign
        w ^= low
    return sign, (ea + eb, oa | ob)


class SuperPolynomial:
    """Sparse exact polynomial over A(m|n); immutable by convention.

    Coefficients are integers (reduced mod p in odd characteristic) or
    Fractions in characteristic 0.  All operators check context agreement.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ctx.mono_degree(k) for k in self.terms)

    def parity(self):
        """0 or 1 when homogeneous, None when mixed or zero."""
        ps = {k[1].bit_count() & 1 for k in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None

    def weight(self):
        """Common column-count vector of all terms, or None when mixed/zero."""
        ws = {self.ctx.mono_weight(k) for k in self.terms}
        if len(ws) == 1:
            return ws.pop()
        return None

    # -- arithmetic ----------------------------------------------------------

    def _require_same_ctx(self, other: "SuperPolynomial"):
        if self.ctx != other.ctx:
            raise ValueError(f"mismatched ring contexts {self.ctx} and {other.ctx}")

    def __add__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._require_same_ctx(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return SuperPolynomial(self.ctx, self.ctx._normalize(acc))

    def __sub__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._require_same_ctx(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) - c
        return SuperPolynomial(self.ctx, self.ctx._normalize(acc))

    def __neg__(self):
        return SuperPolynomial(self.ctx, self.ctx._normalize(
            {k: -c for k, c in self.terms.items()}))

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            if isinstance(other, LocalizedElement):
                return NotImplemented
            return self.scale(other)
        self._require_same_ctx(other)
        acc = {}
        get = acc.get
        for (ea, oa), ca in self.terms.items():
            for (eb, ob), cb in other.terms.items():
                if oa & ob:
                    continue
                sign = 1
                w = ob
                while w:
                    low = w & -w
                    if (oa >> low.bit_length()).bit_count() & 1:
                        sign = -sign
                    w ^= low
                key = (ea + eb, oa | ob)
                acc[key] = get(key, 0) + sign * ca * cb
        return SuperPolynomial(self.ctx, self.ctx._normalize(acc))

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, c):
        if not isinstance(c, (int, Fraction)):
            raise TypeError(f"scalars must be int or Fraction, got {type(c).__name__}")
        c = self.ctx.normalize_coeff(c)
        if not c:
            return self.ctx.zero()
        return SuperPolynomial(
            self.ctx,
            self.ctx._normalize({k: c * v for k, v in self.terms.items()}))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"polynomial powers need integer e >= 0, got {e!r}")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SuperPolynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: ascending total degree, then ascending
        lexicographic on the row-major exponent vector."""
        if not self.terms:
            return "0"
        ordered = sorted(
            self.terms.items(),
            key=lambda kv: (self.ctx.mono_degree(kv[0]),
                            self.ctx.mono_exponent_vector(kv[0])))
        pieces = []
        for mono, c in ordered:
            ms = self.ctx.render_mono(mono)
            neg = c < 0
            mag = -c if neg else c
            if ms == "1":
                body = str(mag)
            elif mag == 1:
                body = ms
            else:
                body = f"{mag}*{ms}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<SuperPolynomial {self.render()}>"


def _det_even_block(ctx: RingContext) -> SuperPolynomial:
    # Leibniz sum over the even m x m block; all entries commute.
    from itertools import permutations

    m = ctx.m
    terms = []
    for perm in permutations(range(1, m + 1)):
        sign = 1
        seen = list(perm)
        for a in range(m):
            for b in range(a + 1, m):
                if seen[a] > seen[b]:
                    sign = -sign
        terms.append((sign, [(a + 1, perm[a]) for a in range(m)]))
    return ctx.poly(terms)


def det_c11(ctx: RingContext) -> SuperPolynomial:
    """D = determinant of the even block (c_ij)_{1 <= i, j <= m}."""
    d = ctx.cache.get("det")
    if d is None:
        d = ctx.cache["det"] = _det_even_block(ctx)
    return d


def det_c11_power(ctx: RingContext, k: int) -> SuperPolynomial:
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    powers = ctx.cache.setdefault("det_powers", {0: ctx.one()})
    while k not in powers:
        top = max(powers)
        powers[top + 1] = powers[top] * det_c11(ctx)
    return powers[k]


class LocalizedElement:
    """A pair (numerator, k) standing for numerator / D^k, k >= 0.

    Representations are not reduced; semantic equality (==) cross multiplies
    by powers of D.  Addition brings both summands to the larger power.
    """

    __slots__ = ("numerator", "d_power")

    def __init__(self, numerator: SuperPolynomial, d_power: int = 0):
        if not isinstance(numerator, SuperPolynomial):
            raise TypeError("numerator must be a SuperPolynomial")
        if not isinstance(d_power, int) or d_power < 0:
            raise ValueError(f"d_power must be an integer >= 0, got {d_power!r}")
        self.numerator = numerator
        self.d_power = d_power

    @property
    def ctx(self) -> RingContext:
        return self.numerator.ctx

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def parity(self):
        return self.numerator.parity()

    def weight(self):
        """Column-count vector of the class: numerator weight minus
        d_power on each of the first m columns."""
        w = self.numerator.weight()
        if w is None:
            return None
        k, m = self.d_power, self.ctx.m
        return tuple(w[t] - k if t < m else w[t] for t in range(len(w)))

    def raised(self, delta: int) -> "LocalizedElement":
        """Same class represented at d_power + delta."""
        if delta < 0:
            raise ValueError("can only raise the representation power")
        if delta == 0:
            return self
        return LocalizedElement(
            self.numerator * det_c11_power(self.ctx, delta),
            self.d_power + delta)

    def __add__(self, other):
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ValueError("mismatched ring contexts")
        k = max(self.d_power, other.d_power)
        return LocalizedElement(
            self.raised(k - self.d_power).numerator
            + other.raised(k - other.d_power).numerator, k)

    def __sub__(self, other):
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.d_power)

    def __mul__(self, other):
        if isinstance(other, LocalizedElement):
            if self.ctx != other.ctx:
                raise ValueError("mismatched ring contexts")
            return LocalizedElement(self.numerator * other.numerator,
                                    self.d_power + other.d_power)
        if isinstance(other, SuperPolynomial):
            return LocalizedElement(self.numerator * other, self.d_power)
        return LocalizedElement(self.numerator.scale(other), self.d_power)

    def __rmul__(self, other):
        if isinstance(other, SuperPolynomial):
            return LocalizedElement(other * self.numerator, self.d_power)
        return LocalizedElement(self.numerator.scale(other), self.d_power)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"localized powers need integer e >= 0, got {e!r}")
        return LocalizedElement(self.numerator ** e, self.d_power * e)

    def __eq__(self, other):
        if isinstance(other, LocalizedElement):
            return loc_eq(self, other)
        if isinstance(other, SuperPolynomial):
            return loc_eq(self, LocalizedElement(other, 0))
        if other == 0:
            return self.numerator.is_zero()
        return NotImplemented

    def render(self) -> str:
        if self.d_power == 0:
            return self.numerator.render()
        return f"{self.numerator.render()} / D^{self.d_power}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<LocalizedElement {self.render()}>"


def loc_eq(a: LocalizedElement, b: LocalizedElement) -> bool:
    """Equality of localized classes by cross multiplication with D powers."""
    if a.ctx != b.ctx:
        raise ValueError("mismatched ring contexts")
    if a.d_power == b.d_power:
        return a.numerator.terms == b.numerator.terms
    ctx = a.ctx
    lhs = a.numerator * det_c11_power(ctx, b.d_power)
    rhs = b.numerator * det_c11_power(ctx, a.d_power)
    return lhs.terms == rhs.terms
