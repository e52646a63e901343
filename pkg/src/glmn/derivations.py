"""Right superderivations and the distinguished elements they act on.

For column indices k, l the right superderivation (.)_klD is determined by
its action on generators, (c_ak)_klD = c_al and (c_ab)_klD = 0 for b != k,
together with the signed product rule

    (f g)_klD = (-1)^{(|k|+|l|) |g|} (f)_klD g + f (g)_klD.

Acting on a monomial g_1 ... g_r, the summand that replaces g_t carries the
sign (-1)^{|d| (|g_{t+1}| + ... + |g_r|)} where |d| = |k|+|l|.  The matrix
unit e_kl of the underlying Lie superalgebra acts on the coordinate algebra
as (.)_lkD, with indices swapped.

On the localization, derivations extend by the quotient rule

    (f / D^k)_klD = ((f)_klD D - k f (D)_klD) / D^{k+1},

which raises d_power by exactly 1 and performs no simplification.

This module also builds the standard elements the verification layer needs:
adjugate entries of the even block, the odd-block ratios y_ij, the twisted
even-block entries phi(c_kl), row-initial determinants of both kinds, and
highest vectors of induced modules.
"""

from __future__ import annotations

from itertools import permutations

from .superalg import (
    FIELD_MASK,
    LocalizedElement,
    RingContext,
    SuperPolynomial,
    det_c11,
    det_c11_power,
)
from .weights import Weight


def derive_poly(f: SuperPolynomial, k: int, l: int) -> SuperPolynomial:
    """Apply the right superderivation (.)_klD to a polynomial."""
    ctx = f.ctx
    ctx.parity(k), ctx.parity(l)
    dpar = ctx.gen_parity(k, l)
    even_cands = ctx.even_by_col.get(k, ())
    odd_cands = ctx.odd_by_col.get(k, ())
    shifts = ctx._shifts
    even_index = ctx.even_index
    odd_bit = ctx.odd_bit
    acc = {}
    get = acc.get
    for (ekey, omask), c in f.terms.items():
        q = omask.bit_count()
        for row, t in even_cands:
            sh = shifts[t]
            e = (ekey >> sh) & FIELD_MASK
            if not e:
                continue
            cc = c * e
            base = ekey - (1 << sh)
            if dpar == 0:
                key = (base + (1 << shifts[even_index[(row, l)]]), omask)
                val = cc
            else:
                # replacement is odd: all q odd factors sit to the right of
                # the even block, then the new factor crosses those sorting
                # below it
                bit = odd_bit[(row, l)]
                if omask & bit:
                    continue
                s = (omask & (bit - 1)).bit_count()
                key = (base, omask | bit)
                val = -cc if (q + s) & 1 else cc
            acc[key] = get(key, 0) + val
        if not omask:
            continue
        for row, bit in odd_cands:
            if not (omask & bit):
                continue
            if dpar == 0:
                bit2 = odd_bit[(row, l)]
                rest = omask ^ bit
                if rest & bit2:
                    continue
                if bit == bit2:
                    key = (ekey, omask)
                    val = c
                else:
                    lo, hi = (bit, bit2) if bit < bit2 else (bit2, bit)
                    between = rest & (hi - 1) & ~((lo << 1) - 1)
                    key = (ekey, rest | bit2)
                    val = -c if between.bit_count() & 1 else c
            else:
                # replacement is even; position sign counts the odd factors
                # to the right of the one being replaced
                s = (omask & (bit - 1)).bit_count()
                key = (ekey + (1 << shifts[even_index[(row, l)]]), omask ^ bit)
                val = -c if (q - 1 - s) & 1 else c
            acc[key] = get(key, 0) + val
    return SuperPolynomial(ctx, ctx._normalize(acc))


def det_c11_derivative(ctx: RingContext, k: int, l: int) -> SuperPolynomial:
    """(D)_klD, cached; zero for k > m, D*y_kl for k <= m < l."""
    key = ("dD", k, l)
    d = ctx.cache.get(key)
    if d is None:
        d = ctx.cache[key] = derive_poly(det_c11(ctx), k, l)
    return d


def derive_loc(a, k: int, l: int) -> LocalizedElement:
    """Quotient-rule extension of (.)_klD to the localization."""
    if isinstance(a, SuperPolynomial):
        a = LocalizedElement(a, 0)
    f = a.numerator
    kp = a.d_power
    df = derive_poly(f, k, l)
    if kp == 0:
        return LocalizedElement(df, 0)
    ctx = f.ctx
    num = df * det_c11(ctx) - (f * det_c11_derivative(ctx, k, l)).scale(kp)
    return LocalizedElement(num, kp + 1)


def _perm_sign(perm) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def minor(ctx: RingContext, rows, cols) -> SuperPolynomial:
    """Determinant of (c_{rows[a], cols[b]})_ab, factors in ascending row order.

    Repeated columns give 0 (the Leibniz terms cancel in pairs); repeated
    rows are not special-cased because odd rows need not cancel.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    if len(rows) != len(cols):
        raise ValueError(f"minor needs as many rows as columns, got {rows} and {cols}")
    for idx in (*rows, *cols):
        ctx.parity(idx)
    s = len(rows)
    if s == 0:
        return ctx.one()
    if len(set(cols)) < s:
        return ctx.zero()
    terms = []
    for perm in permutations(range(s)):
        terms.append((_perm_sign(perm),
                      [(rows[a], cols[perm[a]]) for a in range(s)]))
    return ctx.poly(terms)


def det_plus(ctx: RingContext, cols) -> SuperPolynomial:
    """D^+(j_1..j_s): rows 1..s against the given columns."""
    cols = tuple(cols)
    return minor(ctx, range(1, len(cols) + 1), cols)


def det_plus_power(ctx: RingContext, cols, e: int) -> SuperPolynomial:
    cols = tuple(cols)
    return _cached_poly_power(ctx, ("det_plus", cols), lambda: det_plus(ctx, cols), e)


def _cached_poly_power(ctx: RingContext, key, build, e: int) -> SuperPolynomial:
    if e < 0:
        raise ValueError(f"need exponent >= 0, got {e}")
    powers = ctx.cache.setdefault(("pow",) + key, {})
    if 1 not in powers:
        powers[0] = ctx.one()
        powers[1] = build()
    top = max(powers)
    while top < e:
        powers[top + 1] = powers[top] * powers[1]
        top += 1
    return powers[e]


def adjugate_entry(ctx: RingContext, i: int, j: int) -> SuperPolynomial:
    """Entry A_ij of the adjugate of the even block: signed complementary minor."""
    m = ctx.m
    if not (1 <= i <= m and 1 <= j <= m):
        raise ValueError(f"adjugate entries need 1 <= i, j <= m={m}, got ({i}, {j})")
    key = ("adj", i, j)
    a = ctx.cache.get(key)
    if a is None:
        rows = [r for r in range(1, m + 1) if r != j]
        cols = [c for c in range(1, m + 1) if c != i]
        a = minor(ctx, rows, cols)
        if (i + j) & 1:
            a = -a
        ctx.cache[key] = a
    return a


def y_entry(ctx: RingContext, i: int, j: int) -> LocalizedElement:
    """y_ij = (A_i1 c_1j + ... + A_im c_mj) / D for 1 <= i <= m < j."""
    m = ctx.m
    if not (1 <= i <= m < j <= ctx.size):
        raise ValueError(f"y needs 1 <= i <= m < j <= m+n, got ({i}, {j})")
    key = ("y", i, j)
    num = ctx.cache.get(key)
    if num is None:
        num = ctx.zero()
        for a in range(1, m + 1):
            num = num + adjugate_entry(ctx, i, a) * ctx.gen(a, j)
        ctx.cache[key] = num
    return LocalizedElement(num, 1)


def phi_entry(ctx: RingContext, k: int, l: int) -> LocalizedElement:
    """phi(c_kl) = c_kl - sum_t c_kt y_tl for m < k, l; an even class at d_power 1."""
    m = ctx.m
    if not (m < k <= ctx.size and m < l <= ctx.size):
        raise ValueError(f"phi(c_kl) needs m < k, l <= m+n, got ({k}, {l})")
    key = ("phi", k, l)
    num = ctx.cache.get(key)
    if num is None:
        num = det_c11(ctx) * ctx.gen(k, l)
        for t in range(1, m + 1):
            num = num - ctx.gen(k, t) * y_entry(ctx, t, l).numerator
        ctx.cache[key] = num
    return LocalizedElement(num, 1)


def det_minus(ctx: RingContext, cols) -> LocalizedElement:
    """D^-(j_1..j_s): determinant of (phi(c_{m+a, j_b}))_ab at d_power s."""
    cols = tuple(cols)
    s = len(cols)
    if s > ctx.n:
        raise ValueError(f"D^- supports at most n={ctx.n} rows, got {s} columns")
    for j in cols:
        if not ctx.m < j <= ctx.size:
            raise ValueError(f"D^- columns must lie in m+1..m+n, got {j}")
    if s == 0:
        return LocalizedElement(ctx.one(), 0)
    key = ("det_minus", cols)
    num = ctx.cache.get(key)
    if num is None:
        if len(set(cols)) < s:
            num = ctx.zero()
        else:
            num = ctx.zero()
            entries = {(a, b): phi_entry(ctx, ctx.m + a, cols[b - 1]).numerator
                       for a in range(1, s + 1) for b in range(1, s + 1)}
            for perm in permutations(range(1, s + 1)):
                prod = entries[(1, perm[0])]
                for a in range(2, s + 1):
                    prod = prod * entries[(a, perm[a - 1])]
                num = num + prod.scale(_perm_sign(perm))
        ctx.cache[key] = num
    return LocalizedElement(num, s)


def det_minus_power(ctx: RingContext, cols, e: int) -> LocalizedElement:
    cols = tuple(cols)
    num = _cached_poly_power(ctx, ("det_minus", cols),
                             lambda: det_minus(ctx, cols).numerator, e)
    return LocalizedElement(num, len(cols) * e)


def dminus_product(ctx: RingContext, factor_cols) -> LocalizedElement:
    """Value of a formal product of D^- determinants given by column tuples."""
    out = LocalizedElement(ctx.one(), 0)
    for cols in factor_cols:
        out = out * det_minus(ctx, cols)
    return out


def entry_replace_derive(ctx: RingContext, factor_cols, a: int, l: int) -> LocalizedElement:
    """Entry-replacement derivation on a formal product of D^- determinants.

    Sends each single factor D^-(.., a, ..) to D^-(.., l, ..) and anything not
    containing a to 0, extended to products by the Leibniz rule (all factors
    are even, so no signs appear).  Factors must have distinct entries.
    """
    factor_cols = [tuple(cols) for cols in factor_cols]
    for idx in (a, l):
        if not ctx.m < idx <= ctx.size:
            raise ValueError(f"entry indices must lie in m+1..m+n, got {idx}")
    for cols in factor_cols:
        if len(set(cols)) < len(cols):
            raise ValueError(f"factor {cols} has a repeated entry")
    total_power = sum(len(cols) for cols in factor_cols)
    out = LocalizedElement(ctx.zero(), total_power)
    for t, cols in enumerate(factor_cols):
        if a not in cols:
            continue
        replaced = tuple(l if j == a else j for j in cols)
        term = dminus_product(
            ctx, factor_cols[:t] + [replaced] + factor_cols[t + 1:])
        out = out + term
    return out


def highest_vector(ctx: RingContext, lam: Weight) -> LocalizedElement:
    """Highest vector of the induced module with highest weight lam.

    Product of powers of the leading determinants of both kinds; a negative
    last entry of lambda^+ contributes a power of D to the denominator.
    Requires the last entry of lambda^- to be nonnegative (normalize away a
    Berezinian twist first).
    """
    if not isinstance(lam, Weight):
        raise TypeError("highest_vector needs a Weight")
    if (lam.m, lam.n) != (ctx.m, ctx.n):
        raise ValueError(f"weight shape ({lam.m}, {lam.n}) does not match context "
                         f"({ctx.m}, {ctx.n})")
    lp = lam.lambda_plus
    lmn = lam.lambda_minus
    if lmn[-1] < 0:
        raise ValueError(
            "last entry of lambda^- is negative; factor out the Berezinian "
            "twist (berezin_normalize) before building the highest vector")
    m, n = ctx.m, ctx.n
    num = ctx.one()
    power = 0
    for a in range(1, m):
        e = lp[a - 1] - lp[a]
        if e:
            num = num * det_plus_power(ctx, tuple(range(1, a + 1)), e)
    if lp[m - 1] >= 0:
        num = num * det_c11_power(ctx, lp[m - 1])
    else:
        power += -lp[m - 1]
    for b in range(1, n + 1):
        e = lmn[b - 1] - (lmn[b] if b < n else 0)
        if e:
            factor = det_minus_power(ctx, tuple(range(m + 1, m + b + 1)), e)
            num = num * factor.numerator
            power += factor.d_power
    return LocalizedElement(num, power)


def y_row(ctx: RingContext, i: int) -> LocalizedElement:
    """y_i = y_{i,m+1} y_{i,m+2} ... y_{i,m+n}."""
    key = ("yrow", i)
    cached = ctx.cache.get(key)
    if cached is None:
        out = LocalizedElement(ctx.one(), 0)
        for j in range(ctx.m + 1, ctx.size + 1):
            out = out * y_entry(ctx, i, j)
        cached = ctx.cache[key] = out
    return cached


def y_product(ctx: RingContext, rows) -> LocalizedElement:
    """Ordered product of whole-row factors y_i over the given rows."""
    rows = tuple(rows)
    key = ("yprod", rows)
    cached = ctx.cache.get(key)
    if cached is None:
        out = LocalizedElement(ctx.one(), 0)
        for i in rows:
            out = out * y_row(ctx, i)
        cached = ctx.cache[key] = out
    return cached


def row_derivation_chain(a, row: int) -> LocalizedElement:
    """Apply (.)_{row,m+1}D, then (.)_{row,m+2}D, ..., then (.)_{row,m+n}D."""
    if isinstance(a, SuperPolynomial):
        a = LocalizedElement(a, 0)
    ctx = a.ctx
    for col in range(ctx.m + 1, ctx.size + 1):
        a = derive_loc(a, row, col)
    return a


def full_lowering_chain(a, ctx_rows=None) -> LocalizedElement:
    """Row chains for rows m, m-1, ..., 1 in that order."""
    if isinstance(a, SuperPolynomial):
        a = LocalizedElement(a, 0)
    rows = ctx_rows if ctx_rows is not None else range(a.ctx.m, 0, -1)
    for row in rows:
        a = row_derivation_chain(a, row)
    return a
