"""Characters: Laurent symmetric polynomials, Schur and hook Schur functions.

Characters live in Z[x_1^{\\pm 1},..,x_m^{\\pm 1}, y_1^{\\pm 1},..,y_n^{\\pm 1}];
exponent vectors have length m+n with the x-block first.  Schur functions
are generated by explicit semistandard tableau enumeration, hook Schur
functions by (m|n)-semistandard tableau enumeration over the alphabet
1 < ... < m < 1' < ... < n', where unprimed entries increase weakly along
rows and strictly down columns and primed entries do the opposite.

The induced-module character is

    prod_{i,j} (1 + y_j / x_i) * S_{lambda^+}(x) * S_{lambda^-}(y),

and for hook partitions with lambda_m >= n it factors through the hook Schur
function (Berele-Regev): HS_lambda = prod (x_i + y_j) * S_mu(x) * S_nu(y)
with mu_i = lambda_i - n and nu the conjugate of the part below row m.
"""

from __future__ import annotations

from .weights import HookPartition, Weight, conjugate


class LaurentSymPoly:
    """Sparse Laurent polynomial in m x-variables and n y-variables.

    Integer coefficients; exponent keys are tuples of length m+n.  Rendering
    sorts terms ascending lexicographically by exponent vector and omits
    zero exponents, e.g. "1 + x1^-1*y1".
    """

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: dict):
        self.m = m
        self.n = n
        self.terms = {k: c for k, c in terms.items() if c}

    def _require_same_shape(self, other: "LaurentSymPoly"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError(f"mismatched variable blocks ({self.m},{self.n}) "
                             f"and ({other.m},{other.n})")

    @classmethod
    def one(cls, m: int, n: int) -> "LaurentSymPoly":
        return cls(m, n, {(0,) * (m + n): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, LaurentSymPoly):
            return NotImplemented
        self._require_same_shape(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentSymPoly(self.m, self.n, acc)

    def __sub__(self, other):
        if not isinstance(other, LaurentSymPoly):
            return NotImplemented
        self._require_same_shape(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) - c
        return LaurentSymPoly(self.m, self.n, acc)

    def __neg__(self):
        return LaurentSymPoly(self.m, self.n, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentSymPoly(self.m, self.n,
                                  {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentSymPoly):
            return NotImplemented
        self._require_same_shape(other)
        acc = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                acc[key] = acc.get(key, 0) + ca * cb
        return LaurentSymPoly(self.m, self.n, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if not isinstance(other, LaurentSymPoly):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def eval_ones(self) -> int:
        """Value at x_i = y_j = 1: the dimension a character counts."""
        return sum(self.terms.values())

    def permute_blocks(self, xperm, yperm) -> "LaurentSymPoly":
        """Apply permutations to the x-block and y-block variables."""
        acc = {}
        for k, c in self.terms.items():
            key = (tuple(k[xperm[i]] for i in range(self.m))
                   + tuple(k[self.m + yperm[j]] for j in range(self.n)))
            acc[key] = acc.get(key, 0) + c
        return LaurentSymPoly(self.m, self.n, acc)

    def _var_name(self, t: int) -> str:
        return f"x{t + 1}" if t < self.m else f"y{t - self.m + 1}"

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for key in sorted(self.terms):
            c = self.terms[key]
            factors = [self._var_name(t) + (f"^{e}" if e != 1 else "")
                       for t, e in enumerate(key) if e]
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<LaurentSymPoly {self.render()}>"


def _ssyt_weights(shape, nvars: int):
    """Weight vectors of semistandard tableaux of the given shape with
    entries 1..nvars: weakly increasing rows, strictly increasing columns."""
    shape = tuple(a for a in shape if a)
    if not shape:
        yield (0,) * nvars
        return
    if len(shape) > nvars:
        return
    rows = len(shape)
    weight = [0] * nvars
    tableau = [[0] * r for r in shape]

    def fill(r, c):
        if r == rows:
            yield tuple(weight)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        lo = tableau[r][c - 1] if c else 1
        if r:
            lo = max(lo, tableau[r - 1][c] + 1)
        for val in range(lo, nvars + 1):
            tableau[r][c] = val
            weight[val - 1] += 1
            yield from fill(nr, nc)
            weight[val - 1] -= 1

    yield from fill(0, 0)


def _schur_terms(mu, nvars: int) -> dict:
    """Schur polynomial as an exponent dict, for weakly decreasing integer mu
    (Laurent extension: shift by the last entry, then enumerate tableaux)."""
    mu = tuple(int(a) for a in mu)
    for a, b in zip(mu, mu[1:]):
        if a < b:
            raise ValueError(f"Schur labels must be weakly decreasing, got {mu}")
    if len(mu) > nvars:
        if any(a != 0 for a in mu[nvars:]):
            return {}
        mu = mu[:nvars]
    if len(mu) < nvars:
        if mu and mu[-1] < 0:
            raise ValueError(f"negative label {mu} needs exactly {nvars} entries")
        mu = mu + (0,) * (nvars - len(mu))
    shift = mu[-1]
    shape = tuple(a - shift for a in mu)
    acc = {}
    for w in _ssyt_weights(shape, nvars):
        key = tuple(e + shift for e in w)
        acc[key] = acc.get(key, 0) + 1
    return acc


def schur(mu, nvars: int) -> LaurentSymPoly:
    """Schur function S_mu in nvars variables (x-block only)."""
    return LaurentSymPoly(nvars, 0, {k: c for k, c in _schur_terms(mu, nvars).items()})


def schur_count(mu, nvars: int) -> int:
    return sum(_schur_terms(mu, nvars).values())


def _super_tableau_weights(shape, m: int, n: int):
    """Weight vectors of (m|n)-semistandard tableaux of the given shape.

    Letters 0..m-1 are unprimed, m..m+n-1 primed, totally ordered.  Adjacent
    constraints: along a row the right entry is >= the left and equal primed
    entries are forbidden; down a column the lower entry is >= the upper and
    equal unprimed entries are forbidden.
    """
    shape = tuple(a for a in shape if a)
    if not shape:
        yield (0,) * (m + n)
        return
    rows = len(shape)
    total = m + n
    weight = [0] * total
    tableau = [[0] * r for r in shape]

    def fill(r, c):
        if r == rows:
            yield tuple(weight)
            return
        nr, nc = (r, c + 1) if c + 1 < shape[r] else (r + 1, 0)
        for val in range(total):
            if c:
                left = tableau[r][c - 1]
                if val < left or (val == left and val >= m):
                    continue
            if r and c < shape[r - 1]:
                up = tableau[r - 1][c]
                if val < up or (val == up and val < m):
                    continue
            tableau[r][c] = val
            weight[val] += 1
            yield from fill(nr, nc)
            weight[val] -= 1

    yield from fill(0, 0)


def hook_schur(parts, m: int, n: int) -> LaurentSymPoly:
    """Hook Schur function HS_lambda(x; y) by supertableau enumeration."""
    hp = parts if isinstance(parts, HookPartition) else HookPartition(tuple(parts))
    acc = {}
    for w in _super_tableau_weights(hp.parts, m, n):
        acc[w] = acc.get(w, 0) + 1
    return LaurentSymPoly(m, n, acc)


def _embed(exps, offset: int, total: int) -> tuple:
    key = [0] * total
    for t, e in enumerate(exps):
        key[offset + t] = e
    return tuple(key)


def _product_over_pairs(m: int, n: int, x_exp: int, y_exp: int) -> LaurentSymPoly:
    """prod_{i <= m, j <= n} (x_i^{x_exp} y_j^{y_exp} + 1) style factors.

    Each factor contributes either the mixed monomial or 1; used with
    (x_exp, y_exp) = (-1, 1) for the induced character and via
    prod (x_i + y_j) = prod x_i^n * prod (1 + y_j/x_i) otherwise.
    """
    total = m + n
    out = LaurentSymPoly.one(m, n)
    for i in range(m):
        for j in range(n):
            key = [0] * total
            key[i] = x_exp
            key[m + j] = y_exp
            factor = LaurentSymPoly(m, n, {(0,) * total: 1, tuple(key): 1})
            out = out * factor
    return out


def char_induced(lam: Weight) -> LaurentSymPoly:
    """Character of the induced module with highest weight lam."""
    m, n = lam.m, lam.n
    sx = LaurentSymPoly(m, n, {_embed(k, 0, m + n): c
                               for k, c in _schur_terms(lam.lambda_plus, m).items()})
    sy = LaurentSymPoly(m, n, {_embed(k, m, m + n): c
                               for k, c in _schur_terms(lam.lambda_minus, n).items()})
    return _product_over_pairs(m, n, -1, 1) * sx * sy


def factorization_check(parts, m: int, n: int) -> bool:
    """Does HS_lambda equal prod(x_i + y_j) * S_mu(x) * S_nu(y)?

    Requires lambda_m >= n; mu strips n columns from the first m rows and nu
    is the conjugate of what lies below row m.
    """
    hp = parts if isinstance(parts, HookPartition) else HookPartition(tuple(parts))
    if hp.part(m) < n:
        raise ValueError(f"factorization needs lambda_m >= n, got "
                         f"lambda_{m} = {hp.part(m)} < {n}")
    mu = tuple(hp.part(i) - n for i in range(1, m + 1))
    nu = conjugate(hp.parts[m:])
    sx = LaurentSymPoly(m, n, {_embed(k, 0, m + n): c
                               for k, c in _schur_terms(mu, m).items()})
    sy = LaurentSymPoly(m, n, {_embed(k, m, m + n): c
                               for k, c in _schur_terms(nu, n).items()})
    # prod (x_i + y_j) = (x_1...x_m)^n * prod (1 + y_j/x_i)
    shift = _embed((n,) * m, 0, m + n)
    mixed = _product_over_pairs(m, n, -1, 1)
    product = LaurentSymPoly(m, n, {tuple(a + b for a, b in zip(k, shift)): c
                                    for k, c in mixed.terms.items()})
    return hook_schur(hp, m, n) == product * sx * sy


def dim_even(lam: Weight) -> int:
    """Dimension of the irreducible module of the even subgroup at lam."""
    return schur_count(lam.lambda_plus, lam.m) * schur_count(lam.lambda_minus, lam.n)


def dim_induced(lam: Weight) -> int:
    """Dimension of the induced module: 2^{mn} times the even dimension."""
    return (1 << (lam.m * lam.n)) * dim_even(lam)
