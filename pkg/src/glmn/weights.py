"""Weights of GL(m|n), typicality, and hook partitions.

A weight is a pair of weakly decreasing integer tuples (lambda^+ | lambda^-)
of lengths m and n.  The text form is "a1,a2,...,am|b1,b2,...,bn".

The atypicality matrix has entries

    omega_ij = lambda^+_i + lambda^-_j + m + 1 - i - j,

1-based; the weight is typical when no entry vanishes (characteristic 0) or
no entry is divisible by p (characteristic p).  The matrix is invariant
under shifts along beta = (-1,...,-1 | 1,...,1), which is what makes the
Berezinian normalization harmless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .superalg import validate_characteristic


def _check_decreasing(entries, label: str):
    for a, b in zip(entries, entries[1:]):
        if a < b:
            raise ValueError(f"{label} must be weakly decreasing, got {entries}")


@dataclass(frozen=True)
class Weight:
    """Dominant integral weight (lambda^+ | lambda^-) of GL(m|n)."""

    lambda_plus: tuple
    lambda_minus: tuple

    def __post_init__(self):
        lp = tuple(int(a) for a in self.lambda_plus)
        lm = tuple(int(b) for b in self.lambda_minus)
        object.__setattr__(self, "lambda_plus", lp)
        object.__setattr__(self, "lambda_minus", lm)
        if not lp or not lm:
            raise ValueError("weights need m >= 1 and n >= 1 entries")
        _check_decreasing(lp, "weight is not dominant: lambda^+")
        _check_decreasing(lm, "weight is not dominant: lambda^-")

    @property
    def m(self) -> int:
        return len(self.lambda_plus)

    @property
    def n(self) -> int:
        return len(self.lambda_minus)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse the "a1,...,am|b1,...,bn" form."""
        if text.count("|") != 1:
            raise ValueError(f"weight text needs exactly one '|', got {text!r}")
        left, right = text.split("|")
        try:
            lp = tuple(int(a) for a in left.split(","))
            lm = tuple(int(b) for b in right.split(","))
        except ValueError:
            raise ValueError(f"weight entries must be integers, got {text!r}") from None
        return cls(lp, lm)

    def render(self) -> str:
        return (",".join(str(a) for a in self.lambda_plus) + "|"
                + ",".join(str(b) for b in self.lambda_minus))

    def __str__(self):
        return self.render()

    def shift(self, da: int, db: int) -> "Weight":
        """Add da to every lambda^+ entry and db to every lambda^- entry."""
        return Weight(tuple(a + da for a in self.lambda_plus),
                      tuple(b + db for b in self.lambda_minus))


@dataclass(frozen=True)
class HookPartition:
    """Partition whose (m+1)-st part is at most n, i.e. fits in the (m, n) hook.

    Stored with trailing zeros stripped; the hook condition itself depends on
    (m, n) and is checked by is_hook / hook_to_weight.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if any(a < 0 for a in parts):
            raise ValueError(f"partition parts must be nonnegative, got {parts}")
        _check_decreasing(parts, "partition parts")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "HookPartition":
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            return cls(tuple(int(a) for a in text.split(",")))
        except ValueError:
            raise ValueError(f"partition entries must be integers, got {text!r}") from None

    def render(self) -> str:
        return ",".join(str(a) for a in self.parts) if self.parts else "0"

    def __str__(self):
        return self.render()

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def is_hook(self, m: int, n: int) -> bool:
        return self.part(m + 1) <= n


def conjugate(parts, length: int | None = None) -> tuple:
    """Conjugate partition, padded or truncated to the requested length.

    Truncation is only allowed when it drops zero parts.
    """
    parts = tuple(parts)
    _check_decreasing(parts, "partition parts")
    full = tuple(sum(1 for a in parts if a >= i)
                 for i in range(1, (parts[0] if parts else 0) + 1))
    if length is None:
        return full
    if len(full) > length:
        raise ValueError(f"conjugate of {parts} has {len(full)} parts, "
                         f"does not fit in length {length}")
    return full + (0,) * (length - len(full))


def omega(lam: Weight, i: int, j: int) -> int:
    """Atypicality matrix entry, 1-based: lambda^+_i + lambda^-_j + m+1-i-j."""
    if not (1 <= i <= lam.m and 1 <= j <= lam.n):
        raise ValueError(f"omega needs 1 <= i <= m and 1 <= j <= n, got ({i}, {j})")
    return lam.lambda_plus[i - 1] + lam.lambda_minus[j - 1] + lam.m + 1 - i - j


def omega_matrix(lam: Weight) -> tuple:
    return tuple(tuple(omega(lam, i, j) for j in range(1, lam.n + 1))
                 for i in range(1, lam.m + 1))


def omega_row_product(lam: Weight, i: int) -> int:
    """Product of the i-th row of the atypicality matrix, over the integers."""
    out = 1
    for j in range(1, lam.n + 1):
        out *= omega(lam, i, j)
    return out


@dataclass(frozen=True)
class TypicalityReport:
    weight: Weight
    characteristic: int
    omega: tuple
    atypical_positions: tuple
    typical: bool

    def to_json(self) -> dict:
        return {
            "weight": self.weight.render(),
            "m": self.weight.m,
            "n": self.weight.n,
            "characteristic": self.characteristic,
            "omega": [list(row) for row in self.omega],
            "atypical_positions": [list(pos) for pos in self.atypical_positions],
            "typical": self.typical,
        }


def is_typical(lam: Weight, characteristic: int = 0) -> TypicalityReport:
    """Typicality of a weight: no atypicality entry vanishes in the base field."""
    p = validate_characteristic(characteristic)
    mat = omega_matrix(lam)
    bad = tuple((i + 1, j + 1)
                for i, row in enumerate(mat)
                for j, w in enumerate(row)
                if (w == 0 if p == 0 else w % p == 0))
    return TypicalityReport(lam, p, mat, bad, not bad)


def berezin_normalize(lam: Weight) -> tuple:
    """Split off the Berezinian twist: returns (lam', twist) with
    lam' = lam - twist * beta, beta = (-1,..,-1 | 1,..,1), so that the last
    entry of lambda'^- is zero and lam = lam' + twist * beta."""
    t = lam.lambda_minus[-1]
    return lam.shift(t, -t), t


def kappa_weight(lam: Weight) -> Weight:
    """Weight of the fully lowered vector: lam + (-n,..,-n | m,..,m)."""
    return lam.shift(-lam.n, lam.m)


def hook_to_weight(parts, m: int, n: int) -> Weight:
    """Weight attached to an (m, n)-hook partition: first m parts, then the
    conjugate of the remainder."""
    hp = parts if isinstance(parts, HookPartition) else HookPartition(tuple(parts))
    if not hp.is_hook(m, n):
        raise ValueError(f"partition {hp} is not an ({m}, {n})-hook: "
                         f"part m+1 = {hp.part(m + 1)} exceeds n")
    lp = tuple(hp.part(i) for i in range(1, m + 1))
    lm = conjugate(hp.parts[m:], n)
    return Weight(lp, lm)


def weight_to_hook(lam: Weight) -> HookPartition:
    """Inverse of hook_to_weight on polynomial hook weights."""
    if any(a < 0 for a in lam.lambda_plus) or any(b < 0 for b in lam.lambda_minus):
        raise ValueError(f"weight {lam} is not polynomial")
    tail = conjugate(lam.lambda_minus)
    parts = lam.lambda_plus + tail
    if tail and lam.lambda_plus[-1] < tail[0]:
        raise ValueError(f"weight {lam} is not a hook weight: joining "
                         f"lambda^+ to the conjugate of lambda^- is not a partition")
    return HookPartition(parts)
