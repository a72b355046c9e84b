"""Associated subscript matrices and their structural sign properties.

The matrix attached to a pair (alpha, beta) of equal-length sequences has
(i, j) entry (alpha_i - i) - (beta_j - j); its signs decide everything
about the pair's expansion, so entries are stored as plain integers and
the generator wrapper only exists at the algebra layer.  Indices are
0-based internally and 1-based in every public rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .compositions import hat
from .errors import LengthMismatchError

SignPattern = tuple[tuple[bool, ...], ...]


@dataclass(frozen=True)
class SubscriptMatrix:
    """Square matrix of generator subscripts together with its source pair."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.entries)

    def render(self) -> str:
        """Debug form: one row per line, space-separated subscripts."""
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)


def build_matrix(alpha, beta) -> SubscriptMatrix:
    """Associated matrix of the pair; rejects unequal lengths.

    ``alpha`` must have positive parts; ``beta`` may be weak (zero parts
    embed non-skew indices as a skew by a zero sequence).
    """
    alpha = tuple(int(a) for a in alpha)
    beta = tuple(int(b) for b in beta)
    if len(alpha) != len(beta):
        raise LengthMismatchError(
            f"alpha has {len(alpha)} parts but beta has {len(beta)}"
        )
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError(f"alpha must be a composition (positive parts): {alpha!r}")
    if any(b < 0 for b in beta):
        raise ValueError(f"beta parts must be nonnegative: {beta!r}")
    ahat, bhat = hat(alpha), hat(beta)
    entries = tuple(tuple(a - b for b in bhat) for a in ahat)
    return SubscriptMatrix(alpha, beta, entries)


def sign_pattern(m: SubscriptMatrix) -> SignPattern:
    """Pointwise nonnegativity pattern of the subscripts."""
    return tuple(tuple(e >= 0 for e in row) for row in m.entries)


def has_negative_crossing_violation(pattern) -> bool:
    """Scan every 2x2 submatrix of a sign pattern for a crossing.

    With True marking a nonnegative subscript, the two forbidden 2x2
    configurations are (F,T / T,F) and (T,F / F,T): a negative pair on
    one diagonal facing a nonnegative pair on the other.  Associated
    matrices never contain one; hand-built patterns may, which is why
    this takes a pattern (possibly rectangular) rather than a matrix.
    """
    rows = [tuple(bool(x) for x in row) for row in pattern]
    if not rows:
        return False
    width = len(rows[0])
    for upper, lower in combinations(rows, 2):
        for cm, cn in combinations(range(width), 2):
            a, b = upper[cm], upper[cn]
            c, d = lower[cm], lower[cn]
            if (not a) and b and c and (not d):
                return True
            if a and (not b) and (not c) and d:
                return True
    return False


def row_nonneg_counts(m: SubscriptMatrix) -> tuple[int, ...]:
    """Number of nonnegative subscripts in each row."""
    return tuple(sum(1 for e in row if e >= 0) for row in m.entries)


def check_partition_row_monotonicity(m: SubscriptMatrix) -> bool:
    """True iff subscripts strictly increase left to right in every row.

    Holds whenever the skewing sequence is a partition (its staircase
    shift strictly decreases), and fails for many non-partition skews.
    """
    return all(
        all(row[j] < row[j + 1] for j in range(len(row) - 1))
        for row in m.entries
    )
