"""Noncommutative determinants of subscript matrices, two independent ways.

Each determinant term selects one entry per row in a distinct column;
factors multiply in row order (top row first) and the term's sign is
the parity of the chosen column permutation.  ``ndet_permutation_sum``
is the plain reference over all l! selections; ``ndet_laplace`` is the
recursive top-row expansion with negative-pivot pruning.  The two are
implemented independently and serve as mutual oracles in the tests.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .compositions import is_composition
from .errors import DimensionCapError, LengthMismatchError
from .hwords import HExpansion, normalize_word
from .matrix import SubscriptMatrix, build_matrix

# l! terms beyond this exceed desk scale; the CLI can override via env.
DEFAULT_DIM_CAP = 10


def permutation_sign(perm) -> int:
    """Parity of a permutation given as a sequence of distinct values."""
    perm = tuple(perm)
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


class SignedSelection(NamedTuple):
    """One entry per row: row i+1 takes column ``column_of_row[i]`` (1-based)."""

    column_of_row: tuple[int, ...]
    sign: int

    @classmethod
    def from_columns(cls, columns) -> "SignedSelection":
        cols = tuple(int(c) for c in columns)
        if sorted(cols) != list(range(1, len(cols) + 1)):
            raise ValueError(f"not a permutation of 1..{len(cols)}: {cols!r}")
        return cls(cols, permutation_sign(cols))


def _check_cap(dim: int, cap) -> None:
    if cap is not None and dim > cap:
        raise DimensionCapError(
            f"matrix dimension {dim} exceeds the exact-expansion cap {cap}"
        )


def ndet_permutation_sum(m: SubscriptMatrix, cap=DEFAULT_DIM_CAP) -> HExpansion:
    """Reference determinant: signed sum over all l! column selections."""
    _check_cap(m.dim, cap)
    entries = m.entries
    l = m.dim
    acc: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(l)):
        raw = []
        dead = False
        for i in range(l):
            e = entries[i][perm[i]]
            if e < 0:
                dead = True
                break
            if e:
                raw.append(e)
        if dead:
            continue
        word = tuple(raw)
        total = acc.get(word, 0) + permutation_sign(perm)
        if total:
            acc[word] = total
        else:
            del acc[word]
    return HExpansion(acc)


def ndet_laplace(m: SubscriptMatrix, cap=DEFAULT_DIM_CAP) -> HExpansion:
    """Recursive expansion along the current top row, alternating cofactor signs.

    Subtrees under a negative pivot are pruned: every word through such a
    pivot is annihilated, so the whole cofactor contributes nothing.  Minors
    are memoized on their column set (the row range is determined by it).
    """
    _check_cap(m.dim, cap)
    entries = m.entries
    l = m.dim
    memo: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    def minor(cols: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        if not cols:
            return {(): 1}
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = l - len(cols)
        acc: dict[tuple[int, ...], int] = {}
        for pos, col in enumerate(cols):
            pivot = entries[row][col]
            if pivot < 0:
                continue
            sign = 1 if pos % 2 == 0 else -1
            for word, coeff in minor(cols[:pos] + cols[pos + 1:]).items():
                key = (pivot,) + word if pivot else word
                total = acc.get(key, 0) + sign * coeff
                if total:
                    acc[key] = total
                else:
                    del acc[key]
        memo[cols] = acc
        return acc

    return HExpansion(minor(tuple(range(l))))


def skew_immaculate(alpha, beta, cap=DEFAULT_DIM_CAP) -> HExpansion:
    """H-basis expansion of the skew element indexed by (alpha, beta)."""
    return ndet_laplace(build_matrix(alpha, beta), cap=cap)


def immaculate(mu, cap=DEFAULT_DIM_CAP) -> HExpansion:
    """H-basis expansion of the basis element indexed by a composition.

    Equals the skew expansion against the all-zero sequence; the (i, j)
    subscript of the underlying matrix is mu_i - i + j.
    """
    mu = tuple(int(p) for p in mu)
    if not is_composition(mu):
        raise ValueError(f"index must be a composition (positive parts): {mu!r}")
    return skew_immaculate(mu, (0,) * len(mu), cap=cap)


def term_of_selection(m: SubscriptMatrix, selection: SignedSelection):
    """Signed normalized word for one column selection, or None if it dies.

    Factors are ordered by increasing row index; the result is absent
    exactly when some selected subscript is negative.
    """
    cols = tuple(selection.column_of_row)
    if len(cols) != m.dim:
        raise LengthMismatchError(
            f"selection over {len(cols)} rows does not fit a {m.dim}x{m.dim} matrix"
        )
    raw = [m.entries[i][cols[i] - 1] for i in range(m.dim)]
    word = normalize_word(raw)
    if word is None:
        return None
    return selection.sign, word
