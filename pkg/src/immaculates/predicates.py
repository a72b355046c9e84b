"""Nonzeroness classification for skew expansions.

Three independent tests drive the classification of a pair (alpha, beta):

* a counting condition on staircase-shifted entries that is necessary for
  any single determinant term to survive (and whose failure proves every
  term vanishes by pigeonhole);
* a complete row-to-column matching over nonnegative subscripts, whose
  existence is equivalent to the counting condition (Hall's condition on
  the bipartite row/column graph) and which certifies a surviving term;
* for skews by partitions, a pair of conditions under which a greedily
  built term captures every zero subscript and provably survives all
  cancellation, so the whole expansion is nonzero.

All predicates work on hat-sequence arithmetic only, so they accept weak
skewing sequences (trailing zeros) even though the classical statements
concern positive parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

from .compositions import hat, is_partition, strip_trailing_zeros
from .errors import GreedyPreconditionError, LengthMismatchError
from .hwords import HExpansion, normalize_word
from .matrix import SubscriptMatrix, build_matrix, row_nonneg_counts
from .ndet import DEFAULT_DIM_CAP, SignedSelection, ndet_laplace


@unique
class Outcome(Enum):
    ALL_ZERO_PRE_CANCELLATION = "ALL_ZERO_PRE_CANCELLATION"
    NONZERO_TERM_EXISTS = "NONZERO_TERM_EXISTS"
    PROVABLY_NONZERO = "PROVABLY_NONZERO"
    ZERO_AFTER_CANCELLATION = "ZERO_AFTER_CANCELLATION"


@dataclass(frozen=True)
class Classification:
    """Outcome plus, when available, a certificate permutation and witness.

    ``certificate`` maps rows to columns (1-based) over nonnegative
    subscripts; ``witness`` is a surviving term or the full expansion,
    depending on the branch that produced the outcome.
    """

    outcome: Outcome
    certificate: tuple[int, ...] | None = None
    witness: HExpansion | None = None
    note: str | None = None


def format_certificate(certificate) -> str:
    """Render a row-to-column permutation as ``1->c1,2->c2,...``."""
    return ",".join(f"{i}->{c}" for i, c in enumerate(certificate, start=1))


def _hat_pair(alpha, beta):
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(beta):
        raise LengthMismatchError(
            f"alpha has {len(alpha)} parts but beta has {len(beta)}"
        )
    return hat(alpha), hat(beta)


def _negative_row_counts(alpha, beta) -> list[int]:
    # count of j with beta_hat[j] > alpha_hat[i], i.e. negatives in row i
    ahat, bhat = _hat_pair(alpha, beta)
    return [sum(1 for b in bhat if b > a) for a in ahat]


def necessary_condition_holds(alpha, beta) -> bool:
    """Counting condition necessary for a surviving determinant term.

    For every k, the rows whose staircase entry falls below at least
    l-k+1 entries of the skewing staircase must number at most k-1.
    If some k rows each carry at least l-k+1 negative subscripts, those
    rows squeeze all their nonnegative entries into at most k-1 shared
    columns and pigeonhole kills every term.
    """
    neg = _negative_row_counts(alpha, beta)
    l = len(neg)
    for k in range(1, l + 1):
        if sum(1 for c in neg if c >= l - k + 1) > k - 1:
            return False
    return True


def no_all_negative_row(alpha, beta) -> bool:
    """True iff every row of the associated matrix keeps a nonnegative entry.

    Equivalently: every staircase entry of alpha is >= some staircase
    entry of beta.  This is exactly the k=1 case of
    :func:`necessary_condition_holds`.
    """
    ahat, bhat = _hat_pair(alpha, beta)
    floor = min(bhat)
    return all(a >= floor for a in ahat)


def find_matching_certificate(m: SubscriptMatrix) -> tuple[int, ...] | None:
    """Complete row-to-column matching over nonnegative entries, or None.

    Augmenting-path search, deterministic: rows are processed top to
    bottom and columns tried left to right, with a free column always
    preferred before reassignments (so an all-nonnegative matrix yields
    the identity permutation).  Returns 1-based columns per row.
    """
    l = m.dim
    adjacency = [
        [j for j in range(l) if m.entries[i][j] >= 0] for i in range(l)
    ]
    row_of_col = [-1] * l
    col_of_row = [-1] * l

    def augment(i: int, seen: set[int]) -> bool:
        for j in adjacency[i]:
            if j in seen:
                continue
            seen.add(j)
            if row_of_col[j] == -1 or augment(row_of_col[j], seen):
                row_of_col[j] = i
                col_of_row[i] = j
                return True
        return False

    for i in range(l):
        free = next((j for j in adjacency[i] if row_of_col[j] == -1), None)
        if free is not None:
            row_of_col[free] = i
            col_of_row[i] = free
        elif not augment(i, set()):
            return None
    return tuple(c + 1 for c in col_of_row)


def certificate_agrees_with_condition(alpha, beta) -> bool:
    """Self-check: matching existence must equal the counting condition."""
    found = find_matching_certificate(build_matrix(alpha, beta)) is not None
    return found == necessary_condition_holds(alpha, beta)


def _sorted_counts_admissible(counts) -> bool:
    # ascending k-th smallest count must reach k: the worst k-subset of
    # rows is the k smallest counts, and it needs one row with >= k
    return all(c >= k for k, c in enumerate(sorted(counts), start=1))


def nocancel_conditions_hold(alpha, lam) -> bool:
    """Both conditions of the no-cancellation class for a partition skew.

    (1) every k rows include one with at least k nonnegative subscripts
    (evaluated via sorted row counts rather than all 2^l subsets), and
    (2) no two identical rows contain a zero subscript.  ``lam`` must be
    a partition, allowing trailing zeros.
    """
    lam = tuple(lam)
    if not is_partition(strip_trailing_zeros(lam)):
        raise ValueError(
            f"skewing sequence must be a partition up to trailing zeros: {lam!r}"
        )
    m = build_matrix(alpha, lam)
    if not _sorted_counts_admissible(row_nonneg_counts(m)):
        return False
    multiplicity: dict[tuple[int, ...], int] = {}
    for row in m.entries:
        multiplicity[row] = multiplicity.get(row, 0) + 1
    return all(mult < 2 or 0 not in row for row, mult in multiplicity.items())


def greedy_h0_term(m: SubscriptMatrix):
    """Build the surviving term that captures every zero subscript.

    Working on the live submatrix (columns are consumed left to right),
    each step picks a row whose remaining entries are all nonnegative,
    preferring one that still contains a zero, else the topmost, and
    assigns it the current leftmost column.  Returns (sign, word,
    selection).  Raises GreedyPreconditionError if the row-count
    condition fails on any intermediate submatrix, which cannot happen
    when the no-cancellation conditions hold for the source pair.
    """
    entries = m.entries
    l = m.dim
    remaining = list(range(l))
    column_of_row = [0] * l
    raw = [0] * l
    for col in range(l):
        live_counts = [
            sum(1 for j in range(col, l) if entries[i][j] >= 0) for i in remaining
        ]
        if not _sorted_counts_admissible(live_counts):
            raise GreedyPreconditionError(
                f"row-count condition fails on the submatrix at column {col + 1}"
            )
        full = [
            i for i in remaining if all(entries[i][j] >= 0 for j in range(col, l))
        ]
        if not full:
            raise GreedyPreconditionError(
                f"no fully nonnegative row remains at column {col + 1}"
            )
        with_zero = [i for i in full if any(entries[i][j] == 0 for j in range(col, l))]
        pick = with_zero[0] if with_zero else full[0]
        column_of_row[pick] = col + 1
        raw[pick] = entries[pick][col]
        remaining.remove(pick)
    word = normalize_word(raw)
    assert word is not None  # selected subscripts are nonnegative by construction
    selection = SignedSelection.from_columns(column_of_row)
    return selection.sign, word, selection


def classify(alpha, beta, oracle_cap=DEFAULT_DIM_CAP) -> Classification:
    """Aggregate the three tests, refining with the exact expansion when cheap.

    Failure of the counting condition proves every term vanishes.  A
    partition skew meeting the no-cancellation conditions is provably
    nonzero, witnessed by the greedy term.  Otherwise a matching
    certificate shows a term survives pre-cancellation, and under the
    dimension cap the exact expansion decides whether cancellation
    removes them all; above the cap that question is left open.
    """
    matrix = build_matrix(alpha, beta)
    if not necessary_condition_holds(alpha, beta):
        return Classification(Outcome.ALL_ZERO_PRE_CANCELLATION)
    if is_partition(strip_trailing_zeros(beta)) and nocancel_conditions_hold(alpha, beta):
        sign, word, selection = greedy_h0_term(matrix)
        return Classification(
            Outcome.PROVABLY_NONZERO,
            certificate=selection.column_of_row,
            witness=HExpansion({word: sign}),
        )
    certificate = find_matching_certificate(matrix)
    if oracle_cap is not None and matrix.dim <= oracle_cap:
        expansion = ndet_laplace(matrix, cap=oracle_cap)
        if expansion.is_zero():
            return Classification(Outcome.ZERO_AFTER_CANCELLATION)
        return Classification(
            Outcome.NONZERO_TERM_EXISTS, certificate=certificate, witness=expansion
        )
    return Classification(
        Outcome.NONZERO_TERM_EXISTS,
        certificate=certificate,
        note="cancellation undecided: dimension exceeds the exact-expansion cap",
    )
