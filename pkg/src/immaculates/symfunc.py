"""Commutative symmetric polynomials used as a cross-validation oracle.

Complete homogeneous and monomial polynomials, semistandard tableaux
(French notation: bottom row first, rows weakly increase, columns
strictly increase upward), Schur polynomials computed both from tableaux
and from the classical determinant formula, and the projection that
forgets noncommutativity by sending each generator subscript a to the
complete homogeneous polynomial of degree a.

Everything is exact sparse integer arithmetic over a fixed variable
count; exponent vectors are tuples of that length.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .compositions import is_partition
from .hwords import HExpansion


class Poly:
    """Sparse polynomial with exact int coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms=()):
        nvars = int(nvars)
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        items = terms.items() if hasattr(terms, "items") else terms
        data: dict[tuple[int, ...], int] = {}
        for raw_exps, coeff in items:
            exps = tuple(int(e) for e in raw_exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps!r} for {nvars} variables")
            coeff = int(coeff)
            if not coeff:
                continue
            total = data.get(exps, 0) + coeff
            if total:
                data[exps] = total
            elif exps in data:
                del data[exps]
        self._terms = data

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: 1})

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps) -> int:
        return self._terms.get(tuple(exps), 0)

    def exponents(self):
        return self._terms.keys()

    def items(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def _require_same_vars(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_vars(other)
        data = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = data.get(exps, 0) + coeff
            if total:
                data[exps] = total
            else:
                del data[exps]
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out._terms = data
        return out

    def __neg__(self) -> "Poly":
        return self * -1

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = Poly.__new__(Poly)
            out.nvars = self.nvars
            out._terms = (
                {} if other == 0 else {e: c * other for e, c in self._terms.items()}
            )
            return out
        self._require_same_vars(other)
        data: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                total = data.get(key, 0) + c1 * c2
                if total:
                    data[key] = total
                else:
                    del data[key]
        out = Poly.__new__(Poly)
        out.nvars = self.nvars
        out._terms = data
        return out

    __rmul__ = __mul__

    def permute_variables(self, perm) -> "Poly":
        """Relabel variables: new exponent i is the old exponent perm[i]."""
        perm = tuple(perm)
        return Poly(
            self.nvars,
            {tuple(e[p] for p in perm): c for e, c in self._terms.items()},
        )

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.render()!r})"

    def render(self) -> str:
        """Deterministic text form: graded-lex order, largest terms first.

        Each term renders as ``{+|-}{|c|}·x1^a1·x2^a2`` with unit
        exponents and absent variables elided; a constant term is the
        bare signed coefficient and the zero polynomial is ``0``.
        """
        if not self._terms:
            return "0"
        chunks = []
        for exps in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            coeff = self._terms[exps]
            sign = "+" if coeff > 0 else "-"
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                factors.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
            if factors:
                chunks.append(f"{sign}{abs(coeff)}·" + "·".join(factors))
            else:
                chunks.append(f"{sign}{abs(coeff)}")
        return " ".join(chunks)


def h_poly(k: int, n: int) -> Poly:
    """Complete homogeneous polynomial of degree k in n variables.

    Sum of all monomials over weakly increasing index selections; degree
    0 gives 1 and negative degrees give the zero polynomial.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    if k < 0:
        return Poly.zero(n)
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations_with_replacement(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        terms[tuple(exps)] = 1
    return Poly(n, terms)


def m_poly(lam, n: int) -> Poly:
    """Monomial symmetric polynomial: all distinct rearrangements of lam."""
    lam = tuple(int(p) for p in lam)
    if not is_partition(lam):
        raise ValueError(f"index must be a partition: {lam!r}")
    if n < 1:
        raise ValueError("need at least one variable")
    if len(lam) > n:
        return Poly.zero(n)
    padded = lam + (0,) * (n - len(lam))
    return Poly(n, {exps: 1 for exps in set(itertools.permutations(padded))})


class Tableau(NamedTuple):
    """A filling of a (possibly skew) shape; bottom row first.

    ``rows[r]`` holds the entries of the unshaded cells of row r, left
    to right; the inner shape contributes no entries.
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def weight_exponents(self, n: int) -> tuple[int, ...]:
        exps = [0] * n
        for row in self.rows:
            for value in row:
                exps[value - 1] += 1
        return tuple(exps)


def _check_skew_shape(outer, inner):
    outer = tuple(int(p) for p in outer)
    inner = tuple(int(p) for p in inner)
    if outer and not is_partition(outer):
        raise ValueError(f"outer shape must be a partition: {outer!r}")
    if any(p < 0 for p in inner) or any(
        inner[i] < inner[i + 1] for i in range(len(inner) - 1)
    ):
        raise ValueError(f"inner shape must weakly decrease: {inner!r}")
    if len(inner) > len(outer):
        raise ValueError(f"inner shape {inner!r} is longer than outer {outer!r}")
    inner = inner + (0,) * (len(outer) - len(inner))
    if any(inner[i] > outer[i] for i in range(len(outer))):
        raise ValueError(f"inner shape {inner!r} does not fit inside {outer!r}")
    return outer, inner


def generate_ssyt(outer, inner, n: int):
    """Yield every semistandard filling of outer/inner with entries in 1..n.

    Cells are filled bottom row first, left to right, candidate values
    ascending, so enumeration order is lexicographic on the filling
    sequence and deterministic across runs.
    """
    outer, inner = _check_skew_shape(outer, inner)
    if n < 1:
        raise ValueError("need at least one value")
    depth = len(outer)
    cells = [(r, c) for r in range(depth) for c in range(inner[r], outer[r])]
    grid: dict[tuple[int, int], int] = {}

    def fill(pos: int):
        if pos == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(inner[r], outer[r]))
                for r in range(depth)
            )
            yield Tableau(outer, inner, rows)
            return
        r, c = cells[pos]
        low = 1
        left = grid.get((r, c - 1))
        if left is not None:
            low = max(low, left)
        below = grid.get((r - 1, c))
        if below is not None:
            low = max(low, below + 1)
        for value in range(low, n + 1):
            grid[(r, c)] = value
            yield from fill(pos + 1)
        grid.pop((r, c), None)

    yield from fill(0)


def schur_via_tableaux(outer, inner, n: int) -> Poly:
    """Schur polynomial as the weight generating function of tableaux."""
    terms: dict[tuple[int, ...], int] = {}
    for tab in generate_ssyt(outer, inner, n):
        key = tab.weight_exponents(n)
        terms[key] = terms.get(key, 0) + 1
    return Poly(n, terms)


def schur_via_jacobi_trudi(outer, inner, n: int) -> Poly:
    """Schur polynomial as the determinant of complete homogeneous entries.

    Entry (i, j) is the complete homogeneous polynomial of degree
    (outer_i - i) - (inner_j - j) (1-based indices); negative degrees are
    the zero polynomial, which prunes the expansion.
    """
    outer, inner = _check_skew_shape(outer, inner)
    size = len(outer)
    if size == 0:
        return Poly.one(n)
    hcache: dict[int, Poly] = {}

    def h(k: int) -> Poly:
        if k not in hcache:
            hcache[k] = h_poly(k, n) if k >= 0 else Poly.zero(n)
        return hcache[k]

    rows = [
        [h(outer[i] - (i + 1) - (inner[j] - (j + 1))) for j in range(size)]
        for i in range(size)
    ]
    memo: dict[tuple[int, ...], Poly] = {}

    def det(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.one(n)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = size - len(cols)
        acc = Poly.zero(n)
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if entry.is_zero():
                continue
            term = entry * det(cols[:pos] + cols[pos + 1:])
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return det(tuple(range(size)))


def forgetful(expansion: HExpansion, n: int) -> Poly:
    """Project an H-expansion onto commuting variables.

    Each word (a1, ..., ak) maps to the product of complete homogeneous
    polynomials of those degrees, extended linearly.
    """
    if n < 1:
        raise ValueError("need at least one variable")
    hcache: dict[int, Poly] = {}

    def h(k: int) -> Poly:
        if k not in hcache:
            hcache[k] = h_poly(k, n)
        return hcache[k]

    acc = Poly.zero(n)
    for word, coeff in expansion.items():
        product = Poly.one(n)
        for a in word:
            product = product * h(a)
        acc = acc + product * coeff
    return acc


def schur_decompose(p: Poly) -> dict[tuple[int, ...], int]:
    """Write a symmetric polynomial as an integer combination of Schur polynomials.

    Peels the lexicographically greatest exponent vector, which for a
    polynomial in the Schur span is always weakly decreasing and is the
    leading weight of exactly one Schur polynomial.  Raises ValueError
    when the input is not in the span.
    """
    remainder = p
    out: dict[tuple[int, ...], int] = {}
    while not remainder.is_zero():
        lead = max(remainder.exponents())
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ValueError(
                f"not in the span of Schur polynomials: leading exponent {lead!r}"
            )
        mu = tuple(e for e in lead if e)
        coeff = remainder.coefficient(lead)
        out[mu] = out.get(mu, 0) + coeff
        remainder = remainder - coeff * schur_via_tableaux(mu, (), p.nvars)
    return {mu: c for mu, c in out.items() if c}
