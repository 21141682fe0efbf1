"""Exact combinatorics of graded Jacobian rings of Fermat-type hypersurfaces.

Everything here is integer or rational arithmetic: bounded-exponent
monomial counts (the graded dimensions of the Jacobian ring of a Fermat
hypersurface), the eigenspace dimension tables of cyclic covers, exact
square-free polynomial arithmetic in the d=3 Jacobian ring, and the
fraction-free linear algebra backing the period-map rank computation.

Two independent routes exist for every count: a closed form by
inclusion-exclusion and a literal enumeration (tuple listing for small
search spaces, an exact integer convolution otherwise).  Tests sweep
their agreement; neither route is ever collapsed into the other.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, lcm
from typing import Iterable, Mapping, Optional, Sequence


class UnsupportedCaseError(ValueError):
    """Arguments outside the hypotheses of the requested computation."""


# ---------------------------------------------------------------------------
# bounded-exponent monomial counting


@dataclass(frozen=True)
class MonomialCountQuery:
    """#(monomials of total degree m in n_vars variables, exponents <= d-2)."""

    n_vars: int
    d: int
    m: int

    def count(self) -> int:
        return count_bounded_monomials(self.n_vars, self.d, self.m)


def count_bounded_monomials(n_vars: int, d: int, m: int) -> int:
    """N(n, d, m) = #{(b_0..b_{n-1}) : sum b_i = m, 0 <= b_i <= d-2}.

    Inclusion-exclusion over the exponent bound; terms whose upper
    binomial index goes negative contribute nothing.
    """
    if n_vars < 1:
        raise ValueError(f"need at least one variable, got {n_vars}")
    if d < 3:
        raise ValueError(f"need degree >= 3, got {d}")
    if m < 0 or m > n_vars * (d - 2):
        return 0
    total = 0
    for j in range(n_vars + 1):
        upper = m - j * (d - 1) + n_vars - 1
        if upper < n_vars - 1:
            break
        total += (-1) ** j * comb(n_vars, j) * comb(upper, n_vars - 1)
    return total


def count_bounded_monomials_enumerated(n_vars: int, d: int, m: int) -> int:
    """The same count by listing every exponent vector; the independent
    oracle for the closed form.  Cost is (d-1)^n_vars."""
    return sum(
        1 for exps in product(range(d - 1), repeat=n_vars) if sum(exps) == m
    )


def hypersurface_hodge_numbers(d: int, k: int) -> list[tuple[int, int]]:
    """Primitive Hodge numbers (p, h^{p, k-p}_0) of a smooth degree-d
    k-fold in projective (k+1)-space, from the graded dimensions of its
    Jacobian ring.  k = 0 gives the reduced cohomology of d points."""
    if d < 3:
        raise ValueError(f"need degree >= 3, got {d}")
    if k < 0:
        raise ValueError(f"need dimension >= 0, got {k}")
    return [
        (k - q, count_bounded_monomials(k + 2, d, d * (q + 1) - k - 2))
        for q in range(k + 1)
    ]


def primitive_middle_rank(d: int, k: int) -> int:
    return sum(dim for _, dim in hypersurface_hodge_numbers(d, k))


def eigenspace_dims(d: int, k: int) -> dict[tuple[int, int], int]:
    """Full table (p, i) -> dim of the i-th eigenspace of the covering
    automorphism on the primitive (p, k-p) piece, i = 1..d-1.

    The invariant (i = 0) part of primitive cohomology vanishes, so the
    table starts at i = 1.
    """
    if d < 3 or k < 1:
        raise ValueError(f"need d >= 3 and k >= 1, got ({d}, {k})")
    return {
        (k - q, i): count_bounded_monomials(k + 1, d, d * (q + 1) - k - 1 - i)
        for q in range(k + 1)
        for i in range(1, d)
    }


_ENUMERATION_LIMIT = 150_000


@lru_cache(maxsize=None)
def _tuple_sum_counts(d: int, k: int) -> dict[int, int]:
    """Number of (k+1)-tuples over {1..d-1} for each total sum.

    Small search spaces are enumerated literally; larger ones use an
    exact integer convolution.  Both are independent of the
    inclusion-exclusion closed form they are checked against.
    """
    n = k + 1
    if (d - 1) ** n <= _ENUMERATION_LIMIT:
        return dict(Counter(sum(t) for t in product(range(1, d), repeat=n)))
    ways: dict[int, int] = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = defaultdict(int)
        for s, c in ways.items():
            for a in range(1, d):
                nxt[s + a] += c
        ways = dict(nxt)
    return ways


def shioda_tuple_count(d: int, k: int, q: int, i: int) -> int:
    """#{(a_0..a_k) : 1 <= a_j <= d-1, sum a_j + i = d(q+1)}, the tuple
    count behind the eigenspace dimensions."""
    if not 1 <= i <= d - 1:
        raise ValueError(f"eigenvalue index must lie in [1, {d - 1}], got {i}")
    return _tuple_sum_counts(d, k).get(d * (q + 1) - i, 0)


# ---------------------------------------------------------------------------
# square-free polynomial arithmetic (the d = 3 Jacobian ring)


class SquareFreeElement:
    """Exact-rational combination of square-free monomials in a fixed
    variable set; multiplication kills any repeated variable (x_i^2 = 0,
    the relations of the Fermat-cubic Jacobian ring)."""

    def __init__(
        self,
        variable_count: int,
        terms: Mapping[frozenset[int], Fraction | int] | None = None,
    ):
        if variable_count < 1:
            raise ValueError("need at least one variable")
        self.variable_count = variable_count
        clean: dict[frozenset, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = frozenset(mono)
            if mono and (min(mono) < 0 or max(mono) >= variable_count):
                raise ValueError(f"monomial {sorted(mono)} outside variable range")
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def zero(cls, variable_count: int) -> "SquareFreeElement":
        return cls(variable_count, {})

    @classmethod
    def monomial(
        cls, variable_count: int, indices: Iterable[int], coeff: Fraction | int = 1
    ) -> "SquareFreeElement":
        return cls(variable_count, {frozenset(indices): Fraction(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> Optional[int]:
        """Common degree of all terms; None for zero, error if mixed."""
        if not self.terms:
            return None
        degrees = {len(m) for m in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degrees)}")
        return degrees.pop()

    def __add__(self, other: "SquareFreeElement") -> "SquareFreeElement":
        self._check_universe(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return SquareFreeElement(self.variable_count, terms)

    def __neg__(self) -> "SquareFreeElement":
        return SquareFreeElement(
            self.variable_count, {m: -c for m, c in self.terms.items()}
        )

    def __sub__(self, other: "SquareFreeElement") -> "SquareFreeElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SquareFreeElement):
            return sf_multiply(self, other)
        return SquareFreeElement(
            self.variable_count,
            {m: c * Fraction(other) for m, c in self.terms.items()},
        )

    __rmul__ = __mul__

    def _check_universe(self, other: "SquareFreeElement") -> None:
        if self.variable_count != other.variable_count:
            raise ValueError(
                f"mixed variable universes: {self.variable_count} vs "
                f"{other.variable_count}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareFreeElement):
            return NotImplemented
        return (
            self.variable_count == other.variable_count
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variable_count, tuple(sorted(
            (tuple(sorted(m)), c) for m, c in self.terms.items()
        ))))

    def __repr__(self) -> str:
        if not self.terms:
            return "SquareFreeElement(0)"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), sorted(m))):
            coeff = self.terms[mono]
            name = "*".join(f"x{i}" for i in sorted(mono)) or "1"
            bits.append(name if coeff == 1 else f"{coeff}*{name}")
        return f"SquareFreeElement({' + '.join(bits)})"


def sf_multiply(a: SquareFreeElement, b: SquareFreeElement) -> SquareFreeElement:
    """Bilinear product with x_i^2 = 0: terms sharing a variable vanish."""
    a._check_universe(b)
    terms: dict[frozenset, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if m1 & m2:
                continue
            key = m1 | m2
            terms[key] = terms.get(key, Fraction(0)) + c1 * c2
    return SquareFreeElement(a.variable_count, terms)


# ---------------------------------------------------------------------------
# exact rank (fraction-free Gaussian elimination)


def exact_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination.

    Rows are scaled to integers first; all intermediate divisions are
    exact, so the result is never subject to rounding.
    """
    matrix: list[list[int]] = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        matrix.append([int(f * scale) for f in fracs])
    if not matrix or not matrix[0]:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        pivot_row = next(
            (r for r in range(rank, n_rows) if matrix[r][col]), None
        )
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            # Bareiss: update every row, zero factor included, so the
            # exact-division invariant survives to the next step.
            factor = matrix[r][col]
            row_r, row_p = matrix[r], matrix[rank]
            for c in range(col + 1, n_cols):
                row_r[c] = (pivot * row_r[c] - factor * row_p[c]) // prev_pivot
            row_r[col] = 0
        prev_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


# ---------------------------------------------------------------------------
# the W-ladder quotients (d = 3) and the period-map differential


@dataclass(frozen=True)
class GradedQuotient:
    """One rung of the W ladder, presented as ambient square-free
    monomials modulo explicit relation rows.

    `basis` is the candidate basis (monomials in the base variables
    alone, plus the products carrying both cover variables); it is
    checked against the computed dimension, never assumed.
    `alternative_basis_count` counts the same description with the last
    base variable excluded, kept so a mismatch is surfaced rather than
    silently corrected.
    """

    degree: int
    ambient_basis: tuple[tuple[int, ...], ...]
    relation_rows: tuple[tuple[int, ...], ...]
    basis: tuple[tuple[int, ...], ...]
    alternative_basis_count: int

    @property
    def relation_rank(self) -> int:
        return exact_rank(self.relation_rows) if self.relation_rows else 0

    @property
    def dimension(self) -> int:
        return len(self.ambient_basis) - self.relation_rank

    def basis_matches_dimension(self) -> bool:
        return len(self.basis) == self.dimension

    def basis_is_independent(self) -> bool:
        """The reported basis is linearly independent in the quotient."""
        if not self.basis:
            return True
        index = {mono: j for j, mono in enumerate(self.ambient_basis)}
        unit_rows = []
        for mono in self.basis:
            row = [0] * len(self.ambient_basis)
            row[index[mono]] = 1
            unit_rows.append(tuple(row))
        combined = list(self.relation_rows) + unit_rows
        return exact_rank(combined) == self.relation_rank + len(self.basis)


def _empty_quotient(m: int) -> GradedQuotient:
    return GradedQuotient(m, (), (), (), 0)


def build_w_quotient(k: int, p: int) -> GradedQuotient:
    """Degree (3p + 3 - k) rung of the W ladder for the cubic k-fold.

    Ambient: square-free monomials in x_0..x_{k+2}.  Relations: every
    multiple of a cover variable x_{k+1} or x_{k+2} by a square-free
    monomial in the base variables x_0..x_k.  The quotient therefore
    keeps exactly the monomials with no cover variable or with both, and
    its dimension must reproduce the corresponding entry of the W table
    built by the tensor construction.
    """
    if k < 2:
        raise UnsupportedCaseError(f"ladder needs k >= 2, got {k}")
    m = 3 * p + 3 - k
    if m < 0 or m > k + 3:
        return _empty_quotient(m)
    n_vars = k + 3
    base = range(k + 1)
    cover = (k + 1, k + 2)
    ambient = tuple(combinations(range(n_vars), m))
    index = {mono: j for j, mono in enumerate(ambient)}
    rows = []
    for mu in (combinations(base, m - 1) if m >= 1 else ()):
        for c in cover:
            row = [0] * len(ambient)
            row[index[tuple(sorted(mu + (c,)))]] = 1
            rows.append(tuple(row))
    basis = tuple(
        mono for mono in ambient if len(set(mono) & set(cover)) in (0, 2)
    )
    alt = comb(k, m) + (comb(k, m - 2) if m >= 2 else 0)
    return GradedQuotient(m, ambient, tuple(rows), basis, alt)


def w_ladder_steps(k: int) -> list[int]:
    """The p values whose ladder degree 3p + 3 - k is in range."""
    return [p for p in range(k + 2) if 0 <= 3 * p + 3 - k <= k + 3]


def _quotient_product(
    mono: tuple[int, ...], cubic_mono: frozenset[int], cover: set[int]
) -> Optional[tuple[int, ...]]:
    """Product of a quotient basis monomial with a base-variable cubic;
    None when a square appears (x_i^2 = 0) or the result leaves the
    quotient (exactly one cover variable cannot occur here)."""
    s = set(mono)
    if s & cubic_mono:
        return None
    out = tuple(sorted(s | cubic_mono))
    assert len(set(out) & cover) in (0, 2)
    return out


def torelli_deformation_dimension(k: int) -> int:
    """Dimension of the deformation space of the cubic (k-1)-fold at the
    Fermat point: square-free cubics in x_0..x_k."""
    return comb(k + 1, 3)


def _torelli_vector(
    k: int,
    cubic: frozenset[int],
    quotients: dict[int, GradedQuotient],
) -> dict[tuple[int, tuple, tuple], int]:
    """Nonzero entries of the tuple of multiplication maps induced by a
    single square-free cubic monomial, keyed by (p, in, out)."""
    cover = {k + 1, k + 2}
    entries: dict[tuple[int, tuple, tuple], int] = {}
    for p, source in quotients.items():
        target = quotients.get(p + 1)
        if target is None:
            continue
        target_set = set(target.basis)
        for mono in source.basis:
            out = _quotient_product(mono, cubic, cover)
            if out is not None and out in target_set:
                entries[(p, mono, out)] = 1
    return entries


def torelli_differential_rank(k: int) -> int:
    """Exact rank of the period-map differential of the cubic (k-1)-fold
    at the Fermat point: a deformation cubic goes to the tuple of
    multiplication maps along the W ladder.  Rank equal to the
    deformation dimension means the differential is injective."""
    if k <= 3 or k % 3 != 1:
        raise UnsupportedCaseError(
            f"rank computation needs k = 3q + 1 with k > 3, got {k}"
        )
    quotients = {p: build_w_quotient(k, p) for p in w_ladder_steps(k)}
    cubics = [frozenset(c) for c in combinations(range(k + 1), 3)]
    vectors = [_torelli_vector(k, g, quotients) for g in cubics]
    columns = sorted({key for vec in vectors for key in vec})
    col_index = {key: j for j, key in enumerate(columns)}
    rows = []
    for vec in vectors:
        row = [0] * len(columns)
        for key, val in vec.items():
            row[col_index[key]] = val
        rows.append(row)
    return exact_rank(rows)


def torelli_witness_nonzero(k: int, cubic: Optional[frozenset[int]] = None) -> bool:
    """Whether the single deformation cubic (default x0*x1*x2) induces a
    nonzero tuple of multiplication maps."""
    if cubic is None:
        cubic = frozenset({0, 1, 2})
    quotients = {p: build_w_quotient(k, p) for p in w_ladder_steps(k)}
    return bool(_torelli_vector(k, cubic, quotients))


# ---------------------------------------------------------------------------
# the cover parametrization identity


def verify_cover_parametrization(u_cube_rhs=None, cover_numerator=None) -> bool:
    """Check symbolically that the rational map onto the cubic cover
    satisfies the cover's equation.

    Substitutes x_k = (v*y^3 - L*Q)/L^2 and x_{k+1} = u*y^2/L into
    x_{k+1}^3 + L*x_k^2 + 2*Q*x_k + R and reduces modulo the two curve
    relations u^3 = -v^2 - 1 and y^6 = L^3*R - L^2*Q^2, treating
    L, Q, R, y, u, v as independent variables.  True exactly when the
    reduced numerator vanishes identically.  The two keyword arguments
    exist so mutated versions of the map can be shown to fail.
    """
    import sympy as sp

    L, Q, R, y, u, v = sp.symbols("L Q R y u v")
    if u_cube_rhs is None:
        u_cube_rhs = -(v**2) - 1
    if cover_numerator is None:
        cover_numerator = u * y**2
    x_k = (v * y**3 - L * Q) / L**2
    x_top = cover_numerator / L
    equation = x_top**3 + L * x_k**2 + 2 * Q * x_k + R
    poly = sp.expand(equation * L**3)
    poly = sp.expand(poly.subs(u**3, u_cube_rhs))
    poly = sp.expand(poly.subs(y**6, L**3 * R - L**2 * Q**2))
    return poly == 0
