"""Exact iterated constant terms CT_{x_n} ... CT_{x_1}.

The integrand family is a Laurent polynomial numerator times poles
x_i^{-a_i} (1-x_i)^{-b_i} prod_{i<j} (x_j - x_i)^{-m}, with 1/(x_j - x_i)
always expanded as the Laurent series x_j^{-1} sum_k (x_i/x_j)^k.

Under that convention every pole factor is a series with nonnegative
coefficients, so the constant term is a weighted count of exponent
configurations: (1-x_i)^{-b} contributes x_i^{r} with weight equal to the
number of matrix rows of length b summing to r, and each power of the
Vandermonde pole contributes hook-sum exponents of an upper triangular
matrix with staircase diagonal.  The engine counts those configurations by
dynamic programming over variables, eliminating x_1 first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .compositions import compositions_weight, multinomial, weak_compositions


@dataclass(frozen=True)
class CTIntegrand:
    """Symbolic integrand for the iterated constant term.

    numerator: list of (coefficient, exponent vector) monomials; exponents
    may be negative.  x_pole[i] is the exponent a_i in x_i^{-a_i} (negative
    values mean a plain numerator power).  one_minus_pole[i] is b_i in
    (1-x_i)^{-b_i}.  vandermonde_power is m in prod_{i<j} (x_j-x_i)^{-m}.
    """

    n_vars: int
    numerator: tuple[tuple[int, tuple[int, ...]], ...]
    x_pole: tuple[int, ...] = ()
    one_minus_pole: tuple[int, ...] = ()
    vandermonde_power: int = 0

    def __post_init__(self) -> None:
        if self.n_vars < 1:
            raise ValueError("n_vars must be positive")
        numerator = tuple(
            (int(c), tuple(int(e) for e in exps)) for c, exps in self.numerator
        )
        x_pole = tuple(int(x) for x in self.x_pole) or (0,) * self.n_vars
        omp = tuple(int(x) for x in self.one_minus_pole) or (0,) * self.n_vars
        for _, exps in numerator:
            if len(exps) != self.n_vars:
                raise ValueError("monomial exponent vector has wrong length")
        if len(x_pole) != self.n_vars or len(omp) != self.n_vars:
            raise ValueError("pole vectors must have length n_vars")
        if any(b < 0 for b in omp):
            raise ValueError("one_minus_pole entries must be nonnegative")
        if self.vandermonde_power < 0:
            raise ValueError("vandermonde_power must be nonnegative")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "x_pole", x_pole)
        object.__setattr__(self, "one_minus_pole", omp)

    def to_json_dict(self) -> dict:
        return {
            "vars": self.n_vars,
            "numerator": [[c, list(e)] for c, e in self.numerator],
            "x_pole": list(self.x_pole),
            "one_minus_pole": list(self.one_minus_pole),
            "vandermonde": self.vandermonde_power,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CTIntegrand":
        return cls(
            n_vars=int(data["vars"]),
            numerator=tuple((c, tuple(e)) for c, e in data["numerator"]),
            x_pole=tuple(data.get("x_pole") or ()),
            one_minus_pole=tuple(data.get("one_minus_pole") or ()),
            vandermonde_power=int(data.get("vandermonde", 0)),
        )


@dataclass(frozen=True)
class MatrixGrid:
    """Nonnegative integer matrix with the row-sum / hook-sum statistics.

    When upper_triangular and staircase_diagonal are set the matrix belongs
    to the family with A_{i,i} = i - 1 whose hook-sum generating function
    expands one power of the Vandermonde pole.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    upper_triangular: bool = False
    staircase_diagonal: bool = False

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(r) != self.cols for r in self.entries
        ):
            raise ValueError("entry grid does not match rows x cols")
        if any(x < 0 for r in self.entries for x in r):
            raise ValueError("entries must be nonnegative")
        if self.upper_triangular:
            for i in range(self.rows):
                for j in range(min(i, self.cols)):
                    if self.entries[i][j] != 0:
                        raise ValueError("entries below the diagonal must be 0")
        if self.staircase_diagonal:
            for i in range(min(self.rows, self.cols)):
                if self.entries[i][i] != i:
                    raise ValueError("diagonal must be 0, 1, 2, ...")

    def row_sum(self, k: int) -> int:
        """r_k = sum of row k (1-based)."""
        return sum(self.entries[k - 1])

    def hook_sum(self, k: int) -> int:
        """h_k = row k right of the diagonal minus column k down to the
        diagonal (both 1-based, diagonal included in the column part)."""
        right = sum(self.entries[k - 1][k:])
        down = sum(self.entries[j][k - 1] for j in range(min(k, self.rows)))
        return right - down


@lru_cache(maxsize=None)
def _count_balanced(
    net: tuple[int, ...], one_minus: tuple[int, ...], vand: int
) -> int:
    """Weighted number of ways to cancel the exponent vector `net`.

    Chooses r_i >= 0 with weight C(r_i + b_i - 1, b_i - 1) and K_{i,j} >= 0
    (i < j) with weight C(K + m - 1, m - 1) such that for every i:

        net_i + r_i + sum_{j>i} K_{i,j} - sum_{j<i} (K_{j,i} + m) = 0.

    The DP walks variables left to right; the state is the tuple of K totals
    already routed to each later variable.
    """
    n = len(net)
    # pend[0] is the K total already routed to the current variable
    states: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i in range(n):
        later = n - 1 - i
        new: dict[tuple[int, ...], int] = {}
        for pend, cnt in states.items():
            supply = -net[i] + pend[0] + i * vand
            rest = pend[1:]
            if supply < 0:
                continue
            b = one_minus[i]
            for comp in weak_compositions(supply, later + 1):
                r, ks = comp[0], comp[1:]
                w = cnt * compositions_weight(r, b)
                if w == 0:
                    continue
                if vand == 0 and any(ks):
                    continue
                for k in ks:
                    w *= compositions_weight(k, vand)
                    if w == 0:
                        break
                if w == 0:
                    continue
                nxt = tuple(p + k for p, k in zip(rest, ks))
                new[nxt] = new.get(nxt, 0) + w
        states = new
        if not states:
            return 0
    return states.get((), 0)


def constant_term(f: CTIntegrand) -> int:
    """CT_{x_n} ... CT_{x_1} of the integrand, exactly."""
    b = f.one_minus_pole
    m = f.vandermonde_power
    total = 0
    for coeff, exps in f.numerator:
        net = tuple(e - a for e, a in zip(exps, f.x_pole))
        total += coeff * _count_balanced(net, b, m)
    return total


def catalan_polytope_ct(n: int) -> int:
    """CT of (x_{n-1} + x_n)^{C(n,2)} / prod_{i<j} (x_j - x_i).

    Equals the normalized volume of the flow polytope of K_{n+1} with
    netflow (1, 1, 0, ..., 0, -2).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    top = comb(n, 2)
    numerator = []
    for t in range(top + 1):
        exps = [0] * n
        exps[n - 2] = t
        exps[n - 1] = top - t
        numerator.append((comb(top, t), tuple(exps)))
    return constant_term(
        CTIntegrand(n, tuple(numerator), vandermonde_power=1)
    )


def morris_ct(n: int, a: int, b: int, m: int) -> int:
    """CT of prod x_i^{-a} (1-x_i)^{-b} prod_{i<j} (x_j - x_i)^{-m}."""
    if n < 1:
        raise ValueError("n must be positive")
    return constant_term(
        CTIntegrand(
            n,
            ((1, (0,) * n),),
            x_pole=(a,) * n,
            one_minus_pole=(b,) * n,
            vandermonde_power=m,
        )
    )


def tesler_ct(n: int, a: int, b: int) -> int:
    """CT of (x_1+...+x_n)^{a C(n,2) + n(b-1)} prod x_i^{-b+1}
    prod_{i<j} (x_j - x_i)^{-a}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    power = a * comb(n, 2) + n * (b - 1)
    if power < 0:
        raise ValueError("numerator exponent is negative")
    numerator = tuple(
        (multinomial(power, comp), comp) for comp in weak_compositions(power, n)
    )
    return constant_term(
        CTIntegrand(
            n,
            numerator,
            x_pole=(b - 1,) * n,
            vandermonde_power=a,
        )
    )


def reduction_identity_sides(n: int, a_vec: Sequence[int]) -> tuple[int, int]:
    """Both sides of the pair-symmetrized CT reduction identity.

    lhs = CT over n variables of
          (x_{n-1}+x_n)^{C(n,2)-a} (x_{n-1}^{a_{n-1}} x_n^{a_n}
          + x_{n-1}^{a_n} x_n^{a_{n-1}}) prod_{i<=n-2} x_i^{a_i}
          / prod_{i<j} (x_j - x_i),
    rhs = 2^{C(n,2)-a} * CT over n-2 variables of
          prod x_i^{a_i} (1-x_i)^{-2} / prod_{i<j} (x_j - x_i),
    where a = sum(a_vec).  For C(n,2) - a < 0 both sides are the empty
    binomial sum and are returned as 0.
    """
    a_vec = tuple(int(x) for x in a_vec)
    if len(a_vec) != n:
        raise ValueError("a_vec must have length n")
    if n < 2:
        raise ValueError("n must be at least 2")
    R = comb(n, 2) - sum(a_vec)
    if R < 0:
        return 0, 0

    monomials: dict[tuple[int, ...], int] = {}
    base = list(a_vec[: n - 2]) + [0, 0]
    for t in range(R + 1):
        for pair in ((a_vec[n - 2], a_vec[n - 1]), (a_vec[n - 1], a_vec[n - 2])):
            exps = list(base)
            exps[n - 2] += t + pair[0]
            exps[n - 1] += R - t + pair[1]
            key = tuple(exps)
            monomials[key] = monomials.get(key, 0) + comb(R, t)
    lhs = constant_term(
        CTIntegrand(
            n,
            tuple((c, e) for e, c in monomials.items()),
            vandermonde_power=1,
        )
    )

    if n == 2:
        rhs_ct = 1
    else:
        rhs_ct = constant_term(
            CTIntegrand(
                n - 2,
                ((1, a_vec[: n - 2]),),
                one_minus_pole=(2,) * (n - 2),
                vandermonde_power=1,
            )
        )
    return lhs, (2**R) * rhs_ct


# --- explicit matrix enumeration and the reduction bijection -----------------


def staircase_matrices(
    rows: int, cols: int, hook_targets: Sequence[int]
) -> Iterator[MatrixGrid]:
    """All upper triangular matrices with diagonal 0,1,2,... of the given
    shape whose first len(hook_targets) hook sums match hook_targets.

    Rows beyond the targeted ones must carry no free entries (this holds for
    the square and the cropped shapes used here).
    """
    targets = tuple(int(h) for h in hook_targets)
    if rows > len(targets) + (1 if rows == cols else 0):
        raise ValueError("untargeted rows with free entries are unbounded")

    def rec(i: int, grid: list[list[int]]) -> Iterator[list[list[int]]]:
        if i > min(len(targets), rows):
            yield grid
            return
        col_down = sum(grid[j][i - 1] for j in range(i - 1))
        supply = targets[i - 1] + col_down + (i - 1)
        free = cols - i
        if supply < 0 or (free == 0 and supply != 0):
            return
        for comp in weak_compositions(supply, free) if free else [()]:
            row = [0] * cols
            if i - 1 < cols:
                row[i - 1] = i - 1
            for off, val in enumerate(comp):
                row[i + off] = val
            grid.append(row)
            yield from rec(i + 1, grid)
            grid.pop()

    for grid in rec(1, []):
        full = [list(r) for r in grid]
        for i in range(len(full), rows):
            row = [0] * cols
            if i < cols:
                row[i] = i
            full.append(row)
        yield MatrixGrid(
            rows,
            cols,
            tuple(tuple(r) for r in full),
            upper_triangular=True,
            staircase_diagonal=True,
        )


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of checking the two-row-cropping bijection."""

    ok: bool
    x_size: int
    x_prime_size: int
    y_size: int
    upper: int
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_reduction_bijection(n: int, a_vec: Sequence[int]) -> BijectionReport:
    """Machine-check the bijection behind the CT reduction identity.

    Enumerates the square-matrix families X (hook sum h_{n-1} pinned through
    a_{n-1}) and X' (pinned through a_n), the cropped family Y, applies the
    drop-two-rows map (with column swap and index complement on the X' side)
    and verifies it is a bijection onto Y x {0..C(n,2)-a}, with the side
    selected by exactly one of the two threshold inequalities.
    """
    a_vec = tuple(int(x) for x in a_vec)
    if len(a_vec) != n:
        raise ValueError("a_vec must have length n")
    if n < 2 or n > 5:
        raise ValueError("enumeration supported for 2 <= n <= 5")
    R = comb(n, 2) - sum(a_vec)
    if R < 0:
        return BijectionReport(True, 0, 0, 0, -1)
    head = tuple(-x for x in a_vec[: n - 2])

    def enum_window(anchor: int) -> list[MatrixGrid]:
        out = []
        for t in range(R + 1):
            out.extend(staircase_matrices(n, n, head + (-anchor - t,)))
        return out

    X = enum_window(a_vec[n - 2])
    Xp = enum_window(a_vec[n - 1])
    Y = list(staircase_matrices(n - 2, n, head)) if n > 2 else [
        MatrixGrid(0, n, ())
    ]
    y_index = {M.entries: M for M in Y}

    failures: list[str] = []
    images: dict[tuple, tuple[str, MatrixGrid]] = {}

    def crop(A: MatrixGrid, swap: bool) -> tuple[tuple[int, ...], ...]:
        rows = [list(r) for r in A.entries[: n - 2]]
        if swap:
            for r in rows:
                r[n - 2], r[n - 1] = r[n - 1], r[n - 2]
        return tuple(tuple(r) for r in rows)

    for tag, family, anchor in (("X", X, a_vec[n - 2]), ("X'", Xp, a_vec[n - 1])):
        for A in family:
            t = -anchor - A.hook_sum(n - 1)
            B = crop(A, swap=(tag == "X'"))
            t_out = t if tag == "X" else R - t
            if B not in y_index:
                failures.append(f"{tag}: cropped matrix not in Y")
                continue
            if not 0 <= t_out <= R:
                failures.append(f"{tag}: image index {t_out} out of range")
                continue
            key = (B, t_out)
            if key in images:
                failures.append(f"duplicate image at index {t_out}")
            images[key] = (tag, A)

    if len(images) != len(Y) * (R + 1):
        failures.append(
            f"image count {len(images)} != |Y| * (R+1) = {len(Y) * (R + 1)}"
        )

    for B in Y:
        c = sum(B.entries[j][n - 2] for j in range(B.rows))
        for t in range(R + 1):
            in_x = c + (n - 2) - a_vec[n - 2] - t >= 0
            in_xp = c + (n - 1) - a_vec[n - 2] - t <= 0
            if in_x == in_xp:
                failures.append(f"threshold dichotomy fails at t={t}")
                continue
            got = images.get((B.entries, t))
            if got is None:
                failures.append(f"no preimage for index {t}")
            elif (got[0] == "X") != in_x:
                failures.append(f"preimage side mismatch at t={t}")

    return BijectionReport(
        ok=not failures,
        x_size=len(X),
        x_prime_size=len(Xp),
        y_size=len(Y),
        upper=R,
        failures=tuple(failures[:10]),
    )
