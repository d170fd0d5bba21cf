"""Thom polynomials of the Morin singularities A_3 in the Schur basis.

``thom_a3(r) = f_part(r) + h_part2(r)``: the 1-part is a sum over pairs
``j1 <= j2 <= r`` weighted by Schur functions of the constant alphabet
``{2, 3}``; the 2-part is built from the integer table ``e_{i,j}`` and the
shift ``S_{i1,i2,i3} -> S_{i1+1,i2+1,i3+1}``.

The defining restriction equations are checked as exact polynomial
identities in generic variables ``x, x1, x2, b1, b2, ...``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .partitions import Partition, h_class, phi_shift
from .poly import Polynomial, TruncatedSeries, exact_divide, series_quotient
from .report import CheckResult, VerificationError, VerificationReport
from .schur import (
    Alphabet,
    AlphabetDifference,
    SchurExpansion,
    complete,
    eval_expansion,
    resultant,
    schur,
)

# (5 - 6z) / ((1 - z)(1 - 2z)(1 - 3z))
SEED_NUMERATOR = (5, -6)
SEED_DENOMINATOR = (1, -6, 11, -6)

X2 = Alphabet(["x1", "x2"])
D = Alphabet(["2*x1", "2*x2", "x1+x2"])

RESTRICTION_CHECKS = ("A0", "A1", "A2", "A3", "III22")


def taylor_seed(n: int) -> list[int]:
    """First ``n`` Taylor coefficients of the seed generating function."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_seed(n))


@lru_cache(maxsize=None)
def _seed(n: int) -> tuple[int, ...]:
    num = TruncatedSeries.of(SEED_NUMERATOR, n - 1)
    den = TruncatedSeries.of(SEED_DENOMINATOR, n - 1)
    return tuple(c.constant_value() for c in series_quotient(num, den, n - 1).coefficients)


def _in_staircase(i: int, j: int) -> bool:
    return i >= 2 and 0 <= j <= (i - 2) // 2


@lru_cache(maxsize=None)
def e_recursive(i: int, j: int) -> int:
    """``e_{i,j}``: seed in column 0, zeros above the staircase, Pascal rule elsewhere."""
    if i < 2 or j < 0:
        raise ValueError(f"e_{{i,j}} needs i >= 2, j >= 0; got ({i}, {j})")
    if not _in_staircase(i, j):
        return 0
    if j == 0:
        return _seed(i - 1)[i - 2]
    return e_recursive(i - 1, j - 1) + e_recursive(i - 1, j)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def e_closed(i: int, j: int) -> int:
    """Closed formula for ``e_{i,j}`` on the staircase support.

    Column ``j`` is the running sum of column ``j-1`` from row ``2j+1`` on,
    so the nested-sum count attached to ``s`` is the ballot number
    ``C(n, s) - C(n, s-2)`` with ``n = i - 2j + 2s - 3``.
    """
    if not _in_staircase(i, j):
        raise ValueError(f"({i}, {j}) is outside the staircase")
    total = (3 ** (i + 1) - 3 ** (2 * (j + 1))) - (2 ** (i + j + 2) - 2 ** (3 * (j + 1)))
    for s in range(1, j + 1):
        n = i - 2 * j + 2 * s - 3
        weight = 3 ** (2 * (j - s + 1)) - 2 ** (3 * (j - s + 1))
        total -= 2**s * weight * (_binom(n, s) - _binom(n, s - 2))
    q, rem = divmod(total, 2 ** (j + 1))
    if rem:
        raise ArithmeticError(f"closed formula not integral at ({i}, {j})")
    return q


@dataclass(frozen=True)
class CoefficientTable:
    """Rows ``i = 2 .. 2 + rows - 1`` of the matrix ``[e_{i,j}]``."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, rows: int) -> CoefficientTable:
        width = rows // 2 + 1
        return cls(tuple(tuple(e_recursive(i, j) for j in range(width)) for i in range(2, rows + 2)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 2][j] if j < len(self.rows[i - 2]) else 0

    def to_text(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        w = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(w) for c in row) for row in cells)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def f_part(r: int) -> SchurExpansion:
    if r < 1:
        raise ValueError("r must be >= 1")
    const23 = AlphabetDifference.of([2, 3])
    terms = []
    for j2 in range(r + 1):
        for j1 in range(j2 + 1):
            c = schur((j1, j2), const23).constant_value()
            terms.append((Partition((r - j2, r - j1, r + j1 + j2)), c))
    return SchurExpansion(terms)


def i_partition(i: int, j: int) -> Partition:
    if not _in_staircase(i, j):
        raise ValueError(f"I({i},{j}) lies above the staircase")
    return Partition((i + 1 + j, 2 * i - 1 - j))


def h_bar(r: int) -> SchurExpansion:
    if r < 2:
        raise ValueError("r must be >= 2")
    return SchurExpansion((i_partition(r, j), e_recursive(r, j)) for j in range((r - 2) // 2 + 1))


@lru_cache(maxsize=None)
def h_part2_recursive(r: int) -> SchurExpansion:
    if r < 2:
        return SchurExpansion()
    return h_bar(r) + h_part2_recursive(r - 1).map_partitions(phi_shift)


def h_part2_closed(r: int) -> SchurExpansion:
    terms = []
    for i in range(r - 1):
        for j in range((r - 2 - i) // 2 + 1):
            terms.append((Partition((i, r + j + 1, 2 * r - i - j - 1)), e_recursive(r - i, j)))
    return SchurExpansion(terms)


def h_part2(r: int) -> SchurExpansion:
    """The 2-part, computed both recursively and in closed form."""
    rec = h_part2_recursive(r)
    if rec != h_part2_closed(r):
        raise VerificationError(f"recursive and closed forms of H_{r} disagree")
    return rec


@lru_cache(maxsize=None)
def thom_a3(r: int) -> SchurExpansion:
    return f_part(r) + h_part2(r)


def h_decompose(T: SchurExpansion, r: int) -> dict[int, SchurExpansion]:
    groups: dict[int, list] = {}
    for I, c in T.items():
        groups.setdefault(h_class(I, r), []).append((I, c))
    return {h: SchurExpansion(v) for h, v in sorted(groups.items())}


# -- restriction equations -----------------------------------------------------


def generic_b(n: int) -> Alphabet:
    return Alphabet.generic("b", n)


def specialization(name: str, r: int) -> tuple[AlphabetDifference, Polynomial]:
    """Alphabet difference and expected value for one restriction equation."""
    B = generic_b(r - 1)
    x = Alphabet(["x"])
    if name == "A0":
        return AlphabetDifference(Alphabet(), B), Polynomial(0)
    if name in ("A1", "A2"):
        k = 2 if name == "A1" else 3
        return AlphabetDifference(x, B + Alphabet([f"{k}*x"])), Polynomial(0)
    if name == "A3":
        target = B + Alphabet(["4*x"])
        return AlphabetDifference(x, target), resultant(Alphabet(["x", "2*x", "3*x"]), target)
    if name == "III22":
        if r < 2:
            raise ValueError("the III_{2,2} equation needs r >= 2")
        return AlphabetDifference(X2, D + generic_b(r - 2)), Polynomial(0)
    raise KeyError(name)


def checks_for(r: int) -> tuple[str, ...]:
    return RESTRICTION_CHECKS if r >= 2 else RESTRICTION_CHECKS[:4]


def _residual(name: str, T: SchurExpansion, r: int) -> CheckResult:
    t0 = time.perf_counter()
    d, expected = specialization(name, r)
    res = eval_expansion(T, d) - expected
    return CheckResult(name, res, (time.perf_counter() - t0) * 1e3)


def verify_restriction(T: SchurExpansion, r: int, jobs: int = 1) -> VerificationReport:
    """Evaluate ``T`` at every restriction specialization for parameter ``r``.

    Failures are reported as nonzero residuals, never raised.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if T and T.weight != 3 * r:
        raise ValueError(f"expected a homogeneous expansion of weight {3 * r}")
    t0 = time.perf_counter()
    names = checks_for(r)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(names))) as pool:
            results = list(pool.map(_residual, names, [T] * len(names), [r] * len(names)))
    else:
        results = [_residual(n, T, r) for n in names]
    return VerificationReport(r, tuple(results), (time.perf_counter() - t0) * 1e3)


# -- the III_{2,2} equation split through the resultant ------------------------


def _b_letters(r: int, with_b: bool) -> Alphabet:
    # "B = 0" keeps r-2 letters equal to 0, so the resultant keeps its (x1 x2)^(r-2)
    return generic_b(r - 2) if with_b else Alphabet([0] * (r - 2))


def _divide_by_resultant(p: Polynomial, A: Alphabet, B: Alphabet) -> Polynomial:
    for a in A:
        for b in B:
            p = exact_divide(p, a.to_poly() - b.to_poly())
    return p


def x2_schur(*idx: int) -> Polynomial:
    """``S_idx(x1 + x2)`` for any integer index sequence."""
    return schur(idx, AlphabetDifference(X2, Alphabet()))


def v_sum(r: int, B: Alphabet) -> Polynomial:
    minus = AlphabetDifference(Alphabet(), D + B)
    acc = Polynomial(0)
    for i in range(r - 1):
        si = complete(i, minus)
        for j in range((r - 2 - i) // 2 + 1):
            acc = acc + e_recursive(r - i, j) * si * x2_schur(j, r - i - j - 2)
    return acc


def v_quotient(r: int, B: Alphabet) -> Polynomial:
    value = eval_expansion(h_part2(r), AlphabetDifference(X2, D + B))
    return _divide_by_resultant(value, X2, D + B)


def v_function(r: int, with_b: bool = True) -> Polynomial:
    """``H_r(X2 - D - B) / R(X2, D + B)``, cross-checked against its explicit sum."""
    if r < 2:
        raise ValueError("r must be >= 2")
    B = _b_letters(r, with_b)
    s = v_sum(r, B)
    if s != v_quotient(r, B):
        raise VerificationError(f"sum and quotient forms of V_{r} disagree")
    return s


def pv_closed_form(r: int) -> Polynomial:
    """``3^(r-2) (3 S_{r-2}(X2) - 2 S_{1,r-3}(X2))``."""
    return 3 ** (r - 2) * (3 * x2_schur(r - 2) - 2 * x2_schur(1, r - 3))


def u_function(r: int, with_b: bool = False) -> Polynomial:
    """``F_r(X2 - D - B) / R(X2, D + B)``; with ``B = 0`` also checks its closed form."""
    if r < 2:
        raise ValueError("r must be >= 2")
    B = _b_letters(r, with_b)
    value = eval_expansion(f_part(r), AlphabetDifference(X2, D + B))
    q = _divide_by_resultant(value, X2, D + B)
    if not with_b and q != -pv_closed_form(r):
        raise VerificationError(f"U_{r}(X2; 0) does not match its closed form")
    return q


def ilo_residual(r: int) -> Polynomial:
    """``F_r(X2 - D)`` minus its factored form; zero when the identity holds."""
    lhs = eval_expansion(f_part(r), AlphabetDifference(X2, D))
    x1x2 = Polynomial.var("x1") * Polynomial.var("x2")
    rhs = -(3 ** (r - 2)) * resultant(X2, D) * x1x2 ** (r - 2) * (3 * x2_schur(r - 2) - 2 * x2_schur(1, r - 3))
    return lhs - rhs


def _split_residual(r: int, fn) -> Polynomial:
    """``fn(r; B) - sum_i fn(r-i; 0) S_i(-B)`` for generic ``B = b1..b_{r-2}``."""
    B = generic_b(r - 2)
    neg_b = AlphabetDifference(Alphabet(), B)
    rhs = Polynomial(0)
    for i in range(r - 1):
        rhs = rhs + fn(r - i, False) * complete(i, neg_b)
    return fn(r, True) - rhs


def verify_structure(r: int) -> VerificationReport:
    """Auxiliary identities behind the III_{2,2} equation, for ``r >= 2``."""
    if r < 2:
        raise ValueError("r must be >= 2")
    t0 = time.perf_counter()
    checks: list[CheckResult] = []

    def run(name: str, thunk) -> None:
        t = time.perf_counter()
        try:
            res = thunk()
        except VerificationError:
            res = Polynomial.var("failed")
        checks.append(CheckResult(name, res, (time.perf_counter() - t) * 1e3))

    H = h_part2(r)
    for name in ("A0", "A1", "A2", "A3"):
        d, _ = specialization(name, r)
        run(f"H-null-{name}", lambda d=d: eval_expansion(H, d))
    run("V-closed", lambda: v_function(r, False) - pv_closed_form(r))
    run("U-closed", lambda: u_function(r, False) + pv_closed_form(r))
    run("ilo", lambda: ilo_residual(r))
    run("U+V", lambda: u_function(r, True) + v_function(r, True))
    run("V-split", lambda: _split_residual(r, v_function))
    run("U-split", lambda: _split_residual(r, u_function))
    return VerificationReport(r, tuple(checks), (time.perf_counter() - t0) * 1e3)
