"""Pascal staircases and the functions W(n, A) built on them.

A staircase ``P = [p_{s,t}]`` (1-based) has an arbitrary first column, is
zero whenever ``t > (s+1)//2``, and otherwise obeys
``p_{s+1,t} = p_{s,t-1} + p_{s,t}``.  Entries are polynomials, so a
symbolic seed such as ``(1, y, y^2, ...)`` needs no special treatment.
"""

from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass

from .poly import Polynomial, PolyLike, TruncatedSeries, series_quotient
from .report import CheckResult, VerificationReport
from .schur import Alphabet, AlphabetDifference, complete
from .thom import D, SEED_DENOMINATOR, SEED_NUMERATOR, e_recursive, pv_closed_form, v_function, x2_schur

__all__ = [
    "Seed",
    "StaircaseMatrix",
    "build_staircase",
    "w_function",
    "verify_lemma",
    "verify_corollary",
    "verify_w_display",
    "verify_appendix_application",
    "BOXED_X1_PLUS_X2",
    "seed_staircase",
    "table_mismatches",
]

BOXED_X1_PLUS_X2 = Alphabet(["x1+x2"])
_Y = Polynomial.var("y")


@dataclass(frozen=True)
class Seed:
    """First column of a staircase: explicit entries or a rational generating function."""

    entries_: tuple[Polynomial, ...] | None = None
    numerator: tuple[Polynomial, ...] | None = None
    denominator: tuple[Polynomial, ...] | None = None

    @classmethod
    def explicit(cls, entries: Sequence[PolyLike]) -> Seed:
        return cls(entries_=tuple(Polynomial(e) for e in entries))

    @classmethod
    def rational(cls, numerator: Sequence[PolyLike], denominator: Sequence[PolyLike]) -> Seed:
        den = tuple(Polynomial(c) for c in denominator)
        if not den or den[0] != 1:
            raise ValueError("denominator constant term must be 1")
        return cls(numerator=tuple(Polynomial(c) for c in numerator), denominator=den)

    @classmethod
    def geometric(cls, y: PolyLike = _Y) -> Seed:
        """``1 / (1 - y z)``: first column ``1, y, y^2, ...``."""
        return cls.rational((1,), (1, -Polynomial(y)))

    @classmethod
    def symbolic(cls, n: int, prefix: str = "v") -> Seed:
        return cls.explicit([Polynomial.var(f"{prefix}{k}") for k in range(1, n + 1)])

    def entries(self, n: int) -> list[Polynomial]:
        if self.entries_ is not None:
            if len(self.entries_) < n:
                raise ValueError(f"seed has {len(self.entries_)} entries, {n} needed")
            return list(self.entries_[:n])
        num = TruncatedSeries.of(self.numerator, n - 1)
        den = TruncatedSeries.of(self.denominator, n - 1)
        return list(series_quotient(num, den, n - 1).coefficients)


def _width(s: int) -> int:
    return (s + 1) // 2


@dataclass(frozen=True)
class StaircaseMatrix:
    rows: tuple[tuple[Polynomial, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return _width(len(self.rows))

    def entry(self, s: int, t: int) -> Polynomial:
        """``p_{s,t}``, 1-based; zero outside the stored staircase."""
        if s < 1 or t < 1 or s > len(self.rows) or t > len(self.rows[s - 1]):
            return Polynomial(0)
        return self.rows[s - 1][t - 1]

    def consistent(self) -> bool:
        """Zero pattern and Pascal rule hold at every stored position."""
        for s in range(1, self.n_rows + 1):
            for t in range(1, self.n_cols + 2):
                p = self.entry(s, t)
                if t > _width(s):
                    if p:
                        return False
                elif t > 1 and p != self.entry(s - 1, t - 1) + self.entry(s - 1, t):
                    return False
        return True

    def to_json(self) -> list[list[int | str]]:
        def cell(p: Polynomial) -> int | str:
            return p.constant_value() if p.is_constant() else str(p)

        return [[cell(self.entry(s, t)) for t in range(1, self.n_cols + 1)] for s in range(1, self.n_rows + 1)]

    def to_text(self) -> str:
        cells = [[str(self.entry(s, t)) for t in range(1, self.n_cols + 1)] for s in range(1, self.n_rows + 1)]
        widths = [max(len(row[t]) for row in cells) for t in range(self.n_cols)]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


def build_staircase(seed: Seed, rows: int) -> StaircaseMatrix:
    if rows < 1:
        raise ValueError("rows must be >= 1")
    first = seed.entries(rows)
    out: list[list[Polynomial]] = []
    for s in range(1, rows + 1):
        row = [first[s - 1]]
        for t in range(2, _width(s) + 1):
            prev = out[s - 2]
            left = prev[t - 2]
            up = prev[t - 1] if t - 1 < len(prev) else Polynomial(0)
            row.append(left + up)
        out.append(row)
    return StaircaseMatrix(tuple(tuple(r) for r in out))


def w_function(n: int, A: Alphabet, P: StaircaseMatrix) -> Polynomial:
    """``sum_{i,j} p_{n+1-i, j+1} S_i(-A) S_{j, n-i-j}(x1 + x2)`` over the staircase support."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if P.n_rows < n + 1:
        raise ValueError(f"staircase needs at least {n + 1} rows")
    neg_a = AlphabetDifference(Alphabet(), A)
    acc = Polynomial(0)
    for i in range(n + 1):
        si = complete(i, neg_a)
        if not si:
            continue
        for j in range((n - i) // 2 + 1):
            p = P.entry(n + 1 - i, j + 1)
            if p:
                acc = acc + p * si * x2_schur(j, n - i - j)
    return acc


def _geometric(rows: int) -> StaircaseMatrix:
    return build_staircase(Seed.geometric(), rows)


def _timed(name: str, thunk) -> CheckResult:
    t = time.perf_counter()
    res = thunk()
    return CheckResult(name, res, (time.perf_counter() - t) * 1e3)


def _lemma_rhs(n: int) -> Polynomial:
    if n == 0:
        return Polynomial(1)
    return (_Y - 1) * _Y ** (n - 1) * x2_schur(n)


def verify_lemma(n: int) -> VerificationReport:
    """``W(n, [x1+x2]) = (y-1) y^(n-1) S_n(X2)`` for the seed ``1/(1 - y z)``."""
    t0 = time.perf_counter()
    P = _geometric(n + 1)
    check = _timed("lemma", lambda: w_function(n, BOXED_X1_PLUS_X2, P) - _lemma_rhs(n))
    return VerificationReport(n, (check,), (time.perf_counter() - t0) * 1e3)


def verify_corollary(n: int, B: Alphabet) -> VerificationReport:
    """``W(n, [x1+x2] + B)`` against its expansion over ``S_k(-B)``.

    The closed side is ``sum_{k<n} (y-1) y^(n-1-k) S_{n-k}(X2) S_k(-B) + S_n(-B)``:
    the y-cleared form, with the ``k = n`` term taken from ``W(0) = 1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t0 = time.perf_counter()
    P = _geometric(n + 1)
    neg_b = AlphabetDifference(Alphabet(), B)
    lhs = w_function(n, BOXED_X1_PLUS_X2 + B, P)

    def via_w() -> Polynomial:
        acc = Polynomial(0)
        for k in range(n + 1):
            acc = acc + w_function(n - k, BOXED_X1_PLUS_X2, P) * complete(k, neg_b)
        return lhs - acc

    def closed() -> Polynomial:
        acc = complete(n, neg_b)
        for k in range(n):
            acc = acc + (_Y - 1) * _Y ** (n - 1 - k) * x2_schur(n - k) * complete(k, neg_b)
        return lhs - acc

    checks = (_timed("split", via_w), _timed("closed", closed))
    return VerificationReport(n, checks, (time.perf_counter() - t0) * 1e3)


def w_display(n: int) -> Polynomial:
    """The tabulated values of ``W(n, D)`` for the seed ``1/(1 - y z)``."""
    y = _Y
    if n == 0:
        return Polynomial(1)
    if n == 1:
        return (y - 3) * x2_schur(1)
    if n == 2:
        return (y - 1) * (y - 2) * x2_schur(2) - 2 * (y - 3) * x2_schur(1, 1)
    return y ** (n - 2) * (y - 1) * (y - 2) * x2_schur(n) - 2 * y ** (n - 3) * (y - 1) * (y - 2) * x2_schur(1, n - 1)


def verify_w_display(n: int) -> VerificationReport:
    t0 = time.perf_counter()
    P = _geometric(n + 1)
    check = _timed("W(n,D)", lambda: w_function(n, D, P) - w_display(n))
    return VerificationReport(n, (check,), (time.perf_counter() - t0) * 1e3)


def seed_staircase(rows: int) -> StaircaseMatrix:
    """Staircase whose first column is the Taylor series of the e-table seed."""
    return build_staircase(Seed.rational(SEED_NUMERATOR, SEED_DENOMINATOR), rows)


def verify_appendix_application(r: int) -> VerificationReport:
    """``W(r-2, D)`` on the seed staircase equals ``V_r(X2; 0)`` and its 3-power form."""
    if r < 2:
        raise ValueError("r must be >= 2")
    t0 = time.perf_counter()
    P = seed_staircase(r - 1)
    w = w_function(r - 2, D, P)
    checks = (
        _timed("W=V", lambda: w - v_function(r, with_b=False)),
        _timed("W=closed", lambda: w - pv_closed_form(r)),
    )
    return VerificationReport(r, checks, (time.perf_counter() - t0) * 1e3)


def table_mismatches(rows: int) -> list[tuple[int, int]]:
    """Positions where ``p_{i-1,j+1}`` (seed staircase) differs from ``e_{i,j}``, ``2 <= i <= rows+1``."""
    P = seed_staircase(rows)
    bad = []
    for i in range(2, rows + 2):
        for j in range(0, i):
            if P.entry(i - 1, j + 1) != e_recursive(i, j):
                bad.append((i, j))
    return bad
