"""Schur functions of alphabet differences.

An alphabet is a finite multiset of letters, each letter an integer linear
form.  A letter such as ``x1+x2`` is a single letter whose value is that sum
(a "boxed" letter), which is different from the two letters ``x1, x2``.

``S_i(A - B)`` is the coefficient of ``z^i`` in ``prod_b (1 - b z) / prod_a (1 - a z)``
and ``S_I(A - B)`` is the determinant ``|S_{i_p + p - q}(A - B)|`` for
``I = (i_1 <= ... <= i_s)``.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from .partitions import Partition
from .poly import Polynomial, TruncatedSeries, exact_divide, series_quotient

__all__ = [
    "LinearForm",
    "Alphabet",
    "AlphabetDifference",
    "SchurExpansion",
    "complete",
    "complete_series",
    "schur",
    "determinant",
    "resultant",
    "eval_expansion",
    "pi_symmetrizer",
    "to_chern_monomials",
    "from_chern_monomials",
]

Index = Union[Partition, Sequence[int]]


@dataclass(frozen=True, order=True)
class LinearForm:
    """``sum(c_v * v) + constant`` with integer coefficients."""

    coefficients: tuple[tuple[str, int], ...] = ()
    constant: int = 0

    def __post_init__(self):
        merged: dict[str, int] = {}
        for v, c in self.coefficients:
            merged[v] = merged.get(v, 0) + int(c)
        object.__setattr__(self, "coefficients", tuple(sorted((v, c) for v, c in merged.items() if c)))

    @classmethod
    def var(cls, name: str, coeff: int = 1) -> LinearForm:
        return cls(((name, coeff),))

    @classmethod
    def const(cls, c: int) -> LinearForm:
        return cls((), int(c))

    @classmethod
    def parse(cls, text: str) -> LinearForm:
        """Parse ``"2*x1"``, ``"2x1"``, ``"x1+x2"``, ``"-b3"``, ``"3"``..."""
        s = text.replace(" ", "").strip("[]")
        if not s:
            raise ValueError("empty linear form")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse linear form {text!r}")
        coeffs: list[tuple[str, int]] = []
        const = 0
        for t in terms:
            m = re.fullmatch(r"([+-]?)(\d*)\*?([A-Za-z_][A-Za-z_0-9]*)?", t)
            if not m or not (m.group(2) or m.group(3)) or (t.endswith("*")):
                raise ValueError(f"cannot parse linear form {text!r}")
            sign, num, name = m.groups()
            c = (-1 if sign == "-" else 1) * (int(num) if num else 1)
            if name:
                coeffs.append((name, c))
            else:
                const += c
        return cls(tuple(coeffs), const)

    def to_poly(self) -> Polynomial:
        p = Polynomial(self.constant)
        for v, c in self.coefficients:
            p = p + c * Polynomial.var(v)
        return p

    def __neg__(self) -> LinearForm:
        return LinearForm(tuple((v, -c) for v, c in self.coefficients), -self.constant)

    def __str__(self) -> str:
        return str(self.to_poly())


def _letter(x: LinearForm | str | int) -> LinearForm:
    if isinstance(x, LinearForm):
        return x
    if isinstance(x, int):
        return LinearForm.const(x)
    return LinearForm.parse(x)


@dataclass(frozen=True)
class Alphabet:
    """A finite multiset of letters, identified with the sum of its letters."""

    letters: tuple[LinearForm, ...] = ()

    def __init__(self, letters: Iterable[LinearForm | str | int] = ()):
        object.__setattr__(self, "letters", tuple(sorted(_letter(x) for x in letters)))

    @classmethod
    def parse(cls, text: str) -> Alphabet:
        """Comma separated letters: ``"x1, x2, 2*x1, x1+x2"``."""
        text = text.strip()
        if not text or text in ("0", "{}", "∅"):
            return cls()
        return cls(t for t in text.split(",") if t.strip())

    @classmethod
    def generic(cls, prefix: str, n: int, start: int = 1) -> Alphabet:
        """Fresh letters ``prefix1 .. prefixn``."""
        return cls(LinearForm.var(f"{prefix}{k}") for k in range(start, start + n))

    def __add__(self, other: Alphabet) -> Alphabet:
        return Alphabet(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[LinearForm]:
        return iter(self.letters)

    def negated(self) -> Alphabet:
        return Alphabet(-a for a in self.letters)

    def __str__(self) -> str:
        return "{" + ", ".join(str(a) for a in self.letters) + "}"


@dataclass(frozen=True)
class AlphabetDifference:
    plus: Alphabet = Alphabet()
    minus: Alphabet = Alphabet()

    @classmethod
    def of(cls, plus: Alphabet | Iterable = (), minus: Alphabet | Iterable = ()) -> AlphabetDifference:
        plus = plus if isinstance(plus, Alphabet) else Alphabet(plus)
        minus = minus if isinstance(minus, Alphabet) else Alphabet(minus)
        return cls(plus, minus)

    def swapped(self) -> AlphabetDifference:
        return AlphabetDifference(self.minus, self.plus)

    def __str__(self) -> str:
        left = " + ".join(f"[{a}]" for a in self.plus) or "0"
        right = "".join(f" - [{b}]" for b in self.minus)
        return left + right


def _linear_series(letters: Iterable[LinearForm], sign: int, order: int) -> TruncatedSeries:
    """Coefficients of ``prod (1 + sign * a z)`` truncated at ``order``."""
    coeffs = [Polynomial(1)]
    for a in letters:
        ap = sign * a.to_poly()
        nxt = coeffs + [Polynomial(0)]
        for k in range(len(coeffs), 0, -1):
            nxt[k] = nxt[k] + ap * coeffs[k - 1]
        coeffs = nxt[: order + 1]
    return TruncatedSeries.of(coeffs, order)


@lru_cache(maxsize=4096)
def complete_series(d: AlphabetDifference, order: int) -> tuple[Polynomial, ...]:
    """``(S_0(d), ..., S_order(d))``."""
    num = _linear_series(d.minus, -1, order)
    den = _linear_series(d.plus, -1, order)
    return series_quotient(num, den, order).coefficients


def complete(i: int, d: AlphabetDifference) -> Polynomial:
    if i < 0:
        return Polynomial(0)
    return complete_series(d, i)[i]


def determinant(entry: Callable[[int, int], Polynomial], n: int, memo: dict | None = None,
                key: Callable[[int, int], object] | None = None) -> Polynomial:
    """Determinant of the ``n x n`` matrix ``entry(p, q)`` (0-based).

    Laplace expansion along the top remaining row with memoized minors.
    ``key(row, colmask)`` may name minors so that ``memo`` can be shared
    between matrices with identical trailing rows.
    """
    if memo is None:
        memo = {}
    if key is None:
        key = lambda row, mask: (row, mask)  # noqa: E731

    def minor(row: int, mask: int) -> Polynomial:
        if row == n:
            return Polynomial(1)
        k = key(row, mask)
        hit = memo.get(k)
        if hit is not None:
            return hit
        acc = Polynomial(0)
        sign = 1
        for q in range(n):
            if not mask >> q & 1:
                continue
            a = entry(row, q)
            if a:
                sub = minor(row + 1, mask & ~(1 << q))
                if sub:
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[k] = acc
        return acc

    return minor(0, (1 << n) - 1)


def _indices(I: Index) -> tuple[int, ...]:
    return tuple(I.parts) if isinstance(I, Partition) else tuple(int(i) for i in I)


def _jacobi_trudi(idx: tuple[int, ...], h: Callable[[int], Polynomial], memo: dict | None = None) -> Polynomial:
    s = len(idx)
    if s == 0:
        return Polynomial(1)
    shifted = tuple(i + p for p, i in enumerate(idx))
    if memo is None:
        return determinant(lambda p, q: h(shifted[p] - q), s)
    # a minor over rows p.. with column set m depends only on these values
    return determinant(lambda p, q: h(shifted[p] - q), s, memo,
                       key=lambda p, m: (shifted[p:], m, s))


def _series_h(series: Sequence[Polynomial]) -> Callable[[int], Polynomial]:
    zero = Polynomial(0)
    n = len(series)

    def h(k: int) -> Polynomial:
        return series[k] if 0 <= k < n else zero

    return h


def schur(I: Index, d: AlphabetDifference) -> Polynomial:
    """``S_I(A - B)``; ``I`` may be any integer sequence (determinant convention)."""
    idx = _indices(I)
    if not idx:
        return Polynomial(1)
    top = max(i + p for p, i in enumerate(idx))
    return _jacobi_trudi(idx, _series_h(complete_series(d, max(top, 0))))


def resultant(A: Alphabet, B: Alphabet) -> Polynomial:
    out = Polynomial(1)
    for a in A:
        ap = a.to_poly()
        for b in B:
            out = out * (ap - b.to_poly())
    return out


class SchurExpansion(Mapping):
    """Finitely supported ``Partition -> int``, read as ``sum alpha_I S_I``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[Index, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for I, c in items:
            I = I if isinstance(I, Partition) else Partition(I)
            acc[I] = acc.get(I, 0) + int(c)
        self._terms = {I: acc[I] for I in sorted(acc) if acc[I]}

    def __getitem__(self, I: Index) -> int:
        I = I if isinstance(I, Partition) else Partition(I)
        return self._terms.get(I, 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, I: object) -> bool:
        return I in self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        return SchurExpansion([*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: SchurExpansion) -> SchurExpansion:
        return self + (-other)

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion({I: -c for I, c in self._terms.items()})

    def __mul__(self, k: int) -> SchurExpansion:
        return SchurExpansion({I: c * k for I, c in self._terms.items()})

    __rmul__ = __mul__

    def map_partitions(self, f: Callable[[Partition], Partition]) -> SchurExpansion:
        return SchurExpansion((f(I), c) for I, c in self._terms.items())

    @property
    def weight(self) -> int | None:
        """Common weight of all terms, or None if empty or inhomogeneous."""
        ws = {I.weight for I in self._terms}
        return ws.pop() if len(ws) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({I.weight for I in self._terms}) <= 1

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "terms": [{"partition": I.to_json(), "coeff": c} for I, c in self._terms.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, doc: dict | str) -> SchurExpansion:
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls((Partition(t["partition"]), t["coeff"]) for t in doc["terms"])

    def _render(self, sep: str, mul: str) -> str:
        if not self._terms:
            return "0"
        out = []
        for I, c in self._terms.items():
            mag = abs(c)
            if not I.parts:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}{mul}") + f"S_{{{I.subscript()}}}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f"{sep}{'-' if c < 0 else '+'}{sep}{body}")
        return "".join(out)

    def to_text(self) -> str:
        return self._render(" ", " ")

    def to_latex(self) -> str:
        return self._render("", "")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"SchurExpansion({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str) -> SchurExpansion:
        """Read displays such as ``"5S_{144}+24S_{45}"`` or ``"S_{1,7,10} - 2 S_6"``.

        Subscripts without commas are read one digit per part.
        """
        s = text.replace(" ", "").replace("\\plus", "+")
        if s in ("", "0"):
            return cls()
        pat = re.compile(r"([+-]?)(\d*)(?:S_(?:\{([\d,]*)\}|(\d)))?")
        terms: list[tuple[Partition, int]] = []
        pos = 0
        while pos < len(s):
            m = pat.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse Schur expansion at {s[pos:]!r}")
            sign, num, braced, single = m.groups()
            if braced is None and single is None and not num:
                raise ValueError(f"cannot parse Schur expansion at {s[pos:]!r}")
            c = (-1 if sign == "-" else 1) * (int(num) if num else 1)
            sub = braced if braced is not None else (single or "")
            if "," in sub:
                parts = [int(t) for t in sub.split(",")]
            else:
                parts = [int(ch) for ch in sub]
            terms.append((Partition(parts), c))
            pos = m.end()
        return cls(terms)


def eval_expansion(T: SchurExpansion, d: AlphabetDifference) -> Polynomial:
    """``sum alpha_I S_I(d)``."""
    if not T:
        return Polynomial(0)
    top = max((I.parts[-1] + len(I) - 1 for I in T if I.parts), default=0)
    h = _series_h(complete_series(d, top))
    memo: dict = {}
    acc = Polynomial(0)
    for I, c in T.items():
        v = _jacobi_trudi(I.parts, h, memo)
        if v:
            acc = acc + c * v
    return acc


def pi_symmetrizer(p: Polynomial, x1: str = "x1", x2: str = "x2") -> Polynomial:
    """``(x1 f(x1,x2) - x2 f(x2,x1)) / (x1 - x2)``."""
    a, b = Polynomial.var(x1), Polynomial.var(x2)
    swapped = Polynomial(p).subs({x1: b, x2: a})
    return exact_divide(a * p - b * swapped, a - b)


def _chern_h(prefix: str) -> Callable[[int], Polynomial]:
    def h(k: int) -> Polynomial:
        if k < 0:
            return Polynomial(0)
        if k == 0:
            return Polynomial(1)
        return Polynomial.var(f"{prefix}{k}")

    return h


def to_chern_monomials(T: SchurExpansion, prefix: str = "c") -> Polynomial:
    """Rewrite ``sum alpha_I S_I`` as a polynomial in ``c_i`` (standing for ``S_i``)."""
    h = _chern_h(prefix)
    acc = Polynomial(0)
    for I, c in T.items():
        acc = acc + c * _jacobi_trudi(I.parts, h)
    return acc


def from_chern_monomials(p: Polynomial, prefix: str = "c") -> SchurExpansion:
    """Inverse of :func:`to_chern_monomials`.

    ``S_lam`` expands as ``c_lam`` plus products ``c_mu`` with ``mu``
    strictly dominating ``lam``, so the lex-smallest monomial left always
    names the next Schur function to peel off.
    """
    h = _chern_h(prefix)
    pat = re.compile(re.escape(prefix) + r"([1-9]\d*)")
    out: dict[Partition, int] = {}
    rest = Polynomial(p)
    while rest:
        best = None
        for mono, c in rest.items():
            parts: list[int] = []
            for v, e in mono:
                m = pat.fullmatch(v)
                if not m:
                    raise ValueError(f"{v!r} is not a {prefix}-variable")
                parts += [int(m.group(1))] * e
            lam = tuple(sorted(parts, reverse=True))
            if best is None or lam < best[0]:
                best = (lam, c)
        lam, c = best
        I = Partition.from_decreasing(lam)
        out[I] = out.get(I, 0) + c
        rest = rest - c * _jacobi_trudi(I.parts, h)
    return SchurExpansion(out)
