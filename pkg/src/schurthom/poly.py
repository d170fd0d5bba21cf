"""Sparse multivariate polynomials with integer coefficients.

Variables are plain strings and are global by name: there is no ring
object, and two polynomials over different variable sets combine by
taking the union of their variables.

Internally each monomial is packed into one Python int, one fixed-width
field per variable, with the lexicographically first variable in the most
significant field.  Monomial multiplication is then integer addition and
integer order on packed keys is the lex monomial order, which is what the
long-division routine relies on.
"""

from __future__ import annotations

import heapq
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Union

__all__ = [
    "Polynomial",
    "NotDivisibleError",
    "TruncatedSeries",
    "poly_add",
    "poly_mul",
    "exact_divide",
    "series_quotient",
]

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK

Monomial = tuple[tuple[str, int], ...]
Scalar = int
PolyLike = Union["Polynomial", int]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _unpack(key: int, n: int) -> list[int]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        out[k] = key & _MASK
        key >>= _BITS
    return out


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > _MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        key = (key << _BITS) | e
    return key


def _relabel(terms: dict[int, int], old: tuple[str, ...], new: tuple[str, ...]) -> dict[int, int]:
    if old == new:
        return terms
    n_old, n_new = len(old), len(new)
    shifts = [_BITS * (n_new - 1 - new.index(v)) for v in old]
    out = {}
    for key, c in terms.items():
        exps = _unpack(key, n_old)
        nk = 0
        for e, s in zip(exps, shifts):
            nk |= e << s
        out[nk] = c
    return out


class Polynomial:
    """Immutable sparse polynomial over Z.

    Build values from :meth:`var`, :meth:`constant`, :meth:`from_terms` or
    :meth:`parse`, and combine them with the usual arithmetic operators.

    >>> x1, x2 = Polynomial.var("x1"), Polynomial.var("x2")
    >>> str((x1 + x2) ** 2)
    'x1^2 + 2*x1*x2 + x2^2'
    """

    __slots__ = ("_vars", "_terms", "_deg", "_hash")

    def __init__(self, value: PolyLike = 0):
        if isinstance(value, Polynomial):
            self._vars, self._terms = value._vars, value._terms
        elif isinstance(value, int):
            self._vars = ()
            self._terms = {0: value} if value else {}
        else:
            raise TypeError(f"cannot make a Polynomial from {type(value).__name__}")
        self._deg = None
        self._hash = None

    @classmethod
    def _make(cls, variables: tuple[str, ...], terms: dict[int, int]) -> Polynomial:
        p = object.__new__(cls)
        p._vars = variables
        p._terms = terms
        p._deg = None
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls(int(c))

    @classmethod
    def var(cls, name: str) -> Polynomial:
        if not name or not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise ValueError(f"bad variable name {name!r}")
        return cls._make((name,), {1: 1})

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]]) -> Polynomial:
        """Build from ``{((var, exp), ...): coeff}`` or an iterable of such pairs."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        items = [(dict(m), int(c)) for m, c in items]
        names = sorted({v for m, _ in items for v, e in m.items() if e})
        out: dict[int, int] = {}
        for m, c in items:
            if any(e < 0 for e in m.values()):
                raise ValueError("negative exponent")
            k = _pack(m.get(v, 0) for v in names)
            out[k] = out.get(k, 0) + c
        return cls._make(tuple(names), {k: c for k, c in out.items() if c})._trim()

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse the canonical text form, e.g. ``"x1^2 - 3*x1*y + 7"``.

        Juxtaposed coefficients (``2x1``) and spaces are also accepted.
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        term_re = re.compile(r"([+-]?)([^+-]+)")
        pos = 0
        result = cls(0)
        for m in term_re.finditer(s):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = sign
            mono: dict[str, int] = {}
            for factor in m.group(2).split("*"):
                fm = re.fullmatch(r"(\d*)([A-Za-z_][A-Za-z_0-9]*)?(?:\^(\d+))?", factor)
                if not factor or fm is None or (fm.group(3) and not fm.group(2)):
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                num, name, exp = fm.groups()
                if num:
                    coeff *= int(num)
                if name:
                    mono[name] = mono.get(name, 0) + (int(exp) if exp else 1)
            result = result + cls.from_terms({tuple(mono.items()): coeff})
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return result

    # -- inspection ---------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        """Sorted names of the variables that actually occur."""
        return self._vars

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> int:
        """The constant term (the whole value, for constant polynomials)."""
        return self._terms.get(0, 0)

    def items(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order (graded lex by variable name)."""
        n = len(self._vars)
        out = []
        for key in self._sorted_keys():
            exps = _unpack(key, n)
            out.append((tuple((v, e) for v, e in zip(self._vars, exps) if e), self._terms[key]))
        return out

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.items())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._deg is None:
            n = len(self._vars)
            self._deg = max((sum(_unpack(k, n)) for k in self._terms), default=-1)
        return self._deg

    def degree_in(self, name: str) -> int:
        if name not in self._vars:
            return 0 if self._terms else -1
        shift = _BITS * (len(self._vars) - 1 - self._vars.index(name))
        return max(((k >> shift) & _MASK for k in self._terms), default=-1)

    def coefficient(self, name: str, k: int) -> Polynomial:
        """Coefficient of ``name**k``, as a polynomial in the other variables."""
        if name not in self._vars:
            return self if k == 0 else Polynomial(0)
        shift = _BITS * (len(self._vars) - 1 - self._vars.index(name))
        out = {}
        for key, c in self._terms.items():
            if (key >> shift) & _MASK == k:
                key &= ~(_MASK << shift)
                out[key] = c
        return Polynomial._make(self._vars, out)._trim() if out else Polynomial(0)

    def _sorted_keys(self) -> list[int]:
        n = len(self._vars)
        return sorted(self._terms, key=lambda k: (sum(_unpack(k, n)), k), reverse=True)

    def _trim(self) -> Polynomial:
        """Drop variables that no longer occur."""
        n = len(self._vars)
        if not n:
            return self
        used = 0
        for k in self._terms:
            used |= k
        keep = tuple(v for i, v in enumerate(self._vars) if (used >> (_BITS * (n - 1 - i))) & _MASK)
        if keep == self._vars:
            return self
        out = {}
        idx = [self._vars.index(v) for v in keep]
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            out[_pack(exps[i] for i in idx)] = c
        return Polynomial._make(keep, out)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: PolyLike) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial(other)
        return NotImplemented

    def _aligned(self, other: Polynomial) -> tuple[tuple[str, ...], dict[int, int], dict[int, int]]:
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        names = tuple(sorted(set(self._vars) | set(other._vars)))
        return (
            names,
            _relabel(self._terms, self._vars, names),
            _relabel(other._terms, other._vars, names),
        )

    def __add__(self, other: PolyLike) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        names, a, b = self._aligned(other)
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return Polynomial._make(names, out)._trim()

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._make(self._vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: PolyLike) -> Polynomial:
        if isinstance(other, int):
            if not other:
                return Polynomial(0)
            return Polynomial._make(self._vars, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Polynomial(0)
        if self.degree() + other.degree() > _MAX_EXP:
            raise OverflowError("product degree exceeds the packed exponent range")
        names, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        b_items = list(b.items())
        for ka, ca in a.items():
            for kb, cb in b_items:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        # Z[x] is a domain, so every variable of either factor survives
        return Polynomial._make(names, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- substitution -------------------------------------------------------

    def subs(self, mapping: Mapping[str, PolyLike]) -> Polynomial:
        """Substitute polynomials (or ints) for variables, simultaneously."""
        hit = [v for v in self._vars if v in mapping]
        if not hit:
            return self
        n = len(self._vars)
        keep = [i for i, v in enumerate(self._vars) if v not in mapping]
        keep_vars = tuple(self._vars[i] for i in keep)
        targets = [(i, Polynomial(mapping[v])) for i, v in enumerate(self._vars) if v in mapping]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, p: Polynomial, e: int) -> Polynomial:
            if (i, e) not in powers:
                powers[(i, e)] = p**e
            return powers[(i, e)]

        # group by the substituted exponents so each product is formed once
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for key, c in self._terms.items():
            exps = _unpack(key, n)
            sub_key = tuple(exps[i] for i, _ in targets)
            rest = _pack(exps[i] for i in keep)
            g = groups.setdefault(sub_key, {})
            g[rest] = g.get(rest, 0) + c
        result = Polynomial(0)
        for sub_key, rest_terms in groups.items():
            factor = Polynomial(1)
            for (i, p), e in zip(targets, sub_key):
                if e:
                    factor = factor * power(i, p, e)
            rest_terms = {k: c for k, c in rest_terms.items() if c}
            if rest_terms:
                result = result + factor * Polynomial._make(keep_vars, rest_terms)._trim()
        return result

    def rename(self, mapping: Mapping[str, str]) -> Polynomial:
        """Rename (or permute) variables."""
        return self.subs({old: Polynomial.var(new) for old, new in mapping.items()})

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag), *factors])
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def poly_add(a: PolyLike, b: PolyLike) -> Polynomial:
    return Polynomial(a) + b


def poly_mul(a: PolyLike, b: PolyLike) -> Polynomial:
    return Polynomial(a) * b


def exact_divide(a: PolyLike, b: PolyLike) -> Polynomial:
    """Return ``q`` with ``a == b * q``.

    Multivariate long division by the lex-leading term of ``b``; raises
    :class:`NotDivisibleError` as soon as the remainder's leading term is not
    a multiple of it, which happens iff ``b`` does not divide ``a``.
    """
    a, b = Polynomial(a), Polynomial(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return Polynomial(0)
    names, ta, tb = a._aligned(b)
    n = len(names)
    lead = max(tb)
    lead_c = tb[lead]
    lead_exps = _unpack(lead, n)
    rest = [(k, c) for k, c in tb.items() if k != lead]
    rem = dict(ta)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, int] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        exps = _unpack(k, n)
        if any(e < f for e, f in zip(exps, lead_exps)) or c % lead_c:
            raise NotDivisibleError("remainder is nonzero")
        qk = k - lead
        qc = c // lead_c
        quot[qk] = qc
        for kb, cb in rest:
            kk = qk + kb
            old = rem.get(kk)
            v = (old or 0) - qc * cb
            if old is None:
                heapq.heappush(heap, -kk)
            if v:
                rem[kk] = v
            elif old is not None:
                del rem[kk]
    return Polynomial._make(names, quot)._trim()


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in an auxiliary variable, kept up to ``z**order``."""

    coefficients: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Polynomial(c) for c in self.coefficients))

    @classmethod
    def of(cls, coefficients: Sequence[PolyLike], order: int) -> TruncatedSeries:
        coeffs = [Polynomial(c) for c in coefficients[: order + 1]]
        coeffs += [Polynomial(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Polynomial:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Polynomial(0)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        out = []
        for i in range(n + 1):
            acc = Polynomial(0)
            for k in range(i + 1):
                a, b = self.coefficients[k], other.coefficients[i - k]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(tuple(out))


def series_quotient(numerator: TruncatedSeries, denominator: TruncatedSeries, order: int) -> TruncatedSeries:
    """Expand ``numerator / denominator`` up to ``z**order``.

    The denominator's constant term must be 1.
    """
    if denominator[0] != 1:
        raise ValueError("denominator constant term must be 1")
    den = [(k, denominator[k]) for k in range(1, denominator.order + 1) if denominator[k]]
    out: list[Polynomial] = []
    for i in range(order + 1):
        acc = numerator[i]
        for k, d in den:
            if k > i:
                break
            if out[i - k]:
                acc = acc - d * out[i - k]
        out.append(acc)
    return TruncatedSeries(tuple(out))
