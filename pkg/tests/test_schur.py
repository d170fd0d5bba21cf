from __future__ import annotations

import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from schurthom.partitions import Partition, conjugate
from schurthom.poly import Polynomial
from schurthom.schur import (
    Alphabet,
    AlphabetDifference,
    LinearForm,
    SchurExpansion,
    complete,
    eval_expansion,
    from_chern_monomials,
    pi_symmetrizer,
    resultant,
    schur,
    to_chern_monomials,
)
from strategies import alphabets, partitions

x1, x2, x, y1 = (Polynomial.var(v) for v in ("x1", "x2", "x", "y1"))
EMPTY = Alphabet()


def diff(plus, minus=()):
    return AlphabetDifference(Alphabet(plus), Alphabet(minus))


# -- worked values --------------------------------------------------------------


def test_complete_examples():
    assert complete(2, diff(["x1", "x2"])) == x1**2 + x1 * x2 + x2**2
    assert complete(2, diff(["x1+x2"])) == (x1 + x2) ** 2
    assert complete(-1, diff(["x1"])) == 0
    assert complete(0, diff(["x1"], ["y1"])) == 1
    assert complete(1, diff(["x1", "x2"], ["y1"])) == x1 + x2 - y1


def test_schur_examples():
    d23 = AlphabetDifference.of([2, 3])
    assert schur((), d23) == 1
    assert schur((1, 2), d23) == 30
    assert schur((2, 2), d23) == 36
    g = diff(["x1", "x2", "x"], ["y1"])
    assert schur((1, 1), g) == complete(1, g) ** 2 - complete(2, g)


def test_determinant_convention_for_non_partitions():
    d = diff(["x1", "x2"])
    assert schur((1, 0), d) == 0
    assert schur((1, -1), d) == -1
    assert schur((0, 1), d) == x1 + x2


def test_resultant_examples():
    assert resultant(Alphabet(["x"]), Alphabet(["y1"])) == x - y1
    assert resultant(Alphabet(["x1", "x2"]), EMPTY) == 1
    got = resultant(Alphabet(["x", "2*x", "3*x"]), Alphabet(["y1", "4*x"]))
    assert got == -6 * x**3 * (3 * x - y1) * (2 * x - y1) * (x - y1)


def test_eval_expansion_examples():
    T1 = SchurExpansion.parse("S_{111}+5S_{12}+6S_3")
    assert eval_expansion(SchurExpansion({(): 1}), diff(["x"])) == 1
    assert eval_expansion(T1, diff(["x"], ["2*x"])) == 0
    assert eval_expansion(T1, diff(["x"], ["4*x"])) == -6 * x**3


def test_boxed_letter_is_one_letter():
    boxed = Alphabet(["x1+x2"])
    assert len(boxed) == 1
    assert LinearForm.parse("x1+x2").to_poly() == x1 + x2
    assert schur((1, 1), AlphabetDifference(boxed, EMPTY)) == 0


# -- property suites --------------------------------------------------------------

small_partitions = partitions(max_len=3, max_part=4, max_weight=6)


@given(small_partitions, alphabets(0, 2), alphabets(0, 1), alphabets(1, 1))
def test_cancellation(I, A, B, C):
    assume(len(A) + len(B) + len(C) <= 4)
    assert schur(I, AlphabetDifference(A + C, B + C)) == schur(I, AlphabetDifference(A, B))


@given(small_partitions, alphabets(0, 2), alphabets(0, 2))
def test_duality(I, A, B):
    sign = -1 if I.weight % 2 else 1
    assert schur(I, AlphabetDifference(A, B)) == sign * schur(conjugate(I), AlphabetDifference(B, A))


@given(
    st.integers(1, 2),
    st.integers(0, 2),
    st.lists(st.integers(0, 2), max_size=2),
    st.lists(st.integers(0, 3), max_size=2),
    st.data(),
)
def test_factorization(m, n, I_raw, J_raw, data):
    # I is padded to |A| parts; J is an arbitrary partition below the block I + n.
    A = Alphabet.generic("a", m)
    B = Alphabet.generic("b", n)
    I = sorted(I_raw + [0] * m)[-m:]
    J = sorted(J_raw)
    assume(not J or J[-1] <= I[0] + n)
    lhs = schur(tuple(J) + tuple(i + n for i in I), AlphabetDifference(A, B))
    rhs = schur(I, AlphabetDifference(A, EMPTY)) * resultant(A, B) * schur(J, AlphabetDifference(EMPTY, B))
    assert lhs == rhs


def _ssyt_schur(shape: tuple[int, ...], nvars: int) -> Polynomial:
    """Classical s_lambda(x_1..x_n) by enumerating semistandard tableaux."""
    xs = [Polynomial.var(f"t{k}") for k in range(1, nvars + 1)]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    acc = Polynomial(0)
    for filling in itertools.product(range(nvars), repeat=len(cells)):
        T = dict(zip(cells, filling))
        if any(c and T[r, c - 1] > v for (r, c), v in T.items()):
            continue
        if any(r and T[r - 1, c] >= v for (r, c), v in T.items()):
            continue
        term = Polynomial(1)
        for v in filling:
            term = term * xs[v]
        acc = acc + term
    return acc


@given(partitions(max_len=3, max_part=6, max_weight=6), st.integers(1, 3))
def test_tableau_oracle(I, n):
    A = Alphabet.generic("t", n)
    assert schur(I, AlphabetDifference(A, EMPTY)) == _ssyt_schur(I.decreasing(), n)


@pytest.mark.parametrize("i,j", [(i, j) for i in range(9) for j in range(9) if i + j <= 8])
def test_pi_identity(i, j):
    X2 = AlphabetDifference(Alphabet(["x1", "x2"]), EMPTY)
    assert pi_symmetrizer(x1**j * x2**i) == schur((i, j), X2)


def test_pi_examples():
    assert pi_symmetrizer(Polynomial(1)) == 1
    assert pi_symmetrizer(x1**2 * x2) == x1**2 * x2 + x1 * x2**2
    assert pi_symmetrizer(x1) == x1 + x2


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_vanishing_mechanism(r):
    # S_{i1,i2,i3}(x - B_{r-1} - y) = 0 once i2, i3 > r.
    d = AlphabetDifference(Alphabet(["x"]), Alphabet.generic("b", r - 1) + Alphabet(["y"]))
    for i3 in range(r + 1, r + 3):
        for i2 in range(r + 1, i3 + 1):
            for i1 in range(0, min(i2, 2) + 1):
                assert schur((i1, i2, i3), d) == 0


# -- Chern basis -------------------------------------------------------------------


def test_chern_examples():
    c1, c2 = Polynomial.var("c1"), Polynomial.var("c2")
    assert to_chern_monomials(SchurExpansion.parse("S_{11}+2S_2")) == c1**2 + c2
    assert to_chern_monomials(SchurExpansion.parse("S_5")) == Polynomial.var("c5")
    assert to_chern_monomials(SchurExpansion({(): 1})) == 1


expansions = st.dictionaries(
    partitions(max_len=3, max_part=3, max_weight=5), st.integers(-9, 9), max_size=4
).map(SchurExpansion)


@given(expansions, alphabets(0, 2), alphabets(0, 1))
def test_chern_round_trip(T, A, B):
    d = AlphabetDifference(A, B)
    p = to_chern_monomials(T)
    degree = max((I.weight for I in T), default=0)
    subs = {f"c{k}": complete(k, d) for k in range(1, degree + 1)}
    assert p.subs(subs) == eval_expansion(T, d)
    assert from_chern_monomials(p) == T


# -- expansion type -------------------------------------------------------------------


def test_expansion_text_forms():
    T = SchurExpansion.parse("S_{111}+5S_{12}+6S_3")
    assert T.to_text() == "S_{111} + 5 S_{12} + 6 S_{3}"
    assert T.to_latex() == "S_{111}+5S_{12}+6S_{3}"
    assert SchurExpansion.parse(T.to_text()) == T
    assert SchurExpansion.from_json(T.dumps()) == T
    assert T.weight == 3
    assert SchurExpansion.parse("S_{1,7,10} - 2S_{99}")[(1, 7, 10)] == 1


def test_expansion_drops_zeros():
    T = SchurExpansion.parse("S_3 - S_3 + S_{12}")
    assert list(T) == [Partition.of(1, 2)]
    assert (T - T) == SchurExpansion()
    assert SchurExpansion().weight is None
