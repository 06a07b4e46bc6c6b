import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from mahonian.filling import Filling
from mahonian.poly import (
    BudgetExceeded,
    ContentPoly,
    GenPoly,
    class_poly,
    class_size,
    enumerate_row_class,
    gaussian_binomial,
    invq_product,
    macdonald_poly,
    t_multinomial,
)

q = GenPoly.monomial(q=1)
t = GenPoly.monomial(t=1)
u = GenPoly.monomial(u=1)


def test_canonical_text():
    p = GenPoly.monomial(2, 3) + 2 * GenPoly.monomial(2, 1) + GenPoly.monomial(2)
    assert str(p) == "q^2*t^3 + 2*q^2*t + q^2"
    assert str(GenPoly()) == "0"
    assert str(GenPoly.constant(-3) + t) == "t - 3"
    assert str(q * t * u) == "q*t*u"


def test_arithmetic():
    assert (q + t) * (q - t) == q * q - t * t
    assert (t + 1) * 0 == GenPoly() == 0
    assert (q + t).swap("q", "t") == q + t
    assert (q * t + u).substitute(q=1) == t + u
    assert (q * t + u).substitute(u="t") == q * t + t
    assert (t * t + 2 * t + 1).coefficients("t") == [1, 2, 1]
    with pytest.raises(ValueError):
        (q + t).coefficients("t")


def test_t_multinomials():
    assert t_multinomial([2, 1]) == t * t + t + 1
    assert t_multinomial([1, 1]) == t + 1
    assert str(t_multinomial([2, 2])) == "t^4 + t^3 + 2*t^2 + t + 1"
    assert gaussian_binomial(4, 0) == 1 and gaussian_binomial(2, 3) == 0


def _inversion_oracle(mults):
    word = [v for v, m in enumerate(mults) for _ in range(m)]
    counts = Counter()
    for perm in set(itertools.permutations(word)):
        counts[(0, sum(a > b for a, b in itertools.combinations(perm, 2)), 0)] += 1
    return GenPoly.from_counter(counts)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_t_multinomial_counts_inversions(mults):
    assert t_multinomial(mults) == _inversion_oracle(mults)


def test_enumerate_row_class(asymmetric_sigma):
    members = list(enumerate_row_class(asymmetric_sigma))
    assert [f.rows[1] for f in members] == sorted([(4, 1, 2), (4, 2, 1), (1, 2, 4), (1, 4, 2), (2, 4, 1), (2, 1, 4)])
    assert len({f.rows for f in members}) == 6 == class_size(asymmetric_sigma)
    assert list(enumerate_row_class(Filling(((2, 2), (1, 1))))) == [Filling(((2, 2), (1, 1)))]
    assert len(list(enumerate_row_class(Filling(((1, 1, 2),))))) == 3


def test_class_size_matches_multinomial_at_one():
    f = Filling(((1, 1, 2, 3), (2, 2, 1)))
    assert class_size(f) == sum(c for _, c in invq_product(f))


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_row_class(Filling(((1, 2, 3, 4, 5),)), budget=100))
    with pytest.raises(BudgetExceeded):
        macdonald_poly((3, 3), 3, budget=100)


def test_asymmetric_class_polynomials(asymmetric_sigma):
    expected = q * q * (1 + 2 * t + 2 * t * t + t * t * t)
    assert class_poly(asymmetric_sigma, {"maj": "q", "inv": "t"}) == expected
    assert class_poly(asymmetric_sigma, {"maj": "q", "quinv": "t"}) == expected
    triple = class_poly(asymmetric_sigma, {"maj": "q", "inv": "t", "quinv": "u"})
    assert triple != triple.swap("t", "u")


def test_macdonald_two_cells():
    p = macdonald_poly((1, 1), 2)
    assert p[(1, 1)] == q + 1 and p[(2, 0)] == 1 and p[(0, 2)] == 1
    assert str(p) == "(2,0): 1\n(1,1): q + 1\n(0,2): 1"
    assert p.is_symmetric()
    assert macdonald_poly((1, 1), 2, "quinv") == p


def test_content_poly_permute():
    p = ContentPoly(2, {(1, 0): t, (0, 1): q})
    assert p.permute([1, 0])[(1, 0)] == q
    assert not p.is_symmetric()
