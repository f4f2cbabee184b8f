from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hbx.errors import InvalidInput, NotInvertible
from hbx.fields import PrimeField, Q, invert_values, solve_values

F7 = PrimeField(7)
small = st.integers(-50, 50)
fracs = st.builds(Fraction, small, st.integers(1, 20))


@given(fracs, fracs)
def test_rational_scalars_match_fractions(a, b):
    assert (Q(a) + Q(b)).value == a + b
    assert (Q(a) * Q(b)).value == a * b
    assert (Q(a) - Q(b)).value == a - b


@given(st.integers(1, 6), small)
def test_prime_field_inverse(a, k):
    x = F7(a + 7 * k)
    assert x * x.inverse() == F7(1)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_distributes(a, b, c):
    x, y, z = F7(a), F7(b), F7(c)
    assert x * (y + z) == x * y + x * z


def test_parse_forms():
    assert Q.parse("3/4") == Fraction(3, 4)
    assert Q.parse(" -2 ") == -2
    assert F7.parse("1/2") == 4
    assert F7.parse(10) == 3


@pytest.mark.parametrize("bad", ["1/0", "x", "1/2/3", True, 1.5, None])
def test_parse_rejects(bad):
    with pytest.raises(InvalidInput):
        Q.parse(bad)


def test_fraction_without_image_in_fp():
    with pytest.raises(InvalidInput):
        F7.parse("1/7")


def test_nonprime_modulus():
    with pytest.raises(InvalidInput):
        PrimeField(6)


@given(st.lists(st.lists(fracs, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_is_exact(rows):
    try:
        inv = invert_values(Q, rows)
    except NotInvertible:
        a, b, c = rows
        det = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
               + a[2] * (b[0] * c[1] - b[1] * c[0]))
        assert det == 0
        return
    prod = [[sum(rows[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[int(i == j) for j in range(3)] for i in range(3)]


def test_solve_reports_inconsistency():
    assert solve_values(Q, [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]], [Fraction(1), Fraction(3)]) is None
    x = solve_values(F7, [[1, 2], [0, 1]], [3, 5])
    assert (x[0] + 2 * x[1]) % 7 == 3 and x[1] == 5
