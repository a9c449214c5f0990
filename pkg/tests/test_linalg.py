from fractions import Fraction

from hopfgal import linalg
from hopfgal.fields import QQ, PrimeField


def F(n, d=1):
    return Fraction(n, d)


def test_rref_and_rank():
    A = [[F(1), F(2)], [F(2), F(4)]]
    R, pivots = linalg.rref(QQ, A)
    assert pivots == [0]
    assert R[0] == [F(1), F(2)]
    assert R[1] == [F(0), F(0)]
    assert linalg.rank(QQ, A) == 1


def test_kernel_basis():
    A = [[F(1), F(2)]]
    basis = linalg.kernel_basis(QQ, A)
    assert basis == [[F(-2), F(1)]]
    # zero-row matrix: full kernel
    assert len(linalg.kernel_basis(QQ, [], ncols=3)) == 3


def test_solve_consistent_and_not():
    A = [[F(1), F(0)], [F(0), F(0)]]
    B = [[F(3)], [F(0)]]
    X = linalg.solve(QQ, A, B)
    assert X == [[F(3)], [F(0)]]
    B_bad = [[F(3)], [F(1)]]
    assert linalg.solve(QQ, A, B_bad) is None


def test_inverse():
    A = [[F(0), F(1)], [F(1), F(0)]]
    assert linalg.inverse(QQ, A) == A
    assert linalg.inverse(QQ, [[F(1), F(2)], [F(2), F(4)]]) is None


def test_prime_field_roundtrip():
    gf7 = PrimeField(7)
    a = gf7.from_int(3)
    assert a / a == gf7.one()
    assert gf7.parse("1/2") == gf7.from_int(4)
    A = [[gf7.from_int(2), gf7.from_int(1)],
         [gf7.from_int(1), gf7.from_int(1)]]
    I = linalg.mat_mul(gf7, A, linalg.inverse(gf7, A))
    assert I == linalg.identity(gf7, 2)
