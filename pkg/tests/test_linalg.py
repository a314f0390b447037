from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from bornforge.linalg import Matrix, kernel, signature_of_symmetric, solve_linear
from strategies import invertible, matrices


def test_solve_examples():
    assert solve_linear(Matrix.identity(3), Matrix.column([1, 2, 3])) == Matrix.column([1, 2, 3])
    assert solve_linear(Matrix([[1, 1], [1, 1]]), Matrix.column([1, 2])) is None
    assert solve_linear(Matrix([[2, 0], [0, 4]]), Matrix.column([1, 1])) == \
        Matrix.column([Fraction(1, 2), Fraction(1, 4)])


def test_kernel_examples():
    assert kernel(Matrix.identity(4)) == []
    assert len(kernel(Matrix.zeros(2))) == 2
    (v,) = kernel(Matrix([[1, 1]]))
    assert v[0, 0] == -v[1, 0] != 0


def test_signature_examples():
    assert signature_of_symmetric(Matrix.identity(4)).as_tuple() == (4, 0, 0)
    hyperbolic = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    assert signature_of_symmetric(hyperbolic).as_tuple() == (2, 2, 0)
    h3 = Matrix([[1, 0, 0], [0, -1, 1], [0, 1, 0]])
    assert signature_of_symmetric(h3).as_tuple() == (2, 1, 0)


def test_inverse_and_det():
    m = Matrix([[2, 1], [7, 4]])
    assert m.det() == 1
    assert m @ m.inverse() == Matrix.identity(2)


@settings(max_examples=200, deadline=None)
@given(matrices(3, 4))
def test_kernel_is_annihilated(a):
    for v in kernel(a):
        assert (a @ v).is_zero()
    assert len(kernel(a)) + a.rank() == 4


rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 6))


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(matrices(n, n, rationals), matrices(n, 1, rationals))))
def test_solve_substitutes_back(system):
    a, b = system
    x = solve_linear(a, b)
    if x is None:
        assert Matrix.from_columns([*(a.col(j) for j in range(a.cols)), b]).rank() > a.rank()
    else:
        assert a @ x == b


@settings(max_examples=200, deadline=None)
@given(matrices(4), invertible(4))
def test_signature_congruence_invariant(a, p):
    s = a + a.T
    assert signature_of_symmetric(p.T @ s @ p) == signature_of_symmetric(s)
