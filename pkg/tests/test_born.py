from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bornforge.born import (
    BornStructureError,
    assemble_from_forms,
    assemble_from_hermitian,
    check_equivalence,
    check_integrable,
    check_table1,
    eigenspace_lagrangian_report,
    rational_circle_points,
    rotate_product_structure,
    rotation_sweep,
    standard_abelian,
    subalgebra_type,
)
from bornforge.catalog import entry
from bornforge.geometry import BilinearForm
from bornforge.linalg import Matrix
from bornforge.products import bicross, family_R3_heis3
from bornforge.tables import table2_structure
from strategies import transport, unitriangular

TABLE2 = ["rh3", "rr3,0", "r2r2", "r2'", "r4,-1,-1", "d4,1", "d4,2", "d4,1/2"]


def test_standard_abelian():
    born = standard_abelian(4)
    assert all(check_table1(born).values())
    assert check_integrable(born).verdict
    assert eigenspace_lagrangian_report(born)["g_signature"] == (2, 2, 0)


def test_forms_rh3():
    born = table2_structure("rh3")
    again = assemble_from_forms(born.algebra, born.g, born.h, born.omega)
    assert again.A == born.A and again.J == born.J


def test_kahler_metric_as_g_rejected():
    std = standard_abelian(4)
    with pytest.raises(BornStructureError) as err:
        assemble_from_forms(std.algebra, std.h, std.h, std.omega)
    assert err.value.identity == "A² ≠ Id"


@pytest.mark.parametrize("name", TABLE2)
def test_table2_rows(name):
    born = table2_structure(name)
    rel = check_table1(born)
    assert len(rel) == 18 and all(rel.values())
    report = check_integrable(born)
    assert report.verdict and report.parallel_verdict
    lag = eigenspace_lagrangian_report(born)
    assert all(v for v in lag.values() if isinstance(v, bool))


def test_d42_half_entries():
    data = entry("d4,2").born
    assert data.h.gram[0, 0] == Fraction(1, 2)
    assert data.J.col(0) == Matrix.column([0, 0, 0, Fraction(1, 2)])
    assemble_from_hermitian(data)


def test_r2prime_signature():
    lag = eigenspace_lagrangian_report(table2_structure("r2'"))
    assert lag["h_signature"] == (2, 2, 0)


def test_hermitian_errors():
    data = entry("rh3").born
    with pytest.raises(BornStructureError) as err:
        assemble_from_hermitian(replace(data, g_minus=data.g_plus))
    assert err.value.identity == "not complementary"
    with pytest.raises(BornStructureError) as err:
        assemble_from_hermitian(replace(data, J=Matrix.identity(4)))
    assert err.value.identity == "J² ≠ −Id"


def test_corrupted_omega_detected():
    born = table2_structure("rh3")
    gram = born.omega.gram.to_list()
    gram[0][3] += 1
    gram[3][0] -= 1
    bad = replace(born, omega=BilinearForm(Matrix(gram), "antisymmetric"))
    assert not all(check_table1(bad).values())


def test_nonclosed_omega():
    born = table2_structure("rh3")
    # e12 + e34 + e23 is not closed since d e3 = e12
    w = Matrix([[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]])
    report = check_integrable(replace(born, omega=BilinearForm(w, "antisymmetric")))
    assert not report.omega_closed and not report.verdict


def test_rotation_endpoints():
    born = table2_structure("rr3,0")
    same = rotate_product_structure(born, 1, 0)
    assert same.A == born.A
    swapped = rotate_product_structure(born, 0, 1)
    assert swapped.A == born.B


def test_rotation_makes_eigenspace_abelian():
    base = bicross(family_R3_heis3(1, 0)).born
    rotated = rotate_product_structure(base, Fraction(3, 5), Fraction(4, 5))
    lie = rotated.algebra
    assert subalgebra_type(lie, rotated.g_plus) == subalgebra_type(lie, rotated.g_minus) == "heis3"
    hits = rotation_sweep(rotated)
    assert any("abelian" in (tp, tm) for _, tp, tm, _ in hits)
    for _, _, _, r in hits:
        assert check_integrable(r).verdict


def test_equivalence():
    born = table2_structure("d4,1")
    assert check_equivalence(born, born, Matrix.identity(4))
    p = Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert check_equivalence(transport(born, p), born, p)
    scaled = replace(born, h=BilinearForm(born.h.gram.scale(2)))
    assert not check_equivalence(born, scaled, Matrix.identity(4))


@pytest.mark.parametrize("name", TABLE2)
def test_operator_identities(name):
    born = table2_structure(name)
    a, b, j = born.A, born.B, born.J
    for x, y in ((a, b), (a, j), (b, j)):
        assert (x @ y + y @ x).is_zero()
    assert a @ b @ j == Matrix.identity(4)


circle = st.sampled_from(rational_circle_points(25))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(TABLE2), circle)
def test_rotation_keeps_h(name, point):
    born = table2_structure(name)
    r = rotate_product_structure(born, *point)
    assert r.h == born.h and r.J == born.J
    assert r.A @ r.A == Matrix.identity(4)
    assert all(check_table1(r).values())


@st.composite
def random_structures(draw):
    born = table2_structure(draw(st.sampled_from(TABLE2)))
    if draw(st.booleans()):
        born = rotate_product_structure(born, *draw(circle))
    if draw(st.booleans()):
        # algebraic data unrelated to the bracket, usually not integrable
        flat = transport(standard_abelian(4), draw(unitriangular(4)))
        born = assemble_from_hermitian(replace(flat.hermitian(), algebra=born.algebra))
    return transport(born, draw(unitriangular(4)))


@settings(max_examples=500, deadline=None)
@given(random_structures())
def test_integrability_formulations_agree(born):
    report = check_integrable(born)
    assert report.formulations_agree
    assert all(check_table1(born).values())
