import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bornforge.born import check_equivalence, check_integrable, standard_abelian
from bornforge.catalog import entry, fingerprint, identify
from bornforge.geometry import (
    BilinearForm,
    antisym_part,
    complex_structure,
    is_flat,
    levi_civita,
    sym_part,
)
from bornforge.lie import abelian, center, check_jacobi, heisenberg3
from bornforge.linalg import Matrix
from bornforge.products import (
    BicrossData,
    CompatibilityError,
    NotARepresentationError,
    PreconditionError,
    Representation,
    bicross,
    check_compatibility,
    check_integrability_conditions,
    conforming_phi_family,
    decompose_born,
    decomposition_frame,
    family_R3_heis3,
    family_R3_R3,
    flat_seed_construction,
    heis3_metric,
    hyperkahler_from_flat,
    hypersymplectic_from_flat,
    levi_civita_blocks,
    representation_obstruction,
    semidirect_born,
)
from bornforge.tables import table2_structure

Z3 = Matrix.zeros(3)


def zero_data(gp, gm, h=None):
    n = gp.dim
    h = h or BilinearForm(Matrix.identity(n))
    return BicrossData(gp, gm, h, Matrix.identity(n),
                       Representation.zero(gm, n), Representation.zero(gp, n))


def test_zero_representations_compatible():
    data = zero_data(heisenberg3(), heisenberg3(), heis3_metric(2))
    assert check_compatibility(data) == (True, None)
    prod = bicross(zero_data(abelian(3), abelian(3)))
    assert prod.algebra == abelian(6)
    assert check_integrable(prod.born).verdict


def test_representation_validation():
    with pytest.raises(NotARepresentationError):
        Representation(heisenberg3(), (Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
                                       Matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]]), Z3))


def test_incompatible_pair_has_witness():
    # φ acts on heis3 by a non-derivation
    gp, gm = heisenberg3(), abelian(3)
    phi = Representation(gm, (Matrix.diag([1, 0, 0]), Z3, Z3))
    data = BicrossData(gp, gm, BilinearForm(Matrix.identity(3)), Matrix.identity(3),
                       phi, Representation.zero(gp, 3))
    ok, witness = check_compatibility(data)
    assert not ok and witness[0] == "phi"
    with pytest.raises(CompatibilityError):
        bicross(data)


def test_family_compatibility_and_conditions():
    data = family_R3_heis3(1, 1)
    assert check_compatibility(data)[0]
    assert check_integrability_conditions(data).verdict


@pytest.mark.parametrize("x, y, name", [(-1, 0, "h4"), (1, 0, "h7"), (0, 0, "h10"), (2, 0, "h11"),
                                        (-2, 0, "h11"), (2, 1, "h13"), (0, 2, "h13")])
def test_family_identifications(x, y, name):
    prod = bicross(family_R3_heis3(x, y))
    assert identify(prod.algebra) == name
    assert check_integrable(prod.born).verdict


def test_r3_r3_instances():
    fam = family_R3_R3()
    for name, data in fam.items():
        prod = bicross(data)
        assert check_jacobi(prod.algebra)[0]
        assert identify(prod.algebra) == name
        assert check_integrable(prod.born).verdict


def test_flat_seed():
    data = flat_seed_construction(heisenberg3(), heis3_metric(3))
    assert check_integrability_conditions(data).verdict
    prod = bicross(data)
    assert identify(prod.algebra) == "h10"
    assert is_flat(prod.algebra, prod.born.h)
    trivial = flat_seed_construction(abelian(3), heis3_metric(2))
    assert trivial.phi.is_zero()
    with pytest.raises(PreconditionError, match="flat seed required"):
        flat_seed_construction(heisenberg3(), heis3_metric(1))


def test_semidirect_born():
    res = semidirect_born(abelian(3), abelian(3), heis3_metric(1), Matrix.identity(3), [Z3] * 3)
    assert res.verdict and res.product.algebra == abelian(6)
    imgs = family_R3_R3()["h9"].phi.images
    res = semidirect_born(abelian(3), abelian(3), BilinearForm(Matrix.diag([-1, 1, 1])),
                          Matrix.identity(3), imgs)
    assert identify(res.product.algebra) == "h9"


def test_blocks_match_koszul_examples():
    data = zero_data(heisenberg3(), abelian(3), heis3_metric(2))
    nab = levi_civita_blocks(data)
    assert nab.gamma == levi_civita(bicross(data).algebra, bicross(data).born.h).gamma
    data = family_R3_heis3(0, 0)
    prod = bicross(data)
    assert levi_civita_blocks(data).gamma == levi_civita(prod.algebra, prod.born.h).gamma


def test_decompose_rh3():
    born = table2_structure("rh3")
    data = decompose_born(born)
    assert data.g_plus.is_abelian() and data.g_minus.is_abelian()
    assert not (data.phi.is_zero() and data.rho.is_zero())
    back = bicross(data)
    assert check_equivalence(back.born, born, decomposition_frame(born))


def test_decompose_standard():
    data = decompose_born(standard_abelian(4))
    assert data.phi.is_zero() and data.rho.is_zero() and data.Q == Matrix.identity(2)


@pytest.mark.parametrize("name", ["h4", "h7", "h8", "h9", "h10", "h11", "h13", "R6"])
def test_round_trip_six_dim(name):
    born = entry(name).born_model()
    back = bicross(decompose_born(born))
    assert check_equivalence(back.born, born, decomposition_frame(born))


def test_hyperkahler_seed():
    i2 = complex_structure(2, {1: {2: 1}})
    res = hyperkahler_from_flat(abelian(2), BilinearForm(Matrix.identity(2)), i2)
    assert res.ok and res.product.algebra == abelian(4)
    i4 = complex_structure(4, {1: {2: 1}, 3: {4: 1}})
    res = hyperkahler_from_flat(abelian(4), BilinearForm(Matrix.diag([1, 1, -1, -1])), i4,
                                Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]]))
    assert res.ok, res.checks


def test_hypersymplectic_seed():
    res = hypersymplectic_from_flat(abelian(2), BilinearForm(Matrix([[0, 1], [1, 0]])),
                                    Matrix.diag([1, -1]))
    assert res.ok, res.checks
    with pytest.raises(PreconditionError):
        hypersymplectic_from_flat(abelian(2), BilinearForm(Matrix.identity(2)), Matrix.diag([1, -1]))


def test_lemma_heis3_metrics():
    assert is_flat(heisenberg3(), heis3_metric(3))
    assert not is_flat(heisenberg3(), heis3_metric(1))
    assert not is_flat(heisenberg3(), heis3_metric(2))


@pytest.mark.parametrize("which", [1, 2])
def test_obstruction_certified(which):
    cert = representation_obstruction(heisenberg3(), heis3_metric(which))
    assert cert.n_params == 10
    assert cert.unsolvable


def test_obstruction_absent_for_flat_metric():
    cert = representation_obstruction(heisenberg3(), heis3_metric(3))
    assert not cert.unsolvable


def test_conforming_shape_satisfies_conditions():
    # every member of the affine family meets the Theorem-level φ conditions
    fam = conforming_phi_family(heisenberg3(), heis3_metric(1))
    nab = levi_civita(heisenberg3(), heis3_metric(1))
    hp = heis3_metric(1)
    rng = random.Random(7)
    for _ in range(20):
        imgs = fam.at([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(fam.n_params)])
        assert all(antisym_part(imgs[a], hp) == nab.gamma[a] for a in range(3))
        sym = [sym_part(m, hp) for m in imgs]
        assert all(sym[a].col(b) == sym[b].col(a) for a in range(3) for b in range(3))


@pytest.mark.parametrize("name", ["h2", "h4", "h5"])
def test_small_center_audit(name):
    assert center(entry(name).algebra).dim == 2


def test_no_abelian_pair_for_small_center():
    # the family sweeps never produce h2, h4 or h5 with both factors abelian
    for x in range(-3, 4):
        for y in range(0, 3):
            name = identify(bicross(family_R3_heis3(x, y)).algebra)
            assert name not in ("h2", "h5")
    for data in family_R3_R3().values():
        assert identify(bicross(data).algebra) not in ("h2", "h4", "h5")


vals = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@settings(max_examples=50, deadline=None)
@given(vals, vals)
def test_offsets_do_not_change_fingerprint(x0, y0):
    for x, y in ((-1, 0), (1, 0), (1, 1)):
        a = bicross(family_R3_heis3(x, y, x0, y0)).algebra
        b = bicross(family_R3_heis3(x, y)).algebra
        assert fingerprint(a) == fingerprint(b)
