"""Randomized property suites, run with an instance counter by the acceptance tests."""

from __future__ import annotations

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from bornforge.born import check_equivalence, check_integrable
from bornforge.exterior import d_matrix
from bornforge.geometry import first_bianchi_holds, is_flat, levi_civita, ricci
from bornforge.lie import nil_step
from bornforge.products import (
    bicross,
    check_integrability_conditions,
    decompose_born,
    decomposition_frame,
    levi_civita_blocks,
)
from strategies import bicross_data, flat_seeds, lie_algebras, metrics, nilpotent_born_six


def d_squared(lie):
    for k in range(lie.dim - 1):
        assert (d_matrix(lie, k + 1) @ d_matrix(lie, k)).is_zero()


def koszul(args):
    lie, h = args
    nab = levi_civita(lie, h)
    assert nab.is_torsion_free() and nab.is_metric(h)


def bianchi(args):
    lie, h = args
    assert first_bianchi_holds(levi_civita(lie, h))


def conditions_vs_product(data):
    prod = bicross(data)
    assert check_integrability_conditions(data).verdict == check_integrable(prod.born).verdict


def blocks_vs_koszul(data):
    prod = bicross(data)
    assert levi_civita_blocks(data).gamma == levi_civita(prod.algebra, prod.born.h).gamma


def round_trip(data):
    born = bicross(data).born
    back = bicross(decompose_born(born))
    assert check_equivalence(back.born, born, decomposition_frame(born))


def ricci_flat_nilpotent(born):
    assert nil_step(born.algebra) is not None
    assert check_integrable(born).verdict
    assert ricci(born.algebra, born.h).gram.is_zero()


def flat_products(data):
    prod = bicross(data)
    assert check_integrability_conditions(data).verdict
    assert is_flat(prod.algebra, prod.born.h)


def _pairs():
    return st.tuples(lie_algebras(max_dim=4), metrics(4))


# name -> (strategy factory, check, instances)
SUITES = {
    "d∘d = 0": (lambda: lie_algebras(), d_squared, 200),
    "Koszul torsion-free and metric": (_pairs, koszul, 200),
    "first Bianchi identity": (_pairs, bianchi, 200),
    "conditions ⟺ product integrability": (bicross_data, conditions_vs_product, 300),
    "block connection = Koszul": (bicross_data, blocks_vs_koszul, 200),
    "decompose/bicross round trip": (bicross_data, round_trip, 200),
    "nilpotent pseudo-Kähler metrics Ricci-flat": (nilpotent_born_six, ricci_flat_nilpotent, 200),
    "flat-seed products h-flat": (flat_seeds, flat_products, 200),
}


def run_suite(name: str) -> int:
    """Run one suite; returns the number of instances checked."""
    factory, check, n = SUITES[name]
    count = 0

    @settings(max_examples=n, deadline=None, derandomize=True, database=None,
              suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
    @given(factory())
    def run(x):
        nonlocal count
        check(x)
        count += 1

    run()
    return count
