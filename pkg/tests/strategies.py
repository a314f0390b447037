"""Hypothesis strategies producing exact random inputs."""

from __future__ import annotations

from hypothesis import assume
from hypothesis import strategies as st

from bornforge.born import HermitianBornData, assemble_from_hermitian
from bornforge.catalog import entry
from bornforge.geometry import BilinearForm
from bornforge.lie import Subspace, abelian, heisenberg3
from bornforge.linalg import Matrix
from bornforge.products import (
    BicrossData,
    Representation,
    family_R3_heis3,
    flat_seed_construction,
    heis3_metric,
)

small = st.integers(-2, 2)
SEEDS = ["rh3", "rr3,0", "r2r2", "r2'", "r4,-1,-1", "d4,1", "d4,2", "d4,1/2", "h4", "h7", "h13"]


@st.composite
def matrices(draw, n: int, m: int | None = None, elems=small) -> Matrix:
    m = n if m is None else m
    return Matrix([[draw(elems) for _ in range(m)] for _ in range(n)])


@st.composite
def invertible(draw, n: int) -> Matrix:
    p = draw(matrices(n))
    assume(p.is_invertible())
    return p


@st.composite
def unitriangular(draw, n: int) -> Matrix:
    """Invertible with determinant 1, keeps denominators small."""
    lower = [[draw(small) if j < i else int(i == j) for j in range(n)] for i in range(n)]
    upper = [[draw(small) if j > i else int(i == j) for j in range(n)] for i in range(n)]
    return Matrix(lower) @ Matrix(upper)


@st.composite
def metrics(draw, n: int) -> BilinearForm:
    a = draw(matrices(n))
    g = a + a.T
    assume(g.is_invertible())
    return BilinearForm(g)


@st.composite
def lie_algebras(draw, max_dim: int = 6):
    """A catalog algebra written in a random unimodular basis."""
    name = draw(st.sampled_from([s for s in SEEDS if entry(s).dim <= max_dim]))
    lie = entry(name).algebra
    return lie.change_basis(draw(unitriangular(lie.dim)))


@st.composite
def nilpotent_triples(draw, n: int = 3) -> tuple[Matrix, Matrix]:
    """Two conjugated strictly upper triangular matrices; their bracket is central."""
    p = draw(unitriangular(n))
    pinv = p.inverse()
    strict = [matrices(n) for _ in range(2)]
    out = []
    for s in strict:
        m = draw(s)
        m = Matrix([[m[i, j] if j > i else 0 for j in range(n)] for i in range(n)])
        out.append(p @ m @ pinv)
    return out[0], out[1]


@st.composite
def semidirect_data(draw) -> BicrossData:
    """R^3 ⋊ g_- with random φ, random h_- and Q; ρ = 0."""
    gp = abelian(3)
    if draw(st.booleans()):
        gm = abelian(3)
        base = draw(matrices(3))
        powers = [Matrix.identity(3), base, base @ base]
        phi = tuple(sum((powers[k].scale(draw(small)) for k in range(3)), Matrix.zeros(3))
                    for _ in range(3))
    else:
        gm = heisenberg3()
        a, b = draw(nilpotent_triples())
        phi = (a, b, a @ b - b @ a)
    h = draw(metrics(3))
    q = draw(invertible(3))
    return BicrossData(gp, gm, h, q, Representation(gm, phi), Representation.zero(gp, 3))


@st.composite
def family_points(draw) -> BicrossData:
    vals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return family_R3_heis3(draw(vals), draw(vals), draw(vals), draw(vals))


@st.composite
def heis3_flat_metric(draw) -> BilinearForm:
    """Pull back the flat Lorentzian metric by a random automorphism of heis3."""
    a, b, c, d, e, f = (draw(small) for _ in range(6))
    assume(a * d - b * c != 0)
    auto = Matrix([[a, b, 0], [c, d, 0], [e, f, a * d - b * c]])
    return heis3_metric(3).pullback(auto)


@st.composite
def flat_seeds(draw) -> BicrossData:
    if draw(st.booleans()):
        gm, h = heisenberg3(), draw(heis3_flat_metric())
    else:
        gm, h = abelian(3), draw(metrics(3))
    q = draw(invertible(3))
    return flat_seed_construction(gm, h, q)


def bicross_data():
    """Random semidirect data mixed with integrable family points and flat seeds."""
    return st.one_of(semidirect_data(), family_points(), flat_seeds())


def transport(born, p):
    """The same structure written in the basis given by the columns of p."""
    pinv = p.inverse()
    n = born.dim
    return assemble_from_hermitian(HermitianBornData(
        born.algebra.change_basis(p), born.h.pullback(p), pinv @ born.J @ p,
        Subspace.span(n, [pinv @ v for v in born.g_plus.vectors]),
        Subspace.span(n, [pinv @ v for v in born.g_minus.vectors])))


@st.composite
def nilpotent_born_six(draw):
    """A six-dimensional nilpotent catalog Born structure in a random basis, or a family member."""
    if draw(st.booleans()):
        from bornforge.products import bicross
        return bicross(draw(family_points())).born
    name = draw(st.sampled_from(["h4", "h7", "h8", "h9", "h10", "h11", "h13"]))
    return transport(entry(name).born_model(), draw(unitriangular(6)))
