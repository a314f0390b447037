"""Bicross and semidirect products carrying Born structures.

Product basis: indices ``0..n-1`` are the basis of g_+, ``n..2n-1`` the basis
of g_-.  With Q = Id the complex structure is the constant block matrix
``[[0, -1], [1, 0]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .born import BornStructure, HermitianBornData, assemble_from_hermitian
from .geometry import (
    BilinearForm,
    Connection,
    antisym_part,
    is_flat,
    is_representation,
    levi_civita,
    nabla_parallel,
    sym_part,
)
from .lie import (
    LieAlgebra,
    Subspace,
    abelian,
    basis_vector,
    heisenberg3,
    is_derivation,
    is_subalgebra,
)
from .linalg import ContractError, Matrix, kernel, to_rational


class NotARepresentationError(ValueError):
    pass


class CompatibilityError(ValueError):
    def __init__(self, witness):
        self.witness = witness
        which, a, b, c = witness
        super().__init__(f"matched-pair identity ({which}) fails at basis triple "
                         f"({a + 1}, {b + 1}, {c + 1})")


class PreconditionError(ValueError):
    """A named precondition of a construction fails."""

    def __init__(self, condition: str):
        self.condition = condition
        super().__init__(condition)


@dataclass(frozen=True)
class Representation:
    source: LieAlgebra
    images: tuple[Matrix, ...]
    validate: bool = field(default=True, compare=False)

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != self.source.dim:
            raise ContractError("one image per source basis vector is required")
        m = imgs[0].rows if imgs else 0
        if any(not x.is_square() or x.rows != m for x in imgs):
            raise ContractError("images must be square matrices of equal size")
        if self.validate and not is_representation(self.source, imgs):
            raise NotARepresentationError("images do not satisfy the homomorphism law")

    @property
    def target_dim(self) -> int:
        return self.images[0].rows

    def of(self, x: Matrix) -> Matrix:
        out = Matrix.zeros(self.target_dim)
        for i, xi in enumerate(x.flat()):
            if xi:
                out = out + self.images[i].scale(xi)
        return out

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.images)

    @classmethod
    def zero(cls, source: LieAlgebra, target_dim: int) -> "Representation":
        return cls(source, tuple(Matrix.zeros(target_dim) for _ in range(source.dim)))


@dataclass(frozen=True)
class BicrossData:
    g_plus: LieAlgebra
    g_minus: LieAlgebra
    h_minus: BilinearForm
    Q: Matrix
    phi: Representation
    rho: Representation

    def __post_init__(self):
        n = self.g_plus.dim
        if self.g_minus.dim != n:
            raise ContractError("factors must have equal dimension")
        if self.h_minus.dim != n or not self.h_minus.is_nondegenerate():
            raise ContractError("h_minus must be a nondegenerate metric on g_minus")
        if self.Q.shape != (n, n) or not self.Q.is_invertible():
            raise ContractError("Q must be an invertible n x n matrix")
        if self.phi.source != self.g_minus or self.phi.target_dim != n:
            raise ContractError("phi must be a representation of g_minus on g_plus")
        if self.rho.source != self.g_plus or self.rho.target_dim != n:
            raise ContractError("rho must be a representation of g_plus on g_minus")

    @property
    def n(self) -> int:
        return self.g_plus.dim

    @property
    def h_plus(self) -> BilinearForm:
        return self.h_minus.pullback(self.Q)


def _vec(n: int, i: int) -> Matrix:
    return basis_vector(n, i)


def check_compatibility(data: BicrossData) -> tuple[bool, tuple | None]:
    """Both matched-pair identities on all basis triples; witness is 0-based."""
    n = data.n
    gp, gm, phi, rho = data.g_plus, data.g_minus, data.phi, data.rho
    for a, b, c in product(range(n), repeat=3):
        xm, xp, yp = _vec(n, a), _vec(n, b), _vec(n, c)
        p = phi.images[a]
        val = (p @ gp.bracket(xp, yp) - gp.bracket(p @ xp, yp) - gp.bracket(xp, p @ yp)
               + phi.of(rho.images[b] @ xm) @ yp - phi.of(rho.images[c] @ xm) @ xp)
        if not val.is_zero():
            return False, ("phi", a, b, c)
    for a, b, c in product(range(n), repeat=3):
        xp, xm, ym = _vec(n, a), _vec(n, b), _vec(n, c)
        r = rho.images[a]
        val = (r @ gm.bracket(xm, ym) - gm.bracket(r @ xm, ym) - gm.bracket(xm, r @ ym)
               + rho.of(phi.images[b] @ xp) @ ym - rho.of(phi.images[c] @ xp) @ xm)
        if not val.is_zero():
            return False, ("rho", a, b, c)
    return True, None


@dataclass(frozen=True)
class BicrossProduct:
    data: BicrossData
    algebra: LieAlgebra
    born: BornStructure

    @property
    def hermitian(self) -> HermitianBornData:
        return self.born.hermitian()


def product_complex_structure(q: Matrix) -> Matrix:
    n = q.rows
    z = Matrix.zeros(n)
    return Matrix.block([[z, -q.inverse()], [q, z]])


def bicross_algebra(data: BicrossData, name: str | None = None) -> LieAlgebra:
    n = data.n
    br: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, vec_plus, vec_minus):
        out = {}
        for k, v in enumerate(vec_plus.flat()):
            if v:
                out[k] = v
        for k, v in enumerate(vec_minus.flat()):
            if v:
                out[n + k] = v
        if out:
            br[(i, j)] = out

    for (i, j), out in data.g_plus.brackets.items():
        br[(i, j)] = dict(out)
    for (i, j), out in data.g_minus.brackets.items():
        br[(n + i, n + j)] = {n + k: v for k, v in out.items()}
    for a in range(n):
        for b in range(n):
            put(a, n + b, -(data.phi.images[b].col(a)), data.rho.images[a].col(b))
    return LieAlgebra(2 * n, br, name=name)


def bicross(data: BicrossData, name: str | None = None) -> BicrossProduct:
    ok, witness = check_compatibility(data)
    if not ok:
        raise CompatibilityError(witness)
    n = data.n
    lie = bicross_algebra(data, name)
    h = BilinearForm(Matrix.block([[data.h_plus.gram, Matrix.zeros(n)],
                                   [Matrix.zeros(n), data.h_minus.gram]]))
    herm = HermitianBornData(lie, h, product_complex_structure(data.Q),
                             Subspace.coordinate(2 * n, range(n)),
                             Subspace.coordinate(2 * n, range(n, 2 * n)))
    return BicrossProduct(data, lie, assemble_from_hermitian(herm))


@dataclass(frozen=True)
class ConditionReport:
    c1: bool
    c2: bool
    c3: bool
    c4: bool

    @property
    def verdict(self) -> bool:
        return self.c1 and self.c2 and self.c3 and self.c4

    def as_dict(self) -> dict[str, bool]:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3, "c4": self.c4, "verdict": self.verdict}


def check_integrability_conditions(data: BicrossData) -> ConditionReport:
    n = data.n
    q, qinv = data.Q, data.Q.inverse()
    hp, hm = data.h_plus, data.h_minus
    nab_m = levi_civita(data.g_minus, hm)
    nab_p = levi_civita(data.g_plus, hp)
    phi, rho = data.phi, data.rho
    c1 = all(antisym_part(phi.images[a], hp) == qinv @ nab_m.gamma[a] @ q for a in range(n))
    c3 = all(antisym_part(rho.images[a], hm) == q @ nab_p.gamma[a] @ qinv for a in range(n))
    phi_s = [sym_part(phi.of(q.col(a)), hp) for a in range(n)]
    rho_s = [sym_part(rho.images[a], hm) for a in range(n)]
    c2 = all(phi_s[a].col(b) == phi_s[b].col(a) for a in range(n) for b in range(n))
    c4 = all(rho_s[a] @ q.col(b) == rho_s[b] @ q.col(a) for a in range(n) for b in range(n))
    return ConditionReport(c1, c2, c3, c4)


def levi_civita_blocks(data: BicrossData) -> Connection:
    """Levi-Civita connection of h_+ ⊕ h_- assembled blockwise from ∇^± and φ, ρ."""
    n = data.n
    hp, hm = data.h_plus, data.h_minus
    gp_inv, gm_inv = hp.gram.inverse(), hm.gram.inverse()
    nab_p = levi_civita(data.g_plus, hp)
    nab_m = levi_civita(data.g_minus, hm)
    phi_s = [sym_part(m, hp) for m in data.phi.images]
    phi_a = [antisym_part(m, hp) for m in data.phi.images]
    rho_s = [sym_part(m, hm) for m in data.rho.images]
    rho_a = [antisym_part(m, hm) for m in data.rho.images]

    def stack(plus: Matrix, minus: Matrix) -> Matrix:
        return Matrix.column(plus.flat() + minus.flat())

    gammas = []
    for a in range(n):  # ∇_{f_a}
        cols = []
        for b in range(n):
            v = Matrix.column([(hp.gram @ phi_s[c])[b, a] for c in range(n)])
            cols.append(stack(nab_p.gamma[a].col(b), gm_inv @ v))
        for b in range(n):
            cols.append(stack(-(phi_s[b].col(a)), rho_a[a].col(b)))
        gammas.append(Matrix.from_columns(cols))
    for a in range(n):  # ∇_{e_a}
        cols = []
        for b in range(n):
            cols.append(stack(phi_a[a].col(b), -(rho_s[b].col(a))))
        for b in range(n):
            v = Matrix.column([(hm.gram @ rho_s[c])[b, a] for c in range(n)])
            cols.append(stack(gp_inv @ v, nab_m.gamma[a].col(b)))
        gammas.append(Matrix.from_columns(cols))
    return Connection(bicross_algebra(data), tuple(gammas))


# -- semidirect products and flat seeds ----------------------------------------

@dataclass(frozen=True)
class SemidirectResult:
    product: BicrossProduct
    abelian_plus: bool
    conditions: ConditionReport

    @property
    def verdict(self) -> bool:
        return self.abelian_plus and self.conditions.c1 and self.conditions.c2


def semidirect_data(g_plus: LieAlgebra, g_minus: LieAlgebra, h_minus: BilinearForm,
                    q: Matrix, phi_images: Sequence[Matrix]) -> BicrossData:
    if not all(is_derivation(g_plus, m) for m in phi_images):
        raise PreconditionError("phi must take values in Der(g_+)")
    phi = Representation(g_minus, tuple(phi_images))
    return BicrossData(g_plus, g_minus, h_minus, q, phi, Representation.zero(g_plus, g_plus.dim))


def semidirect_born(g_plus: LieAlgebra, g_minus: LieAlgebra, h_minus: BilinearForm,
                    q: Matrix, phi_images: Sequence[Matrix]) -> SemidirectResult:
    data = semidirect_data(g_plus, g_minus, h_minus, q, phi_images)
    return SemidirectResult(bicross(data), g_plus.is_abelian(), check_integrability_conditions(data))


def flat_seed_phi(g_minus: LieAlgebra, h_minus: BilinearForm, q: Matrix) -> tuple[Matrix, ...]:
    nab = levi_civita(g_minus, h_minus)
    qinv = q.inverse()
    return tuple(qinv @ m @ q for m in nab.gamma)


def flat_seed_construction(g_minus: LieAlgebra, h_minus: BilinearForm,
                           q: Matrix | None = None) -> BicrossData:
    """R^n ⋊ g_- with φ(X) = Q⁻¹∇⁻_X Q; needs (g_-, h_-) flat."""
    n = g_minus.dim
    q = Matrix.identity(n) if q is None else q
    if not is_flat(g_minus, h_minus):
        raise PreconditionError("flat seed required: (g_-, h_-) is not flat")
    return semidirect_data(abelian(n), g_minus, h_minus, q, flat_seed_phi(g_minus, h_minus, q))


# -- decomposition -----------------------------------------------------------

def decomposition_frame(born: BornStructure) -> Matrix:
    """Columns: the basis of g_+ followed by its image under J."""
    plus = list(born.g_plus.vectors)
    return Matrix.from_columns(plus + [born.J @ v for v in plus])


def decompose_born(born: BornStructure) -> BicrossData:
    """Write an integrable Born structure as a bicross product with Q = Id."""
    lie = born.algebra
    if not (is_subalgebra(lie, born.g_plus) and is_subalgebra(lie, born.g_minus)):
        raise PreconditionError("eigenspaces of A must be subalgebras")
    n = born.dim // 2
    frame = decomposition_frame(born)
    finv = frame.inverse()
    plus = [frame.col(i) for i in range(n)]
    minus = [frame.col(n + i) for i in range(n)]
    gp = lie.restrict(Subspace(lie.dim, tuple(plus)))
    gm = lie.restrict(Subspace(lie.dim, tuple(minus)))

    def coords(v: Matrix) -> tuple[list[Fraction], list[Fraction]]:
        c = (finv @ v).flat()
        return c[:n], c[n:]

    phi_imgs, rho_imgs = [], []
    for b in range(n):  # φ(e_b) f_a = [e_b, f_a]_+
        cols = [coords(lie.bracket(minus[b], plus[a]))[0] for a in range(n)]
        phi_imgs.append(Matrix.from_columns([Matrix.column(c) for c in cols]))
    for a in range(n):  # ρ(f_a) e_b = [f_a, e_b]_-
        cols = [coords(lie.bracket(plus[a], minus[b]))[1] for b in range(n)]
        rho_imgs.append(Matrix.from_columns([Matrix.column(c) for c in cols]))
    pm = Matrix.from_columns(minus)
    h_minus = BilinearForm(pm.T @ born.h.gram @ pm)
    return BicrossData(gp, gm, h_minus, Matrix.identity(n),
                       Representation(gm, tuple(phi_imgs)), Representation(gp, tuple(rho_imgs)))


# -- hyperkähler and hypersymplectic builders ---------------------------------

@dataclass(frozen=True)
class HyperResult:
    product: BicrossProduct
    second: Matrix
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _flat_semidirect(g_minus, h_minus, q):
    data = flat_seed_construction(g_minus, h_minus, q)
    return data, bicross(data)


def hyperkahler_from_flat(g_minus: LieAlgebra, h_minus: BilinearForm, i_minus: Matrix,
                          q: Matrix | None = None) -> HyperResult:
    n = g_minus.dim
    q = Matrix.identity(n) if q is None else q
    one = Matrix.identity(n)
    if i_minus @ i_minus != -one:
        raise PreconditionError("I_-² ≠ −Id")
    if i_minus.T @ h_minus.gram @ i_minus != h_minus.gram:
        raise PreconditionError("h_-(I_-·, I_-·) ≠ h_-")
    if not is_flat(g_minus, h_minus):
        raise PreconditionError("flat seed required: (g_-, h_-) is not flat")
    if not nabla_parallel(levi_civita(g_minus, h_minus), i_minus):
        raise PreconditionError("∇⁻I_- ≠ 0")
    data, prod = _flat_semidirect(g_minus, h_minus, q)
    i_plus = -(q.inverse() @ i_minus @ q)
    big_i = Matrix.block([[i_plus, Matrix.zeros(n)], [Matrix.zeros(n), i_minus]])
    j, h = prod.born.J, prod.born.h.gram
    nab = levi_civita(prod.algebra, h)
    checks = {
        "I² = −Id": big_i @ big_i == -Matrix.identity(2 * n),
        "JI = −IJ": (j @ big_i + big_i @ j).is_zero(),
        "h(J·,J·) = h": j.T @ h @ j == h,
        "h(I·,I·) = h": big_i.T @ h @ big_i == h,
        "∇J = 0": nabla_parallel(nab, j),
        "∇I = 0": nabla_parallel(nab, big_i),
        "I_+ φ = φ I_+": all((i_plus @ m - m @ i_plus).is_zero() for m in data.phi.images),
    }
    return HyperResult(prod, big_i, checks)


def hypersymplectic_from_flat(g_minus: LieAlgebra, h_minus: BilinearForm, e_minus: Matrix,
                              q: Matrix | None = None) -> HyperResult:
    n = g_minus.dim
    q = Matrix.identity(n) if q is None else q
    one = Matrix.identity(n)
    if e_minus @ e_minus != one:
        raise PreconditionError("E_-² ≠ Id")
    if e_minus.T @ h_minus.gram @ e_minus != -h_minus.gram:
        raise PreconditionError("h_-(E_-·, E_-·) ≠ −h_-")
    if not is_flat(g_minus, h_minus):
        raise PreconditionError("flat seed required: (g_-, h_-) is not flat")
    if not nabla_parallel(levi_civita(g_minus, h_minus), e_minus):
        raise PreconditionError("∇⁻E_- ≠ 0")
    _, prod = _flat_semidirect(g_minus, h_minus, q)
    e_plus = -(q.inverse() @ e_minus @ q)
    big_e = Matrix.block([[e_plus, Matrix.zeros(n)], [Matrix.zeros(n), e_minus]])
    lie, j, h = prod.algebra, prod.born.J, prod.born.h.gram
    nab = levi_civita(lie, h)
    size = 2 * n
    e_pos = Subspace(size, tuple(kernel(big_e - Matrix.identity(size))))
    e_neg = Subspace(size, tuple(kernel(big_e + Matrix.identity(size))))
    sympl = big_e.T @ h  # ω_E(X, Y) = h(EX, Y)

    def null(gram, sub):
        return all((x.T @ gram @ y).is_zero() for x in sub.vectors for y in sub.vectors)

    checks = {
        "E² = Id": big_e @ big_e == Matrix.identity(size),
        "JE = −EJ": (j @ big_e + big_e @ j).is_zero(),
        "h(J·,J·) = h": j.T @ h @ j == h,
        "h(E·,E·) = −h": big_e.T @ h @ big_e == -h,
        "∇J = 0": nabla_parallel(nab, j),
        "∇E = 0": nabla_parallel(nab, big_e),
        "E eigenspaces complementary": e_pos.dim == n and e_neg.dim == n,
        "E eigenspaces Lagrangian": null(sympl, e_pos) and null(sympl, e_neg),
        "E eigenspaces subalgebras": is_subalgebra(lie, e_pos) and is_subalgebra(lie, e_neg),
    }
    return HyperResult(prod, big_e, checks)


# -- the six-dimensional families ---------------------------------------------

def heis3_metric(which: int) -> BilinearForm:
    """The three Lorentzian metrics h_1, h_2, h_3 on heis3."""
    grams = {
        1: [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
        2: [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
        3: [[1, 0, 0], [0, -1, 1], [0, 1, 0]],
    }
    return BilinearForm(Matrix(grams[which]))


LORENTZ_R3 = BilinearForm(Matrix.diag([-1, 1, 1]))


def family_R3_heis3(x, y, x0=0, y0=0) -> BicrossData:
    x, y, x0, y0 = (to_rational(v) for v in (x, y, x0, y0))
    z = Matrix.zeros(3)
    phi = (
        Matrix([[0, 0, 0], [0, 0, 0], [0, x, 0]]),
        Matrix([[0, x + 1, 0], [0, 0, 0], [x - 1, x0, 0]]),
        z,
    )
    rho = (
        Matrix([[0, 0, 0], [0, 0, 0], [0, y, 0]]),
        Matrix([[0, y, 0], [0, 0, 0], [y, y0, 0]]),
        z,
    )
    gm, gp = heisenberg3(), abelian(3)
    return BicrossData(gp, gm, heis3_metric(3), Matrix.identity(3),
                       Representation(gm, phi), Representation(gp, rho))


def family_R3_R3() -> dict[str, BicrossData]:
    gp, gm = abelian(3), abelian(3)
    n1 = Matrix([[1, 1, 0], [-1, -1, 0], [0, 0, 0]])
    first = (n1, n1, Matrix.zeros(3))
    m1 = Matrix([[0, 0, 1], [0, 0, 1], [-1, 1, 0]])
    second = (m1, -m1, Matrix([[1, -1, 0], [1, -1, 0], [0, 0, 0]]))
    out = {}
    for name, imgs in (("h8", first), ("h9", second)):
        out[name] = BicrossData(gp, gm, LORENTZ_R3, Matrix.identity(3),
                                Representation(gm, imgs), Representation.zero(gp, 3))
    return out


# -- the representation obstruction on heis3 ---------------------------------

@dataclass(frozen=True)
class AffineFamily:
    """``images(t) = base + sum t_i directions[i]`` (one matrix per source basis vector)."""

    base: tuple[Matrix, ...]
    directions: tuple[tuple[Matrix, ...], ...]

    @property
    def n_params(self) -> int:
        return len(self.directions)

    def at(self, params: Sequence) -> tuple[Matrix, ...]:
        out = list(self.base)
        for t, d in zip(params, self.directions):
            t = to_rational(t)
            out = [o + m.scale(t) for o, m in zip(out, d)]
        return tuple(out)


def _phi_condition_values(images: Sequence[Matrix], nab: Connection, hp: BilinearForm,
                          q: Matrix) -> list[Fraction]:
    n = q.rows
    qinv = q.inverse()
    vals = []
    for a in range(n):
        vals += (antisym_part(images[a], hp) - qinv @ nab.gamma[a] @ q).flat()
    comb = []
    for a in range(n):
        m = Matrix.zeros(n)
        for k, c in enumerate(q.col(a).flat()):
            if c:
                m = m + images[k].scale(c)
        comb.append(sym_part(m, hp))
    for a in range(n):
        for b in range(a + 1, n):
            vals += (comb[a].col(b) - comb[b].col(a)).flat()
    return vals


def conforming_phi_family(g_minus: LieAlgebra, h_minus: BilinearForm,
                          q: Matrix | None = None) -> AffineFamily | None:
    """All φ (as raw matrices) meeting the two φ-conditions of the integrability theorem.

    The conditions are affine in the entries of φ, so the solution set is an
    affine space; None if it is empty.
    """
    from .linalg import solve_linear

    n = g_minus.dim
    q = Matrix.identity(n) if q is None else q
    hp = h_minus.pullback(q)
    nab = levi_civita(g_minus, h_minus)
    size = n * n * n

    def unflatten(p: Sequence) -> list[Matrix]:
        return [Matrix([list(p[k * n * n + r * n: k * n * n + (r + 1) * n]) for r in range(n)])
                for k in range(n)]

    zero = [Fraction(0)] * size
    const = _phi_condition_values(unflatten(zero), nab, hp, q)
    cols = []
    for i in range(size):
        p = list(zero)
        p[i] = Fraction(1)
        v = _phi_condition_values(unflatten(p), nab, hp, q)
        cols.append(Matrix.column([a - b for a, b in zip(v, const)]))
    lin = Matrix.from_columns(cols)
    sol = solve_linear(lin, Matrix.column([-c for c in const]))
    if sol is None:
        return None
    base = tuple(unflatten(sol.flat()))
    dirs = tuple(tuple(unflatten(k.flat())) for k in kernel(lin))
    return AffineFamily(base, dirs)


@dataclass(frozen=True)
class ObstructionCertificate:
    n_params: int
    equations: int
    groebner_basis: tuple[str, ...]

    @property
    def unsolvable(self) -> bool:
        return self.groebner_basis == ("1",)


def representation_obstruction(g_minus: LieAlgebra, h_minus: BilinearForm,
                               q: Matrix | None = None) -> ObstructionCertificate:
    """Groebner basis of the homomorphism law restricted to the conforming φ family.

    A reduced basis equal to {1} certifies that no complex (hence no real)
    parameter value gives a representation.
    """
    import sympy

    fam = conforming_phi_family(g_minus, h_minus, q)
    if fam is None:
        return ObstructionCertificate(0, 0, ("1",))
    n = g_minus.dim
    ts = sympy.symbols(f"t1:{fam.n_params + 1}")

    def sym(m: Matrix):
        return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.flat()])

    phis = []
    for k in range(n):
        m = sym(fam.base[k])
        for t, d in zip(ts, fam.directions):
            m = m + t * sym(d[k])
        phis.append(m)
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = phis[i] * phis[j] - phis[j] * phis[i]
            for k in range(n):
                c = g_minus.c(i, j, k)
                if c:
                    lhs = lhs - sympy.Rational(c.numerator, c.denominator) * phis[k]
            eqs += [sympy.expand(e) for e in lhs if sympy.expand(e) != 0]
    if not eqs:
        return ObstructionCertificate(fam.n_params, 0, ())
    if not ts:
        basis = ("1",) if any(e != 0 for e in eqs) else ()
        return ObstructionCertificate(0, len(eqs), basis)
    gb = sympy.groebner(eqs, *ts, order="grevlex", domain="QQ")
    return ObstructionCertificate(fam.n_params, len(eqs), tuple(str(e) for e in gb.exprs))
